#pragma once

#include <complex>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "semiwig/quadrature.hpp"
#include "semiwig/stationary_phase.hpp"

namespace semiwig {

struct SemiclassicalParams {
  double eps = 1.0;
  int n = 0;
  int m = 0;
  void validate() const;
};

inline double energy(int n, double eps) { return (n + 0.5) * eps; }

double eigenvalue(const SemiclassicalParams& p);

// Normalized v_n^eps(x).
double exact_eigenfunction(const SemiclassicalParams& p, double x);

// v_0..v_nmax at one x in a single recurrence.
std::vector<double> exact_eigenfunctions(int nmax, double eps, double x);

// int_{sqrt(2E)}^{x} sqrt(2E - t^2) dt, closed form.
double wkb_action(const SemiclassicalParams& p, double x);

enum class WkbRegion { left_decay, oscillatory, right_decay, turning_band };
const char* wkb_region_name(WkbRegion r);

class WkbEigenfunction {
 public:
  WkbEigenfunction(int n, double eps);

  int n() const { return n_; }
  double eps() const { return eps_; }
  double energy() const { return energy_; }
  std::pair<double, double> turning_points() const { return {-xt_, xt_}; }
  double band() const { return band_; }

  WkbRegion region(double x) const;
  // inside amplitude (2/pi)^{1/2} (2E - x^2)^{-1/4}
  double amplitude(double x) const;
  double phase(double x) const;
  // throws Errc::turning_band inside an exclusion band
  double value(double x) const;
  // A+ e^{iS/eps}, A- e^{-iS/eps}; interior only
  std::pair<cplx, cplx> two_phase(double x) const;

 private:
  int n_;
  double eps_, energy_, xt_, band_;
};

struct WellPotential {
  std::function<double(double)> v;
  std::function<double(double)> dv;
  std::string description;
  // any point inside the well, used to start the turning-point search
  double center = 0.0;
};

std::pair<double, double> turning_points(const WellPotential& w, double energy);

// int_{x1}^{x2} sqrt(2(E - V)) dx
double action_integral(const WellPotential& w, double energy);

double bohr_sommerfeld(const WellPotential& w, int n, double eps, Interval bracket);

// (u0, v_n) for n = 0..nmax by quadrature on [lo, hi]
std::vector<cplx> project_eigenfunctions(const std::function<cplx(double)>& u0, double eps,
                                         int nmax, Interval support);

// smallest N with sum_{n<=N} |c_n|^2 >= (1 - tail) * norm2
int default_truncation(const std::vector<cplx>& coeffs, double norm2, double tail = 1e-6);

cplx schrodinger_series(const std::vector<cplx>& coeffs, double eps, double x, double t);

}  // namespace semiwig
