#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "semiwig/quadrature.hpp"
#include "semiwig/stationary_phase.hpp"
#include "semiwig/wigner.hpp"

namespace semiwig {

// u0 = a0(x) e^{i s0(x)/eps}, a0 supported in `support`
struct InitialDatum {
  std::function<double(double)> a0;
  Phase1D s0;
  Interval support{-1, 1};
  double eps = 0.1;
  // checks s0 derivatives against finite differences on the support
  void validate() const;
  cplx operator()(double x) const;
  double norm2() const;
};

// constant phase 0 with derivatives, and a few standard phases
Phase1D phase_quadratic(double sign);
Phase1D phase_cubic();  // -x^3/3
Phase1D phase_polynomial(std::vector<double> coeffs);  // sum c_k x^k, degree <= 5

enum class Provenance { exact_quadrature, closed_form, airy_approximated };
const char* provenance_name(Provenance p);

struct SpectralSolution {
  double eps = 0.1;
  int n_max = 0;
  std::vector<cplx> coeffs;  // (n_max+1)^2, row n, column m
  std::vector<double> eigenvalues;
  std::vector<Provenance> provenance;

  cplx c(int n, int m) const { return coeffs[static_cast<std::size_t>(n) * (n_max + 1) + m]; }
  cplx& c(int n, int m) { return coeffs[static_cast<std::size_t>(n) * (n_max + 1) + m]; }
  double trace() const;
  double hermitian_defect() const;
  static SpectralSolution from_amplitudes(const std::vector<cplx>& a, double eps);
};

inline constexpr double kTruncationTail = 1e-6;

// n_max < 0 picks the default truncation
SpectralSolution coefficients_exact(const InitialDatum& d, int n_max = -1);

// diagonal coefficients for s0 = +-x^2/2
std::vector<double> coefficients_quadratic_phase(const InitialDatum& d, int n_max);
double coefficient_quadratic_one(int n, double eps);
double coefficient_quadratic_gaussian(int n, double eps);

// diagonal coefficients for s0''' != 0 from the stationary set
std::vector<double> coefficients_cubic_phase(const InitialDatum& d, int n_max);
double coefficient_cubic_phase(const InitialDatum& d, int n);
// roots of s0'(x)^2 + x^2 = 2E_n in the support
std::vector<double> stationary_roots(const InitialDatum& d, int n);

enum class Backend { exact_laguerre, airy_approx, hybrid };
const char* backend_name(Backend b);
Backend parse_backend(const std::string& s);

struct FieldReport {
  std::vector<std::string> substituted;  // modes the hybrid backend took from Laguerre
};

// W_nm value from a backend at one point
cplx backend_wigner(Backend b, int n, int m, double eps, double x, double p);

cplx evolve_point(const SpectralSolution& s, Backend b, double x, double p, double t);
ComplexField evolve(const SpectralSolution& s, Backend b, const PhaseSpaceGrid& g, double t,
                    FieldReport* report = nullptr);

struct SplitField {
  ComplexField coherent, incoherent;
};
SplitField split(const SpectralSolution& s, Backend b, const PhaseSpaceGrid& g, double t);

struct AmplitudeDecomposition {
  std::vector<double> x, coherent, incoherent, total;
};
// exact: closed marginals v_n v_m; airy: Airy^2 sum plus p-quadrature
AmplitudeDecomposition amplitude(const SpectralSolution& s, Backend b, const std::vector<double>& xs,
                                 double t);
// closed form of the incoherent Airy intensity at x = 0
double incoherent_at_origin(const SpectralSolution& s, double t);
double coherent_airy(const SpectralSolution& s, double x);

using FieldSampler = std::function<double(double x, double p, double t)>;

// grid L2 norm of the Wigner-equation residual for polynomial V = sum v_k x^k
double liouville_residual(const FieldSampler& w, const PhaseSpaceGrid& g, double t, double h,
                          const std::vector<double>& potential, double eps);

}  // namespace semiwig
