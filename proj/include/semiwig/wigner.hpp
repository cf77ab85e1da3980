#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "semiwig/quadrature.hpp"

namespace semiwig {

struct PhaseSpaceGrid {
  double x_min = -1, x_max = 1, p_min = -1, p_max = 1;
  int nx = 2, np = 2;

  void validate() const;
  double dx() const { return (x_max - x_min) / (nx - 1); }
  double dp() const { return (p_max - p_min) / (np - 1); }
  double x(int i) const { return x_min + i * dx(); }
  double p(int j) const { return p_min + j * dp(); }
  // square grid [-L, L]^2 large enough for modes up to nmax
  static PhaseSpaceGrid covering(int nmax, double eps, int nx, int np, double margin = 0.0);
  bool covers(int nmax, double eps) const;
};

class ComplexField {
 public:
  explicit ComplexField(PhaseSpaceGrid g);
  const PhaseSpaceGrid& grid() const { return grid_; }
  cplx& at(int i, int j) { return values_[static_cast<std::size_t>(i) * grid_.np + j]; }
  cplx at(int i, int j) const { return values_[static_cast<std::size_t>(i) * grid_.np + j]; }
  const std::vector<cplx>& values() const { return values_; }
  std::vector<cplx>& values() { return values_; }
  double max_abs() const;
  double max_imag() const;
  // throws if any value is not finite
  void check_finite() const;

 private:
  PhaseSpaceGrid grid_;
  std::vector<cplx> values_;
};

// trapezoid inner product sum f conj(g) dx dp
cplx inner(const ComplexField& f, const ComplexField& g);
double linf_distance(const ComplexField& f, const ComplexField& g);

// |f(x)|, |g(x)| negligible for |x| > radius; momentum bounds the local
// wavenumber times eps of either function
struct DecayCertificate {
  double radius;
  double momentum;
};

// (2 pi eps)^{-1} int e^{-ipy/eps} f(x+y/2) conj(g(x-y/2)) dy
cplx wigner_point(const std::function<cplx(double)>& f, const std::function<cplx(double)>& g,
                  double eps, double x, double p, const DecayCertificate& cert);

ComplexField wigner_transform(const std::function<cplx(double)>& f,
                              const std::function<cplx(double)>& g, double eps,
                              const PhaseSpaceGrid& grid, std::optional<DecayCertificate> cert);

struct EigencurveGeometry {
  int n = 0, m = 0;
  double eps = 1;
  double e_n = 0, e_m = 0;
  double r_nm = 0, rho_nm = 0;
  double big_e = 0, small_e = 0;  // (E_n + E_m)/2, (E_n - E_m)/2
  static EigencurveGeometry make(int n, int m, double eps);
};

// Laguerre closed form of W[v_n, v_m]
cplx exact_wigner_eigenfunction(int n, int m, double eps, double x, double p);
ComplexField exact_wigner_field(int n, int m, double eps, const PhaseSpaceGrid& grid);

inline constexpr int kAiryNmin = 10;

double airy_diagonal(const EigencurveGeometry& g, double x, double p, bool allow_low = false);
cplx airy_offdiagonal(const EigencurveGeometry& g, double x, double p, bool allow_low = false);

struct Phase1D {
  std::function<double(double)> s, ds, d2s, d3s;
};

inline constexpr double kS3Min = 1e-8;

double berry_semiclassical(const Phase1D& s0, const std::function<double(double)>& a0, double eps,
                           double x, double p);

enum class DiagRegion { meniscus, dual_interior, exterior, on_curve };
const char* diag_region_name(DiagRegion r);

struct DiagStationary {
  double sigma0;
  DiagRegion region;
};
DiagStationary stationary_geometry_diag(const EigencurveGeometry& g, double x, double p);

enum class OffdiagRegion { ring, inner_disk, inner_boundary, on_outer_curve, exterior };
const char* offdiag_region_name(OffdiagRegion r);

struct OffdiagStationary {
  double sigma1, sigma2;  // real parts
  double imag;            // |imaginary part| when complex
  bool complex;
  OffdiagRegion region;
};
OffdiagStationary stationary_geometry_offdiag(const EigencurveGeometry& g, double x, double p);

// int int e^{-i k theta} delta(x^2+p^2 - c) test(x,p) dx dp
cplx classical_limit_eigenfunction(double c, int k,
                                   const std::function<double(double, double)>& test);

struct Marginals {
  std::vector<cplx> density, flux;
  cplx total;
};
Marginals marginals(const ComplexField& field);

}  // namespace semiwig
