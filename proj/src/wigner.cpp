#include "semiwig/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "semiwig/error.hpp"
#include "semiwig/oscillator.hpp"
#include "semiwig/parallel.hpp"
#include "semiwig/specfun.hpp"

namespace semiwig {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr cplx kI(0.0, 1.0);
}  // namespace

void PhaseSpaceGrid::validate() const {
  if (!(x_max > x_min) || !(p_max > p_min)) throw Error(Errc::domain, "grid axes must increase");
  if (nx < 2 || np < 2) throw Error(Errc::domain, "grid needs at least two points per axis");
}

PhaseSpaceGrid PhaseSpaceGrid::covering(int nmax, double eps, int nx, int np, double margin) {
  double l = std::sqrt(2.0 * energy(nmax, eps)) + 4.0 * std::pow(eps, 2.0 / 3.0) + margin;
  return {-l, l, -l, l, nx, np};
}

bool PhaseSpaceGrid::covers(int nmax, double eps) const {
  double need = std::sqrt(2.0 * energy(nmax, eps)) + 4.0 * std::pow(eps, 2.0 / 3.0);
  return -x_min >= need && x_max >= need && -p_min >= need && p_max >= need;
}

ComplexField::ComplexField(PhaseSpaceGrid g) : grid_(g) {
  grid_.validate();
  values_.assign(static_cast<std::size_t>(g.nx) * g.np, 0.0);
}

double ComplexField::max_abs() const {
  double m = 0.0;
  for (const cplx& v : values_) m = std::max(m, std::abs(v));
  return m;
}

double ComplexField::max_imag() const {
  double m = 0.0;
  for (const cplx& v : values_) m = std::max(m, std::fabs(v.imag()));
  return m;
}

void ComplexField::check_finite() const {
  for (const cplx& v : values_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw Error(Errc::domain, "field holds a non-finite value");
}

namespace {
double trap_weight(int i, int n) { return (i == 0 || i == n - 1) ? 0.5 : 1.0; }
}  // namespace

cplx inner(const ComplexField& f, const ComplexField& g) {
  const PhaseSpaceGrid& a = f.grid();
  cplx s = 0.0;
  for (int i = 0; i < a.nx; ++i)
    for (int j = 0; j < a.np; ++j)
      s += trap_weight(i, a.nx) * trap_weight(j, a.np) * f.at(i, j) * std::conj(g.at(i, j));
  return s * a.dx() * a.dp();
}

double linf_distance(const ComplexField& f, const ComplexField& g) {
  double m = 0.0;
  for (std::size_t k = 0; k < f.values().size(); ++k)
    m = std::max(m, std::abs(f.values()[k] - g.values()[k]));
  return m;
}

cplx wigner_point(const std::function<cplx(double)>& f, const std::function<cplx(double)>& g,
                  double eps, double x, double p, const DecayCertificate& cert) {
  double half = cert.radius - std::fabs(x);
  if (half <= 0.0) return 0.0;
  double ymax = 2.0 * half;
  auto integrand = [&](double y) {
    return std::exp(kI * (-p * y / eps)) * f(x + 0.5 * y) * std::conj(g(x - 0.5 * y));
  };
  double freq = (std::fabs(p) + cert.momentum) / eps;
  QuadOptions q;
  q.abs_tol = 1e-12;
  cplx v = integrate_oscillatory(integrand, -ymax, ymax, [&](double) { return freq; }, q).value;
  return v / (2.0 * kPi * eps);
}

ComplexField wigner_transform(const std::function<cplx(double)>& f,
                              const std::function<cplx(double)>& g, double eps,
                              const PhaseSpaceGrid& grid, std::optional<DecayCertificate> cert) {
  if (!cert || !(cert->radius > 0.0))
    throw Error(Errc::refused, "wigner_transform needs a decay certificate");
  ComplexField out(grid);
  parallel_for(grid.nx, [&](int i) {
    for (int j = 0; j < grid.np; ++j) out.at(i, j) = wigner_point(f, g, eps, grid.x(i), grid.p(j), *cert);
  });
  return out;
}

EigencurveGeometry EigencurveGeometry::make(int n, int m, double eps) {
  SemiclassicalParams{eps, n, m}.validate();
  EigencurveGeometry g;
  g.n = n;
  g.m = m;
  g.eps = eps;
  g.e_n = energy(n, eps);
  g.e_m = energy(m, eps);
  double a = std::sqrt(2.0 * g.e_n), b = std::sqrt(2.0 * g.e_m);
  g.r_nm = 0.5 * (a + b);
  g.rho_nm = 0.5 * std::fabs(a - b);
  g.big_e = 0.5 * (g.e_n + g.e_m);
  g.small_e = 0.5 * (g.e_n - g.e_m);
  return g;
}

cplx exact_wigner_eigenfunction(int n, int m, double eps, double x, double p) {
  if (n < m) return std::conj(exact_wigner_eigenfunction(m, n, eps, x, p));
  int k = n - m;
  double r2 = x * x + p * p;
  double u = r2 / eps;
  if (u > 2.0 * n + 200.0) return 0.0;
  if (k > 0 && r2 == 0.0) return 0.0;
  double lp = -std::log(kPi * eps) + 0.5 * k * std::log(2.0) +
              0.5 * (log_factorial(m) - log_factorial(n)) - u;
  if (k > 0) lp += 0.5 * k * std::log(u);
  double lag = laguerre(m, static_cast<double>(k), 2.0 * u);
  double mag = std::exp(lp) * lag * ((m % 2 == 0) ? 1.0 : -1.0);
  if (k == 0) return mag;
  // ((x - ip)/|x - ip|)^k
  double th = std::atan2(p, x);
  return mag * std::exp(cplx(0.0, -k * th));
}

ComplexField exact_wigner_field(int n, int m, double eps, const PhaseSpaceGrid& grid) {
  ComplexField out(grid);
  parallel_for(grid.nx, [&](int i) {
    for (int j = 0; j < grid.np; ++j) out.at(i, j) = exact_wigner_eigenfunction(n, m, eps, grid.x(i), grid.p(j));
  });
  return out;
}

double airy_diagonal(const EigencurveGeometry& g, double x, double p, bool allow_low) {
  if (g.n < kAiryNmin && !allow_low) throw Error(Errc::capability, "airy_diagonal: n below asymptotic regime");
  double e2 = 2.0 * g.e_n;
  double w = std::cbrt(g.eps * g.eps) * std::cbrt(e2);
  return airy((x * x + p * p - e2) / w).ai / (kPi * w);
}

cplx airy_offdiagonal(const EigencurveGeometry& g, double x, double p, bool allow_low) {
  if (g.n == g.m) throw Error(Errc::domain, "airy_offdiagonal: needs n != m");
  if ((g.n < kAiryNmin || g.m < kAiryNmin) && !allow_low)
    throw Error(Errc::capability, "airy_offdiagonal: modes below asymptotic regime");
  if (x == 0.0 && p == 0.0) throw Error(Errc::domain, "airy_offdiagonal: angle undefined at origin");
  double r = g.r_nm, rho = g.rho_nm;
  double c = std::cbrt(r * r - rho * rho);
  double r43 = std::pow(r, 4.0 / 3.0);
  double e23 = std::cbrt(g.eps * g.eps);
  double scale = e23 * r43 / c;
  double th = std::atan2(p, x);
  double amp = airy((x * x + p * p - r * r) / scale).ai / (kPi * e23 * r43) * c;
  return amp * std::exp(cplx(0.0, -(g.n - g.m) * th));
}

double berry_semiclassical(const Phase1D& s0, const std::function<double(double)>& a0, double eps,
                           double x, double p) {
  double s3 = s0.d3s(x);
  if (std::fabs(s3) < kS3Min) throw Error(Errc::flat_phase, "berry_semiclassical: S''' vanishes");
  double k = std::cbrt(4.0) / std::cbrt(eps * eps);
  double a = a0(x);
  return k * std::cbrt(2.0 / std::fabs(s3)) * a * a * airy(-k * std::cbrt(2.0 / s3) * (p - s0.ds(x))).ai;
}

const char* diag_region_name(DiagRegion r) {
  switch (r) {
    case DiagRegion::meniscus: return "meniscus";
    case DiagRegion::dual_interior: return "dual-interior";
    case DiagRegion::exterior: return "exterior";
    case DiagRegion::on_curve: return "on-curve";
  }
  return "";
}

DiagStationary stationary_geometry_diag(const EigencurveGeometry& g, double x, double p) {
  double r2 = x * x + p * p;
  if (r2 == 0.0) throw Error(Errc::domain, "stationary_geometry_diag: origin");
  double e2 = 2.0 * g.e_n;
  DiagStationary out;
  out.sigma0 = std::fabs(p) / std::sqrt(r2) * std::sqrt(std::fabs(e2 - r2));
  double c = std::sqrt(g.e_n / 2.0);
  if (std::fabs(r2 - e2) <= 1e-10 * e2)
    out.region = DiagRegion::on_curve;
  else if (r2 > e2)
    out.region = DiagRegion::exterior;
  else if (p * p + (x - c) * (x - c) < c * c || p * p + (x + c) * (x + c) < c * c)
    out.region = DiagRegion::dual_interior;
  else
    out.region = DiagRegion::meniscus;
  return out;
}

const char* offdiag_region_name(OffdiagRegion r) {
  switch (r) {
    case OffdiagRegion::ring: return "ring";
    case OffdiagRegion::inner_disk: return "inner-disk";
    case OffdiagRegion::inner_boundary: return "inner-boundary";
    case OffdiagRegion::on_outer_curve: return "on-outer-curve";
    case OffdiagRegion::exterior: return "exterior";
  }
  return "";
}

OffdiagStationary stationary_geometry_offdiag(const EigencurveGeometry& g, double x, double p) {
  if (g.n == g.m) throw Error(Errc::domain, "stationary_geometry_offdiag: needs n != m");
  double r2 = x * x + p * p;
  if (r2 == 0.0) throw Error(Errc::domain, "stationary_geometry_offdiag: origin");
  double disc = r2 * (2.0 * g.big_e - r2) - g.small_e * g.small_e;
  double centre = x * g.small_e / r2;
  double tol = 1e-10 * (g.r_nm * g.r_nm);
  OffdiagStationary out{};
  double R2 = g.r_nm * g.r_nm, rho2 = g.rho_nm * g.rho_nm;
  if (std::fabs(r2 - R2) <= tol) {
    out.region = OffdiagRegion::on_outer_curve;
    out.sigma1 = out.sigma2 = centre;
    out.complex = false;
    return out;
  }
  if (std::fabs(r2 - rho2) <= tol) {
    out.region = OffdiagRegion::inner_boundary;
    out.sigma1 = out.sigma2 = centre;
    out.complex = false;
    return out;
  }
  double w = std::fabs(p) / r2 * std::sqrt(std::fabs(disc));
  if (disc >= 0.0) {
    out.region = OffdiagRegion::ring;
    out.complex = false;
    out.sigma1 = centre + w;
    out.sigma2 = centre - w;
  } else {
    out.region = r2 > R2 ? OffdiagRegion::exterior : OffdiagRegion::inner_disk;
    out.complex = true;
    out.sigma1 = out.sigma2 = centre;
    out.imag = w;
  }
  return out;
}

cplx classical_limit_eigenfunction(double c, int k,
                                   const std::function<double(double, double)>& test) {
  if (!(c > 0.0)) throw Error(Errc::domain, "classical_limit: circle needs positive radius");
  // periodic trapezoid is spectrally accurate for smooth tests
  const int n = 4096;
  double r = std::sqrt(c);
  cplx s = 0.0;
  for (int i = 0; i < n; ++i) {
    double th = 2.0 * kPi * i / n;
    s += std::exp(cplx(0.0, -k * th)) * test(r * std::cos(th), r * std::sin(th));
  }
  return 0.5 * s * (2.0 * kPi / n);
}

Marginals marginals(const ComplexField& field) {
  const PhaseSpaceGrid& g = field.grid();
  double peak = field.max_abs();
  double edge = 0.0;
  for (int i = 0; i < g.nx; ++i)
    edge = std::max({edge, std::abs(field.at(i, 0)), std::abs(field.at(i, g.np - 1))});
  if (edge > 1e-8 * peak) throw Error(Errc::grid_too_small, "field does not decay at the p-boundary");
  Marginals m;
  m.density.assign(g.nx, 0.0);
  m.flux.assign(g.nx, 0.0);
  m.total = 0.0;
  for (int i = 0; i < g.nx; ++i) {
    cplx d = 0.0, f = 0.0;
    for (int j = 0; j < g.np; ++j) {
      double w = trap_weight(j, g.np) * g.dp();
      d += w * field.at(i, j);
      f += w * g.p(j) * field.at(i, j);
    }
    m.density[i] = d;
    m.flux[i] = f;
    m.total += trap_weight(i, g.nx) * g.dx() * d;
  }
  return m;
}

}  // namespace semiwig
