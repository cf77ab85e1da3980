#include "semiwig/solver.hpp"

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

cplx rotor(int n, int m, double eps, double t) {
  return std::exp(kI * (-(energy(n, eps) - energy(m, eps)) * t / eps));
}
}  // namespace

void InitialDatum::validate() const {
  if (!(eps > 0 && eps <= 1)) throw Error(Errc::domain, "datum eps must lie in (0, 1]");
  if (!(support.hi > support.lo)) throw Error(Errc::domain, "datum support is empty");
  if (!a0 || !s0.s || !s0.ds || !s0.d2s || !s0.d3s) throw Error(Errc::domain, "datum callables missing");
  double h = 1e-4;
  for (int i = 0; i < 17; ++i) {
    double x = support.lo + (support.hi - support.lo) * (i + 0.5) / 17;
    double scale = 1.0 + std::fabs(s0.s(x));
    auto bad = [&](double an, double fd) { return std::fabs(an - fd) > 1e-5 * (scale + std::fabs(an)); };
    if (bad(s0.ds(x), (s0.s(x + h) - s0.s(x - h)) / (2 * h)) ||
        bad(s0.d2s(x), (s0.ds(x + h) - s0.ds(x - h)) / (2 * h)) ||
        bad(s0.d3s(x), (s0.d2s(x + h) - s0.d2s(x - h)) / (2 * h)))
      throw Error(Errc::domain, "datum phase derivatives disagree with finite differences");
    if (!std::isfinite(a0(x))) throw Error(Errc::domain, "datum amplitude is not finite");
  }
}

cplx InitialDatum::operator()(double x) const {
  if (x < support.lo || x > support.hi) return 0.0;
  double a = a0(x);
  if (a == 0.0) return 0.0;
  return a * std::exp(kI * (s0.s(x) / eps));
}

double InitialDatum::norm2() const {
  return composite_gl([&](double x) { double a = a0(x); return a * a; }, support.lo, support.hi, 64);
}

Phase1D phase_quadratic(double sign) {
  return {[sign](double x) { return 0.5 * sign * x * x; }, [sign](double x) { return sign * x; },
          [sign](double) { return sign; }, [](double) { return 0.0; }};
}

Phase1D phase_cubic() {
  return {[](double x) { return -x * x * x / 3.0; }, [](double x) { return -x * x; },
          [](double x) { return -2.0 * x; }, [](double) { return -2.0; }};
}

Phase1D phase_polynomial(std::vector<double> c) {
  if (c.size() > 6) throw Error(Errc::config, "phase polynomial degree above 5");
  auto deriv = [](const std::vector<double>& a) {
    std::vector<double> d;
    for (std::size_t k = 1; k < a.size(); ++k) d.push_back(k * a[k]);
    return d;
  };
  auto eval = [](std::vector<double> a) {
    return [a](double x) {
      double s = 0.0;
      for (std::size_t k = a.size(); k-- > 0;) s = s * x + a[k];
      return s;
    };
  };
  auto d1 = deriv(c), d2 = deriv(d1), d3 = deriv(d2);
  return {eval(c), eval(d1), eval(d2), eval(d3)};
}

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::exact_quadrature: return "exact-quadrature";
    case Provenance::closed_form: return "closed-form";
    case Provenance::airy_approximated: return "airy-approximated";
  }
  return "";
}

double SpectralSolution::trace() const {
  double s = 0.0;
  for (int n = 0; n <= n_max; ++n) s += c(n, n).real();
  return s;
}

double SpectralSolution::hermitian_defect() const {
  double d = 0.0;
  for (int n = 0; n <= n_max; ++n)
    for (int m = 0; m <= n_max; ++m) d = std::max(d, std::abs(c(n, m) - std::conj(c(m, n))));
  return d;
}

SpectralSolution SpectralSolution::from_amplitudes(const std::vector<cplx>& a, double eps) {
  SpectralSolution s;
  s.eps = eps;
  s.n_max = static_cast<int>(a.size()) - 1;
  int k = s.n_max + 1;
  s.coeffs.assign(static_cast<std::size_t>(k) * k, 0.0);
  s.provenance.assign(static_cast<std::size_t>(k) * k, Provenance::exact_quadrature);
  for (int n = 0; n < k; ++n) {
    s.eigenvalues.push_back(energy(n, eps));
    for (int m = 0; m < k; ++m) s.c(n, m) = a[n] * std::conj(a[m]);
  }
  return s;
}

SpectralSolution coefficients_exact(const InitialDatum& d, int n_max) {
  d.validate();
  if (n_max > kNmax) throw Error(Errc::capability, "coefficients_exact: n_max above 200");
  std::function<cplx(double)> u = [&](double x) { return d(x); };
  if (n_max >= 0) return SpectralSolution::from_amplitudes(project_eigenfunctions(u, d.eps, n_max, d.support), d.eps);
  std::vector<cplx> a = project_eigenfunctions(u, d.eps, kNmax, d.support);
  int nt = default_truncation(a, d.norm2(), kTruncationTail);
  a.resize(nt + 1);
  return SpectralSolution::from_amplitudes(a, d.eps);
}

std::vector<double> coefficients_quadratic_phase(const InitialDatum& d, int n_max) {
  for (int i = 0; i <= 8; ++i) {
    double x = d.support.lo + (d.support.hi - d.support.lo) * i / 8.0;
    if (std::fabs(d.s0.d3s(x)) > 1e-12 || std::fabs(std::fabs(d.s0.d2s(x)) - 1.0) > 1e-12)
      throw Error(Errc::wrong_branch, "quadratic-phase coefficients need s0 = +-x^2/2");
  }
  std::vector<double> c(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    double e = energy(n, d.eps), a = std::sqrt(e);
    auto amp2 = [&](double x) {
      if (x < d.support.lo || x > d.support.hi) return 0.0;
      double v = d.a0(x);
      return v * v;
    };
    c[n] = d.eps / (2.0 * a) * (amp2(a) + amp2(-a));
  }
  return c;
}

double coefficient_quadratic_one(int n, double eps) {
  double e2 = 2.0 * energy(n, eps);
  double ai = airy(-std::cbrt(e2 * e2) / (std::cbrt(4.0) * std::cbrt(eps * eps))).ai;
  return std::pow(2.0, 7.0 / 6.0) * kPi * std::cbrt(eps * eps) * std::pow(e2, -1.0 / 6.0) * ai * ai;
}

double coefficient_quadratic_gaussian(int n, double eps) {
  double e = energy(n, eps);
  double a = std::sqrt(e), b = 0.5 * std::cbrt(eps * eps) * std::cbrt(2.0 * e);
  double b3 = b * b * b, b4 = b3 * b, b6 = b3 * b3;
  // e^{1/(96 b^6) +- a/(4 b^3)} Ai(+-a/b + 1/(16 b^4)) in log form where possible
  auto term = [&](double sgn) {
    double z = sgn * a / b + 1.0 / (16.0 * b4);
    double lead = 1.0 / (96.0 * b6) + sgn * a / (4.0 * b3);
    if (z > 0) return std::exp(lead + log_airy(z));
    return std::exp(lead) * airy(z).ai;
  };
  double peaks = eps / (2.0 * a * b) * std::sqrt(kPi) * (term(1.0) + term(-1.0));
  double center = eps / a * std::sin(2.0 * a * a * a / (3.0 * b * std::sqrt(b)));
  return peaks + center;
}

std::vector<double> stationary_roots(const InitialDatum& d, int n) {
  double e2 = 2.0 * energy(n, d.eps);
  auto g = [&](double x) { double s = d.s0.ds(x); return s * s + x * x - e2; };
  auto dg = [&](double x) { return 2.0 * (d.s0.ds(x) * d.s0.d2s(x) + x); };
  std::vector<double> roots;
  const int samples = 4000;
  double lo = d.support.lo, hi = d.support.hi, h = (hi - lo) / samples;
  double xa = lo, ga = g(xa);
  for (int i = 1; i <= samples; ++i) {
    double xb = lo + i * h, gb = g(xb);
    if (ga == 0.0 || (ga < 0) != (gb < 0)) {
      double a = xa, b = xb, fa = ga;
      for (int it = 0; it < 200 && b - a > 1e-15 * (1 + std::fabs(a)); ++it) {
        double m = 0.5 * (a + b), fm = g(m);
        if ((fm < 0) == (fa < 0)) {
          a = m;
          fa = fm;
        } else {
          b = m;
        }
      }
      double r = 0.5 * (a + b);
      if (std::fabs(dg(r)) < 1e-8 * (1.0 + e2)) throw Error(Errc::degenerate, "double stationary root");
      if (roots.empty() || std::fabs(roots.back() - r) > 10 * h) roots.push_back(r);
    }
    xa = xb;
    ga = gb;
  }
  return roots;
}

double coefficient_cubic_phase(const InitialDatum& d, int n) {
  double s = 0.0;
  for (double x : stationary_roots(d, n)) {
    if (std::fabs(d.s0.d3s(x)) < 1e-10) throw Error(Errc::wrong_branch, "s0''' vanishes at a root");
    double a = d.a0(x);
    s += a * a / std::fabs(d.s0.ds(x) * d.s0.d2s(x) + x);
  }
  return d.eps * s;
}

std::vector<double> coefficients_cubic_phase(const InitialDatum& d, int n_max) {
  std::vector<double> c(n_max + 1);
  for (int n = 0; n <= n_max; ++n) c[n] = coefficient_cubic_phase(d, n);
  return c;
}

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::exact_laguerre: return "exact";
    case Backend::airy_approx: return "airy";
    case Backend::hybrid: return "hybrid";
  }
  return "";
}

Backend parse_backend(const std::string& s) {
  if (s == "exact" || s == "exact-laguerre") return Backend::exact_laguerre;
  if (s == "airy" || s == "airy-approx") return Backend::airy_approx;
  if (s == "hybrid") return Backend::hybrid;
  throw Error(Errc::config, "unknown backend '" + s + "'");
}

cplx backend_wigner(Backend b, int n, int m, double eps, double x, double p) {
  bool low = n < kAiryNmin || m < kAiryNmin;
  if (b == Backend::exact_laguerre || (b == Backend::hybrid && low))
    return exact_wigner_eigenfunction(n, m, eps, x, p);
  if (low) throw Error(Errc::capability, "airy backend refuses modes below 10; use hybrid");
  EigencurveGeometry g = EigencurveGeometry::make(n, m, eps);
  if (n == m) return airy_diagonal(g, x, p);
  // phase undefined at the origin where the Airy factor is exponentially small
  if (x == 0.0 && p == 0.0) return 0.0;
  return airy_offdiagonal(g, x, p);
}

namespace {
std::vector<std::pair<int, int>> active_pairs(const SpectralSolution& s) {
  double peak = 0.0;
  for (const cplx& c : s.coeffs) peak = std::max(peak, std::abs(c));
  std::vector<std::pair<int, int>> out;
  for (int n = 0; n <= s.n_max; ++n)
    for (int m = 0; m <= s.n_max; ++m)
      if (std::abs(s.c(n, m)) > 1e-16 * peak) out.emplace_back(n, m);
  return out;
}
}  // namespace

cplx evolve_point(const SpectralSolution& s, Backend b, double x, double p, double t) {
  cplx v = 0.0;
  for (auto [n, m] : active_pairs(s)) v += s.c(n, m) * rotor(n, m, s.eps, t) * backend_wigner(b, n, m, s.eps, x, p);
  return v;
}

namespace {
ComplexField assemble(const SpectralSolution& s, Backend b, const PhaseSpaceGrid& g, double t,
                      int which /* 0 all, 1 diagonal, 2 off-diagonal */) {
  std::vector<std::pair<int, int>> pairs;
  for (auto pr : active_pairs(s)) {
    bool diag = pr.first == pr.second;
    if (which == 0 || (which == 1 && diag) || (which == 2 && !diag)) pairs.push_back(pr);
  }
  ComplexField out(g);
  parallel_for(g.nx, [&](int i) {
    for (int j = 0; j < g.np; ++j) {
      cplx v = 0.0;
      for (auto [n, m] : pairs) v += s.c(n, m) * rotor(n, m, s.eps, t) * backend_wigner(b, n, m, s.eps, g.x(i), g.p(j));
      out.at(i, j) = v;
    }
  });
  return out;
}
}  // namespace

ComplexField evolve(const SpectralSolution& s, Backend b, const PhaseSpaceGrid& g, double t,
                    FieldReport* report) {
  if (t < 0) throw Error(Errc::domain, "evolve: t must be nonnegative");
  if (report && b == Backend::hybrid)
    for (int n = 0; n <= std::min(s.n_max, kAiryNmin - 1); ++n)
      report->substituted.push_back("mode " + std::to_string(n) + ": exact-laguerre");
  return assemble(s, b, g, t, 0);
}

SplitField split(const SpectralSolution& s, Backend b, const PhaseSpaceGrid& g, double t) {
  return {assemble(s, b, g, t, 1), assemble(s, b, g, t, 2)};
}

double coherent_airy(const SpectralSolution& s, double x) {
  double eps = s.eps, sum = 0.0;
  for (int n = 0; n <= s.n_max; ++n) {
    double c = s.c(n, n).real();
    if (c == 0.0) continue;
    double e2 = 2.0 * energy(n, eps);
    double w = std::cbrt(eps * eps) * std::cbrt(e2);
    double ai = airy(-(e2 - x * x) / (std::cbrt(4.0) * w)).ai;
    sum += c * std::cbrt(4.0) / std::sqrt(w) * ai * ai;
  }
  return sum;
}

double incoherent_at_origin(const SpectralSolution& s, double t) {
  double eps = s.eps;
  cplx sum = 0.0;
  for (auto [n, m] : active_pairs(s)) {
    if (n == m || (n - m) % 2 != 0) continue;
    EigencurveGeometry g = EigencurveGeometry::make(n, m, eps);
    double r = g.r_nm, q = r * r - g.rho_nm * g.rho_nm;
    double sc = std::cbrt(eps * eps) * std::pow(r, 4.0 / 3.0) / std::cbrt(q);
    double ai = airy(-r * r / (std::cbrt(4.0) * sc)).ai;
    double ang = ((std::abs(n - m) / 2) % 2 == 0) ? 1.0 : -1.0;  // cos((n-m) pi/2)
    sum += s.c(n, m) * rotor(n, m, eps, t) * std::cbrt(4.0) * ang / std::cbrt(eps) *
           std::pow(r, -2.0 / 3.0) * std::pow(q, 1.0 / 6.0) * ai * ai;
  }
  return sum.real();
}

AmplitudeDecomposition amplitude(const SpectralSolution& s, Backend b, const std::vector<double>& xs,
                                 double t) {
  AmplitudeDecomposition out;
  out.x = xs;
  auto pairs = active_pairs(s);
  for (double x : xs) {
    double coh = 0.0;
    cplx inc = 0.0;
    if (b == Backend::exact_laguerre) {
      std::vector<double> v = exact_eigenfunctions(s.n_max, s.eps, x);
      for (auto [n, m] : pairs) {
        cplx term = s.c(n, m) * v[n] * v[m];
        if (n == m)
          coh += term.real();
        else
          inc += term * rotor(n, m, s.eps, t);
      }
    } else {
      std::vector<double> v;
      for (auto [n, m] : pairs) {
        bool low = n < kAiryNmin || m < kAiryNmin;
        if (low && b == Backend::airy_approx)
          throw Error(Errc::capability, "airy backend refuses modes below 10; use hybrid");
        if (low) {
          if (v.empty()) v = exact_eigenfunctions(s.n_max, s.eps, x);
          cplx term = s.c(n, m) * v[n] * v[m];
          if (n == m)
            coh += term.real();
          else
            inc += term * rotor(n, m, s.eps, t);
          continue;
        }
        if (n == m) {
          double e2 = 2.0 * energy(n, s.eps);
          double w = std::cbrt(s.eps * s.eps) * std::cbrt(e2);
          double ai = airy(-(e2 - x * x) / (std::cbrt(4.0) * w)).ai;
          coh += s.c(n, n).real() * std::cbrt(4.0) / std::sqrt(w) * ai * ai;
          continue;
        }
        if (n < m) continue;  // folded into the conjugate partner below
        EigencurveGeometry g = EigencurveGeometry::make(n, m, s.eps);
        double r = g.r_nm, q = r * r - g.rho_nm * g.rho_nm;
        double sc = std::cbrt(s.eps * s.eps) * std::pow(r, 4.0 / 3.0) / std::cbrt(q);
        double pmax = std::sqrt(std::max(0.0, r * r - x * x + 14.0 * sc));
        int k = n - m;
        auto f = [&](double p) {
          if (x == 0.0 && p == 0.0) return cplx(0.0);
          return airy_offdiagonal(g, x, p);
        };
        auto freq = [&](double p) {
          double z = std::max(1.0, (r * r - x * x - p * p) / sc);
          return std::sqrt(z) * 2.0 * std::fabs(p) / sc + k * std::fabs(x) / (x * x + p * p + 1e-300);
        };
        QuadOptions qo;
        qo.abs_tol = 1e-12;
        cplx ip = pmax > 0 ? integrate_oscillatory(f, -pmax, pmax, freq, qo).value : 0.0;
        cplx term = s.c(n, m) * rotor(n, m, s.eps, t) * ip;
        inc += term + std::conj(term);
      }
    }
    out.coherent.push_back(coh);
    out.incoherent.push_back(inc.real());
    out.total.push_back(coh + inc.real());
  }
  return out;
}

double liouville_residual(const FieldSampler& w, const PhaseSpaceGrid& g, double t, double h,
                          const std::vector<double>& v, double eps) {
  if (h < 1e-5) throw Error(Errc::step, "finite-difference step below the roundoff floor");
  if (v.size() > 7) throw Error(Errc::capability, "potential degree above 6");
  auto dpoly = [&](int order, double x) {
    double s = 0.0;
    for (std::size_t k = order; k < v.size(); ++k) {
      double c = v[k];
      for (int j = 0; j < order; ++j) c *= static_cast<double>(k - j);
      s += c * std::pow(x, static_cast<double>(k - order));
    }
    return s;
  };
  std::vector<double> rows(g.nx, 0.0);
  parallel_for(g.nx, [&](int i) {
    double x = g.x(i), acc = 0.0;
    for (int j = 0; j < g.np; ++j) {
      double p = g.p(j);
      auto at = [&](double dx, double dp, double dt) { return w(x + dx, p + dp, t + dt); };
      double wt = (at(0, 0, h) - at(0, 0, -h)) / (2 * h);
      double wx = (at(h, 0, 0) - at(-h, 0, 0)) / (2 * h);
      double wp = (at(0, h, 0) - at(0, -h, 0)) / (2 * h);
      double r = wt + p * wx - dpoly(1, x) * wp;
      double v3 = dpoly(3, x), v5 = dpoly(5, x);
      if (v3 != 0.0) {
        double d3 = (at(0, 2 * h, 0) - 2 * at(0, h, 0) + 2 * at(0, -h, 0) - at(0, -2 * h, 0)) / (2 * h * h * h);
        r -= (-1.0 / 6.0) * std::pow(eps / 2, 2) * v3 * d3;
      }
      if (v5 != 0.0) {
        double d5 = (at(0, 3 * h, 0) - 4 * at(0, 2 * h, 0) + 5 * at(0, h, 0) - 5 * at(0, -h, 0) +
                     4 * at(0, -2 * h, 0) - at(0, -3 * h, 0)) /
                    (2 * std::pow(h, 5));
        r -= (1.0 / 120.0) * std::pow(eps / 2, 4) * v5 * d5;
      }
      acc += r * r;
    }
    rows[i] = acc;
  });
  double s = 0.0;
  for (double r : rows) s += r;
  return std::sqrt(s * g.dx() * g.dp());
}

}  // namespace semiwig
