#include "semiwig/stationary_phase.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

#include "semiwig/error.hpp"
#include "semiwig/specfun.hpp"

namespace semiwig {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr cplx kI(0.0, 1.0);

bool close_fd(double analytic, double fd, double scale) {
  return std::fabs(analytic - fd) <= 1e-5 * (1.0 + std::fabs(analytic) + scale);
}

// safeguarded Newton on g with derivative dg inside [a, b], g(a) g(b) <= 0
double refine_root(const std::function<double(double)>& g, const std::function<double(double)>& dg,
                   double a, double b) {
  double ga = g(a);
  if (ga == 0.0) return a;
  if (g(b) == 0.0) return b;
  double x = 0.5 * (a + b);
  for (int it = 0; it < 200; ++it) {
    double gx = g(x);
    if (gx == 0.0) return x;
    if ((gx < 0) == (ga < 0)) {
      a = x;
      ga = gx;
    } else {
      b = x;
    }
    double d = dg(x);
    double xn = (d != 0.0) ? x - gx / d : 0.5 * (a + b);
    if (!(xn > a && xn < b)) xn = 0.5 * (a + b);
    if (std::fabs(xn - x) <= 1e-15 * (1.0 + std::fabs(x)) || b - a <= 1e-15 * (1.0 + std::fabs(x)))
      return xn;
    x = xn;
  }
  return x;
}

std::vector<double> scan_roots(const std::function<double(double)>& g,
                               const std::function<double(double)>& dg, Interval iv, int samples) {
  std::vector<double> out;
  double h = (iv.hi - iv.lo) / samples;
  double xa = iv.lo, ga = g(xa);
  for (int i = 1; i <= samples; ++i) {
    double xb = iv.lo + i * h, gb = g(xb);
    if (ga == 0.0) {
      out.push_back(xa);
    } else if ((ga < 0) != (gb < 0) && gb != 0.0) {
      out.push_back(refine_root(g, dg, xa, xb));
    }
    xa = xb;
    ga = gb;
  }
  if (ga == 0.0) out.push_back(xa);
  return out;
}

// e^{i lam phi0}[2 pi A0 lam^{-1/3} Ai(-lam^{2/3} xi) - 2 pi i B0 lam^{-2/3} Ai'(-lam^{2/3} xi)]
cplx assemble(double phi0, double xi, cplx a0, cplx b0, double lambda) {
  double l13 = std::cbrt(lambda);
  AiryPair ap = airy(-l13 * l13 * xi);
  return std::exp(kI * (lambda * phi0)) *
         (2.0 * kPi * a0 / l13 * ap.ai - 2.0 * kPi * kI * b0 / (l13 * l13) * ap.ai_prime);
}

// cubic normal form around a critical point c of phi': covers the merged
// and the complex-pair cases
UniformSpResult normal_form(const PhaseModel& m, double alpha, double lambda, double c) {
  double k = m.d3phi(c, alpha);
  if (std::fabs(k) < 1e-12) throw Error(Errc::degenerate, "uniform_sp: third derivative vanishes");
  double scale = std::cbrt(2.0 / std::fabs(k));
  UniformSpResult r;
  r.phi0 = m.phi(c, alpha);
  r.xi = -std::copysign(1.0, k) * m.dphi(c, alpha) * scale;
  r.a0 = scale * m.amplitude(c);
  r.b0 = 0.0;
  r.value = assemble(r.phi0, r.xi, r.a0, r.b0, lambda);
  return r;
}

}  // namespace

PhaseModel::PhaseModel(Fn phi, Fn dphi, Fn d2phi, Fn d3phi, Amp amplitude, Interval window,
                       std::vector<double> probe_alphas, Fn dphi_dalpha)
    : phi_(std::move(phi)),
      dphi_(std::move(dphi)),
      d2phi_(std::move(d2phi)),
      d3phi_(std::move(d3phi)),
      dphi_da_(std::move(dphi_dalpha)),
      amp_(std::move(amplitude)),
      window_(window) {
  if (!(window.hi > window.lo)) throw Error(Errc::domain, "PhaseModel: empty window");
  const int probes = 17;
  double h = 1e-4 * std::max(1.0, window.hi - window.lo);
  for (double a : probe_alphas) {
    for (int i = 0; i < probes; ++i) {
      double s = window.lo + (window.hi - window.lo) * (i + 0.5) / probes;
      double f0 = phi_(s, a), scale = std::fabs(f0);
      double d1 = (phi_(s + h, a) - phi_(s - h, a)) / (2 * h);
      double d2 = (dphi_(s + h, a) - dphi_(s - h, a)) / (2 * h);
      double d3 = (d2phi_(s + h, a) - d2phi_(s - h, a)) / (2 * h);
      if (!close_fd(dphi_(s, a), d1, scale) || !close_fd(d2phi_(s, a), d2, scale) ||
          !close_fd(d3phi_(s, a), d3, scale))
        throw Error(Errc::domain, "PhaseModel: derivatives disagree with central differences");
    }
  }
}

double PhaseModel::dphi_dalpha(double s, double a) const {
  if (dphi_da_) return dphi_da_(s, a);
  double h = 1e-5;
  return (dphi_(s, a + h) - dphi_(s, a - h)) / (2 * h);
}

PhaseModel PhaseModel::cubic(Amp amplitude, Interval window) {
  return PhaseModel([](double s, double a) { return s * s * s / 3.0 - a * s; },
                    [](double s, double a) { return s * s - a; },
                    [](double s, double) { return 2.0 * s; }, [](double, double) { return 2.0; },
                    std::move(amplitude), window, {0.0, 0.25},
                    [](double, double) { return -1.0; });
}

PhaseModel PhaseModel::quadratic(double c, Amp amplitude, Interval window) {
  return PhaseModel([c](double s, double) { return c * s * s; },
                    [c](double s, double) { return 2.0 * c * s; },
                    [c](double, double) { return 2.0 * c; }, [](double, double) { return 0.0; },
                    std::move(amplitude), window);
}

cplx oscillatory_quadrature(const PhaseModel& m, double alpha, double lambda, Interval w,
                            const OscQuadOptions& opt) {
  if (!(lambda > 0)) throw Error(Errc::domain, "oscillatory_quadrature: lambda must be positive");
  auto f = [&](double s) { return m.amplitude(s) * std::exp(kI * (lambda * m.phi(s, alpha))); };
  auto freq = [&](double s) { return lambda * m.dphi(s, alpha); };
  QuadOptions q;
  q.abs_tol = opt.abs_tol;
  cplx v = integrate_oscillatory(f, w.lo, w.hi, freq, q).value;
  if (opt.open_ends) {
    // two integration-by-parts terms of each semi-infinite tail
    auto tail = [&](double b) {
      double d1 = m.dphi(b, alpha), d2 = m.d2phi(b, alpha);
      cplx il = kI * lambda;
      return f(b) * (1.0 / (il * d1) - d2 / (il * il * d1 * d1 * d1));
    };
    v += tail(w.lo) - tail(w.hi);
  }
  return v;
}

cplx standard_sp(const PhaseModel& m, double alpha, double lambda, double c) {
  double d2 = m.d2phi(c, alpha);
  if (std::fabs(d2) < 1e-10) throw Error(Errc::degenerate, "standard_sp: degenerate stationary point");
  double mu = d2 > 0 ? 1.0 : -1.0;
  return m.amplitude(c) * std::sqrt(2.0 * kPi / (lambda * std::fabs(d2))) *
         std::exp(kI * (lambda * m.phi(c, alpha) + mu * kPi / 4.0));
}

cplx standard_sp_2d(cplx f00, const Mat2& h, double phase00, double lambda) {
  double det = h.a11 * h.a22 - h.a12 * h.a21;
  if (std::fabs(det) < 1e-14) throw Error(Errc::degenerate, "standard_sp_2d: singular Hessian");
  // signature/2 of a symmetric 2x2 matrix
  double delta = det < 0 ? 0.0 : (h.a11 + h.a22 > 0 ? 1.0 : -1.0);
  return 2.0 * kPi * f00 * std::exp(kI * (delta * kPi / 2.0)) / lambda *
         std::exp(kI * (lambda * phase00)) / std::sqrt(std::fabs(det));
}

const char* saddle_kind_name(SaddleKind k) {
  switch (k) {
    case SaddleKind::two_real: return "two_real";
    case SaddleKind::coalesced: return "coalesced";
    case SaddleKind::complex_pair: return "complex_pair";
    case SaddleKind::none: return "none";
  }
  return "none";
}

StationaryPointSet find_saddles(const PhaseModel& m, double alpha, Interval br) {
  auto g = [&](double s) { return m.dphi(s, alpha); };
  auto dg = [&](double s) { return m.d2phi(s, alpha); };
  auto ddg = [&](double s) { return m.d3phi(s, alpha); };
  const int samples = 2000;
  std::vector<double> roots = scan_roots(g, dg, br, samples);

  StationaryPointSet out;
  auto set_pair = [&](double a, double b) {
    if (dg(a) > dg(b)) std::swap(a, b);
    out.points = {a, b};
    out.second_derivs = {dg(a), dg(b)};
    if (std::fabs(a - b) < kCoalesceTol * (1.0 + std::fabs(a))) {
      double c = 0.5 * (a + b);
      out.kind = SaddleKind::coalesced;
      out.points = {c, c};
      out.second_derivs = {dg(c), dg(c)};
    } else {
      out.kind = SaddleKind::two_real;
    }
  };
  if (roots.size() == 2) {
    set_pair(roots[0], roots[1]);
    return out;
  }
  if (roots.size() == 1 && std::fabs(dg(roots[0])) < 1e-8 * (1.0 + std::fabs(ddg(roots[0])))) {
    // sampled exactly on a double root
    out.kind = SaddleKind::coalesced;
    out.points = {roots[0], roots[0]};
    out.second_derivs = {dg(roots[0]), dg(roots[0])};
    return out;
  }
  if (roots.size() > 2 || roots.size() == 1) {
    out.kind = SaddleKind::none;
    out.points = roots;
    for (double r : roots) out.second_derivs.push_back(dg(r));
    return out;
  }

  // no sign change of phi': look at the critical points of phi'
  std::vector<double> crit = scan_roots(dg, ddg, br, samples);
  if (crit.empty()) return out;
  double c = crit[0];
  for (double x : crit)
    if (std::fabs(g(x)) < std::fabs(g(c))) c = x;
  double k = ddg(c);
  if (k == 0.0) return out;
  double disc = -2.0 * g(c) / k;
  double half = std::sqrt(std::fabs(disc));
  if (half < kCoalesceTol * (1.0 + std::fabs(c))) {
    out.kind = SaddleKind::coalesced;
    out.points = {c, c};
    out.second_derivs = {dg(c), dg(c)};
    return out;
  }
  if (disc > 0) {
    // two real roots too close for the scan; Newton from the quadratic seeds
    auto newton = [&](double x) {
      for (int it = 0; it < 100; ++it) {
        double d = dg(x);
        if (d == 0.0) break;
        double dx = g(x) / d;
        x -= dx;
        if (std::fabs(dx) < 1e-15 * (1.0 + std::fabs(x))) break;
      }
      return x;
    };
    set_pair(newton(c - half), newton(c + half));
    return out;
  }
  out.kind = SaddleKind::complex_pair;
  out.points = {c, half};
  out.second_derivs = {dg(c)};
  return out;
}

UniformSpResult uniform_sp(const PhaseModel& m, double alpha, double lambda,
                           const StationaryPointSet& sp, const UniformSpOptions& opt) {
  if (sp.kind == SaddleKind::none) throw Error(Errc::domain, "uniform_sp: no saddle structure");
  if (sp.kind == SaddleKind::complex_pair) {
    if (!opt.formal)
      throw Error(Errc::unsupported, "uniform_sp: complex saddles need the formal mode flag");
    return normal_form(m, alpha, lambda, sp.points[0]);
  }
  if (sp.kind == SaddleKind::coalesced) return normal_form(m, alpha, lambda, sp.points[0]);

  double x1 = sp.points[0], x2 = sp.points[1];
  double c1, c2, xi;
  if (opt.small_alpha) {
    double c0 = opt.merge_point;
    double fxxx = m.d3phi(c0, 0.0), fxa = m.dphi_dalpha(c0, 0.0);
    double rad = -2.0 * fxxx * fxa * alpha;
    if (rad < 0) {
      if (!opt.formal) throw Error(Errc::unsupported, "uniform_sp: small-alpha surd is imaginary");
      return normal_form(m, alpha, lambda, c0);
    }
    double s = std::sqrt(rad);
    x1 = c0 - s / fxxx;
    x2 = c0 + s / fxxx;
    if (fxxx < 0) std::swap(x1, x2);
    c1 = c2 = s;
    xi = -fxa * std::pow(fxxx / 2.0, -1.0 / 3.0) * alpha;
  } else {
    c1 = std::fabs(m.d2phi(x1, alpha));
    c2 = std::fabs(m.d2phi(x2, alpha));
    double dphi = m.phi(x1, alpha) - m.phi(x2, alpha);
    xi = std::copysign(std::pow(std::fabs(0.75 * dphi), 2.0 / 3.0), dphi);
  }
  UniformSpResult r;
  r.phi0 = 0.5 * (m.phi(x1, alpha) + m.phi(x2, alpha));
  r.xi = xi;
  cplx g1 = m.amplitude(x1) / std::sqrt(c1), g2 = m.amplitude(x2) / std::sqrt(c2);
  double q = std::pow(std::fabs(xi), 0.25);
  r.a0 = q / std::sqrt(2.0) * (g2 + g1);
  r.b0 = -(g1 - g2) / (std::sqrt(2.0) * q);
  r.value = assemble(r.phi0, r.xi, r.a0, r.b0, lambda);
  return r;
}

AiryDecomposition airy_decompose(double x, double alpha, double eps) {
  if (!(eps > 0)) throw Error(Errc::domain, "airy_decompose: eps must be positive");
  if (alpha <= kAlphaMin) throw Error(Errc::degenerate, "airy_decompose: alpha too close to 0");
  double w = 0.5 / (alpha * eps);
  AiryDecomposition d;
  d.left = w * airy((x + alpha) / eps).ai;
  d.right = w * airy((x - alpha) / eps).ai;
  d.center_weight = std::sin(2.0 * alpha * alpha * alpha / (3.0 * eps * std::sqrt(eps))) / alpha;
  return d;
}

}  // namespace semiwig
