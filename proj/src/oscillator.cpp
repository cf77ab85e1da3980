#include "semiwig/oscillator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "semiwig/error.hpp"
#include "semiwig/specfun.hpp"

namespace semiwig {

namespace {
constexpr double kPi = std::numbers::pi;
}

void SemiclassicalParams::validate() const {
  if (!(eps > 0.0 && eps <= 1.0)) throw Error(Errc::domain, "eps must lie in (0, 1]");
  if (n < 0 || m < 0) throw Error(Errc::domain, "mode indices must be nonnegative");
}

double eigenvalue(const SemiclassicalParams& p) {
  p.validate();
  return energy(p.n, p.eps);
}

double exact_eigenfunction(const SemiclassicalParams& p, double x) {
  if (p.n > kNmax) throw Error(Errc::capability, "exact_eigenfunction: n above 200");
  double r = std::sqrt(p.eps);
  return hermite_function(p.n, x / r) / std::sqrt(r);
}

std::vector<double> exact_eigenfunctions(int nmax, double eps, double x) {
  if (nmax > kNmax) throw Error(Errc::capability, "exact_eigenfunctions: n above 200");
  std::vector<double> out(nmax + 1);
  double r = std::sqrt(eps), y = x / r;
  // same recurrence as hermite_function, keeping every level
  double logscale = -0.5 * y * y - 0.25 * std::log(kPi) - 0.25 * std::log(eps);
  double a = 1.0, b = 0.0;
  std::vector<double> mant(nmax + 1), lsc(nmax + 1);
  mant[0] = 1.0;
  lsc[0] = logscale;
  for (int k = 1; k <= nmax; ++k) {
    double c = std::sqrt(2.0 / k) * y * a - std::sqrt((k - 1.0) / k) * b;
    b = a;
    a = c;
    double mg = std::fabs(a);
    if (mg > 1e150) {
      a /= mg;
      b /= mg;
      logscale += std::log(mg);
    }
    mant[k] = a;
    lsc[k] = logscale;
  }
  for (int k = 0; k <= nmax; ++k)
    out[k] = mant[k] == 0.0 ? 0.0
                            : std::copysign(std::exp(std::log(std::fabs(mant[k])) + lsc[k]), mant[k]);
  return out;
}

double wkb_action(const SemiclassicalParams& p, double x) {
  double e = eigenvalue(p), xt = std::sqrt(2.0 * e);
  double slack = 1e-14 * (1.0 + xt);
  if (std::fabs(x) > xt + slack) throw Error(Errc::domain, "wkb_action: x beyond turning point");
  x = std::clamp(x, -xt, xt);
  // asin(x/xt) - pi/2 written through the half-angle form, which stays
  // accurate next to the right turning point
  double gap = xt - x;
  return 0.5 * x * std::sqrt(gap * (xt + x)) - 2.0 * e * std::asin(std::sqrt(gap / (2.0 * xt)));
}

const char* wkb_region_name(WkbRegion r) {
  switch (r) {
    case WkbRegion::left_decay: return "left_decay";
    case WkbRegion::oscillatory: return "oscillatory";
    case WkbRegion::right_decay: return "right_decay";
    case WkbRegion::turning_band: return "turning_band";
  }
  return "";
}

WkbEigenfunction::WkbEigenfunction(int n, double eps) : n_(n), eps_(eps) {
  SemiclassicalParams{eps, n, n}.validate();
  energy_ = semiwig::energy(n, eps);
  xt_ = std::sqrt(2.0 * energy_);
  band_ = 2.0 * std::pow(eps, 2.0 / 3.0) * std::pow(2.0 * energy_, 1.0 / 6.0);
}

WkbRegion WkbEigenfunction::region(double x) const {
  if (std::fabs(std::fabs(x) - xt_) < band_) return WkbRegion::turning_band;
  if (x > xt_) return WkbRegion::right_decay;
  if (x < -xt_) return WkbRegion::left_decay;
  return WkbRegion::oscillatory;
}

double WkbEigenfunction::amplitude(double x) const {
  return std::sqrt(2.0 / kPi) * std::pow(2.0 * energy_ - x * x, -0.25);
}

double WkbEigenfunction::phase(double x) const { return wkb_action({eps_, n_, n_}, x); }

double WkbEigenfunction::value(double x) const {
  switch (region(x)) {
    case WkbRegion::turning_band:
      throw Error(Errc::turning_band, "wkb_eigenfunction: x inside a turning exclusion band");
    case WkbRegion::oscillatory:
      return amplitude(x) * std::cos(phase(x) / eps_ + kPi / 4.0);
    case WkbRegion::right_decay:
    case WkbRegion::left_decay: {
      // decaying branch on the right; the left follows from parity (-1)^n.
      // The 1/2 is the connection factor matching cos(. - pi/4) inside.
      double y = std::fabs(x), e = energy_;
      double q = y * y - 2.0 * e;
      double act = 0.5 * y * std::sqrt(q) - e * std::acosh(y / xt_);
      double v = 0.5 * std::sqrt(2.0 / kPi) * std::pow(q, -0.25) * std::exp(-act / eps_);
      if (x < 0 && (n_ % 2 == 1)) v = -v;
      return v;
    }
  }
  return 0.0;
}

std::pair<cplx, cplx> WkbEigenfunction::two_phase(double x) const {
  if (region(x) != WkbRegion::oscillatory)
    throw Error(Errc::turning_band, "two_phase: only defined in the oscillatory region");
  double a = 0.5 * amplitude(x), s = phase(x) / eps_;
  cplx ap = a * std::exp(cplx(0, kPi / 4.0)), am = a * std::exp(cplx(0, -kPi / 4.0));
  return {ap * std::exp(cplx(0, s)), am * std::exp(cplx(0, -s))};
}

std::pair<double, double> turning_points(const WellPotential& w, double e) {
  if (!(w.v(w.center) < e)) throw Error(Errc::bracketing, "energy below the well bottom");
  auto solve = [&](double dir) {
    double a = w.center, step = 0.5;
    double b = a + dir * step;
    int guard = 0;
    while (w.v(b) < e) {
      a = b;
      step *= 2.0;
      b = a + dir * step;
      if (++guard > 200) throw Error(Errc::bracketing, "no turning point found");
    }
    if (a > b) std::swap(a, b);
    // safeguarded Newton on V - E
    double fa = w.v(a) - e;
    double x = 0.5 * (a + b);
    for (int it = 0; it < 200; ++it) {
      double fx = w.v(x) - e;
      if (fx == 0.0) return x;
      if ((fx < 0) == (fa < 0)) {
        a = x;
        fa = fx;
      } else {
        b = x;
      }
      double d = w.dv(x);
      double xn = d != 0.0 ? x - fx / d : 0.5 * (a + b);
      if (!(xn > a && xn < b)) xn = 0.5 * (a + b);
      if (std::fabs(xn - x) < 1e-15 * (1.0 + std::fabs(x))) return xn;
      x = xn;
    }
    return x;
  };
  return {solve(-1.0), solve(1.0)};
}

namespace {

// x = c + h sin(theta) removes the square-root endpoint behaviour
template <class F>
double theta_rule(const WellPotential& w, double e, F integrand) {
  auto [x1, x2] = turning_points(w, e);
  double c = 0.5 * (x1 + x2), h = 0.5 * (x2 - x1);
  return composite_gl(
      [&](double th) {
        double x = c + h * std::sin(th);
        return integrand(std::max(0.0, 2.0 * (e - w.v(x))), h * std::cos(th));
      },
      -kPi / 2.0, kPi / 2.0, 8, 24);
}

}  // namespace

double action_integral(const WellPotential& w, double e) {
  return theta_rule(w, e, [](double q, double jac) { return std::sqrt(q) * jac; });
}

double bohr_sommerfeld(const WellPotential& w, int n, double eps, Interval br) {
  double target = kPi * (n + 0.5) * eps;
  double lo = br.lo, hi = br.hi;
  double flo = action_integral(w, lo) - target, fhi = action_integral(w, hi) - target;
  if (!(action_integral(w, hi) > action_integral(w, lo)))
    throw Error(Errc::bracketing, "action not increasing on the bracket");
  if (flo > 0 || fhi < 0) throw Error(Errc::bracketing, "bracket does not straddle the target action");
  auto dfde = [&](double e) {
    return theta_rule(w, e, [](double q, double jac) { return q > 0 ? jac / std::sqrt(q) : 0.0; });
  };
  double e = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    double f = action_integral(w, e) - target;
    if (f < 0)
      lo = e;
    else
      hi = e;
    double d = dfde(e);
    double en = d > 0 ? e - f / d : 0.5 * (lo + hi);
    if (!(en > lo && en < hi)) en = 0.5 * (lo + hi);
    if (std::fabs(en - e) < 1e-13 * (1.0 + std::fabs(e))) return en;
    e = en;
  }
  return e;
}

std::vector<cplx> project_eigenfunctions(const std::function<cplx(double)>& u0, double eps,
                                         int nmax, Interval support) {
  if (nmax > kNmax) throw Error(Errc::capability, "projection beyond n = 200");
  std::vector<cplx> c(nmax + 1, 0.0);
  // resolve both the datum and the fastest eigenfunction oscillation
  double kmax = std::sqrt(2.0 * energy(nmax, eps)) / eps;
  double width = support.hi - support.lo;
  int panels = std::max(16, static_cast<int>(std::ceil(width * kmax / (2.0 * kPi) * 2.0)) + 16);
  panels = std::min(panels, 20000);
  const GaussRule& g = gauss_legendre(24);
  double h = width / panels;
  for (int p = 0; p < panels; ++p) {
    double mid = support.lo + (p + 0.5) * h;
    for (int i = 0; i < 24; ++i) {
      double x = mid + 0.5 * h * g.x[i];
      cplx u = u0(x);
      if (u == 0.0) continue;
      std::vector<double> v = exact_eigenfunctions(nmax, eps, x);
      double wt = 0.5 * h * g.w[i];
      for (int n = 0; n <= nmax; ++n) c[n] += wt * u * v[n];
    }
  }
  return c;
}

int default_truncation(const std::vector<cplx>& coeffs, double norm2, double tail) {
  double s = 0.0;
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    s += std::norm(coeffs[n]);
    if (s >= (1.0 - tail) * norm2) return static_cast<int>(n);
  }
  return static_cast<int>(coeffs.size()) - 1;
}

cplx schrodinger_series(const std::vector<cplx>& coeffs, double eps, double x, double t) {
  if (coeffs.empty()) return 0.0;
  int nmax = static_cast<int>(coeffs.size()) - 1;
  std::vector<double> v = exact_eigenfunctions(nmax, eps, x);
  cplx s = 0.0;
  for (int n = 0; n <= nmax; ++n) s += coeffs[n] * v[n] * std::exp(cplx(0, -energy(n, eps) * t / eps));
  return s;
}

}  // namespace semiwig
