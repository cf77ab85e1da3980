#include "semiwig/specfun.hpp"

#include <array>
#include <atomic>
#include <cmath>
#include <numbers>

#include "semiwig/error.hpp"

namespace semiwig {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMaclaurinReach = 4.5;
constexpr double kAsymptoticReach = 12.0;

std::atomic<double> g_airy_perturbation{0.0};

AiryPair airy_maclaurin(double zd) {
  // Ai = c1 f - c2 g, f = sum 3^k (1/3)_k z^{3k}/(3k)!, g = sum 3^k (2/3)_k z^{3k+1}/(3k+1)!
  using ld = long double;
  const ld c1 = 0.355028053887817239260063186004183176L * (1.0L + g_airy_perturbation.load());
  const ld c2 = 0.258819403792806798405183560189203963L;
  ld z = zd, z3 = z * z * z;
  ld f = 1, g = z, df = 0, dg = z;
  ld tf = 1, tg = z;
  for (int k = 1; k < 200; ++k) {
    // term ratios of f and g
    tf *= z3 / ((3.0L * k - 1) * (3.0L * k));
    tg *= z3 / ((3.0L * k) * (3.0L * k + 1));
    f += tf;
    g += tg;
    // derivative series: f' = sum 3k t_k / z, g' = sum (3k+1) t_k / z
    df += tf * (3.0L * k);
    dg += tg * (3.0L * k + 1);
    if (std::fabs(static_cast<double>(tf)) + std::fabs(static_cast<double>(tg)) < 1e-22 && k > 3) break;
  }
  ld dfz = (z == 0) ? 0.0L : df / z;
  ld dgz = (z == 0) ? 1.0L : dg / z;
  return {static_cast<double>(c1 * f - c2 * g), static_cast<double>(c1 * dfz - c2 * dgz)};
}

// u_k and v_k of the Airy asymptotic expansion
struct AsymCoeffs {
  std::array<double, 40> u{}, v{};
  AsymCoeffs() {
    u[0] = 1.0;
    v[0] = 1.0;
    for (int k = 1; k < 40; ++k) {
      u[k] = u[k - 1] * (6.0 * k - 5) * (6.0 * k - 3) * (6.0 * k - 1) / ((2.0 * k - 1) * 216.0 * k);
      v[k] = -(6.0 * k + 1) / (6.0 * k - 1) * u[k];
    }
  }
};
const AsymCoeffs& asym() {
  static const AsymCoeffs c;
  return c;
}

// Ai(z)e^zeta, Ai'(z)e^zeta for large positive z
AiryPair airy_pos_asym_scaled(double z) {
  const auto& c = asym();
  double zeta = 2.0 / 3.0 * z * std::sqrt(z);
  double su = 0, sv = 0, t = 1, last = INFINITY;
  for (int k = 0; k < 40; ++k) {
    double tu = c.u[k] * t, tv = c.v[k] * t;
    if (std::fabs(tu) > last) break;
    last = std::fabs(tu);
    su += tu;
    sv += tv;
    if (std::fabs(tu) < 1e-17 * std::fabs(su)) break;
    t *= -1.0 / zeta;
  }
  double q = std::pow(z, 0.25), pre = 0.5 / std::sqrt(kPi);
  return {pre / q * su, -pre * q * sv};
}

AiryPair airy_neg_asym(double x) {
  // z = -x, x large
  const auto& c = asym();
  double zeta = 2.0 / 3.0 * x * std::sqrt(x);
  double pu = 0, qu = 0, pv = 0, qv = 0;
  double t = 1, last = INFINITY;
  for (int k = 0; k < 39; ++k) {
    double tu = c.u[k] * t, tv = c.v[k] * t;
    if (std::fabs(tu) > last) break;
    last = std::fabs(tu);
    // even k -> cos bracket, odd k -> sin bracket, alternating signs in pairs
    double sgn = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
    if (k % 2 == 0) {
      pu += sgn * tu;
      pv += sgn * tv;
    } else {
      qu += sgn * tu;
      qv += sgn * tv;
    }
    if (std::fabs(tu) < 1e-17) break;
    t /= zeta;
  }
  double th = zeta - 0.25 * kPi;
  double cs = std::cos(th), sn = std::sin(th);
  double q = std::pow(x, 0.25), rp = 1.0 / std::sqrt(kPi);
  return {rp / q * (cs * pu + sn * qu), rp * q * (sn * pv - cs * qv)};
}

AiryPair airy_bessel(double z) {
  if (z > 0) {
    double zeta = 2.0 / 3.0 * z * std::sqrt(z);
    return {std::sqrt(z / 3.0) / kPi * std::cyl_bessel_k(1.0 / 3.0, zeta),
            -z / (kPi * std::sqrt(3.0)) * std::cyl_bessel_k(2.0 / 3.0, zeta)};
  }
  double x = -z, zeta = 2.0 / 3.0 * x * std::sqrt(x), r3 = std::sqrt(3.0);
  return {0.5 * std::sqrt(x) * (std::cyl_bessel_j(1.0 / 3.0, zeta) - std::cyl_neumann(1.0 / 3.0, zeta) / r3),
          0.5 * x * (std::cyl_bessel_j(2.0 / 3.0, zeta) + std::cyl_neumann(2.0 / 3.0, zeta) / r3)};
}

}  // namespace

void set_airy_constant_perturbation(double rel) { g_airy_perturbation.store(rel); }

AiryPair airy(double z) {
  double a = std::fabs(z);
  if (a <= kMaclaurinReach) return airy_maclaurin(z);
  if (a <= kAsymptoticReach) return airy_bessel(z);
  if (z < 0) return airy_neg_asym(-z);
  double zeta = 2.0 / 3.0 * z * std::sqrt(z);
  if (zeta > 745.0) return {0.0, 0.0};
  AiryPair s = airy_pos_asym_scaled(z);
  double e = std::exp(-zeta);
  return {s.ai * e, s.ai_prime * e};
}

AiryPair airy_scaled(double z) {
  if (z < 0) return airy(z);
  if (z > kAsymptoticReach) return airy_pos_asym_scaled(z);
  AiryPair p = airy(z);
  double e = std::exp(2.0 / 3.0 * z * std::sqrt(z));
  return {p.ai * e, p.ai_prime * e};
}

double log_airy(double z) {
  if (z <= 0) {
    double v = airy(z).ai;
    if (!(v > 0)) throw Error(Errc::domain, "log_airy: Ai(z) <= 0");
    return std::log(v);
  }
  return std::log(airy_scaled(z).ai) - 2.0 / 3.0 * z * std::sqrt(z);
}

double hermite(int n, double x) {
  if (n < 0 || n > kNmax) throw Error(Errc::capability, "hermite: n outside [0, 200]");
  if (n == 0) return 1.0;
  // running rescale keeps the recurrence in range; exponent re-applied at the end
  double h0 = 1.0, h1 = 2.0 * x;
  int e2 = 0;
  for (int k = 1; k < n; ++k) {
    double h2 = 2.0 * x * h1 - 2.0 * k * h0;
    h0 = h1;
    h1 = h2;
    if (std::fabs(h1) > 0x1p500) {
      h0 = std::ldexp(h0, -500);
      h1 = std::ldexp(h1, -500);
      e2 += 500;
    }
  }
  return std::ldexp(h1, e2);
}

double hermite_function(int n, double y) {
  if (n < 0 || n > kNmax) throw Error(Errc::capability, "hermite_function: n outside [0, 200]");
  // h_k = sqrt(2/k) y h_{k-1} - sqrt((k-1)/k) h_{k-2}, started at 1 with the
  // Gaussian factor held in log form
  double logscale = -0.5 * y * y - 0.25 * std::log(kPi);
  double a = 1.0, b = 0.0;
  for (int k = 1; k <= n; ++k) {
    double c = std::sqrt(2.0 / k) * y * a - std::sqrt((k - 1.0) / k) * b;
    b = a;
    a = c;
    double m = std::fabs(a);
    if (m > 1e150) {
      a /= m;
      b /= m;
      logscale += std::log(m);
    }
  }
  if (a == 0.0) return 0.0;
  double la = std::log(std::fabs(a)) + logscale;
  return std::copysign(std::exp(la), a);
}

double laguerre(int n, double a, double x) {
  if (a <= -1.0) throw Error(Errc::domain, "laguerre: order must exceed -1");
  if (n < 0 || n > kNmax) throw Error(Errc::capability, "laguerre: n outside [0, 200]");
  if (n == 0) return 1.0;
  double l0 = 1.0, l1 = 1.0 + a - x;
  for (int k = 1; k < n; ++k) {
    double l2 = ((2.0 * k + 1.0 + a - x) * l1 - (k + a) * l0) / (k + 1.0);
    l0 = l1;
    l1 = l2;
  }
  return l1;
}

namespace {

LaguerreAsymptoticParams lag_params_raw(double nu, double a, double t) {
  LaguerreAsymptoticParams p{};
  p.nu = nu;
  p.t = t;
  double rt = std::sqrt(t);
  if (t < 1.0) {
    double s = std::sqrt(1.0 - t);
    double beta = 0.5 * (std::acos(rt) - std::sqrt(t - t * t));
    double b = std::cbrt(1.5 * beta);
    p.b_of_t = b;  // modulus of the imaginary B
    p.b_squared = -b * b;
    p.alpha0 = std::pow(t, 0.5 * (1.0 - a)) * std::sqrt(2.0 * b) / (std::sqrt(s) * std::pow(t, 0.75));
    // sqrt(t-1) -> i sqrt(1-t) turns every bracket term into i*(real); the i cancels 2B = 2ib
    double br = 5.0 / (24.0 * b * b * b) - 0.75 * s / rt - 0.5 * rt / s -
                5.0 / 12.0 * t * rt / (s * s * s) - (a * a - 1.0) * s / rt;
    p.beta1 = p.alpha0 / (2.0 * b) * br;
  } else {
    double s = std::sqrt(t - 1.0);
    double gamma = 0.5 * (std::sqrt(t * t - t) - std::acosh(rt));
    double b = std::cbrt(1.5 * gamma);
    p.b_of_t = b;
    p.b_squared = b * b;
    p.alpha0 = std::pow(t, 0.5 * (1.0 - a)) * std::sqrt(2.0 * b) / (std::sqrt(s) * std::pow(t, 0.75));
    double br = 5.0 / (24.0 * b * b * b) - 0.75 * s / rt + 0.5 * rt / s -
                5.0 / 12.0 * t * rt / (s * s * s) - (a * a - 1.0) * s / rt;
    p.beta1 = p.alpha0 / (2.0 * b) * br;
  }
  return p;
}

}  // namespace

LaguerreAsymptoticParams laguerre_asymptotic_params(int n, double a, double t) {
  if (!(t > 0.0)) throw Error(Errc::domain, "laguerre_airy: t must be positive");
  double nu = 4.0 * n + 2.0 * a + 2.0;
  if (std::fabs(t - 1.0) >= kDeltaT) return lag_params_raw(nu, a, t);
  // removable singularity: B^2, alpha0, beta1 are smooth through t = 1, so
  // they are interpolated from the window edges
  LaguerreAsymptoticParams lo = lag_params_raw(nu, a, 1.0 - kDeltaT);
  LaguerreAsymptoticParams hi = lag_params_raw(nu, a, 1.0 + kDeltaT);
  double w = (t - (1.0 - kDeltaT)) / (2.0 * kDeltaT);
  LaguerreAsymptoticParams p{};
  p.nu = nu;
  p.t = t;
  p.b_squared = (1 - w) * lo.b_squared + w * hi.b_squared;
  p.b_of_t = std::sqrt(std::fabs(p.b_squared));
  p.alpha0 = (1 - w) * lo.alpha0 + w * hi.alpha0;
  p.beta1 = (1 - w) * lo.beta1 + w * hi.beta1;
  return p;
}

double laguerre_airy(int n, double a, double t) {
  if (!(t > 0.0)) throw Error(Errc::domain, "laguerre_airy: t must be positive");
  if (n < 10) throw Error(Errc::capability, "laguerre_airy: needs n >= 10");
  LaguerreAsymptoticParams p = laguerre_asymptotic_params(n, a, t);
  double nu = p.nu;
  double z = std::cbrt(nu * nu) * p.b_squared;
  double sign = (n % 2 == 0) ? 1.0 : -1.0;
  // combine e^{nu t/2} with the scaled Airy so neither factor overflows
  double lead = -a * std::log(2.0) + 0.5 * nu * t;
  AiryPair ap = airy_scaled(z);
  if (z > 0) lead -= 2.0 / 3.0 * z * std::sqrt(z);
  double body = ap.ai * p.alpha0 * std::pow(nu, -1.0 / 3.0) - ap.ai_prime * p.beta1 * std::pow(nu, -5.0 / 3.0);
  return sign * std::exp(lead) * body;
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw Error(Errc::domain, "log_gamma: x must be positive");
  // Lanczos, g = 7, n = 9
  static constexpr double g = 7.0;
  static constexpr double c[9] = {0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                                  771.32342877765313,   -176.61502916214059,   12.507343278686905,
                                  -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  if (x < 0.5) return std::log(kPi / std::fabs(std::sin(kPi * x))) - log_gamma(1.0 - x);
  double xm = x - 1.0;
  double s = c[0];
  for (int i = 1; i < 9; ++i) s += c[i] / (xm + i);
  double t = xm + g + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (xm + 0.5) * std::log(t) - t + std::log(s);
}

}  // namespace semiwig
