#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <boost/math/special_functions/airy.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>

#include "semiwig/error.hpp"
#include "semiwig/specfun.hpp"

using namespace semiwig;
using big = boost::multiprecision::cpp_bin_float_50;

namespace {
// Direct binomial sum for L_n^a(x) in 50-digit arithmetic
double laguerre_oracle(int n, double a, double x) {
  big s = 0, bx = x, ba = a;
  for (int k = 0; k <= n; ++k) {
    big t = boost::multiprecision::tgamma(n + ba + 1) /
            (boost::multiprecision::tgamma(big(n - k + 1)) * boost::multiprecision::tgamma(ba + k + 1) *
             boost::multiprecision::tgamma(big(k + 1)));
    t *= boost::multiprecision::pow(bx, k);
    s += (k % 2 ? -t : t);
  }
  return static_cast<double>(s);
}
}  // namespace

TEST_CASE("airy at the origin and known values") {
  AiryPair a = airy(0.0);
  CHECK(a.ai == doctest::Approx(0.3550280538878172).epsilon(1e-15));
  CHECK(a.ai_prime == doctest::Approx(-0.2588194037928068).epsilon(1e-15));
  CHECK(airy(10.0).ai == doctest::Approx(1.1047532552898687e-10).epsilon(1e-12));
  // first zero
  CHECK(std::fabs(airy(-2.338107410459767).ai) < 1e-14);
}

TEST_CASE("airy against boost across the real line") {
  double worst_near = 0.0, worst_far = 0.0;
  for (double z = -40.0; z <= 40.0; z += 0.0137) {
    double ref = boost::math::airy_ai(z), refp = boost::math::airy_ai_prime(z);
    AiryPair a = airy(z);
    // relative to the local envelope so the zeros do not dominate
    double env = std::hypot(ref, refp / std::sqrt(1.0 + std::fabs(z)));
    double envp = std::hypot(refp, ref * std::sqrt(1.0 + std::fabs(z)));
    double e = std::max(std::fabs(a.ai - ref) / env, std::fabs(a.ai_prime - refp) / envp);
    (std::fabs(z) <= 8 ? worst_near : worst_far) = std::max(std::fabs(z) <= 8 ? worst_near : worst_far, e);
  }
  CHECK(worst_near < 1e-12);
  CHECK(worst_far < 1e-9);
}

TEST_CASE("airy ode residual and decay") {
  const double h = 1e-3;
  for (double z = -10.0; z <= 5.0; z += 0.1) {
    double d2 = (airy(z + h).ai - 2 * airy(z).ai + airy(z - h).ai) / (h * h);
    CHECK(std::fabs(d2 - z * airy(z).ai) < 1e-5);
  }
  double prev = airy(2.0).ai;
  for (double z = 2.5; z < 30; z += 0.5) {
    double v = airy(z).ai;
    CHECK(v < prev);
    prev = v;
  }
  CHECK(airy(200.0).ai == 0.0);
}

TEST_CASE("scaled and log airy agree with the plain values") {
  for (double z : {0.0, 0.5, 3.0, 7.0, 15.0, 30.0}) {
    double zeta = 2.0 / 3.0 * std::pow(z, 1.5);
    CHECK(airy_scaled(z).ai * std::exp(-zeta) == doctest::Approx(airy(z).ai).epsilon(1e-12));
    CHECK(log_airy(z) == doctest::Approx(std::log(airy(z).ai)).epsilon(1e-12));
  }
  CHECK(std::isfinite(log_airy(1e4)));
  CHECK(log_airy(1e4) < -6e5);
}

TEST_CASE("hermite values, parity and overflow handling") {
  CHECK(hermite(0, 3.3) == 1.0);
  CHECK(hermite(1, 1.5) == doctest::Approx(3.0));
  CHECK(hermite(4, 0.0) == doctest::Approx(12.0));
  for (int n = 0; n <= 60; ++n)
    for (double x : {0.3, 1.7}) CHECK(hermite(n, -x) == doctest::Approx((n % 2 ? -1 : 1) * hermite(n, x)));
  CHECK(std::isfinite(hermite(200, 3.0)));
  CHECK_THROWS_AS(hermite(201, 0.5), Error);
}

TEST_CASE("laguerre values and extended precision oracle") {
  CHECK(laguerre(0, 1.3, 7.0) == 1.0);
  CHECK(laguerre(1, 2.0, 0.5) == doctest::Approx(2.5));
  CHECK(laguerre(2, 0.0, 2.0) == doctest::Approx(-1.0));
  for (int n : {5, 17, 40, 60})
    for (double a : {0.0, 1.0, 2.5})
      for (double x : {0.1, 1.0, 10.0}) {
        double ref = laguerre_oracle(n, a, x);
        CHECK(std::fabs(laguerre(n, a, x) - ref) <= 1e-9 * std::fabs(ref));
      }
  CHECK_THROWS_AS(laguerre(3, -1.0, 0.5), Error);
}

TEST_CASE("airy-type laguerre asymptotics") {
  auto rel = [](int n, double t) {
    double nu = 4.0 * n + 2.0;
    double ref = laguerre_oracle(n, 0.0, nu * t);
    return std::fabs(laguerre_airy(n, 0.0, t) / ref - 1.0);
  };
  double e50 = rel(50, 0.9), e100 = rel(100, 0.9);
  CHECK(e50 < 1e-2);
  CHECK(e100 < e50);
  for (double t : {1.0 - 5e-4, 1.0, 1.0 + 5e-4}) CHECK(std::isfinite(laguerre_airy(60, 1.0, t)));
  // across the window the value stays close to the polynomial
  CHECK(rel(80, 1.0) < 1e-3);
  LaguerreAsymptoticParams p = laguerre_asymptotic_params(50, 0.0, 0.5);
  CHECK(p.b_squared < 0.0);
  CHECK(p.alpha0 > 0.0);
  CHECK(laguerre_asymptotic_params(50, 0.0, 1.5).b_squared > 0.0);
  CHECK_THROWS_AS(laguerre_airy(50, 0.0, 0.0), Error);
}

TEST_CASE("log gamma") {
  CHECK(log_gamma(1.0) == doctest::Approx(0.0));
  CHECK(std::fabs(log_gamma(2.0)) < 1e-14);
  CHECK(log_gamma(11.0) == doctest::Approx(std::log(3628800.0)).epsilon(1e-13));
  for (double x : {0.3, 2.7, 55.5, 170.2}) CHECK(log_gamma(x) == doctest::Approx(std::lgamma(x)).epsilon(1e-12));
  CHECK_THROWS_AS(log_gamma(0.0), Error);
  CHECK_THROWS_AS(log_gamma(-2.0), Error);
}

TEST_CASE("airy constant mutation hook is detectable") {
  set_airy_constant_perturbation(1e-9);
  double perturbed = airy(0.0).ai;
  set_airy_constant_perturbation(0.0);
  CHECK(std::fabs(perturbed - 0.3550280538878172) > 1e-12);
  CHECK(airy(0.0).ai == doctest::Approx(0.3550280538878172).epsilon(1e-15));
}
