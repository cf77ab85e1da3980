#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "semiwig/error.hpp"
#include "semiwig/oscillator.hpp"
#include "semiwig/quadrature.hpp"

using namespace semiwig;

namespace {
const double pi = std::acos(-1.0);
}

TEST_CASE("eigenvalues") {
  CHECK(eigenvalue({0.1, 3, 3}) == doctest::Approx(0.35));
  CHECK(eigenvalue({1.0, 0, 0}) == doctest::Approx(0.5));
  CHECK_THROWS_AS(eigenvalue({0.0, 1, 1}), Error);
  CHECK_THROWS_AS(eigenvalue({1.5, 1, 1}), Error);
  CHECK_THROWS_AS(eigenvalue({0.1, -1, -1}), Error);
}

TEST_CASE("ground state closed form") {
  for (double eps : {0.05, 0.5, 1.0})
    for (double x : {-1.0, 0.0, 0.4}) {
      double ref = std::pow(pi * eps, -0.25) * std::exp(-x * x / (2 * eps));
      CHECK(exact_eigenfunction({eps, 0, 0}, x) == doctest::Approx(ref).epsilon(1e-14));
    }
}

TEST_CASE("orthonormality and parity") {
  const double eps = 0.2;
  for (int n : {0, 1, 7, 30})
    for (int m : {0, 1, 7, 30}) {
      double v = composite_gl([&](double x) { return exact_eigenfunction({eps, n, n}, x) * exact_eigenfunction({eps, m, m}, x); },
                              -6.0, 6.0, 80);
      CHECK(std::fabs(v - (n == m ? 1.0 : 0.0)) < 1e-12);
    }
  for (int n = 0; n < 12; ++n)
    CHECK(exact_eigenfunction({eps, n, n}, -0.37) == doctest::Approx((n % 2 ? -1 : 1) * exact_eigenfunction({eps, n, n}, 0.37)));
  // large n stays finite far from the origin
  CHECK(std::isfinite(exact_eigenfunction({0.01, 150, 150}, 3.0)));
}

TEST_CASE("batched recurrence agrees with single evaluation") {
  std::vector<double> all = exact_eigenfunctions(40, 0.3, 1.1);
  for (int n = 0; n <= 40; ++n) CHECK(all[n] == doctest::Approx(exact_eigenfunction({0.3, n, n}, 1.1)).epsilon(1e-12));
}

TEST_CASE("eigenfunction satisfies the oscillator equation") {
  // -eps^2/2 v'' + x^2/2 v = E v
  const double eps = 0.25, h = 2e-4;
  for (int n : {0, 3, 9})
    for (double x : {-0.8, 0.1, 1.3}) {
      auto v = [&](double y) { return exact_eigenfunction({eps, n, n}, y); };
      double d2 = (v(x + h) - 2 * v(x) + v(x - h)) / (h * h);
      CHECK(std::fabs(-0.5 * eps * eps * d2 + 0.5 * x * x * v(x) - energy(n, eps) * v(x)) < 1e-6);
    }
}

TEST_CASE("wkb action closed form") {
  SemiclassicalParams p{0.1, 4, 4};
  double xt = std::sqrt(2.0 * energy(4, 0.1));
  CHECK(std::fabs(wkb_action(p, xt)) < 1e-14);
  // half the enclosed area between the turning points
  CHECK(wkb_action(p, -xt) == doctest::Approx(-0.5 * pi * xt * xt).epsilon(1e-13));
  double q = integrate_real([&](double t) { return std::sqrt(std::max(0.0, xt * xt - t * t)); }, xt, 0.3, {1e-13});
  CHECK(wkb_action(p, 0.3) == doctest::Approx(q).epsilon(1e-10));
}

TEST_CASE("wkb eigenfunction away from the turning points") {
  const int n = 40;
  const double eps = 1.0 / n;
  WkbEigenfunction w(n, eps);
  CHECK(w.region(0.0) == WkbRegion::oscillatory);
  CHECK(w.region(w.turning_points().second) == WkbRegion::turning_band);
  CHECK(w.region(3.0 * w.turning_points().second) == WkbRegion::right_decay);
  CHECK(w.region(-3.0 * w.turning_points().second) == WkbRegion::left_decay);
  CHECK_THROWS_AS(w.value(w.turning_points().second), Error);
  double worst = 0.0;
  for (double x = -0.7; x <= 0.7; x += 0.01) worst = std::max(worst, std::fabs(w.value(x) - exact_eigenfunction({eps, n, n}, x)));
  double peak = std::pow(eps, -0.25);
  CHECK(worst < 0.02 * peak);
  auto [ap, am] = w.two_phase(0.2);
  CHECK(std::fabs((ap + am).real() - w.value(0.2)) < 1e-12 * peak);
}

TEST_CASE("bohr sommerfeld") {
  WellPotential harm{[](double x) { return 0.5 * x * x; }, [](double x) { return x; }, "harmonic", 0.0};
  for (int n : {0, 3, 10}) CHECK(bohr_sommerfeld(harm, n, 0.1, {1e-6, 10.0}) == doctest::Approx(energy(n, 0.1)).epsilon(1e-10));
  CHECK(action_integral(harm, 2.0) == doctest::Approx(2.0 * pi).epsilon(1e-10));

  // quartic V = x^4: action int sqrt(2(E - x^4)) = c E^{3/4}
  WellPotential quart{[](double x) { return std::pow(x, 4); }, [](double x) { return 4 * std::pow(x, 3); }, "quartic", 0.0};
  double c = action_integral(quart, 1.0);
  const double eps = 0.05;
  for (int n : {2, 8}) {
    double ref = std::pow(pi * eps * (n + 0.5) / c, 4.0 / 3.0);
    CHECK(bohr_sommerfeld(quart, n, eps, {1e-6, 50.0}) == doctest::Approx(ref).epsilon(1e-8));
  }
  auto [a, b] = turning_points(quart, 16.0);
  CHECK(a == doctest::Approx(-2.0));
  CHECK(b == doctest::Approx(2.0));
}

TEST_CASE("projection, truncation and series") {
  const double eps = 0.5;
  // u0 = v_2 projects onto a unit vector
  auto u0 = [&](double x) { return cplx(exact_eigenfunction({eps, 2, 2}, x)); };
  std::vector<cplx> c = project_eigenfunctions(u0, eps, 6, {-7.0, 7.0});
  for (int n = 0; n <= 6; ++n) CHECK(std::abs(c[n] - (n == 2 ? 1.0 : 0.0)) < 1e-12);
  CHECK(default_truncation(c, 1.0) == 2);
  // e^{-iE t/eps} phase for a single mode
  double t = 0.9;
  cplx psi = schrodinger_series(c, eps, 0.4, t);
  cplx ref = std::exp(cplx(0, -energy(2, eps) * t / eps)) * exact_eigenfunction({eps, 2, 2}, 0.4);
  CHECK(std::abs(psi - ref) < 1e-12);
  // full period returns up to a global sign
  cplx back = schrodinger_series(c, eps, 0.4, 2 * pi);
  CHECK(std::abs(back + u0(0.4)) < 1e-12);
}
