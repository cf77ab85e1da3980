#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "semiwig/error.hpp"
#include "semiwig/oscillator.hpp"
#include "semiwig/quadrature.hpp"
#include "semiwig/solver.hpp"

using namespace semiwig;

namespace {
const double pi = std::acos(-1.0);

InitialDatum mode_datum(int n, double eps) {
  InitialDatum d;
  d.eps = eps;
  d.support = {-8.0, 8.0};
  d.a0 = [=](double x) { return exact_eigenfunction({eps, n, n}, x); };
  d.s0 = phase_polynomial({0.0});
  return d;
}

InitialDatum gaussian(double eps, double c) {
  InitialDatum d;
  d.eps = eps;
  d.support = {c - 6.0, c + 6.0};
  d.a0 = [=](double x) { return std::pow(pi * eps, -0.25) * std::exp(-(x - c) * (x - c) / (2 * eps)); };
  d.s0 = phase_polynomial({0.0});
  return d;
}
}  // namespace

TEST_CASE("eigenfunction datum gives a single coefficient") {
  SpectralSolution s = coefficients_exact(mode_datum(5, 0.5), 10);
  for (int n = 0; n <= 10; ++n)
    for (int m = 0; m <= 10; ++m) CHECK(std::abs(s.c(n, m) - ((n == 5 && m == 5) ? 1.0 : 0.0)) < 1e-10);
  CHECK(provenance_name(s.provenance[0]) == std::string("exact-quadrature"));
}

TEST_CASE("hermitian and parseval") {
  InitialDatum d = gaussian(0.3, 0.8);
  SpectralSolution s = coefficients_exact(d);
  CHECK(s.hermitian_defect() < 1e-14);
  CHECK(s.trace() == doctest::Approx(d.norm2()).epsilon(1e-6));
  CHECK(d.norm2() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(coefficients_exact(d, 250), Error);
}

TEST_CASE("coherent state coefficients are poisson") {
  // displaced ground state: |a_n|^2 = e^{-mu} mu^n / n!, mu = c^2/(2 eps)
  const double eps = 0.3, c = 0.8, mu = c * c / (2 * eps);
  SpectralSolution s = coefficients_exact(gaussian(eps, c), 20);
  for (int n = 0; n <= 12; ++n) CHECK(s.c(n, n).real() == doctest::Approx(std::exp(-mu + n * std::log(mu) - std::lgamma(n + 1.0))).epsilon(1e-8));
}

TEST_CASE("evolution rotates phase space") {
  const double eps = 0.5;
  SpectralSolution s = SpectralSolution::from_amplitudes({std::sqrt(0.5), 0.0, std::sqrt(0.5) * cplx(0, 1), 0.0}, eps);
  const double t = 0.8;
  for (double x : {0.3, -0.7})
    for (double p : {0.0, 0.9}) {
      // W(x, p, t) = W(x cos t - p sin t, x sin t + p cos t, 0)
      cplx a = evolve_point(s, Backend::exact_laguerre, x, p, t);
      cplx b = evolve_point(s, Backend::exact_laguerre, x * std::cos(t) - p * std::sin(t), x * std::sin(t) + p * std::cos(t), 0.0);
      CHECK(std::abs(a - b) < 1e-12);
      CHECK(std::abs(evolve_point(s, Backend::exact_laguerre, x, p, 2 * pi) - evolve_point(s, Backend::exact_laguerre, x, p, 0.0)) < 1e-12);
    }
  PhaseSpaceGrid g{-2, 2, -2, 2, 9, 9};
  CHECK_THROWS_AS(evolve(s, Backend::exact_laguerre, g, -1.0), Error);
  CHECK(evolve(s, Backend::exact_laguerre, g, 0.3).max_imag() < 1e-14);
}

TEST_CASE("backends and substitution") {
  CHECK(parse_backend("exact") == Backend::exact_laguerre);
  CHECK(parse_backend("airy") == Backend::airy_approx);
  CHECK(parse_backend("hybrid") == Backend::hybrid);
  CHECK_THROWS_AS(parse_backend("fft"), Error);
  SpectralSolution s = SpectralSolution::from_amplitudes({std::sqrt(0.5), 0.0, 0.0, std::sqrt(0.5)}, 0.5);
  PhaseSpaceGrid g{-2, 2, -2, 2, 5, 5};
  FieldReport r;
  ComplexField h = evolve(s, Backend::hybrid, g, 0.0, &r);
  // every mode below the Airy range is reported
  CHECK(r.substituted.size() == 4);
  CHECK(linf_distance(h, evolve(s, Backend::exact_laguerre, g, 0.0)) < 1e-14);
  CHECK_THROWS_AS(evolve(s, Backend::airy_approx, g, 0.0), Error);
}

TEST_CASE("amplitude from the exact backend matches the wave function") {
  const double eps = 0.3;
  InitialDatum d = gaussian(eps, 0.8);
  SpectralSolution s = coefficients_exact(d, 30);
  std::vector<cplx> a(31);
  for (int n = 0; n <= 30; ++n) a[n] = std::sqrt(s.c(n, n).real());
  std::vector<double> xs{-0.5, 0.0, 0.6, 1.2};
  AmplitudeDecomposition amp = amplitude(s, Backend::exact_laguerre, xs, 0.7);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double ref = std::norm(schrodinger_series(a, eps, xs[i], 0.7));
    CHECK(amp.total[i] == doctest::Approx(ref).epsilon(1e-8));
    CHECK(amp.coherent[i] + amp.incoherent[i] == doctest::Approx(amp.total[i]));
  }
}

TEST_CASE("quadratic phase closed forms") {
  const double eps = 0.1;
  InitialDatum d;
  d.eps = eps;
  d.support = {-3.0, 3.0};
  d.a0 = [](double x) { return std::exp(-x * x); };
  d.s0 = phase_quadratic(1.0);
  std::vector<double> c = coefficients_quadratic_phase(d, 30);
  CHECK(c.size() == 31);
  for (int n : {0, 7, 30}) {
    double e = energy(n, eps);
    CHECK(c[n] == doctest::Approx(eps / std::sqrt(e) * std::exp(-2.0 * e)));
  }
  for (int n = 0; n < 40; ++n) {
    // squared Airy factor: never negative, at most the smooth envelope scale
    double one = coefficient_quadratic_one(n, eps);
    CHECK(one >= 0.0);
    CHECK(one < 4.0 * eps / std::sqrt(energy(n, eps)));
    CHECK(std::isfinite(coefficient_quadratic_gaussian(n, eps)));
  }
  d.s0 = phase_cubic();
  CHECK_THROWS_AS(coefficients_quadratic_phase(d, 10), Error);
}

TEST_CASE("stationary roots for a cubic phase") {
  const double eps = 0.01;
  InitialDatum d;
  d.eps = eps;
  d.support = {0.0, 1.0};
  d.a0 = [](double) { return 1.0; };
  d.s0 = phase_cubic();
  const int n = 40;
  std::vector<double> roots = stationary_roots(d, n);
  REQUIRE(!roots.empty());
  for (double x : roots) CHECK(std::pow(x, 4) + x * x == doctest::Approx(2 * energy(n, eps)).epsilon(1e-9));
  double expect = 0.0;
  for (double x : roots) expect += eps / std::fabs(-x * x * (-2 * x) + x);
  CHECK(coefficient_cubic_phase(d, n) == doctest::Approx(expect));
}

TEST_CASE("datum validation and phase factories") {
  InitialDatum d = gaussian(0.2, 0.0);
  d.s0 = phase_polynomial({0.0, 1.0, 0.5});
  CHECK_NOTHROW(d.validate());
  d.s0.d2s = [](double) { return 7.0; };
  CHECK_THROWS_AS(d.validate(), Error);
  CHECK_THROWS_AS(phase_polynomial({1, 2, 3, 4, 5, 6, 7}), Error);
  CHECK(std::abs(gaussian(0.2, 0.0)(20.0)) == 0.0);
}

TEST_CASE("wigner equation residual") {
  const double eps = 0.5;
  SpectralSolution s = SpectralSolution::from_amplitudes({std::sqrt(0.5), 0.0, 0.0, std::sqrt(0.5)}, eps);
  FieldSampler w = [&](double x, double p, double t) { return evolve_point(s, Backend::exact_laguerre, x, p, t).real(); };
  PhaseSpaceGrid g{-2.5, 2.5, -2.5, 2.5, 12, 12};
  double h = eps / 20;
  double r1 = liouville_residual(w, g, 0.4, h, {0, 0, 0.5}, eps);
  double r2 = liouville_residual(w, g, 0.4, h / 2, {0, 0, 0.5}, eps);
  CHECK(r1 / r2 == doctest::Approx(4.0).epsilon(0.05));
  // a wrong potential leaves an O(1) residual
  CHECK(liouville_residual(w, g, 0.4, h, {0, 0, 1.0}, eps) > 100 * r1);
  CHECK_THROWS_AS(liouville_residual(w, g, 0.4, 1e-7, {0, 0, 0.5}, eps), Error);
}
