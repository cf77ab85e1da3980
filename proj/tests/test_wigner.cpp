#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <boost/math/special_functions/laguerre.hpp>
#include <cmath>

#include "semiwig/error.hpp"
#include "semiwig/oscillator.hpp"
#include "semiwig/wigner.hpp"

using namespace semiwig;

namespace {
const double pi = std::acos(-1.0);

std::function<cplx(double)> mode(int n, double eps) {
  return [=](double x) { return cplx(exact_eigenfunction({eps, n, n}, x)); };
}
}  // namespace

TEST_CASE("ground state wigner function") {
  const double eps = 0.3;
  CHECK(exact_wigner_eigenfunction(0, 0, eps, 0, 0).real() == doctest::Approx(1.0 / (pi * eps)));
  for (double x : {0.2, -0.9})
    for (double p : {0.0, 0.7}) {
      double ref = std::exp(-(x * x + p * p) / eps) / (pi * eps);
      CHECK(std::abs(exact_wigner_eigenfunction(0, 0, eps, x, p) - ref) < 1e-14);
    }
  CHECK(exact_wigner_eigenfunction(1, 1, 1.0, 0, 0).real() == doctest::Approx(-1.0 / pi));
}

TEST_CASE("diagonal laguerre form against boost") {
  const double eps = 0.1;
  for (int n : {3, 12, 25})
    for (double r : {0.2, 0.8, 1.5}) {
      double x = r * std::cos(0.4), p = r * std::sin(0.4);
      double ref = (n % 2 ? -1 : 1) / (pi * eps) * std::exp(-r * r / eps) * boost::math::laguerre(n, 2 * r * r / eps);
      CHECK(std::abs(exact_wigner_eigenfunction(n, n, eps, x, p) - ref) < 1e-10 / eps);
    }
}

TEST_CASE("closed form agrees with the numerical transform") {
  const double eps = 0.5;
  DecayCertificate cert{6.0, 4.0};
  for (auto [n, m] : {std::pair{2, 2}, std::pair{3, 1}, std::pair{0, 4}})
    for (double x : {-0.6, 0.4})
      for (double p : {-0.3, 1.1}) {
        cplx num = wigner_point(mode(n, eps), mode(m, eps), eps, x, p, cert);
        CHECK(std::abs(num - exact_wigner_eigenfunction(n, m, eps, x, p)) < 1e-9);
      }
}

TEST_CASE("conjugation symmetry and reality") {
  const double eps = 0.2;
  for (int n = 0; n < 6; ++n)
    for (int m = 0; m < 6; ++m) {
      cplx a = exact_wigner_eigenfunction(n, m, eps, 0.3, -0.5);
      cplx b = exact_wigner_eigenfunction(m, n, eps, 0.3, -0.5);
      CHECK(std::abs(a - std::conj(b)) < 1e-12);
      if (n == m) CHECK(std::fabs(a.imag()) < 1e-14);
    }
}

TEST_CASE("marginal recovers the density") {
  const double eps = 0.5;
  PhaseSpaceGrid g{-4, 4, -5, 5, 81, 201};
  ComplexField f = exact_wigner_field(2, 2, eps, g);
  Marginals m = marginals(f);
  for (int i = 10; i < 70; i += 7) {
    double v = exact_eigenfunction({eps, 2, 2}, g.x(i));
    CHECK(std::abs(m.density[i] - v * v) < 1e-8);
    // real eigenfunctions carry no current
    CHECK(std::abs(m.flux[i]) < 1e-10);
  }
  CHECK(std::abs(m.total - 1.0) < 1e-6);
  PhaseSpaceGrid small{-4, 4, -1, 1, 21, 21};
  CHECK_THROWS_AS(marginals(exact_wigner_field(2, 2, eps, small)), Error);
}

TEST_CASE("eigencurve geometry") {
  EigencurveGeometry g = EigencurveGeometry::make(10, 6, 0.1);
  CHECK(g.big_e == doctest::Approx(0.5 * (energy(10, 0.1) + energy(6, 0.1))));
  CHECK(g.small_e == doctest::Approx(0.2));
  CHECK(g.r_nm > g.rho_nm);
  const double e2 = 2.0 * energy(10, 0.1);
  EigencurveGeometry d = EigencurveGeometry::make(10, 10, 0.1);
  CHECK(stationary_geometry_diag(d, 2.0 * std::sqrt(e2), 0.0).region == DiagRegion::exterior);
  CHECK(stationary_geometry_diag(d, std::sqrt(e2), 0.0).region == DiagRegion::on_curve);
  CHECK(stationary_geometry_diag(d, 0.0, 0.9 * std::sqrt(e2)).region == DiagRegion::meniscus);
  CHECK(stationary_geometry_diag(d, 0.5 * std::sqrt(e2), 0.01).region == DiagRegion::dual_interior);
  CHECK_THROWS_AS(stationary_geometry_diag(d, 0.0, 0.0), Error);

  double mid = 0.5 * (g.r_nm + g.rho_nm);
  OffdiagStationary ring = stationary_geometry_offdiag(g, mid, 0.0);
  CHECK(ring.region == OffdiagRegion::ring);
  CHECK(!ring.complex);
  OffdiagStationary inner = stationary_geometry_offdiag(g, 0.0, 0.5 * g.rho_nm);
  CHECK(inner.region == OffdiagRegion::inner_disk);
  CHECK(inner.complex);
  CHECK(stationary_geometry_offdiag(g, 0.0, 2.0 * g.r_nm).region == OffdiagRegion::exterior);
  CHECK(stationary_geometry_offdiag(g, g.r_nm, 0.0).region == OffdiagRegion::on_outer_curve);
  CHECK_THROWS_AS(stationary_geometry_offdiag(d, 1.0, 0.0), Error);
}

TEST_CASE("airy approximation tracks the exact diagonal") {
  const int n = 40;
  const double eps = 0.025;
  EigencurveGeometry g = EigencurveGeometry::make(n, n, eps);
  double peak = 1.0 / (pi * eps), worst = 0.0;
  for (double r : {0.3, 0.6, 0.85, 1.2})
    worst = std::max(worst, std::fabs(airy_diagonal(g, r * 0.8, r * 0.6) - exact_wigner_eigenfunction(n, n, eps, r * 0.8, r * 0.6).real()));
  CHECK(worst < 0.1 * peak);
  CHECK_THROWS_AS(airy_diagonal(EigencurveGeometry::make(3, 3, 0.1), 0.5, 0.5), Error);
}

TEST_CASE("classical limit on the circle") {
  auto one = [](double, double) { return 1.0; };
  CHECK(std::abs(classical_limit_eigenfunction(2.0, 0, one) - pi) < 1e-12);
  // e^{-i theta} against x: half the circumference weight times radius
  auto xf = [](double x, double) { return x; };
  CHECK(std::abs(classical_limit_eigenfunction(4.0, 1, xf) - pi) < 1e-12);
  CHECK(std::abs(classical_limit_eigenfunction(4.0, 0, xf)) < 1e-12);
  CHECK_THROWS_AS(classical_limit_eigenfunction(-1.0, 0, one), Error);
}

TEST_CASE("grid helpers") {
  PhaseSpaceGrid g = PhaseSpaceGrid::covering(8, 0.5, 11, 11);
  CHECK(g.covers(8, 0.5));
  CHECK(!g.covers(20, 0.5));
  PhaseSpaceGrid bad{1, -1, -1, 1, 5, 5};
  CHECK_THROWS_AS(bad.validate(), Error);
  ComplexField f(g);
  f.at(2, 3) = cplx(0.0, 2.0);
  CHECK(f.max_abs() == 2.0);
  CHECK(f.max_imag() == 2.0);
  f.at(0, 0) = std::nan("");
  CHECK_THROWS_AS(f.check_finite(), Error);
}
