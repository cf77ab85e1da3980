#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

namespace semiwig {

using cplx = std::complex<double>;

// Gauss-Legendre rule on [-1,1], nodes ascending
struct GaussRule {
  std::vector<double> x, w;
};
const GaussRule& gauss_legendre(int n);

struct QuadOptions {
  double abs_tol = 1e-10;
  double rel_tol = 0.0;
  std::size_t max_nodes = std::size_t(1) << 18;
  // upper bound on initial panel width; <= 0 means a single panel
  double max_panel = 0.0;
  int max_depth = 40;
};

struct QuadResult {
  cplx value;
  double error;
  std::size_t nodes;
};

// Adaptive 24-point panels with bisection. Throws Errc::accuracy when the
// node budget runs out before the tolerance is met.
QuadResult integrate(const std::function<cplx(double)>& f, double a, double b,
                     const QuadOptions& opt = {});

// Same, but initial panels are cut so that no panel spans more than two
// local wavelengths of e^{i*omega(x)*x}, omega supplied by the caller.
QuadResult integrate_oscillatory(const std::function<cplx(double)>& f, double a, double b,
                                 const std::function<double(double)>& local_freq,
                                 const QuadOptions& opt = {});

double integrate_real(const std::function<double(double)>& f, double a, double b,
                      const QuadOptions& opt = {});

// Fixed composite rule, handy for smooth integrands on known scales
double composite_gl(const std::function<double(double)>& f, double a, double b, int panels,
                    int order = 24);

}  // namespace semiwig
