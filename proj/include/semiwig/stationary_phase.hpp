#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "semiwig/quadrature.hpp"

namespace semiwig {

struct Interval {
  double lo, hi;
};

// phi(sigma, alpha) with analytic sigma-derivatives and an amplitude f(sigma).
// Callables must be stateless; the constructor checks the derivatives
// against central differences on the window and throws Errc::domain.
class PhaseModel {
 public:
  using Fn = std::function<double(double, double)>;
  using Amp = std::function<cplx(double)>;

  PhaseModel(Fn phi, Fn dphi, Fn d2phi, Fn d3phi, Amp amplitude, Interval window,
             std::vector<double> probe_alphas = {0.0}, Fn dphi_dalpha = nullptr);

  double phi(double s, double a) const { return phi_(s, a); }
  double dphi(double s, double a) const { return dphi_(s, a); }
  double d2phi(double s, double a) const { return d2phi_(s, a); }
  double d3phi(double s, double a) const { return d3phi_(s, a); }
  // mixed derivative d^2 phi / dsigma dalpha; finite difference if not supplied
  double dphi_dalpha(double s, double a) const;
  cplx amplitude(double s) const { return amp_(s); }
  Interval window() const { return window_; }

  // phi = sigma^3/3 - alpha*sigma with the given amplitude
  static PhaseModel cubic(Amp amplitude, Interval window);
  // phi = c*sigma^2
  static PhaseModel quadratic(double c, Amp amplitude, Interval window);

 private:
  Fn phi_, dphi_, d2phi_, d3phi_, dphi_da_;
  Amp amp_;
  Interval window_;
};

struct OscQuadOptions {
  double abs_tol = 1e-10;
  // add the integration-by-parts tails of a non-decaying amplitude held
  // constant outside the window
  bool open_ends = false;
};

// Brute-force value of int f(s) e^{i lambda phi(s,alpha)} ds over the window.
cplx oscillatory_quadrature(const PhaseModel& m, double alpha, double lambda, Interval window,
                            const OscQuadOptions& opt = {});

// Leading stationary-phase term at a simple stationary point.
cplx standard_sp(const PhaseModel& m, double alpha, double lambda, double point);

struct Mat2 {
  double a11, a12, a21, a22;
};
cplx standard_sp_2d(cplx f00, const Mat2& hessian, double phase00, double lambda);

enum class SaddleKind { two_real, coalesced, complex_pair, none };
const char* saddle_kind_name(SaddleKind k);

struct StationaryPointSet {
  SaddleKind kind = SaddleKind::none;
  // two_real: {x1, x2} with phi''(x1) < 0 < phi''(x2)
  // coalesced: {c, c}
  // complex_pair: {re, im} of the root re + i*im (conjugate implied)
  std::vector<double> points;
  std::vector<double> second_derivs;
};

inline constexpr double kCoalesceTol = 1e-6;

StationaryPointSet find_saddles(const PhaseModel& m, double alpha, Interval bracket);

struct UniformSpOptions {
  bool small_alpha = false;
  bool formal = false;
  // point where the saddles merge at alpha = 0, used by the small-alpha path
  double merge_point = 0.0;
};

struct UniformSpResult {
  double phi0 = 0.0;
  double xi = 0.0;
  cplx a0 = 0.0;
  cplx b0 = 0.0;
  cplx value = 0.0;
};

UniformSpResult uniform_sp(const PhaseModel& m, double alpha, double lambda,
                           const StationaryPointSet& saddles, const UniformSpOptions& opt = {});

// Three-term split of eps^{-1} Ai((x^2-alpha^2)/eps): two Airy peaks and a
// coefficient multiplying delta(x).
struct AiryDecomposition {
  double left;
  double right;
  double center_weight;
};

inline constexpr double kAlphaMin = 1e-3;

AiryDecomposition airy_decompose(double x, double alpha, double eps);

}  // namespace semiwig
