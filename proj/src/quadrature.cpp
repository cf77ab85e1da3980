#include "semiwig/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "semiwig/error.hpp"

namespace semiwig {

namespace {

GaussRule build_rule(int n) {
  GaussRule r;
  r.x.resize(n);
  r.w.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (int k = 1; k <= n; ++k) {
        double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * k - 1.0) * z * p2 - (k - 1.0) * p3) / k;
      }
      dp = n * (z * p1 - p2) / (z * z - 1.0);
      double dz = p1 / dp;
      z -= dz;
      if (std::fabs(dz) < 1e-16) break;
    }
    double p1 = 1.0, p2 = 0.0;
    for (int k = 1; k <= n; ++k) {
      double p3 = p2;
      p2 = p1;
      p1 = ((2.0 * k - 1.0) * z * p2 - (k - 1.0) * p3) / k;
    }
    dp = n * (z * p1 - p2) / (z * z - 1.0);
    double w = 2.0 / ((1.0 - z * z) * dp * dp);
    r.x[i] = -z;
    r.x[n - 1 - i] = z;
    r.w[i] = w;
    r.w[n - 1 - i] = w;
  }
  return r;
}

constexpr int kPanelOrder = 24;

cplx panel(const std::function<cplx(double)>& f, double a, double b) {
  const GaussRule& g = gauss_legendre(kPanelOrder);
  double c = 0.5 * (a + b), h = 0.5 * (b - a);
  cplx s = 0.0;
  for (int i = 0; i < kPanelOrder; ++i) s += g.w[i] * f(c + h * g.x[i]);
  return s * h;
}

struct Walker {
  const std::function<cplx(double)>& f;
  const QuadOptions& opt;
  std::size_t nodes = 0;
  double err = 0.0;
  bool exhausted = false;

  cplx run(double a, double b, cplx whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    cplx left = panel(f, a, m), right = panel(f, m, b);
    nodes += 2 * kPanelOrder;
    cplx both = left + right;
    double e = std::abs(both - whole);
    if (e <= tol || depth >= opt.max_depth || std::fabs(b - a) < 1e-14 * (1 + std::fabs(a))) {
      err += e;
      return both;
    }
    if (nodes + 4 * kPanelOrder > opt.max_nodes) {
      exhausted = true;
      err += e;
      return both;
    }
    return run(a, m, left, 0.5 * tol, depth + 1) + run(m, b, right, 0.5 * tol, depth + 1);
  }
};

QuadResult integrate_panels(const std::function<cplx(double)>& f, const std::vector<double>& cuts,
                            const QuadOptions& opt) {
  Walker w{f, opt};
  std::size_t np = cuts.size() - 1;
  std::vector<cplx> first(np);
  cplx total = 0.0;
  for (std::size_t i = 0; i < np; ++i) {
    first[i] = panel(f, cuts[i], cuts[i + 1]);
    total += first[i];
  }
  w.nodes = np * kPanelOrder;
  double tol = std::max(opt.abs_tol, opt.rel_tol * std::abs(total));
  cplx sum = 0.0;
  double span = cuts.back() - cuts.front();
  for (std::size_t i = 0; i < np; ++i) {
    double share = span > 0 ? tol * (cuts[i + 1] - cuts[i]) / span : tol;
    sum += w.run(cuts[i], cuts[i + 1], first[i], share, 0);
  }
  if (w.exhausted && w.err > tol)
    throw Error(Errc::accuracy, "quadrature node budget exceeded", w.err);
  return {sum, w.err, w.nodes};
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
  static std::mutex mu;
  static std::map<int, GaussRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_rule(n)).first;
  return it->second;
}

QuadResult integrate(const std::function<cplx(double)>& f, double a, double b,
                     const QuadOptions& opt) {
  std::vector<double> cuts{a};
  if (opt.max_panel > 0 && b - a > opt.max_panel) {
    int k = static_cast<int>(std::ceil((b - a) / opt.max_panel));
    for (int i = 1; i < k; ++i) cuts.push_back(a + (b - a) * i / k);
  }
  cuts.push_back(b);
  return integrate_panels(f, cuts, opt);
}

QuadResult integrate_oscillatory(const std::function<cplx(double)>& f, double a, double b,
                                 const std::function<double(double)>& local_freq,
                                 const QuadOptions& opt) {
  // 24 nodes per panel at >= 12 nodes per wavelength: panel <= two wavelengths
  std::vector<double> cuts{a};
  double x = a;
  double cap = opt.max_panel > 0 ? opt.max_panel : (b - a);
  while (x < b) {
    double w = std::fabs(local_freq(x));
    double step = cap;
    if (w > 0) step = std::min(step, 2.0 * 2.0 * std::numbers::pi / w);
    // look ahead so a rising frequency inside the panel is still respected
    double w2 = std::fabs(local_freq(std::min(b, x + step)));
    if (w2 > 0) step = std::min(step, 2.0 * 2.0 * std::numbers::pi / w2);
    step = std::max(step, (b - a) * 1e-9);
    x = std::min(b, x + step);
    cuts.push_back(x);
    if (cuts.size() * kPanelOrder > opt.max_nodes)
      throw Error(Errc::accuracy, "oscillation needs more panels than the node budget", INFINITY);
  }
  return integrate_panels(f, cuts, opt);
}

double integrate_real(const std::function<double(double)>& f, double a, double b,
                      const QuadOptions& opt) {
  return integrate([&](double x) { return cplx(f(x), 0.0); }, a, b, opt).value.real();
}

double composite_gl(const std::function<double(double)>& f, double a, double b, int panels,
                    int order) {
  const GaussRule& g = gauss_legendre(order);
  double h = (b - a) / panels, s = 0.0;
  for (int p = 0; p < panels; ++p) {
    double c = a + (p + 0.5) * h;
    double ps = 0.0;
    for (int i = 0; i < order; ++i) ps += g.w[i] * f(c + 0.5 * h * g.x[i]);
    s += ps;
  }
  return s * 0.5 * h;
}

}  // namespace semiwig
