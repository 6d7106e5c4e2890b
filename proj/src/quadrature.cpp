#include "levylab/quadrature.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace levylab {

namespace {

QuadRule compute_gl(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
  QuadRule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  const double pi = std::acos(-1.0);
  for (int i = 0; i < n; ++i) {
    // Tricomi initial guess, then Newton on P_n.
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int k = 0; k < n; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k + 1.0) * x * p1 - k * p2) / (k + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    r.nodes[i] = x;
    r.weights[i] = 2.0 / ((1.0 - x * x) * pp * pp);
  }
  return r;
}

}  // namespace

const QuadRule& gauss_legendre(int n) {
  static std::map<int, QuadRule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_gl(n)).first;
  return it->second;
}

double gl_integrate(const std::function<double(double)>& f, double a, double b, int n) {
  const QuadRule& r = gauss_legendre(n);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += r.weights[i] * f(mid + half * r.nodes[i]);
  return s * half;
}

double gl_integrate_log_panels(const std::function<double(double)>& f, double a, double b,
                               int n_per_panel, double ratio) {
  if (!(a > 0.0) || !(b > a)) throw std::invalid_argument("gl_integrate_log_panels: need 0 < a < b");
  double s = 0.0;
  double lo = a;
  while (lo < b) {
    const double hi = std::min(lo * ratio, b);
    s += gl_integrate(f, lo, hi, n_per_panel);
    lo = hi;
  }
  return s;
}

double gl_integrate_oscillatory(const std::function<double(double)>& f, double a, double b,
                                double omega, int base_order, double panel_ratio) {
  if (!(b > a)) return 0.0;
  double s = 0.0;
  // Geometric panels when the range allows, plain split otherwise.
  std::vector<std::pair<double, double>> panels;
  if (a > 0.0) {
    double lo = a;
    while (lo < b) {
      const double hi = std::min(lo * panel_ratio, b);
      panels.emplace_back(lo, hi);
      lo = hi;
    }
  } else {
    panels.emplace_back(a, b);
  }
  for (auto [lo, hi] : panels) {
    // n > omega*width/2 puts GL past the oscillation barrier; +base margin.
    const double width = hi - lo;
    int n = base_order + static_cast<int>(std::ceil(std::abs(omega) * width / 3.0));
    n = std::min(n, 24000);
    if (n <= 64) {
      s += gl_integrate(f, lo, hi, n);
    } else {
      // Split large panels so cached rule orders stay bounded.
      const int pieces = (n + 63) / 64;
      const double step = width / pieces;
      for (int p = 0; p < pieces; ++p) {
        s += gl_integrate(f, lo + p * step, lo + (p + 1) * step, 64);
      }
    }
  }
  return s;
}

namespace {

double simpson_rec(const std::function<double(double)>& f, double a, double m, double b,
                   double fa, double fm, double fb, double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return simpson_rec(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_rec(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol, int max_depth) {
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_rec(f, a, m, b, fa, fm, fb, whole, tol, max_depth);
}

double tanh_sinh(const std::function<double(double)>& f, double a, double b, double tol) {
  // x = mid + half*tanh(pi/2 sinh(t)); trapezoid in t with level doubling.
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double pi_half = 0.5 * std::acos(-1.0);
  auto g = [&](double t) {
    const double s = std::sinh(t);
    const double c = std::cosh(t);
    const double u = std::tanh(pi_half * s);
    const double x = mid + half * u;
    if (x <= std::min(a, b) || x >= std::max(a, b)) return 0.0;
    const double sech = 1.0 / std::cosh(pi_half * s);
    const double w = pi_half * c * sech * sech;
    const double fx = f(x);
    if (!std::isfinite(fx)) return 0.0;
    return fx * w;
  };
  const double tmax = 6.5;
  double h = 1.0;
  double sum = g(0.0);
  for (double t = h; t < tmax; t += h) sum += g(t) + g(-t);
  double prev = sum * h * half;
  for (int level = 1; level <= 12; ++level) {
    h *= 0.5;
    double add = 0.0;
    for (double t = h; t < tmax; t += 2.0 * h) add += g(t) + g(-t);
    sum += add;
    const double cur = sum * h * half;
    if (level >= 3 && std::abs(cur - prev) <= tol * std::max(1.0, std::abs(cur))) return cur;
    prev = cur;
  }
  return prev;
}

}  // namespace levylab
