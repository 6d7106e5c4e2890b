#pragma once

#include <cstdint>
#include <cstdio>
#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace levylab {

// Pairwise tree reduction. Summation order depends only on the element
// order, never on thread count, so reductions stay reproducible.
inline double pairwise_sum(std::span<const double> xs) {
  const std::size_t n = xs.size();
  if (n == 0) return 0.0;
  if (n <= 8) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(xs.subspan(0, half)) + pairwise_sum(xs.subspan(half));
}

inline double pairwise_sum(const std::vector<double>& xs) {
  return pairwise_sum(std::span<const double>(xs));
}

struct LinearFit {
  double slope{0.0};
  double intercept{0.0};
};

// Ordinary least squares on (x, y).
inline LinearFit linear_fit(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("linear_fit: need at least two points");
  }
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw std::invalid_argument("linear_fit: degenerate abscissae");
  LinearFit f;
  f.slope = (n * sxy - sx * sy) / denom;
  f.intercept = (sy - f.slope * sx) / n;
  return f;
}

// Log-log power-law fit, y ~ C * x^p; returns p.
inline double loglog_slope(std::span<const double> x, std::span<const double> y) {
  std::vector<double> lx(x.size()), ly(y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) {
      throw std::invalid_argument("loglog_slope: nonpositive data");
    }
    lx[i] = std::log(x[i]);
    ly[i] = std::log(y[i]);
  }
  return linear_fit(lx, ly).slope;
}

// Geometric-sequence Richardson step: given values v1, v2, v3 at cutoffs
// L, mL, m^2 L of a quantity converging like V - c L^-q, estimates V by
// summing the implied geometric tail beyond v3.
inline double richardson_tail_limit(double v1, double v2, double v3) {
  const double d1 = v2 - v1;
  const double d2 = v3 - v2;
  if (d1 == 0.0) return v3;
  const double r = d2 / d1;
  if (!(r > 0.0) || r >= 1.0) return v3;  // not in the convergent regime
  return v3 + d2 * r / (1.0 - r);
}

inline double relative_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  if (scale == 0.0) return 0.0;
  return std::abs(a - b) / scale;
}

// FNV-1a, used for config hashes in output headers.
inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// Shortest round-trip decimal for doubles in CSV/JSON output.
inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace levylab
