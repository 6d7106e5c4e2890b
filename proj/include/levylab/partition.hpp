#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace levylab {

// Smooth Fourier partition of unity on dyadic-type bands of base M.
//
// chi^0 is even, == 1 on [-1,1], == 0 outside [-M,M], with the classical
// exp(-1/u) bridge in between; chi^j(xi) = chi^0(M^-j xi) - chi^0(M^{1-j} xi)
// for j >= 1, so partial sums telescope exactly.
class PartitionOfUnity {
 public:
  PartitionOfUnity(double base, int max_scale)
      : M_(base), rho_(max_scale) {
    if (!(base > 1.0)) throw std::invalid_argument("PartitionOfUnity: base M must be > 1");
    if (max_scale < 0) throw std::invalid_argument("PartitionOfUnity: max scale must be >= 0");
  }

  double base() const { return M_; }
  int max_scale() const { return rho_; }

  // chi^0: the mother cutoff.
  double chi0(double xi) const {
    const double a = std::abs(xi);
    if (a <= 1.0) return 1.0;
    if (a >= M_) return 0.0;
    return bridge((a - 1.0) / (M_ - 1.0));
  }

  // chi^j, j >= 0.
  double chi(int j, double xi) const {
    if (j < 0) throw std::invalid_argument("chi: scale must be >= 0");
    if (j == 0) return chi0(xi);
    return chi0(std::pow(M_, -j) * xi) - chi0(std::pow(M_, 1 - j) * xi);
  }

  // sum_{j=0}^{J} chi^j(xi); equals chi^0(M^-J xi) by telescoping and is
  // computed that way.
  double partition_sum(double xi, int J) const {
    if (J < 0) throw std::invalid_argument("partition_sum: J must be >= 0");
    return chi0(std::pow(M_, -J) * xi);
  }

  // Low-momentum multiplier chi^{->j} = sum_{h<=j} chi^h.
  double chi_low(int j, double xi) const { return partition_sum(xi, j); }

  // High-momentum multiplier chi^{j->} = sum_{k=j..rho} chi^k.
  double chi_high(int j, double xi) const {
    if (j == 0) return partition_sum(xi, rho_);
    return partition_sum(xi, rho_) - partition_sum(xi, j - 1);
  }

 private:
  // g(u) = f(1-u)/(f(u)+f(1-u)), f(u) = exp(-1/u) for u > 0: C-infinity,
  // monotone from 1 to 0 on [0,1].
  static double bridge(double u) {
    const double fu = smooth_step(u);
    const double fv = smooth_step(1.0 - u);
    return fv / (fu + fv);
  }
  static double smooth_step(double u) { return u > 0.0 ? std::exp(-1.0 / u) : 0.0; }

  double M_;
  int rho_;
};

// M-adic interval [k M^-j, (k+1) M^-j] at scale j.
struct MadicInterval {
  int j{0};
  long long k{0};

  double volume(double M) const { return std::pow(M, -j); }
  double lower(double M) const { return k * std::pow(M, -j); }
  double upper(double M) const { return (k + 1) * std::pow(M, -j); }
  double midpoint(double M) const { return (k + 0.5) * std::pow(M, -j); }

  bool operator==(const MadicInterval&) const = default;
};

// The interval of scale j containing x (left-closed convention).
inline MadicInterval madic_interval_of(double x, int j, double M) {
  if (j < 0) throw std::invalid_argument("madic_interval_of: scale must be >= 0");
  const double scaled = x * std::pow(M, j);
  return {j, static_cast<long long>(std::floor(scaled))};
}

// Unique parent at scale j-1. Requires integer M so the tree is exact.
inline MadicInterval madic_parent(const MadicInterval& d, double M) {
  if (d.j < 1) throw std::invalid_argument("madic_parent: scale-0 intervals have no parent");
  const long long m = static_cast<long long>(M);
  if (static_cast<double>(m) != M) {
    throw std::invalid_argument("madic_parent: parent/child relations require integer M");
  }
  long long kk = d.k;
  // floor division for negative k
  long long q = kk / m;
  if (kk % m != 0 && kk < 0) --q;
  return {d.j - 1, q};
}

// d^j distance (Eq-2.2 style): for two scale-j' intervals with j' >= j,
// M^{j-j'} |k' - k|. Asking about coarser intervals than j is an error.
inline double dj_distance(const MadicInterval& a, const MadicInterval& b, int j, double M) {
  if (a.j != b.j) throw std::invalid_argument("dj_distance: intervals must share a scale");
  if (a.j < j) throw std::invalid_argument("dj_distance: interval scale below the reference scale");
  return std::pow(M, j - a.j) * static_cast<double>(std::llabs(b.k - a.k));
}

// d^j distance of two points: M^j |x - y|.
inline double dj_distance(double x, double y, int j, double M) {
  return std::pow(M, j) * std::abs(x - y);
}

}  // namespace levylab
