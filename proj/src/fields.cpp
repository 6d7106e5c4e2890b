#include "levylab/fields.hpp"

#include <cmath>
#include <stdexcept>

#include "levylab/quadrature.hpp"
#include "levylab/rng.hpp"
#include "levylab/util.hpp"

namespace levylab {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Tail integrals Int_T^inf cos(u) u^{-s} du and the sine analogue by
// repeated integration by parts; remainder O(T^{-s-depth}).
double sin_tail(double s, double T, int depth);

double cos_tail(double s, double T, int depth) {
  if (depth == 0) return 0.0;
  return -std::sin(T) * std::pow(T, -s) + s * sin_tail(s + 1.0, T, depth - 1);
}

double sin_tail(double s, double T, int depth) {
  if (depth == 0) return 0.0;
  return std::cos(T) * std::pow(T, -s) - s * cos_tail(s + 1.0, T, depth - 1);
}

// Int_0^inf 2(1-cos u) u^{-1-s} du: panels on [eps, T] (oscillation-aware
// orders above u = 1), analytic power tail, IBP cosine tail.
double one_minus_cos_integral_gl(double s, double T) {
  auto f = [s](double u) { return 2.0 * (1.0 - std::cos(u)) * std::pow(u, -1.0 - s); };
  const double core = gl_integrate_log_panels(f, 1e-12, 1.0, 28, 2.0) +
                      gl_integrate_oscillatory(f, 1.0, T, 1.0, 24, 2.0);
  const double tail_power = 2.0 * std::pow(T, -s) / s;
  const double tail_cos = 2.0 * cos_tail(1.0 + s, T, 6);
  return core + tail_power - tail_cos;
}

double one_minus_cos_integral_ts(double s, double T) {
  auto f = [s](double u) { return 2.0 * (1.0 - std::cos(u)) * std::pow(u, -1.0 - s); };
  // tanh-sinh per decade handles the u^{1-s} endpoint behaviour at 0.
  double core = 0.0;
  double lo = 1e-12;
  while (lo < 1.0) {
    const double hi = std::min(lo * 10.0, 1.0);
    core += tanh_sinh(f, lo, hi, 1e-13);
    lo = hi;
  }
  core += gl_integrate_oscillatory(f, 1.0, T, 1.0, 40, 1.5);
  const double tail_power = 2.0 * std::pow(T, -s) / s;
  const double tail_cos = 2.0 * cos_tail(1.0 + s, T, 6);
  return core + tail_power - tail_cos;
}

}  // namespace

ProvenancedConstant compute_c_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 0.5)) {
    throw std::invalid_argument("compute_c_alpha: alpha must lie in (0, 1/2)");
  }
  // (1/2pi) Int_R = (1/pi) Int_0^inf by evenness.
  const double gl = one_minus_cos_integral_gl(2.0 * alpha, 256.0) / kPi;
  const double ts = compute_c_alpha_tanh_sinh(alpha);
  ProvenancedConstant c;
  c.value = gl;
  c.tolerance = relative_diff(gl, ts);
  c.oracle = "panel-GL + IBP tail; cross-checked against tanh-sinh";
  return c;
}

double compute_c_alpha_tanh_sinh(double alpha) {
  return one_minus_cos_integral_ts(2.0 * alpha, 512.0) / kPi;
}

SpectralSample::SpectralSample(std::shared_ptr<const SpectralGrid> grid, std::uint64_t seed,
                               std::uint32_t replica)
    : grid_(std::move(grid)), seed_(seed), replica_(replica), cache_(8) {}

const std::vector<std::complex<double>>& SpectralSample::coeffs(FieldIndex field) const {
  auto& slot = cache_[static_cast<std::size_t>(field)];
  if (slot.empty()) {
    const auto& nodes = grid_->nodes();
    slot.resize(nodes.size());
    const auto stream = static_cast<std::uint32_t>(field);
    for (std::size_t n = 0; n < nodes.size(); ++n) {
      const NormalPair z = counter_normals(seed_, stream, static_cast<std::uint32_t>(nodes[n].band),
                                           static_cast<std::uint32_t>(n), replica_);
      // E|z|^2 = 1 with independent real/imag parts.
      slot[n] = std::complex<double>(z.z0, z.z1) * std::sqrt(0.5);
    }
  }
  return slot;
}

namespace {

// value = sum_n 2 Re[ z_n sqrt(w_n chi_n) g(xi_n, t) ].
template <typename Kernel>
double eval_sum(const SpectralSample& s, FieldIndex field, Kernel&& g) {
  const auto& nodes = s.grid().nodes();
  const auto& z = s.coeffs(field);
  double acc = 0.0;
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    const double amp = std::sqrt(nodes[n].w * s.grid().chi_weight(n));
    acc += 2.0 * amp * std::real(z[n] * g(nodes[n].xi));
  }
  return acc;
}

template <typename Kernel>
double eval_sum_band(const SpectralSample& s, FieldIndex field, int j, Kernel&& g) {
  const auto& nodes = s.grid().nodes();
  const auto& z = s.coeffs(field);
  const auto [begin, end] = s.grid().band_range(j);
  double acc = 0.0;
  for (std::size_t n = begin; n < end; ++n) {
    const double amp = std::sqrt(nodes[n].w * s.grid().chi_weight(n));
    acc += 2.0 * amp * std::real(z[n] * g(nodes[n].xi));
  }
  return acc;
}

std::complex<double> expi(double x) { return {std::cos(x), std::sin(x)}; }

}  // namespace

double eval_fbm(const SpectralSample& s, FieldIndex field, double alpha, double c_alpha,
                double t) {
  const double norm = 1.0 / std::sqrt(2.0 * kPi * c_alpha);
  return eval_sum(s, field, [&](double xi) {
    const std::complex<double> minus_i(0.0, -1.0);
    return norm * (expi(t * xi) - 1.0) * minus_i * std::pow(xi, -0.5 - alpha);
  });
}

std::vector<double> synthesize_fbm(const SpectralSample& s, FieldIndex field, double alpha,
                                   double c_alpha, const std::vector<double>& times) {
  std::vector<double> out(times.size());
  for (std::size_t i = 0; i < times.size(); ++i) out[i] = eval_fbm(s, field, alpha, c_alpha, times[i]);
  return out;
}

double eval_phi(const SpectralSample& s, FieldIndex field, double alpha, double t) {
  return eval_sum(s, field, [&](double xi) {
    const std::complex<double> minus_i(0.0, -1.0);
    return expi(t * xi) * minus_i * std::pow(xi, -0.5 - alpha);
  });
}

std::vector<double> synthesize_phi(const SpectralSample& s, FieldIndex field, double alpha,
                                   const std::vector<double>& times) {
  std::vector<double> out(times.size());
  for (std::size_t i = 0; i < times.size(); ++i) out[i] = eval_phi(s, field, alpha, times[i]);
  return out;
}

double eval_phi_band(const SpectralSample& s, FieldIndex field, double alpha, int j, double t) {
  return eval_sum_band(s, field, j, [&](double xi) {
    const std::complex<double> minus_i(0.0, -1.0);
    return expi(t * xi) * minus_i * std::pow(xi, -0.5 - alpha);
  });
}

double eval_dphi_band(const SpectralSample& s, FieldIndex field, double alpha, int j, double t) {
  return eval_sum_band(s, field, j,
                       [&](double xi) { return expi(t * xi) * std::pow(xi, 0.5 - alpha); });
}

double eval_sigma_band(const SpectralSample& s, FieldIndex field, double alpha, double b, int j,
                       double t) {
  return eval_sum_band(s, field, j, [&](double xi) {
    return expi(t * xi) / std::sqrt(std::pow(xi, 1.0 - 4.0 * alpha) + b);
  });
}

double grid_increment_variance_fbm(const SpectralGrid& g, double alpha, double c_alpha,
                                   double tau) {
  const auto& nodes = g.nodes();
  std::vector<double> terms(nodes.size());
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    const double xi = nodes[n].xi;
    terms[n] = 2.0 * nodes[n].w * g.chi_weight(n) * std::pow(xi, -1.0 - 2.0 * alpha) *
               (2.0 - 2.0 * std::cos(tau * xi));
  }
  return pairwise_sum(terms) / (2.0 * kPi * c_alpha);
}

double target_increment_variance_fbm(const SpectralGrid& g, double alpha, double c_alpha,
                                     double tau) {
  const auto& pou = g.pou();
  const int rho = g.params().rho;
  auto f = [&](double xi) {
    return (2.0 - 2.0 * std::cos(tau * xi)) * pou.partition_sum(xi, rho) *
           std::pow(xi, -1.0 - 2.0 * alpha);
  };
  const double integral =
      gl_integrate_oscillatory(f, g.params().xi_min, g.max_frequency(), std::abs(tau), 48);
  return 2.0 * integral / (2.0 * kPi * c_alpha);
}

double cutoff_correction_fbm(const SpectralGrid& g, double alpha, double c_alpha, double tau) {
  const double target = target_increment_variance_fbm(g, alpha, c_alpha, tau);
  return 1.0 - target / std::pow(std::abs(tau), 2.0 * alpha);
}

namespace {

std::pair<double, double> band_support(const PartitionOfUnity& pou, int j, double ir_cut) {
  const double M = pou.base();
  if (j == 0) return {ir_cut, M};
  return {std::pow(M, j - 1), std::pow(M, j + 1)};
}

}  // namespace

double cov_phi_scale(const PartitionOfUnity& pou, double alpha, int j, double r) {
  if (j < 0 || j > pou.max_scale()) throw std::invalid_argument("cov_phi_scale: scale out of range");
  auto [lo, hi] = band_support(pou, j, 1e-4);
  auto f = [&](double xi) {
    return std::cos(xi * r) * pou.chi(j, xi) * std::pow(xi, -1.0 - 2.0 * alpha);
  };
  return 2.0 * gl_integrate_oscillatory(f, lo, hi, std::abs(r), 32);
}

double cov_phi_scale_deriv(const PartitionOfUnity& pou, double alpha, int j, double r, int tau,
                           int taup) {
  auto [lo, hi] = band_support(pou, j, 1e-4);
  const int p = tau + taup;
  auto fc = [&](double xi) {
    return std::pow(xi, p) * std::cos(xi * r) * pou.chi(j, xi) * std::pow(xi, -1.0 - 2.0 * alpha);
  };
  auto fs = [&](double xi) {
    return std::pow(xi, p) * std::sin(xi * r) * pou.chi(j, xi) * std::pow(xi, -1.0 - 2.0 * alpha);
  };
  const std::complex<double> i_unit(0.0, 1.0);
  std::complex<double> full;
  if (p % 2 == 0) {
    full = 2.0 * gl_integrate_oscillatory(fc, lo, hi, std::abs(r), 32);
  } else {
    full = 2.0 * i_unit * gl_integrate_oscillatory(fs, lo, hi, std::abs(r), 32);
  }
  const std::complex<double> phase = std::pow(i_unit, tau) * std::pow(-i_unit, taup);
  return std::real(phase * full);
}

Mat2 Mat2::inverse() const {
  const double det = a * c - b * b;
  if (det == 0.0) throw std::invalid_argument("Mat2: singular matrix");
  return {c / det, -b / det, a / det};
}

double Mat2::min_eigenvalue() const {
  const double tr = a + c;
  const double disc = std::sqrt(std::max(0.0, 0.25 * (a - c) * (a - c) + b * b));
  return 0.5 * tr - disc;
}

Mat2 cov_sigma_scale(const PartitionOfUnity& pou, double alpha, int j, double r, const Mat2& b) {
  if (!b.psd(1e-14)) throw std::invalid_argument("cov_sigma_scale: mass matrix must be PSD");
  auto [lo, hi] = band_support(pou, j, 1e-4);
  auto entry = [&](int which) {
    auto f = [&](double xi) {
      const double d = std::pow(xi, 1.0 - 4.0 * alpha);
      const Mat2 inv = Mat2{d + b.a, b.b, d + b.c}.inverse();
      const double v = which == 0 ? inv.a : (which == 1 ? inv.b : inv.c);
      return std::cos(xi * r) * pou.chi(j, xi) * v;
    };
    return 2.0 * gl_integrate_oscillatory(f, lo, hi, std::abs(r), 32);
  };
  return {entry(0), entry(1), entry(2)};
}

double cov_sigma_scale_deriv(const PartitionOfUnity& pou, double alpha, int j, double r,
                             double b_diag, int tau, int taup) {
  auto [lo, hi] = band_support(pou, j, 1e-4);
  const int p = tau + taup;
  auto weight = [&](double xi) {
    return pou.chi(j, xi) / (std::pow(xi, 1.0 - 4.0 * alpha) + b_diag) * std::pow(xi, p);
  };
  const std::complex<double> i_unit(0.0, 1.0);
  std::complex<double> full;
  if (p % 2 == 0) {
    auto fc = [&](double xi) { return weight(xi) * std::cos(xi * r); };
    full = 2.0 * gl_integrate_oscillatory(fc, lo, hi, std::abs(r), 32);
  } else {
    auto fs = [&](double xi) { return weight(xi) * std::sin(xi * r); };
    full = 2.0 * i_unit * gl_integrate_oscillatory(fs, lo, hi, std::abs(r), 32);
  }
  const std::complex<double> phase = std::pow(i_unit, tau) * std::pow(-i_unit, taup);
  return std::real(phase * full);
}

BoundFit verify_multiscale_bound(const PartitionOfUnity& pou, double alpha, BoundField kind,
                                 int j_lo, int j_hi, int tau, int taup, int r_exp,
                                 double sigma_b) {
  if (tau + taup > 4) throw std::invalid_argument("verify_multiscale_bound: tau + tau' must be <= 4");
  const double beta = (kind == BoundField::phi) ? alpha : -2.0 * alpha;
  const double M = pou.base();
  BoundFit fit;
  for (int j = j_lo; j <= j_hi; ++j) {
    const double mj = std::pow(M, j);
    double kj = 0.0;
    for (int iu = 0; iu <= 24; ++iu) {
      // lags from 0 to ~50 band wavelengths
      const double u = iu == 0 ? 0.0 : 0.1 * std::pow(50.0 / 0.1, (iu - 1) / 23.0);
      const double r = u / mj;
      const double cov = (kind == BoundField::phi)
                             ? cov_phi_scale_deriv(pou, alpha, j, r, tau, taup)
                             : cov_sigma_scale_deriv(pou, alpha, j, r, sigma_b, tau, taup);
      const double shape = std::pow(M, (tau + taup - 2.0 * beta) * j) /
                           std::pow(1.0 + mj * std::abs(r), r_exp);
      kj = std::max(kj, std::abs(cov) / shape);
    }
    fit.per_scale.push_back(kj);
    fit.K = std::max(fit.K, kj);
  }
  return fit;
}

}  // namespace levylab
