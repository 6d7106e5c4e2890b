#include "levylab/scale_ops.hpp"

#include <cmath>
#include <stdexcept>

#include "levylab/quadrature.hpp"

namespace levylab {

ScaleComponent::ScaleComponent(const SpectralSample& sample, FieldIndex field, double alpha,
                               int j)
    : sample_(&sample), field_(field), alpha_(alpha), j_(j) {
  const auto& grid = sample.grid();
  if (j < 0 || j > grid.params().rho) throw std::invalid_argument("ScaleComponent: scale out of range");
  const auto& pou = grid.pou();
  const auto& nodes = grid.nodes();
  for (int b = std::max(0, j - 2); b <= std::min(grid.params().rho, j + 2); ++b) {
    const auto [begin, end] = grid.band_range(b);
    for (std::size_t n = begin; n < end; ++n) {
      const double mult = pou.chi(j, nodes[n].xi);
      if (mult == 0.0) continue;
      node_idx_.push_back(n);
      amp_.push_back(mult * std::sqrt(nodes[n].w * grid.chi_weight(n)));
    }
  }
}

double ScaleComponent::eval(double t) const {
  const auto& nodes = sample_->grid().nodes();
  const auto& z = sample_->coeffs(field_);
  double acc = 0.0;
  for (std::size_t i = 0; i < node_idx_.size(); ++i) {
    const std::size_t n = node_idx_[i];
    const double xi = nodes[n].xi;
    const std::complex<double> g(std::sin(t * xi), -std::cos(t * xi));  // -i e^{it xi}
    acc += 2.0 * amp_[i] * std::pow(xi, -0.5 - alpha_) * std::real(z[n] * g);
  }
  return acc;
}

double ScaleComponent::eval_derivative(double t) const {
  const auto& nodes = sample_->grid().nodes();
  const auto& z = sample_->coeffs(field_);
  double acc = 0.0;
  for (std::size_t i = 0; i < node_idx_.size(); ++i) {
    const std::size_t n = node_idx_[i];
    const double xi = nodes[n].xi;
    const std::complex<double> g(std::cos(t * xi), std::sin(t * xi));
    acc += 2.0 * amp_[i] * std::pow(xi, 0.5 - alpha_) * std::real(z[n] * g);
  }
  return acc;
}

const std::vector<double>& ScaleComponent::eval_grid(double t0, double dt, int count) const {
  if (cache_count_ == count && cache_t0_ == t0 && cache_dt_ == dt) return grid_cache_;
  grid_cache_.assign(count, 0.0);
  const auto& nodes = sample_->grid().nodes();
  const auto& z = sample_->coeffs(field_);
  for (std::size_t i = 0; i < node_idx_.size(); ++i) {
    const std::size_t n = node_idx_[i];
    const double xi = nodes[n].xi;
    const std::complex<double> rot(std::cos(dt * xi), std::sin(dt * xi));
    std::complex<double> e(std::cos(t0 * xi), std::sin(t0 * xi));
    const std::complex<double> zn = z[n] * (2.0 * amp_[i] * std::pow(xi, -0.5 - alpha_));
    for (int g = 0; g < count; ++g) {
      grid_cache_[g] += std::real(zn * std::complex<double>(e.imag(), -e.real()));
      e *= rot;
    }
  }
  cache_t0_ = t0;
  cache_dt_ = dt;
  cache_count_ = count;
  return grid_cache_;
}

ScaleComponent project_scale_single(const SpectralSample& s, FieldIndex f, double alpha, int j) {
  return ScaleComponent(s, f, alpha, j);
}

std::vector<ScaleComponent> project_scale_all(const SpectralSample& s, FieldIndex f,
                                              double alpha) {
  std::vector<ScaleComponent> out;
  for (int j = 0; j <= s.grid().params().rho; ++j) out.emplace_back(s, f, alpha, j);
  return out;
}

namespace {

// phi-kernel sum over all nodes with a spectral multiplier.
double eval_multiplier(const SpectralSample& s, FieldIndex f, double alpha,
                       const std::function<double(double)>& mult, double t) {
  const auto& grid = s.grid();
  const auto& nodes = grid.nodes();
  const auto& z = s.coeffs(f);
  double acc = 0.0;
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    const double m = mult(nodes[n].xi);
    if (m == 0.0) continue;
    const double xi = nodes[n].xi;
    const double amp = m * std::sqrt(nodes[n].w * grid.chi_weight(n));
    const std::complex<double> g(std::sin(t * xi), -std::cos(t * xi));
    acc += 2.0 * amp * std::pow(xi, -0.5 - alpha) * std::real(z[n] * g);
  }
  return acc;
}

}  // namespace

double eval_low_momentum(const SpectralSample& s, FieldIndex f, double alpha, int k, double t) {
  const auto& pou = s.grid().pou();
  if (k > s.grid().params().rho) throw std::invalid_argument("eval_low_momentum: scale out of range");
  return eval_multiplier(s, f, alpha, [&](double xi) { return pou.chi_low(k, xi); }, t);
}

double eval_high_momentum(const SpectralSample& s, FieldIndex f, double alpha, int k, double t) {
  const auto& pou = s.grid().pou();
  if (k > s.grid().params().rho) throw std::invalid_argument("eval_high_momentum: scale out of range");
  return eval_multiplier(s, f, alpha, [&](double xi) { return pou.chi_high(k, xi); }, t);
}

double eval_full(const SpectralSample& s, FieldIndex f, double alpha, double t) {
  const auto& pou = s.grid().pou();
  const int rho = s.grid().params().rho;
  return eval_multiplier(s, f, alpha, [&](double xi) { return pou.partition_sum(xi, rho); }, t);
}

double component_mass_outside_support(const SpectralSample& s, FieldIndex f, double alpha,
                                      int j) {
  const auto& grid = s.grid();
  const auto& pou = grid.pou();
  const double M = grid.params().M;
  const double lo = j == 0 ? 0.0 : std::pow(M, j - 1);
  const double hi = std::pow(M, j + 1);
  double mass = 0.0;
  for (std::size_t n = 0; n < grid.size(); ++n) {
    const double xi = grid.nodes()[n].xi;
    if (xi >= lo && xi <= hi) continue;
    const double m = pou.chi(j, xi);
    mass += m * m * grid.nodes()[n].w * grid.chi_weight(n) * std::pow(xi, -1.0 - 2.0 * alpha);
  }
  (void)f;
  (void)alpha;
  return mass;
}

double average_field(const std::function<double(double)>& f, const MadicInterval& d, double M,
                     int nodes) {
  const double lo = d.lower(M);
  const double hi = d.upper(M);
  return gl_integrate(f, lo, hi, nodes) / (hi - lo);
}

double secondary_field(const std::function<double(double)>& f, const MadicInterval& d, double M,
                       double x) {
  return f(x) - average_field(f, d, M);
}

double secondary_kernel(const MadicInterval& d, double M, double x, double v) {
  const double lo = d.lower(M);
  const double hi = d.upper(M);
  const double vol = hi - lo;
  if (v < x) return (v - lo) / vol;
  if (v > x) return (v - hi) / vol;
  return 0.5 * ((v - lo) + (v - hi)) / vol;
}

double secondary_field_kernel_form(const std::function<double(double)>& fprime,
                                   const MadicInterval& d, double M, double x, int nodes) {
  const double lo = d.lower(M);
  const double hi = d.upper(M);
  auto integrand = [&](double v) { return fprime(v) * secondary_kernel(d, M, x, v); };
  // Split at x: the kernel has a jump there.
  return gl_integrate(integrand, lo, x, nodes) + gl_integrate(integrand, x, hi, nodes);
}

std::vector<Restriction> restrict_high_momentum(const ScaleComponent& component,
                                                const MadicInterval& coarse, double M,
                                                double x) {
  const int j = component.scale();
  if (j <= coarse.j) {
    throw std::invalid_argument("restrict_high_momentum: component scale must exceed the interval scale");
  }
  const long long m = static_cast<long long>(M);
  if (static_cast<double>(m) != M) {
    throw std::invalid_argument("restrict_high_momentum: requires integer M");
  }
  long long children = 1;
  for (int s = coarse.j; s < j; ++s) children *= m;
  std::vector<Restriction> out;
  out.reserve(children);
  const double value = component.eval(x);
  for (long long c = 0; c < children; ++c) {
    MadicInterval cell{j, coarse.k * children + c};
    const bool contains = (x >= cell.lower(M) && x < cell.upper(M));
    out.push_back({cell, contains ? value : 0.0});
  }
  return out;
}

}  // namespace levylab
