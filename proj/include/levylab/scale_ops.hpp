#pragma once

#include <functional>
#include <vector>

#include "levylab/fields.hpp"
#include "levylab/partition.hpp"

namespace levylab {

// Multiplier-version scale component (Definition-2.3 style): chi^j applied
// to the Fourier content of a sampled field. Draws only on nodes of bands
// j-1..j+1 (elsewhere chi^j vanishes on the grid).
class ScaleComponent {
 public:
  ScaleComponent(const SpectralSample& sample, FieldIndex field, double alpha, int j);

  int scale() const { return j_; }
  double eval(double t) const;
  double eval_derivative(double t) const;

  // Uniform-grid evaluation with caching: repeated requests for the same
  // grid reuse the stored values.
  const std::vector<double>& eval_grid(double t0, double dt, int count) const;

 private:
  const SpectralSample* sample_;
  FieldIndex field_;
  double alpha_;
  int j_;
  std::vector<std::size_t> node_idx_;
  std::vector<double> amp_;  // sqrt(w chi_band) * chi^j(xi)-ratio weights
  mutable std::vector<double> grid_cache_;
  mutable double cache_t0_{0.0}, cache_dt_{0.0};
  mutable int cache_count_{-1};
};

enum class ScaleSelector { single, low, high };

// project_scale: single scale j, or low chi^{->k}, or high chi^{k->}
// as one combined component. Selector scale must be <= rho.
ScaleComponent project_scale_single(const SpectralSample& s, FieldIndex f, double alpha, int j);
std::vector<ScaleComponent> project_scale_all(const SpectralSample& s, FieldIndex f, double alpha);
double eval_low_momentum(const SpectralSample& s, FieldIndex f, double alpha, int k, double t);
double eval_high_momentum(const SpectralSample& s, FieldIndex f, double alpha, int k, double t);
double eval_full(const SpectralSample& s, FieldIndex f, double alpha, double t);

// Spectral mass of component j outside supp chi^j = [M^{j-1}, M^{j+1}]
// (should vanish identically).
double component_mass_outside_support(const SpectralSample& s, FieldIndex f, double alpha, int j);

// Mean of f over an M-adic interval; composite Gauss-Legendre, 32 nodes.
double average_field(const std::function<double(double)>& f, const MadicInterval& d, double M,
                     int nodes = 32);

// Secondary field delta^k f(x) = f(x) - average over Delta_x^k.
double secondary_field(const std::function<double(double)>& f, const MadicInterval& d, double M,
                       double x);

// Kernel of Lemma 2.6: delta^k(x; v) in [-1, 1].
double secondary_kernel(const MadicInterval& d, double M, double x, double v);

// Kernel form of the secondary field: Int_Delta f'(v) delta^k(x; v) dv.
double secondary_field_kernel_form(const std::function<double(double)>& fprime,
                                   const MadicInterval& d, double M, double x, int nodes = 64);

// Restriction of a high-momentum component psi^j over the scale-j children
// of Delta^h (Definition 2.8): indicator partition, exactly one nonzero at x.
struct Restriction {
  MadicInterval cell;
  double value;
};
std::vector<Restriction> restrict_high_momentum(const ScaleComponent& component,
                                                const MadicInterval& coarse, double M, double x);

}  // namespace levylab
