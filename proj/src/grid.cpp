#include "levylab/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "levylab/quadrature.hpp"

namespace levylab {

namespace {

// Panel order: enough points for smooth power laws, plus capacity for
// e^{i t xi} factors up to lag osc_tau.
int panel_order(double lo, double hi, double osc_tau, int base) {
  const double width = hi - lo;
  int n = base + static_cast<int>(std::ceil(osc_tau * width / 3.0));
  return std::min(n, 4096);
}

}  // namespace

SpectralGrid::SpectralGrid(const GridParams& params)
    : params_(params), pou_(params.M, params.rho) {
  if (!(params.xi_min > 0.0)) throw std::invalid_argument("SpectralGrid: xi_min must be > 0");
  if (params.nodes_per_band < 8) throw std::invalid_argument("SpectralGrid: nodes_per_band too small");
  const double M = params.M;
  band_range_.resize(params.rho + 1);

  for (int j = 0; j <= params.rho; ++j) {
    const std::size_t begin = nodes_.size();
    double lo = (j == 0) ? params.xi_min : std::pow(M, j - 1);
    double hi = (j == 0) ? M : std::pow(M, j + 1);
    if (params.band_limited && j == params.rho) hi = std::pow(M, j);
    // Geometric panels; factor-M pieces track the chi^j shape.
    std::vector<std::pair<double, double>> panels;
    double a = lo;
    while (a < hi) {
      const double b = std::min(a * M, hi);
      panels.emplace_back(a, b);
      a = b;
    }
    const int base = std::max(12, params.nodes_per_band / std::max<int>(2, panels.size()));
    for (auto [pa, pb] : panels) {
      int n = panel_order(pa, pb, params.osc_tau, base);
      // Keep cached rule sizes bounded; split oversized panels evenly.
      const int pieces = (n + 255) / 256;
      const int per = (n + pieces - 1) / pieces;
      const double step = (pb - pa) / pieces;
      for (int p = 0; p < pieces; ++p) {
        const QuadRule& rule = gauss_legendre(per);
        const double mid = pa + (p + 0.5) * step;
        const double half = 0.5 * step;
        for (int i = 0; i < per; ++i) {
          GridNode node;
          node.xi = mid + half * rule.nodes[i];
          node.w = half * rule.weights[i];
          node.band = j;
          nodes_.push_back(node);
          chi_weight_.push_back(pou_.chi(j, node.xi));
        }
      }
    }
    band_range_[j] = {begin, nodes_.size()};
  }
}

double SpectralGrid::max_frequency() const {
  return params_.band_limited ? std::pow(params_.M, params_.rho)
                              : std::pow(params_.M, params_.rho + 1);
}

}  // namespace levylab
