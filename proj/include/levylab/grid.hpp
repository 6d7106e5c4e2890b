#pragma once

#include <cstddef>
#include <vector>

#include "levylab/partition.hpp"

namespace levylab {

struct GridNode {
  double xi;    // positive frequency; the mirror node -xi is implied
  double w;     // Gauss-Legendre weight
  int band;     // scale index j of the band the node belongs to
};

struct GridParams {
  double M{2.0};
  int rho{12};
  double xi_min{1e-4};
  int nodes_per_band{256};
  double osc_tau{1.0};       // largest lag whose oscillations the rule resolves
  bool band_limited{false};  // cap band rho at M^rho (multiplier-version signals)
};

// Per-band Gauss-Legendre frequency grid covering (xi_min, M^{rho+1}]
// (or M^rho when band-limited). Band j >= 1 sits on [M^{j-1}, M^{j+1}],
// band 0 on [xi_min, M]; bands overlap just as the chi^j supports do.
class SpectralGrid {
 public:
  explicit SpectralGrid(const GridParams& params);

  const GridParams& params() const { return params_; }
  const PartitionOfUnity& pou() const { return pou_; }
  const std::vector<GridNode>& nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }

  // [begin, end) node range of band j.
  std::pair<std::size_t, std::size_t> band_range(int j) const { return band_range_[j]; }

  // chi^{band}(xi) of a node: the band weight entering coefficient variances.
  double chi_weight(std::size_t node) const { return chi_weight_[node]; }

  double max_frequency() const;

 private:
  GridParams params_;
  PartitionOfUnity pou_;
  std::vector<GridNode> nodes_;
  std::vector<double> chi_weight_;
  std::vector<std::pair<std::size_t, std::size_t>> band_range_;
};

}  // namespace levylab
