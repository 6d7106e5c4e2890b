#include <cstdio>
#include "levylab/fields.hpp"
#include "levylab/levy_area.hpp"
int main() {
  using namespace levylab;
  auto c = compute_c_alpha(0.2);
  std::printf("c_alpha(0.2) = %.12f tol=%.2e\n", c.value, c.tolerance);
  GridParams gp; gp.rho = 6; gp.nodes_per_band = 64; gp.osc_tau = 2.0;
  auto grid = std::make_shared<SpectralGrid>(gp);
  std::printf("grid nodes: %zu\n", grid->size());
  SpectralSample smp(grid, 42);
  const double a = 0.2;
  std::printf("B(0)=%.3e B(1)=%.6f\n", eval_fbm(smp, FieldIndex::phi1, a, c.value, 0.0),
              eval_fbm(smp, FieldIndex::phi1, a, c.value, 1.0));
  auto d = levy_area(smp, FieldIndex::phi1, FieldIndex::phi2, a, c.value, 0.1, 0.7, 128.0, Projection::sector);
  std::printf("area=%.8f (A+=%.5f A-=%.5f bd=%.5f)\n", d.area, d.a_plus_increment, d.a_minus_increment, d.boundary);
  double oracle = iterated_integral_oracle(smp, FieldIndex::phi1, FieldIndex::phi2, a, c.value, 0.1, 0.7, 1e-9);
  std::printf("oracle(full grid cutoff) vs area at full cutoff: ");
  auto dfull = levy_area(smp, FieldIndex::phi1, FieldIndex::phi2, a, c.value, 0.1, 0.7, grid->max_frequency(), Projection::sector);
  std::printf("%.8f vs %.8f rel=%.2e\n", oracle, dfull.area, std::abs(oracle-dfull.area)/std::abs(oracle));
  double vq = var_aplus_increment_quad(0.2, 1.0, 4096.0);
  std::printf("VarA+(tau=1,L=4096)=%.6f (python oracle: 126.9)\n", vq);
  double vb = var_boundary_quad(0.2, 1.0, 4096.0);
  std::printf("VarBd(tau=1,L=4096)=%.6f (python oracle: 66.672)\n", vb);
  return 0;
}
