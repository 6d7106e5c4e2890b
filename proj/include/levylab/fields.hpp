#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "levylab/grid.hpp"

namespace levylab {

// Field/component indices keyed into the counter-based RNG stream.
enum class FieldIndex : std::uint32_t {
  phi1 = 1,
  phi2 = 2,
  sigma_plus = 3,
  sigma_minus = 4,
  signal = 5,
};

struct ProvenancedConstant {
  double value{0.0};
  double tolerance{0.0};    // achieved cross-scheme agreement
  std::string oracle;       // how it was computed / verified
};

// Model constants. c_alpha normalizes fBm so E(B_t - B_s)^2 = |t-s|^{2alpha};
// c'_alpha makes the Fourier transform of c'_alpha |t|^{-4alpha} equal to
// |xi|^{4alpha-1}.
struct Constants {
  double alpha{0.0};
  ProvenancedConstant c_alpha;
  ProvenancedConstant c_prime_alpha;  // filled by the interacting module
};

// c_alpha = (1/2pi) Int_R 2(1-cos u)|u|^{-1-2alpha} du, panel Gauss-Legendre
// plus analytic tail; tolerance = relative gap to an independent tanh-sinh
// evaluation.
ProvenancedConstant compute_c_alpha(double alpha);
double compute_c_alpha_tanh_sinh(double alpha);

// Hermitian complex-Gaussian coefficients on a SpectralGrid. Coefficient
// (field, band, node) is a pure function of (seed, replica), Philox-addressed,
// so identical seeds give bit-identical samples.
class SpectralSample {
 public:
  SpectralSample(std::shared_ptr<const SpectralGrid> grid, std::uint64_t seed,
                 std::uint32_t replica = 0);

  const SpectralGrid& grid() const { return *grid_; }
  std::uint64_t seed() const { return seed_; }
  std::uint32_t replica() const { return replica_; }

  // z ~ CN(0,1) per node (E|z|^2 = 1).
  const std::vector<std::complex<double>>& coeffs(FieldIndex field) const;

 private:
  std::shared_ptr<const SpectralGrid> grid_;
  std::uint64_t seed_;
  std::uint32_t replica_;
  mutable std::vector<std::vector<std::complex<double>>> cache_;
};

// --- path synthesis (independent-band version, Definition-2.10 style) ---

// B_t = (2 pi c_alpha)^{-1/2} Int (e^{it xi}-1)/(i xi) |xi|^{1/2-alpha} dW.
double eval_fbm(const SpectralSample& s, FieldIndex field, double alpha, double c_alpha, double t);
std::vector<double> synthesize_fbm(const SpectralSample& s, FieldIndex field, double alpha,
                                   double c_alpha, const std::vector<double>& times);

// phi(t) = Int e^{it xi}/(i xi) |xi|^{1/2-alpha} dW; only increments are
// meaningful (infrared-truncated stationary field).
double eval_phi(const SpectralSample& s, FieldIndex field, double alpha, double t);
std::vector<double> synthesize_phi(const SpectralSample& s, FieldIndex field, double alpha,
                                   const std::vector<double>& times);

// Band-j component values (and their spectral derivative).
double eval_phi_band(const SpectralSample& s, FieldIndex field, double alpha, int j, double t);
double eval_dphi_band(const SpectralSample& s, FieldIndex field, double alpha, int j, double t);
// sigma band component with scalar (diagonal) mass term b.
double eval_sigma_band(const SpectralSample& s, FieldIndex field, double alpha, double b, int j,
                       double t);

// Deterministic variance of an increment of the discrete model:
// sum over nodes of 2 w chi (2 - 2cos(tau xi)) S(xi).
double grid_increment_variance_fbm(const SpectralGrid& g, double alpha, double c_alpha, double tau);
// Continuum band-limited target for the same quantity (independent quadrature),
// and the cutoff correction eps with respect to the exact power law:
// target = |tau|^{2alpha} (1 - eps).
double target_increment_variance_fbm(const SpectralGrid& g, double alpha, double c_alpha,
                                     double tau);
double cutoff_correction_fbm(const SpectralGrid& g, double alpha, double c_alpha, double tau);

// --- scale covariances (Definition 2.10 / 2.12) ---

// C_phi^j(r) = Int e^{i xi r} chi^j(xi) |xi|^{-1-2alpha} dxi.
double cov_phi_scale(const PartitionOfUnity& pou, double alpha, int j, double r);
// |<d^tau phi^j(x) d^tau' phi^j(y)>| building block: the same integral with
// |xi|^{tau+tau'} inserted (cos/sin chosen by parity); returns the signed value.
double cov_phi_scale_deriv(const PartitionOfUnity& pou, double alpha, int j, double r, int tau,
                           int taup);

struct Mat2 {
  double a{0.0}, b{0.0}, c{0.0};  // [[a, b], [b, c]] symmetric
  Mat2 inverse() const;
  double min_eigenvalue() const;
  bool psd(double tol = 0.0) const { return min_eigenvalue() >= -tol; }
};

// C_sigma^j(r) = Int e^{i xi r} chi^j(xi) (|xi|^{1-4alpha} Id + b)^{-1} dxi.
Mat2 cov_sigma_scale(const PartitionOfUnity& pou, double alpha, int j, double r, const Mat2& b);
double cov_sigma_scale_deriv(const PartitionOfUnity& pou, double alpha, int j, double r,
                             double b_diag, int tau, int taup);

// Multiscale-Gaussian-field bound fit (Definition 2.4): returns
// sup over (j in j_lo..j_hi, lag grid) of |cov| (1 + M^j|r|)^{r_exp} / M^{(tau+tau'-2beta) j},
// with beta = alpha for phi and -2alpha for sigma; also reports per-j sups.
struct BoundFit {
  double K{0.0};
  std::vector<double> per_scale;
};
enum class BoundField { phi, sigma };
BoundFit verify_multiscale_bound(const PartitionOfUnity& pou, double alpha, BoundField kind,
                                 int j_lo, int j_hi, int tau, int taup, int r_exp,
                                 double sigma_b = 0.0);

}  // namespace levylab
