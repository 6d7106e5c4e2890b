#pragma once

#include <vector>

#include "levylab/fields.hpp"

namespace levylab {

// How the +/- split of the double spectral sum is taken: sharp Fourier
// sectors |xi1| < |xi2| (with weight 1/2 on the discrete diagonal), or the
// band projections D^+/D^- comparing scale indices (1/2 on equal bands).
enum class Projection { sector, banded };

// One Levy-area evaluation split into its spectral pieces. The
// reconstruction 2 pi c_alpha A(s,t) = (A+ inc) - (A- inc) + boundary is an
// algebraic identity of the double sum, valid for either projection.
struct AreaDecomposition {
  double a_plus_increment{0.0};
  double a_minus_increment{0.0};
  double boundary{0.0};  // A_boundary^+ - A_boundary^-
  double area{0.0};      // A(s,t) = iterated integral of the cutoff path
};

// Full decomposition of A(s,t) = Int_s^t dB_{f1} Int_s^{t1} dB_{f2} at
// spectral cutoff |xi| <= Lambda.
AreaDecomposition levy_area(const SpectralSample& sample, FieldIndex f1, FieldIndex f2,
                            double alpha, double c_alpha, double s, double t, double lambda_cut,
                            Projection proj);

double a_pm_increment(const SpectralSample& sample, double alpha, int sign, double s, double t,
                      double lambda_cut, Projection proj);
double boundary_terms(const SpectralSample& sample, double alpha, double s, double t,
                      double lambda_cut, Projection proj);

// <A+inc * A-inc> sample value for the cross-correlation report.
double a_cross_product(const SpectralSample& sample, double alpha, double s, double t,
                       double lambda_cut, Projection proj);

// Independent oracle: adaptive-Simpson time quadrature of
// Int_s^t (B_{f2}(u) - B_{f2}(s)) B'_{f1}(u) du on the smooth cutoff path.
double iterated_integral_oracle(const SpectralSample& sample, FieldIndex f1, FieldIndex f2,
                                double alpha, double c_alpha, double s, double t, double tol);

// Relative Chen residual |A(s,t) - A(s,u) - A(u,t) - dB2(s,u) dB1(u,t)| / |A(s,t)|.
double chen_residual(const SpectralSample& sample, double alpha, double c_alpha, double s,
                     double u, double t, double lambda_cut, Projection proj);

// --- deterministic variance quadratures (oracles for the MC and the sweep) ---

// Var(A+(t)-A+(s)) at cutoff |xi2| <= Lambda, tau = t-s.
double var_aplus_increment_quad(double alpha, double tau, double lambda_cut);
// Var(A_boundary^+ - A_boundary^-) at cutoff Lambda.
double var_boundary_quad(double alpha, double tau, double lambda_cut);

// K2 = lim_{Lambda -> inf} Var_boundary / tau^{4 alpha}, Richardson on a
// geometric cutoff triple.
double boundary_k2(double alpha, double tau, double lambda_top);

// Divergence-rate fit. The cutoff variance has the form
// V(Lambda) = A + B Lambda^p (+ slowly decaying corrections), so the raw
// log-log slope does not estimate p at desk-scale cutoffs; the estimator
// used is the log-log slope of the successive increments
// V(Lambda_{i+1}) - V(Lambda_i), which cancels A exactly. For convergent
// data (decreasing increments) the divergence exponent is 0, and an
// increment slope near 0 with non-vanishing increments marks log growth.
struct DivergenceFit {
  double raw_slope{0.0};
  double increment_slope{0.0};
  double divergence_exponent{0.0};
  bool log_growth{false};
};
DivergenceFit fit_divergence_exponent(const std::vector<double>& lambdas,
                                      const std::vector<double>& values);

struct CutoffSweep {
  std::vector<double> lambdas;
  std::vector<double> var_plus;
  std::vector<double> var_boundary;
  DivergenceFit plus_fit;
  DivergenceFit boundary_fit;
};

// Deterministic per-cutoff variances of the A+ increment and the boundary
// term, with fitted divergence exponents. Needs at least 3 cutoffs
// spanning the window.
CutoffSweep variance_vs_cutoff(double alpha, double s, double t,
                               const std::vector<double>& lambdas);

}  // namespace levylab
