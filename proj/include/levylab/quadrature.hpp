#pragma once

#include <cmath>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace levylab {

struct QuadRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;  // sum to 2
};

// Gauss-Legendre nodes/weights by Newton iteration on P_n; cached per order.
const QuadRule& gauss_legendre(int n);

// Integrates f over [a, b] with an n-point Gauss-Legendre rule.
double gl_integrate(const std::function<double(double)>& f, double a, double b, int n);

// Integrates f over [a, b] split into geometric (factor-`ratio`) panels,
// n points per panel. Suited to power-law integrands on wide ranges.
double gl_integrate_log_panels(const std::function<double(double)>& f, double a, double b,
                               int n_per_panel, double ratio = 2.0);

// Panel integrator for oscillatory integrands: the per-panel order grows
// with omega * width so Gauss-Legendre stays in its superexponential
// regime. `omega` is the largest angular frequency present in f.
double gl_integrate_oscillatory(const std::function<double(double)>& f, double a, double b,
                                double omega, int base_order = 24, double panel_ratio = 2.0);

// Adaptive Simpson with absolute/relative tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol, int max_depth = 48);

// Double-exponential (tanh-sinh) rule on [a, b]; handles endpoint
// algebraic singularities.
double tanh_sinh(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-12);

}  // namespace levylab
