#include "levylab/levy_area.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>

#include "levylab/quadrature.hpp"
#include "levylab/util.hpp"

namespace levylab {

namespace {

constexpr double kPi = 3.14159265358979323846;
using cd = std::complex<double>;

// Nodes of one field restricted to |xi| <= Lambda, ordered by xi, with the
// dW chunk z sqrt(w chi) xi^{1/2-alpha} folded in.
struct PairView {
  std::vector<double> xi;
  std::vector<int> band;
  std::vector<cd> c1, c2;        // weighted coefficients of the two fields
  std::vector<cd> et1, es1;      // e^{i t xi}, e^{i s xi} per node
};

PairView build_view(const SpectralSample& sample, FieldIndex f1, FieldIndex f2, double alpha,
                    double lambda_cut, double s, double t) {
  const auto& grid = sample.grid();
  if (lambda_cut > grid.max_frequency() * (1.0 + 1e-12)) {
    throw std::invalid_argument("levy_area: cutoff exceeds the grid's frequency range");
  }
  const auto& nodes = grid.nodes();
  const auto& z1 = sample.coeffs(f1);
  const auto& z2 = sample.coeffs(f2);
  std::vector<std::size_t> order(nodes.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return nodes[a].xi < nodes[b].xi; });
  PairView v;
  for (std::size_t idx : order) {
    const double xi = nodes[idx].xi;
    if (xi > lambda_cut) continue;
    const double amp = std::sqrt(nodes[idx].w * grid.chi_weight(idx)) * std::pow(xi, 0.5 - alpha);
    v.xi.push_back(xi);
    v.band.push_back(nodes[idx].band);
    v.c1.push_back(z1[idx] * amp);
    v.c2.push_back(z2[idx] * amp);
    v.et1.push_back(cd(std::cos(t * xi), std::sin(t * xi)));
    v.es1.push_back(cd(std::cos(s * xi), std::sin(s * xi)));
  }
  return v;
}

// (e_t - e_s)/(i xi) given the precomputed exponentials; series for the
// nearly-cancelling regime.
inline cd increment_kernel(double xi, double s, double t, const cd& et, const cd& es) {
  if (std::abs(xi) * std::max(std::abs(s), std::abs(t)) < 1e-7) {
    // Int_s^t e^{i u xi} du expanded to third order.
    const double d1 = t - s;
    const double d2 = 0.5 * (t * t - s * s);
    const double d3 = (t * t * t - s * s * s) / 6.0;
    return cd(d1 - xi * xi * d3, xi * d2);
  }
  return (et - es) / cd(0.0, xi);
}

struct Accum {
  double a_plus{0.0};
  double a_minus{0.0};
  double boundary{0.0};
  double cross{0.0};  // running <A+ . A->-style product is formed by caller
};

// Core double sum. For each ordered node pair and sign combination the
// exact skeleton kernels are evaluated; the projection weight w_plus is
// 1/2 on the declared diagonal so that sector and banded conventions match
// Definition 1.3.
Accum double_sum(const PairView& v, double s, double t, Projection proj) {
  Accum acc;
  const std::size_t n = v.xi.size();
  for (std::size_t i2 = 0; i2 < n; ++i2) {
    const double x2 = v.xi[i2];
    const cd et2 = v.et1[i2];
    const cd es2 = v.es1[i2];
    for (std::size_t i1 = 0; i1 < n; ++i1) {
      const double x1 = v.xi[i1];
      double w_plus;
      if (proj == Projection::sector) {
        w_plus = (i1 < i2) ? 1.0 : (i1 == i2 ? 0.5 : 0.0);
      } else {
        w_plus = (v.band[i1] < v.band[i2]) ? 1.0 : (v.band[i1] == v.band[i2] ? 0.5 : 0.0);
      }
      const double w_minus = 1.0 - w_plus;
      const cd zz = v.c1[i1] * v.c2[i2];
      const cd zc = v.c1[i1] * std::conj(v.c2[i2]);
      const cd et1 = v.et1[i1], es1 = v.es1[i1];

      // ++ / -- signed pair: (x1, x2)
      {
        const double xs = x1 + x2;
        const cd einc = increment_kernel(xs, s, t, et1 * et2, es1 * es2);
        if (w_plus != 0.0) acc.a_plus += w_plus * 2.0 * std::real(zz * einc / cd(0.0, x2));
        if (w_minus != 0.0) acc.a_minus += w_minus * 2.0 * std::real(zz * einc / cd(0.0, x1));
      }
      // +- / -+ signed pair: (x1, -x2)
      {
        const double xs = x1 - x2;
        const cd einc = increment_kernel(xs, s, t, et1 * std::conj(et2), es1 * std::conj(es2));
        if (w_plus != 0.0) acc.a_plus += w_plus * 2.0 * std::real(zc * einc / cd(0.0, -x2));
        if (w_minus != 0.0) acc.a_minus += w_minus * 2.0 * std::real(zc * einc / cd(0.0, x1));
      }
      // boundary kernels: -P+ einc(x1) e^{i s x2}/(i x2) + P- einc(x2) e^{i t x1}/(i x1)
      {
        const cd einc1 = increment_kernel(x1, s, t, et1, es1);
        const cd einc2 = increment_kernel(x2, s, t, et2, es2);
        const cd f_pp = -w_plus * einc1 * es2 / cd(0.0, x2) + w_minus * einc2 * et1 / cd(0.0, x1);
        const cd f_pm = -w_plus * einc1 * std::conj(es2) / cd(0.0, -x2) +
                        w_minus * std::conj(einc2) * et1 / cd(0.0, x1);
        acc.boundary += 2.0 * std::real(zz * f_pp) + 2.0 * std::real(zc * f_pm);
      }
    }
  }
  return acc;
}

}  // namespace

AreaDecomposition levy_area(const SpectralSample& sample, FieldIndex f1, FieldIndex f2,
                            double alpha, double c_alpha, double s, double t, double lambda_cut,
                            Projection proj) {
  if (!(s < t)) throw std::invalid_argument("levy_area: need s < t");
  const PairView v = build_view(sample, f1, f2, alpha, lambda_cut, s, t);
  const Accum acc = double_sum(v, s, t, proj);
  AreaDecomposition d;
  d.a_plus_increment = acc.a_plus;
  d.a_minus_increment = acc.a_minus;
  d.boundary = acc.boundary;
  d.area = (acc.a_plus - acc.a_minus + acc.boundary) / (2.0 * kPi * c_alpha);
  return d;
}

double a_pm_increment(const SpectralSample& sample, double alpha, int sign, double s, double t,
                      double lambda_cut, Projection proj) {
  if (s == t) return 0.0;
  const PairView v = build_view(sample, FieldIndex::phi1, FieldIndex::phi2, alpha, lambda_cut, s, t);
  const Accum acc = double_sum(v, s, t, proj);
  return sign >= 0 ? acc.a_plus : acc.a_minus;
}

double boundary_terms(const SpectralSample& sample, double alpha, double s, double t,
                      double lambda_cut, Projection proj) {
  if (s == t) return 0.0;
  const PairView v = build_view(sample, FieldIndex::phi1, FieldIndex::phi2, alpha, lambda_cut, s, t);
  return double_sum(v, s, t, proj).boundary;
}

double a_cross_product(const SpectralSample& sample, double alpha, double s, double t,
                       double lambda_cut, Projection proj) {
  const PairView v = build_view(sample, FieldIndex::phi1, FieldIndex::phi2, alpha, lambda_cut, s, t);
  const Accum acc = double_sum(v, s, t, proj);
  return acc.a_plus * acc.a_minus;
}

double iterated_integral_oracle(const SpectralSample& sample, FieldIndex f1, FieldIndex f2,
                                double alpha, double c_alpha, double s, double t, double tol) {
  const double b2s = eval_fbm(sample, f2, alpha, c_alpha, s);
  auto integrand = [&](double u) {
    // B'_{f1}(u): spectral derivative of the fbm kernel.
    const auto& grid = sample.grid();
    const auto& nodes = grid.nodes();
    const auto& z = sample.coeffs(f1);
    const double norm = 1.0 / std::sqrt(2.0 * kPi * c_alpha);
    double deriv = 0.0;
    for (std::size_t n = 0; n < nodes.size(); ++n) {
      const double xi = nodes[n].xi;
      const double amp = std::sqrt(nodes[n].w * grid.chi_weight(n));
      const cd g(std::cos(u * xi), std::sin(u * xi));
      deriv += 2.0 * amp * norm * std::pow(xi, 0.5 - alpha) * std::real(z[n] * g);
    }
    return (eval_fbm(sample, f2, alpha, c_alpha, u) - b2s) * deriv;
  };
  return adaptive_simpson(integrand, s, t, tol);
}

double chen_residual(const SpectralSample& sample, double alpha, double c_alpha, double s,
                     double u, double t, double lambda_cut, Projection proj) {
  const auto f1 = FieldIndex::phi1;
  const auto f2 = FieldIndex::phi2;
  const double a_st = levy_area(sample, f1, f2, alpha, c_alpha, s, t, lambda_cut, proj).area;
  const double a_su = levy_area(sample, f1, f2, alpha, c_alpha, s, u, lambda_cut, proj).area;
  const double a_ut = levy_area(sample, f1, f2, alpha, c_alpha, u, t, lambda_cut, proj).area;
  const double db2 = eval_fbm(sample, f2, alpha, c_alpha, u) - eval_fbm(sample, f2, alpha, c_alpha, s);
  const double db1 = eval_fbm(sample, f1, alpha, c_alpha, t) - eval_fbm(sample, f1, alpha, c_alpha, u);
  const double lhs = a_st;
  const double rhs = a_su + a_ut + db2 * db1;
  return std::abs(lhs - rhs) / std::max({std::abs(lhs), std::abs(rhs), 1e-30});
}

namespace {

// I(xi, Lambda) = Int over { |xi - x| < |x| <= Lambda } of |xi-x|^{1-2a} |x|^{-1-2a} dx,
// for xi > 0 (the domain is then x in (xi/2, Lambda]).
double inner_sector_integral(double alpha, double xi, double lambda_cut) {
  if (xi * 0.5 >= lambda_cut) return 0.0;
  const double a = alpha;
  double total = 0.0;
  if (lambda_cut <= xi) {
    auto f = [&](double u) { return std::pow(u, 1.0 - 2.0 * a) * std::pow(xi - u, -1.0 - 2.0 * a); };
    total = gl_integrate_log_panels(f, xi - lambda_cut, 0.5 * xi, 24, 2.0);
  } else {
    // (xi/2, xi): u = xi - x has an algebraic zero at u = 0.
    auto fa = [&](double u) { return std::pow(u, 1.0 - 2.0 * a) * std::pow(xi - u, -1.0 - 2.0 * a); };
    total += tanh_sinh(fa, 0.0, 0.5 * xi, 1e-10);
    // (xi, min(2 xi, Lambda)): kink at x = xi.
    const double mid = std::min(2.0 * xi, lambda_cut);
    auto fb = [&](double x) { return std::pow(x - xi, 1.0 - 2.0 * a) * std::pow(x, -1.0 - 2.0 * a); };
    total += tanh_sinh(fb, xi, mid, 1e-10);
    if (mid < lambda_cut) total += gl_integrate_log_panels(fb, mid, lambda_cut, 24, 2.0);
  }
  return total;
}

}  // namespace

double var_aplus_increment_quad(double alpha, double tau, double lambda_cut) {
  tau = std::abs(tau);
  auto g = [&](double xi) {
    const double osc = xi * tau < 1e-6 ? tau * tau * (1.0 - xi * xi * tau * tau / 12.0)
                                       : 2.0 * (1.0 - std::cos(tau * xi)) / (xi * xi);
    return osc * inner_sector_integral(alpha, xi, lambda_cut);
  };
  const double head = gl_integrate(g, 0.0, 1.0, 64);
  const double tail = gl_integrate_oscillatory(g, 1.0, 2.0 * lambda_cut, tau, 24);
  return 2.0 * (head + tail);
}

double var_boundary_quad(double alpha, double tau, double lambda_cut) {
  tau = std::abs(tau);
  auto inner = [&](double x2) {
    auto f = [&](double x1) {
      return 2.0 * (1.0 - std::cos(tau * x1)) * std::pow(x1, -1.0 - 2.0 * alpha);
    };
    return gl_integrate_oscillatory(f, 1e-12, x2, tau, 20);
  };
  auto outer = [&](double x2) { return std::pow(x2, -1.0 - 2.0 * alpha) * inner(x2); };
  return 8.0 * gl_integrate_log_panels(outer, 1e-12, lambda_cut, 20, 2.0);
}

double boundary_k2(double alpha, double tau, double lambda_top) {
  const double m2 = lambda_top / 4.0;
  const double v1 = var_boundary_quad(alpha, tau, m2);
  const double v2 = var_boundary_quad(alpha, tau, lambda_top / 2.0);
  const double v3 = var_boundary_quad(alpha, tau, lambda_top);
  return richardson_tail_limit(v1, v2, v3) / std::pow(std::abs(tau), 4.0 * alpha);
}

DivergenceFit fit_divergence_exponent(const std::vector<double>& lambdas,
                                      const std::vector<double>& values) {
  if (lambdas.size() < 3 || lambdas.size() != values.size()) {
    throw std::invalid_argument("fit_divergence_exponent: need at least 3 cutoffs");
  }
  DivergenceFit fit;
  fit.raw_slope = loglog_slope(lambdas, values);
  std::vector<double> dl, dv;
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    const double d = values[i + 1] - values[i];
    if (!(d > 0.0)) throw std::invalid_argument("fit_divergence_exponent: values must increase");
    dl.push_back(lambdas[i]);
    dv.push_back(d);
  }
  fit.increment_slope = loglog_slope(dl, dv);
  fit.divergence_exponent = std::max(0.0, fit.increment_slope);
  fit.log_growth = std::abs(fit.increment_slope) < 0.05;
  return fit;
}

CutoffSweep variance_vs_cutoff(double alpha, double s, double t,
                               const std::vector<double>& lambdas) {
  if (lambdas.size() < 3) throw std::invalid_argument("variance_vs_cutoff: need at least 3 cutoffs");
  if (!(s < t)) throw std::invalid_argument("variance_vs_cutoff: need s < t");
  CutoffSweep sweep;
  sweep.lambdas = lambdas;
  const double tau = t - s;
  for (double L : lambdas) {
    sweep.var_plus.push_back(var_aplus_increment_quad(alpha, tau, L));
    sweep.var_boundary.push_back(var_boundary_quad(alpha, tau, L));
  }
  sweep.plus_fit = fit_divergence_exponent(sweep.lambdas, sweep.var_plus);
  sweep.boundary_fit = fit_divergence_exponent(sweep.lambdas, sweep.var_boundary);
  return sweep;
}

}  // namespace levylab
