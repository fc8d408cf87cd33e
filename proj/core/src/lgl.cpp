#include "nestpart/lgl.hpp"

#include <cmath>
#include <cstddef>

#include "nestpart/error.hpp"

namespace nestpart {

namespace {

struct LegendreEval {
  double p;  // P_N
  double dp; // P_N'
};

LegendreEval legendre_with_derivative(int order, double x) {
  double p0 = 1.0, p1 = x;
  double d0 = 0.0, d1 = 1.0;
  if (order == 0) return {p0, d0};
  for (int k = 1; k < order; ++k) {
    const double p2 = ((2 * k + 1) * x * p1 - k * p0) / (k + 1);
    const double d2 = d0 + (2 * k + 1) * p1;
    p0 = p1;
    p1 = p2;
    d0 = d1;
    d1 = d2;
  }
  return {p1, d1};
}

} // namespace

double legendre(int order, double x) { return legendre_with_derivative(order, x).p; }

LglRule lgl_nodes_weights(int order) {
  if (order < 1 || order > 15) {
    throw ValidationError("LGL order must be in [1, 15], got " + std::to_string(order));
  }
  const int n_points = order + 1;
  LglRule rule;
  rule.nodes.resize(n_points);
  rule.weights.resize(n_points);

  rule.nodes.front() = -1.0;
  rule.nodes.back() = 1.0;

  // Interior nodes are the roots of P_N'. Newton from Chebyshev-Lobatto
  // guesses; g' = P_N'' follows from the Legendre ODE.
  for (int l = 1; l < order; ++l) {
    double x = -std::cos(M_PI * l / order);
    for (int it = 0; it < 100; ++it) {
      const auto [p, dp] = legendre_with_derivative(order, x);
      const double ddp = (2.0 * x * dp - order * (order + 1) * p) / (1.0 - x * x);
      const double step = dp / ddp;
      x -= step;
      if (std::abs(step) < 1e-15) break;
    }
    rule.nodes[l] = x;
  }

  // Symmetrize about 0 to kill residual asymmetry from Newton.
  for (int l = 0; l < n_points / 2; ++l) {
    const double s = 0.5 * (rule.nodes[l] - rule.nodes[n_points - 1 - l]);
    rule.nodes[l] = s;
    rule.nodes[n_points - 1 - l] = -s;
  }
  if (n_points % 2 == 1) rule.nodes[n_points / 2] = 0.0;

  for (int l = 0; l < n_points; ++l) {
    const double p = legendre(order, rule.nodes[l]);
    rule.weights[l] = 2.0 / (order * (order + 1) * p * p);
  }
  return rule;
}

std::vector<double> differentiation_matrix(const std::vector<double>& nodes) {
  const std::size_t n = nodes.size();
  std::vector<double> bary(n, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) bary[i] *= nodes[i] - nodes[j];
    }
    bary[i] = 1.0 / bary[i];
  }

  std::vector<double> d(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double diag = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const double entry = (bary[j] / bary[i]) / (nodes[i] - nodes[j]);
      d[i * n + j] = entry;
      diag -= entry;
    }
    d[i * n + i] = diag;
  }
  return d;
}

} // namespace nestpart
