#pragma once

#include <vector>

namespace nestpart {

// 1-D Legendre-Gauss-Lobatto rule on [-1, 1].
struct LglRule {
  std::vector<double> nodes;   // roots of (1 - x^2) P_N'(x), ascending
  std::vector<double> weights; // w_l = 2 / (N (N+1) P_N(x_l)^2)
};

// Computes the order-N LGL rule (N+1 points, endpoints included).
// Valid for 1 <= N <= 15; node residuals are Newton-refined below 1e-14.
LglRule lgl_nodes_weights(int order);

// Nodal differentiation matrix D[l][m] = l_m'(x_l), dense row-major.
// Built from barycentric weights with the negative-sum diagonal, so rows
// annihilate constants exactly.
std::vector<double> differentiation_matrix(const std::vector<double>& nodes);

// Legendre polynomial value P_N(x) (used by oracles and weights).
double legendre(int order, double x);

} // namespace nestpart
