#pragma once

#include <cstddef>
#include <span>

namespace nestpart {

// Tensor-product application of an m x m operator to one axis of an m^3
// nodal field stored with the first reference coordinate fastest:
// u[i + m*(j + m*k)] lives at node (r1_i, r2_j, r3_k).
//
// Each call is m (or m^2) independent m x m matrix products, which is the
// dominant work in the volume kernel.

// out[i,j,k] = sum_m A[i,m] u[m,j,k]   (operator along r1)
void iiax(std::span<const double> a, int m, std::span<const double> u, std::span<double> out);

// out[i,j,k] = sum_m A[j,m] u[i,m,k]   (operator along r2)
void iaix(std::span<const double> a, int m, std::span<const double> u, std::span<double> out);

// out[i,j,k] = sum_m A[k,m] u[i,j,m]   (operator along r3)
void aiix(std::span<const double> a, int m, std::span<const double> u, std::span<double> out);

// Dispatch by axis index (0 -> iiax, 1 -> iaix, 2 -> aiix).
void apply_along_axis(int axis, std::span<const double> a, int m, std::span<const double> u,
                      std::span<double> out);

} // namespace nestpart
