#include "nestpart/tensor_ops.hpp"

#include <cassert>

#include "nestpart/error.hpp"

namespace nestpart {

void iiax(std::span<const double> a, int m, std::span<const double> u, std::span<double> out) {
  const std::size_t n3 = static_cast<std::size_t>(m) * m * m;
  if (u.size() != n3 || out.size() != n3 || a.size() != static_cast<std::size_t>(m) * m) {
    throw ValidationError("iiax: dimension mismatch");
  }
  // One m x m product per (j, k) column; columns are contiguous in i.
  for (int col = 0; col < m * m; ++col) {
    const double* uc = u.data() + static_cast<std::size_t>(col) * m;
    double* oc = out.data() + static_cast<std::size_t>(col) * m;
    for (int i = 0; i < m; ++i) {
      const double* arow = a.data() + static_cast<std::size_t>(i) * m;
      double acc = 0.0;
      for (int l = 0; l < m; ++l) acc += arow[l] * uc[l];
      oc[i] = acc;
    }
  }
}

void iaix(std::span<const double> a, int m, std::span<const double> u, std::span<double> out) {
  const std::size_t n3 = static_cast<std::size_t>(m) * m * m;
  if (u.size() != n3 || out.size() != n3 || a.size() != static_cast<std::size_t>(m) * m) {
    throw ValidationError("iaix: dimension mismatch");
  }
  for (int k = 0; k < m; ++k) {
    const double* up = u.data() + static_cast<std::size_t>(k) * m * m;
    double* op = out.data() + static_cast<std::size_t>(k) * m * m;
    for (int j = 0; j < m; ++j) {
      const double* arow = a.data() + static_cast<std::size_t>(j) * m;
      double* orow = op + static_cast<std::size_t>(j) * m;
      for (int i = 0; i < m; ++i) orow[i] = 0.0;
      for (int l = 0; l < m; ++l) {
        const double alj = arow[l];
        const double* urow = up + static_cast<std::size_t>(l) * m;
        for (int i = 0; i < m; ++i) orow[i] += alj * urow[i];
      }
    }
  }
}

void aiix(std::span<const double> a, int m, std::span<const double> u, std::span<double> out) {
  const std::size_t n3 = static_cast<std::size_t>(m) * m * m;
  if (u.size() != n3 || out.size() != n3 || a.size() != static_cast<std::size_t>(m) * m) {
    throw ValidationError("aiix: dimension mismatch");
  }
  const std::size_t plane = static_cast<std::size_t>(m) * m;
  for (int k = 0; k < m; ++k) {
    const double* arow = a.data() + static_cast<std::size_t>(k) * m;
    double* op = out.data() + k * plane;
    for (std::size_t p = 0; p < plane; ++p) op[p] = 0.0;
    for (int l = 0; l < m; ++l) {
      const double akl = arow[l];
      const double* up = u.data() + l * plane;
      for (std::size_t p = 0; p < plane; ++p) op[p] += akl * up[p];
    }
  }
}

void apply_along_axis(int axis, std::span<const double> a, int m, std::span<const double> u,
                      std::span<double> out) {
  assert(axis >= 0 && axis < 3);
  switch (axis) {
    case 0: iiax(a, m, u, out); break;
    case 1: iaix(a, m, u, out); break;
    default: aiix(a, m, u, out); break;
  }
}

} // namespace nestpart
