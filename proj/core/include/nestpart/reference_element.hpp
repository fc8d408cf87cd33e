#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "nestpart/lgl.hpp"

namespace nestpart {

// Local face numbering: face 2a is the -r_{a+1} side, face 2a+1 the +r_{a+1}
// side, for a in {0,1,2}. The face opposite f is f ^ 1.
inline constexpr int kFacesPerElement = 6;

inline constexpr int face_axis(int face) { return face / 2; }
inline constexpr int face_side(int face) { return face % 2; } // 0 = minus, 1 = plus
inline constexpr int opposite_face(int face) { return face ^ 1; }

// Collocated nodal machinery for one hexahedral reference element at a given
// order: LGL nodes/weights, the differentiation matrix, and gather maps from
// volume nodes to each face.
//
// Volume nodes are ordered r1-fastest: node (i, j, k) has linear index
// i + M*(j + M*k) with M = order + 1. Face nodes are ordered by the two
// tangential axes in increasing axis order, which makes the trace indexing
// of two abutting axis-aligned elements line up without permutation.
class ReferenceElement {
public:
  explicit ReferenceElement(int order);

  int order() const { return order_; }
  int points_per_dim() const { return m_; }
  int nodes_per_element() const { return m_ * m_ * m_; }
  int nodes_per_face() const { return m_ * m_; }

  const std::vector<double>& nodes() const { return rule_.nodes; }
  const std::vector<double>& weights() const { return rule_.weights; }
  const std::vector<double>& diff_matrix() const { return d_; } // row-major M x M

  // LGL endpoint weight w_0 = 2 / (N (N+1)); scales the collocated lift.
  double endpoint_weight() const { return rule_.weights.front(); }

  // Volume index of face node (u, v) on the given face.
  const std::vector<std::int32_t>& face_nodes(int face) const { return face_nodes_[face]; }

  // Tensor product of the 1-D weights, indexed like volume nodes.
  const std::vector<double>& volume_weights() const { return volume_weights_; }

  int node_index(int i, int j, int k) const { return i + m_ * (j + m_ * k); }

private:
  int order_;
  int m_;
  LglRule rule_;
  std::vector<double> d_;
  std::array<std::vector<std::int32_t>, kFacesPerElement> face_nodes_;
  std::vector<double> volume_weights_;
};

} // namespace nestpart
