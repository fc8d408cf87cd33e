#include "nestpart/reference_element.hpp"

namespace nestpart {

ReferenceElement::ReferenceElement(int order)
    : order_(order), m_(order + 1), rule_(lgl_nodes_weights(order)),
      d_(differentiation_matrix(rule_.nodes)) {
  for (int face = 0; face < kFacesPerElement; ++face) {
    const int axis = face_axis(face);
    const int fixed = face_side(face) == 0 ? 0 : order_;
    const int t1 = axis == 0 ? 1 : 0;
    const int t2 = axis == 2 ? 1 : 2;
    auto& map = face_nodes_[face];
    map.resize(static_cast<std::size_t>(m_) * m_);
    for (int v = 0; v < m_; ++v) {
      for (int u = 0; u < m_; ++u) {
        int coords[3];
        coords[axis] = fixed;
        coords[t1] = u;
        coords[t2] = v;
        map[u + m_ * v] = static_cast<std::int32_t>(node_index(coords[0], coords[1], coords[2]));
      }
    }
  }

  volume_weights_.resize(static_cast<std::size_t>(m_) * m_ * m_);
  for (int k = 0; k < m_; ++k) {
    for (int j = 0; j < m_; ++j) {
      for (int i = 0; i < m_; ++i) {
        volume_weights_[node_index(i, j, k)] =
            rule_.weights[i] * rule_.weights[j] * rule_.weights[k];
      }
    }
  }
}

} // namespace nestpart
