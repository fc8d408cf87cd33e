#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "nestpart/mesh.hpp"

namespace nestpart {

// Interior face listed once; the minus side is the lower element id, so the
// record carries a canonical orientation.
struct InteriorFace {
  std::int64_t elem_minus = 0;
  std::int64_t elem_plus = 0;
  std::uint8_t face_minus = 0;
  std::uint8_t face_plus = 0;
};

struct BoundaryFace {
  std::int64_t elem = 0;
  std::uint8_t face = 0;
  std::array<double, 3> normal{0.0, 0.0, 0.0}; // unit outward
};

// Deduplicated face lists. Extraction sweeps elements in id order and local
// faces 0..5, so list order (and the sweep key 6*elem + face of the minus
// side) is a stable global face ordering.
struct FaceMesh {
  std::vector<InteriorFace> interior;
  std::vector<BoundaryFace> boundary;
};

FaceMesh extract_face_mesh(const Mesh& mesh);

} // namespace nestpart
