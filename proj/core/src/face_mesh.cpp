#include "nestpart/face_mesh.hpp"

#include "nestpart/reference_element.hpp"

namespace nestpart {

FaceMesh extract_face_mesh(const Mesh& mesh) {
  FaceMesh faces;
  const std::int64_t n = mesh.element_count();
  faces.interior.reserve(static_cast<std::size_t>(3 * n));
  for (std::int64_t e = 0; e < n; ++e) {
    const auto& nbrs = mesh.neighbors(e);
    for (int face = 0; face < kFacesPerElement; ++face) {
      const FaceNeighbor& nbr = nbrs[static_cast<std::size_t>(face)];
      if (nbr.is_boundary()) {
        BoundaryFace bf;
        bf.elem = e;
        bf.face = static_cast<std::uint8_t>(face);
        bf.normal[face_axis(face)] = face_side(face) == 0 ? -1.0 : 1.0;
        faces.boundary.push_back(bf);
      } else if (e < nbr.element) {
        faces.interior.push_back(InteriorFace{e, nbr.element, static_cast<std::uint8_t>(face),
                                              nbr.face});
      }
    }
  }
  return faces;
}

} // namespace nestpart
