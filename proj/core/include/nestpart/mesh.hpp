#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "nestpart/morton.hpp"

namespace nestpart {

// One cubic brick of the forest. Bricks are axis-aligned unit-shaped cubes on
// a common lattice; material_id selects the per-tree material in solver
// configs.
struct TreeDesc {
  std::array<double, 3> origin{0.0, 0.0, 0.0};
  int material_id = 0;
};

struct MeshConfig {
  std::vector<TreeDesc> trees;
  int level = 0;          // uniform refinement: 8^level elements per tree
  double element_size = 1.0; // physical edge length of one element
};

struct Element {
  std::int32_t tree = 0;
  MortonKey key;
};

// A face neighbor reference: the adjacent element and the local face index
// on that element, or a boundary marker.
struct FaceNeighbor {
  static constexpr std::int64_t kBoundary = -1;
  std::int64_t element = kBoundary;
  std::uint8_t face = 0;

  bool is_boundary() const { return element == kBoundary; }
};

// Morton-ordered uniform forest of hexahedral elements with full
// face adjacency. Construction is single-threaded; the result is immutable
// and safe to share across readers.
class Mesh {
public:
  static Mesh build(const MeshConfig& config);

  const MeshConfig& config() const { return config_; }
  int level() const { return config_.level; }
  double element_size() const { return config_.element_size; }
  std::int64_t element_count() const { return static_cast<std::int64_t>(elements_.size()); }
  const std::vector<Element>& elements() const { return elements_; }

  const std::array<FaceNeighbor, 6>& neighbors(std::int64_t element) const {
    return adjacency_[static_cast<std::size_t>(element)];
  }

  int tree_of(std::int64_t element) const { return elements_[static_cast<std::size_t>(element)].tree; }
  int material_of(std::int64_t element) const {
    return config_.trees[static_cast<std::size_t>(tree_of(element))].material_id;
  }

  // Physical coordinates of the low corner of an element.
  std::array<double, 3> element_origin(std::int64_t element) const;

  // Axis-aligned bounding box of the whole forest.
  std::array<double, 3> domain_lo() const { return domain_lo_; }
  std::array<double, 3> domain_hi() const { return domain_hi_; }

  std::int64_t elements_per_tree() const { return elements_per_tree_; }

private:
  MeshConfig config_;
  std::vector<Element> elements_;
  std::vector<std::array<FaceNeighbor, 6>> adjacency_;
  std::array<double, 3> domain_lo_{};
  std::array<double, 3> domain_hi_{};
  std::int64_t elements_per_tree_ = 0;
};

Mesh build_mesh(const MeshConfig& config);

// JSON round trip for the config; adjacency is always recomputed on load.
std::string mesh_config_to_json(const MeshConfig& config);
MeshConfig mesh_config_from_json(const std::string& text);
void save_mesh(const MeshConfig& config, const std::filesystem::path& path);
Mesh load_mesh(const std::filesystem::path& path);

} // namespace nestpart
