#include "nestpart/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "nestpart/error.hpp"
#include "nestpart/reference_element.hpp"

namespace nestpart {

namespace {

constexpr int kMaxTrees = 8;
constexpr int kMaxLevel = 8;

using LatticePos = std::array<std::int64_t, 3>;

// Brick lattice position of a tree, derived from its physical origin.
LatticePos lattice_position(const TreeDesc& tree, double brick_edge) {
  LatticePos pos;
  for (int a = 0; a < 3; ++a) {
    const double scaled = tree.origin[a] / brick_edge;
    const double rounded = std::round(scaled);
    if (std::abs(scaled - rounded) > 1e-9) {
      throw ValidationError("tree origins must lie on the brick lattice (origin component " +
                            std::to_string(tree.origin[a]) + " is not a multiple of " +
                            std::to_string(brick_edge) + ")");
    }
    pos[a] = static_cast<std::int64_t>(rounded);
  }
  return pos;
}

} // namespace

Mesh Mesh::build(const MeshConfig& config) {
  if (config.trees.empty() || static_cast<int>(config.trees.size()) > kMaxTrees) {
    throw ValidationError("tree count must be in [1, " + std::to_string(kMaxTrees) + "]");
  }
  if (config.level < 0 || config.level > kMaxLevel) {
    throw ValidationError("mesh level must be in [0, " + std::to_string(kMaxLevel) + "]");
  }
  if (!(config.element_size > 0.0)) {
    throw ValidationError("element_size must be positive");
  }

  Mesh mesh;
  mesh.config_ = config;

  const int level = config.level;
  const std::int64_t side = std::int64_t{1} << level;
  const double brick_edge = config.element_size * static_cast<double>(side);
  mesh.elements_per_tree_ = side * side * side;

  std::map<LatticePos, std::int32_t> brick_at;
  std::vector<LatticePos> positions;
  positions.reserve(config.trees.size());
  for (std::size_t t = 0; t < config.trees.size(); ++t) {
    const LatticePos pos = lattice_position(config.trees[t], brick_edge);
    if (!brick_at.emplace(pos, static_cast<std::int32_t>(t)).second) {
      throw ValidationError("overlapping tree origins");
    }
    positions.push_back(pos);
  }

  // A forest must be face-connected so inter-tree faces exist where bricks
  // abut.
  if (config.trees.size() > 1) {
    std::vector<char> seen(config.trees.size(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const std::size_t t = stack.back();
      stack.pop_back();
      for (int face = 0; face < 6; ++face) {
        LatticePos p = positions[t];
        p[face_axis(face)] += face_side(face) == 0 ? -1 : 1;
        const auto it = brick_at.find(p);
        if (it != brick_at.end() && !seen[it->second]) {
          seen[it->second] = 1;
          stack.push_back(static_cast<std::size_t>(it->second));
          ++reached;
        }
      }
    }
    if (reached != config.trees.size()) {
      throw ValidationError("non-abutting forest: trees do not form a face-connected set");
    }
  }

  const std::int64_t total = mesh.elements_per_tree_ * static_cast<std::int64_t>(config.trees.size());
  mesh.elements_.reserve(static_cast<std::size_t>(total));
  for (std::int32_t t = 0; t < static_cast<std::int32_t>(config.trees.size()); ++t) {
    for (std::int64_t code = 0; code < mesh.elements_per_tree_; ++code) {
      mesh.elements_.push_back(Element{t, MortonKey{static_cast<std::uint64_t>(code), level}});
    }
  }

  mesh.adjacency_.resize(static_cast<std::size_t>(total));
  for (std::int64_t e = 0; e < total; ++e) {
    const Element& elem = mesh.elements_[static_cast<std::size_t>(e)];
    const auto local = morton_decode(elem.key);
    const LatticePos brick = positions[static_cast<std::size_t>(elem.tree)];
    for (int face = 0; face < 6; ++face) {
      const int axis = face_axis(face);
      std::int64_t coords[3] = {
          brick[0] * side + local[0],
          brick[1] * side + local[1],
          brick[2] * side + local[2],
      };
      coords[axis] += face_side(face) == 0 ? -1 : 1;

      LatticePos nbr_brick;
      std::uint32_t nbr_local[3];
      bool outside = false;
      for (int a = 0; a < 3; ++a) {
        // floor division: coords may be negative by one brick
        std::int64_t b = coords[a] >= 0 ? coords[a] / side : -(((-coords[a]) + side - 1) / side);
        nbr_brick[a] = b;
        nbr_local[a] = static_cast<std::uint32_t>(coords[a] - b * side);
        (void)outside;
      }
      const auto it = brick_at.find(nbr_brick);
      auto& entry = mesh.adjacency_[static_cast<std::size_t>(e)][static_cast<std::size_t>(face)];
      if (it == brick_at.end()) {
        entry = FaceNeighbor{}; // boundary
      } else {
        const MortonKey key = morton_encode(nbr_local[0], nbr_local[1], nbr_local[2], level);
        const std::int64_t nbr =
            static_cast<std::int64_t>(it->second) * mesh.elements_per_tree_ +
            static_cast<std::int64_t>(key.code);
        entry.element = nbr;
        entry.face = static_cast<std::uint8_t>(opposite_face(face));
      }
    }
  }

  for (int a = 0; a < 3; ++a) {
    double lo = positions[0][a], hi = positions[0][a];
    for (const auto& p : positions) {
      lo = std::min(lo, static_cast<double>(p[a]));
      hi = std::max(hi, static_cast<double>(p[a]));
    }
    mesh.domain_lo_[a] = lo * brick_edge;
    mesh.domain_hi_[a] = (hi + 1.0) * brick_edge;
  }

  return mesh;
}

std::array<double, 3> Mesh::element_origin(std::int64_t element) const {
  const Element& elem = elements_[static_cast<std::size_t>(element)];
  const auto local = morton_decode(elem.key);
  const TreeDesc& tree = config_.trees[static_cast<std::size_t>(elem.tree)];
  return {
      tree.origin[0] + config_.element_size * static_cast<double>(local[0]),
      tree.origin[1] + config_.element_size * static_cast<double>(local[1]),
      tree.origin[2] + config_.element_size * static_cast<double>(local[2]),
  };
}

Mesh build_mesh(const MeshConfig& config) { return Mesh::build(config); }

std::string mesh_config_to_json(const MeshConfig& config) {
  nlohmann::json trees = nlohmann::json::array();
  for (const auto& tree : config.trees) {
    trees.push_back({{"origin", tree.origin}, {"material_id", tree.material_id}});
  }
  nlohmann::json j{
      {"trees", trees},
      {"level", config.level},
      {"element_size", config.element_size},
  };
  return j.dump(2) + "\n";
}

MeshConfig mesh_config_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("invalid mesh JSON: ") + e.what());
  }
  MeshConfig config;
  try {
    for (const auto& t : j.at("trees")) {
      TreeDesc tree;
      tree.origin = t.at("origin").get<std::array<double, 3>>();
      tree.material_id = t.at("material_id").get<int>();
      config.trees.push_back(tree);
    }
    config.level = j.at("level").get<int>();
    config.element_size = j.at("element_size").get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("invalid mesh JSON: ") + e.what());
  }
  return config;
}

void save_mesh(const MeshConfig& config, const std::filesystem::path& path) {
  Mesh::build(config); // validate before writing anything
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << mesh_config_to_json(config);
}

Mesh load_mesh(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open mesh file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return Mesh::build(mesh_config_from_json(buffer.str()));
}

} // namespace nestpart
