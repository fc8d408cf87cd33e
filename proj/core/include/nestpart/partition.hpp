#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "nestpart/face_mesh.hpp"
#include "nestpart/mesh.hpp"

namespace nestpart {

// Half-open index range into the Morton-sorted global element list.
struct ElementRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  std::int64_t size() const { return hi - lo; }
  bool contains(std::int64_t e) const { return e >= lo && e < hi; }
};

// First-level split: one contiguous Morton range per compute node.
// Ranges are disjoint, cover all elements, and differ in size by at most one.
struct NodePartition {
  std::vector<ElementRange> ranges;

  int node_count() const { return static_cast<int>(ranges.size()); }
  int node_of(std::int64_t element) const;
};

// A face straddling the host/device boundary inside one node.
struct SharedFace {
  std::int64_t host_elem = 0;
  std::int64_t dev_elem = 0;
  std::uint8_t host_face = 0;
  std::uint8_t dev_face = 0;
};

// Second-level split: per-node sets of interior elements offloaded to the
// device, the host complement being implicit, plus the host/device shared
// faces that must be exchanged every step.
struct NestedPartition {
  NodePartition node;
  std::vector<std::vector<std::int64_t>> device_sets; // sorted ascending per node
  std::vector<std::vector<SharedFace>> shared_faces;
  std::vector<bool> clamped; // device demand exceeded interior supply

  std::vector<std::int64_t> host_set(int node_id) const;
  bool on_device(int node_id, std::int64_t element) const;
};

struct NodeStats {
  std::int64_t k = 0;
  std::int64_t k_dev = 0;
  std::int64_t k_host = 0;
  std::int64_t surface_faces = 0;
  std::int64_t transfer_dof = 0; // 2 * surface_faces * (N+1)^2 * 12
  bool clamped = false;
};

struct PartitionStats {
  std::vector<NodeStats> nodes;
};

// Callback deciding how many elements of a node go to the device. Receives
// the node id, the node's element count, and its interior count.
using Balancer = std::function<std::int64_t(int node_id, std::int64_t k, std::int64_t interior)>;

// Balancer realizing a device/host ratio r: k_dev = round(k * r / (1 + r)).
Balancer ratio_balancer(double device_host_ratio);

// Splices the Morton-ordered element list into node_count contiguous ranges
// with sizes differing by at most one (the first remainder ranges get the
// extra element).
NodePartition splice(const Mesh& mesh, int node_count);

// Elements of the node none of whose neighbors lie in another node's range.
// Domain-boundary faces do not disqualify. Returned ascending.
std::vector<std::int64_t> interior_elements(const Mesh& mesh, const NodePartition& part,
                                            int node_id);

// Grows a deterministic device set of k_dev interior elements.
//
// Growth is breadth-first ball growth over the face-adjacency graph
// restricted to the interior set: the seed is the interior element farthest
// (in graph distance over the node's elements) from the node's non-interior
// elements, ties to the smallest element id; expansion always takes the
// frontier candidate with the most already-selected neighbors, ties again to
// the smallest id. If the interior set is disconnected and a component is
// exhausted, growth reseeds at the smallest remaining interior id.
//
// Throws InfeasiblePartitionError when k_dev exceeds the interior count.
std::vector<std::int64_t> grow_device_set(const Mesh& mesh, const NodePartition& part,
                                          int node_id, std::int64_t k_dev);

// Two-level partition: splice across nodes, then grow each node's device set
// with the k_dev demanded by the balancer. Demands beyond the interior
// supply are clamped to it and flagged in the result and stats.
NestedPartition nested_partition(const Mesh& mesh, int node_count, const Balancer& balancer);

PartitionStats partition_stats(const NestedPartition& part, int order);

// JSON round trip: per-node {range, device_elems}; shared faces are
// recomputed against the mesh on load.
std::string partition_to_json(const NestedPartition& part);
NestedPartition partition_from_json(const std::string& text, const Mesh& mesh);
void save_partition(const NestedPartition& part, const std::filesystem::path& path);
NestedPartition load_partition(const std::filesystem::path& path, const Mesh& mesh);

// CSV: node,K,K_dev,surface_faces,transfer_dof,clamped
std::string partition_stats_csv(const PartitionStats& stats);

} // namespace nestpart
