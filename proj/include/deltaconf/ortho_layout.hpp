#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "deltaconf/delta_tree.hpp"

namespace deltaconf {

/// The tree hung from one of its leaves. children[v][0] is the heavier child.
struct RootedBinaryTree {
  NodeId root = kNoNode;
  std::map<NodeId, std::vector<NodeId>> children;
  std::map<NodeId, NodeId> parent;  // root absent
  std::vector<NodeId> bfs_order;    // root first
  std::map<NodeId, std::size_t> subtree_size;
};

/// Roots `t` at `leaf` (default: lowest-id leaf). Throws ArgumentError if the
/// id is not a leaf, ValidationError if the tree is invalid.
RootedBinaryTree root_at_leaf(const DeltaTree& t, std::optional<NodeId> leaf = std::nullopt);

struct GridPoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const GridPoint&, const GridPoint&) = default;
  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

/// y grows downward from the root. Each edge (parent, child) is one
/// axis-parallel segment.
struct OrthoLayout {
  NodeId root = kNoNode;
  std::map<NodeId, GridPoint> positions;
  std::vector<std::pair<NodeId, NodeId>> edges;

  friend bool operator==(const OrthoLayout&, const OrthoLayout&) = default;
};

/// Width budget used at the root: max(2, ceil(0.5 * sqrt(N log2 N))).
std::int64_t ortho_width_budget(std::size_t node_count);

/// Heavy-path composition under a width budget. Subtrees with at most
/// `budget` leaves are drawn right-heavy (light child below, heavy child to
/// the right); larger ones stack the heavy child under the light one, which
/// sits to the right with a budget one smaller.
OrthoLayout layout_upward_ortho(const RootedBinaryTree& rbt);

std::vector<std::string> check_ortho_valid(const OrthoLayout& l);

/// Bounding-box width times height in grid points; 0 for an empty layout.
std::int64_t ortho_area(const OrthoLayout& l);

/// Lines `node <id> <x> <y>` and `segment <parent> <child>`.
std::string format_ortho(const OrthoLayout& l);
OrthoLayout parse_ortho(std::string_view text);

}  // namespace deltaconf
