#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "deltaconf/graph.hpp"
#include "deltaconf/recognition.hpp"

namespace deltaconf {

using NodeId = std::int64_t;

inline constexpr NodeId kNoNode = -1;

enum class JunctionKind { Delta, Lambda };

/// A Λ-junction joins its head to both tails; the tails do not meet.
/// `head` is ignored for Δ.
struct Junction {
  JunctionKind kind = JunctionKind::Delta;
  int head = 0;

  bool permits(int from, int to) const {
    return from != to && (kind == JunctionKind::Delta || from == head || to == head);
  }

  friend bool operator==(const Junction&, const Junction&) = default;
};

/// Attachment point: a leaf has the single slot 0, a junction ports 0..2.
struct Slot {
  NodeId node = kNoNode;
  int slot = 0;

  friend bool operator==(const Slot&, const Slot&) = default;
  friend auto operator<=>(const Slot&, const Slot&) = default;
};

struct TreeEdge {
  Slot a;
  Slot b;

  friend bool operator==(const TreeEdge&, const TreeEdge&) = default;
  friend auto operator<=>(const TreeEdge&, const TreeEdge&) = default;
};

/// Free tree whose leaves are graph vertices and whose inner nodes are
/// three-port junctions. Plain data; `validate_tree` checks the invariants.
struct DeltaTree {
  std::map<NodeId, Vertex> leaves;
  std::map<NodeId, Junction> junctions;
  std::vector<TreeEdge> edges;

  bool is_leaf(NodeId id) const { return leaves.count(id) > 0; }
  bool is_junction(NodeId id) const { return junctions.count(id) > 0; }
  std::size_t node_count() const { return leaves.size() + junctions.size(); }

  friend bool operator==(const DeltaTree&, const DeltaTree&) = default;
};

/// Port-indexed neighbor table of a valid tree.
class TreeAdjacency {
 public:
  explicit TreeAdjacency(const DeltaTree& t);

  /// Node and slot on the far side of (node, slot), or {kNoNode, 0}.
  Slot across(NodeId node, int slot) const;
  /// Neighbors of `node` in slot order (empty slots skipped).
  std::vector<NodeId> neighbors(NodeId node) const;
  /// The slot of `node` whose edge leads to `neighbor`; -1 if none.
  int slot_toward(NodeId node, NodeId neighbor) const;

 private:
  std::map<NodeId, std::array<Slot, 3>> ports_;
};

/// Replays `seq` backwards from a two-leaf tree. Throws ValidationError unless
/// the sequence rebuilds exactly `g`.
DeltaTree build_delta_tree(const Graph& g, const EliminationSequence& seq);

/// Leaves u, v are adjacent iff every junction on their tree path is passed
/// through a permitted port pair. Throws ValidationError on an invalid tree.
Graph semantics(const DeltaTree& t);

/// Contracts the tree back to K2, always at the lowest-id junction that has
/// two or more leaf neighbors. Throws ValidationError on an invalid tree.
EliminationSequence tree_to_sequence(const DeltaTree& t);

/// Human-readable invariant violations; empty when valid.
std::vector<std::string> validate_tree(const DeltaTree& t);

/// Lines: `leaf <id> vertex=<label>`, `junction <id> kind=delta|lambda [head=<p>]`,
/// `edge <a>:<slot> <b>:<slot>`.
std::string format_tree(const DeltaTree& t);
DeltaTree parse_tree(std::string_view text);

/// Random valid tree with `leaves` leaves (labels 0..leaves-1), random
/// topology, junction kinds, heads and port assignment. leaves >= 2.
DeltaTree random_delta_tree(std::size_t leaves, std::uint64_t seed);

/// All-Δ tree: a centre junction with three complete binary branches of the
/// given depth, 3 * 2^depth leaves. Its semantics is a clique.
DeltaTree balanced_delta_tree(int depth);

}  // namespace deltaconf
