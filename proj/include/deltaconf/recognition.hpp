#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "deltaconf/graph.hpp"

namespace deltaconf {

enum class EliminationKind { PendantCut, TrueTwinMerge, FalseTwinMerge };

/// One reduction step. For a cut, `removed` is the pendant vertex and
/// `survivor` its sole neighbor; for a merge, `removed` is identified into
/// `survivor`.
struct EliminationStep {
  EliminationKind kind;
  Vertex removed;
  Vertex survivor;

  friend bool operator==(const EliminationStep&, const EliminationStep&) = default;
};

/// Steps in application order, reducing the graph to K2 on `terminal_pair`.
struct EliminationSequence {
  std::vector<EliminationStep> steps;
  std::pair<Vertex, Vertex> terminal_pair;

  friend bool operator==(const EliminationSequence&, const EliminationSequence&) = default;
};

/// Computes an elimination sequence by greedy scanning. Each round cuts the
/// lowest-labelled pendant vertex; failing that, it merges the lowest-labelled
/// vertex that has a twin into its lowest-labelled twin.
///
/// Throws RecognitionError (TooSmall, Disconnected, NotDistanceHereditary).
EliminationSequence eliminate(const Graph& g);

/// Vertex limit of the exhaustive routines below.
inline constexpr std::size_t kOracleMaxVertices = 14;

/// Definition-level check: connected, and every connected induced subgraph
/// keeps the pairwise distances of `g`. Exponential; throws TooLargeError
/// above kOracleMaxVertices. K1 is accepted, the empty graph rejected.
bool is_distance_hereditary_oracle(const Graph& g);

/// Rebuilds the graph by replaying `seq` backwards as one-vertex extensions
/// from K2 on the terminal pair. Throws ValidationError on an inconsistent step.
Graph apply_sequence_forward(const EliminationSequence& seq);

/// First vertex subset of size >= k (largest sizes first, lexicographic within
/// a size) whose induced subgraph passes the oracle.
std::optional<std::vector<Vertex>> max_dh_subgraph_bruteforce(const Graph& g, std::size_t k);

/// Line format: `<removed> merged into <survivor> true|false`,
/// `<removed> cut from <survivor>`, and a final `K2: <u> <v>`.
std::string format_sequence(const EliminationSequence& seq);
EliminationSequence parse_sequence(std::string_view text);

}  // namespace deltaconf
