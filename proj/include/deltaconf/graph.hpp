#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace deltaconf {

using Vertex = std::int64_t;

/// Simple undirected graph over non-negative integer labels.
///
/// Vertices are kept sorted by label and addressed internally by dense index;
/// adjacency lists hold indices in ascending order. Instances are immutable
/// once built: use `Graph::Builder` or the named constructors.
class Graph {
 public:
  class Builder {
   public:
    Builder& add_vertex(Vertex v);
    /// Adds both endpoints and the edge. Throws ArgumentError on a self-loop
    /// or a negative label. Duplicate edges collapse.
    Builder& add_edge(Vertex u, Vertex v);
    Graph build() const;

   private:
    std::vector<Vertex> vertices_;
    std::vector<std::pair<Vertex, Vertex>> edges_;
  };

  Graph() = default;

  static Graph complete(std::size_t n);
  static Graph path(std::size_t n);
  static Graph cycle(std::size_t n);
  static Graph complete_bipartite(std::size_t a, std::size_t b);

  std::size_t order() const noexcept { return labels_.size(); }
  std::size_t size() const noexcept { return edge_count_; }
  bool empty() const noexcept { return labels_.empty(); }

  const std::vector<Vertex>& vertices() const noexcept { return labels_; }
  Vertex label(std::size_t index) const { return labels_.at(index); }
  std::optional<std::size_t> index_of(Vertex v) const;
  bool contains(Vertex v) const { return index_of(v).has_value(); }

  /// Neighbor indices of the vertex at `index`, ascending.
  const std::vector<std::size_t>& neighbors_of_index(std::size_t index) const {
    return adjacency_.at(index);
  }
  std::vector<Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const;
  bool has_edge_index(std::size_t i, std::size_t j) const;

  /// Edges as (u, v) label pairs with u < v, sorted.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  bool is_connected() const;
  Graph induced_subgraph(const std::vector<Vertex>& keep) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.labels_ == b.labels_ && a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<Vertex> labels_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Label-respecting equality: same vertex set and same adjacency relation.
inline bool graph_equals(const Graph& a, const Graph& b) { return a == b; }

/// Reads the edge-list format: one `u v` edge or lone `u` vertex per line,
/// `#` comment lines and blank lines ignored.
Graph parse_graph(std::string_view text);

/// Writes edges as `u v` lines (sorted), then isolated vertices as lone lines.
std::string format_edge_list(const Graph& g);

/// `{"vertices": [...], "edges": [[u, v], ...]}`
std::string graph_to_json(const Graph& g);
Graph graph_from_json(std::string_view text);

enum class ExtensionKind { Pendant, TrueTwin, FalseTwin };

std::string_view to_string(ExtensionKind kind);

struct ExtensionStep {
  ExtensionKind kind;
  Vertex new_vertex;
  Vertex anchor_vertex;

  friend bool operator==(const ExtensionStep&, const ExtensionStep&) = default;
};

struct ExtensionTrace {
  std::pair<Vertex, Vertex> base;
  std::vector<ExtensionStep> steps;
};

/// Replays a trace from K2 on `trace.base`. Throws ValidationError when a step
/// names a missing anchor or an already-present new vertex.
Graph replay_extensions(const ExtensionTrace& trace);

/// Probability triple over {Pendant, TrueTwin, FalseTwin}.
struct ExtensionWeights {
  double pendant = 1.0 / 3.0;
  double true_twin = 1.0 / 3.0;
  double false_twin = 1.0 / 3.0;
};

/// Parses `p,t,f`. Throws ArgumentError unless three non-negative numbers summing to 1.
ExtensionWeights parse_weights(std::string_view text);

struct GeneratedGraph {
  Graph graph;
  ExtensionTrace trace;
};

/// Random distance-hereditary graph on labels 0..n-1 grown from K2 on {0, 1}
/// by one-vertex extensions; the anchor is uniform over existing vertices.
GeneratedGraph gen_dh_random(std::size_t n, std::uint64_t seed,
                             const ExtensionWeights& weights = {});

/// G(n, p): each pair independently present with probability p.
Graph gen_gnp(std::size_t n, double p, std::uint64_t seed);

/// All-pairs hop distances, rows and columns in `vertices` order.
struct DistanceMatrix {
  static constexpr int kInfinity = std::numeric_limits<int>::max();

  std::vector<Vertex> vertices;
  std::vector<int> values;

  int at_index(std::size_t i, std::size_t j) const { return values[i * vertices.size() + j]; }
  int at(Vertex u, Vertex v) const;
};

DistanceMatrix distances_bfs(const Graph& g);

}  // namespace deltaconf
