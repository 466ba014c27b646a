#include "deltaconf/recognition.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdint>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "deltaconf/errors.hpp"
#include "random.hpp"

namespace deltaconf {

namespace {

// Twin candidates are found through neighborhood fingerprints: the sum of a
// random key per neighbor (open) or per closed-neighbor (closed). Vertices with
// equal open fingerprints are false twins, equal closed ones true twins. Every
// proposed pair is re-verified exactly before use.
class TwinIndex {
 public:
  void insert(std::uint64_t h, std::size_t v) {
    auto& bucket = buckets_[h];
    drop(bucket);
    bucket.insert(v);
    add(bucket);
  }

  void erase(std::uint64_t h, std::size_t v) {
    const auto it = buckets_.find(h);
    drop(it->second);
    it->second.erase(v);
    if (it->second.empty()) buckets_.erase(it);
    else add(it->second);
  }

  /// Lowest (second-smallest member, smallest member) over all buckets.
  std::optional<std::pair<std::size_t, std::size_t>> best() const {
    if (candidates_.empty()) return std::nullopt;
    return *candidates_.begin();
  }

 private:
  void drop(const std::set<std::size_t>& bucket) {
    if (bucket.size() >= 2) candidates_.erase(candidates_.find(key(bucket)));
  }
  void add(const std::set<std::size_t>& bucket) {
    if (bucket.size() >= 2) candidates_.insert(key(bucket));
  }
  static std::pair<std::size_t, std::size_t> key(const std::set<std::size_t>& bucket) {
    auto it = bucket.begin();
    const auto first = *it;
    return {*++it, first};
  }

  std::unordered_map<std::uint64_t, std::set<std::size_t>> buckets_;
  std::multiset<std::pair<std::size_t, std::size_t>> candidates_;
};

class Eliminator {
 public:
  explicit Eliminator(const Graph& g) : g_(g), n_(g.order()), adj_(n_), key_(n_), open_(n_, 0) {
    for (std::size_t i = 0; i < n_; ++i) {
      key_[i] = detail::splitmix64(0x5eed0000ULL + i);
      adj_[i].insert(g.neighbors_of_index(i).begin(), g.neighbors_of_index(i).end());
    }
    for (std::size_t i = 0; i < n_; ++i) {
      for (auto j : adj_[i]) open_[i] += key_[j];
      index(i);
      if (adj_[i].size() == 1) pendants_.insert(i);
    }
    alive_ = n_;
    present_.assign(n_, 1);
  }

  EliminationSequence run() {
    EliminationSequence seq;
    seq.steps.reserve(n_ - 2);
    while (alive_ > 2) {
      if (!pendants_.empty()) {
        const auto v = *pendants_.begin();
        const auto u = *adj_[v].begin();
        seq.steps.push_back({EliminationKind::PendantCut, g_.label(v), g_.label(u)});
        remove(v);
        continue;
      }
      auto pair = choose_twins();
      if (!pair) {
        throw RecognitionError(RecognitionError::Reason::NotDistanceHereditary,
                               "not distance-hereditary: residual graph on " + std::to_string(alive_) +
                                   " vertices has neither a pendant vertex nor a twin pair");
      }
      const auto [v, u] = *pair;
      const auto kind = adj_[v].count(u) ? EliminationKind::TrueTwinMerge : EliminationKind::FalseTwinMerge;
      seq.steps.push_back({kind, g_.label(v), g_.label(u)});
      remove(v);
    }
    std::vector<Vertex> rest;
    for (std::size_t i = 0; i < n_; ++i)
      if (present_[i]) rest.push_back(g_.label(i));
    seq.terminal_pair = {rest[0], rest[1]};
    return seq;
  }

 private:
  std::uint64_t closed(std::size_t v) const { return open_[v] + key_[v]; }

  void index(std::size_t v) {
    false_twins_.insert(open_[v], v);
    true_twins_.insert(closed(v), v);
  }
  void unindex(std::size_t v) {
    false_twins_.erase(open_[v], v);
    true_twins_.erase(closed(v), v);
  }

  bool twins(std::size_t v, std::size_t u) const {
    const bool adjacent = adj_[v].count(u) > 0;
    const auto expected = adj_[v].size();
    if (adj_[u].size() != expected) return false;
    for (auto w : adj_[v]) {
      if (w == u) continue;
      if (!adj_[u].count(w)) return false;
    }
    return !adjacent || adj_[u].count(v) > 0;
  }

  std::optional<std::pair<std::size_t, std::size_t>> choose_twins() const {
    auto a = false_twins_.best();
    auto b = true_twins_.best();
    std::optional<std::pair<std::size_t, std::size_t>> pick;
    if (a && b) pick = std::min(*a, *b);
    else pick = a ? a : b;
    if (!pick || twins(pick->first, pick->second)) {
      if (pick) return pick;
      return std::nullopt;
    }
    // Fingerprint collision: fall back to an exact scan for this round.
    for (std::size_t v = 0; v < n_; ++v) {
      if (!present_[v]) continue;
      for (std::size_t u = 0; u < v; ++u)
        if (present_[u] && twins(v, u)) return std::make_pair(v, u);
    }
    return std::nullopt;
  }

  void remove(std::size_t v) {
    unindex(v);
    pendants_.erase(v);
    for (auto w : adj_[v]) {
      unindex(w);
      pendants_.erase(w);
      adj_[w].erase(v);
      open_[w] -= key_[v];
      index(w);
      if (adj_[w].size() == 1) pendants_.insert(w);
    }
    adj_[v].clear();
    present_[v] = 0;
    --alive_;
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<std::unordered_set<std::size_t>> adj_;
  std::vector<std::uint64_t> key_;
  std::vector<std::uint64_t> open_;
  std::vector<char> present_;
  std::size_t alive_ = 0;
  std::set<std::size_t> pendants_;
  TwinIndex false_twins_;
  TwinIndex true_twins_;
};

using Mask = std::uint32_t;

bool mask_connected(const std::vector<Mask>& adj, Mask universe) {
  if (universe == 0) return false;
  Mask seen = universe & (~universe + 1);
  Mask frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
    next &= universe & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == universe;
}

// BFS levels from `s` inside `universe`; calls visit(t, depth) for each reached t.
template <typename Visit>
bool bfs_levels(const std::vector<Mask>& adj, Mask universe, std::size_t s, Visit&& visit) {
  Mask seen = Mask{1} << s;
  Mask frontier = seen;
  int depth = 0;
  while (frontier) {
    for (Mask f = frontier; f; f &= f - 1)
      if (!visit(static_cast<std::size_t>(std::countr_zero(f)), depth)) return false;
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
    next &= universe & ~seen;
    seen |= next;
    frontier = next;
    ++depth;
  }
  return true;
}

// Distance-hereditary test on the subgraph induced by `universe`.
bool dh_on_mask(const std::vector<Mask>& adj, Mask universe) {
  const int count = std::popcount(universe);
  if (count == 0) return false;
  if (!mask_connected(adj, universe)) return false;
  if (count <= 3) return true;

  constexpr int kMax = static_cast<int>(kOracleMaxVertices);
  int dist[kMax][kMax] = {};
  for (Mask u = universe; u; u &= u - 1) {
    const auto s = static_cast<std::size_t>(std::countr_zero(u));
    bfs_levels(adj, universe, s, [&](std::size_t t, int d) {
      dist[s][t] = d;
      return true;
    });
  }

  // Enumerate proper sub-masks of `universe` with at least three vertices.
  for (Mask sub = (universe - 1) & universe; sub; sub = (sub - 1) & universe) {
    if (std::popcount(sub) < 3 || !mask_connected(adj, sub)) continue;
    for (Mask u = sub; u; u &= u - 1) {
      const auto s = static_cast<std::size_t>(std::countr_zero(u));
      const bool ok = bfs_levels(adj, sub, s, [&](std::size_t t, int d) { return dist[s][t] == d; });
      if (!ok) return false;
    }
  }
  return true;
}

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.order(), 0);
  for (std::size_t i = 0; i < g.order(); ++i)
    for (auto j : g.neighbors_of_index(i)) adj[i] |= Mask{1} << j;
  return adj;
}

void guard(const Graph& g) {
  if (g.order() > kOracleMaxVertices) {
    throw TooLargeError("exhaustive check limited to " + std::to_string(kOracleMaxVertices) + " vertices, got " +
                        std::to_string(g.order()));
  }
}

}  // namespace

EliminationSequence eliminate(const Graph& g) {
  if (g.order() < 2) {
    throw RecognitionError(RecognitionError::Reason::TooSmall, "not distance-hereditary: fewer than two vertices");
  }
  if (!g.is_connected()) {
    throw RecognitionError(RecognitionError::Reason::Disconnected, "not distance-hereditary: graph is disconnected");
  }
  return Eliminator(g).run();
}

bool is_distance_hereditary_oracle(const Graph& g) {
  guard(g);
  if (g.empty()) return false;
  const Mask all = g.order() == 32 ? ~Mask{0} : (Mask{1} << g.order()) - 1;
  return dh_on_mask(adjacency_masks(g), all);
}

Graph apply_sequence_forward(const EliminationSequence& seq) {
  ExtensionTrace trace{seq.terminal_pair, {}};
  trace.steps.reserve(seq.steps.size());
  for (auto it = seq.steps.rbegin(); it != seq.steps.rend(); ++it) {
    ExtensionKind kind = ExtensionKind::Pendant;
    if (it->kind == EliminationKind::TrueTwinMerge) kind = ExtensionKind::TrueTwin;
    if (it->kind == EliminationKind::FalseTwinMerge) kind = ExtensionKind::FalseTwin;
    trace.steps.push_back({kind, it->removed, it->survivor});
  }
  return replay_extensions(trace);
}

std::optional<std::vector<Vertex>> max_dh_subgraph_bruteforce(const Graph& g, std::size_t k) {
  guard(g);
  const auto n = g.order();
  const auto adj = adjacency_masks(g);
  const std::size_t smallest = std::max<std::size_t>(k, 1);
  for (std::size_t size = n; size >= smallest && size > 0; --size) {
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      Mask m = 0;
      for (auto i : pick) m |= Mask{1} << i;
      if (dh_on_mask(adj, m)) {
        std::vector<Vertex> out;
        for (auto i : pick) out.push_back(g.label(i));
        return out;
      }
      // Next combination in lexicographic order.
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == n - size + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

std::string format_sequence(const EliminationSequence& seq) {
  std::ostringstream out;
  for (const auto& s : seq.steps) {
    switch (s.kind) {
      case EliminationKind::PendantCut: out << s.removed << " cut from " << s.survivor << '\n'; break;
      case EliminationKind::TrueTwinMerge: out << s.removed << " merged into " << s.survivor << " true\n"; break;
      case EliminationKind::FalseTwinMerge: out << s.removed << " merged into " << s.survivor << " false\n"; break;
    }
  }
  out << "K2: " << seq.terminal_pair.first << ' ' << seq.terminal_pair.second << '\n';
  return out.str();
}

EliminationSequence parse_sequence(std::string_view text) {
  EliminationSequence seq;
  bool terminal = false;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  auto number = [&](const std::string& tok) {
    Vertex v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || v < 0)
      throw ParseError(line_no, "malformed vertex `" + tok + "`");
    return v;
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::vector<std::string> t;
    for (std::string w; ls >> w;) t.push_back(w);
    if (t.empty() || t[0][0] == '#') continue;
    if (terminal) throw ParseError(line_no, "content after the `K2:` line");
    if (t[0] == "K2:") {
      if (t.size() != 3) throw ParseError(line_no, "expected `K2: <u> <v>`");
      seq.terminal_pair = {number(t[1]), number(t[2])};
      terminal = true;
    } else if (t.size() == 4 && t[1] == "cut" && t[2] == "from") {
      seq.steps.push_back({EliminationKind::PendantCut, number(t[0]), number(t[3])});
    } else if (t.size() == 5 && t[1] == "merged" && t[2] == "into" && (t[4] == "true" || t[4] == "false")) {
      const auto kind = t[4] == "true" ? EliminationKind::TrueTwinMerge : EliminationKind::FalseTwinMerge;
      seq.steps.push_back({kind, number(t[0]), number(t[3])});
    } else {
      throw ParseError(line_no, "unrecognised sequence line `" + line + "`");
    }
  }
  if (!terminal) throw ParseError(line_no, "missing `K2: <u> <v>` line");
  return seq;
}

}  // namespace deltaconf
