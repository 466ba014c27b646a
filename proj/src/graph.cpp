#include "deltaconf/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <deque>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "deltaconf/errors.hpp"
#include "random.hpp"

namespace deltaconf {

namespace {

void require_label(Vertex v) {
  if (v < 0) throw ArgumentError("negative vertex label " + std::to_string(v));
}

}  // namespace

Graph::Builder& Graph::Builder::add_vertex(Vertex v) {
  require_label(v);
  vertices_.push_back(v);
  return *this;
}

Graph::Builder& Graph::Builder::add_edge(Vertex u, Vertex v) {
  require_label(u);
  require_label(v);
  if (u == v) throw ArgumentError("self-loop at vertex " + std::to_string(u));
  vertices_.push_back(u);
  vertices_.push_back(v);
  edges_.emplace_back(std::min(u, v), std::max(u, v));
  return *this;
}

Graph Graph::Builder::build() const {
  Graph g;
  g.labels_ = vertices_;
  std::sort(g.labels_.begin(), g.labels_.end());
  g.labels_.erase(std::unique(g.labels_.begin(), g.labels_.end()), g.labels_.end());
  g.adjacency_.assign(g.labels_.size(), {});

  auto edges = edges_;
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (const auto& [u, v] : edges) {
    const auto i = *g.index_of(u);
    const auto j = *g.index_of(v);
    g.adjacency_[i].push_back(j);
    g.adjacency_[j].push_back(i);
  }
  for (auto& list : g.adjacency_) std::sort(list.begin(), list.end());
  g.edge_count_ = edges.size();
  return g;
}

Graph Graph::complete(std::size_t n) {
  Builder b;
  for (std::size_t i = 0; i < n; ++i) {
    b.add_vertex(static_cast<Vertex>(i));
    for (std::size_t j = i + 1; j < n; ++j) b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  }
  return b.build();
}

Graph Graph::path(std::size_t n) {
  Builder b;
  for (std::size_t i = 0; i < n; ++i) {
    b.add_vertex(static_cast<Vertex>(i));
    if (i > 0) b.add_edge(static_cast<Vertex>(i - 1), static_cast<Vertex>(i));
  }
  return b.build();
}

Graph Graph::cycle(std::size_t n) {
  Builder b;
  for (std::size_t i = 0; i < n; ++i) {
    b.add_vertex(static_cast<Vertex>(i));
    if (n > 2) b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  }
  return b.build();
}

Graph Graph::complete_bipartite(std::size_t a, std::size_t b) {
  Builder builder;
  for (std::size_t i = 0; i < a + b; ++i) builder.add_vertex(static_cast<Vertex>(i));
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = a; j < a + b; ++j) builder.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return builder.build();
}

std::optional<std::size_t> Graph::index_of(Vertex v) const {
  const auto it = std::lower_bound(labels_.begin(), labels_.end(), v);
  if (it == labels_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  if (const auto i = index_of(v)) {
    for (auto j : adjacency_[*i]) out.push_back(labels_[j]);
  }
  return out;
}

std::size_t Graph::degree(Vertex v) const {
  const auto i = index_of(v);
  return i ? adjacency_[*i].size() : 0;
}

bool Graph::has_edge_index(std::size_t i, std::size_t j) const {
  const auto& list = adjacency_[i];
  return std::binary_search(list.begin(), list.end(), j);
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto i = index_of(u);
  const auto j = index_of(v);
  return i && j && has_edge_index(*i, *j);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edge_count_);
  for (std::size_t i = 0; i < labels_.size(); ++i)
    for (auto j : adjacency_[i])
      if (i < j) out.emplace_back(labels_[i], labels_[j]);
  return out;
}

bool Graph::is_connected() const {
  if (labels_.empty()) return false;
  std::vector<char> seen(labels_.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const auto i = stack.back();
    stack.pop_back();
    for (auto j : adjacency_[i]) {
      if (!seen[j]) {
        seen[j] = 1;
        ++reached;
        stack.push_back(j);
      }
    }
  }
  return reached == labels_.size();
}

Graph Graph::induced_subgraph(const std::vector<Vertex>& keep) const {
  Builder b;
  std::vector<char> in(labels_.size(), 0);
  for (auto v : keep) {
    if (const auto i = index_of(v)) {
      in[*i] = 1;
      b.add_vertex(v);
    }
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!in[i]) continue;
    for (auto j : adjacency_[i])
      if (i < j && in[j]) b.add_edge(labels_[i], labels_[j]);
  }
  return b.build();
}

Graph parse_graph(std::string_view text) {
  Graph::Builder b;
  bool any = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    std::vector<std::string_view> tokens;
    std::size_t k = 0;
    while (k < line.size()) {
      while (k < line.size() && std::isspace(static_cast<unsigned char>(line[k]))) ++k;
      const auto start = k;
      while (k < line.size() && !std::isspace(static_cast<unsigned char>(line[k]))) ++k;
      if (k > start) tokens.push_back(line.substr(start, k - start));
    }
    if (tokens.empty() || tokens.front().front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (tokens.size() > 2) throw ParseError(line_no, "expected `u v` or `u`, got " + std::to_string(tokens.size()) + " tokens");

    Vertex labels[2] = {0, 0};
    for (std::size_t t = 0; t < tokens.size(); ++t) {
      const auto tok = tokens[t];
      if (tok.front() == '-') throw ParseError(line_no, "negative label `" + std::string(tok) + "`");
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), labels[t]);
      if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line_no, "malformed token `" + std::string(tok) + "`");
    }
    if (tokens.size() == 1) {
      b.add_vertex(labels[0]);
    } else {
      if (labels[0] == labels[1]) throw ParseError(line_no, "self-loop at vertex " + std::to_string(labels[0]));
      b.add_edge(labels[0], labels[1]);
    }
    any = true;
    if (end == text.size()) break;
  }
  if (!any) throw ParseError(0, "empty graph: no vertices declared");
  return b.build();
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  for (std::size_t i = 0; i < g.order(); ++i)
    if (g.neighbors_of_index(i).empty()) out << g.label(i) << '\n';
  return out.str();
}

std::string graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["vertices"] = g.vertices();
  auto edges = nlohmann::json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  return j.dump();
}

Graph graph_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("invalid JSON: ") + e.what());
  }
  if (!j.contains("vertices") || !j.contains("edges")) throw ParseError(0, "JSON graph needs `vertices` and `edges`");
  Graph::Builder b;
  try {
    for (const auto& v : j.at("vertices")) b.add_vertex(v.get<Vertex>());
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError(0, "edge entries must be [u, v] pairs");
      b.add_edge(e[0].get<Vertex>(), e[1].get<Vertex>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("invalid JSON graph: ") + e.what());
  } catch (const ArgumentError& e) {
    throw ParseError(0, e.what());
  }
  return b.build();
}

std::string_view to_string(ExtensionKind kind) {
  switch (kind) {
    case ExtensionKind::Pendant: return "pendant";
    case ExtensionKind::TrueTwin: return "true-twin";
    case ExtensionKind::FalseTwin: return "false-twin";
  }
  return "?";
}

Graph replay_extensions(const ExtensionTrace& trace) {
  if (trace.base.first == trace.base.second) throw ValidationError("base pair must be two distinct vertices");
  std::map<Vertex, std::vector<Vertex>> adj{{trace.base.first, {trace.base.second}},
                                            {trace.base.second, {trace.base.first}}};
  Graph::Builder b;
  b.add_edge(trace.base.first, trace.base.second);

  for (const auto& step : trace.steps) {
    const auto anchor = adj.find(step.anchor_vertex);
    if (anchor == adj.end())
      throw ValidationError("extension anchor " + std::to_string(step.anchor_vertex) + " does not exist");
    if (adj.count(step.new_vertex))
      throw ValidationError("extension vertex " + std::to_string(step.new_vertex) + " already exists");
    require_label(step.new_vertex);

    std::vector<Vertex> nbrs;
    switch (step.kind) {
      case ExtensionKind::Pendant: nbrs = {step.anchor_vertex}; break;
      case ExtensionKind::TrueTwin:
        nbrs = anchor->second;
        nbrs.push_back(step.anchor_vertex);
        break;
      case ExtensionKind::FalseTwin: nbrs = anchor->second; break;
    }
    for (auto w : nbrs) {
      adj[w].push_back(step.new_vertex);
      b.add_edge(step.new_vertex, w);
    }
    b.add_vertex(step.new_vertex);
    adj.emplace(step.new_vertex, std::move(nbrs));
  }
  return b.build();
}

ExtensionWeights parse_weights(std::string_view text) {
  double values[3];
  std::size_t count = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find(',', pos), text.size());
    const std::string token(text.substr(pos, end - pos));
    if (count == 3) throw ArgumentError("weights must be three comma-separated numbers");
    try {
      std::size_t used = 0;
      values[count] = std::stod(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw ArgumentError("malformed weight `" + token + "`");
    }
    ++count;
    pos = end + 1;
    if (end == text.size()) break;
  }
  if (count != 3) throw ArgumentError("weights must be three comma-separated numbers");
  ExtensionWeights w{values[0], values[1], values[2]};
  if (w.pendant < 0 || w.true_twin < 0 || w.false_twin < 0) throw ArgumentError("weights must be non-negative");
  if (std::abs(w.pendant + w.true_twin + w.false_twin - 1.0) > 1e-6) throw ArgumentError("weights must sum to 1");
  return w;
}

GeneratedGraph gen_dh_random(std::size_t n, std::uint64_t seed, const ExtensionWeights& weights) {
  if (n < 2) throw ArgumentError("gen_dh_random needs n >= 2");
  const double total = weights.pendant + weights.true_twin + weights.false_twin;
  if (weights.pendant < 0 || weights.true_twin < 0 || weights.false_twin < 0 || std::abs(total - 1.0) > 1e-6)
    throw ArgumentError("weights must be non-negative and sum to 1");

  detail::Rng rng(seed);
  std::vector<std::vector<Vertex>> adj(n);
  adj[0] = {1};
  adj[1] = {0};
  ExtensionTrace trace{{0, 1}, {}};
  trace.steps.reserve(n - 2);

  for (std::size_t x = 2; x < n; ++x) {
    const auto anchor = static_cast<Vertex>(rng.below(x));
    const double r = rng.unit();
    ExtensionKind kind = ExtensionKind::FalseTwin;
    if (r < weights.pendant) kind = ExtensionKind::Pendant;
    else if (r < weights.pendant + weights.true_twin) kind = ExtensionKind::TrueTwin;

    const auto v = static_cast<Vertex>(x);
    std::vector<Vertex> nbrs;
    if (kind == ExtensionKind::Pendant) {
      nbrs = {anchor};
    } else {
      nbrs = adj[anchor];
      if (kind == ExtensionKind::TrueTwin) nbrs.push_back(anchor);
    }
    for (auto w : nbrs) adj[w].push_back(v);
    adj[x] = std::move(nbrs);
    trace.steps.push_back({kind, v, anchor});
  }

  Graph::Builder b;
  for (std::size_t i = 0; i < n; ++i) {
    b.add_vertex(static_cast<Vertex>(i));
    for (auto w : adj[i])
      if (static_cast<Vertex>(i) < w) b.add_edge(static_cast<Vertex>(i), w);
  }
  return {b.build(), std::move(trace)};
}

Graph gen_gnp(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw ArgumentError("edge probability must lie in [0, 1]");
  detail::Rng rng(seed);
  Graph::Builder b;
  for (std::size_t i = 0; i < n; ++i) b.add_vertex(static_cast<Vertex>(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng.unit() < p) b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return b.build();
}

int DistanceMatrix::at(Vertex u, Vertex v) const {
  const auto iu = std::lower_bound(vertices.begin(), vertices.end(), u);
  const auto iv = std::lower_bound(vertices.begin(), vertices.end(), v);
  if (iu == vertices.end() || *iu != u || iv == vertices.end() || *iv != v)
    throw ArgumentError("vertex not in distance matrix");
  return at_index(static_cast<std::size_t>(iu - vertices.begin()), static_cast<std::size_t>(iv - vertices.begin()));
}

DistanceMatrix distances_bfs(const Graph& g) {
  const auto n = g.order();
  DistanceMatrix d{g.vertices(), std::vector<int>(n * n, DistanceMatrix::kInfinity)};
  std::deque<std::size_t> queue;
  for (std::size_t s = 0; s < n; ++s) {
    int* row = &d.values[s * n];
    row[s] = 0;
    queue.assign(1, s);
    while (!queue.empty()) {
      const auto u = queue.front();
      queue.pop_front();
      for (auto w : g.neighbors_of_index(u)) {
        if (row[w] == DistanceMatrix::kInfinity) {
          row[w] = row[u] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  return d;
}

}  // namespace deltaconf
