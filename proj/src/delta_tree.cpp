#include "deltaconf/delta_tree.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>

#include "deltaconf/errors.hpp"
#include "random.hpp"

namespace deltaconf {

namespace {

using PortTable = std::map<NodeId, std::array<Slot, 3>>;

void connect(PortTable& ports, Slot a, Slot b) {
  ports[a.node][static_cast<std::size_t>(a.slot)] = b;
  ports[b.node][static_cast<std::size_t>(b.slot)] = a;
}

std::vector<TreeEdge> edges_of(const PortTable& ports) {
  std::vector<TreeEdge> out;
  for (const auto& [node, slots] : ports) {
    for (int s = 0; s < 3; ++s) {
      const Slot here{node, s};
      const Slot there = slots[static_cast<std::size_t>(s)];
      if (there.node != kNoNode && here < there) out.push_back({here, there});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void require_valid(const DeltaTree& t) {
  const auto problems = validate_tree(t);
  if (!problems.empty()) throw ValidationError("invalid tree: " + problems.front());
}

std::array<Slot, 3> empty_ports() {
  return {Slot{kNoNode, 0}, Slot{kNoNode, 0}, Slot{kNoNode, 0}};
}

}  // namespace

TreeAdjacency::TreeAdjacency(const DeltaTree& t) {
  for (const auto& [id, label] : t.leaves) ports_.emplace(id, empty_ports());
  for (const auto& [id, j] : t.junctions) ports_.emplace(id, empty_ports());
  for (const auto& e : t.edges) {
    ports_[e.a.node][static_cast<std::size_t>(e.a.slot)] = e.b;
    ports_[e.b.node][static_cast<std::size_t>(e.b.slot)] = e.a;
  }
}

Slot TreeAdjacency::across(NodeId node, int slot) const {
  const auto it = ports_.find(node);
  if (it == ports_.end() || slot < 0 || slot > 2) return {kNoNode, 0};
  return it->second[static_cast<std::size_t>(slot)];
}

std::vector<NodeId> TreeAdjacency::neighbors(NodeId node) const {
  std::vector<NodeId> out;
  const auto it = ports_.find(node);
  if (it == ports_.end()) return out;
  for (const auto& s : it->second)
    if (s.node != kNoNode) out.push_back(s.node);
  return out;
}

int TreeAdjacency::slot_toward(NodeId node, NodeId neighbor) const {
  const auto it = ports_.find(node);
  if (it == ports_.end()) return -1;
  for (int s = 0; s < 3; ++s)
    if (it->second[static_cast<std::size_t>(s)].node == neighbor) return s;
  return -1;
}

DeltaTree build_delta_tree(const Graph& g, const EliminationSequence& seq) {
  if (!graph_equals(apply_sequence_forward(seq), g)) {
    throw ValidationError("elimination sequence does not rebuild the input graph");
  }
  DeltaTree t;
  PortTable ports;
  const auto [p, q] = seq.terminal_pair;
  t.leaves[p] = p;
  t.leaves[q] = q;
  ports[p] = empty_ports();
  ports[q] = empty_ports();
  connect(ports, {p, 0}, {q, 0});

  NodeId next = g.vertices().back() + 1;
  for (auto it = seq.steps.rbegin(); it != seq.steps.rend(); ++it) {
    const NodeId a = it->survivor;
    const NodeId b = it->removed;
    const NodeId j = next++;
    Junction junction;
    switch (it->kind) {
      case EliminationKind::TrueTwinMerge: junction = {JunctionKind::Delta, 0}; break;
      case EliminationKind::FalseTwinMerge: junction = {JunctionKind::Lambda, 0}; break;
      case EliminationKind::PendantCut: junction = {JunctionKind::Lambda, 1}; break;
    }
    t.junctions[j] = junction;
    t.leaves[b] = b;
    ports[j] = empty_ports();
    ports[b] = empty_ports();
    const Slot old = ports[a][0];
    connect(ports, {j, 0}, old);
    connect(ports, {j, 1}, {a, 0});
    connect(ports, {j, 2}, {b, 0});
  }
  t.edges = edges_of(ports);
  return t;
}

Graph semantics(const DeltaTree& t) {
  require_valid(t);
  const TreeAdjacency adj(t);
  Graph::Builder builder;
  for (const auto& [id, label] : t.leaves) builder.add_vertex(label);
  std::vector<Slot> stack;
  for (const auto& [start, label] : t.leaves) {
    stack.assign(1, adj.across(start, 0));
    while (!stack.empty()) {
      const Slot at = stack.back();
      stack.pop_back();
      if (at.node == kNoNode) continue;
      if (const auto leaf = t.leaves.find(at.node); leaf != t.leaves.end()) {
        if (at.node != start) builder.add_edge(label, leaf->second);
        continue;
      }
      const auto& junction = t.junctions.at(at.node);
      for (int out = 0; out < 3; ++out)
        if (junction.permits(at.slot, out)) stack.push_back(adj.across(at.node, out));
    }
  }
  return builder.build();
}

EliminationSequence tree_to_sequence(const DeltaTree& t) {
  require_valid(t);
  PortTable ports;
  for (const auto& [id, label] : t.leaves) ports[id] = empty_ports();
  for (const auto& [id, j] : t.junctions) ports[id] = empty_ports();
  for (const auto& e : t.edges) connect(ports, e.a, e.b);

  auto leaf_count = [&](NodeId j) {
    int c = 0;
    for (const auto& s : ports[j]) c += t.is_leaf(s.node) ? 1 : 0;
    return c;
  };
  std::set<NodeId> ready;
  for (const auto& [id, j] : t.junctions)
    if (leaf_count(id) >= 2) ready.insert(id);

  EliminationSequence seq;
  std::size_t remaining = t.junctions.size();
  while (remaining > 0) {
    if (ready.empty()) throw ValidationError("no junction with two leaf neighbors");
    const NodeId j = *ready.begin();
    ready.erase(ready.begin());
    const auto& junction = t.junctions.at(j);
    const auto slots = ports[j];
    auto is_leaf_port = [&](int p) { return t.is_leaf(slots[static_cast<std::size_t>(p)].node); };
    auto label_at = [&](int p) { return t.leaves.at(slots[static_cast<std::size_t>(p)].node); };

    int survivor = -1;
    int removed = -1;
    int keep = -1;
    EliminationKind kind = EliminationKind::TrueTwinMerge;
    if (junction.kind == JunctionKind::Delta) {
      std::vector<int> leaf_ports;
      for (int p = 0; p < 3; ++p)
        if (is_leaf_port(p)) leaf_ports.push_back(p);
      std::sort(leaf_ports.begin(), leaf_ports.end(), [&](int x, int y) { return label_at(x) < label_at(y); });
      survivor = leaf_ports[0];
      removed = leaf_ports[1];
      keep = 3 - survivor - removed;
    } else {
      const int h = junction.head;
      const int t1 = (h + 1) % 3;
      const int t2 = (h + 2) % 3;
      std::vector<int> leaf_tails;
      for (int p : {t1, t2})
        if (is_leaf_port(p)) leaf_tails.push_back(p);
      std::sort(leaf_tails.begin(), leaf_tails.end(), [&](int x, int y) { return label_at(x) < label_at(y); });
      if (is_leaf_port(h) && !leaf_tails.empty()) {
        kind = EliminationKind::PendantCut;
        survivor = h;
        removed = leaf_tails[0];
        keep = 3 - h - removed;
      } else {
        kind = EliminationKind::FalseTwinMerge;
        survivor = leaf_tails[0];
        removed = leaf_tails[1];
        keep = h;
      }
    }
    const Slot surv = slots[static_cast<std::size_t>(survivor)];
    const Slot gone = slots[static_cast<std::size_t>(removed)];
    const Slot other = slots[static_cast<std::size_t>(keep)];
    seq.steps.push_back({kind, label_at(removed), label_at(survivor)});
    ports.erase(j);
    ports.erase(gone.node);
    connect(ports, surv, other);
    --remaining;
    if (t.is_junction(other.node) && leaf_count(other.node) >= 2) ready.insert(other.node);
  }
  std::vector<Vertex> rest;
  for (const auto& [id, slots] : ports) rest.push_back(t.leaves.at(id));
  if (rest.size() != 2) throw ValidationError("tree does not contract to a single edge");
  std::sort(rest.begin(), rest.end());
  seq.terminal_pair = {rest[0], rest[1]};
  return seq;
}

std::vector<std::string> validate_tree(const DeltaTree& t) {
  std::vector<std::string> out;
  if (t.leaves.empty() && t.junctions.empty()) {
    out.emplace_back("empty tree");
    return out;
  }
  std::map<NodeId, std::size_t> index;
  for (const auto& [id, label] : t.leaves) {
    if (id < 0) out.push_back("negative node id " + std::to_string(id));
    index.emplace(id, index.size());
  }
  for (const auto& [id, j] : t.junctions) {
    if (id < 0) out.push_back("negative node id " + std::to_string(id));
    if (!index.emplace(id, index.size()).second) out.push_back("duplicate id " + std::to_string(id));
    if (j.kind == JunctionKind::Lambda && (j.head < 0 || j.head > 2))
      out.push_back("Λ head out of range at junction " + std::to_string(id));
  }
  std::vector<Vertex> labels;
  for (const auto& [id, label] : t.leaves) labels.push_back(label);
  std::sort(labels.begin(), labels.end());
  for (std::size_t i = 1; i < labels.size(); ++i)
    if (labels[i] == labels[i - 1] && (i + 1 == labels.size() || labels[i + 1] != labels[i]))
      out.push_back("duplicate vertex label " + std::to_string(labels[i]));

  std::vector<std::size_t> parent(index.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<int> degree(index.size(), 0);
  std::vector<std::uint8_t> used(index.size(), 0);  // bit per port
  bool cyclic = false;
  for (const auto& e : t.edges) {
    bool ok = true;
    std::size_t at[2] = {0, 0};
    int k = 0;
    for (const auto& s : {e.a, e.b}) {
      const auto it = index.find(s.node);
      if (it == index.end()) {
        out.push_back("unknown node " + std::to_string(s.node));
        ok = false;
        continue;
      }
      const int limit = t.is_leaf(s.node) ? 0 : 2;
      if (s.slot < 0 || s.slot > limit) {
        out.push_back("bad slot " + std::to_string(s.node) + ":" + std::to_string(s.slot));
        ok = false;
        continue;
      }
      const auto bit = static_cast<std::uint8_t>(1u << s.slot);
      if (used[it->second] & bit) out.push_back("port reused " + std::to_string(s.node) + ":" + std::to_string(s.slot));
      used[it->second] |= bit;
      ++degree[it->second];
      at[k++] = it->second;
    }
    if (!ok) continue;
    if (e.a.node == e.b.node) {
      out.push_back("self-loop at node " + std::to_string(e.a.node));
      continue;
    }
    const auto ra = find(at[0]);
    const auto rb = find(at[1]);
    if (ra == rb) cyclic = true;
    else parent[ra] = rb;
  }
  if (cyclic) out.emplace_back("cycle");
  for (const auto& [id, label] : t.leaves)
    if (degree[index.at(id)] != 1) out.push_back("leaf degree ≠ 1 at node " + std::to_string(id));
  for (const auto& [id, j] : t.junctions)
    if (degree[index.at(id)] != 3) out.push_back("junction degree ≠ 3 at node " + std::to_string(id));
  std::size_t roots = 0;
  for (std::size_t i = 0; i < parent.size(); ++i) roots += find(i) == i;
  if (roots > 1) out.emplace_back("not connected");
  return out;
}

std::string format_tree(const DeltaTree& t) {
  std::ostringstream out;
  for (const auto& [id, label] : t.leaves) out << "leaf " << id << " vertex=" << label << '\n';
  for (const auto& [id, j] : t.junctions) {
    out << "junction " << id << " kind=" << (j.kind == JunctionKind::Delta ? "delta" : "lambda");
    if (j.kind == JunctionKind::Lambda) out << " head=" << j.head;
    out << '\n';
  }
  for (const auto& e : t.edges)
    out << "edge " << e.a.node << ':' << e.a.slot << ' ' << e.b.node << ':' << e.b.slot << '\n';
  return out.str();
}

DeltaTree parse_tree(std::string_view text) {
  DeltaTree t;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  auto integer = [&](std::string_view tok) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      throw ParseError(line_no, "malformed number `" + std::string(tok) + "`");
    return v;
  };
  auto keyed = [&](const std::string& tok, std::string_view key) {
    if (tok.rfind(key, 0) != 0) throw ParseError(line_no, "expected `" + std::string(key) + "...`, got `" + tok + "`");
    return std::string_view(tok).substr(key.size());
  };
  auto slot = [&](const std::string& tok) {
    const auto colon = tok.find(':');
    if (colon == std::string::npos) throw ParseError(line_no, "expected `<id>:<slot>`, got `" + tok + "`");
    const std::string_view sv(tok);
    return Slot{integer(sv.substr(0, colon)), static_cast<int>(integer(sv.substr(colon + 1)))};
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string w; ls >> w;) tok.push_back(w);
    if (tok.empty() || tok[0][0] == '#') continue;
    if (tok[0] == "leaf" && tok.size() == 3) {
      t.leaves[integer(tok[1])] = integer(keyed(tok[2], "vertex="));
    } else if (tok[0] == "junction" && (tok.size() == 3 || tok.size() == 4)) {
      const auto kind = keyed(tok[2], "kind=");
      Junction j;
      if (kind == "delta") j.kind = JunctionKind::Delta;
      else if (kind == "lambda") j.kind = JunctionKind::Lambda;
      else throw ParseError(line_no, "unknown junction kind `" + std::string(kind) + "`");
      if (tok.size() == 4) j.head = static_cast<int>(integer(keyed(tok[3], "head=")));
      else if (j.kind == JunctionKind::Lambda) throw ParseError(line_no, "lambda junction needs head=<port>");
      t.junctions[integer(tok[1])] = j;
    } else if (tok[0] == "edge" && tok.size() == 3) {
      t.edges.push_back({slot(tok[1]), slot(tok[2])});
    } else {
      throw ParseError(line_no, "unrecognised tree line `" + line + "`");
    }
  }
  return t;
}

DeltaTree random_delta_tree(std::size_t leaves, std::uint64_t seed) {
  if (leaves < 2) throw ArgumentError("random_delta_tree needs at least two leaves");
  detail::Rng rng(seed);
  DeltaTree t;
  const auto n = static_cast<NodeId>(leaves);
  for (NodeId i = 0; i < n; ++i) t.leaves[i] = i;
  std::vector<TreeEdge> edges{{{0, 0}, {1, 0}}};
  NodeId next = n;
  for (NodeId leaf = 2; leaf < n; ++leaf) {
    const auto e = rng.below(edges.size());
    const NodeId j = next++;
    Junction junction;
    junction.kind = rng.below(2) == 0 ? JunctionKind::Delta : JunctionKind::Lambda;
    junction.head = junction.kind == JunctionKind::Lambda ? static_cast<int>(rng.below(3)) : 0;
    t.junctions[j] = junction;
    std::array<int, 3> perm{0, 1, 2};
    for (std::size_t i = 2; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
    const auto old = edges[e];
    edges[e] = {old.a, {j, perm[0]}};
    edges.push_back({{j, perm[1]}, old.b});
    edges.push_back({{j, perm[2]}, {leaf, 0}});
  }
  for (auto& e : edges)
    if (e.b < e.a) std::swap(e.a, e.b);
  std::sort(edges.begin(), edges.end());
  t.edges = std::move(edges);
  return t;
}

DeltaTree balanced_delta_tree(int depth) {
  if (depth < 0 || depth > 20) throw ArgumentError("balanced_delta_tree depth must be in [0, 20]");
  DeltaTree t;
  PortTable ports;
  const NodeId leaf_total = NodeId{3} << depth;
  NodeId next_leaf = 0;
  NodeId next_junction = leaf_total;
  auto new_junction = [&] {
    const NodeId j = next_junction++;
    t.junctions[j] = Junction{JunctionKind::Delta, 0};
    ports[j] = empty_ports();
    return j;
  };
  auto branch = [&](auto&& self, int d) -> Slot {
    if (d == 0) {
      const NodeId leaf = next_leaf++;
      t.leaves[leaf] = leaf;
      ports[leaf] = empty_ports();
      return {leaf, 0};
    }
    const NodeId j = new_junction();
    connect(ports, {j, 1}, self(self, d - 1));
    connect(ports, {j, 2}, self(self, d - 1));
    return {j, 0};
  };
  const NodeId centre = new_junction();
  for (int p = 0; p < 3; ++p) connect(ports, {centre, p}, branch(branch, depth));
  t.edges = edges_of(ports);
  return t;
}

}  // namespace deltaconf
