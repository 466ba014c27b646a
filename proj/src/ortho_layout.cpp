#include "deltaconf/ortho_layout.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <deque>
#include <sstream>

#include "deltaconf/errors.hpp"
#include "deltaconf/geometry.hpp"

namespace deltaconf {

RootedBinaryTree root_at_leaf(const DeltaTree& t, std::optional<NodeId> leaf) {
  const auto problems = validate_tree(t);
  if (!problems.empty()) throw ValidationError("invalid tree: " + problems.front());
  const NodeId root = leaf.value_or(t.leaves.begin()->first);
  if (!t.is_leaf(root)) throw ArgumentError("node " + std::to_string(root) + " is not a leaf");

  const TreeAdjacency adj(t);
  RootedBinaryTree r;
  r.root = root;
  std::deque<NodeId> queue{root};
  while (!queue.empty()) {
    const NodeId v = queue.front();
    queue.pop_front();
    r.bfs_order.push_back(v);
    auto& kids = r.children[v];
    for (NodeId w : adj.neighbors(v)) {
      const auto p = r.parent.find(v);
      if (p != r.parent.end() && p->second == w) continue;
      r.parent[w] = v;
      kids.push_back(w);
      queue.push_back(w);
    }
  }
  for (auto it = r.bfs_order.rbegin(); it != r.bfs_order.rend(); ++it) {
    std::size_t size = 1;
    for (NodeId c : r.children[*it]) size += r.subtree_size[c];
    r.subtree_size[*it] = size;
  }
  for (auto& [v, kids] : r.children) {
    std::sort(kids.begin(), kids.end(), [&](NodeId a, NodeId b) {
      const auto sa = r.subtree_size[a];
      const auto sb = r.subtree_size[b];
      return sa != sb ? sa > sb : a < b;
    });
  }
  return r;
}

std::int64_t ortho_width_budget(std::size_t node_count) {
  const double n = static_cast<double>(std::max<std::size_t>(node_count, 2));
  const auto b = static_cast<std::int64_t>(std::ceil(0.5 * std::sqrt(n * std::log2(n))));
  return std::max<std::int64_t>(2, b);
}

OrthoLayout layout_upward_ortho(const RootedBinaryTree& rbt) {
  const auto& order = rbt.bfs_order;
  const std::size_t n = order.size();
  std::map<NodeId, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[order[i]] = i;

  std::vector<std::vector<std::size_t>> kids(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto it = rbt.children.find(order[i]);
    if (it == rbt.children.end()) continue;
    if (it->second.size() > 2) throw ValidationError("node " + std::to_string(order[i]) + " has more than two children");
    for (NodeId c : it->second) kids[i].push_back(index.at(c));
  }

  std::vector<std::int64_t> leaves(n, 0);
  for (std::size_t i = n; i-- > 0;) {
    if (kids[i].empty()) leaves[i] = 1;
    for (auto c : kids[i]) leaves[i] += leaves[c];
  }

  // Top-down: which composition each binary node uses, and the budgets.
  std::vector<std::int64_t> budget(n, 0);
  std::vector<char> stacked(n, 0);
  if (n > 0) budget[0] = ortho_width_budget(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (kids[i].size() == 1) budget[kids[i][0]] = budget[i];
    if (kids[i].size() != 2) continue;
    const auto heavy = kids[i][0];
    const auto light = kids[i][1];
    stacked[i] = leaves[i] > budget[i];
    budget[heavy] = budget[i];
    budget[light] = stacked[i] ? std::max<std::int64_t>(1, budget[i] - 1) : budget[i];
  }

  // Bottom-up: subtree extents and child offsets.
  std::vector<std::int64_t> w(n, 1);
  std::vector<std::int64_t> h(n, 1);
  std::vector<GridPoint> offset(n);
  for (std::size_t i = n; i-- > 0;) {
    if (kids[i].size() == 1) {
      const auto c = kids[i][0];
      offset[c] = {0, 1};
      w[i] = w[c];
      h[i] = 1 + h[c];
    } else if (kids[i].size() == 2) {
      const auto heavy = kids[i][0];
      const auto light = kids[i][1];
      if (stacked[i]) {
        offset[light] = {1, 0};
        offset[heavy] = {0, h[light]};
        w[i] = std::max(1 + w[light], w[heavy]);
        h[i] = h[light] + h[heavy];
      } else {
        offset[light] = {0, 1};
        offset[heavy] = {w[light], 0};
        w[i] = w[light] + w[heavy];
        h[i] = std::max(1 + h[light], h[heavy]);
      }
    }
  }

  OrthoLayout out;
  out.root = rbt.root;
  std::vector<GridPoint> pos(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.positions[order[i]] = pos[i];
    for (auto c : kids[i]) {
      pos[c] = {pos[i].x + offset[c].x, pos[i].y + offset[c].y};
      out.edges.emplace_back(order[i], order[c]);
    }
  }
  return out;
}

std::vector<std::string> check_ortho_valid(const OrthoLayout& l) {
  std::vector<std::string> out;
  auto edge_name = [&](std::size_t e) {
    return std::to_string(l.edges[e].first) + "-" + std::to_string(l.edges[e].second);
  };

  std::map<GridPoint, NodeId> occupied;
  for (const auto& [id, p] : l.positions) {
    const auto [it, fresh] = occupied.emplace(p, id);
    if (!fresh) {
      out.push_back("position collision: nodes " + std::to_string(it->second) + " and " + std::to_string(id) + " at (" +
                    std::to_string(p.x) + ", " + std::to_string(p.y) + ")");
    }
  }

  std::map<NodeId, NodeId> parent;
  std::map<NodeId, std::vector<NodeId>> children;
  std::vector<Segment> segments;
  std::vector<std::size_t> segment_edge;
  for (std::size_t e = 0; e < l.edges.size(); ++e) {
    const auto [p, c] = l.edges[e];
    const auto pp = l.positions.find(p);
    const auto cp = l.positions.find(c);
    if (pp == l.positions.end() || cp == l.positions.end()) {
      out.push_back("missing position for edge " + edge_name(e));
      continue;
    }
    if (!parent.emplace(c, p).second) out.push_back("node " + std::to_string(c) + " has two parents");
    children[p].push_back(c);
    const auto a = pp->second;
    const auto b = cp->second;
    if (a.x != b.x && a.y != b.y) out.push_back("edge " + edge_name(e) + " not axis-parallel");
    if (b.y < a.y) out.push_back("edge " + edge_name(e) + " not upward");
    segments.push_back({{static_cast<double>(a.x), static_cast<double>(a.y)},
                        {static_cast<double>(b.x), static_cast<double>(b.y)},
                        e});
    segment_edge.push_back(e);
  }

  for (const auto& c : segment_contacts(segments)) {
    const auto e1 = segment_edge[c.first];
    const auto e2 = segment_edge[c.second];
    if (c.kind == ContactKind::Touch && c.endpoint_of_both) {
      const auto [p1, c1] = l.edges[e1];
      const auto [p2, c2] = l.edges[e2];
      const NodeId shared = (p1 == p2 || p1 == c2) ? p1 : ((c1 == p2 || c1 == c2) ? c1 : kNoNode);
      if (shared != kNoNode) {
        const auto sp = l.positions.at(shared);
        if (static_cast<double>(sp.x) == c.at.x && static_cast<double>(sp.y) == c.at.y) continue;
      }
    }
    out.push_back(std::string(c.kind == ContactKind::Overlap ? "segment overlap" : "segment crossing") + " between edges " +
                  edge_name(e1) + " and " + edge_name(e2));
  }

  // Subtree separation: sibling subtrees must have disjoint bounding boxes.
  NodeId root = l.root;
  if (root == kNoNode || !l.positions.count(root)) {
    for (const auto& [id, p] : l.positions)
      if (!parent.count(id)) {
        root = id;
        break;
      }
  }
  if (root == kNoNode) return out;
  struct Box {
    std::int64_t x0, y0, x1, y1;
  };
  std::map<NodeId, Box> box;
  std::vector<NodeId> order{root};
  for (std::size_t i = 0; i < order.size() && order.size() <= l.positions.size(); ++i) {
    for (NodeId c : children[order[i]]) order.push_back(c);
  }
  if (order.size() != l.positions.size()) out.emplace_back("edges do not form a tree spanning all nodes");
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto pit = l.positions.find(*it);
    if (pit == l.positions.end()) continue;
    Box b{pit->second.x, pit->second.y, pit->second.x, pit->second.y};
    for (NodeId c : children[*it]) {
      const auto cb = box.find(c);
      if (cb == box.end()) continue;
      b = {std::min(b.x0, cb->second.x0), std::min(b.y0, cb->second.y0), std::max(b.x1, cb->second.x1),
           std::max(b.y1, cb->second.y1)};
    }
    box[*it] = b;
    const auto& kids = children[*it];
    for (std::size_t i = 0; i < kids.size(); ++i) {
      for (std::size_t j = i + 1; j < kids.size(); ++j) {
        const auto a = box.find(kids[i]);
        const auto c = box.find(kids[j]);
        if (a == box.end() || c == box.end()) continue;
        const bool apart = a->second.x1 < c->second.x0 || c->second.x1 < a->second.x0 ||
                           a->second.y1 < c->second.y0 || c->second.y1 < a->second.y0;
        if (!apart) out.push_back("subtree separation violated below node " + std::to_string(*it));
      }
    }
  }
  return out;
}

std::int64_t ortho_area(const OrthoLayout& l) {
  if (l.positions.empty()) return 0;
  auto x0 = l.positions.begin()->second.x;
  auto x1 = x0;
  auto y0 = l.positions.begin()->second.y;
  auto y1 = y0;
  for (const auto& [id, p] : l.positions) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  return (x1 - x0 + 1) * (y1 - y0 + 1);
}

std::string format_ortho(const OrthoLayout& l) {
  std::ostringstream out;
  for (const auto& [id, p] : l.positions) out << "node " << id << ' ' << p.x << ' ' << p.y << '\n';
  for (const auto& [a, b] : l.edges) out << "segment " << a << ' ' << b << '\n';
  return out.str();
}

OrthoLayout parse_ortho(std::string_view text) {
  OrthoLayout l;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  auto integer = [&](const std::string& tok) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) throw ParseError(line_no, "malformed number `" + tok + "`");
    return v;
  };
  std::map<NodeId, int> incoming;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string w; ls >> w;) tok.push_back(w);
    if (tok.empty() || tok[0][0] == '#') continue;
    if (tok[0] == "node" && tok.size() == 4) {
      l.positions[integer(tok[1])] = {integer(tok[2]), integer(tok[3])};
    } else if (tok[0] == "segment" && tok.size() == 3) {
      l.edges.emplace_back(integer(tok[1]), integer(tok[2]));
      ++incoming[l.edges.back().second];
    } else {
      throw ParseError(line_no, "unrecognised layout line `" + line + "`");
    }
  }
  for (const auto& [id, p] : l.positions) {
    if (!incoming.count(id)) {
      l.root = id;
      break;
    }
  }
  return l;
}

}  // namespace deltaconf
