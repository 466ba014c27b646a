#include "deltaconf/hex_layout.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "deltaconf/errors.hpp"

namespace deltaconf {

namespace {

LatticePoint primary(std::int64_t u, std::int64_t v) { return {4 * v + 2 * u, 2 * u}; }
LatticePoint backup(std::int64_t u, std::int64_t v) { return {4 * v + 2 * u, 2 * u + 1}; }

std::uint64_t point_key(LatticePoint p) {
  return (static_cast<std::uint64_t>(p.x) << 32) ^ static_cast<std::uint64_t>(p.y & 0xffffffff);
}

std::string run_name(NodeId a, NodeId b) { return std::to_string(a) + "-" + std::to_string(b); }

bool legal_step(std::int64_t dx, std::int64_t dy) {
  if (dx == 0) return dy != 0;
  return dy != 0 && std::abs(dx) == 2 * std::abs(dy);
}

}  // namespace

LatticePoint to_lattice(const HexPoint& p) {
  return p.slot == HexSlot::Primary ? primary(p.u, p.v) : backup(p.u, p.v);
}

std::size_t hex_stored_fields(const HexLayout& h) { return 3 * h.positions.size() + 3 * h.runs.size(); }

HexLayout ortho_to_hex(const OrthoLayout& l) {
  HexLayout h;
  h.root = l.root;
  for (const auto& [id, p] : l.positions) h.positions[id] = {p.y, p.x, HexSlot::Primary};
  for (const auto& [a, b] : l.edges) {
    const auto pa = l.positions.at(a);
    const auto pb = l.positions.at(b);
    h.runs.push_back({a, b, pa.x == pb.x ? Track::V : Track::ULower});
  }
  return h;
}

std::vector<LatticePoint> expand_run(const HexPoint& from, const HexPoint& to, Track track) {
  if (from.u == to.u && from.v == to.v) {
    if (from.slot == to.slot) return {to_lattice(from)};
    return {to_lattice(from), to_lattice(to)};
  }
  std::vector<LatticePoint> pts;
  bool reversed = false;
  if (track == Track::V) {
    if (from.v != to.v) throw ValidationError("V-run endpoints are not on a common v-curve");
    reversed = from.u > to.u;
    const auto& lo = reversed ? to : from;
    const auto& hi = reversed ? from : to;
    const auto v = lo.v;
    if (lo.slot == HexSlot::Primary) pts.push_back(primary(lo.u, v));
    pts.push_back(backup(lo.u, v));
    for (auto u = lo.u + 1; u <= hi.u; ++u) {
      pts.push_back(primary(u, v));
      if (u < hi.u) pts.push_back(backup(u, v));
    }
    if (hi.slot == HexSlot::Backup) pts.push_back(backup(hi.u, v));
  } else {
    if (from.u != to.u) throw ValidationError("U-run endpoints are not on a common u-curve");
    reversed = from.v > to.v;
    const auto& lo = reversed ? to : from;
    const auto& hi = reversed ? from : to;
    const auto u = lo.u;
    if (track == Track::ULower) {
      if (lo.slot == HexSlot::Backup) pts.push_back(backup(u, lo.v));
      pts.push_back(primary(u, lo.v));
      for (auto v = lo.v; v < hi.v; ++v) {
        const auto p = primary(u, v);
        pts.push_back({p.x + 2, p.y - 1});
        pts.push_back(primary(u, v + 1));
      }
      if (hi.slot == HexSlot::Backup) pts.push_back(backup(u, hi.v));
    } else {
      if (lo.slot == HexSlot::Primary) pts.push_back(primary(u, lo.v));
      pts.push_back(backup(u, lo.v));
      for (auto v = lo.v; v < hi.v; ++v) {
        pts.push_back(primary(u + 1, v));
        pts.push_back(backup(u, v + 1));
      }
      if (hi.slot == HexSlot::Primary) pts.push_back(primary(u, hi.v));
    }
  }
  if (reversed) std::reverse(pts.begin(), pts.end());
  return pts;
}

std::vector<LatticePoint> expand_edge(const HexLayout& h, const HexRun& run) {
  return expand_run(h.positions.at(run.from), h.positions.at(run.to), run.track);
}

std::vector<HexPolyline> expand_all(const HexLayout& h) {
  std::vector<HexPolyline> out;
  out.reserve(h.runs.size());
  for (const auto& r : h.runs) out.push_back({r.from, r.to, expand_edge(h, r)});
  return out;
}

std::map<NodeId, LatticePoint> lattice_positions(const HexLayout& h) {
  std::map<NodeId, LatticePoint> out;
  for (const auto& [id, p] : h.positions) out[id] = to_lattice(p);
  return out;
}

namespace {

// Which runs use each lattice point, and whether as an end point.
class Occupancy {
 public:
  void reserve(std::size_t points) { cells_.reserve(points); }

  void add(std::size_t run, const std::vector<LatticePoint>& pts) {
    for (std::size_t i = 0; i < pts.size(); ++i)
      cells_[point_key(pts[i])].push_back({run, i == 0 || i + 1 == pts.size()});
  }

  void remove(std::size_t run, const std::vector<LatticePoint>& pts) {
    for (const auto& p : pts) {
      auto& users = cells_[point_key(p)];
      users.erase(std::remove_if(users.begin(), users.end(), [&](const User& u) { return u.run == run; }), users.end());
    }
  }

  /// True if `run` shares a point with another run other than a common end.
  bool conflicted(std::size_t run, const std::vector<LatticePoint>& pts) const {
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const bool end = i == 0 || i + 1 == pts.size();
      const auto it = cells_.find(point_key(pts[i]));
      if (it == cells_.end()) continue;
      for (const auto& other : it->second)
        if (other.run != run && !(end && other.end)) return true;
    }
    return false;
  }

 private:
  struct User {
    std::size_t run;
    bool end;
  };
  std::unordered_map<std::uint64_t, std::vector<User>> cells_;
};

}  // namespace

HexLayout resolve_overlaps(const HexLayout& input) {
  HexLayout h = input;
  const std::size_t m = h.runs.size();
  std::map<NodeId, std::vector<std::size_t>> incident;
  for (std::size_t r = 0; r < m; ++r) {
    incident[h.runs[r].from].push_back(r);
    incident[h.runs[r].to].push_back(r);
  }

  std::vector<std::vector<LatticePoint>> drawn(m);
  Occupancy occ;
  std::size_t points = 0;
  for (std::size_t r = 0; r < m; ++r) {
    drawn[r] = expand_edge(h, h.runs[r]);
    points += drawn[r].size();
  }
  occ.reserve(points);
  for (std::size_t r = 0; r < m; ++r) occ.add(r, drawn[r]);

  std::vector<NodeId> order;
  std::set<NodeId> seen;
  auto visit_from = [&](NodeId start) {
    std::deque<NodeId> queue{start};
    seen.insert(start);
    while (!queue.empty()) {
      const NodeId x = queue.front();
      queue.pop_front();
      order.push_back(x);
      for (auto r : incident[x]) {
        const NodeId y = h.runs[r].from == x ? h.runs[r].to : h.runs[r].from;
        if (seen.insert(y).second) queue.push_back(y);
      }
    }
  };
  if (h.positions.count(h.root)) visit_from(h.root);
  for (const auto& [id, p] : h.positions)
    if (!seen.count(id)) visit_from(id);

  for (const NodeId x : order) {
    const auto& inc = incident[x];
    auto any_conflict = [&] {
      return std::any_of(inc.begin(), inc.end(), [&](std::size_t r) { return occ.conflicted(r, drawn[r]); });
    };
    if (!any_conflict()) continue;

    std::vector<std::size_t> u_runs;
    for (auto r : inc)
      if (h.runs[r].track != Track::V) u_runs.push_back(r);
    // Candidates ordered by number of changes; slot flips before lane flips.
    struct Choice {
      bool flip_slot;
      unsigned lanes;
    };
    std::vector<Choice> choices;
    for (unsigned mask = 0; mask < (1u << u_runs.size()); ++mask)
      for (bool flip : {true, false})
        if (flip || mask) choices.push_back({flip, mask});
    std::stable_sort(choices.begin(), choices.end(), [](const Choice& a, const Choice& b) {
      const auto ca = std::popcount(a.lanes) + (a.flip_slot ? 1 : 0);
      const auto cb = std::popcount(b.lanes) + (b.flip_slot ? 1 : 0);
      return ca < cb;
    });

    const HexPoint original = h.positions.at(x);
    std::vector<Track> original_tracks;
    for (auto r : u_runs) original_tracks.push_back(h.runs[r].track);

    auto apply = [&](const Choice& c) {
      for (auto r : inc) occ.remove(r, drawn[r]);
      auto& p = h.positions.at(x);
      p.slot = original.slot;
      if (c.flip_slot) p.slot = p.slot == HexSlot::Primary ? HexSlot::Backup : HexSlot::Primary;
      for (std::size_t i = 0; i < u_runs.size(); ++i) {
        Track t = original_tracks[i];
        if (c.lanes >> i & 1u) t = t == Track::ULower ? Track::UUpper : Track::ULower;
        h.runs[u_runs[i]].track = t;
      }
      for (auto r : inc) {
        drawn[r] = expand_edge(h, h.runs[r]);
        occ.add(r, drawn[r]);
      }
    };

    bool fixed = false;
    for (const auto& c : choices) {
      apply(c);
      if (!any_conflict()) {
        fixed = true;
        break;
      }
    }
    // The clash may belong to a node further down; leave this one as it was.
    if (!fixed) apply({false, 0});
  }
  for (std::size_t r = 0; r < m; ++r) {
    if (occ.conflicted(r, drawn[r])) {
      throw UnresolvableOverlap("cannot separate the tracks of edge " + run_name(h.runs[r].from, h.runs[r].to));
    }
  }
  return h;
}

std::vector<std::string> check_hex_drawing(const std::map<NodeId, LatticePoint>& nodes,
                                           const std::vector<HexPolyline>& lines) {
  std::vector<std::string> out;
  std::map<LatticePoint, NodeId> occupied;
  for (const auto& [id, p] : nodes) {
    const auto [it, fresh] = occupied.emplace(p, id);
    if (!fresh) out.push_back("position collision: nodes " + std::to_string(it->second) + " and " + std::to_string(id));
  }

  std::vector<Segment> segs;
  std::vector<std::pair<std::size_t, std::size_t>> where;  // (line, index within line)
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto& line = lines[i];
    const auto name = run_name(line.from, line.to);
    if (line.points.empty()) {
      out.push_back("edge " + name + " has no points");
      continue;
    }
    const auto a = nodes.find(line.from);
    const auto b = nodes.find(line.to);
    if (a == nodes.end() || b == nodes.end()) {
      out.push_back("edge " + name + " names an unknown node");
    } else if (!(line.points.front() == a->second) || !(line.points.back() == b->second)) {
      out.push_back("edge " + name + " does not connect its nodes");
    }
    for (std::size_t k = 0; k + 1 < line.points.size(); ++k) {
      const auto p = line.points[k];
      const auto q = line.points[k + 1];
      const auto dx = q.x - p.x;
      const auto dy = q.y - p.y;
      if (dx == 0 && dy == 0) {
        out.push_back("zero-length segment in edge " + name);
        continue;
      }
      if (!legal_step(dx, dy)) out.push_back("illegal slope in edge " + name);
      segs.push_back({{static_cast<double>(p.x), static_cast<double>(p.y)},
                      {static_cast<double>(q.x), static_cast<double>(q.y)},
                      i});
      where.emplace_back(i, k);
    }
  }

  for (const auto& c : segment_contacts(segs)) {
    const auto [li, ki] = where[c.first];
    const auto [lj, kj] = where[c.second];
    const auto ni = run_name(lines[li].from, lines[li].to);
    const auto nj = run_name(lines[lj].from, lines[lj].to);
    if (c.kind == ContactKind::Overlap) {
      out.push_back(li == lj ? "edge overlap within edge " + ni : "edge overlap between edges " + ni + " and " + nj);
      continue;
    }
    if (li == lj) {
      const auto gap = ki > kj ? ki - kj : kj - ki;
      if (!(gap == 1 && c.kind == ContactKind::Touch && c.endpoint_of_both))
        out.push_back("edge self-intersection in edge " + ni);
      continue;
    }
    bool allowed = false;
    if (c.kind == ContactKind::Touch && c.endpoint_of_both) {
      for (NodeId x : {lines[li].from, lines[li].to}) {
        if (x != lines[lj].from && x != lines[lj].to) continue;
        const auto it = nodes.find(x);
        if (it != nodes.end() && static_cast<double>(it->second.x) == c.at.x &&
            static_cast<double>(it->second.y) == c.at.y)
          allowed = true;
      }
    }
    if (!allowed) out.push_back("edge crossing between edges " + ni + " and " + nj);
  }
  return out;
}

std::vector<std::string> check_hex_valid(const HexLayout& h) {
  std::vector<std::string> out;
  std::set<std::pair<std::int64_t, std::int64_t>> cells;
  for (const auto& [id, p] : h.positions)
    if (!cells.insert({p.u, p.v}).second) out.push_back("position collision at node " + std::to_string(id));
  std::vector<HexPolyline> lines;
  for (const auto& r : h.runs) {
    const auto a = h.positions.find(r.from);
    const auto b = h.positions.find(r.to);
    if (a == h.positions.end() || b == h.positions.end()) {
      out.push_back("run " + run_name(r.from, r.to) + " names an unknown node");
      continue;
    }
    try {
      lines.push_back({r.from, r.to, expand_run(a->second, b->second, r.track)});
    } catch (const ValidationError& e) {
      out.push_back("run " + run_name(r.from, r.to) + ": " + e.what());
    }
  }
  auto drawn = check_hex_drawing(lattice_positions(h), lines);
  out.insert(out.end(), drawn.begin(), drawn.end());
  return out;
}

std::size_t count_bends(const std::vector<LatticePoint>& pl) {
  std::size_t bends = 0;
  for (std::size_t i = 1; i + 1 < pl.size(); ++i) {
    const auto ax = pl[i].x - pl[i - 1].x;
    const auto ay = pl[i].y - pl[i - 1].y;
    const auto bx = pl[i + 1].x - pl[i].x;
    const auto by = pl[i + 1].y - pl[i].y;
    // Same direction iff parallel and pointing the same way.
    if (ax * by - ay * bx != 0 || ax * bx + ay * by <= 0) ++bends;
  }
  return bends;
}

BendCount count_bends(const HexLayout& h) {
  BendCount c;
  for (const auto& r : h.runs) {
    const auto b = count_bends(expand_edge(h, r));
    c.total += b;
    c.max_per_edge = std::max(c.max_per_edge, b);
  }
  return c;
}

std::int64_t hex_area(const HexLayout& h) {
  if (h.positions.empty()) return 0;
  auto first = to_lattice(h.positions.begin()->second);
  std::int64_t x0 = first.x, x1 = first.x, y0 = first.y, y1 = first.y;
  auto take = [&](LatticePoint p) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  };
  for (const auto& [id, p] : h.positions) take(to_lattice(p));
  for (const auto& r : h.runs)
    for (const auto& p : expand_edge(h, r)) take(p);
  return (x1 - x0 + 1) * (y1 - y0 + 1);
}

std::vector<HexPolyline> reduce_bends(const std::map<NodeId, LatticePoint>& nodes, std::vector<HexPolyline> lines) {
  const bool valid_before = check_hex_drawing(nodes, lines).empty();
  for (auto& line : lines) {
    auto& pts = line.points;
    for (std::size_t i = 1; i + 1 < pts.size();) {
      const auto dx = pts[i + 1].x - pts[i - 1].x;
      const auto dy = pts[i + 1].y - pts[i - 1].y;
      if (!legal_step(dx, dy)) {
        ++i;
        continue;
      }
      const auto removed = pts[i];
      pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i));
      if (valid_before && !check_hex_drawing(nodes, lines).empty()) {
        pts.insert(pts.begin() + static_cast<std::ptrdiff_t>(i), removed);
        ++i;
      }
    }
  }
  return lines;
}

std::string format_hex(const HexLayout& h) {
  std::ostringstream out;
  for (const auto& [id, p] : h.positions) {
    out << "node " << id << " u=" << p.u << " v=" << p.v
        << " slot=" << (p.slot == HexSlot::Primary ? "primary" : "backup") << '\n';
  }
  for (const auto& r : h.runs) {
    out << "run " << r.from << ' ' << r.to << " kind=" << (r.track == Track::V ? "V" : "U");
    if (r.track != Track::V) out << " lane=" << (r.track == Track::UUpper ? "upper" : "lower");
    out << '\n';
  }
  return out.str();
}

namespace {

struct LineReader {
  std::size_t line_no = 0;

  std::int64_t integer(std::string_view tok) const {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      throw ParseError(line_no, "malformed number `" + std::string(tok) + "`");
    return v;
  }

  std::string_view keyed(const std::string& tok, std::string_view key) const {
    if (tok.rfind(key, 0) != 0) throw ParseError(line_no, "expected `" + std::string(key) + "...`, got `" + tok + "`");
    return std::string_view(tok).substr(key.size());
  }
};

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ls(line);
  std::vector<std::string> tok;
  for (std::string w; ls >> w;) tok.push_back(w);
  return tok;
}

}  // namespace

HexLayout parse_hex(std::string_view text) {
  HexLayout h;
  std::istringstream in{std::string(text)};
  std::string line;
  LineReader r;
  std::set<NodeId> targets;
  while (std::getline(in, line)) {
    ++r.line_no;
    const auto tok = tokens(line);
    if (tok.empty() || tok[0][0] == '#') continue;
    if (tok[0] == "node" && tok.size() == 5) {
      HexPoint p{r.integer(r.keyed(tok[2], "u=")), r.integer(r.keyed(tok[3], "v=")), HexSlot::Primary};
      const auto slot = r.keyed(tok[4], "slot=");
      if (slot == "backup") p.slot = HexSlot::Backup;
      else if (slot != "primary") throw ParseError(r.line_no, "unknown slot `" + std::string(slot) + "`");
      h.positions[r.integer(tok[1])] = p;
    } else if (tok[0] == "run" && (tok.size() == 4 || tok.size() == 5)) {
      HexRun run{r.integer(tok[1]), r.integer(tok[2]), Track::V};
      const auto kind = r.keyed(tok[3], "kind=");
      if (kind == "U") {
        const auto lane = tok.size() == 5 ? r.keyed(tok[4], "lane=") : std::string_view("lower");
        if (lane == "upper") run.track = Track::UUpper;
        else if (lane == "lower") run.track = Track::ULower;
        else throw ParseError(r.line_no, "unknown lane `" + std::string(lane) + "`");
      } else if (kind != "V") {
        throw ParseError(r.line_no, "unknown run kind `" + std::string(kind) + "`");
      }
      h.runs.push_back(run);
      targets.insert(run.to);
    } else {
      throw ParseError(r.line_no, "unrecognised hex layout line `" + line + "`");
    }
  }
  for (const auto& [id, p] : h.positions) {
    if (!targets.count(id)) {
      h.root = id;
      break;
    }
  }
  return h;
}

std::string format_polylines(const std::map<NodeId, LatticePoint>& nodes, const std::vector<HexPolyline>& lines) {
  std::ostringstream out;
  for (const auto& [id, p] : nodes) out << "node " << id << ' ' << p.x << ' ' << p.y << '\n';
  for (const auto& l : lines) {
    out << "polyline " << l.from << '-' << l.to;
    for (const auto& p : l.points) out << ' ' << p.x << ',' << p.y;
    out << '\n';
  }
  return out.str();
}

void parse_polylines(std::string_view text, std::map<NodeId, LatticePoint>& nodes, std::vector<HexPolyline>& lines) {
  std::istringstream in{std::string(text)};
  std::string line;
  LineReader r;
  while (std::getline(in, line)) {
    ++r.line_no;
    const auto tok = tokens(line);
    if (tok.empty() || tok[0][0] == '#') continue;
    if (tok[0] == "node" && tok.size() == 4) {
      nodes[r.integer(tok[1])] = {r.integer(tok[2]), r.integer(tok[3])};
    } else if (tok[0] == "polyline" && tok.size() >= 3) {
      // Node ids are non-negative, so the first '-' separates the pair.
      const auto dash = tok[1].find('-');
      if (dash == std::string::npos) throw ParseError(r.line_no, "expected `<a>-<b>`, got `" + tok[1] + "`");
      const std::string_view ids(tok[1]);
      HexPolyline pl{r.integer(ids.substr(0, dash)), r.integer(ids.substr(dash + 1)), {}};
      for (std::size_t i = 2; i < tok.size(); ++i) {
        const auto comma = tok[i].find(',');
        if (comma == std::string::npos) throw ParseError(r.line_no, "expected `x,y`, got `" + tok[i] + "`");
        const std::string_view xy(tok[i]);
        pl.points.push_back({r.integer(xy.substr(0, comma)), r.integer(xy.substr(comma + 1))});
      }
      lines.push_back(std::move(pl));
    } else {
      throw ParseError(r.line_no, "unrecognised polyline line `" + line + "`");
    }
  }
}

double radial_ratio_bound() {
  const double s3 = std::sqrt(3.0);
  return (s3 * std::sqrt(4.0 * s3 + 1.0) - s3) / 6.0;
}

std::map<NodeId, Point> layout_radial_trident(const DeltaTree& t, double ratio) {
  const double bound = radial_ratio_bound();
  if (!(ratio > 0.0 && ratio < bound)) {
    throw ArgumentError("radial ratio must lie in (0, " + std::to_string(bound) + "), got " + std::to_string(ratio));
  }
  const auto problems = validate_tree(t);
  if (!problems.empty()) throw ValidationError("invalid tree: " + problems.front());

  std::map<NodeId, Point> pos;
  if (t.junctions.empty()) {
    auto it = t.leaves.begin();
    pos[it->first] = {0, 0};
    pos[(++it)->first] = {1, 0};
    return pos;
  }

  const TreeAdjacency adj(t);
  // Centroid junction: smallest largest branch, ties to the lower id.
  std::vector<NodeId> order{t.junctions.begin()->first};
  std::map<NodeId, NodeId> parent{{order[0], kNoNode}};
  for (std::size_t i = 0; i < order.size(); ++i)
    for (NodeId w : adj.neighbors(order[i]))
      if (w != parent[order[i]]) {
        parent[w] = order[i];
        order.push_back(w);
      }
  std::map<NodeId, std::size_t> size;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    size[*it] += 1;
    if (parent[*it] != kNoNode) size[parent[*it]] += size[*it];
  }
  const auto total = order.size();
  NodeId centre = kNoNode;
  std::size_t best = total + 1;
  for (const auto& [id, j] : t.junctions) {
    std::size_t worst = total - size[id];
    for (NodeId w : adj.neighbors(id))
      if (w != parent[id]) worst = std::max(worst, size[w]);
    if (worst < best) {
      best = worst;
      centre = id;
    }
  }

  // Directions are multiples of 60 degrees, indexed 0..5.
  auto direction = [](int k) {
    const double a = std::acos(-1.0) / 3.0 * static_cast<double>(((k % 6) + 6) % 6);
    return Point{std::cos(a), std::sin(a)};
  };
  struct Item {
    NodeId node;
    NodeId from;
    int dir;
    int depth;
  };
  pos[centre] = {0, 0};
  std::deque<Item> queue;
  const auto root_kids = adj.neighbors(centre);
  for (std::size_t i = 0; i < root_kids.size(); ++i) queue.push_back({root_kids[i], centre, 2 * static_cast<int>(i), 0});
  while (!queue.empty()) {
    const auto item = queue.front();
    queue.pop_front();
    const double length = std::pow(ratio, item.depth);
    if (length < 1e-9) throw ArgumentError("tree too deep for a radial drawing at ratio " + std::to_string(ratio));
    const auto d = direction(item.dir);
    const auto base = pos.at(item.from);
    pos[item.node] = {base.x + length * d.x, base.y + length * d.y};
    int turn = 1;
    for (NodeId w : adj.neighbors(item.node)) {
      if (w == item.from) continue;
      queue.push_back({w, item.node, item.dir + turn, item.depth + 1});
      turn = -turn;
    }
  }
  return pos;
}

std::vector<std::string> check_radial_planar(const DeltaTree& t, const std::map<NodeId, Point>& pos) {
  std::vector<std::string> out;
  std::vector<Segment> segs;
  double shortest = 1e300;
  for (std::size_t e = 0; e < t.edges.size(); ++e) {
    const auto a = pos.find(t.edges[e].a.node);
    const auto b = pos.find(t.edges[e].b.node);
    if (a == pos.end() || b == pos.end()) {
      out.push_back("missing position for edge " + run_name(t.edges[e].a.node, t.edges[e].b.node));
      continue;
    }
    segs.push_back({a->second, b->second, e});
    shortest = std::min(shortest, std::hypot(b->second.x - a->second.x, b->second.y - a->second.y));
  }
  if (segs.empty()) return out;
  const double eps = shortest * shortest * 1e-9;
  for (const auto& c : segment_contacts(segs, eps)) {
    const auto& e1 = t.edges[segs[c.first].owner];
    const auto& e2 = t.edges[segs[c.second].owner];
    bool shared = false;
    for (NodeId x : {e1.a.node, e1.b.node})
      if (c.kind == ContactKind::Touch && c.endpoint_of_both && (x == e2.a.node || x == e2.b.node)) shared = true;
    if (!shared) {
      out.push_back("edge crossing between edges " + run_name(e1.a.node, e1.b.node) + " and " +
                    run_name(e2.a.node, e2.b.node));
    }
  }
  return out;
}

}  // namespace deltaconf
