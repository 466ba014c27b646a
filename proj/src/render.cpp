#include "deltaconf/render.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <sstream>

#include "deltaconf/errors.hpp"

namespace deltaconf {

namespace {

constexpr double kPi = 3.14159265358979323846;

Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
Point operator*(Point a, double k) { return {a.x * k, a.y * k}; }
double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
double norm(Point a) { return std::hypot(a.x, a.y); }

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s(buf);
  if (s == "-0.00") s = "0.00";
  return s;
}

std::string edge_id(NodeId a, NodeId b) { return "edge-" + std::to_string(a) + "-" + std::to_string(b); }

void require_valid(const DeltaTree& t) {
  const auto problems = validate_tree(t);
  if (!problems.empty()) throw ValidationError("invalid tree: " + problems.front());
}

}  // namespace

Scene scene_from_ortho(const DeltaTree& t, const OrthoLayout& l, double cell) {
  Scene s;
  for (const auto& [id, p] : l.positions) s.nodes[id] = {static_cast<double>(p.x) * cell, static_cast<double>(p.y) * cell};
  for (const auto& e : t.edges) {
    const auto a = s.nodes.find(e.a.node);
    const auto b = s.nodes.find(e.b.node);
    if (a == s.nodes.end() || b == s.nodes.end()) throw ValidationError("layout does not place every tree node");
    s.edges.push_back({e.a.node, e.b.node, {a->second, b->second}});
  }
  return s;
}

Scene scene_from_hex(const DeltaTree& t, const HexLayout& h, double cell) {
  Scene s;
  auto px = [&](LatticePoint p) { return Point{static_cast<double>(p.x) * cell, -static_cast<double>(p.y) * cell}; };
  for (const auto& [id, p] : h.positions) s.nodes[id] = px(to_lattice(p));
  std::map<std::pair<NodeId, NodeId>, const HexRun*> runs;
  for (const auto& r : h.runs) runs[{std::min(r.from, r.to), std::max(r.from, r.to)}] = &r;
  for (const auto& e : t.edges) {
    const auto it = runs.find({std::min(e.a.node, e.b.node), std::max(e.a.node, e.b.node)});
    if (it == runs.end()) throw ValidationError("hex layout has no run for a tree edge");
    auto pts = expand_edge(h, *it->second);
    if (it->second->from != e.a.node) std::reverse(pts.begin(), pts.end());
    Scene::Edge edge{e.a.node, e.b.node, {}};
    for (const auto& p : pts) edge.points.push_back(px(p));
    s.edges.push_back(std::move(edge));
  }
  return s;
}

Scene scene_from_radial(const DeltaTree& t, const std::map<NodeId, Point>& pos, double cell) {
  double shortest = 0;
  for (const auto& e : t.edges) {
    const double len = norm(pos.at(e.b.node) - pos.at(e.a.node));
    if (shortest == 0 || len < shortest) shortest = len;
  }
  const double k = shortest > 0 ? cell / shortest : cell;
  Scene s;
  for (const auto& [id, p] : pos) s.nodes[id] = {p.x * k, -p.y * k};
  for (const auto& e : t.edges) s.edges.push_back({e.a.node, e.b.node, {s.nodes.at(e.a.node), s.nodes.at(e.b.node)}});
  return s;
}

RenderModel build_render_model(const DeltaTree& t, const Scene& s, const RenderOptions& opts) {
  require_valid(t);
  if (!(opts.cell_size > 0) || !(opts.junction_radius > 0)) throw RenderError("cell size and junction radius must be positive");
  if (s.edges.size() != t.edges.size()) throw ValidationError("scene and tree disagree on the edge count");
  const double r = opts.junction_radius;

  RenderModel m;
  for (const auto& [id, label] : t.leaves) {
    const auto it = s.nodes.find(id);
    if (it == s.nodes.end()) throw ValidationError("scene does not place leaf " + std::to_string(id));
    m.leaves[id] = it->second;
    m.labels[id] = label;
  }
  for (const auto& [id, j] : t.junctions) m.junction_kinds[id] = j.kind;

  struct End {
    Point tangent_point;
    Point direction;  // unit vector from the junction along the track
    NodeId far = kNoNode;
    bool set = false;
  };
  std::map<NodeId, std::array<End, 3>> ends;

  for (std::size_t i = 0; i < s.edges.size(); ++i) {
    const auto& se = s.edges[i];
    const auto& te = t.edges[i];
    if (!((se.a == te.a.node && se.b == te.b.node) || (se.a == te.b.node && se.b == te.a.node)))
      throw ValidationError("scene edge order does not follow the tree");
    if (se.points.size() < 2) throw ValidationError("scene edge " + edge_id(se.a, se.b) + " has fewer than two points");
    const int slot_a = se.a == te.a.node ? te.a.slot : te.b.slot;
    const int slot_b = se.a == te.a.node ? te.b.slot : te.a.slot;

    RenderModel::Track track{se.a, se.b, se.points};
    auto trim = [&](Point junction, Point next, NodeId jid, int slot, NodeId far) {
      const double len = norm(next - junction);
      if (!(r < len / 2)) {
        throw RenderError("junction radius " + num(r) + " is not below half the segment length " + num(len) +
                          " at junction " + std::to_string(jid));
      }
      const Point d = (next - junction) * (1.0 / len);
      const Point tp = junction + d * r;
      ends[jid][static_cast<std::size_t>(slot)] = {tp, d, far, true};
      return tp;
    };
    if (t.is_junction(se.a)) track.points.front() = trim(se.points[0], se.points[1], se.a, slot_a, se.b);
    if (t.is_junction(se.b)) {
      const auto n = se.points.size();
      track.points.back() = trim(se.points[n - 1], se.points[n - 2], se.b, slot_b, se.a);
    }
    m.tracks.push_back(std::move(track));
  }

  for (const auto& [jid, junction] : t.junctions) {
    const auto& e = ends.at(jid);
    const Point c = s.nodes.at(jid);
    for (int p = 0; p < 3; ++p) {
      for (int q = p + 1; q < 3; ++q) {
        if (!junction.permits(p, q)) continue;
        const auto& ep = e[static_cast<std::size_t>(p)];
        const auto& eq = e[static_cast<std::size_t>(q)];
        const double cosine = std::clamp(dot(ep.direction, eq.direction), -1.0, 1.0);
        if (cosine > 1.0 - 1e-9) throw RenderError("two tracks leave junction " + std::to_string(jid) + " in one direction");
        RenderModel::Arc arc{jid, ep.far, eq.far, ep.tangent_point, eq.tangent_point, 0.0, false};
        if (cosine > -1.0 + 1e-9) {
          const double phi = std::acos(cosine);
          arc.radius = r * std::tan(phi / 2);
          const Point bis = ep.direction + eq.direction;
          const Point centre = c + bis * (r / std::cos(phi / 2) / norm(bis));
          arc.sweep = cross(arc.start - centre, arc.end - centre) > 0;
        }
        m.arcs.push_back(arc);
      }
    }
  }
  return m;
}

std::string render_svg(const RenderModel& m, const RenderOptions& opts) {
  const bool dark = opts.theme == Theme::Dark;
  const std::string ink = dark ? "#e5e7eb" : "#1f2933";
  const std::string background = dark ? "#111827" : "#ffffff";

  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
  bool first = true;
  auto take = [&](Point p) {
    if (first) {
      x0 = x1 = p.x;
      y0 = y1 = p.y;
      first = false;
    }
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  };
  for (const auto& [id, p] : m.leaves) take(p);
  for (const auto& tr : m.tracks)
    for (const auto& p : tr.points) take(p);
  const double margin = opts.cell_size;
  const double vx = x0 - margin;
  const double vy = y0 - margin;
  const double vw = x1 - x0 + 2 * margin;
  const double vh = y1 - y0 + 2 * margin;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(vw) << "\" height=\"" << num(vh)
      << "\" viewBox=\"" << num(vx) << ' ' << num(vy) << ' ' << num(vw) << ' ' << num(vh) << "\">\n";
  out << "<g id=\"drawing\" class=\"" << (dark ? "theme-dark" : "theme-light") << "\" fill=\"none\" stroke=\"" << ink
      << "\" stroke-width=\"2\" stroke-linecap=\"round\" stroke-linejoin=\"round\">\n";
  out << "<rect x=\"" << num(vx) << "\" y=\"" << num(vy) << "\" width=\"" << num(vw) << "\" height=\"" << num(vh)
      << "\" fill=\"" << background << "\" stroke=\"none\"/>\n";

  for (const auto& tr : m.tracks) {
    out << "<path id=\"" << edge_id(tr.a, tr.b) << "\" class=\"track\" d=\"M " << num(tr.points[0].x) << ' '
        << num(tr.points[0].y);
    for (std::size_t i = 1; i < tr.points.size(); ++i) out << " L " << num(tr.points[i].x) << ' ' << num(tr.points[i].y);
    out << "\"/>\n";
  }

  std::map<NodeId, std::vector<const RenderModel::Arc*>> by_junction;
  for (const auto& a : m.arcs) by_junction[a.junction].push_back(&a);
  for (const auto& [jid, kind] : m.junction_kinds) {
    out << "<g id=\"junction-" << jid << "\" class=\"junction " << (kind == JunctionKind::Delta ? "delta" : "lambda")
        << "\">\n";
    for (const auto* a : by_junction[jid]) {
      out << "<path class=\"arc" << (a->radius == 0 ? " straight" : "") << "\" data-junction=\"" << jid
          << "\" data-from=\"" << a->from << "\" data-to=\"" << a->to << "\" d=\"M " << num(a->start.x) << ' '
          << num(a->start.y);
      if (a->radius == 0) {
        out << " L ";
      } else {
        out << " A " << num(a->radius) << ' ' << num(a->radius) << " 0 0 " << (a->sweep ? 1 : 0) << ' ';
      }
      out << num(a->end.x) << ' ' << num(a->end.y) << "\"/>\n";
    }
    out << "</g>\n";
  }

  const double dot_r = std::max(2.0, opts.cell_size / 8);
  for (const auto& [id, p] : m.leaves) {
    out << "<g id=\"node-" << id << "\" class=\"leaf\">\n";
    out << "<circle cx=\"" << num(p.x) << "\" cy=\"" << num(p.y) << "\" r=\"" << num(dot_r) << "\" fill=\"" << ink
        << "\" stroke=\"none\"/>\n";
    if (opts.show_labels) {
      out << "<text x=\"" << num(p.x + dot_r + 2) << "\" y=\"" << num(p.y - dot_r - 2) << "\" font-family=\"sans-serif\" "
          << "font-size=\"" << num(std::max(8.0, opts.cell_size / 2)) << "\" fill=\"" << ink << "\" stroke=\"none\">"
          << m.labels.at(id) << "</text>\n";
    }
    out << "</g>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

std::string render_svg(const DeltaTree& t, const Scene& s, const RenderOptions& opts) {
  return render_svg(build_render_model(t, s, opts), opts);
}

std::string render_svg(const DeltaTree& t, const OrthoLayout& l, const RenderOptions& opts) {
  return render_svg(t, scene_from_ortho(t, l, opts.cell_size), opts);
}

std::string render_svg(const DeltaTree& t, const HexLayout& h, const RenderOptions& opts) {
  return render_svg(t, scene_from_hex(t, h, opts.cell_size), opts);
}

namespace {

struct Tag {
  std::string name;
  std::map<std::string, std::string> attrs;
};

// Minimal scanner for the element subset render_svg writes.
std::vector<Tag> scan_tags(std::string_view text) {
  std::vector<Tag> tags;
  std::size_t i = 0;
  while ((i = text.find('<', i)) != std::string_view::npos) {
    const auto close = text.find('>', i);
    if (close == std::string_view::npos) throw ParseError(0, "unterminated SVG tag");
    std::string_view body = text.substr(i + 1, close - i - 1);
    i = close + 1;
    if (body.empty() || body[0] == '?' || body[0] == '!' || body[0] == '/') continue;
    Tag tag;
    std::size_t k = 0;
    while (k < body.size() && !std::isspace(static_cast<unsigned char>(body[k])) && body[k] != '/') ++k;
    tag.name = std::string(body.substr(0, k));
    while (k < body.size()) {
      while (k < body.size() && (std::isspace(static_cast<unsigned char>(body[k])) || body[k] == '/')) ++k;
      const auto eq = body.find('=', k);
      if (eq == std::string_view::npos) break;
      const std::string key(body.substr(k, eq - k));
      const auto q1 = body.find('"', eq);
      const auto q2 = q1 == std::string_view::npos ? q1 : body.find('"', q1 + 1);
      if (q2 == std::string_view::npos) throw ParseError(0, "malformed attribute in <" + tag.name + ">");
      tag.attrs[key] = std::string(body.substr(q1 + 1, q2 - q1 - 1));
      k = q2 + 1;
    }
    tags.push_back(std::move(tag));
  }
  return tags;
}

struct PathData {
  std::vector<Point> points;
  double radius = 0;
  bool sweep = false;
  bool arc = false;
};

PathData parse_path(const std::string& d) {
  PathData out;
  std::istringstream in(d);
  std::string tok;
  char command = 0;
  auto number = [&]() {
    if (!(in >> tok)) throw ParseError(0, "truncated path data");
    char* end = nullptr;
    const double v = std::strtod(tok.c_str(), &end);
    if (end == tok.c_str() || *end != '\0') throw ParseError(0, "malformed path number `" + tok + "`");
    return v;
  };
  while (in >> std::ws && in.peek() != EOF) {
    if (std::isalpha(in.peek())) command = static_cast<char>(in.get());
    if (command == 'M' || command == 'L') {
      const double x = number();
      const double y = number();
      out.points.push_back({x, y});
    } else if (command == 'A') {
      const double rx = number();
      number();  // ry, equal to rx here
      number();  // rotation
      const double large = number();
      const double sweep = number();
      const double x = number();
      const double y = number();
      if (large != 0) throw ParseError(0, "large arcs are not produced by the renderer");
      out.radius = rx;
      out.sweep = sweep != 0;
      out.arc = true;
      out.points.push_back({x, y});
    } else {
      throw ParseError(0, std::string("unsupported path command `") + command + "`");
    }
  }
  return out;
}

NodeId to_id(const std::string& s) {
  char* end = nullptr;
  const auto v = std::strtoll(s.c_str(), &end, 10);
  if (s.empty() || *end != '\0') throw ParseError(0, "malformed node id `" + s + "`");
  return v;
}

}  // namespace

RenderModel parse_svg_model(std::string_view svg) {
  RenderModel m;
  NodeId current_leaf = kNoNode;
  for (const auto& tag : scan_tags(svg)) {
    const auto attr = [&](const char* key) {
      const auto it = tag.attrs.find(key);
      return it == tag.attrs.end() ? std::string() : it->second;
    };
    if (tag.name == "g") {
      const auto id = attr("id");
      current_leaf = kNoNode;
      if (id.rfind("node-", 0) == 0) current_leaf = to_id(id.substr(5));
      if (id.rfind("junction-", 0) == 0) {
        m.junction_kinds[to_id(id.substr(9))] =
            attr("class").find("lambda") != std::string::npos ? JunctionKind::Lambda : JunctionKind::Delta;
      }
    } else if (tag.name == "circle" && current_leaf != kNoNode) {
      m.leaves[current_leaf] = {std::strtod(attr("cx").c_str(), nullptr), std::strtod(attr("cy").c_str(), nullptr)};
    } else if (tag.name == "path") {
      const auto id = attr("id");
      const auto path = parse_path(attr("d"));
      if (id.rfind("edge-", 0) == 0) {
        const auto rest = id.substr(5);
        const auto dash = rest.find('-');
        if (dash == std::string::npos) throw ParseError(0, "malformed edge id `" + id + "`");
        m.tracks.push_back({to_id(rest.substr(0, dash)), to_id(rest.substr(dash + 1)), path.points});
      } else if (attr("class").find("arc") != std::string::npos) {
        if (path.points.size() != 2) throw ParseError(0, "arc path must have exactly two end points");
        RenderModel::Arc a;
        a.junction = to_id(attr("data-junction"));
        a.from = to_id(attr("data-from"));
        a.to = to_id(attr("data-to"));
        a.start = path.points[0];
        a.end = path.points[1];
        a.radius = path.arc ? path.radius : 0.0;
        a.sweep = path.sweep;
        m.arcs.push_back(a);
      }
    }
  }
  return m;
}

std::vector<Point> sample_arc(const RenderModel::Arc& arc, int samples) {
  if (arc.radius <= 0) return {arc.start, arc.end};
  const Point chord = arc.end - arc.start;
  const double len = norm(chord);
  const double half = len / 2;
  const double rad = std::max(arc.radius, half);
  const double offset = std::sqrt(std::max(0.0, rad * rad - half * half));
  const Point mid = arc.start + chord * 0.5;
  const Point normal{-chord.y / len, chord.x / len};
  // Of the two candidate centres, the minor arc from start to end turns in
  // the sweep direction around exactly one.
  Point centre = mid + normal * offset;
  if ((cross(arc.start - centre, arc.end - centre) > 0) != arc.sweep) centre = mid - normal * offset;
  const double a0 = std::atan2(arc.start.y - centre.y, arc.start.x - centre.x);
  double a1 = std::atan2(arc.end.y - centre.y, arc.end.x - centre.x);
  if (arc.sweep && a1 < a0) a1 += 2 * kPi;
  if (!arc.sweep && a1 > a0) a1 -= 2 * kPi;
  std::vector<Point> out{arc.start};
  for (int i = 1; i < samples; ++i) {
    const double a = a0 + (a1 - a0) * i / samples;
    out.push_back({centre.x + rad * std::cos(a), centre.y + rad * std::sin(a)});
  }
  out.push_back(arc.end);
  return out;
}

namespace {

std::pair<long long, long long> key_of(Point p) { return {std::llround(p.x * 100), std::llround(p.y * 100)}; }

}  // namespace

std::vector<std::vector<Point>> sampled_paths(const RenderModel& m, int samples_per_arc) {
  std::vector<std::vector<Point>> out;
  // Track ends, each with the neighbouring point on its track.
  std::map<std::pair<long long, long long>, Point> neighbour;
  for (const auto& tr : m.tracks) {
    out.push_back(tr.points);
    const auto n = tr.points.size();
    if (n < 2) continue;
    neighbour[key_of(tr.points[0])] = tr.points[1];
    neighbour[key_of(tr.points[n - 1])] = tr.points[n - 2];
  }
  for (const auto& arc : m.arcs) {
    std::vector<Point> path;
    const auto in = neighbour.find(key_of(arc.start));
    if (in != neighbour.end()) path.push_back(in->second);
    for (const auto& p : sample_arc(arc, samples_per_arc)) path.push_back(p);
    const auto outp = neighbour.find(key_of(arc.end));
    if (outp != neighbour.end()) path.push_back(outp->second);
    out.push_back(std::move(path));
  }
  return out;
}

bool check_smoothness(const std::vector<std::vector<Point>>& paths, double tolerance_deg) {
  const double limit = 90.0 - tolerance_deg;
  for (const auto& path : paths) {
    Point prev{};
    bool have_prev = false;
    for (std::size_t i = 1; i < path.size(); ++i) {
      const Point d = path[i] - path[i - 1];
      if (norm(d) < 1e-9) continue;
      if (have_prev) {
        const double c = std::clamp(dot(prev, d) / (norm(prev) * norm(d)), -1.0, 1.0);
        if (std::acos(c) * 180.0 / kPi > limit) return false;
      }
      prev = d;
      have_prev = true;
    }
  }
  return true;
}

std::vector<std::string> check_render_planar(const RenderModel& m, int samples_per_arc) {
  std::vector<std::vector<Point>> pieces;
  std::vector<std::string> names;
  for (const auto& tr : m.tracks) {
    pieces.push_back(tr.points);
    names.push_back(edge_id(tr.a, tr.b));
  }
  for (const auto& a : m.arcs) {
    pieces.push_back(sample_arc(a, samples_per_arc));
    names.push_back("arc " + std::to_string(a.from) + "-" + std::to_string(a.to) + " at junction " +
                    std::to_string(a.junction));
  }
  std::vector<Segment> segs;
  std::vector<std::size_t> index_in_piece;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (std::size_t k = 0; k + 1 < pieces[i].size(); ++k) {
      if (norm(pieces[i][k + 1] - pieces[i][k]) < 1e-9) continue;
      segs.push_back({pieces[i][k], pieces[i][k + 1], i});
      index_in_piece.push_back(k);
    }
  }
  auto is_piece_end = [&](std::size_t piece, Point p) {
    const auto& pts = pieces[piece];
    return norm(pts.front() - p) < 1e-6 || norm(pts.back() - p) < 1e-6;
  };
  std::vector<std::string> out;
  for (const auto& c : segment_contacts(segs, 1e-6)) {
    const auto pi = segs[c.first].owner;
    const auto pj = segs[c.second].owner;
    if (c.kind == ContactKind::Touch && c.endpoint_of_both) {
      if (pi == pj) {
        const auto gap = index_in_piece[c.first] > index_in_piece[c.second]
                             ? index_in_piece[c.first] - index_in_piece[c.second]
                             : index_in_piece[c.second] - index_in_piece[c.first];
        if (gap == 1) continue;
      } else if (is_piece_end(pi, c.at) && is_piece_end(pj, c.at)) {
        continue;
      }
    }
    out.push_back(pi == pj ? "track self-intersection in " + names[pi]
                           : "track crossing between " + names[pi] + " and " + names[pj]);
  }
  return out;
}

std::vector<std::string> check_lambda_tails(const DeltaTree& t, const RenderModel& m) {
  std::vector<std::string> out;
  const TreeAdjacency adj(t);
  for (const auto& [jid, j] : t.junctions) {
    if (j.kind != JunctionKind::Lambda) continue;
    const NodeId t1 = adj.across(jid, (j.head + 1) % 3).node;
    const NodeId t2 = adj.across(jid, (j.head + 2) % 3).node;
    for (const auto& a : m.arcs) {
      if (a.junction == jid && ((a.from == t1 && a.to == t2) || (a.from == t2 && a.to == t1)))
        out.push_back("tails joined at lambda junction " + std::to_string(jid));
    }
  }
  return out;
}

}  // namespace deltaconf
