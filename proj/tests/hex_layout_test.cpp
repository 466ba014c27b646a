#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "deltaconf/errors.hpp"
#include "deltaconf/hex_layout.hpp"

using namespace deltaconf;

namespace {

using Pts = std::vector<LatticePoint>;

HexLayout pipeline(const Graph& g) {
  const auto t = build_delta_tree(g, eliminate(g));
  return resolve_overlaps(ortho_to_hex(layout_upward_ortho(root_at_leaf(t))));
}

bool has(const std::vector<std::string>& v, std::string_view needle) {
  return std::any_of(v.begin(), v.end(), [&](const std::string& s) { return s.find(needle) != std::string::npos; });
}

// Root above a junction whose children sit left and right of it.
OrthoLayout tee_layout() {
  OrthoLayout l;
  l.root = 0;
  l.positions = {{0, {1, 0}}, {3, {1, 1}}, {1, {0, 1}}, {2, {2, 1}}};
  l.edges = {{0, 3}, {3, 1}, {3, 2}};
  return l;
}

}  // namespace

TEST(HexLattice, Formula) {
  EXPECT_EQ(to_lattice({0, 0, HexSlot::Primary}), (LatticePoint{0, 0}));
  EXPECT_EQ(to_lattice({2, 1, HexSlot::Primary}), (LatticePoint{8, 4}));
  EXPECT_EQ(to_lattice({2, 1, HexSlot::Backup}), (LatticePoint{8, 5}));

  OrthoLayout l;
  l.positions = {{0, {0, 0}}, {1, {1, 2}}};
  const auto h = ortho_to_hex(l);
  EXPECT_EQ(to_lattice(h.positions.at(1)), (LatticePoint{8, 4}));
}

TEST(ExpandRun, UnitSteps) {
  const HexPoint p00{0, 0, HexSlot::Primary};
  EXPECT_EQ(expand_run(p00, {1, 0, HexSlot::Primary}, Track::V), (Pts{{0, 0}, {0, 1}, {2, 2}}));
  EXPECT_EQ(expand_run(p00, {0, 1, HexSlot::Primary}, Track::ULower), (Pts{{0, 0}, {2, -1}, {4, 0}}));
  EXPECT_EQ(expand_run({0, 0, HexSlot::Backup}, {0, 1, HexSlot::Backup}, Track::UUpper),
            (Pts{{0, 1}, {2, 2}, {4, 1}}));
  EXPECT_EQ(expand_run(p00, p00, Track::V), (Pts{{0, 0}}));
  EXPECT_EQ(expand_run({1, 0, HexSlot::Primary}, p00, Track::V), (Pts{{2, 2}, {0, 1}, {0, 0}}));
  EXPECT_THROW(expand_run(p00, {1, 1, HexSlot::Primary}, Track::V), ValidationError);
  EXPECT_THROW(expand_run(p00, {1, 1, HexSlot::Primary}, Track::ULower), ValidationError);
}

TEST(ExpandRun, LongRunsUseOnlyLegalSlopes) {
  for (auto track : {Track::V, Track::ULower, Track::UUpper}) {
    for (auto s1 : {HexSlot::Primary, HexSlot::Backup}) {
      for (auto s2 : {HexSlot::Primary, HexSlot::Backup}) {
        const HexPoint a{3, 2, s1};
        const HexPoint b = track == Track::V ? HexPoint{7, 2, s2} : HexPoint{3, 6, s2};
        const auto pts = expand_run(a, b, track);
        EXPECT_EQ(pts.front(), to_lattice(a));
        EXPECT_EQ(pts.back(), to_lattice(b));
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
          const auto dx = pts[i + 1].x - pts[i].x;
          const auto dy = pts[i + 1].y - pts[i].y;
          EXPECT_TRUE((dx == 0 && std::abs(dy) == 1) || (std::abs(dx) == 2 && std::abs(dy) == 1));
        }
      }
    }
  }
}

TEST(Bends, Counting) {
  EXPECT_EQ(count_bends(Pts{{0, 0}}), 0u);
  EXPECT_EQ(count_bends(Pts{{0, 0}, {0, 1}, {2, 2}}), 1u);
  EXPECT_EQ(count_bends(Pts{{0, 0}, {2, 1}, {4, 2}}), 0u);
  // Length-L run between primary points: 2L segments, 2L - 1 bends.
  EXPECT_EQ(count_bends(expand_run({0, 0, HexSlot::Primary}, {5, 0, HexSlot::Primary}, Track::V)), 9u);
}

TEST(ResolveOverlaps, NoConflictsMeansUnchanged) {
  const auto t = build_delta_tree(Graph::complete(5), eliminate(Graph::complete(5)));
  const auto h = ortho_to_hex(layout_upward_ortho(root_at_leaf(t)));
  EXPECT_EQ(resolve_overlaps(h), h);
}

TEST(ResolveOverlaps, SeparatesTracksAtJunction) {
  const auto raw = ortho_to_hex(tee_layout());
  EXPECT_TRUE(has(check_hex_valid(raw), "edge overlap"));
  const auto fixed = resolve_overlaps(raw);
  EXPECT_TRUE(check_hex_valid(fixed).empty());
  EXPECT_EQ(fixed.positions.size(), raw.positions.size());
}

TEST(ResolveOverlaps, PipelineOutputsValid) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto h = pipeline(gen_dh_random(2 + (seed * 53) % 500, seed).graph);
    const auto problems = check_hex_valid(h);
    EXPECT_TRUE(problems.empty()) << "seed " << seed << ": " << problems.front();
    EXPECT_LE(hex_stored_fields(h), 6 * h.positions.size());
  }
}

TEST(ResolveOverlaps, RandomTreeShapesValid) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto t = random_delta_tree(2 + seed * 11, seed);
    const auto h = resolve_overlaps(ortho_to_hex(layout_upward_ortho(root_at_leaf(t))));
    EXPECT_TRUE(check_hex_valid(h).empty()) << "seed " << seed;
  }
}

TEST(CheckHex, DetectsPlantedProblems) {
  const std::map<NodeId, LatticePoint> nodes{{0, {0, 0}}, {1, {4, 0}}, {2, {4, 2}}, {3, {0, 2}}};
  const std::vector<HexPolyline> overlap{{0, 1, {{0, 0}, {2, -1}, {4, 0}}}, {3, 2, {{0, 2}, {2, 1}, {0, 0}, {2, -1}, {4, 2}}}};
  EXPECT_TRUE(has(check_hex_drawing(nodes, overlap), "edge overlap"));

  const std::vector<HexPolyline> steep{{0, 1, {{0, 0}, {2, 2}, {4, 0}}}};
  EXPECT_TRUE(has(check_hex_drawing(nodes, steep), "illegal slope"));

  const std::vector<HexPolyline> cross{{0, 2, {{0, 0}, {2, 1}, {4, 2}}}, {3, 1, {{0, 2}, {2, 1}, {4, 0}}}};
  EXPECT_TRUE(has(check_hex_drawing(nodes, cross), "edge crossing"));

  const std::vector<HexPolyline> loose{{0, 1, {{0, 0}, {2, -1}}}};
  EXPECT_TRUE(has(check_hex_drawing(nodes, loose), "does not connect"));
}

TEST(HexArea, Bounds) {
  HexLayout single;
  single.positions[0] = {};
  EXPECT_EQ(hex_area(single), 1);

  const auto t = build_delta_tree(Graph::complete(2), eliminate(Graph::complete(2)));
  const auto l = layout_upward_ortho(root_at_leaf(t));
  const auto h = resolve_overlaps(ortho_to_hex(l));
  EXPECT_LE(hex_area(h), 8 * ortho_area(l));
}

TEST(HexArea, NeverAboveLatticeBound) {
  // An ortho box of W x H points spans (4(W-1) + 2(H-1) + 1) x (2(H-1) + 2)
  // lattice points at most, counting the dip below the top row.
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto t = build_delta_tree(gen_dh_random(10 + seed * 20, seed).graph,
                                    eliminate(gen_dh_random(10 + seed * 20, seed).graph));
    const auto l = layout_upward_ortho(root_at_leaf(t));
    const auto h = resolve_overlaps(ortho_to_hex(l));
    std::int64_t w = 0, hh = 0;
    for (const auto& [id, p] : l.positions) {
      w = std::max(w, p.x + 1);
      hh = std::max(hh, p.y + 1);
    }
    EXPECT_LE(hex_area(h), (4 * (w - 1) + 2 * (hh - 1) + 1) * (2 * (hh - 1) + 3));
  }
}

TEST(ReduceBends, LatticePathsStayPut) {
  const auto h = pipeline(gen_dh_random(40, 4).graph);
  const auto lines = expand_all(h);
  const auto reduced = reduce_bends(lattice_positions(h), lines);
  for (std::size_t i = 0; i < lines.size(); ++i) EXPECT_EQ(reduced[i].points, lines[i].points);

  const std::map<NodeId, LatticePoint> nodes{{0, {0, 0}}, {1, {0, 2}}};
  const auto merged = reduce_bends(nodes, {{0, 1, {{0, 0}, {0, 1}, {0, 2}}}});
  EXPECT_EQ(merged[0].points.size(), 2u);
}

TEST(HexText, RoundTrips) {
  const auto h = resolve_overlaps(ortho_to_hex(tee_layout()));
  EXPECT_EQ(parse_hex(format_hex(h)), h);

  std::map<NodeId, LatticePoint> nodes;
  std::vector<HexPolyline> lines;
  parse_polylines(format_polylines(lattice_positions(h), expand_all(h)), nodes, lines);
  EXPECT_EQ(nodes, lattice_positions(h));
  ASSERT_EQ(lines.size(), h.runs.size());
  EXPECT_EQ(lines[0].points, expand_edge(h, h.runs[0]));
  EXPECT_THROW(parse_hex("run 1 2 kind=W\n"), ParseError);
}

TEST(Radial, Bound) {
  EXPECT_NEAR(radial_ratio_bound(), 0.5242, 1e-4);
  const auto k3 = build_delta_tree(Graph::complete(3), eliminate(Graph::complete(3)));
  EXPECT_THROW(layout_radial_trident(k3, 0.53), ArgumentError);
  EXPECT_THROW(layout_radial_trident(k3, 0.0), ArgumentError);
}

TEST(Radial, SmallTrees) {
  const auto k2 = build_delta_tree(Graph::complete(2), eliminate(Graph::complete(2)));
  const auto p2 = layout_radial_trident(k2);
  EXPECT_EQ(p2.size(), 2u);

  const auto k3 = build_delta_tree(Graph::complete(3), eliminate(Graph::complete(3)));
  const auto p3 = layout_radial_trident(k3);
  const auto c = p3.at(3);
  for (NodeId a : {0, 1, 2}) {
    for (NodeId b : {0, 1, 2}) {
      if (a >= b) continue;
      const double ax = p3.at(a).x - c.x, ay = p3.at(a).y - c.y;
      const double bx = p3.at(b).x - c.x, by = p3.at(b).y - c.y;
      EXPECT_NEAR((ax * bx + ay * by) / (std::hypot(ax, ay) * std::hypot(bx, by)), -0.5, 1e-12);
    }
  }
}

TEST(Radial, BalancedTreesCrossingFree) {
  for (int depth = 0; depth <= 7; ++depth) {
    const auto t = balanced_delta_tree(depth);
    for (double ratio : {0.3, 0.45, 0.52}) {
      const auto pos = layout_radial_trident(t, ratio);
      EXPECT_TRUE(check_radial_planar(t, pos).empty()) << "depth " << depth << " ratio " << ratio;
    }
  }
}
