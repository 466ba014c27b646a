#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "deltaconf/delta_tree.hpp"
#include "deltaconf/geometry.hpp"
#include "deltaconf/ortho_layout.hpp"

namespace deltaconf {

// Lattice: every hexagonal cell has two vertical sides of length 1 and four
// sides of slope +-1/2. Curve u and curve v meet in one vertical side whose
// lower end is the primary point and upper end the backup point.

enum class HexSlot : std::uint8_t { Primary, Backup };

struct HexPoint {
  std::int64_t u = 0;
  std::int64_t v = 0;
  HexSlot slot = HexSlot::Primary;

  friend bool operator==(const HexPoint&, const HexPoint&) = default;
};

struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// Primary(u, v) = (4v + 2u, 2u); Backup = Primary + (0, 1).
LatticePoint to_lattice(const HexPoint& p);

enum class CurveKind : std::uint8_t { U, V };
enum class Lane : std::uint8_t { Lower, Upper };

/// Which curve a run follows, and for U-runs which wave of the curve.
enum class Track : std::uint8_t { V, ULower, UUpper };

inline CurveKind kind_of(Track t) { return t == Track::V ? CurveKind::V : CurveKind::U; }
inline Lane lane_of(Track t) { return t == Track::UUpper ? Lane::Upper : Lane::Lower; }

/// One tree edge: its two end nodes and its track. The geometry follows from
/// the end nodes' current points, so this is all that is stored per edge.
struct HexRun {
  NodeId from = kNoNode;
  NodeId to = kNoNode;
  Track track = Track::V;

  friend bool operator==(const HexRun&, const HexRun&) = default;
};

struct HexLayout {
  NodeId root = kNoNode;
  std::map<NodeId, HexPoint> positions;
  std::vector<HexRun> runs;

  friend bool operator==(const HexLayout&, const HexLayout&) = default;
};

/// Integer fields held by the layout: three per node and three per run.
std::size_t hex_stored_fields(const HexLayout& h);

/// Node (x, y) goes to Primary(u = y, v = x); horizontal segments become
/// lower-wave U-runs, vertical ones V-runs.
HexLayout ortho_to_hex(const OrthoLayout& l);

/// Cartesian polyline of a run between two points. Throws ValidationError
/// when the points do not lie on a common curve of the run's kind.
std::vector<LatticePoint> expand_run(const HexPoint& from, const HexPoint& to, Track track);
std::vector<LatticePoint> expand_edge(const HexLayout& h, const HexRun& run);

/// Visits nodes in BFS order from the root; at a node whose incident runs
/// share lattice points with other runs, tries flipping the node's slot, then
/// the lanes of its incident U-runs, then combinations, keeping the first
/// conflict-free choice. A node with no such choice is left alone for a later
/// node to fix. Throws UnresolvableOverlap if any clash survives the pass.
HexLayout resolve_overlaps(const HexLayout& h);

struct HexPolyline {
  NodeId from = kNoNode;
  NodeId to = kNoNode;
  std::vector<LatticePoint> points;
};

std::vector<HexPolyline> expand_all(const HexLayout& h);

/// Checks drawn polylines: slopes in {1/2, -1/2, vertical}, no shared
/// segments ("edge overlap"), no crossings or touching, and that each
/// polyline starts and ends at its nodes' points.
std::vector<std::string> check_hex_drawing(const std::map<NodeId, LatticePoint>& nodes,
                                           const std::vector<HexPolyline>& lines);

/// Structural checks on the run form, then check_hex_drawing on its expansion.
std::vector<std::string> check_hex_valid(const HexLayout& h);

struct BendCount {
  std::size_t total = 0;
  std::size_t max_per_edge = 0;
};

std::size_t count_bends(const std::vector<LatticePoint>& polyline);
BendCount count_bends(const HexLayout& h);

/// Bounding box over all drawn points, in lattice units; single node -> 1.
std::int64_t hex_area(const HexLayout& h);

/// Greedy pass merging consecutive segments whose union is a single segment
/// of legal slope, keeping the drawing valid. With the three lattice slopes a
/// genuine bend never merges, so only collinear split points disappear.
std::vector<HexPolyline> reduce_bends(const std::map<NodeId, LatticePoint>& nodes, std::vector<HexPolyline> lines);

/// `node <id> u=<u> v=<v> slot=primary|backup` and
/// `run <a> <b> kind=U|V lane=upper|lower` (lane omitted for V).
std::string format_hex(const HexLayout& h);
HexLayout parse_hex(std::string_view text);

/// `polyline <a>-<b> x1,y1 x2,y2 ...` with `node <id> <x> <y>` lines first.
std::string format_polylines(const std::map<NodeId, LatticePoint>& nodes, const std::vector<HexPolyline>& lines);
void parse_polylines(std::string_view text, std::map<NodeId, LatticePoint>& nodes, std::vector<HexPolyline>& lines);

std::map<NodeId, LatticePoint> lattice_positions(const HexLayout& h);

/// Upper limit on the shrink ratio for crossing-free three-slope drawings:
/// (sqrt(3) * sqrt(4 sqrt(3) + 1) - sqrt(3)) / 6.
double radial_ratio_bound();

inline constexpr double kDefaultRadialRatio = 0.45;

/// Straight-line drawing with edge directions at multiples of 60 degrees.
/// Rooted at a centroid junction whose edges leave at 0, 120 and 240
/// degrees; each deeper edge turns +-60 degrees from its parent edge and is
/// `ratio` times as long. Throws ArgumentError unless 0 < ratio < bound, or
/// when the tree is too deep for the lengths to stay distinguishable.
std::map<NodeId, Point> layout_radial_trident(const DeltaTree& t, double ratio = kDefaultRadialRatio);

/// Crossings among the straight edges of a radial drawing.
std::vector<std::string> check_radial_planar(const DeltaTree& t, const std::map<NodeId, Point>& pos);

}  // namespace deltaconf
