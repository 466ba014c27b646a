#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "deltaconf/delta_tree.hpp"
#include "deltaconf/geometry.hpp"
#include "deltaconf/hex_layout.hpp"
#include "deltaconf/ortho_layout.hpp"

namespace deltaconf {

enum class Theme { Light, Dark };

struct RenderOptions {
  double cell_size = 24.0;       // pixels per layout unit
  double junction_radius = 6.0;  // pixels from a junction to where its tracks start to merge
  bool show_labels = true;
  Theme theme = Theme::Light;
};

/// Layout geometry in pixels, y pointing down: node centres plus one
/// polyline per tree edge, running from edge.a to edge.b.
struct Scene {
  struct Edge {
    NodeId a = kNoNode;
    NodeId b = kNoNode;
    std::vector<Point> points;
  };
  std::map<NodeId, Point> nodes;
  std::vector<Edge> edges;
};

Scene scene_from_ortho(const DeltaTree& t, const OrthoLayout& l, double cell_size);
/// Lattice y grows upward, so it is negated.
Scene scene_from_hex(const DeltaTree& t, const HexLayout& h, double cell_size);
/// Scaled so the shortest edge is one cell; y negated.
Scene scene_from_radial(const DeltaTree& t, const std::map<NodeId, Point>& pos, double cell_size);

/// What gets drawn. Edge tracks stop `junction_radius` short of a junction;
/// there, every permitted port pair is joined by a circular arc tangent to
/// both tracks (a straight piece when the tracks are opposite).
struct RenderModel {
  struct Track {
    NodeId a = kNoNode;
    NodeId b = kNoNode;
    std::vector<Point> points;
  };
  struct Arc {
    NodeId junction = kNoNode;
    NodeId from = kNoNode;  // far end of the entering edge
    NodeId to = kNoNode;    // far end of the leaving edge
    Point start;
    Point end;
    double radius = 0;  // 0 for a straight piece
    bool sweep = false;  // SVG sweep flag
  };
  std::map<NodeId, Point> leaves;
  std::map<NodeId, Vertex> labels;
  std::map<NodeId, JunctionKind> junction_kinds;
  std::vector<Track> tracks;
  std::vector<Arc> arcs;
};

/// Throws RenderError when the junction radius is not below half of every
/// segment that meets a junction, ValidationError on a tree/scene mismatch.
RenderModel build_render_model(const DeltaTree& t, const Scene& s, const RenderOptions& opts);

std::string render_svg(const RenderModel& m, const RenderOptions& opts);
std::string render_svg(const DeltaTree& t, const Scene& s, const RenderOptions& opts);
std::string render_svg(const DeltaTree& t, const OrthoLayout& l, const RenderOptions& opts);
std::string render_svg(const DeltaTree& t, const HexLayout& h, const RenderOptions& opts);

/// Reads back the tracks and arcs of an SVG written by render_svg.
RenderModel parse_svg_model(std::string_view svg);

std::vector<Point> sample_arc(const RenderModel::Arc& arc, int samples);

/// Polylines to test for sharp turns: every track, and every junction passage
/// (last segment of the entering track, the sampled arc, first segment of
/// the leaving track).
std::vector<std::vector<Point>> sampled_paths(const RenderModel& m, int samples_per_arc = 16);

/// True iff no polyline turns by more than 90 - tolerance degrees at any vertex.
bool check_smoothness(const std::vector<std::vector<Point>>& paths, double tolerance_deg);

/// Crossings or touching between drawn tracks and sampled arcs, other than
/// pieces meeting end to end.
std::vector<std::string> check_render_planar(const RenderModel& m, int samples_per_arc = 16);

/// Λ-junctions whose two tails are joined by an arc.
std::vector<std::string> check_lambda_tails(const DeltaTree& t, const RenderModel& m);

}  // namespace deltaconf
