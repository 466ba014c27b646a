#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "deltaconf/errors.hpp"
#include "deltaconf/hex_layout.hpp"
#include "deltaconf/recognition.hpp"
#include "deltaconf/render.hpp"

namespace py = pybind11;
using namespace deltaconf;

namespace {

std::string_view kind_name(EliminationKind k) {
  switch (k) {
    case EliminationKind::PendantCut:
      return "pendant";
    case EliminationKind::TrueTwinMerge:
      return "true_twin";
    case EliminationKind::FalseTwinMerge:
      return "false_twin";
  }
  return "?";
}

Graph graph_from_edges(const std::vector<std::pair<Vertex, Vertex>>& edges, const std::vector<Vertex>& vertices) {
  Graph::Builder b;
  for (Vertex v : vertices) b.add_vertex(v);
  for (const auto& [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

RenderOptions render_options(double cell_size, double junction_radius, bool labels, const std::string& theme) {
  if (theme != "light" && theme != "dark") throw ArgumentError("theme must be light or dark");
  RenderOptions o;
  o.cell_size = cell_size;
  o.junction_radius = junction_radius;
  o.show_labels = labels;
  o.theme = theme == "dark" ? Theme::Dark : Theme::Light;
  return o;
}

std::string draw(const DeltaTree& t, const std::string& layout, double ratio, const RenderOptions& opts) {
  if (layout == "radial") return render_svg(t, scene_from_radial(t, layout_radial_trident(t, ratio), opts.cell_size), opts);
  const auto ortho = layout_upward_ortho(root_at_leaf(t));
  if (layout == "ortho") return render_svg(t, ortho, opts);
  if (layout == "hex") return render_svg(t, resolve_overlaps(ortho_to_hex(ortho)), opts);
  throw ArgumentError("layout must be ortho, hex or radial");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Distance-hereditary recognition and Δ-confluent drawing";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);
  py::register_exception<TooLargeError>(m, "TooLargeError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<RecognitionError>(m, "RecognitionError", PyExc_ValueError);
  py::register_exception<UnresolvableOverlap>(m, "UnresolvableOverlap", PyExc_RuntimeError);
  py::register_exception<RenderError>(m, "RenderError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&graph_from_edges), py::arg("edges"), py::arg("vertices") = std::vector<Vertex>{})
      .def_static("parse", [](const std::string& text) { return parse_graph(text); })
      .def_static("from_json", [](const std::string& text) { return graph_from_json(text); })
      .def("vertices", &Graph::vertices)
      .def("edges", &Graph::edges)
      .def("order", &Graph::order)
      .def("is_connected", &Graph::is_connected)
      .def("induced_subgraph", &Graph::induced_subgraph)
      .def("to_edge_list", [](const Graph& g) { return format_edge_list(g); })
      .def("to_json", [](const Graph& g) { return graph_to_json(g); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph " + std::to_string(g.order()) + " vertices, " + std::to_string(g.edges().size()) + " edges>";
      });

  py::class_<EliminationSequence>(m, "EliminationSequence")
      .def_property_readonly("steps",
                             [](const EliminationSequence& s) {
                               std::vector<std::tuple<std::string, Vertex, Vertex>> out;
                               for (const auto& st : s.steps)
                                 out.emplace_back(std::string(kind_name(st.kind)), st.removed, st.survivor);
                               return out;
                             })
      .def_readonly("terminal_pair", &EliminationSequence::terminal_pair)
      .def("__len__", [](const EliminationSequence& s) { return s.steps.size(); })
      .def("__str__", [](const EliminationSequence& s) { return format_sequence(s); })
      .def_static("parse", [](const std::string& text) { return parse_sequence(text); })
      .def("replay", [](const EliminationSequence& s) { return apply_sequence_forward(s); });

  py::class_<DeltaTree>(m, "DeltaTree")
      .def_property_readonly("leaf_count", [](const DeltaTree& t) { return t.leaves.size(); })
      .def_property_readonly("junction_count", [](const DeltaTree& t) { return t.junctions.size(); })
      .def("semantics", [](const DeltaTree& t) { return semantics(t); })
      .def("validate", [](const DeltaTree& t) { return validate_tree(t); })
      .def("to_sequence", [](const DeltaTree& t) { return tree_to_sequence(t); })
      .def("__str__", [](const DeltaTree& t) { return format_tree(t); })
      .def_static("parse", [](const std::string& text) { return parse_tree(text); })
      .def_static("balanced", &balanced_delta_tree, py::arg("depth"));

  m.def("eliminate", &eliminate, py::arg("graph"));
  m.def("is_distance_hereditary", [](const Graph& g) {
    try {
      eliminate(g);
      return true;
    } catch (const RecognitionError&) {
      return false;
    }
  });
  m.def("is_distance_hereditary_oracle", &is_distance_hereditary_oracle, py::arg("graph"));
  m.def("max_dh_subgraph", &max_dh_subgraph_bruteforce, py::arg("graph"), py::arg("k"));
  m.def(
      "gen_dh_random",
      [](std::size_t n, std::uint64_t seed, std::tuple<double, double, double> w) {
        if (n < 2) throw ArgumentError("n must be at least 2");
        return gen_dh_random(n, seed, {std::get<0>(w), std::get<1>(w), std::get<2>(w)}).graph;
      },
      py::arg("n"), py::arg("seed") = 0, py::arg("weights") = std::make_tuple(1.0 / 3, 1.0 / 3, 1.0 / 3));
  m.def("gen_gnp", &gen_gnp, py::arg("n"), py::arg("p"), py::arg("seed") = 0);

  m.def(
      "build_delta_tree",
      [](const Graph& g, const EliminationSequence* seq) { return build_delta_tree(g, seq ? *seq : eliminate(g)); },
      py::arg("graph"), py::arg("sequence") = nullptr);

  m.def(
      "draw_svg",
      [](const Graph& g, const std::string& layout, double ratio, double cell_size, double junction_radius, bool labels,
         const std::string& theme) {
        return draw(build_delta_tree(g, eliminate(g)), layout, ratio,
                    render_options(cell_size, junction_radius, labels, theme));
      },
      py::arg("graph"), py::arg("layout") = "ortho", py::arg("ratio") = kDefaultRadialRatio,
      py::arg("cell_size") = 24.0, py::arg("junction_radius") = 6.0, py::arg("labels") = true,
      py::arg("theme") = "light");
  m.def(
      "draw_tree_svg",
      [](const DeltaTree& t, const std::string& layout, double ratio, double cell_size, double junction_radius,
         bool labels, const std::string& theme) {
        return draw(t, layout, ratio, render_options(cell_size, junction_radius, labels, theme));
      },
      py::arg("tree"), py::arg("layout") = "ortho", py::arg("ratio") = kDefaultRadialRatio,
      py::arg("cell_size") = 24.0, py::arg("junction_radius") = 6.0, py::arg("labels") = true,
      py::arg("theme") = "light");

  m.def(
      "ortho_layout",
      [](const DeltaTree& t) { return format_ortho(layout_upward_ortho(root_at_leaf(t))); },
      py::arg("tree"), "Orthogonal layout in its text form.");
  m.def(
      "hex_layout",
      [](const DeltaTree& t) { return format_hex(resolve_overlaps(ortho_to_hex(layout_upward_ortho(root_at_leaf(t))))); },
      py::arg("tree"), "Hexagonal layout in its text form.");
  m.def("check_ortho", [](const std::string& text) { return check_ortho_valid(parse_ortho(text)); });
  m.def("check_hex", [](const std::string& text) { return check_hex_valid(parse_hex(text)); });
  m.def("check_svg", [](const std::string& svg, double tolerance_deg) {
    const auto model = parse_svg_model(svg);
    auto problems = check_render_planar(model);
    if (!check_smoothness(sampled_paths(model), tolerance_deg)) problems.emplace_back("sharp turn in a track");
    return problems;
  }, py::arg("svg"), py::arg("tolerance_deg") = 1.0);
  m.def("radial_ratio_bound", &radial_ratio_bound);
}
