#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "deltaconf/errors.hpp"
#include "deltaconf/hex_layout.hpp"
#include "deltaconf/recognition.hpp"
#include "deltaconf/render.hpp"

namespace deltaconf::cli {

namespace {

struct Config {
  std::string input = "-";
  std::vector<std::string> inputs;
  std::string out;
  std::string layout = "ortho";
  std::string layout_out;
  std::string polylines_out;
  std::string theme = "light";
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  std::string weights;
  double ratio = kDefaultRadialRatio;
  bool labels = true;
  double cell_size = 24.0;
  double junction_radius = 6.0;
};

// Thrown for I/O problems; mapped to kUsage like parse errors.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a pipeline stage produces something its own checker rejects.
struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot read " + path);
  buf << f.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw IoError("cannot write " + path);
}

void emit(const Config& c, std::ostream& out, const std::string& text) {
  if (c.out.empty()) {
    out << text;
  } else {
    write_file(c.out, text);
  }
}

Graph read_graph(const Config& c, std::istream& in) {
  auto g = parse_graph(read_input(c.input, in));
  if (g.order() == 0) throw ParseError(0, "input has no vertices");
  return g;
}

DeltaTree tree_for(const Graph& g) { return build_delta_tree(g, eliminate(g)); }

int cmd_recognize(const Config& c, std::istream& in, std::ostream& out) {
  emit(c, out, format_sequence(eliminate(read_graph(c, in))));
  return kOk;
}

int cmd_tree(const Config& c, std::istream& in, std::ostream& out) {
  emit(c, out, format_tree(tree_for(read_graph(c, in))));
  return kOk;
}

int cmd_draw(const Config& c, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto g = read_graph(c, in);
  const auto t = tree_for(g);
  RenderOptions opts;
  opts.cell_size = c.cell_size;
  opts.junction_radius = c.junction_radius;
  opts.show_labels = c.labels;
  opts.theme = c.theme == "dark" ? Theme::Dark : Theme::Light;

  auto require_clean = [](const std::vector<std::string>& problems, const char* stage) {
    if (!problems.empty()) throw InternalError(std::string(stage) + ": " + problems.front());
  };

  Scene scene;
  std::ostringstream metrics;
  metrics << "layout=" << c.layout << " nodes=" << t.leaves.size() + t.junctions.size() << " leaves=" << t.leaves.size();
  if (c.layout == "radial") {
    const auto pos = layout_radial_trident(t, c.ratio);
    require_clean(check_radial_planar(t, pos), "radial layout");
    scene = scene_from_radial(t, pos, c.cell_size);
    metrics << " bends=0 ratio=" << c.ratio;
  } else {
    const auto ortho = layout_upward_ortho(root_at_leaf(t));
    require_clean(check_ortho_valid(ortho), "orthogonal layout");
    if (c.layout == "ortho") {
      if (!c.layout_out.empty()) write_file(c.layout_out, format_ortho(ortho));
      scene = scene_from_ortho(t, ortho, c.cell_size);
      metrics << " area=" << ortho_area(ortho) << " bends=0 max_bends=0";
    } else {
      const auto hex = resolve_overlaps(ortho_to_hex(ortho));
      require_clean(check_hex_valid(hex), "hex layout");
      if (!c.layout_out.empty()) write_file(c.layout_out, format_hex(hex));
      if (!c.polylines_out.empty()) write_file(c.polylines_out, format_polylines(lattice_positions(hex), expand_all(hex)));
      scene = scene_from_hex(t, hex, c.cell_size);
      const auto bends = count_bends(hex);
      metrics << " area=" << hex_area(hex) << " bends=" << bends.total << " max_bends=" << bends.max_per_edge;
    }
  }
  const auto model = build_render_model(t, scene, opts);
  require_clean(check_render_planar(model), "rendering");
  require_clean(check_lambda_tails(t, model), "rendering");
  if (!check_smoothness(sampled_paths(model), 1.0)) throw InternalError("rendering: sharp turn in a track");
  emit(c, out, render_svg(model, opts));
  err << metrics.str() << '\n';
  return kOk;
}

int cmd_gen(const Config& c, std::ostream& out) {
  if (c.n < 2) throw ArgumentError("--n must be at least 2");
  const auto weights = c.weights.empty() ? ExtensionWeights{} : parse_weights(c.weights);
  const auto gen = gen_dh_random(c.n, c.seed, weights);
  std::ostringstream text;
  text << "# base " << gen.trace.base.first << ' ' << gen.trace.base.second << '\n';
  for (const auto& s : gen.trace.steps)
    text << "# " << s.new_vertex << ' ' << to_string(s.kind) << ' ' << s.anchor_vertex << '\n';
  text << format_edge_list(gen.graph);
  emit(c, out, text.str());
  return kOk;
}

int cmd_maxsub(const Config& c, std::istream& in, std::ostream& out) {
  const auto g = read_graph(c, in);
  const auto found = max_dh_subgraph_bruteforce(g, c.k);
  std::ostringstream text;
  if (!found) {
    text << "none\n";
  } else {
    for (std::size_t i = 0; i < found->size(); ++i) text << (i ? " " : "") << (*found)[i];
    text << '\n';
  }
  emit(c, out, text.str());
  return kOk;
}

std::vector<std::string> check_text(const std::string& text) {
  if (text.find("<svg") != std::string::npos) {
    const auto m = parse_svg_model(text);
    auto problems = check_render_planar(m);
    if (!check_smoothness(sampled_paths(m), 1.0)) problems.emplace_back("sharp turn in a track");
    return problems;
  }
  if (text.find("polyline ") != std::string::npos) {
    std::map<NodeId, LatticePoint> nodes;
    std::vector<HexPolyline> lines;
    parse_polylines(text, nodes, lines);
    return check_hex_drawing(nodes, lines);
  }
  if (text.find("run ") != std::string::npos || text.find(" u=") != std::string::npos) return check_hex_valid(parse_hex(text));
  if (text.find("segment ") != std::string::npos || text.find("node ") != std::string::npos)
    return check_ortho_valid(parse_ortho(text));
  throw ParseError(0, "unrecognised layout file");
}

int cmd_check(const Config& c, std::istream& in, std::ostream& out) {
  auto inputs = c.inputs;
  if (inputs.empty()) inputs.emplace_back("-");
  std::ostringstream text;
  bool clean = true;
  for (const auto& path : inputs) {
    std::vector<std::string> problems;
    try {
      problems = check_text(read_input(path, in));
    } catch (const ValidationError& e) {
      problems.emplace_back(e.what());
    }
    for (const auto& p : problems) {
      text << path << ": " << p << '\n';
      clean = false;
    }
  }
  emit(c, out, text.str());
  return clean ? kOk : kInvalid;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Distance-hereditary recognition and Δ-confluent drawing", "deltaconf"};
  app.require_subcommand(1, 1);

  auto* recognize = app.add_subcommand("recognize", "Print an elimination sequence, or refuse");
  auto* draw = app.add_subcommand("draw", "Render a Δ-confluent drawing as SVG");
  auto* gen = app.add_subcommand("gen", "Generate a random distance-hereditary graph");
  auto* maxsub = app.add_subcommand("maxsub", "Find a distance-hereditary induced subgraph of size >= k");
  auto* check = app.add_subcommand("check", "Validate serialized layouts, drawings or SVG files");
  auto* tree = app.add_subcommand("tree", "Print the Δ-confluent tree");

  for (auto* sub : {recognize, draw, maxsub, tree}) sub->add_option("input", c.input, "Edge list, - for stdin");
  check->add_option("inputs", c.inputs, "Files to validate, - for stdin");
  for (auto* sub : {recognize, draw, gen, maxsub, check, tree}) sub->add_option("--out,-o", c.out, "Output file");

  draw->add_option("--layout", c.layout)->check(CLI::IsMember({"ortho", "hex", "radial"}))->capture_default_str();
  draw->add_option("--ratio", c.ratio, "Radial edge shrink ratio")
      ->check(CLI::Range(0.0, radial_ratio_bound()))
      ->capture_default_str();
  draw->add_option("--cell-size", c.cell_size)->check(CLI::PositiveNumber)->capture_default_str();
  draw->add_option("--junction-radius", c.junction_radius)->check(CLI::PositiveNumber)->capture_default_str();
  draw->add_flag("--labels,!--no-labels", c.labels, "Draw vertex labels");
  draw->add_option("--theme", c.theme)->check(CLI::IsMember({"light", "dark"}))->capture_default_str();
  draw->add_option("--layout-out", c.layout_out, "Also write the ortho or hex layout");
  draw->add_option("--polylines-out", c.polylines_out, "Also write the expanded hex polylines");

  gen->add_option("--n", c.n, "Vertex count")->required();
  gen->add_option("--seed", c.seed)->capture_default_str();
  gen->add_option("--weights", c.weights, "Pendant, true-twin, false-twin probabilities as p,t,f");

  maxsub->add_option("-k,--k", c.k, "Minimum subset size")->required();

  std::vector<const char*> argv{"deltaconf"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*recognize) return cmd_recognize(c, in, out);
    if (*draw) return cmd_draw(c, in, out, err);
    if (*gen) return cmd_gen(c, out);
    if (*maxsub) return cmd_maxsub(c, in, out);
    if (*check) return cmd_check(c, in, out);
    if (*tree) return cmd_tree(c, in, out);
  } catch (const RecognitionError& e) {
    if (e.reason() != RecognitionError::Reason::NotDistanceHereditary) err << "not distance-hereditary: ";
    err << e.what() << '\n';
    return kNotDistanceHereditary;
  } catch (const TooLargeError& e) {
    err << "too large: " << e.what() << '\n';
    return kGuard;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const RenderError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kInternal;
}

}  // namespace deltaconf::cli
