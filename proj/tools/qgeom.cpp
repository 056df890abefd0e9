// qgeom: command-line front end for the Segre / toric state analysis library.
//
// Exit codes: 0 success, 2 input error, 3 domain error, 4 unsupported
// operation. Machine output goes to stdout; diagnostics go to stderr.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qgeom/families.hpp"
#include "qgeom/json_io.hpp"
#include "qgeom/partition.hpp"
#include "qgeom/polyhedral.hpp"
#include "qgeom/segre.hpp"
#include "qgeom/toric.hpp"

namespace {

using qgeom::Json;

enum ExitCode : int { kOk = 0, kFailure = 1, kInputError = 2, kDomainError = 3, kUnsupported = 4 };

struct GlobalOptions {
  double tolerance = qgeom::kDefaultZeroTolerance;
  bool text = false;
  std::uint64_t seed = 0;
  double norm_const = 1.0;
  std::string measure_mode = "full";
  std::string output = "-";
};

std::string read_source(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw qgeom::InputError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Json read_json(const std::string& path) {
  return qgeom::parse_json_text(read_source(path), path == "-" ? "<stdin>" : path);
}

void emit(const GlobalOptions& opts, const Json& doc, const std::string& text = {}) {
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (opts.output != "-") {
    file.open(opts.output, std::ios::binary);
    if (!file) throw qgeom::InputError("cannot write " + opts.output);
    out = &file;
  }
  if (opts.text && !text.empty()) {
    *out << text;
  } else {
    *out << doc.dump(2) << '\n';
  }
}

std::string format_amplitude(qgeom::Amplitude a) {
  std::ostringstream s;
  s << std::setprecision(12) << a.real() << (a.imag() < 0 ? " - " : " + ") << std::abs(a.imag()) << "i";
  return s.str();
}

std::string state_text(const qgeom::MultiQubitState& state) {
  std::ostringstream s;
  s << "m = " << state.qubits() << ", norm = " << std::setprecision(15) << state.norm() << '\n';
  for (std::uint64_t r = 0; r < state.dimension(); ++r) {
    if (state.at(r) == qgeom::Amplitude{}) continue;
    s << "  |" << qgeom::MultiIndex(state.qubits(), r).to_string() << ">  " << format_amplitude(state.at(r)) << '\n';
  }
  return s.str();
}

// analyze --------------------------------------------------------------------

void cmd_analyze(const GlobalOptions& opts, const std::string& path) {
  const auto started = std::chrono::steady_clock::now();
  const auto input = qgeom::state_from_json(read_json(path));
  const auto state = qgeom::normalize(input);
  const auto separability = qgeom::separability_report(state, opts.tolerance);
  const qgeom::MeasureConfig config{qgeom::parse_measure_mode(opts.measure_mode), opts.norm_const};
  const double measure = qgeom::entanglement_measure(state, config);
  const double elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();

  Json doc{{"m", state.qubits()},
           {"norm", input.norm()},
           {"separability", qgeom::separability_to_json(separability)},
           {"measure",
            {{"value", measure},
             {"mode", qgeom::to_string(config.mode)},
             {"normalization_constant", config.normalization_constant}}},
           {"timing_ms", elapsed}};

  std::ostringstream text;
  text << std::setprecision(15) << "qubits:        " << state.qubits() << '\n'
       << "input norm:    " << input.norm() << '\n'
       << "separable:     " << (separability.separable ? "yes" : "no") << '\n'
       << "max residual:  " << separability.max_residual << "  (tolerance " << separability.tolerance << ")\n"
       << "witness:       " << separability.witness.to_string() << '\n'
       << "measure:       " << measure << "  (" << qgeom::to_string(config.mode) << ", N = "
       << config.normalization_constant << ")\n"
       << "time:          " << elapsed << " ms\n";
  emit(opts, doc, text.str());
}

// family ---------------------------------------------------------------------

void cmd_family(const GlobalOptions& opts, const std::string& name, unsigned m) {
  const auto state = qgeom::family_state(name, m, opts.seed);
  emit(opts, qgeom::state_to_json(state), state_text(state));
}

// embed ----------------------------------------------------------------------

void cmd_embed(const GlobalOptions& opts, const std::string& path, const std::string& tree_text, bool check_commute,
               bool no_normalize) {
  const auto factors = qgeom::factors_from_json(read_json(path));
  std::optional<qgeom::PartitionNode> tree;
  if (!tree_text.empty()) tree = qgeom::parse_partition(tree_text);

  const auto composed = tree ? qgeom::compose_partition(*tree, factors) : qgeom::segre_embed(factors, false);
  const auto state = no_normalize ? composed : qgeom::normalize(composed);
  Json doc = qgeom::state_to_json(state);

  if (check_commute) {
    // Without --tree every binary tree shape over the factors is checked.
    std::vector<qgeom::PartitionNode> trees;
    if (tree) {
      trees.push_back(*tree);
    } else {
      trees = qgeom::all_tree_shapes(factors.size());
    }
    double worst = 0.0;
    Json checked = Json::array();
    for (const auto& t : trees) {
      // Leaves may be listed in any order; the direct embedding follows it.
      const auto direct = qgeom::segre_embed(qgeom::factors_in_leaf_order(t, factors), false);
      const double deviation = qgeom::max_amplitude_deviation(qgeom::compose_partition(t, factors), direct);
      worst = std::max(worst, deviation);
      checked.push_back(Json{{"tree", t.to_string()}, {"max_deviation", deviation}});
    }
    doc["commute_check"] = Json{{"trees", std::move(checked)}, {"max_deviation", worst}, {"commutes", worst <= 1e-12}};
  }
  emit(opts, doc, state_text(state));
}

// toric ----------------------------------------------------------------------

std::vector<std::int64_t> parse_point(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw qgeom::InputError("point \"" + text + "\" is not a comma-separated integer list");
    }
  }
  return out;
}

std::string vector_list_text(const std::vector<qgeom::IntVector>& vs) {
  std::string out;
  for (const auto& v : vs) out += "  " + qgeom::to_string(v) + "\n";
  return out;
}

void cmd_toric_atlas(const GlobalOptions& opts, unsigned m) {
  const auto atlas = qgeom::hypercube_atlas(m);
  std::string text;
  for (const auto& c : atlas.charts) text += "X" + std::to_string(c.number) + " = " + c.describe() + "\n";
  emit(opts, qgeom::atlas_to_json(atlas), text);
}

void cmd_toric_quadrics(const GlobalOptions& opts, unsigned m, bool minors_only) {
  const auto binomials = minors_only ? qgeom::single_swap_minors(m) : qgeom::toric_ideal_quadrics(m);
  std::string text;
  for (const auto& b : binomials) text += b.to_string() + "\n";
  emit(opts, qgeom::binomials_to_json(binomials), text);
}

void cmd_toric_equiv(const GlobalOptions& opts, unsigned m, std::size_t trials) {
  const auto report = qgeom::ideal_equivalence_report(m, trials, opts.seed, opts.tolerance);
  std::ostringstream text;
  text << std::setprecision(6) << "m = " << m << ": " << report.minor_count << " minors, " << report.toric_count
       << " toric quadrics, containment " << (report.minors_contained ? "holds" : "FAILS") << '\n'
       << "product states: max minor residual " << report.product_max_minor_residual << ", max toric residual "
       << report.product_max_toric_residual << '\n'
       << "states with vanishing minors: " << report.minor_vanishing_states << ", of which toric-vanishing: "
       << report.covanishing_states << '\n'
       << "verdict: " << (report.verdict ? "equivalent" : "NOT equivalent") << '\n';
  emit(opts, qgeom::equivalence_to_json(report), text.str());
}

void cmd_toric_cone_dual(const GlobalOptions& opts, const std::string& path) {
  const auto dual = qgeom::dual_cone(qgeom::cone_from_json(read_json(path)));
  emit(opts, qgeom::cone_to_json(dual), vector_list_text(dual.generators()));
}

void cmd_toric_cone_check(const GlobalOptions& opts, const std::string& path, const std::vector<std::string>& points) {
  const auto cone = qgeom::cone_from_json(read_json(path));
  const bool strongly_convex = qgeom::is_strongly_convex(cone);
  Json doc = qgeom::cone_to_json(cone);
  doc["strongly_convex"] = strongly_convex;
  doc["simplicial"] = cone.generators().size() == cone.dimension() && [&] {
    try {
      (void)qgeom::dual_cone(cone);
      return true;
    } catch (const qgeom::UnsupportedError&) {
      return false;
    }
  }();
  std::string text = std::string("strongly convex: ") + (strongly_convex ? "yes" : "no") + "\n";
  Json checks = Json::array();
  for (const auto& p : points) {
    const auto v = parse_point(p);
    const bool in_cone = qgeom::cone_contains(cone, v);
    const bool in_dual = qgeom::dual_cone_contains(cone, v);
    checks.push_back(Json{{"point", v}, {"in_cone", in_cone}, {"in_dual", in_dual}});
    text += qgeom::to_string(v) + ": cone " + (in_cone ? "yes" : "no") + ", dual " + (in_dual ? "yes" : "no") + "\n";
  }
  doc["points"] = std::move(checks);
  emit(opts, doc, text);
}

void cmd_toric_support(const GlobalOptions& opts, const std::string& path, std::int64_t bound) {
  const auto cone = qgeom::cone_from_json(read_json(path));
  const auto points = qgeom::lattice_support(cone, bound);
  emit(opts, Json{{"n", cone.dimension()}, {"bound", bound}, {"count", points.size()}, {"points", points}},
       vector_list_text(points));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Segre-variety and toric analysis of multi-qubit pure states"};
  app.require_subcommand(1);
  GlobalOptions opts;

  app.add_option("--tolerance", opts.tolerance, "zero threshold for binomial values")->check(CLI::PositiveNumber);
  auto* json_flag = app.add_flag("--json", "machine-readable JSON output (default)");
  auto* text_flag = app.add_flag("--text", opts.text, "human-readable output");
  json_flag->excludes(text_flag);
  app.add_option("--seed", opts.seed, "seed for random state families and sampling");
  app.add_option("--norm-const", opts.norm_const, "normalization constant of the entanglement measure")
      ->check(CLI::PositiveNumber);
  app.add_option("--measure-mode", opts.measure_mode, "full | minors-only")
      ->check(CLI::IsMember({"full", "minors-only"}));
  app.add_option("-o,--output", opts.output, "write the result to a file instead of stdout");

  std::string state_path = "-";
  auto* analyze = app.add_subcommand("analyze", "separability verdict and entanglement measure of a state file");
  analyze->add_option("state", state_path, "state JSON file ('-' for stdin)");

  std::string family_name;
  unsigned family_m = 0;
  auto* family = app.add_subcommand("family", "write a standard state (ghz, w, product-basis, random-product, random-dense)");
  family->add_option("name", family_name)->required();
  family->add_option("m", family_m, "qubit count")->required();

  std::string factors_path, tree_text;
  bool check_commute = false, no_normalize = false;
  auto* embed = app.add_subcommand("embed", "Segre embedding of single-qubit factors, optionally through a partition tree");
  embed->add_option("factors", factors_path, "factors JSON file")->required();
  embed->add_option("--tree", tree_text, "partition tree, e.g. ((1,2),(3,4))");
  embed->add_flag("--check-commute", check_commute, "compare the tree composition with the direct embedding");
  embed->add_flag("--no-normalize", no_normalize, "keep the raw product scale");

  auto* toric = app.add_subcommand("toric", "hypercube toric description and polyhedral cone tools");
  toric->require_subcommand(1);
  unsigned toric_m = 0;
  bool minors_only = false;
  std::size_t trials = 100;
  std::string cone_path;
  std::vector<std::string> points;
  std::int64_t bound = 1;
  auto* atlas = toric->add_subcommand("atlas", "the 2^m chart atlas");
  atlas->add_option("m", toric_m)->required();
  auto* quadrics = toric->add_subcommand("quadrics", "degree-2 toric ideal generators");
  quadrics->add_option("m", toric_m)->required();
  quadrics->add_flag("--minors", minors_only, "list the single-swap Segre minors instead");
  auto* equiv = toric->add_subcommand("equiv", "sampled toric/Segre ideal equivalence check");
  equiv->add_option("m", toric_m)->required();
  equiv->add_option("--trials", trials, "random product and dense states per kind")->check(CLI::PositiveNumber);
  auto* cone_dual = toric->add_subcommand("cone-dual", "dual of a simplicial cone");
  cone_dual->add_option("cone", cone_path)->required();
  auto* cone_check = toric->add_subcommand("cone-check", "strong convexity and point membership");
  cone_check->add_option("cone", cone_path)->required();
  cone_check->add_option("--point", points, "integer point, e.g. 2,1 (repeatable)");
  auto* support = toric->add_subcommand("support", "lattice points of the cone inside a box");
  support->add_option("cone", cone_path)->required();
  support->add_option("--bound", bound, "box half-width")->check(CLI::PositiveNumber);

  for (auto* sub : {analyze, family, embed, toric, atlas, quadrics, equiv, cone_dual, cone_check, support}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*analyze) {
      cmd_analyze(opts, state_path);
    } else if (*family) {
      cmd_family(opts, family_name, family_m);
    } else if (*embed) {
      cmd_embed(opts, factors_path, tree_text, check_commute, no_normalize);
    } else if (*atlas) {
      cmd_toric_atlas(opts, toric_m);
    } else if (*quadrics) {
      cmd_toric_quadrics(opts, toric_m, minors_only);
    } else if (*equiv) {
      cmd_toric_equiv(opts, toric_m, trials);
    } else if (*cone_dual) {
      cmd_toric_cone_dual(opts, cone_path);
    } else if (*cone_check) {
      cmd_toric_cone_check(opts, cone_path, points);
    } else if (*support) {
      cmd_toric_support(opts, cone_path, bound);
    }
  } catch (const qgeom::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const qgeom::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const qgeom::UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << '\n';
    return kUnsupported;
  } catch (const qgeom::Json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kFailure;
  }
  return kOk;
}
