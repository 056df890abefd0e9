// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli_runner.hpp"
#include "oracles.hpp"
#include "qgeom/json_io.hpp"
#include "qgeom/qgeom.hpp"

namespace {

using namespace qgeom;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) detail << "FAILED: " << what << "; ";
    pass = pass && ok;
  }
};

Outcome separability_soundness() {
  Outcome o;
  const auto start = Clock::now();
  double worst_measure = 0.0, worst_residual = 0.0;
  for (unsigned m = 2; m <= 6; ++m) {
    std::mt19937_64 rng(1000 + m);
    for (int t = 0; t < 100; ++t) {
      const auto s = segre_embed(random_factors(m, rng));
      const auto r = separability_report(s);
      const double measure = entanglement_measure(s);
      worst_residual = std::max(worst_residual, r.max_residual);
      worst_measure = std::max(worst_measure, measure);
      o.require(r.separable, "product state flagged entangled, m=" + std::to_string(m));
      o.require(measure <= 1e-10, "product measure > 1e-10, m=" + std::to_string(m));
    }
  }
  const double elapsed = seconds_since(start);
  o.require(elapsed < 10.0, "runtime >= 10 s");
  o.detail << "500 states, max residual " << worst_residual << ", max measure " << worst_measure << ", " << elapsed
           << " s";
  return o;
}

Outcome entanglement_completeness() {
  Outcome o;
  double min_residual = 1e300, min_measure = 1e300;
  for (unsigned m = 2; m <= 6; ++m) {
    for (const char* name : {"ghz", "w"}) {
      const auto s = family_state(name, m);
      const auto r = separability_report(s);
      const double measure = entanglement_measure(s);
      const std::string tag = std::string(name) + "(" + std::to_string(m) + ")";
      o.require(!r.separable, tag + " flagged separable");
      std::ostringstream value;
      value << r.max_residual;
      o.require(r.max_residual >= 0.25, tag + " witness residual " + value.str() + " < 0.25");
      o.require(std::abs(evaluate_binomial(r.witness, s)) == r.max_residual, tag + " witness does not attain residual");
      o.require(measure >= 0.1, tag + " measure < 0.1");
      min_residual = std::min(min_residual, r.max_residual);
      min_measure = std::min(min_measure, measure);
    }
  }
  const auto ghz = family_state("ghz", 6);
  const double corner = std::abs(ghz.at(0) * ghz.at(63));
  o.require(std::abs(corner - 0.5) <= 1e-15, "GHZ corner product != 1/2");
  if (!o.pass) o.detail << "max |binomial| on W(m) is (1/sqrt(m))^2 = 1/m; ";
  o.detail << "min residual " << min_residual << ", min measure " << min_measure;
  return o;
}

Outcome measure_oracle() {
  Outcome o;
  double worst = 0.0;
  for (unsigned m = 2; m <= 4; ++m) {
    std::mt19937_64 rng(2000 + m);
    for (int t = 0; t < 50; ++t) {
      const auto s = random_dense_state(m, rng);
      worst = std::max(worst, std::abs(entanglement_measure(s) - oracle::entanglement_measure(s.amplitudes(), m)));
    }
  }
  const double bell = entanglement_measure(family_state("ghz", 2));
  const double ghz3 = entanglement_measure(family_state("ghz", 3));
  const double w3 = entanglement_measure(family_state("w", 3));
  o.require(worst <= 1e-12, "oracle deviation > 1e-12");
  o.require(std::abs(bell - 1.0) <= 1e-12 && std::abs(ghz3 - std::sqrt(3.0)) <= 1e-12 &&
                std::abs(w3 - 2.0 / std::sqrt(3.0)) <= 1e-12,
            "golden Bell/GHZ/W values");
  o.detail << "150 states, max deviation " << worst << "; Bell " << bell << ", GHZ3 " << ghz3 << ", W3 " << w3;
  return o;
}

Outcome commuting_diagram() {
  Outcome o;
  double worst = 0.0;
  std::size_t checks = 0;
  std::mt19937_64 rng(3000);
  std::normal_distribution<double> g;
  auto factors = [&](unsigned m) {
    std::vector<SingleQubitFactor> f;
    for (unsigned j = 0; j < m; ++j) f.push_back({{g(rng), g(rng)}, {g(rng), g(rng)}});
    return f;
  };
  for (unsigned m = 1; m <= 4; ++m) {
    const auto shapes = all_tree_shapes(m);
    const int sets = m == 4 ? 20 : 5;
    for (int t = 0; t < sets; ++t) {
      const auto f = factors(m);
      const auto direct = segre_embed(f, false);
      for (const auto& tree : shapes) {
        worst = std::max(worst, max_amplitude_deviation(compose_partition(tree, f), direct));
        ++checks;
      }
    }
  }
  o.require(all_tree_shapes(4).size() == 5, "tree enumeration on 4 leaves");
  o.require(worst <= 1e-12, "deviation > 1e-12");
  o.detail << checks << " tree/factor checks (all 5 trees on 4 leaves x 20 sets), max deviation " << worst;
  return o;
}

Outcome toric_segre() {
  Outcome o;
  double slowest = 0.0;
  for (unsigned m = 2; m <= 5; ++m) {
    const auto start = Clock::now();
    const auto minors = single_swap_minors(m);
    const auto toric = toric_ideal_quadrics(m);
    o.require(std::includes(toric.begin(), toric.end(), minors.begin(), minors.end()),
              "containment fails, m=" + std::to_string(m));
    const auto report = ideal_equivalence_report(m, 100, 4000 + m);
    o.require(report.verdict, "equivalence verdict false, m=" + std::to_string(m));
    const double elapsed = seconds_since(start);
    if (m == 5) slowest = elapsed;
    o.detail << "m=" << m << ": " << minors.size() << "/" << toric.size() << "; ";
  }
  const auto m2 = toric_ideal_quadrics(2);
  o.require(m2.size() == 1 && m2 == single_swap_minors(2), "m=2 sets not equal singletons");
  o.require(slowest < 30.0, "m=5 runtime >= 30 s");
  o.detail << "m=5 " << slowest << " s";
  return o;
}

std::vector<IntVector> random_ints(std::mt19937_64& rng, std::size_t count, std::size_t n) {
  std::uniform_int_distribution<int> d(-5, 5);
  std::vector<IntVector> out;
  while (out.size() < count) {
    IntVector v(n);
    for (auto& x : v) x = d(rng);
    if (std::any_of(v.begin(), v.end(), [](auto x) { return x != 0; })) out.push_back(v);
  }
  return out;
}

Outcome polyhedral_exactness() {
  Outcome o;
  const RationalCone orthant(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  o.require(dual_cone(orthant) == orthant, "orthant not self-dual");
  const RationalCone plane(2, {{1, 0}, {0, 1}});
  o.require(dual_cone(plane) == plane, "quadrant not self-dual");

  std::mt19937_64 rng(5000);
  std::size_t simplicial = 0, others = 0, agreements = 0, convex = 0;
  for (std::size_t n = 2; n <= 3; ++n) {
    std::size_t made = 0;
    while (made < 20) {
      auto gens = random_ints(rng, n, n);
      if (!invert(detail::column_matrix(n, gens))) continue;
      ++made;
      for (auto& v : gens) v = primitive_integer_vector(std::vector<Rational>(v.begin(), v.end()));
      const RationalCone cone(n, gens);
      o.require(dual_cone(dual_cone(cone)) == cone, "dual of dual differs");
      const bool expected = !oracle::has_positive_dependency(cone.generators(), n);
      o.require(is_strongly_convex(cone) == expected, "strong convexity disagrees with oracle (simplicial)");
      agreements += is_strongly_convex(cone) == expected;
      ++simplicial;
    }
    for (int t = 0; t < 20; ++t) {
      const RationalCone cone(n, random_ints(rng, n + 1 + t % 2, n));
      const bool expected = !oracle::has_positive_dependency(cone.generators(), n);
      const bool got = is_strongly_convex(cone);
      o.require(got == expected, "strong convexity disagrees with oracle (non-simplicial)");
      agreements += got == expected;
      convex += got;
      ++others;
    }
  }
  o.detail << simplicial << " simplicial cones round-trip; strong convexity agrees on " << agreements << "/"
           << simplicial + others << " (" << convex << " of " << others << " non-simplicial strongly convex)";
  return o;
}

Outcome invariance() {
  Outcome o;
  double phase_worst = 0.0, relabel_worst = 0.0;
  std::mt19937_64 rng(6000);
  std::uniform_real_distribution<double> theta(0.0, 2.0 * std::numbers::pi);
  for (unsigned m = 2; m <= 5; ++m) {
    for (int t = 0; t < 20; ++t) {
      const auto s = random_dense_state(m, rng);
      const auto rotated = scaled(s, std::polar(1.0, theta(rng)));
      phase_worst = std::max(phase_worst, std::abs(entanglement_measure(rotated) - entanglement_measure(s)));
    }
  }
  for (unsigned m = 2; m <= 4; ++m) {
    const auto s = random_dense_state(m, rng);
    const double base = entanglement_measure(s);
    std::vector<unsigned> perm(m);
    std::iota(perm.begin(), perm.end(), 1u);
    do {
      relabel_worst = std::max(relabel_worst, std::abs(entanglement_measure(permute_qubits(s, perm)) - base));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  o.require(phase_worst <= 1e-12, "phase deviation > 1e-12");
  o.require(relabel_worst <= 1e-12, "relabel deviation > 1e-12");
  o.detail << "phase max deviation " << phase_worst << ", relabel max deviation " << relabel_worst;
  return o;
}

bool state_schema_ok(const Json& doc) {
  try {
    (void)state_from_json(doc);
    return true;
  } catch (const Error&) {
    return false;
  }
}

bool analyze_schema_ok(const Json& d) {
  return d.is_object() && d.contains("m") && d["m"].is_number_integer() && d["norm"].is_number() &&
         d["separability"]["separable"].is_boolean() && d["separability"]["max_residual"].is_number() &&
         d["separability"]["tolerance"].is_number() && d["separability"]["witness"]["plus"].is_array() &&
         d["separability"]["witness"]["minus"].is_array() && d["measure"]["value"].is_number() &&
         d["measure"]["mode"].is_string() && d["measure"]["normalization_constant"].is_number() &&
         d["timing_ms"].is_number();
}

bool binomial_list_schema_ok(const Json& d) {
  if (!d.is_array()) return false;
  try {
    for (const auto& b : d) (void)binomial_from_json(b);
  } catch (const Error&) {
    return false;
  }
  return true;
}

Outcome cli_contract() {
  Outcome o;
  const auto family = cli::run("family ghz 3");
  o.require(family.status == 0 && state_schema_ok(Json::parse(family.out)), "family ghz 3 output");

  const auto analyze = cli::run("family ghz 3 | {qgeom} analyze");
  o.require(analyze.status == 0, "analyze exit status");
  if (analyze.status == 0) {
    const auto doc = Json::parse(analyze.out);
    o.require(analyze_schema_ok(doc), "analyze schema");
    o.require(cli::json_close(doc, Json::parse(cli::slurp(cli::fixture("ghz3_analyze.json")))), "analyze golden");
  }
  const auto quadrics = cli::run("toric quadrics 2");
  o.require(quadrics.status == 0, "quadrics exit status");
  if (quadrics.status == 0) {
    const auto doc = Json::parse(quadrics.out);
    o.require(binomial_list_schema_ok(doc), "quadrics schema");
    o.require(cli::json_close(doc, Json::parse(cli::slurp(cli::fixture("toric_quadrics_2.json")))), "quadrics golden");
  }

  const std::pair<std::string, int> table[] = {
      {"analyze '" + cli::fixture("product_state.json") + "'", 0},
      {"analyze '" + cli::fixture("truncated_state.json") + "'", 2},
      {"analyze '" + cli::fixture("bad_index_state.json") + "'", 2},
      {"analyze '" + cli::fixture("zero_state.json") + "'", 3},
      {"embed '" + cli::fixture("factors_4.json") + "' --tree '((1,2),3)'", 2},
      {"embed '" + cli::fixture("zero_factor_2.json") + "'", 3},
      {"toric cone-dual '" + cli::fixture("nonsimplicial_cone.json") + "'", 4},
      {"toric cone-dual '" + cli::fixture("malformed_cone.json") + "'", 2},
      {"family cat 3", 2},
  };
  for (const auto& [args, status] : table) {
    const auto r = cli::run(args);
    o.require(r.status == status, "exit status for: " + args);
    if (status != 0) o.require(r.out.empty() && !r.err.empty(), "diagnostics on stderr only for: " + args);
  }
  o.detail << "2 goldens, " << std::size(table) << " exit-code cases";
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"AC1 separability soundness", separability_soundness},
      {"AC2 entanglement completeness", entanglement_completeness},
      {"AC3 measure oracle equality", measure_oracle},
      {"AC4 commuting diagram", commuting_diagram},
      {"AC5 toric/Segre equivalence", toric_segre},
      {"AC6 polyhedral exactness", polyhedral_exactness},
      {"AC7 invariance suite", invariance},
      {"AC8 CLI contract", cli_contract},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    failures += !o.pass;
    std::printf("%s  %s  (%s)\n", o.pass ? "PASS" : "FAIL", name, o.detail.str().c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
  return failures == 0 ? 0 : 1;
}
