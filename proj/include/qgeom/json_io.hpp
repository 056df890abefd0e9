#pragma once

// JSON file formats read and written by the command-line tool.
//
//   state:     {"m": 3, "amplitudes": [{"index": "010", "re": 0.5, "im": 0.0}, ...]}
//   factors:   {"factors": [{"a0": {"re": 1, "im": 0}, "a1": {"re": 0, "im": 0}}, ...]}
//   cone:      {"n": 2, "generators": [[1, 0], [1, 2]]}
//   binomials: [{"plus": ["000", "111"], "minus": ["011", "100"]}, ...]
//
// Index strings list x_m first; omitted amplitudes are zero. Factor lists are
// ordered the same way (qubit m first).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "qgeom/binomial.hpp"
#include "qgeom/errors.hpp"
#include "qgeom/polyhedral.hpp"
#include "qgeom/segre.hpp"
#include "qgeom/state.hpp"
#include "qgeom/toric.hpp"

namespace qgeom {

using Json = nlohmann::json;

/// Parses JSON text, reporting syntax errors as InputError with line and
/// column.
inline Json parse_json_text(std::string_view text, std::string_view source = "<input>") {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw InputError(std::string(source) + ":" + std::to_string(line) + ":" + std::to_string(column) +
                     ": malformed JSON (" + e.what() + ")");
  }
}

namespace detail {

inline const Json& require_field(const Json& object, const char* key, const std::string& path) {
  if (!object.is_object()) throw InputError(path + ": expected an object");
  const auto it = object.find(key);
  if (it == object.end()) throw InputError(path + "." + key + ": missing field");
  return *it;
}

inline double require_number(const Json& value, const std::string& path) {
  if (!value.is_number()) throw InputError(path + ": expected a number");
  return value.get<double>();
}

inline std::int64_t require_integer(const Json& value, const std::string& path) {
  if (!value.is_number_integer()) throw InputError(path + ": expected an integer");
  return value.get<std::int64_t>();
}

inline Amplitude complex_from_json(const Json& value, const std::string& path) {
  const double re = require_number(require_field(value, "re", path), path + ".re");
  const double im = require_number(require_field(value, "im", path), path + ".im");
  return {re, im};
}

inline Json complex_to_json(Amplitude a) { return Json{{"re", a.real()}, {"im", a.imag()}}; }

}  // namespace detail

inline MultiQubitState state_from_json(const Json& doc) {
  const std::int64_t m = detail::require_integer(detail::require_field(doc, "m", "$"), "$.m");
  if (m < 1 || m > static_cast<std::int64_t>(kMaxStateQubits)) {
    throw InputError("$.m: qubit count must be in [1, " + std::to_string(kMaxStateQubits) + "]");
  }
  const Json& list = detail::require_field(doc, "amplitudes", "$");
  if (!list.is_array()) throw InputError("$.amplitudes: expected an array");
  std::vector<std::pair<MultiIndex, Amplitude>> entries;
  entries.reserve(list.size());
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string path = "$.amplitudes[" + std::to_string(i) + "]";
    const Json& index = detail::require_field(list[i], "index", path);
    if (!index.is_string()) throw InputError(path + ".index: expected a string");
    const auto text = index.get<std::string>();
    if (text.size() != static_cast<std::size_t>(m)) {
      throw InputError(path + ".index: \"" + text + "\" has length " + std::to_string(text.size()) + ", expected " +
                       std::to_string(m));
    }
    try {
      entries.emplace_back(MultiIndex::parse(text), detail::complex_from_json(list[i], path));
    } catch (const InputError& e) {
      throw InputError(path + ": " + e.what());
    }
  }
  return make_state(static_cast<unsigned>(m), entries);
}

/// Every amplitude is written, in rank order.
inline Json state_to_json(const MultiQubitState& state) {
  Json amplitudes = Json::array();
  for (std::uint64_t r = 0; r < state.dimension(); ++r) {
    const Amplitude a = state.at(r);
    amplitudes.push_back(
        Json{{"index", MultiIndex(state.qubits(), r).to_string()}, {"re", a.real()}, {"im", a.imag()}});
  }
  return Json{{"m", state.qubits()}, {"amplitudes", std::move(amplitudes)}};
}

inline std::vector<SingleQubitFactor> factors_from_json(const Json& doc) {
  const Json& list = detail::require_field(doc, "factors", "$");
  if (!list.is_array() || list.empty()) throw InputError("$.factors: expected a nonempty array");
  std::vector<SingleQubitFactor> factors;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string path = "$.factors[" + std::to_string(i) + "]";
    factors.push_back({detail::complex_from_json(detail::require_field(list[i], "a0", path), path + ".a0"),
                       detail::complex_from_json(detail::require_field(list[i], "a1", path), path + ".a1")});
  }
  return factors;
}

inline Json factors_to_json(std::span<const SingleQubitFactor> factors) {
  Json list = Json::array();
  for (const auto& f : factors) list.push_back(Json{{"a0", detail::complex_to_json(f.a0)}, {"a1", detail::complex_to_json(f.a1)}});
  return Json{{"factors", std::move(list)}};
}

inline RationalCone cone_from_json(const Json& doc) {
  const std::int64_t n = detail::require_integer(detail::require_field(doc, "n", "$"), "$.n");
  if (n < 1 || n > 64) throw InputError("$.n: dimension must be in [1, 64]");
  const Json& list = detail::require_field(doc, "generators", "$");
  if (!list.is_array()) throw InputError("$.generators: expected an array");
  std::vector<IntVector> generators;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string path = "$.generators[" + std::to_string(i) + "]";
    if (!list[i].is_array()) throw InputError(path + ": expected an array of integers");
    if (list[i].size() != static_cast<std::size_t>(n)) {
      throw InputError(path + ": has " + std::to_string(list[i].size()) + " entries, expected " + std::to_string(n));
    }
    IntVector g;
    for (std::size_t j = 0; j < list[i].size(); ++j) {
      g.push_back(detail::require_integer(list[i][j], path + "[" + std::to_string(j) + "]"));
    }
    generators.push_back(std::move(g));
  }
  try {
    return RationalCone(static_cast<std::size_t>(n), std::move(generators));
  } catch (const InputError& e) {
    throw InputError(std::string("$.generators: ") + e.what());
  }
}

inline Json cone_to_json(const RationalCone& cone) {
  return Json{{"n", cone.dimension()}, {"generators", cone.generators()}};
}

inline Json binomial_to_json(const QuadricBinomial& b) {
  return Json{{"plus", {b.plus().first.to_string(), b.plus().second.to_string()}},
              {"minus", {b.minus().first.to_string(), b.minus().second.to_string()}}};
}

inline Json binomials_to_json(std::span<const QuadricBinomial> binomials) {
  Json list = Json::array();
  for (const auto& b : binomials) list.push_back(binomial_to_json(b));
  return list;
}

inline QuadricBinomial binomial_from_json(const Json& value, const std::string& path = "$") {
  auto pair = [&](const char* key) {
    const Json& p = detail::require_field(value, key, path);
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
      throw InputError(path + "." + key + ": expected two index strings");
    }
    return std::pair{MultiIndex::parse(p[0].get<std::string>()), MultiIndex::parse(p[1].get<std::string>())};
  };
  const auto [k, l] = pair("plus");
  const auto [kp, lp] = pair("minus");
  return QuadricBinomial(k, l, kp, lp);
}

inline Json separability_to_json(const SeparabilityReport& report) {
  return Json{{"separable", report.separable},
              {"max_residual", report.max_residual},
              {"witness", binomial_to_json(report.witness)},
              {"tolerance", report.tolerance}};
}

inline Json atlas_to_json(const ChartAtlas& atlas) {
  Json charts = Json::array();
  for (const auto& c : atlas.charts) {
    charts.push_back(Json{{"chart", c.number}, {"signs", c.signs}, {"coordinates", c.describe()}});
  }
  return Json{{"m", atlas.qubits}, {"count", atlas.charts.size()}, {"charts", std::move(charts)}};
}

inline Json equivalence_to_json(const EquivalenceReport& r) {
  return Json{{"m", r.qubits},
              {"trials", r.trials},
              {"seed", r.seed},
              {"tolerance", r.tolerance},
              {"derived_tolerance", r.derived_tolerance},
              {"minor_count", r.minor_count},
              {"toric_count", r.toric_count},
              {"minors_contained", r.minors_contained},
              {"generator_sets_equal", r.generator_sets_equal},
              {"product_max_minor_residual", r.product_max_minor_residual},
              {"product_max_toric_residual", r.product_max_toric_residual},
              {"minor_vanishing_states", r.minor_vanishing_states},
              {"covanishing_states", r.covanishing_states},
              {"dense_min_minor_residual", r.dense_min_minor_residual},
              {"dense_min_toric_residual", r.dense_min_toric_residual},
              {"verdict", r.verdict}};
}

}  // namespace qgeom
