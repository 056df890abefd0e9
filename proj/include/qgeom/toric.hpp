#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "qgeom/binomial.hpp"
#include "qgeom/errors.hpp"
#include "qgeom/families.hpp"
#include "qgeom/multi_index.hpp"
#include "qgeom/segre.hpp"
#include "qgeom/state.hpp"

namespace qgeom {

/// Largest register for which the chart atlas is materialized.
inline constexpr unsigned kMaxAtlasQubits = 20;
/// Largest register for toric quadric enumeration (quadratic in 2^m).
inline constexpr unsigned kMaxToricQubits = 8;

/// One affine chart of (CP^1)^m. signs[s - 1] is +1 when the chart uses
/// z_s = a^s_1 / a^s_0 and -1 when it uses z_s^{-1}.
struct Chart {
  std::size_t number;  ///< 1-based position in the atlas
  std::vector<int> signs;

  bool inverted(unsigned position) const { return signs.at(position - 1) < 0; }

  /// "(z1, z2^-1, z3)"
  std::string describe() const {
    std::string out = "(";
    for (std::size_t s = 0; s < signs.size(); ++s) {
      if (s) out += ", ";
      out += "z" + std::to_string(s + 1);
      if (signs[s] < 0) out += "^-1";
    }
    return out + ")";
  }
};

struct ChartAtlas {
  unsigned qubits;
  std::vector<Chart> charts;
};

/// The 2^m charts covering (CP^1)^m. Chart c inverts z_s exactly when bit
/// s - 1 of c - 1 is set, so chart 1 inverts nothing, chart 2 inverts z_1 and
/// chart 2^m inverts every coordinate.
inline ChartAtlas hypercube_atlas(unsigned m) {
  if (m == 0 || m > kMaxAtlasQubits) {
    throw InputError("atlas qubit count must be in [1, " + std::to_string(kMaxAtlasQubits) + "]");
  }
  ChartAtlas atlas{m, {}};
  const std::uint64_t count = std::uint64_t{1} << m;
  atlas.charts.reserve(count);
  for (std::uint64_t r = 0; r < count; ++r) {
    Chart chart{static_cast<std::size_t>(r + 1), std::vector<int>(m, 1)};
    for (unsigned s = 0; s < m; ++s) {
      if ((r >> s) & 1U) chart.signs[s] = -1;
    }
    atlas.charts.push_back(std::move(chart));
  }
  return atlas;
}

/// Affine coordinates of a point of (CP^1)^m in one chart, or nullopt when
/// the point lies outside it. Factors are listed qubit m first, as for
/// segre_embed.
inline std::optional<std::vector<Amplitude>> chart_coordinates(const Chart& chart,
                                                               std::span<const SingleQubitFactor> factors) {
  const std::size_t m = chart.signs.size();
  if (factors.size() != m) throw InputError("chart and point have different qubit counts");
  std::vector<Amplitude> z(m);
  for (std::size_t s = 1; s <= m; ++s) {
    const SingleQubitFactor& f = factors[m - s];
    const Amplitude num = chart.signs[s - 1] > 0 ? f.a1 : f.a0;
    const Amplitude den = chart.signs[s - 1] > 0 ? f.a0 : f.a1;
    if (den == Amplitude{}) return std::nullopt;
    z[s - 1] = num / den;
  }
  return z;
}

/// A chart containing the point: z_s is inverted exactly when |a^s_1| > |a^s_0|.
inline const Chart& covering_chart(const ChartAtlas& atlas, std::span<const SingleQubitFactor> factors) {
  if (factors.size() != atlas.qubits) throw InputError("atlas and point have different qubit counts");
  std::size_t r = 0;
  for (unsigned s = 1; s <= atlas.qubits; ++s) {
    const SingleQubitFactor& f = factors[atlas.qubits - s];
    if (f.is_zero()) throw DomainError("factor for qubit " + std::to_string(s) + " is the zero vector");
    if (std::abs(f.a1) > std::abs(f.a0)) r |= std::size_t{1} << (s - 1);
  }
  return atlas.charts[r];
}

/// Bijection between hypercube vertices e in {-1,+1}^m and basis labels,
/// i_s = (1 + e_s) / 2. vertex[s - 1] is the coordinate for position s.
class VertexExponentMap {
 public:
  explicit VertexExponentMap(unsigned m) : m_(m) {
    if (m == 0 || m > kMaxIndexQubits) throw InputError("vertex map qubit count out of range");
  }

  unsigned qubits() const noexcept { return m_; }

  std::vector<int> vertex(const MultiIndex& index) const {
    if (index.size() != m_) throw InputError("index length does not match the vertex map");
    std::vector<int> v(m_);
    for (unsigned s = 1; s <= m_; ++s) v[s - 1] = 2 * index.digit(s) - 1;
    return v;
  }

  MultiIndex index(std::span<const int> vertex) const {
    if (vertex.size() != m_) throw InputError("vertex length does not match the vertex map");
    std::uint64_t rank = 0;
    for (unsigned s = 1; s <= m_; ++s) {
      const int e = vertex[s - 1];
      if (e != 1 && e != -1) throw InputError("hypercube vertex coordinates must be +1 or -1");
      if (e == 1) rank |= std::uint64_t{1} << (s - 1);
    }
    return MultiIndex(m_, rank);
  }

 private:
  unsigned m_;
};

/// The monomial map p -> [z^e : e a hypercube vertex] evaluated at a torus
/// point z in (C*)^m; coordinate e is placed at the index of e.
inline MultiQubitState hypercube_monomial_point(std::span<const Amplitude> z) {
  const auto m = static_cast<unsigned>(z.size());
  if (m == 0 || m > kMaxStateQubits) throw InputError("torus point dimension out of range");
  for (const auto& x : z) {
    if (x == Amplitude{} || !is_finite(x)) throw DomainError("torus point coordinates must be finite and nonzero");
  }
  const VertexExponentMap map(m);
  std::vector<Amplitude> coords(std::size_t{1} << m);
  for (std::uint64_t r = 0; r < coords.size(); ++r) {
    const auto e = map.vertex(MultiIndex(m, r));
    Amplitude value{1.0, 0.0};
    for (unsigned s = 0; s < m; ++s) value *= e[s] > 0 ? z[s] : 1.0 / z[s];
    coords[r] = value;
  }
  return MultiQubitState(m, std::move(coords));
}

/// Degree-2 relations of the hypercube toric ideal: every pair of distinct
/// unordered vertex pairs {u, v}, {u', v'} with u + v = u' + v', written as
/// a_u a_v - a_u' a_v' through the vertex map. Canonical, sorted, unique.
inline std::vector<QuadricBinomial> toric_ideal_quadrics(unsigned m) {
  if (m < 2) throw InputError("toric quadrics need at least 2 qubits, got " + std::to_string(m));
  if (m > kMaxToricQubits) throw InputError("toric quadric enumeration is limited to " +
                                            std::to_string(kMaxToricQubits) + " qubits");
  const VertexExponentMap map(m);
  const std::uint64_t count = std::uint64_t{1} << m;
  std::vector<std::vector<int>> vertices;
  vertices.reserve(count);
  for (std::uint64_t r = 0; r < count; ++r) vertices.push_back(map.vertex(MultiIndex(m, r)));

  std::map<std::vector<int>, std::vector<std::pair<std::uint64_t, std::uint64_t>>> pairs_by_sum;
  for (std::uint64_t u = 0; u < count; ++u) {
    for (std::uint64_t v = u + 1; v < count; ++v) {
      std::vector<int> sum(m);
      for (unsigned s = 0; s < m; ++s) sum[s] = vertices[u][s] + vertices[v][s];
      pairs_by_sum[std::move(sum)].emplace_back(u, v);
    }
  }

  std::set<QuadricBinomial> quadrics;
  for (const auto& [sum, pairs] : pairs_by_sum) {
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      for (std::size_t j = i + 1; j < pairs.size(); ++j) {
        quadrics.emplace(map.index(vertices[pairs[i].first]), map.index(vertices[pairs[i].second]),
                         map.index(vertices[pairs[j].first]), map.index(vertices[pairs[j].second]));
      }
    }
  }
  return {quadrics.begin(), quadrics.end()};
}

struct EquivalenceReport {
  unsigned qubits = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  double tolerance = kDefaultZeroTolerance;
  /// Bound on toric residuals implied by minor residuals <= tolerance.
  double derived_tolerance = 0.0;
  std::size_t minor_count = 0;
  std::size_t toric_count = 0;
  bool minors_contained = false;  ///< every minor is a toric quadric
  bool generator_sets_equal = false;
  double product_max_minor_residual = 0.0;
  double product_max_toric_residual = 0.0;
  std::size_t minor_vanishing_states = 0;  ///< sampled states with all minors <= tolerance
  std::size_t covanishing_states = 0;      ///< of those, states whose toric quadrics <= derived tolerance
  double dense_min_minor_residual = 0.0;
  double dense_min_toric_residual = 0.0;
  bool verdict = false;
};

/// Checks that the toric quadrics cut out the same states as the Segre
/// minors: (a) exact generator containment, (b) all toric quadrics vanish
/// on sampled product states, (c) on every sampled state whose minors vanish
/// the toric quadrics vanish too. A swap on k positions telescopes into k
/// single-position minors, so (c) uses (m - 1) * tolerance.
inline EquivalenceReport ideal_equivalence_report(unsigned m, std::size_t trials, std::uint64_t seed,
                                                  double tolerance = kDefaultZeroTolerance) {
  if (trials == 0) throw InputError("trials must be positive");
  if (!(tolerance > 0.0) || !std::isfinite(tolerance)) throw InputError("tolerance must be a positive finite number");
  const auto minors = single_swap_minors(m);
  const auto toric = toric_ideal_quadrics(m);

  EquivalenceReport report;
  report.qubits = m;
  report.trials = trials;
  report.seed = seed;
  report.tolerance = tolerance;
  report.derived_tolerance = (m - 1) * tolerance;
  report.minor_count = minors.size();
  report.toric_count = toric.size();
  report.minors_contained = std::includes(toric.begin(), toric.end(), minors.begin(), minors.end());
  report.generator_sets_equal = minors == toric;

  std::mt19937_64 rng(seed);
  bool products_vanish = true;
  bool covanish = true;
  auto account = [&](double minor_residual, double toric_residual) {
    if (minor_residual <= tolerance) {
      ++report.minor_vanishing_states;
      if (toric_residual <= report.derived_tolerance) {
        ++report.covanishing_states;
      } else {
        covanish = false;
      }
    }
  };

  for (std::size_t t = 0; t < trials; ++t) {
    const auto state = segre_embed(random_factors(m, rng));
    const double minor_residual = scan_residuals(minors, state).max_residual;
    const double toric_residual = scan_residuals(toric, state).max_residual;
    report.product_max_minor_residual = std::max(report.product_max_minor_residual, minor_residual);
    report.product_max_toric_residual = std::max(report.product_max_toric_residual, toric_residual);
    if (toric_residual > tolerance) products_vanish = false;
    account(minor_residual, toric_residual);
  }
  report.dense_min_minor_residual = std::numeric_limits<double>::infinity();
  report.dense_min_toric_residual = std::numeric_limits<double>::infinity();
  for (std::size_t t = 0; t < trials; ++t) {
    const auto state = random_dense_state(m, rng);
    const double minor_residual = scan_residuals(minors, state).max_residual;
    const double toric_residual = scan_residuals(toric, state).max_residual;
    report.dense_min_minor_residual = std::min(report.dense_min_minor_residual, minor_residual);
    report.dense_min_toric_residual = std::min(report.dense_min_toric_residual, toric_residual);
    account(minor_residual, toric_residual);
  }

  report.verdict = report.minors_contained && products_vanish && covanish;
  return report;
}

}  // namespace qgeom
