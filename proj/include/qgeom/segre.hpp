#pragma once

#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "qgeom/binomial.hpp"
#include "qgeom/errors.hpp"
#include "qgeom/multi_index.hpp"
#include "qgeom/state.hpp"

namespace qgeom {

/// Threshold below which a binomial value counts as zero.
inline constexpr double kDefaultZeroTolerance = 1e-10;

namespace detail {

// Spreads the m-1 bits of `rest` around position `position` (1-based) and
// places `bit` there.
inline std::uint64_t insert_bit(std::uint64_t rest, unsigned position, std::uint64_t bit) {
  const std::uint64_t low_mask = (std::uint64_t{1} << (position - 1)) - 1;
  return ((rest & ~low_mask) << 1) | (bit << (position - 1)) | (rest & low_mask);
}

inline void require_minor_arity(unsigned m) {
  if (m < 2) throw InputError("quadric minors need at least 2 qubits, got " + std::to_string(m));
  if (m > kMaxStateQubits) throw InputError("qubit count " + std::to_string(m) + " too large");
}

}  // namespace detail

/// All 2x2 minors a_x a_y - a_x' a_y' obtained by exchanging the digit at a
/// single position s between x and y, in canonical sorted order.
///
/// For each s these are the 2x2 minors of the 2 x 2^(m-1) flattening that
/// isolates position s; minors that arise from two positions are kept once.
inline std::vector<QuadricBinomial> single_swap_minors(unsigned m) {
  detail::require_minor_arity(m);
  std::set<QuadricBinomial> minors;
  const std::uint64_t columns = std::uint64_t{1} << (m - 1);
  for (unsigned s = 1; s <= m; ++s) {
    for (std::uint64_t a = 0; a < columns; ++a) {
      for (std::uint64_t b = a + 1; b < columns; ++b) {
        const MultiIndex zero_a(m, detail::insert_bit(a, s, 0));
        const MultiIndex one_b(m, detail::insert_bit(b, s, 1));
        const MultiIndex zero_b(m, detail::insert_bit(b, s, 0));
        const MultiIndex one_a(m, detail::insert_bit(a, s, 1));
        minors.emplace(zero_a, one_b, zero_b, one_a);
      }
    }
  }
  return {minors.begin(), minors.end()};
}

/// a_k a_l - a_k' a_l' for the binomial's canonical plus/minus pairs.
inline Amplitude evaluate_binomial(const QuadricBinomial& b, const MultiQubitState& state) {
  if (b.qubits() != state.qubits()) {
    throw InputError("binomial over " + std::to_string(b.qubits()) + " qubits evaluated on a " +
                     std::to_string(state.qubits()) + "-qubit state");
  }
  const auto& [k, l] = b.plus();
  const auto& [kp, lp] = b.minus();
  return state.at(k.rank()) * state.at(l.rank()) - state.at(kp.rank()) * state.at(lp.rank());
}

/// Largest |value| over a generator list and the first generator attaining it.
struct ResidualScan {
  double max_residual = 0.0;
  std::size_t argmax = 0;
};

inline ResidualScan scan_residuals(std::span<const QuadricBinomial> generators, const MultiQubitState& state) {
  ResidualScan scan;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const double r = std::abs(evaluate_binomial(generators[i], state));
    if (r > scan.max_residual) scan = {r, i};
  }
  return scan;
}

struct SeparabilityReport {
  bool separable;
  double max_residual;
  QuadricBinomial witness;
  double tolerance;
};

/// Full-separability test: the state lies on the Segre variety iff every
/// single-swap minor vanishes.
inline SeparabilityReport separability_report(const MultiQubitState& state,
                                              double tolerance = kDefaultZeroTolerance) {
  if (!(tolerance > 0.0) || !std::isfinite(tolerance)) throw InputError("tolerance must be a positive finite number");
  const auto minors = single_swap_minors(state.qubits());
  const ResidualScan scan = scan_residuals(minors, state);
  return {scan.max_residual <= tolerance, scan.max_residual, minors[scan.argmax], tolerance};
}

/// Segre map (CP^1)^m -> CP^(2^m - 1). `factors[0]` is qubit m (the leftmost
/// digit of an index string) and `factors[m-1]` is qubit 1, so the factor
/// list reads in the same order as index strings.
inline MultiQubitState segre_embed(std::span<const SingleQubitFactor> factors, bool normalize_output = true) {
  if (factors.empty()) throw InputError("segre_embed needs at least one factor");
  const auto m = static_cast<unsigned>(factors.size());
  if (m > kMaxStateQubits) throw InputError("too many factors: " + std::to_string(m));
  for (std::size_t j = 0; j < factors.size(); ++j) {
    if (!is_finite(factors[j].a0) || !is_finite(factors[j].a1)) {
      throw InputError("factor " + std::to_string(j + 1) + " has a non-finite component");
    }
    if (factors[j].is_zero()) throw DomainError("factor " + std::to_string(j + 1) + " is the zero vector");
  }
  std::vector<Amplitude> amplitudes(std::size_t{1} << m);
  for (std::uint64_t r = 0; r < amplitudes.size(); ++r) {
    Amplitude product{1.0, 0.0};
    for (unsigned j = 0; j < m; ++j) {
      const bool bit = (r >> (m - 1 - j)) & 1U;
      product *= bit ? factors[j].a1 : factors[j].a0;
    }
    amplitudes[r] = product;
  }
  MultiQubitState out(m, std::move(amplitudes));
  return normalize_output ? normalize(out) : out;
}

enum class MeasureMode {
  full,        ///< every nonempty proper swap subset
  minors_only  ///< single-position swaps only
};

struct MeasureConfig {
  MeasureMode mode = MeasureMode::full;
  double normalization_constant = 1.0;
};

inline std::string to_string(MeasureMode mode) { return mode == MeasureMode::full ? "full" : "minors-only"; }

inline MeasureMode parse_measure_mode(std::string_view text) {
  if (text == "full") return MeasureMode::full;
  if (text == "minors-only") return MeasureMode::minors_only;
  throw InputError("unknown measure mode \"" + std::string(text) + "\" (expected full|minors-only)");
}

/// Sum-of-squared-swap-binomials entanglement measure.
///
/// Sums |a_k a_l - a_sk a_sl|^2 over unordered pairs {k, l} of distinct
/// indices and every nonempty proper subset S of the positions where k and l
/// differ; s swaps the digits of k and l on S. S and its complement give the
/// same term and both are counted. The result is sqrt(N * sum) and vanishes
/// exactly on product states.
inline double entanglement_measure(const MultiQubitState& state, const MeasureConfig& config = {}) {
  if (state.qubits() < 2) throw InputError("entanglement measure needs at least 2 qubits");
  if (!state.normalized()) {
    throw DomainError("entanglement measure requires a normalized state (norm^2 = " +
                      std::to_string(state.norm_squared()) + ")");
  }
  if (!(config.normalization_constant > 0.0) || !std::isfinite(config.normalization_constant)) {
    throw InputError("normalization constant must be a positive finite number");
  }
  const auto amps = state.amplitudes();
  const std::uint64_t dim = amps.size();
  double sum = 0.0;
  for (std::uint64_t k = 0; k < dim; ++k) {
    for (std::uint64_t l = k + 1; l < dim; ++l) {
      const std::uint64_t differ = k ^ l;
      if (std::popcount(differ) < 2) continue;
      const Amplitude direct = amps[k] * amps[l];
      if (config.mode == MeasureMode::minors_only) {
        for (std::uint64_t rest = differ; rest != 0; rest &= rest - 1) {
          const std::uint64_t bit = rest & (~rest + 1);
          sum += std::norm(direct - amps[k ^ bit] * amps[l ^ bit]);
        }
      } else {
        for (std::uint64_t sub = (differ - 1) & differ; sub != 0; sub = (sub - 1) & differ) {
          sum += std::norm(direct - amps[k ^ sub] * amps[l ^ sub]);
        }
      }
    }
  }
  return std::sqrt(config.normalization_constant * sum);
}

}  // namespace qgeom
