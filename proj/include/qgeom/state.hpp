#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qgeom/errors.hpp"
#include "qgeom/multi_index.hpp"

namespace qgeom {

using Amplitude = std::complex<double>;

/// A state is flagged normalized when |sum |a|^2 - 1| is within this bound.
inline constexpr double kNormalizationTolerance = 1e-12;

/// Dense registers are capped so the amplitude array stays addressable.
inline constexpr unsigned kMaxStateQubits = 26;

inline bool is_finite(Amplitude a) noexcept { return std::isfinite(a.real()) && std::isfinite(a.imag()); }

/// Immutable pure state of m qubits: 2^m complex amplitudes indexed by
/// MultiIndex rank (x_m most significant).
class MultiQubitState {
 public:
  MultiQubitState(unsigned qubits, std::vector<Amplitude> amplitudes)
      : qubits_(qubits), amplitudes_(std::move(amplitudes)) {
    if (qubits == 0 || qubits > kMaxStateQubits) {
      throw InputError("qubit count must be in [1, " + std::to_string(kMaxStateQubits) + "], got " +
                       std::to_string(qubits));
    }
    if (amplitudes_.size() != (std::size_t{1} << qubits)) {
      throw InputError("expected " + std::to_string(std::size_t{1} << qubits) + " amplitudes for " +
                       std::to_string(qubits) + " qubits, got " + std::to_string(amplitudes_.size()));
    }
    double sum = 0.0;
    for (std::size_t r = 0; r < amplitudes_.size(); ++r) {
      if (!is_finite(amplitudes_[r])) {
        throw InputError("non-finite amplitude at index " + MultiIndex(qubits, r).to_string());
      }
      sum += std::norm(amplitudes_[r]);
    }
    norm_squared_ = sum;
  }

  unsigned qubits() const noexcept { return qubits_; }
  std::size_t dimension() const noexcept { return amplitudes_.size(); }
  std::span<const Amplitude> amplitudes() const noexcept { return amplitudes_; }

  Amplitude at(std::uint64_t rank) const { return amplitudes_.at(rank); }
  Amplitude operator[](const MultiIndex& index) const {
    if (index.size() != qubits_) {
      throw InputError("index " + index.to_string() + " has length " + std::to_string(index.size()) +
                       ", state has " + std::to_string(qubits_) + " qubits");
    }
    return amplitudes_[index.rank()];
  }

  double norm() const noexcept { return std::sqrt(norm_squared_); }
  double norm_squared() const noexcept { return norm_squared_; }
  bool normalized() const noexcept { return std::abs(norm_squared_ - 1.0) <= kNormalizationTolerance; }

 private:
  unsigned qubits_;
  std::vector<Amplitude> amplitudes_;
  double norm_squared_ = 0.0;
};

/// A point (a0 : a1) of CP^1 in homogeneous coordinates.
struct SingleQubitFactor {
  Amplitude a0;
  Amplitude a1;

  bool is_zero() const noexcept { return a0 == Amplitude{} && a1 == Amplitude{}; }
  double norm() const noexcept { return std::sqrt(std::norm(a0) + std::norm(a1)); }
};

/// Builds a state from sparse (index, amplitude) entries. Unlisted amplitudes
/// are zero; the result is not rescaled.
inline MultiQubitState make_state(unsigned qubits, std::span<const std::pair<MultiIndex, Amplitude>> entries) {
  if (qubits == 0 || qubits > kMaxStateQubits) {
    throw InputError("qubit count must be in [1, " + std::to_string(kMaxStateQubits) + "], got " +
                     std::to_string(qubits));
  }
  std::vector<Amplitude> amplitudes(std::size_t{1} << qubits);
  std::vector<bool> seen(amplitudes.size(), false);
  for (const auto& [index, value] : entries) {
    if (index.size() != qubits) {
      throw InputError("index " + index.to_string() + " has length " + std::to_string(index.size()) +
                       ", expected " + std::to_string(qubits));
    }
    if (seen[index.rank()]) throw InputError("duplicate index " + index.to_string());
    if (!is_finite(value)) throw InputError("non-finite amplitude at index " + index.to_string());
    seen[index.rank()] = true;
    amplitudes[index.rank()] = value;
  }
  return MultiQubitState(qubits, std::move(amplitudes));
}

inline MultiQubitState make_state(unsigned qubits, std::initializer_list<std::pair<MultiIndex, Amplitude>> entries) {
  return make_state(qubits, std::span<const std::pair<MultiIndex, Amplitude>>(entries.begin(), entries.size()));
}

inline MultiQubitState normalize(const MultiQubitState& state) {
  const double n = state.norm();
  if (n == 0.0) throw DomainError("cannot normalize zero state");
  std::vector<Amplitude> scaled(state.amplitudes().begin(), state.amplitudes().end());
  for (auto& a : scaled) a /= n;
  return MultiQubitState(state.qubits(), std::move(scaled));
}

/// Multiplies every amplitude by `factor`.
inline MultiQubitState scaled(const MultiQubitState& state, Amplitude factor) {
  std::vector<Amplitude> out(state.amplitudes().begin(), state.amplitudes().end());
  for (auto& a : out) a *= factor;
  return MultiQubitState(state.qubits(), std::move(out));
}

/// Relabels tensor positions: qubit at position s of the input moves to
/// position `target[s - 1]` of the output. `target` is a permutation of 1..m.
inline MultiQubitState permute_qubits(const MultiQubitState& state, std::span<const unsigned> target) {
  const unsigned m = state.qubits();
  if (target.size() != m) throw InputError("permutation length does not match qubit count");
  std::vector<bool> used(m + 1, false);
  for (unsigned t : target) {
    if (t == 0 || t > m || used[t]) throw InputError("not a permutation of 1..m");
    used[t] = true;
  }
  std::vector<Amplitude> out(state.dimension());
  for (std::uint64_t r = 0; r < state.dimension(); ++r) {
    std::uint64_t moved = 0;
    for (unsigned s = 0; s < m; ++s) {
      if ((r >> s) & 1U) moved |= std::uint64_t{1} << (target[s] - 1);
    }
    out[moved] = state.at(r);
  }
  return MultiQubitState(m, std::move(out));
}

/// Largest componentwise |a_r - b_r|.
inline double max_amplitude_deviation(const MultiQubitState& a, const MultiQubitState& b) {
  if (a.qubits() != b.qubits()) throw InputError("states have different qubit counts");
  double worst = 0.0;
  for (std::size_t r = 0; r < a.dimension(); ++r) worst = std::max(worst, std::abs(a.at(r) - b.at(r)));
  return worst;
}

}  // namespace qgeom
