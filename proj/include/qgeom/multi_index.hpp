#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "qgeom/errors.hpp"

namespace qgeom {

/// Largest register handled by a MultiIndex (ranks must fit in 64 bits).
inline constexpr unsigned kMaxIndexQubits = 62;

/// A basis label x_m x_{m-1} ... x_1 of an m-qubit register.
///
/// Stored as an integer rank in [0, 2^m) with x_m the most significant bit.
/// Positions are numbered 1..m starting from the least significant digit, so
/// `digit(1)` is x_1 and `digit(m)` is x_m. The string form lists x_m first.
class MultiIndex {
 public:
  MultiIndex(unsigned qubits, std::uint64_t rank) : qubits_(qubits), rank_(rank) {
    if (qubits == 0 || qubits > kMaxIndexQubits) {
      throw InputError("multi-index length must be in [1, " + std::to_string(kMaxIndexQubits) +
                       "], got " + std::to_string(qubits));
    }
    if (rank >> qubits != 0) {
      throw InputError("rank " + std::to_string(rank) + " out of range for " +
                       std::to_string(qubits) + " qubits");
    }
  }

  /// Parses "x_m...x_1", e.g. "010".
  static MultiIndex parse(std::string_view bits) {
    if (bits.empty() || bits.size() > kMaxIndexQubits) {
      throw InputError("index string \"" + std::string(bits) + "\" has invalid length");
    }
    std::uint64_t rank = 0;
    for (char c : bits) {
      if (c != '0' && c != '1') {
        throw InputError("index string \"" + std::string(bits) + "\" contains a non-binary digit");
      }
      rank = (rank << 1) | static_cast<std::uint64_t>(c - '0');
    }
    return MultiIndex(static_cast<unsigned>(bits.size()), rank);
  }

  unsigned size() const noexcept { return qubits_; }
  std::uint64_t rank() const noexcept { return rank_; }

  /// x_position, position in [1, m].
  int digit(unsigned position) const {
    check_position(position);
    return static_cast<int>((rank_ >> (position - 1)) & 1U);
  }

  MultiIndex with_digit(unsigned position, int value) const {
    check_position(position);
    if (value != 0 && value != 1) throw InputError("digit must be 0 or 1");
    const std::uint64_t bit = std::uint64_t{1} << (position - 1);
    return MultiIndex(qubits_, value ? (rank_ | bit) : (rank_ & ~bit));
  }

  std::string to_string() const {
    std::string out(qubits_, '0');
    for (unsigned i = 0; i < qubits_; ++i) {
      if ((rank_ >> i) & 1U) out[qubits_ - 1 - i] = '1';
    }
    return out;
  }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
    if (auto c = a.qubits_ <=> b.qubits_; c != 0) return c;
    return a.rank_ <=> b.rank_;
  }

 private:
  void check_position(unsigned position) const {
    if (position == 0 || position > qubits_) {
      throw InputError("position " + std::to_string(position) + " outside [1, " +
                       std::to_string(qubits_) + "]");
    }
  }

  unsigned qubits_;
  std::uint64_t rank_;
};

}  // namespace qgeom
