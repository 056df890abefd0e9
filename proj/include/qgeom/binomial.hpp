#pragma once

#include <compare>
#include <string>
#include <utility>

#include "qgeom/errors.hpp"
#include "qgeom/multi_index.hpp"

namespace qgeom {

using IndexPair = std::pair<MultiIndex, MultiIndex>;

/// The quadric a_k a_l - a_k' a_l' on amplitude coordinates.
///
/// Construction enforces the balance condition {k_s, l_s} = {k'_s, l'_s} at
/// every position s, which is what places the binomial in the Segre (toric)
/// ideal. The stored form is canonical: each pair is sorted, the plus pair is
/// the smaller one, and the two pairs differ. Canonicalizing may swap the two
/// pairs, i.e. the stored binomial is the negation of the one requested.
class QuadricBinomial {
 public:
  QuadricBinomial(MultiIndex k, MultiIndex l, MultiIndex k_prime, MultiIndex l_prime)
      : plus_(sorted(k, l)), minus_(sorted(k_prime, l_prime)) {
    const unsigned m = k.size();
    if (l.size() != m || k_prime.size() != m || l_prime.size() != m) {
      throw InputError("binomial indices must share one length");
    }
    // At each bit, the pair {k_s, l_s} is determined by (k_s & l_s, k_s | l_s).
    if ((k.rank() & l.rank()) != (k_prime.rank() & l_prime.rank()) ||
        (k.rank() | l.rank()) != (k_prime.rank() | l_prime.rank())) {
      throw InputError("binomial a_" + k.to_string() + " a_" + l.to_string() + " - a_" + k_prime.to_string() +
                       " a_" + l_prime.to_string() + " is not position-balanced");
    }
    if (plus_ == minus_) {
      throw InputError("binomial a_" + k.to_string() + " a_" + l.to_string() + " - a_" + k_prime.to_string() +
                       " a_" + l_prime.to_string() + " is identically zero");
    }
    if (minus_ < plus_) std::swap(plus_, minus_);
  }

  const IndexPair& plus() const noexcept { return plus_; }
  const IndexPair& minus() const noexcept { return minus_; }
  unsigned qubits() const noexcept { return plus_.first.size(); }

  /// "a_000 a_011 - a_001 a_010"
  std::string to_string() const {
    return "a_" + plus_.first.to_string() + " a_" + plus_.second.to_string() + " - a_" + minus_.first.to_string() +
           " a_" + minus_.second.to_string();
  }

  friend bool operator==(const QuadricBinomial&, const QuadricBinomial&) = default;
  friend std::strong_ordering operator<=>(const QuadricBinomial& a, const QuadricBinomial& b) {
    if (auto c = a.plus_ <=> b.plus_; c != 0) return c;
    return a.minus_ <=> b.minus_;
  }

 private:
  static IndexPair sorted(MultiIndex a, MultiIndex b) {
    if (b < a) std::swap(a, b);
    return {a, b};
  }

  IndexPair plus_;
  IndexPair minus_;
};

}  // namespace qgeom
