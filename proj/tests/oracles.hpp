#pragma once

// Brute-force reference computations used only by the tests. None of these
// call into the library routine they are compared against.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Complex = std::complex<double>;
using Rational = boost::multiprecision::cpp_rational;
using RankQuad = std::array<std::uint64_t, 4>;  // plus pair, minus pair (ranks)

// Canonical rank form of a_k a_l - a_kp a_lp: pairs sorted, smaller pair first.
inline RankQuad canonical(std::uint64_t k, std::uint64_t l, std::uint64_t kp, std::uint64_t lp) {
  std::pair<std::uint64_t, std::uint64_t> a{std::min(k, l), std::max(k, l)};
  std::pair<std::uint64_t, std::uint64_t> b{std::min(kp, lp), std::max(kp, lp)};
  if (b < a) std::swap(a, b);
  return {a.first, a.second, b.first, b.second};
}

// Every (x, y, s) with the digit at s exchanged, dropping identically zero ones.
inline std::set<RankQuad> single_swap_minors(unsigned m) {
  std::set<RankQuad> out;
  const std::uint64_t dim = std::uint64_t{1} << m;
  for (std::uint64_t x = 0; x < dim; ++x) {
    for (std::uint64_t y = 0; y < dim; ++y) {
      for (unsigned s = 0; s < m; ++s) {
        const std::uint64_t bx = (x >> s) & 1U, by = (y >> s) & 1U;
        if (bx == by) continue;
        const std::uint64_t xp = (x & ~(std::uint64_t{1} << s)) | (by << s);
        const std::uint64_t yp = (y & ~(std::uint64_t{1} << s)) | (bx << s);
        const auto q = canonical(x, y, xp, yp);
        if (q[0] == q[2] && q[1] == q[3]) continue;
        out.insert(q);
      }
    }
  }
  return out;
}

// All pairs of distinct vertex pairs of {-1,1}^m whose exponent sums agree.
inline std::set<RankQuad> toric_quadrics(unsigned m) {
  const std::uint64_t dim = std::uint64_t{1} << m;
  auto coordinate = [](std::uint64_t r, unsigned s) { return ((r >> s) & 1U) ? 1 : -1; };
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  for (std::uint64_t u = 0; u < dim; ++u)
    for (std::uint64_t v = u + 1; v < dim; ++v) pairs.emplace_back(u, v);
  std::set<RankQuad> out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      bool equal = true;
      for (unsigned s = 0; s < m && equal; ++s) {
        equal = coordinate(pairs[i].first, s) + coordinate(pairs[i].second, s) ==
                coordinate(pairs[j].first, s) + coordinate(pairs[j].second, s);
      }
      if (equal) out.insert(canonical(pairs[i].first, pairs[i].second, pairs[j].first, pairs[j].second));
    }
  }
  return out;
}

// Entanglement measure by direct enumeration: every ordered pair (k, l) of
// distinct indices and every swap subset S (as a bit mask over all m
// positions) that is a nonempty proper subset of the differing positions.
// Ordered pairs visit each unordered pair twice, so the sum is halved.
inline double entanglement_measure(std::span<const Complex> amps, unsigned m, double norm_const = 1.0,
                                   bool minors_only = false) {
  const std::uint64_t dim = std::uint64_t{1} << m;
  double sum = 0.0;
  for (std::uint64_t k = 0; k < dim; ++k) {
    for (std::uint64_t l = 0; l < dim; ++l) {
      if (k == l) continue;
      const std::uint64_t differ = k ^ l;
      for (std::uint64_t mask = 1; mask < dim; ++mask) {
        if ((mask & ~differ) != 0 || mask == differ) continue;
        if (minors_only && (mask & (mask - 1)) != 0) continue;
        std::uint64_t sk = k, sl = l;
        for (unsigned s = 0; s < m; ++s) {
          if (!((mask >> s) & 1U)) continue;
          const std::uint64_t bit = std::uint64_t{1} << s;
          sk = (sk & ~bit) | (l & bit);
          sl = (sl & ~bit) | (k & bit);
        }
        sum += std::norm(amps[k] * amps[l] - amps[sk] * amps[sl]);
      }
    }
  }
  return std::sqrt(norm_const * sum / 2.0);
}

// Direct tensor product: digit j of the index string (left to right) picks
// the component of factor j.
inline std::vector<Complex> direct_product(const std::vector<std::array<Complex, 2>>& factors) {
  const std::size_t m = factors.size();
  std::vector<Complex> out(std::size_t{1} << m);
  for (std::size_t r = 0; r < out.size(); ++r) {
    Complex p = 1.0;
    for (std::size_t j = 0; j < m; ++j) p *= factors[j][(r >> (m - 1 - j)) & 1U];
    out[r] = p;
  }
  return out;
}

// ---- exact linear algebra for the polyhedral oracles ----

using Matrix = std::vector<std::vector<Rational>>;

// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<std::size_t> rref(Matrix& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const Rational lead = a[r][c];
    for (auto& x : a[r]) x /= lead;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline Matrix columns_of(const std::vector<std::vector<std::int64_t>>& gens, std::uint64_t subset, std::size_t n) {
  Matrix a(n);
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (!((subset >> j) & 1U)) continue;
    for (std::size_t i = 0; i < n; ++i) a[i].push_back(gens[j][i]);
  }
  return a;
}

// Conic Caratheodory: v is in the cone iff v is a nonnegative combination of
// some linearly independent subset of generators. Enumerates every subset.
inline bool cone_contains(const std::vector<std::vector<std::int64_t>>& gens, const std::vector<std::int64_t>& v) {
  const std::size_t n = v.size();
  if (std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; })) return true;
  for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << gens.size()); ++subset) {
    Matrix a = columns_of(gens, subset, n);
    const std::size_t k = a[0].size();
    for (std::size_t i = 0; i < n; ++i) a[i].push_back(v[i]);
    const auto pivots = rref(a);
    // Needs independent columns with v in their span: pivots exactly 0..k-1.
    if (pivots.size() != k || pivots.back() != k - 1) continue;
    bool nonnegative = true;
    for (std::size_t i = 0; i < k; ++i) nonnegative = nonnegative && a[i][k] >= 0;
    if (nonnegative) return true;
  }
  return false;
}

// Farkas-type certificate search: the cone contains a line iff some circuit
// (a generator subset with a one-dimensional kernel) has a kernel vector of
// one strict sign. Enumerates every subset.
inline bool has_positive_dependency(const std::vector<std::vector<std::int64_t>>& gens, std::size_t n) {
  for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << gens.size()); ++subset) {
    Matrix a = columns_of(gens, subset, n);
    const std::size_t k = a[0].size();
    const auto pivots = rref(a);
    if (pivots.size() + 1 != k) continue;
    std::size_t free_col = 0;
    while (std::find(pivots.begin(), pivots.end(), free_col) != pivots.end()) ++free_col;
    // Kernel vector: free variable = 1, pivot variables = -a[i][free].
    std::vector<Rational> kernel(k);
    kernel[free_col] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) kernel[pivots[i]] = -a[i][free_col];
    const bool positive = std::all_of(kernel.begin(), kernel.end(), [](const Rational& x) { return x > 0; });
    if (positive) return true;
  }
  return false;
}

}  // namespace oracle
