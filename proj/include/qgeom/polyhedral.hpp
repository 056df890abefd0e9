#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qgeom/errors.hpp"
#include "qgeom/exact_lp.hpp"
#include "qgeom/state.hpp"

namespace qgeom {

using IntVector = std::vector<std::int64_t>;

/// Upper bound on the number of box points enumerated by lattice scans.
inline constexpr std::size_t kMaxLatticeScan = 10'000'000;

inline std::string to_string(std::span<const std::int64_t> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

inline std::int64_t dot(std::span<const std::int64_t> u, std::span<const std::int64_t> v) {
  return std::inner_product(u.begin(), u.end(), v.begin(), std::int64_t{0});
}

namespace detail {

inline std::vector<IntVector> sorted_unique(std::size_t n, std::vector<IntVector> vectors, const char* what) {
  for (const auto& v : vectors) {
    if (v.size() != n) {
      throw InputError(std::string(what) + " " + to_string(v) + " does not have dimension " + std::to_string(n));
    }
  }
  std::sort(vectors.begin(), vectors.end());
  vectors.erase(std::unique(vectors.begin(), vectors.end()), vectors.end());
  return vectors;
}

// Columns are the given vectors: an n x k matrix.
inline RationalMatrix column_matrix(std::size_t n, std::span<const IntVector> columns) {
  RationalMatrix m(n, std::vector<Rational>(columns.size()));
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (std::size_t i = 0; i < n; ++i) m[i][j] = columns[j][i];
  }
  return m;
}

inline void require_dimension(std::size_t n, std::span<const std::int64_t> v) {
  if (v.size() != n) {
    throw InputError("vector " + to_string(v) + " does not have dimension " + std::to_string(n));
  }
}

// Calls visit(point) for every integer point of the box [lower, upper] in
// lexicographic order.
template <typename Visit>
void for_each_box_point(std::span<const std::int64_t> lower, std::span<const std::int64_t> upper, Visit visit) {
  const std::size_t n = lower.size();
  double count = 1.0;
  for (std::size_t i = 0; i < n; ++i) count *= static_cast<double>(upper[i] - lower[i] + 1);
  if (count > static_cast<double>(kMaxLatticeScan)) {
    throw InputError("lattice scan of " + std::to_string(static_cast<std::uint64_t>(count)) + " points exceeds the limit");
  }
  IntVector point(lower.begin(), lower.end());
  for (;;) {
    visit(std::as_const(point));
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (point[i] < upper[i]) {
        ++point[i];
        break;
      }
      point[i] = lower[i];
      if (i == 0) return;
    }
  }
}

}  // namespace detail

/// Cone(S) = { sum lambda_v v : lambda_v >= 0 } for a finite set S of
/// nonzero integer vectors. Generators are kept sorted and duplicate-free.
class RationalCone {
 public:
  RationalCone(std::size_t dimension, std::vector<IntVector> generators)
      : dimension_(dimension), generators_(detail::sorted_unique(dimension, std::move(generators), "generator")) {
    if (dimension == 0) throw InputError("cone dimension must be positive");
    for (const auto& g : generators_) {
      if (std::all_of(g.begin(), g.end(), [](std::int64_t x) { return x == 0; })) {
        throw InputError("cone generators must be nonzero");
      }
    }
  }

  std::size_t dimension() const noexcept { return dimension_; }
  const std::vector<IntVector>& generators() const noexcept { return generators_; }

  friend bool operator==(const RationalCone&, const RationalCone&) = default;

 private:
  std::size_t dimension_;
  std::vector<IntVector> generators_;
};

/// Conv(S) for a finite set of integer points.
class LatticePolytope {
 public:
  LatticePolytope(std::size_t dimension, std::vector<IntVector> vertices)
      : dimension_(dimension), vertices_(detail::sorted_unique(dimension, std::move(vertices), "vertex")) {
    if (dimension == 0) throw InputError("polytope dimension must be positive");
    if (vertices_.empty()) throw InputError("a polytope needs at least one point");
  }

  std::size_t dimension() const noexcept { return dimension_; }
  const std::vector<IntVector>& vertices() const noexcept { return vertices_; }

 private:
  std::size_t dimension_;
  std::vector<IntVector> vertices_;
};

/// v lies in the cone iff v = G lambda has a solution with lambda >= 0,
/// decided exactly.
inline bool cone_contains(const RationalCone& cone, std::span<const std::int64_t> v) {
  detail::require_dimension(cone.dimension(), v);
  if (cone.generators().empty()) return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
  const auto a = detail::column_matrix(cone.dimension(), cone.generators());
  const std::vector<Rational> b(v.begin(), v.end());
  return find_nonnegative_solution(a, b).has_value();
}

/// Membership in the dual cone: <u, g> >= 0 for every generator g.
inline bool dual_cone_contains(const RationalCone& cone, std::span<const std::int64_t> u) {
  detail::require_dimension(cone.dimension(), u);
  return std::all_of(cone.generators().begin(), cone.generators().end(),
                     [&](const IntVector& g) { return dot(u, g) >= 0; });
}

/// Scales a rational vector to the primitive integer vector on its ray.
inline IntVector primitive_integer_vector(std::span<const Rational> v) {
  using boost::multiprecision::cpp_int;
  cpp_int lcm_den = 1;
  for (const auto& x : v) {
    lcm_den = boost::multiprecision::lcm(lcm_den, cpp_int(boost::multiprecision::denominator(x)));
  }
  std::vector<cpp_int> scaled;
  cpp_int g = 0;
  for (const auto& x : v) {
    cpp_int s = boost::multiprecision::numerator(x) * (lcm_den / boost::multiprecision::denominator(x));
    g = boost::multiprecision::gcd(g, cpp_int(abs(s)));
    scaled.push_back(std::move(s));
  }
  if (g == 0) throw InputError("cannot scale the zero vector");
  IntVector out;
  for (const auto& s : scaled) {
    const cpp_int q = s / g;
    if (q > std::numeric_limits<std::int64_t>::max() || q < std::numeric_limits<std::int64_t>::min()) {
      throw UnsupportedError("dual generator entry exceeds 64-bit range");
    }
    out.push_back(static_cast<std::int64_t>(q));
  }
  return out;
}

/// Dual of a full-dimensional simplicial cone. With the generators as the
/// columns of G, the dual is generated by the rows of G^{-1}, scaled to
/// primitive integer vectors.
inline RationalCone dual_cone(const RationalCone& cone) {
  const std::size_t n = cone.dimension();
  if (cone.generators().size() != n) {
    throw UnsupportedError("dual_cone supports only simplicial full-dimensional cones: " +
                           std::to_string(cone.generators().size()) + " generators in dimension " +
                           std::to_string(n));
  }
  auto inverse = invert(detail::column_matrix(n, cone.generators()));
  if (!inverse) {
    throw UnsupportedError("dual_cone supports only simplicial full-dimensional cones: generators are linearly dependent");
  }
  std::vector<IntVector> dual;
  for (const auto& row : *inverse) dual.push_back(primitive_integer_vector(row));
  return RationalCone(n, std::move(dual));
}

/// sigma ∩ (-sigma) = {0}, i.e. no nonzero lambda >= 0 with G lambda = 0.
/// Decided exactly by the feasibility of G lambda = 0, sum lambda = 1.
inline bool is_strongly_convex(const RationalCone& cone) {
  const auto& gens = cone.generators();
  if (gens.empty()) return true;
  auto a = detail::column_matrix(cone.dimension(), gens);
  a.emplace_back(gens.size(), Rational(1));
  std::vector<Rational> b(cone.dimension() + 1);
  b.back() = 1;
  return !find_nonnegative_solution(a, b).has_value();
}

/// Lattice points of sigma ∩ [-bound, bound]^n in lexicographic order. These
/// are the exponents of the Laurent monomials of R_sigma inside the box.
inline std::vector<IntVector> lattice_support(const RationalCone& cone, std::int64_t bound) {
  if (bound < 1) throw InputError("box bound must be at least 1");
  const IntVector lower(cone.dimension(), -bound);
  const IntVector upper(cone.dimension(), bound);
  std::vector<IntVector> out;
  detail::for_each_box_point(lower, upper, [&](const IntVector& p) {
    if (cone_contains(cone, p)) out.push_back(p);
  });
  return out;
}

/// v ∈ Conv(S): v = V lambda, sum lambda = 1, lambda >= 0.
inline bool polytope_contains(const LatticePolytope& polytope, std::span<const std::int64_t> v) {
  detail::require_dimension(polytope.dimension(), v);
  auto a = detail::column_matrix(polytope.dimension(), polytope.vertices());
  a.emplace_back(polytope.vertices().size(), Rational(1));
  std::vector<Rational> b(v.begin(), v.end());
  b.emplace_back(1);
  return find_nonnegative_solution(a, b).has_value();
}

/// All lattice points of the polytope, lexicographically sorted.
inline std::vector<IntVector> polytope_lattice_points(const LatticePolytope& polytope) {
  const std::size_t n = polytope.dimension();
  IntVector lower(polytope.vertices().front()), upper(polytope.vertices().front());
  for (const auto& v : polytope.vertices()) {
    for (std::size_t i = 0; i < n; ++i) {
      lower[i] = std::min(lower[i], v[i]);
      upper[i] = std::max(upper[i], v[i]);
    }
  }
  std::vector<IntVector> out;
  detail::for_each_box_point(lower, upper, [&](const IntVector& p) {
    if (polytope_contains(polytope, p)) out.push_back(p);
  });
  return out;
}

/// lambda z^beta with lambda != 0.
struct LatticeMonomial {
  IntVector exponent;
  Amplitude coefficient;

  LatticeMonomial(IntVector e, Amplitude c) : exponent(std::move(e)), coefficient(c) {
    if (c == Amplitude{}) throw InputError("a Laurent monomial needs a nonzero coefficient");
  }
};

/// Finite sum of Laurent monomials in n variables. Terms with equal exponents
/// are combined.
class LaurentPolynomial {
 public:
  explicit LaurentPolynomial(std::size_t variables) : variables_(variables) {
    if (variables == 0) throw InputError("a Laurent polynomial needs at least one variable");
  }

  LaurentPolynomial& add(const LatticeMonomial& term) {
    detail::require_dimension(variables_, term.exponent);
    terms_[term.exponent] += term.coefficient;
    return *this;
  }

  std::size_t variables() const noexcept { return variables_; }

  /// supp(f) = { beta : lambda_beta != 0 }, sorted.
  std::vector<IntVector> support() const {
    std::vector<IntVector> out;
    for (const auto& [exponent, coefficient] : terms_) {
      if (coefficient != Amplitude{}) out.push_back(exponent);
    }
    return out;
  }

 private:
  std::size_t variables_;
  std::map<IntVector, Amplitude> terms_;
};

/// f ∈ R_sigma iff supp(f) ⊂ sigma.
inline bool in_monomial_algebra(const LaurentPolynomial& f, const RationalCone& cone) {
  if (f.variables() != cone.dimension()) throw InputError("polynomial and cone dimensions differ");
  const auto support = f.support();
  return std::all_of(support.begin(), support.end(), [&](const IntVector& b) { return cone_contains(cone, b); });
}

}  // namespace qgeom
