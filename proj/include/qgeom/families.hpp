#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "qgeom/errors.hpp"
#include "qgeom/segre.hpp"
#include "qgeom/state.hpp"

namespace qgeom {

enum class StateFamily { ghz, w, product_basis, random_product, random_dense };

inline StateFamily parse_family(std::string_view name) {
  if (name == "ghz") return StateFamily::ghz;
  if (name == "w") return StateFamily::w;
  if (name == "product-basis") return StateFamily::product_basis;
  if (name == "random-product") return StateFamily::random_product;
  if (name == "random-dense") return StateFamily::random_dense;
  throw InputError("unknown state family \"" + std::string(name) +
                   "\" (expected ghz|w|product-basis|random-product|random-dense)");
}

inline std::string to_string(StateFamily family) {
  switch (family) {
    case StateFamily::ghz: return "ghz";
    case StateFamily::w: return "w";
    case StateFamily::product_basis: return "product-basis";
    case StateFamily::random_product: return "random-product";
    case StateFamily::random_dense: return "random-dense";
  }
  return "?";
}

/// m normalized single-qubit factors with i.i.d. complex Gaussian components.
inline std::vector<SingleQubitFactor> random_factors(unsigned m, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  std::vector<SingleQubitFactor> factors;
  factors.reserve(m);
  while (factors.size() < m) {
    SingleQubitFactor f{{gauss(rng), gauss(rng)}, {gauss(rng), gauss(rng)}};
    const double n = f.norm();
    if (n == 0.0) continue;
    factors.push_back({f.a0 / n, f.a1 / n});
  }
  return factors;
}

inline MultiQubitState random_dense_state(unsigned m, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  std::vector<Amplitude> amplitudes(std::size_t{1} << m);
  for (auto& a : amplitudes) a = {gauss(rng), gauss(rng)};
  return normalize(MultiQubitState(m, std::move(amplitudes)));
}

/// Standard test states. product-basis is the basis state of rank
/// seed mod 2^m; the random families are deterministic in `seed`.
inline MultiQubitState family_state(StateFamily family, unsigned m, std::uint64_t seed = 0) {
  if (m == 0 || m > kMaxStateQubits) {
    throw InputError("qubit count must be in [1, " + std::to_string(kMaxStateQubits) + "], got " +
                     std::to_string(m));
  }
  const std::size_t dim = std::size_t{1} << m;
  std::vector<Amplitude> amplitudes(dim);
  switch (family) {
    case StateFamily::ghz:
      amplitudes.front() = amplitudes.back() = 1.0 / std::sqrt(2.0);
      return MultiQubitState(m, std::move(amplitudes));
    case StateFamily::w: {
      if (m < 2) throw InputError("the W state needs at least 2 qubits");
      const double weight = 1.0 / std::sqrt(static_cast<double>(m));
      for (unsigned s = 0; s < m; ++s) amplitudes[std::size_t{1} << s] = weight;
      return MultiQubitState(m, std::move(amplitudes));
    }
    case StateFamily::product_basis:
      amplitudes[seed % dim] = 1.0;
      return MultiQubitState(m, std::move(amplitudes));
    case StateFamily::random_product: {
      std::mt19937_64 rng(seed);
      return segre_embed(random_factors(m, rng));
    }
    case StateFamily::random_dense: {
      std::mt19937_64 rng(seed);
      return random_dense_state(m, rng);
    }
  }
  throw InputError("unknown state family");
}

inline MultiQubitState family_state(std::string_view name, unsigned m, std::uint64_t seed = 0) {
  return family_state(parse_family(name), m, seed);
}

}  // namespace qgeom
