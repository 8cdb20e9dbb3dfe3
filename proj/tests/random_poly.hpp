// Seeded generators shared by the property tests.
#pragma once

#include "km/polyring.hpp"

#include <random>

namespace km::testing {

inline HalfLaurent1 random_poly1(std::mt19937_64& rng, int max_terms = 6, int exp_range = 6, int coeff_range = 5,
                                 bool half = false) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> exps(-exp_range, exp_range);
  std::uniform_int_distribution<int> coeffs(-coeff_range, coeff_range);
  HalfLaurent1 p;
  const int n = nterms(rng);
  for (int i = 0; i < n; ++i) p.add_term(half ? exps(rng) : 2 * exps(rng), coeffs(rng));
  return p;
}

/// Random integer polynomial (nonnegative exponents) of degree <= max_deg with
/// nonzero constant term.
inline HalfLaurent1 random_integer_poly(std::mt19937_64& rng, int max_deg = 12, int coeff_range = 4) {
  std::uniform_int_distribution<int> deg(1, max_deg);
  std::uniform_int_distribution<int> coeffs(-coeff_range, coeff_range);
  const int d = deg(rng);
  std::vector<long long> c(static_cast<std::size_t>(d) + 1);
  for (auto& x : c) x = coeffs(rng);
  while (c.front() == 0) c.front() = coeffs(rng);
  while (c.back() == 0) c.back() = coeffs(rng);
  return HalfLaurent1::from_coeffs(c);
}

inline HalfLaurentN random_polyN(std::mt19937_64& rng, const std::vector<std::string>& vars, int max_terms = 6,
                                 int exp_range = 3, int coeff_range = 4) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> exps(-exp_range, exp_range);
  std::uniform_int_distribution<int> coeffs(-coeff_range, coeff_range);
  HalfLaurentN p(vars);
  const int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(vars.size());
    for (auto& x : e) x = 2 * exps(rng);
    p.add_term(e, coeffs(rng));
  }
  return p;
}

}  // namespace km::testing
