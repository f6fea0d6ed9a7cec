#pragma once

#include <random>
#include <vector>

#include "ehrhart/numbers.hpp"
#include "ehrhart/polynomial.hpp"

namespace gen {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x5eed1234abcdULL);
  return engine;
}

inline long long integer(long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng());
}

inline ehrhart::Rational rational(long long num_bound = 9, long long den_bound = 6) {
  return ehrhart::Rational(integer(-num_bound, num_bound), integer(1, den_bound));
}

// Random polynomial of exact degree `degree`.
inline ehrhart::RationalPolynomial polynomial(int degree) {
  std::vector<ehrhart::Rational> c;
  for (int k = 0; k <= degree; ++k) c.push_back(rational());
  while (c.back() == 0) c.back() = rational();
  return ehrhart::RationalPolynomial(c);
}

}  // namespace gen
