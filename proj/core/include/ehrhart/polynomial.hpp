#pragma once

#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ehrhart/numbers.hpp"

namespace ehrhart {

/// Univariate polynomial with exact rational coefficients, stored
/// lowest power first with no trailing zeros.
class RationalPolynomial {
 public:
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs);
  RationalPolynomial(std::initializer_list<Rational> coeffs)
      : RationalPolynomial(std::vector<Rational>(coeffs)) {}

  static RationalPolynomial constant(const Rational& c) { return RationalPolynomial({c}); }
  static RationalPolynomial monomial(const Rational& c, std::size_t power);
  // Lagrange interpolation through (xs[i], ys[i]); xs pairwise distinct.
  static RationalPolynomial interpolate(std::span<const Rational> xs,
                                        std::span<const Rational> ys);

  int degree() const noexcept {
    return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1;
  }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  // Zero beyond the degree.
  Rational coefficient(std::size_t power) const;
  const Rational& leading_coefficient() const;

  Rational operator()(const Rational& x) const;
  // Value at re + i*im, returned as (real part, imaginary part).
  std::pair<Rational, Rational> evaluate_complex(const Rational& re, const Rational& im) const;

  RationalPolynomial derivative() const;
  // p(a*x + b).
  RationalPolynomial compose_linear(const Rational& a, const Rational& b) const;
  RationalPolynomial monic() const;

  RationalPolynomial operator-() const;
  RationalPolynomial& operator+=(const RationalPolynomial& rhs);
  RationalPolynomial& operator-=(const RationalPolynomial& rhs);
  RationalPolynomial& operator*=(const RationalPolynomial& rhs);
  RationalPolynomial& operator*=(const Rational& c);

  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
  friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
  friend RationalPolynomial operator*(RationalPolynomial a, const RationalPolynomial& b) { return a *= b; }
  friend RationalPolynomial operator*(RationalPolynomial a, const Rational& c) { return a *= c; }
  friend RationalPolynomial operator*(const Rational& c, RationalPolynomial a) { return a *= c; }

  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

  // Renders e.g. "1 + 3/2 m + 3/2 m^2".
  std::string to_string(char variable = 'm') const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

// Euclidean division; throws std::domain_error on a zero divisor.
std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                         const RationalPolynomial& b);

// Monic gcd (zero when both inputs are zero).
RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b);

}  // namespace ehrhart
