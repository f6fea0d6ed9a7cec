#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

#include "ehrhart/errors.hpp"
#include "ehrhart/polynomial.hpp"

namespace ehrhart {

/// g(t) = L(t - 1/2).
RationalPolynomial shift_half(const RationalPolynomial& poly);

/// Writes g(t) = q(t^2) (d even) or g(t) = t*q(t^2) (d odd) and returns q.
/// Throws NotSymmetric when g has the wrong parity, std::invalid_argument
/// when deg g != d.
RationalPolynomial symmetric_decompose(const RationalPolynomial& g, int d);

/// p / gcd(p, p').
RationalPolynomial squarefree_part(const RationalPolynomial& p);

/// Canonical Sturm sequence p, p', -rem(p, p'), ... of a squarefree
/// polynomial.
class SturmChain {
 public:
  explicit SturmChain(const RationalPolynomial& squarefree);

  const std::vector<RationalPolynomial>& polynomials() const noexcept { return chain_; }

  // Sign changes of the chain at x, zeros skipped.
  std::size_t variations_at(const Rational& x) const;
  std::size_t variations_at_negative_infinity() const;
  std::size_t variations_at_positive_infinity() const;

  // Distinct real roots in (a, b].
  std::size_t count_roots(const Rational& a, const Rational& b) const;

 private:
  std::vector<RationalPolynomial> chain_;
};

/// Distinct real roots of q in (-inf, 0].
std::size_t count_real_roots_nonpositive(const RationalPolynomial& q);

/// Exact: true iff L(-x-1) = ±L(x) and every root of L has real part -1/2.
bool canonical_line_certificate(const RationalPolynomial& poly, int d);

/// Storage type for numeric roots; wide enough to hold every working
/// precision losslessly.
using HighPrecision =
    boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<400>,
                                  boost::multiprecision::et_off>;

struct ComplexRoot {
  HighPrecision re;
  HighPrecision im;
  HighPrecision residual;  // |L(z)| at working precision

  std::complex<double> approx() const {
    return {re.convert_to<double>(), im.convert_to<double>()};
  }
  friend bool operator==(const ComplexRoot&, const ComplexRoot&) = default;
};

/// Working precisions tried by `classify`, in decimal digits.
inline constexpr unsigned kPrecisionLadder[] = {50, 100, 200, 400};

struct RootSet {
  unsigned digits = 0;
  std::vector<ComplexRoot> roots;  // sorted by (re, im)
  HighPrecision max_residual;
};

/// All complex roots with multiplicity by simultaneous (Aberth-Ehrlich)
/// iteration at `digits` decimal digits (one of kPrecisionLadder). Each
/// root satisfies |L(z)| <= tol * sum |c_k| |z|^k. Throws NoConvergence.
RootSet find_roots(const RationalPolynomial& poly, double tol, unsigned digits = 50);

struct RootReport {
  int degree = 0;
  bool symmetric = false;
  // Empty when L fails reciprocity (certificate not applicable).
  std::optional<bool> exact_canonical_line;
  double tolerance = 1e-9;
  unsigned working_digits = 0;
  std::vector<ComplexRoot> roots;
  HighPrecision max_residual;
  HighPrecision min_real_part;
  HighPrecision max_real_part;
  bool on_line_numeric = false;     // |Re z + 1/2| <= tol for all roots
  bool in_canonical_strip = false;  // -1 <= Re z <= 0
  bool in_bldps_strip = false;      // -d <= Re z <= d - 1
  bool in_braun_disc = false;       // |z + 1/2| <= d (d - 1/2)

  bool line_certified() const { return exact_canonical_line.value_or(false); }
  friend bool operator==(const RootReport&, const RootReport&) = default;
};

/// Exact certificate plus numeric roots and region tests, climbing the
/// precision ladder on NoConvergence.
RootReport classify(const RationalPolynomial& poly, int d, double tol = 1e-9);

}  // namespace ehrhart
