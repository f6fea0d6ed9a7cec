#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ehrhart/counting.hpp"
#include "ehrhart/geometry.hpp"
#include "ehrhart/polynomial.hpp"

namespace ehrhart {

/// The numbers that pin down the Ehrhart polynomial of a smooth polytope.
struct SmoothInvariants {
  int dim = 0;
  FVector fvec{std::vector<Integer>{1, 0, 1}};
  Integer f0;
  Integer f1;
  Integer b2;  // |∂(2P) ∩ Z^d|
  Rational vol;
};

// Computes every field from the polytope itself (faces, boundary count,
// leading Ehrhart coefficient).
SmoothInvariants smooth_invariants(const Polytope& p, CountOptions options = {});

/// rational + coefficient * sqrt(radicand), radicand >= 0.
struct QuadraticSurd {
  Rational rational;
  Rational coefficient;
  Rational radicand;

  // Exact sign.
  int sign() const;
  double approx() const;
  std::string to_string() const;

  friend bool operator==(const QuadraticSurd&, const QuadraticSurd&) = default;
};

/// Value of `poly` at a surd x = p + q*sqrt(r), written as a + b*sqrt(r).
std::pair<Rational, Rational> evaluate_at(const RationalPolynomial& poly, const QuadraticSurd& x);

/// Imaginary parts of the Ehrhart roots -1/2 + beta*i of a smooth polytope,
/// as exact beta^2 values; one entry per conjugate pair.
struct RootBetas {
  int dim = 0;
  bool has_real_root = false;  // beta = 0 (odd dimension)
  std::vector<QuadraticSurd> beta_squared;
};

RationalPolynomial ehrhart_from_fvector(const FVector& fvec);
RationalPolynomial boundary_from_fvector(const FVector& fvec);

/// Closed-form Ehrhart polynomial of a smooth polytope, d in 2..5.
/// b2 is required for d = 4, 5. Throws UnsupportedDimension, MissingB2.
RationalPolynomial ehrhart_closed(int d, const Integer& f0, const std::optional<Integer>& b2 = {});

/// Throws UnsupportedDimension, MissingB2, DegenerateDenominator, and
/// SignConditionViolated when the data cannot come from a smooth polytope.
RootBetas root_betas(int d, const Integer& f0, const std::optional<Integer>& b2 = {});

/// Biquadratic in beta satisfied by the roots on the line (d = 4, 5):
/// returns the coefficients {c0, c1, c2} of c2*y^2 + c1*y + c0, y = beta^2.
RationalPolynomial beta_biquadratic(int d, const Integer& f0, const Integer& b2);

/// Largest possible vertex count of a smooth d-polytope.
int casagrande_max(int d);

struct BoundsReport {
  int dim = 0;
  bool vertex_lower = false;      // f0 >= d + 1
  bool vertex_upper = false;      // f0 <= casagrande_max(d)
  bool b2_range = false;          // 5f0-10 <= b2 <= 5f0 (d=4); 42f0-105 <= 7b2 <= 52f0-90 (d=5)
  bool discriminant = false;      // (b2-8f0)^2 > 24(b2-2f0) (d=4); the d=5 analogue

  bool all_pass() const { return vertex_lower && vertex_upper && b2_range && discriminant; }
  friend bool operator==(const BoundsReport&, const BoundsReport&) = default;
};

/// Throws UnsupportedDimension for d outside {4, 5}.
BoundsReport check_bounds(int d, const Integer& f0, const Integer& b2);

struct BhwConditions {
  bool boundary_bound = false;   // 2|∂P ∩ Z^4| <= 9 vol + 16
  bool discriminant = false;     // (|∂P ∩ Z^4| - 4 vol)^2 >= 16 vol
  friend bool operator==(const BhwConditions&, const BhwConditions&) = default;
};

BhwConditions bhw_conditions(const Integer& boundary_points, const Rational& vol);

}  // namespace ehrhart
