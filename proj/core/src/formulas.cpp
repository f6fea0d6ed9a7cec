#include "ehrhart/formulas.hpp"

#include <cmath>
#include <string>

namespace ehrhart {
namespace {

// C(m + shift, k) as a polynomial in m.
RationalPolynomial binomial_poly(long shift, std::size_t k) {
  RationalPolynomial out = RationalPolynomial::constant(1);
  Rational factorial(1);
  for (std::size_t j = 0; j < k; ++j) {
    out *= RationalPolynomial({Rational(shift - static_cast<long>(j)), Rational(1)});
    factorial *= static_cast<long>(j + 1);
  }
  return out * (1 / factorial);
}

void require_b2(int d, const std::optional<Integer>& b2) {
  if ((d == 4 || d == 5) && !b2) throw MissingB2("b2 is required in dimension " + std::to_string(d));
}

void require_closed_form_dim(int d) {
  if (d < 2 || d > 5) {
    throw UnsupportedDimension("closed forms exist for d = 2..5, got " + std::to_string(d));
  }
}

QuadraticSurd plain(Rational v) { return QuadraticSurd{std::move(v), Rational(0), Rational(0)}; }

}  // namespace

int QuadraticSurd::sign() const {
  const int sp = rational.sign();
  const int sq = coefficient.sign();
  if (sq == 0 || radicand == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  const Rational lhs = rational * rational;
  const Rational rhs = coefficient * coefficient * radicand;
  if (lhs > rhs) return sp;
  if (lhs < rhs) return sq;
  return 0;
}

double QuadraticSurd::approx() const {
  return rational.convert_to<double>() +
         coefficient.convert_to<double>() * std::sqrt(radicand.convert_to<double>());
}

std::string QuadraticSurd::to_string() const {
  if (coefficient == 0 || radicand == 0) return ehrhart::to_string(rational);
  std::string root = "sqrt(" + ehrhart::to_string(radicand) + ")";
  std::string out;
  if (rational != 0) out = ehrhart::to_string(rational) + (coefficient.sign() < 0 ? " - " : " + ");
  else if (coefficient.sign() < 0) out = "-";
  Rational mag = coefficient.sign() < 0 ? Rational(-coefficient) : coefficient;
  if (mag != 1) out += ehrhart::to_string(mag) + "*";
  return out + root;
}

std::pair<Rational, Rational> evaluate_at(const RationalPolynomial& poly, const QuadraticSurd& x) {
  Rational a(0);
  Rational b(0);
  const auto& c = poly.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    Rational na = a * x.rational + b * x.coefficient * x.radicand + *it;
    Rational nb = a * x.coefficient + b * x.rational;
    a = std::move(na);
    b = std::move(nb);
  }
  return {a, b};
}

SmoothInvariants smooth_invariants(const Polytope& p, CountOptions options) {
  SmoothInvariants inv;
  inv.dim = static_cast<int>(p.dim());
  inv.fvec = f_vector(p);
  inv.f0 = inv.fvec[0];
  inv.f1 = inv.fvec[1];
  inv.b2 = count_boundary(p, 2, options);
  inv.vol = volume(p, options);
  return inv;
}

RationalPolynomial ehrhart_from_fvector(const FVector& fvec) {
  const int d = static_cast<int>(fvec.dim());
  RationalPolynomial out;
  for (int i = -1; i <= d - 1; ++i) {
    out += binomial_poly(0, static_cast<std::size_t>(i + 1)) * Rational(fvec[i]);
  }
  return out;
}

RationalPolynomial boundary_from_fvector(const FVector& fvec) {
  const int d = static_cast<int>(fvec.dim());
  RationalPolynomial out;
  for (int i = 0; i <= d - 1; ++i) {
    out += binomial_poly(-1, static_cast<std::size_t>(i)) * Rational(fvec[i]);
  }
  return out;
}

RationalPolynomial ehrhart_closed(int d, const Integer& f0_int, const std::optional<Integer>& b2_int) {
  require_closed_form_dim(d);
  require_b2(d, b2_int);
  const Rational f0(f0_int);
  switch (d) {
    case 2:
      return {Rational(1), f0 / 2, f0 / 2};
    case 3:
      return {Rational(1), (f0 + 10) / 6, (f0 - 2) / 2, (f0 - 2) / 3};
    case 4: {
      const Rational b2(*b2_int);
      return {Rational(1), (8 * f0 - b2) / 12, (14 * f0 - b2) / 24, -(2 * f0 - b2) / 12,
              -(2 * f0 - b2) / 24};
    }
    default: {
      const Rational b2(*b2_int);
      return {Rational(1),
              (14 * f0 - b2 + 94) / 60,
              (16 * f0 - b2 - 30) / 24,
              (f0 - 2) / 3,
              -(4 * f0 - b2 - 6) / 24,
              -(4 * f0 - b2 - 6) / 60};
    }
  }
}

RationalPolynomial beta_biquadratic(int d, const Integer& f0, const Integer& b2) {
  if (d == 4) {
    return {Rational(3 * (128 + 3 * b2 - 22 * f0)), Rational(8 * (5 * b2 - 34 * f0)),
            Rational(16 * (b2 - 2 * f0))};
  }
  if (d == 5) {
    return {Rational(2134 + 9 * b2 - 116 * f0), Rational(40 * (22 + b2 - 12 * f0)),
            Rational(16 * (6 + b2 - 4 * f0))};
  }
  throw UnsupportedDimension("biquadratic exists for d = 4, 5, got " + std::to_string(d));
}

RootBetas root_betas(int d, const Integer& f0_int, const std::optional<Integer>& b2_int) {
  require_closed_form_dim(d);
  require_b2(d, b2_int);
  const Rational f0(f0_int);
  RootBetas out;
  out.dim = d;
  out.has_real_root = d % 2 == 1;

  if (d == 2 || d == 3) {
    const Rational den = d == 2 ? f0 : f0 - 2;
    if (den == 0) throw DegenerateDenominator("beta^2 formula divides by zero");
    QuadraticSurd beta2 = plain(Rational(-1, 4) + (d == 2 ? 2 : 6) / den);
    if (beta2.sign() <= 0) {
      throw SignConditionViolated("beta^2 = " + beta2.to_string() + " is not positive");
    }
    out.beta_squared.push_back(std::move(beta2));
    return out;
  }

  // Both roots of the biquadratic must be real and positive: positive
  // leading and constant terms, negative middle term, positive discriminant.
  const RationalPolynomial quad = beta_biquadratic(d, f0_int, *b2_int);
  const Rational& c0 = quad.coefficient(0);
  const Rational& c1 = quad.coefficient(1);
  const Rational& c2 = quad.coefficient(2);
  if (c2 == 0) throw DegenerateDenominator("beta^2 formula divides by zero");
  if (!(c2 > 0 && c1 < 0 && c0 > 0 && c1 * c1 - 4 * c2 * c0 > 0)) {
    throw SignConditionViolated("biquadratic sign conditions fail for (f0, b2) = (" +
                                f0_int.str() + ", " + b2_int->str() + ")");
  }

  const Rational b2(*b2_int);
  Rational centre;
  Rational radicand;
  if (d == 4) {
    const Rational den = b2 - 2 * f0;
    centre = Rational(-17, 4) + 3 * b2 / den;
    radicand = 1 - 12 * (f0 + 2) / den + 36 * f0 * f0 / (den * den);
  } else {
    const Rational den = 6 + b2 - 4 * f0;
    centre = Rational(-5, 4) + 10 * (f0 - 2) / den;
    radicand = 1 - 20 * (f0 + 4) / den + 100 * (f0 - 2) * (f0 - 2) / (den * den);
  }
  out.beta_squared.push_back(QuadraticSurd{centre, Rational(1), radicand});
  out.beta_squared.push_back(QuadraticSurd{centre, Rational(-1), radicand});
  for (const auto& v : out.beta_squared) {
    if (radicand <= 0 || v.sign() <= 0) {
      throw SignConditionViolated("beta^2 = " + v.to_string() + " is not real positive");
    }
  }
  return out;
}

int casagrande_max(int d) {
  if (d < 1) throw std::invalid_argument("dimension must be positive");
  return d % 2 == 0 ? 3 * d : 3 * d - 1;
}

BoundsReport check_bounds(int d, const Integer& f0, const Integer& b2) {
  if (d != 4 && d != 5) {
    throw UnsupportedDimension("bounds are tabulated for d = 4, 5, got " + std::to_string(d));
  }
  BoundsReport r;
  r.dim = d;
  r.vertex_lower = f0 >= d + 1;
  r.vertex_upper = f0 <= casagrande_max(d);
  if (d == 4) {
    r.b2_range = 5 * f0 - 10 <= b2 && b2 <= 5 * f0;
    const Integer t = b2 - 8 * f0;
    r.discriminant = t * t > 24 * (b2 - 2 * f0);
  } else {
    r.b2_range = 42 * f0 - 105 <= 7 * b2 && 7 * b2 <= 52 * f0 - 90;
    const Integer e = 6 + b2 - 4 * f0;
    r.discriminant = 100 * (f0 - 2) * (f0 - 2) + e * e > 20 * e * (f0 + 4);
  }
  return r;
}

BhwConditions bhw_conditions(const Integer& boundary_points, const Rational& vol) {
  const Rational b(boundary_points);
  const Rational t = b - 4 * vol;
  return BhwConditions{2 * b <= 9 * vol + 16, t * t >= 16 * vol};
}

}  // namespace ehrhart
