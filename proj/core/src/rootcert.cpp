#include "ehrhart/rootcert.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ehrhart {
namespace mp = boost::multiprecision;

RationalPolynomial shift_half(const RationalPolynomial& poly) {
  return poly.compose_linear(Rational(1), Rational(-1, 2));
}

RationalPolynomial symmetric_decompose(const RationalPolynomial& g, int d) {
  if (g.degree() != d) {
    throw std::invalid_argument("symmetric_decompose: degree " + std::to_string(g.degree()) +
                                " != " + std::to_string(d));
  }
  const std::size_t parity = static_cast<std::size_t>(d % 2);
  const auto& c = g.coefficients();
  std::vector<Rational> q;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k % 2 == parity) {
      q.push_back(c[k]);
    } else if (c[k] != 0) {
      throw NotSymmetric("coefficient of t^" + std::to_string(k) +
                         " breaks the symmetry about -1/2");
    }
  }
  return RationalPolynomial(std::move(q));
}

RationalPolynomial squarefree_part(const RationalPolynomial& p) {
  if (p.degree() <= 0) return p;
  return divmod(p, gcd(p, p.derivative())).first;
}

SturmChain::SturmChain(const RationalPolynomial& squarefree) {
  if (squarefree.is_zero()) throw std::invalid_argument("Sturm chain of the zero polynomial");
  chain_.push_back(squarefree);
  RationalPolynomial next = squarefree.derivative();
  while (!next.is_zero()) {
    chain_.push_back(next);
    next = -divmod(chain_[chain_.size() - 2], chain_.back()).second;
  }
}

namespace {

std::size_t count_variations(const std::vector<int>& signs) {
  std::size_t changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

std::size_t SturmChain::variations_at(const Rational& x) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& p : chain_) signs.push_back(p(x).sign());
  return count_variations(signs);
}

std::size_t SturmChain::variations_at_negative_infinity() const {
  std::vector<int> signs;
  for (const auto& p : chain_) {
    int s = p.leading_coefficient().sign();
    signs.push_back(p.degree() % 2 == 0 ? s : -s);
  }
  return count_variations(signs);
}

std::size_t SturmChain::variations_at_positive_infinity() const {
  std::vector<int> signs;
  for (const auto& p : chain_) signs.push_back(p.leading_coefficient().sign());
  return count_variations(signs);
}

std::size_t SturmChain::count_roots(const Rational& a, const Rational& b) const {
  if (b < a) return 0;
  return variations_at(a) - variations_at(b);
}

std::size_t count_real_roots_nonpositive(const RationalPolynomial& q) {
  if (q.is_zero()) throw std::invalid_argument("zero polynomial has infinitely many roots");
  SturmChain chain(squarefree_part(q));
  return chain.variations_at_negative_infinity() - chain.variations_at(Rational(0));
}

bool canonical_line_certificate(const RationalPolynomial& poly, int d) {
  if (d < 1 || poly.degree() != d) return false;
  RationalPolynomial q;
  try {
    q = symmetric_decompose(shift_half(poly), d);
  } catch (const NotSymmetric&) {
    return false;
  }
  // Every root s of q must be real and <= 0, so that t = ±sqrt(s) is
  // purely imaginary.
  const RationalPolynomial r = squarefree_part(q);
  return count_real_roots_nonpositive(r) == static_cast<std::size_t>(r.degree());
}

namespace {

template <class Real>
struct Cx {
  Real re;
  Real im;

  friend Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
  friend Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
  friend Cx operator*(const Cx& a, const Cx& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Cx operator/(const Cx& a, const Cx& b) {
    const Real den = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
  }
  Real abs() const { return hypot(re, im); }
  bool is_zero() const { return re == 0 && im == 0; }
};

template <class Real>
Real to_real(const Rational& r) {
  return Real(numerator_of(r)) / Real(denominator_of(r));
}

// p(z) by Horner together with sum |c_k| |z|^k.
template <class Real>
std::pair<Cx<Real>, Real> evaluate(const std::vector<Real>& c, const Cx<Real>& z) {
  Cx<Real> acc{Real(0), Real(0)};
  Real scale(0);
  const Real az = z.abs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * z + Cx<Real>{*it, Real(0)};
    scale = scale * az + abs(*it);
  }
  return {acc, scale};
}

template <unsigned Digits>
RootSet aberth(const RationalPolynomial& poly, double tol) {
  using Real = mp::number<mp::mpfr_float_backend<Digits>, mp::et_off>;
  using C = Cx<Real>;

  const std::size_t n = static_cast<std::size_t>(poly.degree());
  std::vector<Real> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) c[k] = to_real<Real>(poly.coefficient(k));
  std::vector<Real> dc(n);
  for (std::size_t k = 1; k <= n; ++k) dc[k - 1] = c[k] * static_cast<long>(k);

  const Real eps = pow(Real(10), -static_cast<int>(Digits));
  const Real noise = eps * static_cast<long>(4 * n);

  Real radius(0);
  for (std::size_t k = 0; k < n; ++k) radius = std::max<Real>(radius, Real(abs(c[k] / c[n])));
  radius += 1;

  // Fixed starting configuration: a circle with a phase offset that avoids
  // the real axis.
  const Real two_pi = 2 * acos(Real(-1));
  std::vector<C> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    Real theta = two_pi * static_cast<long>(k) / static_cast<long>(n) + Real(0.4);
    z[k] = C{radius * cos(theta), radius * sin(theta)};
  }

  const int max_iterations = 4000;
  for (int iter = 0; iter < max_iterations; ++iter) {
    bool all_at_noise = true;
    Real max_step(0);
    for (std::size_t k = 0; k < n; ++k) {
      auto [pk, scale] = evaluate(c, z[k]);
      if (pk.abs() <= noise * scale) continue;
      all_at_noise = false;
      auto [dpk, unused] = evaluate(dc, z[k]);
      if (dpk.is_zero()) {
        z[k] = z[k] + C{sqrt(eps), sqrt(eps)};
        continue;
      }
      const C ratio = pk / dpk;
      C repulsion{Real(0), Real(0)};
      for (std::size_t j = 0; j < n; ++j) {
        if (j == k) continue;
        C diff = z[k] - z[j];
        if (diff.is_zero()) diff = C{eps, eps};
        repulsion = repulsion + C{Real(1), Real(0)} / diff;
      }
      const C denom = C{Real(1), Real(0)} - ratio * repulsion;
      const C step = denom.is_zero() ? ratio : ratio / denom;
      z[k] = z[k] - step;
      max_step = std::max<Real>(max_step, Real(step.abs() / (1 + z[k].abs())));
    }
    if (all_at_noise || max_step <= eps * 100) break;
  }

  // Real input: snap near-real roots onto the axis, then pair the rest
  // with their conjugates.
  const Real snap = pow(eps, Real(0.25));
  std::vector<bool> matched(n, false);
  for (std::size_t k = 0; k < n; ++k) {
    if (abs(z[k].im) <= snap * (1 + abs(z[k].re))) {
      z[k].im = 0;
      matched[k] = true;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (matched[k] || z[k].im < 0) continue;
    std::size_t best = n;
    Real best_dist(0);
    for (std::size_t j = 0; j < n; ++j) {
      if (matched[j] || j == k || z[j].im >= 0) continue;
      Real dist = C{z[k].re - z[j].re, z[k].im + z[j].im}.abs();
      if (best == n || dist < best_dist) {
        best = j;
        best_dist = dist;
      }
    }
    if (best == n) continue;
    const C avg{(z[k].re + z[best].re) / 2, (z[k].im - z[best].im) / 2};
    z[k] = avg;
    z[best] = C{avg.re, -avg.im};
    matched[k] = matched[best] = true;
  }

  std::sort(z.begin(), z.end(), [](const C& a, const C& b) {
    return a.re < b.re || (a.re == b.re && a.im < b.im);
  });

  RootSet out;
  out.digits = Digits;
  out.max_residual = 0;
  for (const C& root : z) {
    auto [value, scale] = evaluate(c, root);
    const Real residual = value.abs();
    if (residual > Real(tol) * scale) {
      throw NoConvergence("root finder did not converge at " + std::to_string(Digits) + " digits");
    }
    out.roots.push_back(ComplexRoot{HighPrecision(root.re), HighPrecision(root.im), HighPrecision(residual)});
    out.max_residual = std::max<HighPrecision>(out.max_residual, HighPrecision(residual));
  }
  return out;
}

}  // namespace

RootSet find_roots(const RationalPolynomial& poly, double tol, unsigned digits) {
  if (poly.degree() < 1) throw std::invalid_argument("find_roots needs degree >= 1");
  if (!(tol > 0)) throw std::invalid_argument("find_roots needs a positive tolerance");
  switch (digits) {
    case 50: return aberth<50>(poly, tol);
    case 100: return aberth<100>(poly, tol);
    case 200: return aberth<200>(poly, tol);
    case 400: return aberth<400>(poly, tol);
    default:
      throw std::invalid_argument("unsupported working precision " + std::to_string(digits));
  }
}

RootReport classify(const RationalPolynomial& poly, int d, double tol) {
  if (d < 1 || poly.degree() != d) {
    throw std::invalid_argument("classify: polynomial degree must equal d >= 1");
  }
  RootReport report;
  report.degree = d;
  report.tolerance = tol;
  try {
    symmetric_decompose(shift_half(poly), d);
    report.symmetric = true;
    report.exact_canonical_line = canonical_line_certificate(poly, d);
  } catch (const NotSymmetric&) {
    report.symmetric = false;
  }

  std::optional<RootSet> roots;
  for (std::size_t i = 0; i < std::size(kPrecisionLadder); ++i) {
    try {
      roots = find_roots(poly, tol, kPrecisionLadder[i]);
      break;
    } catch (const NoConvergence&) {
      if (i + 1 == std::size(kPrecisionLadder)) throw;
    }
  }
  report.working_digits = roots->digits;
  report.roots = std::move(roots->roots);
  report.max_residual = roots->max_residual;

  const HighPrecision slack(tol);
  const HighPrecision half(0.5);
  const HighPrecision dd(d);
  const HighPrecision radius = dd * (dd - half);
  report.on_line_numeric = true;
  report.in_canonical_strip = true;
  report.in_bldps_strip = true;
  report.in_braun_disc = true;
  report.min_real_part = report.roots.front().re;
  report.max_real_part = report.roots.front().re;
  for (const auto& z : report.roots) {
    report.min_real_part = std::min<HighPrecision>(report.min_real_part, z.re);
    report.max_real_part = std::max<HighPrecision>(report.max_real_part, z.re);
    if (abs(z.re + half) > slack) report.on_line_numeric = false;
    if (z.re < -1 - slack || z.re > slack) report.in_canonical_strip = false;
    if (z.re < -dd - slack || z.re > dd - 1 + slack) report.in_bldps_strip = false;
    if (hypot(z.re + half, z.im) > radius + slack) report.in_braun_disc = false;
  }
  return report;
}

}  // namespace ehrhart
