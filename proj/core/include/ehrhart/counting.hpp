#pragma once

#include <cstdint>

#include "ehrhart/geometry.hpp"
#include "ehrhart/polynomial.hpp"

namespace ehrhart {

struct CountOptions {
  // The bounding box is split into this many slabs along the first
  // coordinate and counted concurrently. Results do not depend on it.
  unsigned threads = 1;
};

/// |mP ∩ Z^d|. m = 0 gives 1.
Integer count_points(const Polytope& p, std::uint64_t m, CountOptions options = {});

/// Lattice points of mP lying on at least one facet hyperplane; m >= 1.
Integer count_boundary(const Polytope& p, std::uint64_t m, CountOptions options = {});

/// Degree-d interpolant of count_points at m = 0..d.
RationalPolynomial ehrhart(const Polytope& p, CountOptions options = {});

/// Checks L_P(m) = L_{∂P}(m) + L_P(m-1) for 1 <= m <= max_m.
/// Throws NotReflexive.
bool verify_layers(const Polytope& p, std::uint64_t max_m, CountOptions options = {});

/// L(-x-1) == (-1)^d L(x) as polynomials.
bool verify_reciprocity(const RationalPolynomial& ehrhart_poly, int d);

/// Euclidean volume, read off the leading Ehrhart coefficient.
Rational volume(const Polytope& p, CountOptions options = {});

}  // namespace ehrhart
