#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ehrhart/numbers.hpp"

namespace ehrhart::detail {

using RationalMatrix = std::vector<std::vector<Rational>>;
using IntegerMatrix = std::vector<std::vector<Integer>>;

// Row-reduces in place; returns the rank.
std::size_t row_reduce(RationalMatrix& rows);

std::size_t rank(RationalMatrix rows);

// Rank of {p - p0 : p in points}.
std::size_t affine_rank(const std::vector<const std::vector<Integer>*>& points);

// A spanning vector of the kernel of `rows` (each of length `cols`) when
// the kernel is exactly one-dimensional, nullopt otherwise.
std::optional<std::vector<Rational>> kernel_line(RationalMatrix rows, std::size_t cols);

// Fraction-free (Bareiss) determinant of a square integer matrix.
Integer determinant(IntegerMatrix m);

// Scales a nonzero rational vector to the primitive integer vector on the
// same ray.
std::vector<Integer> primitive_integer(const std::vector<Rational>& v);

}  // namespace ehrhart::detail
