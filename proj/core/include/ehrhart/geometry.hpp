#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <memory>
#include <span>
#include <vector>

#include "ehrhart/errors.hpp"
#include "ehrhart/numbers.hpp"

namespace ehrhart {

/// A point of the integer lattice Z^d.
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::vector<Integer> coords) : coords_(std::move(coords)) {}
  LatticeVector(std::initializer_list<long long> coords);

  std::size_t dim() const noexcept { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Integer>& coords() const noexcept { return coords_; }

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
  // Lexicographic.
  friend bool operator<(const LatticeVector& a, const LatticeVector& b) {
    return a.coords_ < b.coords_;
  }

 private:
  std::vector<Integer> coords_;
};

using RationalVector = std::vector<Rational>;

/// The inequality <normal, x> <= offset, normal primitive.
struct Halfspace {
  std::vector<Integer> normal;
  Integer offset;

  Integer evaluate(const LatticeVector& x) const;
  bool contains(const LatticeVector& x) const { return evaluate(x) <= offset; }
  bool is_tight(const LatticeVector& x) const { return evaluate(x) == offset; }

  friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

/// Face counts (f_{-1}, f_0, ..., f_d).
class FVector {
 public:
  // `entries` runs from f_{-1} to f_d; both ends must equal 1.
  explicit FVector(std::vector<Integer> entries);

  std::size_t dim() const noexcept { return entries_.size() - 2; }
  // Index i ranges over -1..d.
  const Integer& operator[](int i) const { return entries_.at(static_cast<std::size_t>(i + 1)); }
  std::span<const Integer> entries() const noexcept { return entries_; }
  bool satisfies_euler() const;

  friend bool operator==(const FVector&, const FVector&) = default;

 private:
  std::vector<Integer> entries_;
};

/// Sorted vertex indices of one face.
using Face = std::vector<std::size_t>;

/// A full-dimensional lattice polytope, immutable once built.
///
/// Vertices and the facet list are fixed at construction. The face lattice
/// is computed on first request and cached; concurrent readers are safe.
class Polytope {
 public:
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<LatticeVector>& vertices() const noexcept { return vertices_; }
  // Irredundant, sorted lexicographically by normal.
  const std::vector<Halfspace>& facets() const noexcept { return facets_; }
  // Indices of vertices lying on facet `i`.
  const Face& facet_vertices(std::size_t i) const { return facet_vertices_.at(i); }
  // faces()[k] lists the k-dimensional faces, k = 0..d-1.
  const std::vector<std::vector<Face>>& faces() const;
  bool origin_interior() const noexcept;

 private:
  friend Polytope build_polytope(std::span<const LatticeVector> points);

  struct LatticeCache;

  std::size_t dim_ = 0;
  std::vector<LatticeVector> vertices_;
  std::vector<Halfspace> facets_;
  std::vector<Face> facet_vertices_;
  std::shared_ptr<LatticeCache> lattice_;
};

/// Convex hull of `points`; non-extreme and duplicate points are dropped.
/// Throws DimensionMismatch or NotFullDimensional.
Polytope build_polytope(std::span<const LatticeVector> points);
inline Polytope build_polytope(std::initializer_list<LatticeVector> points) {
  return build_polytope(std::span<const LatticeVector>(points.begin(), points.size()));
}

const std::vector<Halfspace>& facets(const Polytope& p);

FVector f_vector(const Polytope& p);

/// Vertices of the dual polytope, one per facet (normal / offset), in facet
/// order. Throws OriginNotInterior.
std::vector<RationalVector> dual(const Polytope& p);

bool is_reflexive(const Polytope& p);

// Requires the origin in the interior; every facet then has exactly d
// vertices forming a lattice basis.
bool is_smooth(const Polytope& p);

/// conv{(v, 0), (0, w)}; throws OriginNotInterior.
Polytope free_sum(const Polytope& p, const Polytope& q);

}  // namespace ehrhart
