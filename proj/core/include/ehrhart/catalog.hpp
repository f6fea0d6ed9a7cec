#pragma once

#include <string>
#include <vector>

#include "ehrhart/geometry.hpp"
#include "ehrhart/polynomial.hpp"

namespace ehrhart {

// conv{e_1, ..., e_d, -(e_1 + ... + e_d)}
Polytope reflexive_simplex(std::size_t d);
// conv{±e_1, ..., ±e_d}
Polytope cross_polytope(std::size_t d);
// conv{±(1,0), ±(0,1), ±(1,1)}
Polytope smooth_hexagon();
// [-1, 1]
Polytope unit_segment();

struct CatalogEntry {
  std::string name;
  Polytope polytope;
};

/// Smooth polytopes in dimensions 2..5: S2, hexagon, C2, S3, C3, S4, C4,
/// S2+S2, S5, C5, S2+S3, S2+C3 ("+" is the free sum).
std::vector<CatalogEntry> smooth_catalog();

/// smooth_catalog() plus further free sums of segments, simplices and the
/// hexagon.
std::vector<CatalogEntry> extended_smooth_catalog();

/// Ehrhart polynomial of a six-dimensional smooth polytope with roots off
/// the line Re z = -1/2, labelled by Graded Ring Database ids.
struct OffLineFixture {
  std::vector<int> ids;
  RationalPolynomial poly;
  std::string label() const;
};

/// The three distinct polynomials (ids 1895 and 5817 share one).
std::vector<OffLineFixture> dim6_offline_fixtures();

}  // namespace ehrhart
