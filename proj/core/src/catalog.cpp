#include "ehrhart/catalog.hpp"

namespace ehrhart {
namespace {

LatticeVector unit(std::size_t d, std::size_t i, long long value) {
  std::vector<Integer> c(d, Integer(0));
  c[i] = value;
  return LatticeVector(std::move(c));
}

}  // namespace

Polytope reflexive_simplex(std::size_t d) {
  std::vector<LatticeVector> pts;
  for (std::size_t i = 0; i < d; ++i) pts.push_back(unit(d, i, 1));
  pts.emplace_back(std::vector<Integer>(d, Integer(-1)));
  return build_polytope(pts);
}

Polytope cross_polytope(std::size_t d) {
  std::vector<LatticeVector> pts;
  for (std::size_t i = 0; i < d; ++i) {
    pts.push_back(unit(d, i, 1));
    pts.push_back(unit(d, i, -1));
  }
  return build_polytope(pts);
}

Polytope smooth_hexagon() {
  return build_polytope({{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}});
}

Polytope unit_segment() { return build_polytope({{-1}, {1}}); }

std::vector<CatalogEntry> smooth_catalog() {
  const Polytope s2 = reflexive_simplex(2);
  const Polytope s3 = reflexive_simplex(3);
  const Polytope c3 = cross_polytope(3);
  std::vector<CatalogEntry> out;
  out.push_back({"S2", s2});
  out.push_back({"hexagon", smooth_hexagon()});
  out.push_back({"C2", cross_polytope(2)});
  out.push_back({"S3", s3});
  out.push_back({"C3", c3});
  out.push_back({"S4", reflexive_simplex(4)});
  out.push_back({"C4", cross_polytope(4)});
  out.push_back({"S2+S2", free_sum(s2, s2)});
  out.push_back({"S5", reflexive_simplex(5)});
  out.push_back({"C5", cross_polytope(5)});
  out.push_back({"S2+S3", free_sum(s2, s3)});
  out.push_back({"S2+C3", free_sum(s2, c3)});
  return out;
}

std::vector<CatalogEntry> extended_smooth_catalog() {
  std::vector<CatalogEntry> out = smooth_catalog();
  const Polytope seg = unit_segment();
  const Polytope s2 = reflexive_simplex(2);
  const Polytope s3 = reflexive_simplex(3);
  const Polytope hex = smooth_hexagon();
  out.push_back({"I+S2", free_sum(seg, s2)});
  out.push_back({"I+hexagon", free_sum(seg, hex)});
  out.push_back({"I+S3", free_sum(seg, s3)});
  out.push_back({"S2+hexagon", free_sum(s2, hex)});
  out.push_back({"hexagon+hexagon", free_sum(hex, hex)});
  out.push_back({"hexagon+S3", free_sum(hex, s3)});
  out.push_back({"I+S4", free_sum(seg, reflexive_simplex(4))});
  return out;
}

std::string OffLineFixture::label() const {
  std::string out;
  for (int id : ids) {
    if (!out.empty()) out += "/";
    out += std::to_string(id);
  }
  return out;
}

std::vector<OffLineFixture> dim6_offline_fixtures() {
  auto q = [](long p, long r) { return Rational(p, r); };
  return {
      {{1895, 5817},
       RationalPolynomial{1, q(31, 10), q(257, 60), q(5, 2), q(19, 12), q(2, 5), q(2, 15)}},
      {{1930},
       RationalPolynomial{1, q(7, 2), q(175, 36), q(35, 12), q(35, 18), q(7, 12), q(7, 36)}},
      {{4853}, RationalPolynomial{1, q(7, 2), q(21, 4), q(15, 4), q(5, 2), q(3, 4), q(1, 4)}},
  };
}

}  // namespace ehrhart
