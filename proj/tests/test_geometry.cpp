#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "ehrhart/catalog.hpp"
#include "ehrhart/geometry.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace ehrhart;

namespace {

std::vector<LatticeVector> sorted_vertices(const Polytope& p) {
  auto v = p.vertices();
  std::sort(v.begin(), v.end());
  return v;
}

Halfspace hs(std::vector<Integer> n, Integer c) { return Halfspace{std::move(n), std::move(c)}; }

using Line = std::tuple<long long, long long, long long>;  // a x + b y <= c

// Pairwise supporting-line oracle for polygons: for every pair of input
// points take the line through them and keep it if every point lies on one
// side. Collinear triples collapse after normalization.
std::set<Line> pairwise_support(const std::vector<std::pair<long long, long long>>& pts) {
  std::set<Line> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (i == j || pts[i] == pts[j]) continue;
      long long a = pts[j].second - pts[i].second;
      long long b = pts[i].first - pts[j].first;
      long long g = std::gcd(a, b);
      a /= g;
      b /= g;
      long long c = a * pts[i].first + b * pts[i].second;
      bool all_below = std::all_of(pts.begin(), pts.end(),
                                   [&](auto& p) { return a * p.first + b * p.second <= c; });
      if (all_below) out.insert({a, b, c});
    }
  }
  return out;
}

std::set<Line> as_lines(const Polytope& p) {
  std::set<Line> out;
  for (const auto& h : facets(p)) {
    out.insert({h.normal[0].convert_to<long long>(), h.normal[1].convert_to<long long>(),
                h.offset.convert_to<long long>()});
  }
  return out;
}

}  // namespace

TEST(BuildPolytope, KeepsExtremePoints) {
  auto t = build_polytope({{1, 0}, {0, 1}, {-1, -1}});
  EXPECT_EQ(t.dim(), 2u);
  EXPECT_EQ(t.vertices().size(), 3u);
}

TEST(BuildPolytope, DropsInteriorAndDuplicatePoints) {
  auto t = build_polytope({{1, 0}, {0, 1}, {-1, -1}, {0, 0}, {1, 0}});
  // Membership oracle: (0,0) is strictly inside the hand-derived
  // inequalities x+y <= 1, -2x+y <= 1, x-2y <= 1.
  EXPECT_EQ(oracle::brute_force({{1, 1}, {-2, 1}, {1, -2}}, 2, 1, 0).boundary, 0);
  std::vector<LatticeVector> expected{{-1, -1}, {0, 1}, {1, 0}};
  EXPECT_EQ(sorted_vertices(t), expected);
}

TEST(BuildPolytope, DropsPointsInsideEdges) {
  auto sq = build_polytope({{0, 0}, {1, 0}, {2, 0}, {2, 1}, {2, 2}, {0, 2}, {1, 1}});
  EXPECT_EQ(sq.vertices().size(), 4u);
}

TEST(BuildPolytope, RejectsDegenerateInput) {
  EXPECT_THROW(build_polytope({{0, 0}, {1, 0}, {2, 0}}), NotFullDimensional);
  EXPECT_THROW(build_polytope({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}}), NotFullDimensional);
  EXPECT_THROW(build_polytope({{0, 0}, {1, 0, 0}, {0, 1}}), DimensionMismatch);
  EXPECT_THROW(build_polytope(std::vector<LatticeVector>{}), NotFullDimensional);
}

TEST(Facets, Triangle) {
  auto t = build_polytope({{1, 0}, {0, 1}, {-1, -1}});
  std::vector<Halfspace> expected{hs({-2, 1}, 1), hs({1, -2}, 1), hs({1, 1}, 1)};
  EXPECT_EQ(facets(t), expected);
  EXPECT_EQ(as_lines(t), pairwise_support({{1, 0}, {0, 1}, {-1, -1}}));
}

TEST(Facets, CrossPolygon) {
  auto c = cross_polytope(2);
  EXPECT_EQ(as_lines(c), (std::set<Line>{{1, 1, 1}, {1, -1, 1}, {-1, 1, 1}, {-1, -1, 1}}));
}

TEST(Facets, UnitSimplex) {
  auto s = build_polytope({{0, 0}, {1, 0}, {0, 1}});
  EXPECT_EQ(as_lines(s), (std::set<Line>{{-1, 0, 0}, {0, -1, 0}, {1, 1, 1}}));
}

TEST(Facets, MatchPairwiseOracleOnRandomPolygons) {
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::pair<long long, long long>> pts;
    const int n = static_cast<int>(gen::integer(3, 12));
    for (int i = 0; i < n; ++i) pts.emplace_back(gen::integer(-6, 6), gen::integer(-6, 6));
    std::vector<LatticeVector> lv;
    for (auto& [x, y] : pts) lv.push_back(LatticeVector{x, y});
    std::optional<Polytope> built;
    try {
      built = build_polytope(lv);
    } catch (const NotFullDimensional&) {
      continue;
    }
    const Polytope& p = *built;
    EXPECT_EQ(as_lines(p), pairwise_support(pts)) << "trial " << trial;
    // A polygon has as many vertices as edges.
    EXPECT_EQ(p.vertices().size(), facets(p).size());
  }
}

TEST(Facets, PrimitiveAndSupporting) {
  for (const auto& [name, p] : extended_smooth_catalog()) {
    const std::size_t d = p.dim();
    for (std::size_t i = 0; i < facets(p).size(); ++i) {
      const auto& h = facets(p)[i];
      Integer g = 0;
      for (const auto& a : h.normal) g = gcd(g, a);
      EXPECT_EQ(g, 1) << name;
      for (const auto& v : p.vertices()) EXPECT_TRUE(h.contains(v)) << name;
      EXPECT_GE(p.facet_vertices(i).size(), d) << name;
      for (auto idx : p.facet_vertices(i)) EXPECT_TRUE(h.is_tight(p.vertices()[idx])) << name;
    }
    EXPECT_TRUE(std::is_sorted(facets(p).begin(), facets(p).end(),
                               [](const Halfspace& a, const Halfspace& b) { return a.normal < b.normal; }))
        << name;
  }
}

// Dropping any facet must admit a lattice point of mP (m <= 2) that the
// full system rejects.
TEST(Facets, Irredundant) {
  for (const auto& [name, p] : smooth_catalog()) {
    const int d = static_cast<int>(p.dim());
    if (d > 4) continue;
    std::vector<oracle::Row> rows;
    for (const auto& h : facets(p)) {
      ASSERT_EQ(h.offset, 1) << name;
      oracle::Row r;
      for (const auto& a : h.normal) r.push_back(a.convert_to<std::int64_t>());
      rows.push_back(r);
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      auto fewer = rows;
      fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(i));
      bool enlarged = false;
      for (int m = 1; m <= 2 && !enlarged; ++m) {
        const std::int64_t box = 3 * m;
        enlarged = oracle::brute_force(fewer, d, m, box).inside > oracle::brute_force(rows, d, m, box).inside;
      }
      EXPECT_TRUE(enlarged) << name << " facet " << i;
    }
  }
}

TEST(FVector, Examples) {
  auto f = [](std::initializer_list<int> xs) {
    std::vector<Integer> v(xs.begin(), xs.end());
    return FVector(v);
  };
  EXPECT_EQ(f_vector(build_polytope({{1, 0}, {0, 1}, {-1, -1}})), f({1, 3, 3, 1}));
  EXPECT_EQ(f_vector(cross_polytope(4)), f({1, 8, 24, 32, 16, 1}));
  EXPECT_EQ(f_vector(reflexive_simplex(4)), f({1, 5, 10, 10, 5, 1}));
  EXPECT_EQ(f_vector(smooth_hexagon()), f({1, 6, 6, 1}));
  auto cube = build_polytope({{1, 1, 1}, {1, 1, -1}, {1, -1, 1}, {1, -1, -1},
                              {-1, 1, 1}, {-1, 1, -1}, {-1, -1, 1}, {-1, -1, -1}});
  EXPECT_EQ(f_vector(cube), f({1, 8, 12, 6, 1}));
  EXPECT_THROW(FVector(std::vector<Integer>{1, 3, 3, 2}), std::invalid_argument);
}

TEST(FVector, CrossPolytopeBinomials) {
  for (std::size_t d = 2; d <= 5; ++d) {
    auto fv = f_vector(cross_polytope(d));
    for (int k = 0; k < static_cast<int>(d); ++k) {
      Integer binom = 1;
      for (int j = 0; j < k + 1; ++j) binom = binom * (static_cast<int>(d) - j) / (j + 1);
      EXPECT_EQ(fv[k], binom << (k + 1)) << "d=" << d << " k=" << k;
    }
  }
}

TEST(FVector, EulerRelation) {
  for (const auto& [name, p] : extended_smooth_catalog()) {
    auto fv = f_vector(p);
    EXPECT_TRUE(fv.satisfies_euler()) << name;
    EXPECT_EQ(fv[0], p.vertices().size()) << name;
    EXPECT_EQ(fv[static_cast<int>(p.dim()) - 1], facets(p).size()) << name;
  }
}

TEST(Dual, Examples) {
  auto sorted = [](std::vector<RationalVector> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  auto r = [](long long a, long long b) { return RationalVector{Rational(a), Rational(b)}; };
  EXPECT_EQ(sorted(dual(cross_polytope(2))), sorted({r(1, 1), r(1, -1), r(-1, 1), r(-1, -1)}));
  EXPECT_EQ(sorted(dual(build_polytope({{1, 0}, {0, 1}, {-1, -1}}))),
            sorted({r(1, 1), r(1, -2), r(-2, 1)}));
  auto cube = build_polytope({{1, 1, 1}, {1, 1, -1}, {1, -1, 1}, {1, -1, -1},
                              {-1, 1, 1}, {-1, 1, -1}, {-1, -1, 1}, {-1, -1, -1}});
  std::vector<RationalVector> axes;
  for (int i = 0; i < 3; ++i) {
    for (int s : {-1, 1}) {
      RationalVector e(3, Rational(0));
      e[i] = s;
      axes.push_back(e);
    }
  }
  EXPECT_EQ(sorted(dual(cube)), sorted(axes));
  // Non-reflexive duals have fractional vertices.
  auto diamond = build_polytope({{1, 0}, {-1, 0}, {0, 2}, {0, -2}});
  auto dv = sorted(dual(diamond));
  EXPECT_EQ(dv.front(), (RationalVector{Rational(-1), Rational(-1, 2)}));
  EXPECT_THROW(dual(build_polytope({{0, 0}, {1, 0}, {0, 1}})), OriginNotInterior);
}

TEST(Dual, IsAnInvolutionOnReflexivePolytopes) {
  for (const auto& [name, p] : extended_smooth_catalog()) {
    auto dv = dual(p);
    std::vector<LatticeVector> lattice;
    for (const auto& v : dv) {
      std::vector<Integer> c;
      for (const auto& x : v) {
        ASSERT_EQ(denominator_of(x), 1) << name;
        c.push_back(numerator_of(x));
      }
      lattice.emplace_back(c);
    }
    auto back = dual(build_polytope(lattice));
    std::vector<LatticeVector> again;
    for (const auto& v : back) {
      std::vector<Integer> c;
      for (const auto& x : v) c.push_back(numerator_of(x));
      again.emplace_back(c);
    }
    std::sort(again.begin(), again.end());
    EXPECT_EQ(again, sorted_vertices(p)) << name;
  }
}

TEST(Reflexive, Examples) {
  EXPECT_TRUE(is_reflexive(build_polytope({{1, 0}, {0, 1}, {-1, -1}})));
  EXPECT_FALSE(is_reflexive(build_polytope({{1, 0}, {-1, 0}, {0, 2}, {0, -2}})));
  EXPECT_FALSE(is_reflexive(build_polytope({{0, 0}, {1, 0}, {0, 1}})));
  EXPECT_TRUE(is_reflexive(build_polytope({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}})));
}

TEST(Smooth, Examples) {
  EXPECT_TRUE(is_smooth(cross_polytope(2)));
  EXPECT_FALSE(is_smooth(build_polytope({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}})));
  EXPECT_TRUE(is_smooth(cross_polytope(3)));
  EXPECT_FALSE(is_smooth(build_polytope({{0, 0}, {1, 0}, {0, 1}})));
  // Reflexive but with a non-simplicial facet.
  EXPECT_FALSE(is_smooth(build_polytope({{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 1}, {-1, -1}, {1, -1}})));
}

TEST(Smooth, ImpliesReflexive) {
  for (const auto& [name, p] : extended_smooth_catalog()) {
    EXPECT_TRUE(is_smooth(p)) << name;
    EXPECT_TRUE(is_reflexive(p)) << name;
  }
}

TEST(FreeSum, Examples) {
  auto c2 = free_sum(unit_segment(), unit_segment());
  EXPECT_EQ(sorted_vertices(c2), sorted_vertices(cross_polytope(2)));
  auto s2 = reflexive_simplex(2);
  auto s22 = free_sum(s2, s2);
  EXPECT_EQ(s22.dim(), 4u);
  EXPECT_EQ(s22.vertices().size(), 6u);
  EXPECT_THROW(free_sum(build_polytope({{0, 0}, {1, 0}, {0, 1}}), s2), OriginNotInterior);
}

TEST(FreeSum, FacetsArePairs) {
  auto s2 = reflexive_simplex(2);
  auto h = smooth_hexagon();
  auto sum = free_sum(s2, h);
  EXPECT_EQ(facets(sum).size(), facets(s2).size() * facets(h).size());
  std::set<std::vector<Integer>> expected;
  for (const auto& a : facets(s2)) {
    for (const auto& b : facets(h)) {
      auto n = a.normal;
      n.insert(n.end(), b.normal.begin(), b.normal.end());
      expected.insert(n);
    }
  }
  std::set<std::vector<Integer>> got;
  for (const auto& f : facets(sum)) got.insert(f.normal);
  EXPECT_EQ(got, expected);
  EXPECT_TRUE(is_smooth(sum));
}

TEST(Faces, EveryFacetEqualitySetIsOneFace) {
  for (const auto& [name, p] : smooth_catalog()) {
    const auto& faces = p.faces();
    ASSERT_EQ(faces.size(), p.dim()) << name;
    std::set<Face> top(faces.back().begin(), faces.back().end());
    for (std::size_t i = 0; i < facets(p).size(); ++i) EXPECT_TRUE(top.count(p.facet_vertices(i))) << name;
    EXPECT_EQ(top.size(), facets(p).size()) << name;
  }
}
