#include "ehrhart/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <mutex>
#include <set>
#include <string>

#include "linalg.hpp"

namespace ehrhart {
namespace {

// Calls visit(indices) for every k-subset of {0..n-1} in lexicographic order.
template <class Visit>
void for_each_combination(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    visit(static_cast<const std::vector<std::size_t>&>(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Integer dot(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  Integer s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Supporting hyperplanes through every affinely independent d-subset of
// `points`, deduplicated and sorted by normal.
std::vector<Halfspace> hull_facets(const std::vector<LatticeVector>& points, std::size_t d) {
  std::set<std::vector<Integer>> seen;
  std::vector<Halfspace> out;
  for_each_combination(points.size(), d, [&](const std::vector<std::size_t>& subset) {
    detail::RationalMatrix rows;
    rows.reserve(d);
    for (std::size_t i : subset) {
      std::vector<Rational> row(d + 1);
      for (std::size_t j = 0; j < d; ++j) row[j] = Rational(points[i][j]);
      row[d] = -1;
      rows.push_back(std::move(row));
    }
    auto line = detail::kernel_line(std::move(rows), d + 1);
    if (!line) return;
    line->pop_back();
    std::vector<Integer> normal = detail::primitive_integer(*line);
    Integer offset = dot(normal, points[subset.front()].coords());

    bool below = false;
    bool above = false;
    for (const auto& p : points) {
      Integer v = dot(normal, p.coords());
      if (v < offset) below = true;
      if (v > offset) above = true;
      if (below && above) return;
    }
    if (above) {
      for (auto& a : normal) a = -a;
      offset = -offset;
    }
    if (seen.insert(normal).second) out.push_back(Halfspace{std::move(normal), std::move(offset)});
  });
  std::sort(out.begin(), out.end(),
            [](const Halfspace& a, const Halfspace& b) { return a.normal < b.normal; });
  return out;
}

std::size_t affine_dimension(const std::vector<LatticeVector>& vertices, const Face& face) {
  std::vector<const std::vector<Integer>*> pts;
  pts.reserve(face.size());
  for (std::size_t i : face) pts.push_back(&vertices[i].coords());
  return detail::affine_rank(pts);
}

}  // namespace

LatticeVector::LatticeVector(std::initializer_list<long long> coords) {
  coords_.reserve(coords.size());
  for (long long c : coords) coords_.emplace_back(c);
}

Integer Halfspace::evaluate(const LatticeVector& x) const { return dot(normal, x.coords()); }

FVector::FVector(std::vector<Integer> entries) : entries_(std::move(entries)) {
  if (entries_.size() < 3 || entries_.front() != 1 || entries_.back() != 1) {
    throw std::invalid_argument("f-vector must run f_{-1}=1, f_0, ..., f_d=1");
  }
}

bool FVector::satisfies_euler() const {
  Integer sum(0);
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    // entries_[k] is f_{k-1}
    if ((k + 1) % 2 == 0) sum += entries_[k];
    else sum -= entries_[k];
  }
  return sum == 0;
}

struct Polytope::LatticeCache {
  std::once_flag once;
  std::vector<std::vector<Face>> faces;
};

bool Polytope::origin_interior() const noexcept {
  return std::all_of(facets_.begin(), facets_.end(),
                     [](const Halfspace& h) { return h.offset > 0; });
}

const std::vector<std::vector<Face>>& Polytope::faces() const {
  std::call_once(lattice_->once, [this] {
    // Every proper face is an intersection of facets.
    std::set<Face> all(facet_vertices_.begin(), facet_vertices_.end());
    std::vector<Face> frontier(all.begin(), all.end());
    while (!frontier.empty()) {
      std::vector<Face> next;
      for (const Face& f : frontier) {
        for (const Face& g : facet_vertices_) {
          Face meet;
          std::set_intersection(f.begin(), f.end(), g.begin(), g.end(), std::back_inserter(meet));
          if (!meet.empty() && all.insert(meet).second) next.push_back(std::move(meet));
        }
      }
      frontier = std::move(next);
    }
    lattice_->faces.assign(dim_, {});
    for (const Face& f : all) {
      std::size_t k = affine_dimension(vertices_, f);
      assert(k < dim_);
      lattice_->faces[k].push_back(f);
    }
  });
  return lattice_->faces;
}

Polytope build_polytope(std::span<const LatticeVector> points) {
  if (points.empty()) throw NotFullDimensional("no points given");
  const std::size_t d = points.front().dim();
  if (d == 0) throw DimensionMismatch("points must have at least one coordinate");
  for (const auto& p : points) {
    if (p.dim() != d) {
      throw DimensionMismatch("expected " + std::to_string(d) + " coordinates, got " +
                              std::to_string(p.dim()));
    }
  }

  std::vector<LatticeVector> unique;
  {
    std::set<LatticeVector> seen;
    for (const auto& p : points) {
      if (seen.insert(p).second) unique.push_back(p);
    }
  }
  {
    std::vector<const std::vector<Integer>*> pts;
    for (const auto& p : unique) pts.push_back(&p.coords());
    if (unique.size() < d + 1 || detail::affine_rank(pts) != d) {
      throw NotFullDimensional("points span an affine space of dimension < " + std::to_string(d));
    }
  }

  std::vector<Halfspace> halfspaces = hull_facets(unique, d);

  // A point is a vertex iff the normals of the facets through it span R^d.
  Polytope poly;
  poly.dim_ = d;
  for (const auto& p : unique) {
    detail::RationalMatrix normals;
    for (const auto& h : halfspaces) {
      if (!h.is_tight(p)) continue;
      std::vector<Rational> row(h.normal.begin(), h.normal.end());
      normals.push_back(std::move(row));
    }
    if (detail::rank(std::move(normals)) == d) poly.vertices_.push_back(p);
  }

  poly.facets_ = std::move(halfspaces);
  poly.facet_vertices_.reserve(poly.facets_.size());
  for (const auto& h : poly.facets_) {
    Face face;
    for (std::size_t i = 0; i < poly.vertices_.size(); ++i) {
      if (h.is_tight(poly.vertices_[i])) face.push_back(i);
    }
    poly.facet_vertices_.push_back(std::move(face));
  }
  poly.lattice_ = std::make_shared<Polytope::LatticeCache>();
  return poly;
}

const std::vector<Halfspace>& facets(const Polytope& p) { return p.facets(); }

FVector f_vector(const Polytope& p) {
  const auto& faces = p.faces();
  std::vector<Integer> entries;
  entries.reserve(p.dim() + 2);
  entries.emplace_back(1);
  for (const auto& layer : faces) entries.emplace_back(layer.size());
  entries.emplace_back(1);
  return FVector(std::move(entries));
}

std::vector<RationalVector> dual(const Polytope& p) {
  if (!p.origin_interior()) throw OriginNotInterior("dual requires the origin in the interior");
  std::vector<RationalVector> out;
  out.reserve(p.facets().size());
  for (const auto& h : p.facets()) {
    RationalVector v;
    v.reserve(h.normal.size());
    for (const auto& a : h.normal) v.emplace_back(Rational(a, h.offset));
    out.push_back(std::move(v));
  }
  return out;
}

bool is_reflexive(const Polytope& p) {
  return p.origin_interior() &&
         std::all_of(p.facets().begin(), p.facets().end(),
                     [](const Halfspace& h) { return h.offset == 1; });
}

bool is_smooth(const Polytope& p) {
  if (!p.origin_interior()) return false;
  const std::size_t d = p.dim();
  for (std::size_t i = 0; i < p.facets().size(); ++i) {
    const Face& face = p.facet_vertices(i);
    if (face.size() != d) return false;
    detail::IntegerMatrix m;
    m.reserve(d);
    for (std::size_t v : face) m.push_back(p.vertices()[v].coords());
    Integer det = detail::determinant(std::move(m));
    if (det != 1 && det != -1) return false;
  }
  // Unimodular facets with the origin inside sit at lattice distance one.
  assert(is_reflexive(p));
  return true;
}

Polytope free_sum(const Polytope& p, const Polytope& q) {
  if (!p.origin_interior() || !q.origin_interior()) {
    throw OriginNotInterior("free sum requires the origin in the interior of both summands");
  }
  const std::size_t dp = p.dim();
  const std::size_t dq = q.dim();
  std::vector<LatticeVector> pts;
  pts.reserve(p.vertices().size() + q.vertices().size());
  for (const auto& v : p.vertices()) {
    std::vector<Integer> c(v.coords());
    c.resize(dp + dq, Integer(0));
    pts.emplace_back(std::move(c));
  }
  for (const auto& w : q.vertices()) {
    std::vector<Integer> c(dp, Integer(0));
    c.insert(c.end(), w.coords().begin(), w.coords().end());
    pts.emplace_back(std::move(c));
  }
  return build_polytope(pts);
}

}  // namespace ehrhart
