#include "ehrhart/counting.hpp"

#include <algorithm>
#include <future>
#include <optional>
#include <stdexcept>

namespace ehrhart {
namespace {

// Depth-first scan of the integer points of mP. At each level the range of
// the next coordinate is cut down using, for every facet, the smallest
// value the still-unassigned coordinates can contribute inside the box.
class DilationScan {
 public:
  DilationScan(const Polytope& p, std::uint64_t m) : d_(p.dim()) {
    const Integer scale(m);
    const auto& vs = p.vertices();
    lo_.assign(d_, Integer(0));
    hi_.assign(d_, Integer(0));
    for (std::size_t j = 0; j < d_; ++j) {
      Integer mn = vs.front()[j];
      Integer mx = vs.front()[j];
      for (const auto& v : vs) {
        mn = std::min(mn, v[j]);
        mx = std::max(mx, v[j]);
      }
      lo_[j] = mn * scale;
      hi_[j] = mx * scale;
    }
    for (const auto& h : p.facets()) {
      normals_.push_back(h.normal);
      rhs_.push_back(h.offset * scale);
    }
    // suffix_min_[i][k] = min over the box of sum_{j>=k} a_ij x_j
    suffix_min_.assign(normals_.size(), std::vector<Integer>(d_ + 1, Integer(0)));
    for (std::size_t i = 0; i < normals_.size(); ++i) {
      for (std::size_t k = d_; k-- > 0;) {
        const Integer& a = normals_[i][k];
        suffix_min_[i][k] = suffix_min_[i][k + 1] + std::min(a * lo_[k], a * hi_[k]);
      }
    }
  }

  const Integer& box_lo(std::size_t j) const { return lo_[j]; }
  const Integer& box_hi(std::size_t j) const { return hi_[j]; }

  // Sums leaf(lo, hi, partial) over all prefixes; x_0 restricted to
  // [first_lo, first_hi].
  template <class Leaf>
  Integer run(const Integer& first_lo, const Integer& first_hi, Leaf&& leaf) const {
    std::vector<Integer> partial(normals_.size(), Integer(0));
    return descend(0, first_lo, first_hi, partial, leaf);
  }

  const std::vector<std::vector<Integer>>& normals() const { return normals_; }
  const std::vector<Integer>& rhs() const { return rhs_; }
  std::size_t dim() const { return d_; }

 private:
  // Feasible range of x_k given partial sums over x_0..x_{k-1}.
  std::optional<std::pair<Integer, Integer>> range(std::size_t k, Integer lo, Integer hi,
                                                   const std::vector<Integer>& partial) const {
    for (std::size_t i = 0; i < normals_.size(); ++i) {
      const Integer& a = normals_[i][k];
      Integer slack = rhs_[i] - partial[i] - suffix_min_[i][k + 1];
      if (a > 0) {
        hi = std::min(hi, floor_div(slack, a));
      } else if (a < 0) {
        lo = std::max(lo, ceil_div(slack, a));
      } else if (slack < 0) {
        return std::nullopt;
      }
      if (lo > hi) return std::nullopt;
    }
    return std::make_pair(std::move(lo), std::move(hi));
  }

  template <class Leaf>
  Integer descend(std::size_t k, const Integer& lo_k, const Integer& hi_k,
                  std::vector<Integer>& partial, Leaf& leaf) const {
    auto r = range(k, lo_k, hi_k, partial);
    if (!r) return Integer(0);
    if (k + 1 == d_) return leaf(r->first, r->second, partial);
    Integer total(0);
    for (Integer x = r->first; x <= r->second; ++x) {
      for (std::size_t i = 0; i < normals_.size(); ++i) partial[i] += normals_[i][k] * x;
      total += descend(k + 1, lo_[k + 1], hi_[k + 1], partial, leaf);
      for (std::size_t i = 0; i < normals_.size(); ++i) partial[i] -= normals_[i][k] * x;
    }
    return total;
  }

  std::size_t d_;
  std::vector<Integer> lo_, hi_;
  std::vector<std::vector<Integer>> normals_;
  std::vector<Integer> rhs_;
  std::vector<std::vector<Integer>> suffix_min_;
};

template <class Leaf>
Integer scan_parallel(const DilationScan& scan, unsigned threads, Leaf leaf) {
  const Integer lo = scan.box_lo(0);
  const Integer hi = scan.box_hi(0);
  const Integer width = hi - lo + 1;
  const Integer slabs = std::min<Integer>(Integer(std::max(threads, 1u)), width);
  if (slabs <= 1) return scan.run(lo, hi, leaf);

  std::vector<std::future<Integer>> parts;
  Integer start = lo;
  for (Integer s = 0; s < slabs; ++s) {
    Integer len = width / slabs + (s < width % slabs ? 1 : 0);
    Integer end = start + len - 1;
    parts.push_back(std::async(std::launch::async,
                               [&scan, leaf, start, end] { return scan.run(start, end, leaf); }));
    start = end + 1;
  }
  Integer total(0);
  for (auto& f : parts) total += f.get();
  return total;
}

}  // namespace

Integer count_points(const Polytope& p, std::uint64_t m, CountOptions options) {
  if (m == 0) return Integer(1);
  DilationScan scan(p, m);
  auto leaf = [](const Integer& lo, const Integer& hi, const std::vector<Integer>&) {
    return Integer(hi - lo + 1);
  };
  return scan_parallel(scan, options.threads, leaf);
}

Integer count_boundary(const Polytope& p, std::uint64_t m, CountOptions options) {
  if (m == 0) throw std::invalid_argument("count_boundary requires m >= 1");
  DilationScan scan(p, m);
  const std::size_t last = scan.dim() - 1;
  const auto& normals = scan.normals();
  const auto& rhs = scan.rhs();
  auto leaf = [&normals, &rhs, last](const Integer& lo, const Integer& hi,
                                     const std::vector<Integer>& partial) {
    // Points of the column [lo, hi] that make some facet inequality tight.
    std::vector<Integer> tight;
    for (std::size_t i = 0; i < normals.size(); ++i) {
      const Integer& a = normals[i][last];
      Integer slack = rhs[i] - partial[i];
      if (a == 0) {
        if (slack == 0) return Integer(hi - lo + 1);
        continue;
      }
      if (slack % a != 0) continue;
      Integer x = slack / a;
      if (x >= lo && x <= hi) tight.push_back(std::move(x));
    }
    std::sort(tight.begin(), tight.end());
    return Integer(std::unique(tight.begin(), tight.end()) - tight.begin());
  };
  return scan_parallel(scan, options.threads, leaf);
}

RationalPolynomial ehrhart(const Polytope& p, CountOptions options) {
  const std::size_t d = p.dim();
  std::vector<Rational> xs;
  std::vector<Rational> ys;
  for (std::size_t m = 0; m <= d; ++m) {
    xs.emplace_back(static_cast<long>(m));
    ys.emplace_back(count_points(p, m, options));
  }
  return RationalPolynomial::interpolate(xs, ys);
}

bool verify_layers(const Polytope& p, std::uint64_t max_m, CountOptions options) {
  if (!is_reflexive(p)) throw NotReflexive("layer identity only holds for reflexive polytopes");
  Integer previous = count_points(p, 0, options);
  for (std::uint64_t m = 1; m <= max_m; ++m) {
    Integer current = count_points(p, m, options);
    if (current != count_boundary(p, m, options) + previous) return false;
    previous = std::move(current);
  }
  return true;
}

bool verify_reciprocity(const RationalPolynomial& ehrhart_poly, int d) {
  RationalPolynomial reflected = ehrhart_poly.compose_linear(-1, -1);
  return d % 2 == 0 ? reflected == ehrhart_poly : reflected == -ehrhart_poly;
}

Rational volume(const Polytope& p, CountOptions options) {
  return ehrhart(p, options).leading_coefficient();
}

}  // namespace ehrhart
