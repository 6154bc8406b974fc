#include "double_description.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>

#include "latcvx/errors.hpp"
#include "latcvx/lp.hpp"

namespace latcvx::detail {

namespace {

using Bits = boost::dynamic_bitset<>;

struct Ray {
  RatVector v;
  Bits zeros;  // processed rows on which the ray is tight
};

}  // namespace

std::vector<RatVector> extreme_rays(const RatMatrix& a) {
  const std::size_t n = a.cols();
  const std::size_t m = a.rows();

  // pick n independent rows greedily for the initial simplicial cone
  std::vector<std::size_t> init;
  {
    RatMatrix acc(0, n);
    for (std::size_t i = 0; i < m && init.size() < n; ++i) {
      RatMatrix trial = acc;
      trial.append_row(a.row(i));
      if (trial.rank() == init.size() + 1) {
        acc = std::move(trial);
        init.push_back(i);
      }
    }
  }
  if (init.size() < n) throw PreconditionError("degenerate");

  std::vector<RatVector> init_rows;
  for (std::size_t i : init) init_rows.push_back(a.row(i));
  const RatMatrix inv = RatMatrix::from_rows(init_rows).inverse();

  std::vector<bool> processed(m, false);
  std::vector<Ray> rays;
  for (std::size_t k = 0; k < n; ++k) {
    Ray r{primitive_integer(-inv.col(k)), Bits(m)};
    for (std::size_t j = 0; j < n; ++j)
      if (j != k) r.zeros.set(init[j]);
    rays.push_back(std::move(r));
  }
  for (std::size_t i : init) processed[i] = true;

  for (std::size_t row = 0; row < m; ++row) {
    if (processed[row]) continue;
    processed[row] = true;
    const RatVector ai = a.row(row);
    std::vector<std::size_t> pos, neg;
    std::vector<Rational> val(rays.size());
    for (std::size_t r = 0; r < rays.size(); ++r) {
      val[r] = dot(ai, rays[r].v);
      if (val[r].sign() > 0)
        pos.push_back(r);
      else if (val[r].sign() < 0)
        neg.push_back(r);
      else
        rays[r].zeros.set(row);
    }
    if (pos.empty()) continue;

    std::vector<Ray> next;
    next.reserve(rays.size());
    for (std::size_t r = 0; r < rays.size(); ++r)
      if (val[r].sign() <= 0) next.push_back(rays[r]);

    for (std::size_t p : pos) {
      for (std::size_t q : neg) {
        Bits common = rays[p].zeros & rays[q].zeros;
        if (common.count() + 2 < n) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (common.is_subset_of(rays[r].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        RatVector v = rays[q].v * val[p] - rays[p].v * val[q];
        common.set(row);
        next.push_back(Ray{primitive_integer(v), std::move(common)});
      }
    }
    rays = std::move(next);
  }

  std::vector<RatVector> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

RegionVertices region_vertices(const RatMatrix& a, const RatVector& b) {
  const std::size_t d = a.cols();
  RegionVertices out;
  if (a.rows() == 0 || a.rank() < d) {
    // lineality space: unbounded if feasible
    LpProblem lp;
    lp.objective = RatVector(d);
    lp.constraints = a.rows() ? a : RatMatrix(0, d);
    lp.rhs = b;
    lp.senses.assign(b.dim(), RowSense::LessEqual);
    out.kind = solve_lp(lp).status == LpStatus::Infeasible ? RegionKind::Empty
                                                           : RegionKind::Unbounded;
    return out;
  }
  RatMatrix h(a.rows() + 1, d + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < d; ++j) h(i, j) = a(i, j);
    h(i, d) = -b[i];
  }
  h(a.rows(), d) = -1;
  bool has_point = false, has_direction = false;
  for (const auto& r : extreme_rays(h)) {
    const Rational& t = r[d];
    if (t.sign() > 0) {
      has_point = true;
      out.vertices.push_back(r.slice(0, d) / t);
    } else {
      has_direction = true;
    }
  }
  if (!has_point) {
    out.kind = RegionKind::Empty;
    out.vertices.clear();
    return out;
  }
  if (has_direction) {
    out.kind = RegionKind::Unbounded;
    out.vertices.clear();
    return out;
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()), out.vertices.end());
  out.kind = RegionKind::Bounded;
  return out;
}

}  // namespace latcvx::detail
