#include <algorithm>
#include <set>

#include "double_description.hpp"
#include "latcvx/errors.hpp"
#include "latcvx/lp.hpp"
#include "latcvx/polytope.hpp"

namespace latcvx {

Polytope polar(const Polytope& p) {
  for (const auto& f : p.facets())
    if (f.offset.sign() <= 0) throw PreconditionError("origin not interior");
  std::vector<RatVector> verts;
  for (const auto& f : p.facets()) verts.push_back(f.normal / f.offset);
  std::vector<Facet> facets;
  for (const auto& v : p.vertices()) facets.push_back(Facet{v, 1});
  return Polytope::from_descriptions(std::move(verts), std::move(facets));
}

Polytope difference_body(const Polytope& p) {
  if (auto c = p.center_of_symmetry()) return scale(translate(p, -*c), 2);
  std::vector<RatVector> diffs;
  for (const auto& v : p.vertices())
    for (const auto& w : p.vertices()) diffs.push_back(v - w);
  return Polytope::hull(diffs);
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  if (p.dim() != q.dim()) throw PreconditionError("dimension mismatch");
  std::vector<RatVector> sums;
  for (const auto& v : p.vertices())
    for (const auto& w : q.vertices()) sums.push_back(v + w);
  return Polytope::hull(sums);
}

Polytope scale(const Polytope& p, const Rational& lambda) {
  if (lambda.is_zero()) throw PreconditionError("degenerate");
  std::vector<RatVector> verts;
  for (const auto& v : p.vertices()) verts.push_back(v * lambda);
  std::vector<Facet> facets;
  for (const auto& f : p.facets()) {
    if (lambda.sign() > 0)
      facets.push_back(Facet{f.normal, f.offset * lambda});
    else
      facets.push_back(Facet{-f.normal, -(f.offset * lambda)});
  }
  return Polytope::from_descriptions(std::move(verts), std::move(facets));
}

Polytope translate(const Polytope& p, const RatVector& t) {
  if (t.dim() != p.dim()) throw PreconditionError("dimension mismatch");
  std::vector<RatVector> verts;
  for (const auto& v : p.vertices()) verts.push_back(v + t);
  std::vector<Facet> facets;
  for (const auto& f : p.facets()) facets.push_back(Facet{f.normal, f.offset + dot(f.normal, t)});
  return Polytope::from_descriptions(std::move(verts), std::move(facets));
}

Polytope transform(const Polytope& p, const RatMatrix& m) {
  if (m.rows() != p.dim() || m.cols() != p.dim()) throw PreconditionError("dimension mismatch");
  const RatMatrix inv_t = m.inverse().transpose();
  std::vector<RatVector> verts;
  for (const auto& v : p.vertices()) verts.push_back(m * v);
  std::vector<Facet> facets;
  for (const auto& f : p.facets()) facets.push_back(Facet{inv_t * f.normal, f.offset});
  return Polytope::from_descriptions(std::move(verts), std::move(facets));
}

Polytope cartesian_product(const Polytope& p, const Polytope& q) {
  std::vector<RatVector> verts;
  for (const auto& v : p.vertices())
    for (const auto& w : q.vertices()) verts.push_back(v.concat(w));
  std::vector<Facet> facets;
  for (const auto& f : p.facets())
    facets.push_back(Facet{f.normal.concat(RatVector(q.dim())), f.offset});
  for (const auto& f : q.facets())
    facets.push_back(Facet{RatVector(p.dim()).concat(f.normal), f.offset});
  return Polytope::from_descriptions(std::move(verts), std::move(facets));
}

Intersection intersect_halfspaces(const Polytope& p, const std::vector<Facet>& extra) {
  Intersection out;
  out.region = HRegion::of(p);
  out.region.inequalities.insert(out.region.inequalities.end(), extra.begin(), extra.end());
  const std::size_t d = p.dim();
  RatMatrix a(0, d);
  RatVector b;
  for (const auto& f : out.region.inequalities) {
    if (f.normal.dim() != d) throw PreconditionError("dimension mismatch");
    a.append_row(f.normal);
    b.push_back(f.offset);
  }
  auto region = detail::region_vertices(a, b);
  if (region.kind == detail::RegionKind::Unbounded)
    throw InvariantError("intersection with a polytope is unbounded");
  if (region.kind == detail::RegionKind::Empty) return out;
  out.vertices = std::move(region.vertices);
  out.affine_dim = static_cast<std::size_t>(affine_dimension(out.vertices));
  if (out.affine_dim == d) {
    out.kind = IntersectionKind::FullDimensional;
    out.polytope = Polytope::from_inequalities(out.region.inequalities);
  } else {
    out.kind = IntersectionKind::LowerDimensional;
  }
  return out;
}

std::optional<RatVector> relint_point_in_face(const Polytope& p, const FaceRef& f,
                                              const HRegion& s) {
  if (f.kind != FaceKind::Facet || !f.facet) throw PreconditionError("face is not a facet");
  if (s.dim != p.dim()) throw PreconditionError("dimension mismatch");
  const std::size_t d = p.dim();
  const std::size_t fi = *f.facet;

  // variables (x, s): maximize s subject to x in S, x on F, slack >= s elsewhere, s <= 1
  LpProblem lp;
  lp.objective = RatVector::unit(d + 1, d);
  lp.constraints = RatMatrix(0, d + 1);
  const RatVector zero1(1);
  for (const auto& g : s.inequalities) lp.add_row(g.normal.concat(zero1), RowSense::LessEqual, g.offset);
  for (const auto& g : s.equalities) lp.add_row(g.normal.concat(zero1), RowSense::Equal, g.offset);
  lp.add_row(p.facets()[fi].normal.concat(zero1), RowSense::Equal, p.facets()[fi].offset);
  const RatVector one1{Rational(1)};
  for (std::size_t g = 0; g < p.num_facets(); ++g) {
    if (g == fi) continue;
    lp.add_row(p.facets()[g].normal.concat(one1), RowSense::LessEqual, p.facets()[g].offset);
  }
  lp.add_row(RatVector::unit(d + 1, d), RowSense::LessEqual, 1);
  const LpOutcome res = solve_lp(lp);
  if (res.status != LpStatus::Optimal || res.value.sign() <= 0) return std::nullopt;
  return res.optimizer.slice(0, d);
}

namespace {

using Simplex = std::vector<std::size_t>;

// Pulling triangulation of the face with vertex set `face` (indices into p)
// of dimension k, coning from the smallest index.
void triangulate(const Polytope& p, const std::vector<std::size_t>& face, std::size_t k,
                 std::vector<Simplex>& out) {
  if (k == 0) {
    out.push_back({face.front()});
    return;
  }
  if (k == 1) {
    out.push_back({face[0], face[1]});
    return;
  }
  const std::size_t apex = face.front();
  std::set<std::vector<std::size_t>> subfaces;
  for (std::size_t f = 0; f < p.num_facets(); ++f) {
    std::vector<std::size_t> sub;
    std::set_intersection(face.begin(), face.end(), p.facet_vertices(f).begin(),
                          p.facet_vertices(f).end(), std::back_inserter(sub));
    if (sub.size() < k || sub == face || std::binary_search(sub.begin(), sub.end(), apex)) continue;
    std::vector<RatVector> pts;
    for (std::size_t i : sub) pts.push_back(p.vertices()[i]);
    if (affine_dimension(pts) == static_cast<int>(k) - 1) subfaces.insert(std::move(sub));
  }
  for (const auto& sub : subfaces) {
    std::vector<Simplex> part;
    triangulate(p, sub, k - 1, part);
    for (auto& s : part) {
      s.insert(s.begin(), apex);
      out.push_back(std::move(s));
    }
  }
}

}  // namespace

Rational volume(const Polytope& p) {
  const std::size_t d = p.dim();
  std::vector<std::size_t> all(p.num_vertices());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::vector<Simplex> simplices;
  triangulate(p, all, d, simplices);
  Rational total;
  for (const auto& s : simplices) {
    std::vector<RatVector> cols;
    for (std::size_t i = 1; i < s.size(); ++i) cols.push_back(p.vertices()[s[i]] - p.vertices()[s[0]]);
    total += RatMatrix::from_columns(cols).det().abs();
  }
  Integer fact = 1;
  for (std::size_t i = 2; i <= d; ++i) fact *= static_cast<unsigned long>(i);
  return total / Rational(fact);
}

ConeMembership normal_cone_membership(const Polytope& p, std::size_t vertex, const RatVector& y) {
  const Rational at = dot(y, p.vertices()[vertex]);
  bool tie = false;
  for (std::size_t i = 0; i < p.num_vertices(); ++i) {
    if (i == vertex) continue;
    const auto c = dot(y, p.vertices()[i]) <=> at;
    if (c > 0) return ConeMembership::Outside;
    if (c == 0) tie = true;
  }
  return tie ? ConeMembership::Boundary : ConeMembership::Interior;
}

std::vector<std::pair<std::size_t, std::size_t>> edges(const Polytope& p) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < p.num_vertices(); ++i)
    for (std::size_t j = i + 1; j < p.num_vertices(); ++j) {
      std::vector<std::size_t> common;
      std::set_intersection(p.vertex_facets(i).begin(), p.vertex_facets(i).end(),
                            p.vertex_facets(j).begin(), p.vertex_facets(j).end(),
                            std::back_inserter(common));
      if (common.size() + 1 < p.dim()) continue;
      std::vector<RatVector> normals;
      for (std::size_t f : common) normals.push_back(p.facets()[f].normal);
      if (rank_of(normals) + 1 == p.dim()) out.emplace_back(i, j);
    }
  return out;
}

Rational gauge(const Polytope& p, const RatVector& x) {
  Rational g;
  for (const auto& f : p.facets()) {
    if (f.offset.sign() <= 0) throw PreconditionError("origin not interior");
    g = max(g, dot(f.normal, x) / f.offset);
  }
  return g;
}

}  // namespace latcvx
