#include "latcvx/polytope.hpp"

#include <algorithm>
#include <map>

#include "double_description.hpp"
#include "latcvx/errors.hpp"

namespace latcvx {

Facet canonical_facet(const Facet& f) {
  const Rational s = primitive_scale(f.normal);
  return Facet{f.normal * s, f.offset * s};
}

int affine_dimension(const std::vector<RatVector>& points) {
  if (points.empty()) return -1;
  std::vector<RatVector> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points[0]);
  return static_cast<int>(rank_of(diffs));
}

namespace {

void sort_unique(std::vector<RatVector>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void require_same_dimension(const std::vector<RatVector>& pts) {
  for (const auto& p : pts)
    if (p.dim() != pts.front().dim() || p.dim() == 0)
      throw PreconditionError("points of mixed or zero dimension");
}

}  // namespace

Polytope Polytope::hull(const std::vector<RatVector>& points) {
  if (points.empty()) throw PreconditionError("degenerate");
  require_same_dimension(points);
  std::vector<RatVector> pts = points;
  sort_unique(pts);
  const std::size_t d = pts.front().dim();
  if (affine_dimension(pts) != static_cast<int>(d)) throw PreconditionError("degenerate");

  RatMatrix cone(pts.size(), d + 1);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < d; ++j) cone(i, j) = pts[i][j];
    cone(i, d) = -1;
  }
  std::vector<Facet> facets;
  for (const auto& r : detail::extreme_rays(cone)) {
    RatVector a = r.slice(0, d);
    if (a.is_zero()) continue;
    facets.push_back(canonical_facet(Facet{a, r[d]}));
  }

  std::vector<RatVector> verts;
  for (const auto& p : pts) {
    std::vector<RatVector> tight;
    for (const auto& f : facets)
      if (f.slack(p).is_zero()) tight.push_back(f.normal);
    if (rank_of(tight) == d) verts.push_back(p);
  }
  return from_descriptions(std::move(verts), std::move(facets));
}

Polytope Polytope::from_inequalities(const std::vector<Facet>& inequalities) {
  if (inequalities.empty()) throw PreconditionError("unbounded");
  const std::size_t d = inequalities.front().normal.dim();
  if (d == 0) throw PreconditionError("degenerate");
  std::vector<Facet> ineq;
  RatMatrix a(0, d);
  RatVector b;
  for (const auto& f : inequalities) {
    if (f.normal.dim() != d) throw PreconditionError("dimension mismatch");
    if (f.normal.is_zero()) {
      if (f.offset.sign() < 0) throw PreconditionError("empty");
      continue;
    }
    ineq.push_back(canonical_facet(f));
  }
  std::sort(ineq.begin(), ineq.end());
  ineq.erase(std::unique(ineq.begin(), ineq.end()), ineq.end());
  for (const auto& f : ineq) {
    a.append_row(f.normal);
    b.push_back(f.offset);
  }

  auto region = detail::region_vertices(a, b);
  if (region.kind == detail::RegionKind::Empty) throw PreconditionError("empty");
  if (region.kind == detail::RegionKind::Unbounded) throw PreconditionError("unbounded");
  if (affine_dimension(region.vertices) != static_cast<int>(d))
    throw PreconditionError("degenerate");

  std::vector<Facet> facets;
  for (const auto& f : ineq) {
    std::vector<RatVector> tight;
    for (const auto& v : region.vertices)
      if (f.slack(v).is_zero()) tight.push_back(v);
    if (affine_dimension(tight) == static_cast<int>(d) - 1) facets.push_back(f);
  }
  return from_descriptions(std::move(region.vertices), std::move(facets));
}

Polytope Polytope::from_descriptions(std::vector<RatVector> vertices, std::vector<Facet> facets) {
  Polytope p;
  if (vertices.empty()) throw PreconditionError("degenerate");
  require_same_dimension(vertices);
  sort_unique(vertices);
  for (auto& f : facets) f = canonical_facet(f);
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  p.dim_ = vertices.front().dim();
  p.vertices_ = std::move(vertices);
  p.facets_ = std::move(facets);
  p.build_incidence_and_validate();
  return p;
}

void Polytope::build_incidence_and_validate() {
  const std::size_t d = dim_;
  facet_vertices_.assign(facets_.size(), {});
  vertex_facets_.assign(vertices_.size(), {});
  for (std::size_t f = 0; f < facets_.size(); ++f) {
    if (facets_[f].normal.dim() != d) throw InvariantError("facet dimension mismatch");
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
      const int s = facets_[f].slack(vertices_[v]).sign();
      if (s < 0) throw InvariantError("vertex violates facet inequality");
      if (s == 0) {
        facet_vertices_[f].push_back(v);
        vertex_facets_[v].push_back(f);
      }
    }
  }
  if (vertices_.size() < d + 1 || facets_.size() < d + 1)
    throw PreconditionError("degenerate");
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    std::vector<RatVector> normals;
    for (std::size_t f : vertex_facets_[v]) normals.push_back(facets_[f].normal);
    if (rank_of(normals) != d) throw InvariantError("vertex is not a vertex of the facet system");
  }
  for (std::size_t f = 0; f < facets_.size(); ++f) {
    std::vector<RatVector> pts;
    for (std::size_t v : facet_vertices_[f]) pts.push_back(vertices_[v]);
    if (affine_dimension(pts) != static_cast<int>(d) - 1)
      throw InvariantError("facet does not span a hyperplane");
  }
}

std::optional<std::size_t> Polytope::vertex_index(const RatVector& v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

bool Polytope::contains(const RatVector& x) const {
  for (const auto& f : facets_)
    if (f.slack(x).sign() < 0) return false;
  return true;
}

bool Polytope::contains_in_interior(const RatVector& x) const {
  for (const auto& f : facets_)
    if (f.slack(x).sign() <= 0) return false;
  return true;
}

Rational Polytope::support(const RatVector& y) const {
  Rational best = dot(y, vertices_.front());
  for (std::size_t i = 1; i < vertices_.size(); ++i) best = max(best, dot(y, vertices_[i]));
  return best;
}

Rational Polytope::width_along(const RatVector& y) const { return support(y) + support(-y); }

RatVector Polytope::vertex_centroid() const {
  RatVector c(dim_);
  for (const auto& v : vertices_) c += v;
  return c / Rational(static_cast<long>(vertices_.size()));
}

bool Polytope::is_origin_symmetric() const {
  for (const auto& v : vertices_)
    if (!vertex_index(-v)) return false;
  return true;
}

std::optional<RatVector> Polytope::center_of_symmetry() const {
  const RatVector c = vertex_centroid();
  const RatVector two_c = c * Rational(2);
  for (const auto& v : vertices_)
    if (!vertex_index(two_c - v)) return std::nullopt;
  return c;
}

void Polytope::cross_check() const {
  const Polytope from_v = hull(vertices_);
  if (from_v.facets_ != facets_) throw InvariantError("facets disagree with hull of vertices");
  const Polytope from_h = from_inequalities(facets_);
  if (from_h.vertices_ != vertices_) throw InvariantError("vertices disagree with facet system");
}

HRegion HRegion::of(const Polytope& p) {
  return HRegion{p.dim(), p.facets(), {}};
}

bool HRegion::contains(const RatVector& x) const {
  for (const auto& f : inequalities)
    if (f.slack(x).sign() < 0) return false;
  for (const auto& f : equalities)
    if (!f.slack(x).is_zero()) return false;
  return true;
}

HRegion HRegion::translated(const RatVector& t) const {
  HRegion r = *this;
  for (auto& f : r.inequalities) f.offset += dot(f.normal, t);
  for (auto& f : r.equalities) f.offset += dot(f.normal, t);
  return r;
}

HRegion HRegion::intersect(const HRegion& other) const {
  if (other.dim != dim) throw PreconditionError("dimension mismatch");
  HRegion r = *this;
  r.inequalities.insert(r.inequalities.end(), other.inequalities.begin(), other.inequalities.end());
  r.equalities.insert(r.equalities.end(), other.equalities.begin(), other.equalities.end());
  return r;
}

FaceRef FaceRef::of_facet(const Polytope& p, std::size_t facet_index) {
  return FaceRef{FaceKind::Facet, p.facet_vertices(facet_index), facet_index};
}

FaceRef FaceRef::of_vertex(std::size_t vertex_index) {
  return FaceRef{FaceKind::Vertex, {vertex_index}, std::nullopt};
}

}  // namespace latcvx
