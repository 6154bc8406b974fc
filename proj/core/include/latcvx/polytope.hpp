#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "latcvx/linalg.hpp"

namespace latcvx {

/// The half-space normal·x <= offset.
struct Facet {
  RatVector normal;
  Rational offset;

  [[nodiscard]] Rational slack(const RatVector& x) const { return offset - dot(normal, x); }
  friend bool operator==(const Facet&, const Facet&) = default;
  friend auto operator<=>(const Facet& a, const Facet& b) {
    if (auto c = a.normal <=> b.normal; c != 0) return c;
    return a.offset <=> b.offset;
  }
};

/// Same half-space with the normal scaled to a primitive integer vector.
Facet canonical_facet(const Facet& f);

/**
 * Full-dimensional rational polytope carrying both its vertex and facet
 * descriptions plus their incidences.
 *
 * Canonical form: vertices in lexicographic order; each facet normal a
 * primitive integer vector, facets sorted by (normal, offset).
 */
class Polytope {
 public:
  /// conv(points). Throws PreconditionError("degenerate") unless the points
  /// affinely span their ambient space.
  static Polytope hull(const std::vector<RatVector>& points);
  /// {x : normal·x <= offset for all facets}. Redundant inequalities are
  /// dropped. Errors: "empty", "unbounded", "degenerate".
  static Polytope from_inequalities(const std::vector<Facet>& inequalities);
  /// Builds from descriptions already known to be irredundant and to
  /// describe the same set (e.g. images under affine maps). Canonicalizes
  /// and validates the local invariants but does not re-run hull.
  static Polytope from_descriptions(std::vector<RatVector> vertices, std::vector<Facet> facets);

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] const std::vector<RatVector>& vertices() const { return vertices_; }
  [[nodiscard]] const std::vector<Facet>& facets() const { return facets_; }
  [[nodiscard]] std::size_t num_vertices() const { return vertices_.size(); }
  [[nodiscard]] std::size_t num_facets() const { return facets_.size(); }
  /// Indices of vertices lying on facet i, ascending.
  [[nodiscard]] const std::vector<std::size_t>& facet_vertices(std::size_t i) const {
    return facet_vertices_[i];
  }
  /// Indices of facets containing vertex i, ascending.
  [[nodiscard]] const std::vector<std::size_t>& vertex_facets(std::size_t i) const {
    return vertex_facets_[i];
  }
  /// Index of `v` in vertices(), if it is a vertex.
  [[nodiscard]] std::optional<std::size_t> vertex_index(const RatVector& v) const;

  [[nodiscard]] bool contains(const RatVector& x) const;
  [[nodiscard]] bool contains_in_interior(const RatVector& x) const;
  /// max over the polytope of y·x.
  [[nodiscard]] Rational support(const RatVector& y) const;
  /// support(y) + support(-y).
  [[nodiscard]] Rational width_along(const RatVector& y) const;
  [[nodiscard]] RatVector vertex_centroid() const;
  [[nodiscard]] bool is_origin_symmetric() const;
  /// Center c with P - c = c - P, when one exists.
  [[nodiscard]] std::optional<RatVector> center_of_symmetry() const;

  /// Recomputes the facets from the vertices (and vice versa) and throws
  /// InvariantError if anything disagrees with the stored data.
  void cross_check() const;

  friend bool operator==(const Polytope& a, const Polytope& b) {
    return a.vertices_ == b.vertices_ && a.facets_ == b.facets_;
  }

 private:
  Polytope() = default;
  void build_incidence_and_validate();

  std::size_t dim_ = 0;
  std::vector<RatVector> vertices_;
  std::vector<Facet> facets_;
  std::vector<std::vector<std::size_t>> facet_vertices_;
  std::vector<std::vector<std::size_t>> vertex_facets_;
};

/// A polyhedral set {x : A x <= b, E x = f} in R^dim, possibly lower
/// dimensional or empty. Used for slices that are not full-dimensional.
struct HRegion {
  std::size_t dim = 0;
  std::vector<Facet> inequalities;
  std::vector<Facet> equalities;  // normal·x = offset

  static HRegion of(const Polytope& p);
  [[nodiscard]] bool contains(const RatVector& x) const;
  /// Image under x -> x + t.
  [[nodiscard]] HRegion translated(const RatVector& t) const;
  [[nodiscard]] HRegion intersect(const HRegion& other) const;
};

enum class FaceKind { Vertex, Facet, General };

/// A face of a polytope identified by its vertex indices.
struct FaceRef {
  FaceKind kind = FaceKind::General;
  std::vector<std::size_t> vertices;
  std::optional<std::size_t> facet;  // set when kind == Facet

  static FaceRef of_facet(const Polytope& p, std::size_t facet_index);
  static FaceRef of_vertex(std::size_t vertex_index);
};

enum class IntersectionKind { FullDimensional, LowerDimensional, Empty };

struct Intersection {
  IntersectionKind kind = IntersectionKind::Empty;
  std::optional<Polytope> polytope;  // FullDimensional only
  std::vector<RatVector> vertices;   // of the (possibly degenerate) intersection
  std::size_t affine_dim = 0;        // meaningless when Empty
  HRegion region;                    // the intersection as a set
};

/// Polar body {y : x·y <= 1 for all x in P}. Error "origin not interior".
Polytope polar(const Polytope& p);
/// P - P.
Polytope difference_body(const Polytope& p);
Polytope minkowski_sum(const Polytope& p, const Polytope& q);
/// lambda·P. Error "degenerate" for lambda = 0.
Polytope scale(const Polytope& p, const Rational& lambda);
Polytope translate(const Polytope& p, const RatVector& t);
/// {M x : x in P}. Error "singular matrix".
Polytope transform(const Polytope& p, const RatMatrix& m);
/// P × Q.
Polytope cartesian_product(const Polytope& p, const Polytope& q);
/// P ∩ {extra}, classified by dimension.
Intersection intersect_halfspaces(const Polytope& p, const std::vector<Facet>& extra);
/// A point of S ∩ relint F with strictly positive slack on every facet of P
/// other than F, or nullopt. F must be a facet.
std::optional<RatVector> relint_point_in_face(const Polytope& p, const FaceRef& f,
                                              const HRegion& s);
/// Euclidean volume.
Rational volume(const Polytope& p);

enum class ConeMembership { Interior, Boundary, Outside };
/// Whether y lies in the (interior of the) normal cone of P at vertex v.
ConeMembership normal_cone_membership(const Polytope& p, std::size_t vertex, const RatVector& y);
/// Edges as pairs of vertex indices (i < j), sorted.
std::vector<std::pair<std::size_t, std::size_t>> edges(const Polytope& p);
/// Gauge function of P at x, requires 0 in the interior of P.
Rational gauge(const Polytope& p, const RatVector& x);
/// Affine dimension of a point set (-1 for empty).
int affine_dimension(const std::vector<RatVector>& points);

}  // namespace latcvx
