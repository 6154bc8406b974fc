#pragma once

#include <optional>
#include <vector>

#include "latcvx/functionals.hpp"

namespace latcvx {

struct VertexWitness {
  RatVector vertex;
  RatVector direction;  // width direction maximized only at `vertex`
};

struct ReducedCertificate {
  bool verdict = false;
  FunctionalResult width;
  std::vector<VertexWitness> witnesses;  // one per served vertex, vertex order
  /// Lexicographically smallest vertex that no width direction exposes.
  std::optional<RatVector> counter_witness;
  /// Every vertex without a witness.
  std::vector<RatVector> failing_vertices;
};

struct FacetWitness {
  std::size_t facet_index = 0;
  Facet facet;
  RatVector direction;             // primitive diameter direction u
  RatVector start, end;            // end = start + D·u
  bool start_in_facet = true;      // which endpoint lies in relint F
  [[nodiscard]] const RatVector& endpoint_in_facet() const { return start_in_facet ? start : end; }
};

struct CompleteCertificate {
  bool verdict = false;
  FunctionalResult diameter;
  std::vector<FacetWitness> witnesses;  // one per served facet, facet order
  /// First facet with no diameter segment ending in its relative interior.
  std::optional<std::size_t> counter_witness;
  std::vector<std::size_t> failing_facets;
};

/// P is reduced iff every vertex is the unique maximizer of some width direction.
ReducedCertificate is_reduced(const Polytope& p, const Lattice& l);
/// P is complete iff every facet's relative interior holds an endpoint of a
/// diameter segment.
CompleteCertificate is_complete(const Polytope& p, const Lattice& l);

/// A reduced polytope Q ⊆ P with the same width and no more vertices,
/// obtained by dropping or pulling non-reduced vertices (lexicographic order).
Polytope reduce(const Polytope& p, const Lattice& l);

struct SymmetricDualReport {
  FunctionalResult width_of_body;
  FunctionalResult diameter_of_polar;  // w.r.t. the dual lattice
  bool reduced = false;
  bool polar_complete = false;
  bool directions_equal = false;
  [[nodiscard]] bool holds() const { return directions_equal && reduced == polar_complete; }
};
/// Width directions of P versus diameter directions of P* (dual lattice), and
/// the reduced/complete biconditional. Error "not origin-symmetric".
SymmetricDualReport symmetric_dual_check(const Polytope& p, const Lattice& l);

struct StructuralBoundsReport {
  std::size_t dim = 0;
  bool reduced = false;
  bool complete = false;
  std::size_t num_vertices = 0;
  std::size_t num_facets = 0;
  std::size_t width_span = 0;
  std::size_t diameter_span = 0;
  /// reduced ⇒ #vertices <= 2^(k+1) - 2 with k = width span.
  bool vertex_bound_holds = true;
  /// complete ⇒ #facets <= 2^(k+1) - 2 with k = diameter span.
  bool facet_bound_holds = true;
  /// complete simplex ⇒ diameter directions span R^d.
  bool simplex_span_holds = true;
  /// d + 1 <= 2^(k+1) - 2 for the span k belonging to each certified property.
  bool span_lower_bound_holds = true;
  [[nodiscard]] bool holds() const {
    return vertex_bound_holds && facet_bound_holds && simplex_span_holds && span_lower_bound_holds;
  }
};
/// Error "certificate missing" when P is neither reduced nor complete.
StructuralBoundsReport structural_bounds_check(const Polytope& p, const Lattice& l);

struct PlanarInequalityReport {
  Rational width, diameter, lattice_volume;
  bool reduced = false;
  bool complete = false;
  bool diameter_at_most_width = false;
  bool volume_upper_holds = true;  // reduced ⇒ Vol_Λ <= wdt²
  bool volume_lower_holds = true;  // complete ⇒ Vol_Λ >= diam²/2
  [[nodiscard]] bool holds() const {
    return diameter_at_most_width && volume_upper_holds && volume_lower_holds;
  }
};
/// Errors "wrong dimension", "not certified".
PlanarInequalityReport planar_inequality_check(const Polytope& p, const Lattice& l);

/// 2^(k+1) - 2.
Integer direction_span_bound(std::size_t k);

}  // namespace latcvx
