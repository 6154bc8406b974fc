#pragma once

// Brute-force reference implementations used only by tests. They share the
// exact kernel with the library but none of its enumeration, minimum or
// certification code.

#include <vector>

#include <latcvx/latcvx.hpp>

namespace latcvx::testing {

struct OracleResult {
  Rational value;
  std::vector<RatVector> directions;  // sign representatives, sorted descending
};

/// All nonzero integer vectors z with |z_i| <= r_i, one per ± pair.
std::vector<RatVector> box_vectors(const std::vector<long>& r, bool primitive_only);

// Each oracle scans a coordinate box that provably contains every candidate:
// the box comes from a crude bound (a basis vector's value) and the vertex
// coordinates, never from the library's own enumeration.

/// min over y = B⁻ᵀz of max y·v − min y·v over the vertices.
OracleResult oracle_width(const Polytope& p, const Lattice& l);
/// Longest chord along u: max t with x, x + t·u in P (LP in vertex weights).
Rational chord_length(const Polytope& p, const RatVector& u);
/// max over primitive u = Bz of chord_length(P, u).
OracleResult oracle_diameter(const Polytope& p, const Lattice& l);
/// min over nonzero lattice points of the gauge of K.
OracleResult oracle_first_minimum(const Polytope& k, const Lattice& l);
/// Lattice points in P found by scanning the coordinate bounding box.
std::vector<RatVector> oracle_lattice_points(const Polytope& p, const Lattice& l, bool interior);

/// P with a small cap around vertex i removed.
Polytope truncate_vertex(const Polytope& p, std::size_t i, const Rational& eps);
/// P together with a point at distance eps beyond the centroid of facet i.
Polytope stack_facet(const Polytope& p, std::size_t i, const Rational& eps);

/// Reduced iff cutting any vertex cap lowers the width.
bool oracle_is_reduced(const Polytope& p, const Lattice& l,
                       const Rational& eps = Rational(1, 1000));
/// Complete iff stacking any facet raises the diameter.
bool oracle_is_complete(const Polytope& p, const Lattice& l,
                        const Rational& eps = Rational(1, 1000));

}  // namespace latcvx::testing
