#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latcvx/certify.hpp"

namespace latcvx {

/// Properties a named body is known to have (unset = not recorded).
struct ExpectedProperties {
  std::optional<bool> reduced;
  std::optional<bool> complete;
  std::optional<Rational> width;
  std::optional<Rational> diameter;
};

struct GalleryEntry {
  std::string name;
  std::vector<Rational> params;
  Polytope polytope;
  Lattice lattice;
  ExpectedProperties expected;
};

struct GalleryInfo {
  std::string name;
  std::string params;  // human-readable parameter schema
  std::string description;
};

/// Names and parameter schemas of every catalog entry.
std::vector<GalleryInfo> gallery_catalog();
/// Errors: "unknown name", "params out of range", "degenerate".
GalleryEntry gallery(const std::string& name, const std::vector<Rational>& params = {});
/// Voronoi cell of an arbitrary lattice (complete, diameter 1).
GalleryEntry gallery_voronoi(const Lattice& l);

/// Gram form of A_d* (inverse of the A_d Cartan matrix).
RatMatrix a_star_gram(std::size_t d);
/// The A_d Cartan matrix (2 on the diagonal, -1 next to it).
RatMatrix a_cartan_gram(std::size_t d);
/// conv{-𝟙, e_1, ..., e_d}.
Polytope standard_simplex(std::size_t d);
/// conv{(-1,-1), (x,1), (1,y)}; error "degenerate" at x = y = 1.
Polytope triangle_xy(const Rational& x, const Rational& y);

struct Construction {
  Polytope polytope;
  Lattice lattice;
};

/// P × Q with L_P ⊕ L_Q. Errors: "input not complete", "diameter mismatch".
Construction product(const Polytope& p, const Lattice& lp, const Polytope& q, const Lattice& lq);
/// conv(P × 0 ∪ 0 × Q). Errors: "origin not interior", "input not reduced", "width mismatch".
Construction free_sum(const Polytope& p, const Lattice& lp, const Polytope& q, const Lattice& lq);
/// conv(P × 0 × 0 ∪ 0 × Q × {h}) with lattice L_P ⊕ L_Q ⊕ Z. Errors as
/// free_sum plus "height too small".
Construction join(const Polytope& p, const Lattice& lp, const Polytope& q, const Lattice& lq,
                  const Rational& h);
/// Lifts the facet normals of a complete origin-symmetric polytope one
/// dimension up and extends the lattice so that the result stays complete
/// with the same diameter directions. Errors: "not origin-symmetric",
/// "too few facets", "not complete".
Construction lift(const Polytope& p, const Lattice& l);

struct TriangleNormalization {
  RatMatrix unimodular;   // acts on lattice coordinates
  Rational dilation;      // positive
  RatVector translation;  // applied last
  /// dilation · U · B⁻¹ · x + translation
  [[nodiscard]] RatVector apply(const Lattice& l, const RatVector& x) const;
};

struct TriangleClass {
  bool reduced = false;
  bool complete = false;
  /// (x, y) with T equivalent to T_xy; the lexicographically largest such pair.
  std::optional<std::pair<Rational, Rational>> canonical_params;
  std::optional<TriangleNormalization> normalization;
  /// Verdicts agree with the closed forms (reduced ⇔ x + y <= 0,
  /// complete ⇔ x = -y with |x| < 1, complete ⇒ reduced).
  bool consistent = true;
};

/// Error "not a triangle".
TriangleClass classify_triangle(const Polytope& t, const Lattice& l);

}  // namespace latcvx
