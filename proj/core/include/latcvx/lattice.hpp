#pragma once

#include <optional>
#include <vector>

#include "latcvx/linalg.hpp"
#include "latcvx/polytope.hpp"

namespace latcvx {

/**
 * Full-rank lattice B·Z^d, basis vectors as the columns of B.
 *
 * An optional Gram matrix G (in basis coordinates) fixes the inner product
 * used for Voronoi cells; without it the standard dot product is used,
 * i.e. G = BᵀB. Width, diameter and certification never depend on G.
 */
class Lattice {
 public:
  /// Error "singular matrix" when B is not invertible.
  explicit Lattice(RatMatrix basis);
  /// Error "gram not positive definite" / "dimension mismatch".
  Lattice(RatMatrix basis, RatMatrix gram);

  static Lattice standard(std::size_t d);
  /// Identity basis carrying the given Gram form.
  static Lattice from_gram(const RatMatrix& gram);

  [[nodiscard]] std::size_t dim() const { return basis_.rows(); }
  [[nodiscard]] const RatMatrix& basis() const { return basis_; }
  [[nodiscard]] const RatMatrix& dual_basis() const { return dual_; }
  [[nodiscard]] const RatMatrix& basis_inverse() const { return inverse_; }
  [[nodiscard]] bool has_explicit_gram() const { return explicit_gram_; }
  /// Gram form in basis coordinates (explicit or BᵀB).
  [[nodiscard]] const RatMatrix& gram() const { return gram_; }
  /// |det B|.
  [[nodiscard]] Rational determinant() const;

  /// Basis coordinates B⁻¹x.
  [[nodiscard]] RatVector coordinates(const RatVector& x) const { return inverse_ * x; }
  /// B z.
  [[nodiscard]] RatVector point(const RatVector& z) const { return basis_ * z; }
  [[nodiscard]] bool contains(const RatVector& x) const { return coordinates(x).is_integer(); }
  /// Lattice M·L (Gram form carried over unchanged when explicit).
  [[nodiscard]] Lattice transformed(const RatMatrix& m) const;
  /// Inner product of the Gram form, on ambient vectors.
  [[nodiscard]] Rational inner(const RatVector& x, const RatVector& y) const;

 private:
  RatMatrix basis_, inverse_, dual_, gram_;
  bool explicit_gram_ = false;
};

/// Λ* with basis B⁻ᵀ (and Gram G⁻¹ when the form is explicit).
Lattice dual_lattice(const Lattice& l);
/// Whether two lattices are equal as sets (unimodular change of basis).
bool same_lattice(const Lattice& a, const Lattice& b);
/// Λ ⊕ Λ' with block-diagonal basis (and Gram when either is explicit).
Lattice direct_sum(const Lattice& a, const Lattice& b);

/// Errors: "not a lattice vector" (non-integral coordinates or zero).
bool is_primitive(const RatVector& v, const Lattice& l);
RatVector primitive_part(const RatVector& v, const Lattice& l);
/// Lattice length of the segment [a, b]. Error "not a lattice direction"
/// when a = b.
Rational lattice_length(const RatVector& a, const RatVector& b, const Lattice& l);

enum class EnumerationMode { Closure, Interior };
/// Lattice points in P (or its interior), lexicographically sorted.
std::vector<RatVector> enumerate_lattice_points(const Polytope& p, const Lattice& l,
                                                EnumerationMode mode);

struct MinimumResult {
  Rational value;
  /// One vector per ± pair (the lexicographically larger), in descending
  /// lexicographic order.
  std::vector<RatVector> minimizers;
};

/// λ₁(K; L) with all minimizers. K must be origin-symmetric; errors
/// "not origin-symmetric", "origin not interior".
MinimumResult first_minimum(const Polytope& k, const Lattice& l);

/// Strict Voronoi-relevant vectors (both signs), sorted.
std::vector<RatVector> voronoi_relevant(const Lattice& l);
/// Voronoi cell of 0 with respect to the Gram form.
Polytope voronoi_cell(const Lattice& l);

/// Canonical representative of ±v: the lexicographically larger one.
RatVector sign_representative(const RatVector& v);

}  // namespace latcvx
