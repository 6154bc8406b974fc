#include "latcvx/lattice.hpp"

#include "latcvx/errors.hpp"

namespace latcvx {

Lattice::Lattice(RatMatrix basis) : basis_(std::move(basis)) {
  if (!basis_.is_square() || basis_.rows() == 0) throw PreconditionError("basis must be square");
  inverse_ = basis_.inverse();
  dual_ = inverse_.transpose();
  gram_ = basis_.transpose() * basis_;
}

Lattice::Lattice(RatMatrix basis, RatMatrix gram) : Lattice(std::move(basis)) {
  if (gram.rows() != dim() || gram.cols() != dim()) throw PreconditionError("dimension mismatch");
  if (!ldl_positive_definite(gram)) throw PreconditionError("gram not positive definite");
  gram_ = std::move(gram);
  explicit_gram_ = true;
}

Lattice Lattice::standard(std::size_t d) { return Lattice(RatMatrix::identity(d)); }

Lattice Lattice::from_gram(const RatMatrix& gram) {
  return Lattice(RatMatrix::identity(gram.rows()), gram);
}

Rational Lattice::determinant() const { return basis_.det().abs(); }

Lattice Lattice::transformed(const RatMatrix& m) const {
  if (explicit_gram_) return Lattice(m * basis_, gram_);
  return Lattice(m * basis_);
}

Rational Lattice::inner(const RatVector& x, const RatVector& y) const {
  return dot(coordinates(x), gram_ * coordinates(y));
}

Lattice dual_lattice(const Lattice& l) {
  if (l.has_explicit_gram()) return Lattice(l.dual_basis(), l.gram().inverse());
  return Lattice(l.dual_basis());
}

bool same_lattice(const Lattice& a, const Lattice& b) {
  if (a.dim() != b.dim()) return false;
  return (a.basis_inverse() * b.basis()).is_unimodular();
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
  const RatMatrix basis = RatMatrix::block_diagonal(a.basis(), b.basis());
  if (a.has_explicit_gram() || b.has_explicit_gram())
    return Lattice(basis, RatMatrix::block_diagonal(a.gram(), b.gram()));
  return Lattice(basis);
}

namespace {

RatVector lattice_coordinates(const RatVector& v, const Lattice& l) {
  if (v.dim() != l.dim()) throw PreconditionError("dimension mismatch");
  RatVector z = l.coordinates(v);
  if (!z.is_integer() || z.is_zero()) throw PreconditionError("not a lattice vector");
  return z;
}

}  // namespace

bool is_primitive(const RatVector& v, const Lattice& l) {
  return primitive_scale(lattice_coordinates(v, l)) == Rational(1);
}

RatVector primitive_part(const RatVector& v, const Lattice& l) {
  return v * primitive_scale(lattice_coordinates(v, l));
}

Rational lattice_length(const RatVector& a, const RatVector& b, const Lattice& l) {
  if (a.dim() != l.dim() || b.dim() != l.dim()) throw PreconditionError("dimension mismatch");
  const RatVector w = l.coordinates(b - a);
  if (w.is_zero()) throw PreconditionError("not a lattice direction");
  return primitive_scale(w).inverse();
}

RatVector sign_representative(const RatVector& v) {
  RatVector n = -v;
  return n > v ? n : v;
}

}  // namespace latcvx
