#include "latcvx/functionals.hpp"

#include "latcvx/errors.hpp"

namespace latcvx {

namespace {

FunctionalResult from_minimum(MinimumResult m, bool reciprocal) {
  FunctionalResult r;
  r.value = reciprocal ? m.value.inverse() : std::move(m.value);
  r.span_dim = rank_of(m.minimizers);
  r.directions = std::move(m.minimizers);
  return r;
}

void require_matching(const Polytope& p, const Lattice& l) {
  if (p.dim() != l.dim()) throw PreconditionError("dimension mismatch");
}

}  // namespace

FunctionalResult width(const Polytope& p, const Lattice& l) {
  require_matching(p, l);
  return from_minimum(first_minimum(polar(difference_body(p)), dual_lattice(l)), false);
}

FunctionalResult diameter(const Polytope& p, const Lattice& l) {
  require_matching(p, l);
  return from_minimum(first_minimum(difference_body(p), l), true);
}

HollowResult is_hollow(const Polytope& p, const Lattice& l) {
  require_matching(p, l);
  auto pts = enumerate_lattice_points(p, l, EnumerationMode::Interior);
  if (pts.empty()) return {};
  return HollowResult{false, pts.front()};
}

}  // namespace latcvx
