#include "latcvx/constructions.hpp"

#include "latcvx/errors.hpp"

namespace latcvx {

namespace {

void require_origin_interior(const Polytope& p) {
  if (!p.contains_in_interior(RatVector(p.dim()))) throw PreconditionError("origin not interior");
}

std::vector<RatVector> embed(const std::vector<RatVector>& pts, std::size_t before,
                             std::size_t after, const Rational& last_extra = 0,
                             bool extra = false) {
  std::vector<RatVector> out;
  for (const auto& p : pts) {
    RatVector v = RatVector(before).concat(p).concat(RatVector(after));
    if (extra) v.push_back(last_extra);
    out.push_back(std::move(v));
  }
  return out;
}

void check_free_sum_inputs(const Polytope& p, const Lattice& lp, const Polytope& q,
                           const Lattice& lq, Rational* common_width) {
  require_origin_interior(p);
  require_origin_interior(q);
  const ReducedCertificate rp = is_reduced(p, lp);
  const ReducedCertificate rq = is_reduced(q, lq);
  if (!rp.verdict || !rq.verdict) throw PreconditionError("input not reduced");
  if (rp.width.value != rq.width.value) throw PreconditionError("width mismatch");
  *common_width = rp.width.value;
}

}  // namespace

Construction product(const Polytope& p, const Lattice& lp, const Polytope& q, const Lattice& lq) {
  const CompleteCertificate cp = is_complete(p, lp);
  const CompleteCertificate cq = is_complete(q, lq);
  if (!cp.verdict || !cq.verdict) throw PreconditionError("input not complete");
  if (cp.diameter.value != cq.diameter.value) throw PreconditionError("diameter mismatch");
  Construction c{cartesian_product(p, q), direct_sum(lp, lq)};
  if (!is_complete(c.polytope, c.lattice).verdict)
    throw InvariantError("product of complete bodies is not complete");
  return c;
}

Construction free_sum(const Polytope& p, const Lattice& lp, const Polytope& q, const Lattice& lq) {
  Rational w;
  check_free_sum_inputs(p, lp, q, lq, &w);
  std::vector<RatVector> pts = embed(p.vertices(), 0, q.dim());
  for (auto& v : embed(q.vertices(), p.dim(), 0)) pts.push_back(std::move(v));
  Construction c{Polytope::hull(pts), direct_sum(lp, lq)};
  if (!is_reduced(c.polytope, c.lattice).verdict)
    throw InvariantError("free sum of reduced bodies is not reduced");
  return c;
}

Construction join(const Polytope& p, const Lattice& lp, const Polytope& q, const Lattice& lq,
                  const Rational& h) {
  Rational w;
  check_free_sum_inputs(p, lp, q, lq, &w);
  if (h.abs() < w) throw PreconditionError("height too small");
  std::vector<RatVector> pts = embed(p.vertices(), 0, q.dim(), 0, true);
  for (auto& v : embed(q.vertices(), p.dim(), 0, h, true)) pts.push_back(std::move(v));
  Construction c{Polytope::hull(pts), direct_sum(direct_sum(lp, lq), Lattice::standard(1))};
  if (!is_reduced(c.polytope, c.lattice).verdict)
    throw InvariantError("join of reduced bodies is not reduced");
  return c;
}

Construction lift(const Polytope& p, const Lattice& l) {
  if (!p.is_origin_symmetric()) throw PreconditionError("not origin-symmetric");
  const std::size_t d = p.dim();
  if (p.num_facets() <= 2 * d) throw PreconditionError("too few facets");
  const CompleteCertificate cert = is_complete(p, l);
  if (!cert.verdict) throw PreconditionError("not complete");

  // one normal a_i per facet pair, scaled so that |a_i·x| <= 1
  std::vector<RatVector> normals;
  for (const auto& f : p.facets()) {
    RatVector a = f.normal / f.offset;
    if (sign_representative(a) == a) normals.push_back(std::move(a));
  }
  // d independent normals keep 0 interior to conv{±a_ij}; lift the first normal outside them
  std::vector<RatVector> chosen;
  std::vector<bool> in_basis(normals.size(), false);
  for (std::size_t i = 0; i < normals.size() && chosen.size() < d; ++i) {
    chosen.push_back(normals[i]);
    if (rank_of(chosen) == chosen.size())
      in_basis[i] = true;
    else
      chosen.pop_back();
  }
  std::size_t lifted = 0;
  while (in_basis[lifted]) ++lifted;

  std::vector<Facet> ineq;
  for (std::size_t i = 0; i < normals.size(); ++i) {
    RatVector a = normals[i];
    a.push_back(i == lifted ? Rational(1) : Rational(0));
    ineq.push_back(Facet{a, 1});
    ineq.push_back(Facet{-a, 1});
  }
  Polytope lifted_body = Polytope::from_inequalities(ineq);
  if (lifted_body.num_facets() != p.num_facets())
    throw InvariantError("lifting changed the number of facets");

  // no point of the new lattice layers may reach lambda_1(P) * P̄, where
  // lambda_1(P) = 2 / diam(P) is where the diameter directions live
  Rational height;
  for (const auto& v : lifted_body.vertices()) height = max(height, v[d].abs());
  const Rational reach = max(Rational(1), Rational(2) / cert.diameter.value);
  const Rational t = reach * height + 1;
  const RatMatrix tb{{t}};
  // an explicit form gives the new basis vector unit length and keeps it orthogonal
  Lattice lattice = l.has_explicit_gram()
                        ? Lattice(RatMatrix::block_diagonal(l.basis(), tb),
                                  RatMatrix::block_diagonal(l.gram(), RatMatrix{{Rational(1)}}))
                        : Lattice(RatMatrix::block_diagonal(l.basis(), tb));

  Construction c{std::move(lifted_body), std::move(lattice)};
  const CompleteCertificate out = is_complete(c.polytope, c.lattice);
  if (!out.verdict) throw InvariantError("lifted body is not complete");
  std::vector<RatVector> expected;
  for (const auto& u : cert.diameter.directions) expected.push_back(u.concat(RatVector(1)));
  if (out.diameter.directions != expected || out.diameter.value != cert.diameter.value)
    throw InvariantError("lifting changed the diameter directions");
  return c;
}

}  // namespace latcvx
