#include "latcvx/certify.hpp"

#include "latcvx/errors.hpp"

namespace latcvx {

ReducedCertificate is_reduced(const Polytope& p, const Lattice& l) {
  ReducedCertificate cert;
  cert.width = width(p, l);
  for (std::size_t v = 0; v < p.num_vertices(); ++v) {
    std::optional<RatVector> found;
    for (const auto& y : cert.width.directions) {
      if (normal_cone_membership(p, v, y) == ConeMembership::Interior) {
        found = y;
        break;
      }
      if (normal_cone_membership(p, v, -y) == ConeMembership::Interior) {
        found = -y;
        break;
      }
    }
    if (found)
      cert.witnesses.push_back(VertexWitness{p.vertices()[v], *found});
    else
      cert.failing_vertices.push_back(p.vertices()[v]);
  }
  cert.verdict = cert.failing_vertices.empty();
  if (!cert.verdict) cert.counter_witness = cert.failing_vertices.front();
  return cert;
}

CompleteCertificate is_complete(const Polytope& p, const Lattice& l) {
  CompleteCertificate cert;
  cert.diameter = diameter(p, l);
  const Rational& dval = cert.diameter.value;
  const HRegion body = HRegion::of(p);

  // start points of diameter segments in direction u: P ∩ (P - D·u)
  std::vector<HRegion> starts;
  for (const auto& u : cert.diameter.directions)
    starts.push_back(body.intersect(body.translated(-(u * dval))));

  for (std::size_t f = 0; f < p.num_facets(); ++f) {
    const Facet& facet = p.facets()[f];
    const FaceRef face = FaceRef::of_facet(p, f);
    std::optional<FacetWitness> found;
    for (std::size_t k = 0; k < cert.diameter.directions.size() && !found; ++k) {
      const RatVector& u = cert.diameter.directions[k];
      const RatVector step = u * dval;
      const int side = dot(facet.normal, u).sign();
      if (side < 0) {
        if (auto a = relint_point_in_face(p, face, starts[k]))
          found = FacetWitness{f, facet, u, *a, *a + step, true};
      } else if (side > 0) {
        if (auto b = relint_point_in_face(p, face, starts[k].translated(step)))
          found = FacetWitness{f, facet, u, *b - step, *b, false};
      }
    }
    if (found)
      cert.witnesses.push_back(std::move(*found));
    else
      cert.failing_facets.push_back(f);
  }
  cert.verdict = cert.failing_facets.empty();
  if (!cert.verdict) cert.counter_witness = cert.failing_facets.front();
  return cert;
}

SymmetricDualReport symmetric_dual_check(const Polytope& p, const Lattice& l) {
  if (!p.is_origin_symmetric()) throw PreconditionError("not origin-symmetric");
  SymmetricDualReport r;
  const Polytope q = polar(p);
  const Lattice dual = dual_lattice(l);
  const ReducedCertificate red = is_reduced(p, l);
  const CompleteCertificate comp = is_complete(q, dual);
  r.width_of_body = red.width;
  r.diameter_of_polar = comp.diameter;
  r.reduced = red.verdict;
  r.polar_complete = comp.verdict;
  r.directions_equal = r.width_of_body.directions == r.diameter_of_polar.directions;
  return r;
}

Integer direction_span_bound(std::size_t k) {
  Integer b = 1;
  b <<= static_cast<mp_bitcnt_t>(k + 1);
  return b - 2;
}

StructuralBoundsReport structural_bounds_check(const Polytope& p, const Lattice& l) {
  StructuralBoundsReport r;
  r.dim = p.dim();
  r.num_vertices = p.num_vertices();
  r.num_facets = p.num_facets();
  const ReducedCertificate red = is_reduced(p, l);
  const CompleteCertificate comp = is_complete(p, l);
  r.reduced = red.verdict;
  r.complete = comp.verdict;
  r.width_span = red.width.span_dim;
  r.diameter_span = comp.diameter.span_dim;
  if (!r.reduced && !r.complete) throw PreconditionError("certificate missing");
  const Integer d1 = static_cast<unsigned long>(r.dim + 1);
  if (r.reduced) {
    const Integer bound = direction_span_bound(r.width_span);
    r.vertex_bound_holds = Integer(static_cast<unsigned long>(r.num_vertices)) <= bound;
    r.span_lower_bound_holds = r.span_lower_bound_holds && d1 <= bound;
  }
  if (r.complete) {
    const Integer bound = direction_span_bound(r.diameter_span);
    r.facet_bound_holds = Integer(static_cast<unsigned long>(r.num_facets)) <= bound;
    r.span_lower_bound_holds = r.span_lower_bound_holds && d1 <= bound;
    if (r.num_vertices == r.dim + 1) r.simplex_span_holds = r.diameter_span == r.dim;
  }
  return r;
}

PlanarInequalityReport planar_inequality_check(const Polytope& p, const Lattice& l) {
  if (p.dim() != 2 || l.dim() != 2) throw PreconditionError("wrong dimension");
  PlanarInequalityReport r;
  const ReducedCertificate red = is_reduced(p, l);
  const CompleteCertificate comp = is_complete(p, l);
  r.reduced = red.verdict;
  r.complete = comp.verdict;
  if (!r.reduced && !r.complete) throw PreconditionError("not certified");
  r.width = red.width.value;
  r.diameter = comp.diameter.value;
  r.lattice_volume = volume(p) / l.determinant();
  r.diameter_at_most_width = r.diameter <= r.width;
  if (r.reduced) r.volume_upper_holds = r.lattice_volume <= r.width * r.width;
  if (r.complete) r.volume_lower_holds = r.lattice_volume * Rational(2) >= r.diameter * r.diameter;
  return r;
}

}  // namespace latcvx
