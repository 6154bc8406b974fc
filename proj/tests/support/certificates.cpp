#include "certificates.hpp"

#include <set>

namespace latcvx::testing {

namespace {

bool is_width_direction(const ReducedCertificate& c, const RatVector& y) {
  for (const auto& d : c.width.directions)
    if (d == y || d == -y) return true;
  return false;
}

}  // namespace

std::string audit(const Polytope& p, const Lattice& l, const ReducedCertificate& c) {
  const Lattice dual = dual_lattice(l);
  for (const auto& y : c.width.directions) {
    if (!is_primitive(y, dual)) return "width direction not primitive in the dual lattice";
    if (p.width_along(y) != c.width.value) return "width direction does not attain the width";
  }
  if (c.verdict) {
    if (c.witnesses.size() != p.num_vertices()) return "missing vertex witnesses";
    for (std::size_t i = 0; i < c.witnesses.size(); ++i) {
      const auto& w = c.witnesses[i];
      if (w.vertex != p.vertices()[i]) return "witness vertex order";
      if (!is_width_direction(c, w.direction)) return "witness direction is not a width direction";
      if (normal_cone_membership(p, i, w.direction) != ConeMembership::Interior)
        return "witness direction does not expose its vertex";
    }
    if (c.counter_witness) return "counter-witness on a true verdict";
    return {};
  }
  if (!c.counter_witness) return "false verdict without counter-witness";
  const auto idx = p.vertex_index(*c.counter_witness);
  if (!idx) return "counter-witness is not a vertex";
  for (const auto& y : c.width.directions)
    for (const auto& s : {y, -y})
      if (normal_cone_membership(p, *idx, s) == ConeMembership::Interior)
        return "counter-witness is exposed by a width direction";
  return {};
}

std::string audit(const Polytope& p, const Lattice& l, const CompleteCertificate& c) {
  const Rational& d = c.diameter.value;
  for (const auto& u : c.diameter.directions) {
    if (!is_primitive(u, l)) return "diameter direction not primitive";
  }
  if (c.verdict) {
    if (c.witnesses.size() != p.num_facets()) return "missing facet witnesses";
    std::set<std::size_t> seen;
    for (const auto& w : c.witnesses) {
      seen.insert(w.facet_index);
      if (w.facet != p.facets()[w.facet_index]) return "witness facet mismatch";
      if (w.end != w.start + w.direction * d) return "segment is not start + D·u";
      if (!p.contains(w.start) || !p.contains(w.end)) return "segment leaves the polytope";
      if (lattice_length(w.start, w.end, l) != d) return "segment length differs from the diameter";
      const RatVector& x = w.endpoint_in_facet();
      for (std::size_t i = 0; i < p.num_facets(); ++i) {
        const Rational s = p.facets()[i].slack(x);
        if (i == w.facet_index ? s != 0 : s <= 0) return "endpoint not in the relative interior";
      }
    }
    if (seen.size() != p.num_facets()) return "facet witnessed twice";
    if (c.counter_witness) return "counter-witness on a true verdict";
    return {};
  }
  if (!c.counter_witness) return "false verdict without counter-witness";
  if (*c.counter_witness >= p.num_facets()) return "counter-witness is not a facet";
  return {};
}

}  // namespace latcvx::testing
