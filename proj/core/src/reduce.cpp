#include <algorithm>

#include "latcvx/certify.hpp"
#include "latcvx/errors.hpp"

namespace latcvx {

namespace {

std::vector<RatVector> without(const std::vector<RatVector>& pts, const RatVector& v) {
  std::vector<RatVector> out;
  for (const auto& p : pts)
    if (p != v) out.push_back(p);
  return out;
}

RatVector centroid(const std::vector<RatVector>& pts) {
  RatVector c(pts.front().dim());
  for (const auto& p : pts) c += p;
  return c / Rational(static_cast<long>(pts.size()));
}

// Smallest λ in [0, 1] with wdt(conv(rest ∪ {x0 + λ(v - x0)})) = w0.
// For each dual vector y the width along y is max(M, b + λs) - min(m, b + λs)
// with b = y·x0, s = y·(v - x0), which is nondecreasing in λ; only the
// finitely many y that are short on some pulled body can bind.
Rational pull_threshold(const std::vector<RatVector>& rest, const RatVector& v,
                        const Lattice& l, const Rational& w0) {
  const RatVector x0 = centroid(rest);
  auto pulled = [&](const Rational& lambda) {
    std::vector<RatVector> pts = rest;
    pts.push_back(x0 + (v - x0) * lambda);
    return pts;
  };

  Rational mu;
  std::optional<Polytope> body;
  if (affine_dimension(rest) == static_cast<int>(l.dim())) {
    body = Polytope::hull(rest);
    if (width(*body, l).value >= w0) throw InvariantError("vertex pull on a droppable vertex");
  } else {
    mu = Rational(1, 2);
    for (;;) {
      body = Polytope::hull(pulled(mu));
      if (width(*body, l).value < w0) break;
      mu /= 2;
    }
  }

  const Lattice dual = dual_lattice(l);
  const auto candidates = enumerate_lattice_points(scale(polar(difference_body(*body)), w0), dual,
                                                   EnumerationMode::Interior);
  Rational lambda0 = mu;
  for (const auto& y : candidates) {
    if (y.is_zero()) continue;
    Rational hi = dot(y, rest.front()), lo = hi;
    for (const auto& r : rest) {
      const Rational t = dot(y, r);
      hi = max(hi, t);
      lo = min(lo, t);
    }
    if (hi - lo >= w0) continue;
    const Rational base = dot(y, x0);
    const Rational s = dot(y, v - x0);
    if (s.is_zero()) throw InvariantError("direction shorter than the width");
    const Rational lambda = s.sign() > 0 ? (w0 + lo - base) / s : (hi - w0 - base) / s;
    lambda0 = max(lambda0, lambda);
  }
  return lambda0;
}

}  // namespace

Polytope reduce(const Polytope& p, const Lattice& l) {
  const Rational w0 = width(p, l).value;
  Polytope current = p;
  for (;;) {
    const ReducedCertificate cert = is_reduced(current, l);
    if (cert.verdict) return current;
    const RatVector v = *cert.counter_witness;
    const std::vector<RatVector> rest = without(current.vertices(), v);

    if (affine_dimension(rest) == static_cast<int>(p.dim())) {
      Polytope dropped = Polytope::hull(rest);
      if (width(dropped, l).value == w0) {
        current = std::move(dropped);
        continue;
      }
    }

    const Rational lambda0 = pull_threshold(rest, v, l, w0);
    const RatVector x0 = centroid(rest);
    const RatVector moved = x0 + (v - x0) * lambda0;
    std::vector<RatVector> pts = rest;
    pts.push_back(moved);
    Polytope next = Polytope::hull(pts);
    if (!next.vertex_index(moved)) throw InvariantError("pulled point is not a vertex");
    if (width(next, l).value != w0) throw InvariantError("vertex pull changed the width");
    current = std::move(next);
  }
}

}  // namespace latcvx
