#include <algorithm>

#include "latcvx/constructions.hpp"
#include "latcvx/errors.hpp"

namespace latcvx {

RatVector TriangleNormalization::apply(const Lattice& l, const RatVector& x) const {
  return (unimodular * l.coordinates(x)) * dilation + translation;
}

TriangleClass classify_triangle(const Polytope& t, const Lattice& l) {
  if (t.dim() != 2 || l.dim() != 2 || t.num_vertices() != 3)
    throw PreconditionError("not a triangle");
  TriangleClass out;
  const ReducedCertificate red = is_reduced(t, l);
  out.reduced = red.verdict;
  out.complete = is_complete(t, l).verdict;
  out.consistent = out.reduced || !out.complete;
  if (!out.reduced) return out;

  const Rational w0 = red.width.value;
  const Rational dilation = Rational(2) / w0;
  std::vector<RatVector> coords;
  for (const auto& v : t.vertices()) coords.push_back(l.coordinates(v));
  // width directions in lattice coordinates are integer vectors Bᵀy
  std::vector<RatVector> dirs;
  for (const auto& y : red.width.directions) dirs.push_back(l.basis().transpose() * y);

  const RatVector corner{-1, -1};
  for (std::size_t i = 0; i < dirs.size(); ++i)
    for (std::size_t j = 0; j < dirs.size(); ++j) {
      if (i == j) continue;
      for (int s1 : {1, -1})
        for (int s2 : {1, -1}) {
          RatMatrix u = RatMatrix::from_rows({dirs[i] * Rational(s1), dirs[j] * Rational(s2)});
          if (u.det().abs() != Rational(1)) continue;
          std::vector<RatVector> img;
          for (const auto& c : coords) img.push_back(u * c * dilation);
          Rational min_x = img[0][0], min_y = img[0][1];
          for (const auto& p : img) {
            min_x = min(min_x, p[0]);
            min_y = min(min_y, p[1]);
          }
          const RatVector shift{Rational(-1) - min_x, Rational(-1) - min_y};
          for (auto& p : img) p += shift;
          std::sort(img.begin(), img.end());
          if (img[0] != corner) continue;
          // the other two are (x, 1) and (1, y)
          std::optional<Rational> x, y;
          for (std::size_t k = 1; k < 3; ++k) {
            if (img[k][1] == Rational(1) && !x)
              x = img[k][0];
            else if (img[k][0] == Rational(1) && !y)
              y = img[k][1];
          }
          if (!x || !y) continue;
          std::pair<Rational, Rational> params{*x, *y};
          if (!out.canonical_params || params > *out.canonical_params) {
            out.canonical_params = params;
            out.normalization = TriangleNormalization{u, dilation, shift};
          }
        }
    }
  if (!out.canonical_params) throw InvariantError("reduced triangle without a normal form");
  const auto& [x, y] = *out.canonical_params;
  const bool complete_form = x == -y && x.abs() < Rational(1);
  out.consistent = out.consistent && x + y <= Rational(0) && complete_form == out.complete;
  return out;
}

}  // namespace latcvx
