#include <functional>
#include <map>

#include "latcvx/constructions.hpp"
#include "latcvx/errors.hpp"

namespace latcvx {

RatMatrix a_cartan_gram(std::size_t d) {
  RatMatrix g(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    g(i, i) = 2;
    if (i + 1 < d) g(i, i + 1) = g(i + 1, i) = -1;
  }
  return g;
}

RatMatrix a_star_gram(std::size_t d) { return a_cartan_gram(d).inverse(); }

Polytope standard_simplex(std::size_t d) {
  std::vector<RatVector> pts{-RatVector::ones(d)};
  for (std::size_t i = 0; i < d; ++i) pts.push_back(RatVector::unit(d, i));
  return Polytope::hull(pts);
}

Polytope triangle_xy(const Rational& x, const Rational& y) {
  return Polytope::hull({RatVector{-1, -1}, RatVector{x, 1}, RatVector{1, y}});
}

namespace {

using Params = std::vector<Rational>;

struct Recipe {
  GalleryInfo info;
  std::size_t arity;
  std::function<GalleryEntry(const Params&)> build;
};

void require(bool ok) {
  if (!ok) throw PreconditionError("params out of range");
}

std::size_t small_dimension(const Rational& r, std::size_t lo, std::size_t hi) {
  require(r.is_integer() && r >= Rational(static_cast<long>(lo)) &&
          r <= Rational(static_cast<long>(hi)));
  return r.numerator().get_ui();
}

Polytope polygon(std::initializer_list<RatVector> pts) { return Polytope::hull(pts); }

Polytope symmetric(std::initializer_list<RatVector> half) {
  std::vector<RatVector> pts;
  for (const auto& v : half) {
    pts.push_back(v);
    pts.push_back(-v);
  }
  return Polytope::hull(pts);
}

GalleryEntry entry(std::string name, Params params, Polytope p, Lattice l,
                   ExpectedProperties e = {}) {
  return GalleryEntry{std::move(name), std::move(params), std::move(p), std::move(l),
                      std::move(e)};
}

Polytope sd_minus_sd(std::size_t d) {
  std::vector<Facet> ineq;
  const Rational d1 = static_cast<long>(d + 1);
  for (unsigned long mask = 1; mask < (1ul << d); ++mask) {
    long size = 0;
    for (std::size_t j = 0; j < d; ++j) size += static_cast<long>(mask >> j & 1ul);
    const Rational in = Rational(static_cast<long>(d) - size + 1) / d1;
    const Rational out = Rational(size) / d1;
    RatVector a(d);
    for (std::size_t j = 0; j < d; ++j) a[j] = (mask >> j & 1ul) ? in : -out;
    ineq.push_back(Facet{a, 1});
    ineq.push_back(Facet{-a, 1});
  }
  return Polytope::from_inequalities(ineq);
}

const std::vector<Recipe>& recipes() {
  static const std::vector<Recipe> all = [] {
    std::vector<Recipe> r;
    r.push_back({{"s_d", "d (integer 1..8)", "conv{-1, e_1, ..., e_d}: reduced and complete"},
                 1, [](const Params& p) {
                   const std::size_t d = small_dimension(p[0], 1, 8);
                   const Rational dr = static_cast<long>(d);
                   return entry("s_d", p, standard_simplex(d), Lattice::standard(d),
                                {true, true, Rational(2), (dr + 1) / dr});
                 }});
    r.push_back({{"orth_triangle", "", "conv{0, e_1, e_2}: reduced, not complete"}, 0,
                 [](const Params& p) {
                   return entry("orth_triangle", p, polygon({{0, 0}, {1, 0}, {0, 1}}),
                                Lattice::standard(2), {true, false, Rational(1), Rational(1)});
                 }});
    r.push_back({{"square", "", "[-1,1]^2: complete, not reduced"}, 0, [](const Params& p) {
                   return entry("square", p, symmetric({{1, 1}, {1, -1}}), Lattice::standard(2),
                                {false, true, Rational(2), Rational(2)});
                 }});
    r.push_back({{"diamond", "", "conv{±e_1, ±e_2}: reduced, not complete"}, 0,
                 [](const Params& p) {
                   return entry("diamond", p, symmetric({{1, 0}, {0, 1}}), Lattice::standard(2),
                                {true, false, Rational(2), Rational(2)});
                 }});
    r.push_back({{"twisted_square", "x in (0,1)",
                  "conv{±(1,x), ±(x,-1)}: reduced and complete"},
                 1, [](const Params& p) {
                   const Rational& x = p[0];
                   require(x > Rational(0) && x < Rational(1));
                   const Rational one = 1;
                   return entry("twisted_square", p, symmetric({{one, x}, {x, -one}}),
                                Lattice::standard(2),
                                {true, true, Rational(2), Rational(2) * (one + x * x) / (one + x)});
                 }});
    r.push_back({{"pentagon", "", "conv{(-1,1), (1,2), (2,-2), (-2,-1)}: reduced, not complete"},
                 0, [](const Params& p) {
                   return entry("pentagon", p, polygon({{-1, 1}, {1, 2}, {2, -2}, {-2, -1}}),
                                Lattice::standard(2), {true, false, {}, {}});
                 }});
    r.push_back({{"hexagon", "", "conv{±(2,-1), ±(-1,2), ±(1,1)}: reduced and complete"}, 0,
                 [](const Params& p) {
                   return entry("hexagon", p, symmetric({{2, -1}, {-1, 2}, {1, 1}}),
                                Lattice::standard(2), {true, true, {}, {}});
                 }});
    r.push_back({{"t_xy", "x,y in [-1,1]",
                  "conv{(-1,-1), (x,1), (1,y)}: reduced iff x+y <= 0, complete iff x = -y, |x| < 1"},
                 2, [](const Params& p) {
                   const Rational &x = p[0], &y = p[1];
                   const Rational one = 1;
                   require(x >= -one && x <= one && y >= -one && y <= one);
                   const bool reduced = x + y <= Rational(0);
                   const bool complete = x == -y && x.abs() < one;
                   ExpectedProperties e{reduced, complete, {}, {}};
                   if (reduced) e.width = Rational(2);
                   return entry("t_xy", p, triangle_xy(x, y), Lattice::standard(2), e);
                 }});
    r.push_back({{"t_x", "x in [0,1)", "conv{(-1,-1), (x,1), (1,-x)}: reduced and complete"}, 1,
                 [](const Params& p) {
                   const Rational& x = p[0];
                   require(x >= Rational(0) && x < Rational(1));
                   return entry("t_x", p, triangle_xy(x, -x), Lattice::standard(2),
                                {true, true, Rational(2), {}});
                 }});
    r.push_back({{"delta_tetra", "alpha,beta,gamma in [1/2,1), sum 2",
                  "conv{0, e_i+e_j} with the lattice spanned by (-a,b,c), (a,-b,c), (a,b,-c)"},
                 3, [](const Params& p) {
                   const Rational &a = p[0], &b = p[1], &c = p[2];
                   const Rational half(1, 2), one = 1;
                   for (const auto& t : p) require(t >= half && t < one);
                   require(a + b + c == Rational(2));
                   const Polytope tetra = Polytope::hull({{0, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
                   const Lattice l(RatMatrix::from_columns({{-a, b, c}, {a, -b, c}, {a, b, -c}}));
                   ExpectedProperties e;
                   e.complete = true;
                   if (p == Params{Rational(3, 4), Rational(3, 4), Rational(1, 2)}) e.reduced = true;
                   if (p == Params{Rational(13, 20), Rational(13, 20), Rational(7, 10)})
                     e.reduced = false;
                   return entry("delta_tetra", p, tetra, l, e);
                 }});
    r.push_back({{"voronoi", "d (integer 1..6)", "Voronoi cell of Z^d: complete, diameter 1"}, 1,
                 [](const Params& p) {
                   const std::size_t d = small_dimension(p[0], 1, 6);
                   GalleryEntry e = gallery_voronoi(Lattice::standard(d));
                   e.params = p;
                   return e;
                 }});
    r.push_back({{"permutohedron", "d (integer 1..5)",
                  "Voronoi cell of A_d* (Gram form, identity basis): 2^(d+1)-2 facets, complete"},
                 1, [](const Params& p) {
                   const std::size_t d = small_dimension(p[0], 1, 5);
                   GalleryEntry e = gallery_voronoi(Lattice::from_gram(a_star_gram(d)));
                   e.name = "permutohedron";
                   e.params = p;
                   return e;
                 }});
    r.push_back({{"sd_minus_sd", "d (integer 1..6)", "S_d - S_d from its facet description"}, 1,
                 [](const Params& p) {
                   const std::size_t d = small_dimension(p[0], 1, 6);
                   return entry("sd_minus_sd", p, sd_minus_sd(d), Lattice::standard(d));
                 }});
    r.push_back({{"segment", "", "[-1,1] in dimension 1: reduced and complete"}, 0,
                 [](const Params& p) {
                   return entry("segment", p, Polytope::hull({{-1}, {1}}), Lattice::standard(1),
                                {true, true, Rational(2), Rational(2)});
                 }});
    return r;
  }();
  return all;
}

}  // namespace

std::vector<GalleryInfo> gallery_catalog() {
  std::vector<GalleryInfo> out;
  for (const auto& r : recipes()) out.push_back(r.info);
  return out;
}

GalleryEntry gallery(const std::string& name, const std::vector<Rational>& params) {
  for (const auto& r : recipes()) {
    if (r.info.name != name) continue;
    if (params.size() != r.arity) throw PreconditionError("params out of range");
    return r.build(params);
  }
  throw PreconditionError("unknown name: " + name);
}

GalleryEntry gallery_voronoi(const Lattice& l) {
  ExpectedProperties e;
  e.complete = true;
  e.diameter = Rational(1);
  return GalleryEntry{"voronoi", {}, voronoi_cell(l), l, e};
}

}  // namespace latcvx
