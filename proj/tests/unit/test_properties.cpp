#include <gtest/gtest.h>

#include "certificates.hpp"
#include "oracles.hpp"
#include "random.hpp"
#include "samples.hpp"
#include "test_util.hpp"

using namespace latcvx;
using latcvx::testing::audit;
using latcvx::testing::gallery_samples;
using latcvx::testing::q;
using latcvx::testing::sorted_desc;

namespace {

std::string label(const GalleryEntry& e) {
  std::string s = e.name;
  for (const auto& p : e.params) s += " " + p.str();
  return s;
}

void check_reduce(const Polytope& p, const Lattice& l) {
  const Polytope r = reduce(p, l);
  for (const auto& v : r.vertices()) EXPECT_TRUE(p.contains(v));
  const Rational w = width(p, l).value;
  EXPECT_EQ(width(r, l).value, w);
  EXPECT_LE(r.num_vertices(), p.num_vertices());
  const auto cert = is_reduced(r, l);
  EXPECT_TRUE(cert.verdict);
  EXPECT_EQ(audit(r, l, cert), "");
  // monotonicity along the inclusion r ⊆ p
  EXPECT_LE(diameter(r, l).value, diameter(p, l).value);
}

std::vector<RatVector> mapped(const std::vector<RatVector>& dirs, const RatMatrix& m) {
  std::vector<RatVector> out;
  for (const auto& d : dirs) out.push_back(sign_representative(m * d));
  return sorted_desc(out);
}

}  // namespace

TEST(Reduce, RandomLatticePolygons) {
  latcvx::testing::Rng rng(81);
  for (int k = 0; k < 200; ++k) {
    SCOPED_TRACE(k);
    check_reduce(rng.lattice_polytope(2, 7, 3), Lattice::standard(2));
  }
}

TEST(Reduce, RandomLatticePolytopesInDimensionThree) {
  latcvx::testing::Rng rng(82);
  for (int k = 0; k < 50; ++k) {
    SCOPED_TRACE(k);
    check_reduce(rng.lattice_polytope(3, 7, 2), Lattice::standard(3));
  }
}

TEST(Reduce, NonStandardLattices) {
  latcvx::testing::Rng rng(83);
  for (int k = 0; k < 20; ++k) {
    SCOPED_TRACE(k);
    check_reduce(rng.lattice_polytope(2, 6, 3), Lattice(rng.invertible(2)));
  }
}

TEST(Oracle, GalleryWidthAndDiameter) {
  for (const auto& e : gallery_samples(3)) {
    SCOPED_TRACE(label(e));
    const auto w = width(e.polytope, e.lattice);
    const auto ow = latcvx::testing::oracle_width(e.polytope, e.lattice);
    EXPECT_EQ(w.value, ow.value);
    EXPECT_EQ(w.directions, ow.directions);
    const auto d = diameter(e.polytope, e.lattice);
    const auto od = latcvx::testing::oracle_diameter(e.polytope, e.lattice);
    EXPECT_EQ(d.value, od.value);
    EXPECT_EQ(d.directions, od.directions);
  }
}

TEST(Oracle, GalleryVerdictsAgreeWithPerturbation) {
  // reduced: every truncation loses width; complete: every stacking gains diameter
  for (const auto& e : gallery_samples(2)) {
    SCOPED_TRACE(label(e));
    EXPECT_EQ(is_reduced(e.polytope, e.lattice).verdict,
              latcvx::testing::oracle_is_reduced(e.polytope, e.lattice));
    EXPECT_EQ(is_complete(e.polytope, e.lattice).verdict,
              latcvx::testing::oracle_is_complete(e.polytope, e.lattice));
  }
}

TEST(Oracle, RandomPolygonsAndLattices) {
  latcvx::testing::Rng rng(84);
  for (int k = 0; k < 40; ++k) {
    SCOPED_TRACE(k);
    const Polytope p = rng.lattice_polytope(2, 6, 3);
    const Lattice l(rng.invertible(2));
    const auto w = width(p, l);
    const auto ow = latcvx::testing::oracle_width(p, l);
    EXPECT_EQ(w.value, ow.value);
    EXPECT_EQ(w.directions, ow.directions);
    const auto d = diameter(p, l);
    const auto od = latcvx::testing::oracle_diameter(p, l);
    EXPECT_EQ(d.value, od.value);
    EXPECT_EQ(d.directions, od.directions);
  }
}

TEST(Invariance, UnimodularMapsAndTranslations) {
  latcvx::testing::Rng rng(85);
  const auto samples = gallery_samples(3);
  for (int k = 0; k < 100; ++k) {
    const GalleryEntry& e = samples[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(samples.size()) - 1))];
    if (e.polytope.dim() == 1) continue;
    SCOPED_TRACE(label(e));
    const std::size_t d = e.polytope.dim();
    // U acts in lattice coordinates, so the ambient map is B U B^-1
    const RatMatrix u = rng.unimodular(d);
    const RatMatrix m = e.lattice.basis() * u * e.lattice.basis().inverse();
    RatVector t(d);
    for (std::size_t i = 0; i < d; ++i) t[i] = rng.rational(-2, 2, 3);
    const Polytope moved = translate(transform(e.polytope, m), t);
    const auto w0 = width(e.polytope, e.lattice), w1 = width(moved, e.lattice);
    EXPECT_EQ(w1.value, w0.value);
    EXPECT_EQ(w1.directions, mapped(w0.directions, m.inverse().transpose()));
    const auto d0 = diameter(e.polytope, e.lattice), d1 = diameter(moved, e.lattice);
    EXPECT_EQ(d1.value, d0.value);
    EXPECT_EQ(d1.directions, mapped(d0.directions, m));
    if (d <= 2 || k % 5 == 0) {
      EXPECT_EQ(is_reduced(moved, e.lattice).verdict, is_reduced(e.polytope, e.lattice).verdict);
      EXPECT_EQ(is_complete(moved, e.lattice).verdict, is_complete(e.polytope, e.lattice).verdict);
    }
  }
}

TEST(Invariance, DilationAndSimultaneousTransform) {
  latcvx::testing::Rng rng(86);
  for (const auto& e : gallery_samples(2)) {
    if (e.polytope.dim() == 1) continue;
    SCOPED_TRACE(label(e));
    const Rational s = rng.rational(1, 4, 3);
    const auto w0 = width(e.polytope, e.lattice);
    const auto d0 = diameter(e.polytope, e.lattice);
    const auto ws = width(scale(e.polytope, s), e.lattice);
    const auto ds = diameter(scale(e.polytope, s), e.lattice);
    EXPECT_EQ(ws.value, w0.value * s);
    EXPECT_EQ(ds.value, d0.value * s);
    EXPECT_EQ(ws.directions, w0.directions);
    EXPECT_EQ(ds.directions, d0.directions);
    const RatMatrix m = rng.invertible(2);
    const Polytope mp = transform(e.polytope, m);
    const Lattice ml = e.lattice.transformed(m);
    EXPECT_EQ(width(mp, ml).value, w0.value);
    EXPECT_EQ(width(mp, ml).directions, mapped(w0.directions, m.inverse().transpose()));
    EXPECT_EQ(diameter(mp, ml).directions, mapped(d0.directions, m));
    EXPECT_EQ(is_reduced(mp, ml).verdict, is_reduced(e.polytope, e.lattice).verdict);
    EXPECT_EQ(is_complete(mp, ml).verdict, is_complete(e.polytope, e.lattice).verdict);
  }
}

TEST(Refutation, StackingTheCounterWitnessFacetKeepsTheDiameter) {
  std::size_t refuted = 0;
  for (const auto& e : gallery_samples(3)) {
    const auto c = is_complete(e.polytope, e.lattice);
    if (c.verdict) continue;
    SCOPED_TRACE(label(e));
    ASSERT_TRUE(c.counter_witness);
    EXPECT_EQ(audit(e.polytope, e.lattice, c), "");
    // halve eps until the stacked body keeps the diameter
    bool found = false;
    Rational eps(1);
    for (int k = 0; k < 30 && !found; ++k) {
      eps /= 2;
      const Polytope bigger = latcvx::testing::stack_facet(e.polytope, *c.counter_witness, eps);
      found = diameter(bigger, e.lattice).value == c.diameter.value;
      if (found && e.polytope.dim() == 2) {
        EXPECT_EQ(latcvx::testing::oracle_diameter(bigger, e.lattice).value, c.diameter.value);
      }
    }
    EXPECT_TRUE(found) << "no eps down to 2^-30";
    ++refuted;
  }
  EXPECT_GE(refuted, 4u);
}

TEST(Refutation, TruncatingAFailingVertexKeepsTheWidth) {
  std::size_t refuted = 0;
  for (const auto& e : gallery_samples(3)) {
    const auto c = is_reduced(e.polytope, e.lattice);
    if (c.verdict) continue;
    SCOPED_TRACE(label(e));
    ASSERT_FALSE(c.failing_vertices.empty());
    const auto& verts = e.polytope.vertices();
    const std::size_t i = static_cast<std::size_t>(
        std::find(verts.begin(), verts.end(), c.failing_vertices.front()) - verts.begin());
    ASSERT_LT(i, verts.size());
    bool found = false;
    Rational eps(1);
    for (int k = 0; k < 30 && !found; ++k) {
      eps /= 2;
      found = width(latcvx::testing::truncate_vertex(e.polytope, i, eps), e.lattice).value == c.width.value;
    }
    EXPECT_TRUE(found);
    ++refuted;
  }
  EXPECT_GE(refuted, 3u);
}

TEST(Bounds, StructuralBoundsOnCertifiedBodies) {
  for (const auto& e : gallery_samples(3)) {
    const bool reduced = is_reduced(e.polytope, e.lattice).verdict;
    const bool complete = is_complete(e.polytope, e.lattice).verdict;
    SCOPED_TRACE(label(e));
    if (!reduced && !complete) {
      EXPECT_THROW(structural_bounds_check(e.polytope, e.lattice), PreconditionError);
      continue;
    }
    const auto rep = structural_bounds_check(e.polytope, e.lattice);
    EXPECT_TRUE(rep.holds());
    if (e.polytope.dim() == 2) {
      EXPECT_TRUE(planar_inequality_check(e.polytope, e.lattice).holds());
    }
  }
}

TEST(Bounds, PlanarInequalitiesOnReducedPolygons) {
  latcvx::testing::Rng rng(87);
  for (int k = 0; k < 40; ++k) {
    const Polytope r = reduce(rng.lattice_polytope(2, 7, 3), Lattice::standard(2));
    const auto rep = planar_inequality_check(r, Lattice::standard(2));
    EXPECT_TRUE(rep.holds()) << k;
    EXPECT_LE(rep.lattice_volume, rep.width * rep.width);
  }
}

TEST(Duality, OriginSymmetricGalleryMembers) {
  std::size_t checked = 0;
  for (const auto& e : gallery_samples(3)) {
    if (!e.polytope.is_origin_symmetric()) continue;
    SCOPED_TRACE(label(e));
    const auto rep = symmetric_dual_check(e.polytope, e.lattice);
    EXPECT_TRUE(rep.holds());
    EXPECT_EQ(rep.reduced, is_reduced(e.polytope, e.lattice).verdict);
    EXPECT_EQ(rep.polar_complete,
              is_complete(polar(e.polytope), dual_lattice(e.lattice)).verdict);
    ++checked;
  }
  EXPECT_GE(checked, 8u);
}

TEST(Triangles, CompleteImpliesReducedOnTheGrid) {
  const Lattice z2 = Lattice::standard(2);
  std::size_t complete_not_reduced = 0, reduced_not_complete = 0;
  for (int i = -10; i <= 10; ++i)
    for (int j = -10; j <= 10 - i; ++j) {
      if (i + j > 0) continue;
      const Polytope t = triangle_xy(Rational(i, 10), Rational(j, 10));
      const bool r = is_reduced(t, z2).verdict, c = is_complete(t, z2).verdict;
      if (c && !r) ++complete_not_reduced;
      if (r && !c) ++reduced_not_complete;
    }
  EXPECT_EQ(complete_not_reduced, 0u);
  EXPECT_GT(reduced_not_complete, 0u);
}
