#include <gtest/gtest.h>

#include "oracles.hpp"
#include "random.hpp"
#include "test_util.hpp"

using namespace latcvx;
using latcvx::testing::q;

TEST(Rational, ParsesAndPrintsLowestTerms) {
  EXPECT_EQ(q("6/4").str(), "3/2");
  EXPECT_EQ(q("-6/4").str(), "-3/2");
  EXPECT_EQ(q(" 10/5 ").str(), "2");
  EXPECT_EQ(q("0/7").str(), "0");
  EXPECT_EQ(Rational(7, 21), q("1/3"));
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "1.5", "1/0", "abc", "1/2/3", "--1", "1e3", "/2", "4/-6"})
    EXPECT_THROW((void)Rational::parse(bad), ParseError) << bad;
}

TEST(Rational, ArithmeticIsExact) {
  Rational sum;
  for (int k = 1; k <= 20; ++k) sum += Rational(1, static_cast<long>(k) * (k + 1));
  EXPECT_EQ(sum, q("20/21"));
  EXPECT_EQ(q("-7/2").floor(), -4);
  EXPECT_EQ(q("-7/2").ceil(), -3);
  EXPECT_EQ(q("7/2").floor(), 3);
  EXPECT_EQ(q("2/3").decimal(3), "0.667");
  EXPECT_EQ(q("-2/3").decimal(2), "-0.67");
  EXPECT_THROW((void)Rational(0).inverse(), PreconditionError);
  EXPECT_LT(q("1/3"), q("1/2"));
}

TEST(LinearSystem, IdentityHasUniqueSolution) {
  const auto s = solve_linear_system(RatMatrix::identity(2), {3, 5});
  ASSERT_TRUE(s);
  EXPECT_EQ(s->particular, (RatVector{3, 5}));
  EXPECT_TRUE(s->null_basis.empty());
}

TEST(LinearSystem, OneEquationHasOneDimensionalNullSpace) {
  const auto s = solve_linear_system(RatMatrix{{1, 1}}, {2});
  ASSERT_TRUE(s);
  EXPECT_EQ(s->particular, (RatVector{2, 0}));
  ASSERT_EQ(s->null_basis.size(), 1u);
  EXPECT_EQ(primitive_integer(s->null_basis[0]) * Rational(primitive_integer(s->null_basis[0])[0].sign()),
            (RatVector{1, -1}));
}

TEST(LinearSystem, TetrahedronLatticeContainsAlphaBetaGamma) {
  const Rational a = q("3/4"), b = q("3/4"), c = q("1/2");
  const RatMatrix basis = RatMatrix::from_columns({{-a, b, c}, {a, -b, c}, {a, b, -c}});
  const auto s = solve_linear_system(basis, {a, b, c});
  ASSERT_TRUE(s);
  EXPECT_EQ(s->particular, (RatVector{1, 1, 1}));
}

TEST(LinearSystem, InconsistentSystemReportsNothing) {
  EXPECT_FALSE(solve_linear_system(RatMatrix{{1, 1}, {2, 2}}, {1, 3}));
}

TEST(LinearSystem, RandomSystemsHaveZeroResidual) {
  latcvx::testing::Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rows = static_cast<std::size_t>(rng.uniform(1, 5));
    const std::size_t cols = static_cast<std::size_t>(rng.uniform(1, 5));
    RatMatrix a(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) a(i, j) = rng.rational(-3, 3, 4);
    RatVector x(cols);
    for (std::size_t j = 0; j < cols; ++j) x[j] = rng.rational(-5, 5, 3);
    const RatVector b = a * x;
    const auto s = solve_linear_system(a, b);
    ASSERT_TRUE(s);
    EXPECT_EQ(a * s->particular, b);
    EXPECT_EQ(s->null_basis.size(), cols - a.rank());
    for (const auto& n : s->null_basis) EXPECT_TRUE((a * n).is_zero());
  }
}

TEST(Matrix, DeterminantInverseAndUnimodularity) {
  const RatMatrix m{{2, 1}, {1, 1}};
  EXPECT_EQ(m.det(), 1);
  EXPECT_TRUE(m.is_unimodular());
  EXPECT_EQ(m * m.inverse(), RatMatrix::identity(2));
  EXPECT_THROW((void)RatMatrix({{1, 2}, {2, 4}}).inverse(), PreconditionError);
  latcvx::testing::Rng rng(5);
  for (int k = 0; k < 20; ++k) {
    const RatMatrix u = rng.unimodular(4);
    EXPECT_TRUE(u.is_unimodular());
    EXPECT_TRUE(u.inverse().is_integer());
  }
}

TEST(Matrix, LdlDetectsDefiniteness) {
  EXPECT_TRUE(ldl_positive_definite(RatMatrix{{2, -1}, {-1, 2}}));
  EXPECT_FALSE(ldl_positive_definite(RatMatrix{{1, 2}, {2, 1}}));
  EXPECT_FALSE(ldl_positive_definite(RatMatrix{{1, 1}, {1, 1}}));
}

namespace {

LpProblem box_lp(const RatVector& c, std::size_t n) {
  LpProblem lp;
  lp.objective = c;
  for (std::size_t i = 0; i < n; ++i) {
    lp.add_row(RatVector::unit(n, i), RowSense::LessEqual, 1);
    lp.add_row(-RatVector::unit(n, i), RowSense::LessEqual, 0);
  }
  return lp;
}

}  // namespace

TEST(Lp, UnitInterval) {
  const auto out = solve_lp(box_lp({1}, 1));
  ASSERT_EQ(out.status, LpStatus::Optimal);
  EXPECT_EQ(out.value, 1);
  EXPECT_EQ(out.optimizer, (RatVector{1}));
}

TEST(Lp, SimplexVertexMaximum) {
  const Polytope s2 = standard_simplex(2);
  LpProblem lp;
  lp.objective = {1, 0};
  for (const auto& f : s2.facets()) lp.add_row(f.normal, RowSense::LessEqual, f.offset);
  const auto out = solve_lp(lp);
  ASSERT_EQ(out.status, LpStatus::Optimal);
  EXPECT_EQ(out.value, 1);
  EXPECT_EQ(out.optimizer, (RatVector{1, 0}));
}

TEST(Lp, DifferenceBodyFacetFunctional) {
  // S_3 - S_3 from its facet description, objective of the facet for J = {1}
  const Polytope c = gallery("sd_minus_sd", {3}).polytope;
  const RatVector obj{q("3/4"), q("-1/4"), q("-1/4")};
  LpProblem lp;
  lp.objective = obj;
  for (const auto& f : c.facets()) lp.add_row(f.normal, RowSense::LessEqual, f.offset);
  const auto out = solve_lp(lp);
  ASSERT_EQ(out.status, LpStatus::Optimal);
  EXPECT_EQ(out.value, 1);
  // brute force over the 12 vertices: the maximum is attained by a whole facet
  Rational best = dot(obj, c.vertices()[0]);
  int ties = 0;
  for (const auto& v : c.vertices()) best = max(best, dot(obj, v));
  for (const auto& v : c.vertices()) ties += dot(obj, v) == best ? 1 : 0;
  EXPECT_EQ(c.num_vertices(), 12u);
  EXPECT_EQ(c.num_facets(), 14u);
  EXPECT_EQ(best, 1);
  EXPECT_GE(ties, 3);
}

TEST(Lp, InfeasibleAndUnbounded) {
  LpProblem inf;
  inf.objective = {1};
  inf.add_row({1}, RowSense::LessEqual, -1);
  inf.add_row({-1}, RowSense::LessEqual, -1);
  EXPECT_EQ(solve_lp(inf).status, LpStatus::Infeasible);
  LpProblem unb;
  unb.objective = {1, 1};
  unb.add_row({1, -1}, RowSense::LessEqual, 0);
  EXPECT_EQ(solve_lp(unb).status, LpStatus::Unbounded);
  LpProblem eq;
  eq.objective = {1, 2};
  eq.direction = Direction::Minimize;
  eq.add_row({1, 1}, RowSense::Equal, 3);
  eq.add_row({-1, 0}, RowSense::LessEqual, 0);
  eq.add_row({0, -1}, RowSense::LessEqual, 0);
  const auto out = solve_lp(eq);
  ASSERT_EQ(out.status, LpStatus::Optimal);
  EXPECT_EQ(out.value, 3);
}

TEST(Lp, StrongDualityOnRandomProblems) {
  // primal: max c.x, Ax <= b (x free); dual: min b.y, A^T y = c, y >= 0
  latcvx::testing::Rng rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
    const std::size_t extra = static_cast<std::size_t>(rng.uniform(0, 4));
    LpProblem primal;
    primal.objective = RatVector(n);
    for (std::size_t j = 0; j < n; ++j) primal.objective[j] = rng.rational(-3, 3, 2);
    for (std::size_t j = 0; j < n; ++j) {
      primal.add_row(RatVector::unit(n, j), RowSense::LessEqual, rng.rational(1, 4, 3));
      primal.add_row(-RatVector::unit(n, j), RowSense::LessEqual, rng.rational(1, 4, 3));
    }
    for (std::size_t k = 0; k < extra; ++k) {
      RatVector a(n);
      for (std::size_t j = 0; j < n; ++j) a[j] = rng.uniform(-3, 3);
      primal.add_row(a, RowSense::LessEqual, rng.rational(0, 3, 2));
    }
    const auto p = solve_lp(primal);
    ASSERT_EQ(p.status, LpStatus::Optimal);
    for (std::size_t i = 0; i < primal.constraints.rows(); ++i)
      EXPECT_LE(dot(primal.constraints.row(i), p.optimizer), primal.rhs[i]);
    EXPECT_EQ(dot(primal.objective, p.optimizer), p.value);

    const std::size_t m = primal.constraints.rows();
    LpProblem dual;
    dual.direction = Direction::Minimize;
    dual.objective = primal.rhs;
    dual.nonnegative.assign(m, true);
    for (std::size_t j = 0; j < n; ++j)
      dual.add_row(primal.constraints.col(j), RowSense::Equal, primal.objective[j]);
    const auto d = solve_lp(dual);
    ASSERT_EQ(d.status, LpStatus::Optimal);
    EXPECT_EQ(p.value, d.value);

    const auto again = solve_lp(primal);
    EXPECT_EQ(again.value, p.value);
    EXPECT_EQ(again.optimizer, p.optimizer);
  }
}
