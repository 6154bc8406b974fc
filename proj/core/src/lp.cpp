#include "latcvx/lp.hpp"

#include <limits>
#include <optional>

#include "latcvx/errors.hpp"

namespace latcvx {

void LpProblem::add_row(const RatVector& a, RowSense sense, const Rational& b) {
  if (constraints.rows() == 0 && constraints.cols() == 0) constraints = RatMatrix(0, a.dim());
  constraints.append_row(a);
  rhs.push_back(b);
  senses.push_back(sense);
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Dense tableau: rows of [coefficients | rhs], basis variable per row and a
// reduced-cost row with the objective constant in the last slot.
struct Tableau {
  std::size_t n = 0;  // number of columns excluding rhs
  std::vector<std::vector<Rational>> rows;
  std::vector<std::size_t> basis;
  std::vector<Rational> cost;

  void pivot(std::size_t r, std::size_t e) {
    auto& pr = rows[r];
    const Rational inv = pr[e].inverse();
    for (auto& x : pr)
      if (!x.is_zero()) x *= inv;
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j <= n; ++j)
      if (!pr[j].is_zero()) nz.push_back(j);
    auto eliminate = [&](std::vector<Rational>& row) {
      if (row[e].is_zero()) return;
      const Rational f = row[e];
      for (std::size_t j : nz) row[j].sub_product(f, pr[j]);
    };
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r) eliminate(rows[i]);
    // cost row holds value = const + sum r_j x_j, so the constant moves the other way
    if (!cost[e].is_zero()) {
      const Rational f = cost[e];
      for (std::size_t j : nz) {
        if (j == n)
          cost[n].add_product(f, pr[n]);
        else
          cost[j].sub_product(f, pr[j]);
      }
    }
    basis[r] = e;
  }

  void set_objective(const std::vector<Rational>& c) {
    cost.assign(n + 1, Rational());
    for (std::size_t j = 0; j < n; ++j) cost[j] = c[j];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Rational& cb = c[basis[i]];
      if (cb.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) cost[j].sub_product(cb, rows[i][j]);
      cost[n].add_product(cb, rows[i][n]);
    }
  }

  // Maximizes; columns flagged in `blocked` never enter. Returns false if unbounded.
  bool run(const std::vector<bool>& blocked) {
    for (;;) {
      std::size_t e = kNone;
      for (std::size_t j = 0; j < n; ++j)
        if (!blocked[j] && cost[j].sign() > 0) {
          e = j;
          break;
        }
      if (e == kNone) return true;
      std::size_t r = kNone;
      Rational best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][e].sign() <= 0) continue;
        Rational ratio = rows[i][n] / rows[i][e];
        if (r == kNone || ratio < best || (ratio == best && basis[i] < basis[r])) {
          r = i;
          best = std::move(ratio);
        }
      }
      if (r == kNone) return false;
      pivot(r, e);
    }
  }
};

}  // namespace

LpOutcome solve_lp(const LpProblem& p) {
  const std::size_t nv = p.num_vars();
  const std::size_t m = p.rhs.dim();
  if (p.constraints.rows() != m || (m > 0 && p.constraints.cols() != nv) || p.senses.size() != m ||
      (!p.nonnegative.empty() && p.nonnegative.size() != nv))
    throw PreconditionError("inconsistent LP dimensions");

  // column layout: structural (x+ and, for free vars, x-), slacks, artificials
  std::vector<std::size_t> pos_col(nv), neg_col(nv, kNone);
  std::size_t n = 0;
  for (std::size_t j = 0; j < nv; ++j) {
    pos_col[j] = n++;
    if (p.nonnegative.empty() || !p.nonnegative[j]) neg_col[j] = n++;
  }
  std::vector<std::size_t> slack_col(m, kNone);
  for (std::size_t i = 0; i < m; ++i)
    if (p.senses[i] == RowSense::LessEqual) slack_col[i] = n++;

  // rows get negated when rhs < 0; a slack is a ready basis column only with coefficient +1
  std::vector<std::size_t> art_col(m, kNone);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = p.rhs[i].sign() < 0;
    if (slack_col[i] == kNone || flip) art_col[i] = n++;
  }

  Tableau t;
  t.n = n;
  t.rows.assign(m, std::vector<Rational>(n + 1));
  t.basis.assign(m, kNone);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = p.rhs[i].sign() < 0;
    auto& row = t.rows[i];
    for (std::size_t j = 0; j < nv; ++j) {
      const Rational& a = p.constraints(i, j);
      if (a.is_zero()) continue;
      row[pos_col[j]] = flip ? -a : a;
      if (neg_col[j] != kNone) row[neg_col[j]] = flip ? a : -a;
    }
    if (slack_col[i] != kNone) row[slack_col[i]] = flip ? -1 : 1;
    if (art_col[i] != kNone) {
      row[art_col[i]] = 1;
      t.basis[i] = art_col[i];
    } else {
      t.basis[i] = slack_col[i];
    }
    row[n] = flip ? -p.rhs[i] : p.rhs[i];
  }

  std::vector<bool> is_art(n, false);
  bool any_art = false;
  for (std::size_t i = 0; i < m; ++i)
    if (art_col[i] != kNone) {
      is_art[art_col[i]] = true;
      any_art = true;
    }

  LpOutcome out;
  if (any_art) {
    std::vector<Rational> c1(n);
    for (std::size_t j = 0; j < n; ++j)
      if (is_art[j]) c1[j] = -1;
    t.set_objective(c1);
    t.run(std::vector<bool>(n, false));
    if (t.cost[n].sign() < 0) {
      out.status = LpStatus::Infeasible;
      return out;
    }
    // drive remaining artificials out of the basis, dropping redundant rows
    for (std::size_t i = 0; i < t.rows.size();) {
      if (!is_art[t.basis[i]]) {
        ++i;
        continue;
      }
      std::size_t e = kNone;
      for (std::size_t j = 0; j < n; ++j)
        if (!is_art[j] && !t.rows[i][j].is_zero()) {
          e = j;
          break;
        }
      if (e == kNone) {
        t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
        t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
        continue;
      }
      t.pivot(i, e);
      ++i;
    }
  }

  std::vector<Rational> c2(n);
  const bool minimize = p.direction == Direction::Minimize;
  for (std::size_t j = 0; j < nv; ++j) {
    const Rational c = minimize ? -p.objective[j] : p.objective[j];
    c2[pos_col[j]] = c;
    if (neg_col[j] != kNone) c2[neg_col[j]] = -c;
  }
  t.set_objective(c2);
  if (!t.run(is_art)) {
    out.status = LpStatus::Unbounded;
    return out;
  }

  std::vector<Rational> colval(n);
  for (std::size_t i = 0; i < t.rows.size(); ++i) colval[t.basis[i]] = t.rows[i][n];
  out.optimizer = RatVector(nv);
  for (std::size_t j = 0; j < nv; ++j) {
    out.optimizer[j] = colval[pos_col[j]];
    if (neg_col[j] != kNone) out.optimizer[j] -= colval[neg_col[j]];
  }
  out.status = LpStatus::Optimal;
  out.value = dot(p.objective, out.optimizer);
  return out;
}

}  // namespace latcvx
