#pragma once

#include <vector>

#include "latcvx/linalg.hpp"

namespace latcvx {

enum class RowSense { LessEqual, Equal };
enum class Direction { Maximize, Minimize };
enum class LpStatus { Optimal, Infeasible, Unbounded };

/// optimize objective·x subject to constraints·x (sense) rhs.
/// Variables are free unless flagged in `nonnegative` (empty = all free).
struct LpProblem {
  RatVector objective;
  RatMatrix constraints;
  RatVector rhs;
  std::vector<RowSense> senses;
  Direction direction = Direction::Maximize;
  std::vector<bool> nonnegative;

  [[nodiscard]] std::size_t num_vars() const { return objective.dim(); }
  /// Appends a row; convenience for building problems incrementally.
  void add_row(const RatVector& a, RowSense sense, const Rational& b);
};

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  RatVector optimizer;
};

/// Exact two-phase primal simplex on a dense rational tableau with Bland's
/// rule. Deterministic: the same problem always yields the same outcome.
LpOutcome solve_lp(const LpProblem& p);

}  // namespace latcvx
