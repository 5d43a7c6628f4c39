#pragma once

#include "gptlab/linalg.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace gptlab {

/// a·x ≤ rhs or a·x = rhs, depending on which list holds it.
struct LinearConstraint {
  Vector coeffs;
  Rational rhs;
};

/// Linear program over free variables. The objective, when present, is
/// maximized; without one the problem is a pure feasibility question.
struct LpProblem {
  std::size_t num_vars = 0;
  std::optional<Vector> objective;
  std::vector<LinearConstraint> inequalities;
  std::vector<LinearConstraint> equalities;

  void add_le(Vector a, Rational b) { inequalities.push_back({std::move(a), std::move(b)}); }
  void add_ge(Vector a, Rational b) { inequalities.push_back({-std::move(a), -std::move(b)}); }
  void add_eq(Vector a, Rational b) { equalities.push_back({std::move(a), std::move(b)}); }
};

namespace lp {

struct Optimal {
  Vector point;
  Rational value;
};

struct Feasible {
  Vector point;
};

/// Multipliers indexed inequalities first, then equalities. The inequality
/// part is nonnegative, the combination of left-hand sides vanishes and the
/// combination of right-hand sides is negative: 0 ≤ c < 0.
struct Infeasible {
  Vector farkas;
};

/// `point` is feasible; `ray` keeps every constraint and improves the objective.
struct Unbounded {
  Vector point;
  Vector ray;
};

}  // namespace lp

using LpOutcome = std::variant<lp::Optimal, lp::Feasible, lp::Infeasible, lp::Unbounded>;

/// Exact two-phase primal simplex with Bland's rule. Equalities are eliminated
/// up front through their affine solution family, so the tableau only carries
/// the inequality rows.
LpOutcome lp_solve(const LpProblem& problem);

/// Every constraint holds exactly at x.
bool satisfies(const LpProblem& problem, const Vector& x);

/// Checks an infeasibility certificate with one pass of arithmetic.
bool certifies_infeasible(const LpProblem& problem, const Vector& farkas);

inline bool is_feasible(const LpOutcome& outcome) {
  return !std::holds_alternative<lp::Infeasible>(outcome);
}

/// Point of an Optimal, Feasible or Unbounded outcome.
const Vector* outcome_point(const LpOutcome& outcome);

}  // namespace gptlab
