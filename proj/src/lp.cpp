#include "gptlab/lp.hpp"

#include <cassert>
#include <limits>

namespace gptlab {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

/// Dense tableau over standard-form columns [z+ | z- | slack | artificial].
/// The last row holds reduced costs; its last entry is -(objective value).
class Tableau {
 public:
  Tableau(const Matrix& g, const Vector& h) : rows_(g.rows()), vars_(g.cols()) {
    for (std::size_t i = 0; i < rows_; ++i) {
      if (h[i] < 0) art_row_.push_back(i);
    }
    cols_ = 2 * vars_ + rows_ + art_row_.size();
    width_ = cols_ + 1;
    data_.assign((rows_ + 1) * width_, Rational(0));
    basis_.assign(rows_, kNone);
    initial_basic_.assign(rows_, kNone);
    flipped_.assign(rows_, false);
    std::size_t art = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
      const bool flip = h[i] < 0;
      flipped_[i] = flip;
      const Rational s = flip ? -1 : 1;
      for (std::size_t j = 0; j < vars_; ++j) {
        if (g(i, j) == 0) continue;
        at(i, j) = s * g(i, j);
        at(i, vars_ + j) = -s * g(i, j);
      }
      at(i, slack_col(i)) = s;
      at(i, cols_) = s * h[i];
      if (flip) {
        std::size_t col = 2 * vars_ + rows_ + art++;
        at(i, col) = 1;
        basis_[i] = col;
      } else {
        basis_[i] = slack_col(i);
      }
      initial_basic_[i] = basis_[i];
    }
  }

  bool is_artificial(std::size_t col) const { return col >= 2 * vars_ + rows_ && col < cols_; }
  std::size_t slack_col(std::size_t row) const { return 2 * vars_ + row; }

  /// Loads a cost vector (minimization) and prices out the current basis.
  void set_costs(const std::vector<Rational>& costs) {
    costs_ = costs;
    for (std::size_t j = 0; j <= cols_; ++j) at(rows_, j) = j < cols_ ? costs[j] : Rational(0);
    for (std::size_t i = 0; i < rows_; ++i) {
      const Rational& cb = costs[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (at(i, j) != 0) at(rows_, j) -= cb * at(i, j);
      }
    }
  }

  /// Bland's rule iterations. Returns the entering column on unboundedness.
  std::size_t optimize(bool allow_artificial) {
    for (;;) {
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!allow_artificial && is_artificial(j)) continue;
        if (at(rows_, j) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == kNone) return kNone;
      std::size_t leave = kNone;
      Rational best;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (at(i, enter) <= 0) continue;
        Rational ratio = at(i, cols_) / at(i, enter);
        if (leave == kNone || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == kNone) return enter;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    Rational inv = Rational(1) / at(row, col);
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j <= cols_; ++j) {
      if (at(row, j) != 0) {
        at(row, j) *= inv;
        nz.push_back(j);
      }
    }
    for (std::size_t i = 0; i <= rows_; ++i) {
      if (i == row || at(i, col) == 0) continue;
      Rational factor = at(i, col);
      for (std::size_t j : nz) at(i, j) -= factor * at(row, j);
    }
    basis_[row] = col;
  }

  /// Pivots basic artificials (at level zero) onto structural columns where possible.
  void drive_out_artificials() {
    for (std::size_t i = 0; i < rows_; ++i) {
      if (!is_artificial(basis_[i])) continue;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!is_artificial(j) && at(i, j) != 0) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  Rational objective() const { return -at(rows_, cols_); }

  /// Row duals of the original (unflipped) system, read off the reduced
  /// costs of each row's initial basic column.
  Vector farkas() const {
    Vector w(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      std::size_t k = initial_basic_[i];
      Rational y = costs_[k] - at(rows_, k);
      w[i] = flipped_[i] ? y : Rational(-y);
    }
    return w;
  }

  Vector solution() const {
    Vector z(vars_);
    for (std::size_t i = 0; i < rows_; ++i) {
      std::size_t b = basis_[i];
      if (b < vars_) z[b] += at(i, cols_);
      else if (b < 2 * vars_) z[b - vars_] -= at(i, cols_);
    }
    return z;
  }

  Vector ray(std::size_t enter) const {
    Vector d(vars_);
    auto add = [&](std::size_t col, const Rational& amount) {
      if (col < vars_) d[col] += amount;
      else if (col < 2 * vars_) d[col - vars_] -= amount;
    };
    add(enter, Rational(1));
    for (std::size_t i = 0; i < rows_; ++i) add(basis_[i], -at(i, enter));
    return d;
  }

  std::size_t cols() const { return cols_; }
  std::size_t vars() const { return vars_; }
  bool has_artificials() const { return !art_row_.empty(); }

 private:
  Rational& at(std::size_t r, std::size_t c) { return data_[r * width_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * width_ + c]; }

  std::size_t rows_;
  std::size_t vars_;
  std::size_t cols_ = 0;
  std::size_t width_ = 0;
  std::vector<Rational> data_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> initial_basic_;
  std::vector<bool> flipped_;
  std::vector<std::size_t> art_row_;
  std::vector<Rational> costs_;
};

}  // namespace

LpOutcome lp_solve(const LpProblem& problem) {
  const std::size_t n = problem.num_vars;
  const std::size_t m_in = problem.inequalities.size();
  const std::size_t m_eq = problem.equalities.size();

  Matrix eq(m_eq, n);
  Vector eq_rhs(m_eq);
  for (std::size_t i = 0; i < m_eq; ++i) {
    assert(problem.equalities[i].coeffs.dim() == n);
    for (std::size_t j = 0; j < n; ++j) eq(i, j) = problem.equalities[i].coeffs[j];
    eq_rhs[i] = problem.equalities[i].rhs;
  }
  auto solved = solve_linear(eq, eq_rhs);
  if (auto* none = std::get_if<NoSolution>(&solved)) {
    Vector farkas(m_in + m_eq);
    for (std::size_t i = 0; i < m_eq; ++i) farkas[m_in + i] = none->certificate[i];
    return lp::Infeasible{std::move(farkas)};
  }
  const auto& family = std::get<SolutionFamily>(solved);
  const Vector& x0 = family.particular;
  const std::size_t k = family.directions.size();
  const Matrix basis = Matrix::from_columns(family.directions, n);

  // Reduced system G z ≤ h with x = x0 + basis z.
  Matrix a(m_in, n);
  Vector b(m_in);
  for (std::size_t i = 0; i < m_in; ++i) {
    assert(problem.inequalities[i].coeffs.dim() == n);
    for (std::size_t j = 0; j < n; ++j) a(i, j) = problem.inequalities[i].coeffs[j];
    b[i] = problem.inequalities[i].rhs;
  }
  const Matrix g = a * basis;
  const Vector h = b - a * x0;

  Tableau tableau(g, h);
  const std::size_t cols = tableau.cols();

  if (tableau.has_artificials()) {
    std::vector<Rational> phase1(cols, Rational(0));
    for (std::size_t j = 0; j < cols; ++j) {
      if (tableau.is_artificial(j)) phase1[j] = 1;
    }
    tableau.set_costs(phase1);
    tableau.optimize(true);
    if (tableau.objective() > 0) {
      Vector w = tableau.farkas();
      // Equality multipliers v solve eqᵀ v = -aᵀ w.
      Vector farkas(m_in + m_eq);
      for (std::size_t i = 0; i < m_in; ++i) farkas[i] = w[i];
      if (m_eq > 0) {
        Vector target = -left_multiply(w, a);
        auto v = solve_linear(eq.transpose(), target);
        const auto& fam = std::get<SolutionFamily>(v);
        for (std::size_t i = 0; i < m_eq; ++i) farkas[m_in + i] = fam.particular[i];
      }
      return lp::Infeasible{std::move(farkas)};
    }
    tableau.drive_out_artificials();
  }

  auto lift = [&](const Vector& z) { return x0 + basis * z; };

  if (!problem.objective) {
    return lp::Feasible{lift(tableau.solution())};
  }
  const Vector& c = *problem.objective;
  assert(c.dim() == n);
  const Vector reduced_cost = left_multiply(c, basis);
  std::vector<Rational> phase2(cols, Rational(0));
  for (std::size_t j = 0; j < k; ++j) {
    phase2[j] = -reduced_cost[j];
    phase2[k + j] = reduced_cost[j];
  }
  tableau.set_costs(phase2);
  std::size_t enter = tableau.optimize(false);
  Vector x = lift(tableau.solution());
  if (enter != kNone) {
    return lp::Unbounded{std::move(x), basis * tableau.ray(enter)};
  }
  Rational value = dot(c, x);
  return lp::Optimal{std::move(x), std::move(value)};
}

bool satisfies(const LpProblem& problem, const Vector& x) {
  if (x.dim() != problem.num_vars) return false;
  for (const auto& c : problem.inequalities) {
    if (dot(c.coeffs, x) > c.rhs) return false;
  }
  for (const auto& c : problem.equalities) {
    if (dot(c.coeffs, x) != c.rhs) return false;
  }
  return true;
}

bool certifies_infeasible(const LpProblem& problem, const Vector& farkas) {
  const std::size_t m_in = problem.inequalities.size();
  if (farkas.dim() != m_in + problem.equalities.size()) return false;
  Vector combo(problem.num_vars);
  Rational rhs = 0;
  for (std::size_t i = 0; i < farkas.dim(); ++i) {
    const auto& c = i < m_in ? problem.inequalities[i] : problem.equalities[i - m_in];
    if (i < m_in && farkas[i] < 0) return false;
    if (farkas[i] == 0) continue;
    combo += farkas[i] * c.coeffs;
    rhs += farkas[i] * c.rhs;
  }
  return combo.is_zero() && rhs < 0;
}

const Vector* outcome_point(const LpOutcome& outcome) {
  if (auto* o = std::get_if<lp::Optimal>(&outcome)) return &o->point;
  if (auto* f = std::get_if<lp::Feasible>(&outcome)) return &f->point;
  if (auto* u = std::get_if<lp::Unbounded>(&outcome)) return &u->point;
  return nullptr;
}

}  // namespace gptlab
