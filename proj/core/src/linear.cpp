#include "coopx/linear.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "coopx/error.hpp"

namespace coopx {

void LinearSystem::add_ge(Vector a, Rational b) {
  for (auto& x : a) x = -x;
  add_le(std::move(a), -b);
}

void LinearSystem::add_gt(Vector a, Rational b) {
  for (auto& x : a) x = -x;
  add_lt(std::move(a), -b);
}

void LinearSystem::check() const {
  auto check_rows = [&](const std::vector<Constraint>& rows, const char* kind) {
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (rows[k].coeffs.size() != variables) {
        throw Error(ErrorCode::MalformedSystem, std::string(kind) + " row " + std::to_string(k) + " has " +
                                                    std::to_string(rows[k].coeffs.size()) + " coefficients, expected " +
                                                    std::to_string(variables));
      }
    }
  };
  check_rows(equalities, "equality");
  check_rows(weak, "inequality");
  check_rows(strict, "strict inequality");
  if (nonnegative.size() != variables) throw Error(ErrorCode::MalformedSystem, "nonnegativity flags length mismatch");
}

bool LinearSystem::satisfied_by(const Vector& x) const {
  if (x.size() != variables) return false;
  for (std::size_t i = 0; i < variables; ++i) {
    if (nonnegative[i] && x[i] < 0) return false;
  }
  for (const auto& c : equalities) {
    if (dot(c.coeffs, x) != c.rhs) return false;
  }
  for (const auto& c : weak) {
    if (dot(c.coeffs, x) > c.rhs) return false;
  }
  for (const auto& c : strict) {
    if (dot(c.coeffs, x) >= c.rhs) return false;
  }
  return true;
}

namespace {

// Condensed dictionary x_B = rhs - T x_N over the rows a x <= b (slack
// s = b - a x). Free variables are pivoted into rows that then impose no
// sign condition; equality slacks are pivoted out and fixed at 0.
// Chvatal's auxiliary variable gives a feasible start; Bland's rule on
// variable ids throughout.
class Dictionary {
 public:
  explicit Dictionary(const LinearSystem& sys)
      : n_(sys.variables), m_(sys.weak.size() + sys.equalities.size()), aux_(n_ + m_) {
    t_.reserve(m_);
    for (const auto& c : sys.weak) add_row(c);
    for (const auto& c : sys.equalities) add_row(c);
    for (std::size_t j = 0; j < n_; ++j) nonbasic_.push_back(j);
    blocked_.assign(aux_ + 1, false);
    free_var_.assign(n_, false);
    for (std::size_t j = 0; j < n_; ++j) free_var_[j] = !sys.nonnegative[j];
    free_row_.assign(m_, false);
    equality_slack_begin_ = n_ + sys.weak.size();
  }

  // False when the rows are inconsistent.
  bool make_feasible() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basic_[i] < equality_slack_begin_) continue;
      const std::size_t slack = basic_[i];
      // Prefer a free column so that equalities eliminate free variables.
      std::size_t col = pick_column(i, true);
      if (col == npos) col = pick_column(i, false);
      blocked_[slack] = true;
      if (col == npos) {
        if (rhs_[i] != 0) return false;
        free_row_[i] = true;  // 0 = 0; the row is inert
        continue;
      }
      const std::size_t v = nonbasic_[col];
      pivot(i, col);
      if (v < n_ && free_var_[v]) free_row_[i] = true;
    }
    for (std::size_t c = 0; c < nonbasic_.size(); ++c) {
      const std::size_t v = nonbasic_[c];
      if (v >= n_ || !free_var_[v]) continue;
      std::size_t row = npos;
      for (std::size_t i = 0; i < m_; ++i) {
        if (!free_row_[i] && t_[i][c] != 0) {
          row = i;
          break;
        }
      }
      if (row == npos) {
        free_zero_column_.push_back(v);
        continue;
      }
      pivot(row, c);
      free_row_[row] = true;
    }

    std::size_t worst = npos;
    for (std::size_t i = 0; i < m_; ++i) {
      if (free_row_[i] || rhs_[i] >= 0) continue;
      if (worst == npos || rhs_[i] < rhs_[worst]) worst = i;
    }
    if (worst == npos) return true;

    // x_B = rhs - T x_N + x_aux on every sign-constrained row.
    for (std::size_t i = 0; i < m_; ++i) t_[i].push_back(free_row_[i] ? Rational(0) : Rational(-1));
    nonbasic_.push_back(aux_);
    Vector cost(aux_ + 1, Rational(0));
    cost[aux_] = -1;
    set_objective(cost);
    pivot(worst, nonbasic_.size() - 1);
    run();
    if (obj_value_ < 0) return false;
    for (std::size_t i = 0; i < m_; ++i) {
      if (basic_[i] != aux_) continue;
      std::size_t col = npos;
      for (std::size_t c = 0; c < nonbasic_.size(); ++c) {
        if (!blocked_[nonbasic_[c]] && t_[i][c] != 0) {
          col = c;
          break;
        }
      }
      if (col == npos) {
        free_row_[i] = true;
      } else {
        pivot(i, col);
      }
      break;
    }
    blocked_[aux_] = true;
    return true;
  }

  // False when unbounded.
  bool optimize(const Vector& objective) {
    Vector cost(aux_ + 1, Rational(0));
    for (std::size_t j = 0; j < n_; ++j) cost[j] = objective[j];
    set_objective(cost);
    // Such a column moves only free basics, so any reduced cost is unbounded.
    for (std::size_t c = 0; c < nonbasic_.size(); ++c) {
      const std::size_t v = nonbasic_[c];
      if (reduced_[c] != 0 && std::find(free_zero_column_.begin(), free_zero_column_.end(), v) != free_zero_column_.end()) {
        return false;
      }
    }
    return run();
  }

  const Rational& value() const { return obj_value_; }

  Vector point() const {
    Vector x = zeros(n_);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basic_[i] < n_) x[basic_[i]] = rhs_[i];
    }
    return x;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  void add_row(const Constraint& c) {
    t_.push_back(c.coeffs);
    rhs_.push_back(c.rhs);
    basic_.push_back(n_ + basic_.size());
  }

  std::size_t pick_column(std::size_t row, bool free_only) const {
    for (std::size_t c = 0; c < nonbasic_.size(); ++c) {
      const std::size_t v = nonbasic_[c];
      if (blocked_[v] || t_[row][c] == 0) continue;
      if (free_only && !(v < n_ && free_var_[v])) continue;
      return c;
    }
    return npos;
  }

  void set_objective(const Vector& cost) {
    reduced_.assign(nonbasic_.size(), Rational(0));
    for (std::size_t c = 0; c < nonbasic_.size(); ++c) reduced_[c] = cost[nonbasic_[c]];
    obj_value_ = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      const Rational& cb = cost[basic_[i]];
      if (cb == 0) continue;
      obj_value_ += cb * rhs_[i];
      for (std::size_t c = 0; c < nonbasic_.size(); ++c) {
        if (t_[i][c] != 0) reduced_[c] -= cb * t_[i][c];
      }
    }
  }

  bool run() {
    for (;;) {
      std::size_t enter = npos;
      for (std::size_t c = 0; c < nonbasic_.size(); ++c) {
        if (reduced_[c] > 0 && !blocked_[nonbasic_[c]] && (enter == npos || nonbasic_[c] < nonbasic_[enter])) {
          enter = c;
        }
      }
      if (enter == npos) return true;
      std::size_t leave = npos;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (free_row_[i] || t_[i][enter] <= 0) continue;
        Rational ratio = rhs_[i] / t_[i][enter];
        if (leave == npos || ratio < best || (ratio == best && basic_[i] < basic_[leave])) {
          best = std::move(ratio);
          leave = i;
        }
      }
      if (leave == npos) return false;
      pivot(leave, enter);
    }
  }

  // Exchanges basic_[r] and nonbasic_[c].
  void pivot(std::size_t r, std::size_t c) {
    Vector& pr = t_[r];
    const Rational p = pr[c];
    // Row r solved for the entering variable: x_e = rhs/p - sum (T_rj/p) x_j - (1/p) x_leaving.
    for (std::size_t j = 0; j < pr.size(); ++j) {
      if (j != c && pr[j] != 0) pr[j] /= p;
    }
    rhs_[r] /= p;
    pr[c] = 1 / p;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || t_[i][c] == 0) continue;
      const Rational f = t_[i][c];
      for (std::size_t j = 0; j < pr.size(); ++j) {
        if (j != c && pr[j] != 0) t_[i][j] -= f * pr[j];
      }
      t_[i][c] = -f * pr[c];
      rhs_[i] -= f * rhs_[r];
    }
    if (!reduced_.empty() && reduced_[c] != 0) {
      const Rational f = reduced_[c];
      for (std::size_t j = 0; j < pr.size(); ++j) {
        if (j != c && pr[j] != 0) reduced_[j] -= f * pr[j];
      }
      reduced_[c] = -f * pr[c];
      obj_value_ += f * rhs_[r];
    }
    std::swap(basic_[r], nonbasic_[c]);
  }

  std::size_t n_;
  std::size_t m_;
  std::size_t aux_;
  std::size_t equality_slack_begin_ = 0;
  Matrix t_;
  Vector rhs_;
  std::vector<std::size_t> basic_;
  std::vector<std::size_t> nonbasic_;
  std::vector<bool> blocked_;
  std::vector<bool> free_var_;
  std::vector<bool> free_row_;
  std::vector<std::size_t> free_zero_column_;
  Vector reduced_;
  Rational obj_value_;
};

}  // namespace

std::optional<Vector> solve_feasibility(const LinearSystem& sys) {
  sys.check();
  if (sys.strict.empty()) {
    Dictionary dict(sys);
    if (!dict.make_feasible()) return std::nullopt;
    return dict.point();
  }

  // Maximize a common slack s <= 1 on the strict rows; feasible iff s > 0.
  const std::size_t n = sys.variables;
  LinearSystem ext(n + 1);
  std::copy(sys.nonnegative.begin(), sys.nonnegative.end(), ext.nonnegative.begin());
  auto widen = [&](const Vector& a, const Rational& s) {
    Vector w(a);
    w.push_back(s);
    return w;
  };
  for (const auto& c : sys.equalities) ext.add_eq(widen(c.coeffs, 0), c.rhs);
  for (const auto& c : sys.weak) ext.add_le(widen(c.coeffs, 0), c.rhs);
  for (const auto& c : sys.strict) ext.add_le(widen(c.coeffs, 1), c.rhs);
  ext.add_le(unit_vector(n + 1, n), 1);

  Dictionary dict(ext);
  if (!dict.make_feasible()) return std::nullopt;
  dict.optimize(unit_vector(n + 1, n));
  if (dict.value() <= 0) return std::nullopt;
  Vector x = dict.point();
  x.pop_back();
  return x;
}

LpResult maximize(const Vector& objective, const LinearSystem& sys) {
  sys.check();
  if (!sys.strict.empty()) throw Error(ErrorCode::MalformedSystem, "maximize does not accept strict rows");
  if (objective.size() != sys.variables) {
    throw Error(ErrorCode::MalformedSystem, "objective has " + std::to_string(objective.size()) +
                                                " coefficients, expected " + std::to_string(sys.variables));
  }
  LpResult result;
  Dictionary dict(sys);
  if (!dict.make_feasible()) return result;
  if (!dict.optimize(objective)) {
    result.status = LpStatus::Unbounded;
    return result;
  }
  result.status = LpStatus::Optimal;
  result.witness = dict.point();
  result.value = dot(objective, result.witness);
  return result;
}

Echelon row_reduce(Matrix m) {
  Echelon e;
  if (m.empty()) return e;
  const std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[row], m[piv]);
    const Rational p = m[row][col];
    for (auto& v : m[row]) {
      if (v != 0) v /= p;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      const Rational f = m[i][col];
      for (std::size_t j = col; j < cols; ++j) {
        if (m[row][j] != 0) m[i][j] -= f * m[row][j];
      }
    }
    e.pivot_cols.push_back(col);
    ++row;
  }
  m.resize(row);
  e.rref = std::move(m);
  return e;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).rank(); }

Matrix nullspace(const Matrix& m, std::size_t cols) {
  for (const auto& r : m) {
    if (r.size() != cols) throw Error(ErrorCode::DimensionMismatch, "ragged matrix");
  }
  const Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  Matrix basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v = zeros(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) v[e.pivot_cols[i]] = -e.rref[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve_linear(const Matrix& m, const Vector& b) {
  if (m.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "right-hand side length differs from row count");
  if (m.empty()) return Vector{};
  const std::size_t cols = m[0].size();
  Matrix aug(m);
  for (std::size_t i = 0; i < aug.size(); ++i) {
    if (aug[i].size() != cols) throw Error(ErrorCode::DimensionMismatch, "ragged matrix");
    aug[i].push_back(b[i]);
  }
  const Echelon e = row_reduce(std::move(aug));
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == cols) return std::nullopt;
  Vector x = zeros(cols);
  for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) x[e.pivot_cols[i]] = e.rref[i][cols];
  return x;
}

Rational determinant(Matrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    if (m[col].size() != n) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m[i][col] == 0) continue;
      const Rational f = m[i][col] / m[col][col];
      for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
    }
  }
  return det;
}

}  // namespace coopx
