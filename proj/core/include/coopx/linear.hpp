#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "coopx/rational.hpp"

namespace coopx {

using Matrix = std::vector<Vector>;

struct Constraint {
  Vector coeffs;
  Rational rhs;
};

/// Rows over rational variables: equalities, `<=` rows and `<` rows.
/// Variables are free unless flagged nonnegative.
struct LinearSystem {
  std::size_t variables = 0;
  std::vector<bool> nonnegative;
  std::vector<Constraint> equalities;
  std::vector<Constraint> weak;
  std::vector<Constraint> strict;

  LinearSystem() = default;
  explicit LinearSystem(std::size_t n, bool all_nonnegative = false)
      : variables(n), nonnegative(n, all_nonnegative) {}

  void add_eq(Vector a, Rational b) { equalities.push_back({std::move(a), std::move(b)}); }
  void add_le(Vector a, Rational b) { weak.push_back({std::move(a), std::move(b)}); }
  void add_ge(Vector a, Rational b);
  void add_lt(Vector a, Rational b) { strict.push_back({std::move(a), std::move(b)}); }
  void add_gt(Vector a, Rational b);
  /// x_i >= 0, as a variable bound rather than a row.
  void add_nonneg(std::size_t i) { nonnegative.at(i) = true; }

  /// Throws Error(MalformedSystem) on any length mismatch.
  void check() const;
  /// Exact substitution test against every row.
  bool satisfied_by(const Vector& x) const;
};

enum class LpStatus { Optimal, Unbounded, Infeasible };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  Vector witness;
};

/// Feasibility including strict rows. Returns a witness satisfying every row
/// exactly, or nullopt when no rational point exists.
std::optional<Vector> solve_feasibility(const LinearSystem& sys);

/// Maximizes <objective, x>. Strict rows are rejected with MalformedSystem.
LpResult maximize(const Vector& objective, const LinearSystem& sys);

// Dense Gaussian elimination over the rationals.

struct Echelon {
  Matrix rref;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const { return pivot_cols.size(); }
};

Echelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);
/// Basis of {x : m x = 0}; one vector per free column.
Matrix nullspace(const Matrix& m, std::size_t cols);
/// Some solution of m x = b, or nullopt when inconsistent. Free variables are 0.
std::optional<Vector> solve_linear(const Matrix& m, const Vector& b);
Rational determinant(Matrix m);

}  // namespace coopx
