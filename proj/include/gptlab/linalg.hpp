#pragma once

#include "gptlab/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace gptlab {

/// Dense exact vector. Holds states (primal coordinates) and effects (dual
/// coordinates against the same standard basis).
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t dim) : entries_(dim) {}
  explicit Vector(std::vector<Rational> entries) : entries_(std::move(entries)) {}
  Vector(std::initializer_list<Rational> entries) : entries_(entries) {}

  static Vector zero(std::size_t dim) { return Vector(dim); }
  static Vector unit(std::size_t dim, std::size_t index);
  /// Integer or "p/q" literals; convenient in tests and generators.
  static Vector parse(std::initializer_list<const char*> entries);

  std::size_t dim() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  Rational& operator[](std::size_t i) { return entries_[i]; }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  auto begin() { return entries_.begin(); }
  auto end() { return entries_.end(); }
  const std::vector<Rational>& entries() const noexcept { return entries_; }

  bool is_zero() const;
  Vector& operator+=(const Vector& other);
  Vector& operator-=(const Vector& other);
  Vector& operator*=(const Rational& s);

  friend bool operator==(const Vector&, const Vector&) = default;
  /// Lexicographic order; the canonical sort order of vertex lists.
  friend bool operator<(const Vector& a, const Vector& b) { return a.entries_ < b.entries_; }

 private:
  std::vector<Rational> entries_;
};

Vector operator+(Vector a, const Vector& b);
Vector operator-(Vector a, const Vector& b);
Vector operator-(Vector a);
Vector operator*(const Rational& s, Vector v);
Rational dot(const Vector& a, const Vector& b);
/// Concatenation (a, b).
Vector concat(const Vector& a, const Vector& b);
std::string to_string(const Vector& v);

/// Scales so that the first nonzero entry has absolute value 1 (sign kept).
Vector normalize_leading(const Vector& v);

/// Row-major dense exact matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::span<const Vector> rows, std::size_t cols);
  static Matrix from_rows(std::initializer_list<Vector> rows);
  static Matrix from_columns(std::span<const Vector> cols, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  const std::vector<Rational>& entries() const noexcept { return entries_; }

  Vector row(std::size_t r) const;
  Vector col(std::size_t c) const;
  Matrix transpose() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

Vector operator*(const Matrix& m, const Vector& v);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
/// uᵀM as a vector (the functional u ∘ M).
Vector left_multiply(const Vector& u, const Matrix& m);
/// The rank-one map x ↦ (f·x) s.
Matrix outer(const Vector& s, const Vector& f);

struct RowEchelon {
  Matrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

RowEchelon rref(Matrix m);
std::size_t rank(const Matrix& m);
std::size_t rank(std::span<const Vector> vectors);

/// Canonical nullspace basis: one vector per free column of the RREF.
std::vector<Vector> nullspace(const Matrix& m);

/// Affine solution set {particular + Σ t_i directions[i]}.
struct SolutionFamily {
  Vector particular;
  std::vector<Vector> directions;
  bool unique() const noexcept { return directions.empty(); }
};

/// b is outside the column space; certificate y has yᵀm = 0 and y·b < 0.
struct NoSolution {
  Vector certificate;
};

using LinearSolution = std::variant<SolutionFamily, NoSolution>;

LinearSolution solve_linear(const Matrix& m, const Vector& b);

std::optional<Matrix> inverse(const Matrix& m);

}  // namespace gptlab
