#include "gptlab/linalg.hpp"

#include <cassert>

namespace gptlab {

Vector Vector::unit(std::size_t dim, std::size_t index) {
  Vector v(dim);
  v[index] = 1;
  return v;
}

Vector Vector::parse(std::initializer_list<const char*> entries) {
  Vector v;
  v.entries_.reserve(entries.size());
  for (const char* e : entries) v.entries_.push_back(parse_rational(e));
  return v;
}

bool Vector::is_zero() const {
  for (const auto& e : entries_) {
    if (e != 0) return false;
  }
  return true;
}

Vector& Vector::operator+=(const Vector& other) {
  assert(dim() == other.dim());
  for (std::size_t i = 0; i < dim(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& other) {
  assert(dim() == other.dim());
  for (std::size_t i = 0; i < dim(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

Vector& Vector::operator*=(const Rational& s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

Vector operator+(Vector a, const Vector& b) { return a += b; }
Vector operator-(Vector a, const Vector& b) { return a -= b; }
Vector operator-(Vector a) { return a *= Rational(-1); }
Vector operator*(const Rational& s, Vector v) { return v *= s; }

Rational dot(const Vector& a, const Vector& b) {
  assert(a.dim() == b.dim());
  Rational sum = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a[i] != 0 && b[i] != 0) sum += a[i] * b[i];
  }
  return sum;
}

Vector concat(const Vector& a, const Vector& b) {
  std::vector<Rational> e(a.begin(), a.end());
  e.insert(e.end(), b.begin(), b.end());
  return Vector(std::move(e));
}

std::string to_string(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) out += ", ";
    out += format_rational(v[i]);
  }
  return out + ")";
}

Vector normalize_leading(const Vector& v) {
  for (const auto& e : v) {
    if (e != 0) return Rational(1) / abs(e) * v;
  }
  return v;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::span<const Vector> rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    assert(rows[r].dim() == cols);
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_rows(std::initializer_list<Vector> rows) {
  std::vector<Vector> v(rows);
  return from_rows(v, v.empty() ? 0 : v.front().dim());
}

Matrix Matrix::from_columns(std::span<const Vector> cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    assert(cols[c].dim() == rows);
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(std::vector<Rational>(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                                      entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)));
}

Vector Matrix::col(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector operator*(const Matrix& m, const Vector& v) {
  assert(m.cols() == v.dim());
  Vector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Rational sum = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c) != 0 && v[c] != 0) sum += m(r, c) * v[c];
    }
    out[r] = std::move(sum);
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  assert(a.cols() == b.rows());
  Matrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(r, k) == 0) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) {
        if (b(k, c) != 0) out(r, c) += a(r, k) * b(k, c);
      }
    }
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  assert(a.rows() == b.rows() && a.cols() == b.cols());
  Matrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) - b(r, c);
  return out;
}

Vector left_multiply(const Vector& u, const Matrix& m) {
  assert(u.dim() == m.rows());
  Vector out(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (u[r] == 0) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c) != 0) out[c] += u[r] * m(r, c);
    }
  }
  return out;
}

Matrix outer(const Vector& s, const Vector& f) {
  Matrix m(s.dim(), f.dim());
  for (std::size_t r = 0; r < s.dim(); ++r)
    for (std::size_t c = 0; c < f.dim(); ++c) m(r, c) = s[r] * f[c];
  return m;
}

RowEchelon rref(Matrix m) {
  RowEchelon out;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && m(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead_row) {
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(pivot, k), m(lead_row, k));
    }
    Rational inv = Rational(1) / m(lead_row, c);
    for (std::size_t k = c; k < m.cols(); ++k) {
      if (m(lead_row, k) != 0) m(lead_row, k) *= inv;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, c) == 0) continue;
      Rational factor = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) {
        if (m(lead_row, k) != 0) m(r, k) -= factor * m(lead_row, k);
      }
    }
    out.pivots.push_back(c);
    ++lead_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) {
  return rref(m).pivots.size();
}

std::size_t rank(std::span<const Vector> vectors) {
  if (vectors.empty()) return 0;
  return rank(Matrix::from_rows(vectors, vectors.front().dim()));
}

std::vector<Vector> nullspace(const Matrix& m) {
  auto [reduced, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

LinearSolution solve_linear(const Matrix& m, const Vector& b) {
  assert(m.rows() == b.dim());
  Matrix augmented(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) augmented(r, c) = m(r, c);
    augmented(r, m.cols()) = b[r];
  }
  auto [reduced, pivots] = rref(std::move(augmented));
  if (!pivots.empty() && pivots.back() == m.cols()) {
    // Inconsistent. Any left-null vector of m with y·b ≠ 0 certifies it.
    for (auto& y : nullspace(m.transpose())) {
      Rational yb = dot(y, b);
      if (yb != 0) {
        if (yb > 0) y *= Rational(-1);
        return NoSolution{std::move(y)};
      }
    }
    assert(false && "inconsistent system without a certificate");
  }
  SolutionFamily family;
  family.particular = Vector(m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) family.particular[pivots[r]] = reduced(r, m.cols());
  family.directions = nullspace(m);
  return family;
}

std::optional<Matrix> inverse(const Matrix& m) {
  assert(m.rows() == m.cols());
  const std::size_t n = m.rows();
  if (n == 0) return Matrix(0, 0);
  Matrix augmented(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) augmented(r, c) = m(r, c);
    augmented(r, n + r) = 1;
  }
  auto [reduced, pivots] = rref(std::move(augmented));
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = reduced(r, n + c);
  return inv;
}

}  // namespace gptlab
