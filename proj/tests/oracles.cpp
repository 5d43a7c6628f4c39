#include "oracles.hpp"

#include <algorithm>
#include <functional>

namespace oracle {

namespace {

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    fn(idx);
    if (k == 0) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void sort_unique(std::vector<Vector>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::vector<Vector> enumerate_vertices(const std::vector<Halfspace>& ineqs, const std::vector<Halfspace>& eqs,
                                       std::size_t dim) {
  std::vector<Vector> out;
  const std::size_t pick = dim > eqs.size() ? dim - eqs.size() : 0;
  for_each_subset(ineqs.size(), pick, [&](const std::vector<std::size_t>& idx) {
    std::vector<Vector> rows;
    Vector rhs(idx.size() + eqs.size());
    std::size_t r = 0;
    for (auto i : idx) {
      rows.push_back(ineqs[i].a);
      rhs[r++] = ineqs[i].b;
    }
    for (const auto& e : eqs) {
      rows.push_back(e.a);
      rhs[r++] = e.b;
    }
    if (rows.size() != dim) return;
    auto inv = gptlab::inverse(Matrix::from_rows(rows, dim));
    if (!inv) return;
    Vector x = *inv * rhs;
    for (const auto& h : ineqs) {
      if (gptlab::dot(h.a, x) > h.b) return;
    }
    out.push_back(std::move(x));
  });
  sort_unique(out);
  return out;
}

std::vector<Halfspace> enumerate_facets(const std::vector<Vector>& points) {
  const std::size_t dim = points.front().dim();
  std::vector<std::pair<Vector, Rational>> found;
  for_each_subset(points.size(), dim, [&](const std::vector<std::size_t>& idx) {
    // Hyperplane (a, b) with a·p = b for the chosen points: nullspace of [p | -1].
    std::vector<Vector> rows;
    for (auto i : idx) rows.push_back(gptlab::concat(points[i], Vector{Rational(-1)}));
    auto ns = gptlab::nullspace(Matrix::from_rows(rows, dim + 1));
    if (ns.size() != 1) return;
    Vector a(dim);
    for (std::size_t j = 0; j < dim; ++j) a[j] = ns[0][j];
    Rational b = ns[0][dim];
    if (a.is_zero()) return;
    int side = 0;
    for (const auto& p : points) {
      int s = gptlab::sign(gptlab::dot(a, p) - b);
      if (s == 0) continue;
      if (side == 0) side = s;
      else if (side != s) return;
    }
    if (side == 0) return;
    if (side > 0) {
      a *= Rational(-1);
      b = -b;
    }
    for (const auto& e : a) {
      if (e != 0) {
        Rational s = Rational(1) / gptlab::abs(e);
        a *= s;
        b *= s;
        break;
      }
    }
    found.emplace_back(std::move(a), std::move(b));
  });
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  std::vector<Halfspace> out;
  for (auto& [a, b] : found) out.push_back({std::move(a), std::move(b)});
  return out;
}

bool in_convex_hull(const std::vector<Vector>& points, const Vector& x) {
  const std::size_t dim = x.dim();
  for (std::size_t k = 1; k <= std::min(points.size(), dim + 1); ++k) {
    bool hit = false;
    for_each_subset(points.size(), k, [&](const std::vector<std::size_t>& idx) {
      if (hit) return;
      // Solve Σ λ_i p_i = x, Σ λ_i = 1 for the chosen points.
      std::vector<Vector> cols;
      for (auto i : idx) cols.push_back(gptlab::concat(points[i], Vector{Rational(1)}));
      Matrix m = Matrix::from_columns(cols, dim + 1);
      auto sol = gptlab::solve_linear(m, gptlab::concat(x, Vector{Rational(1)}));
      auto* fam = std::get_if<gptlab::SolutionFamily>(&sol);
      if (!fam || !fam->unique()) return;
      for (const auto& l : fam->particular) {
        if (l < 0) return;
      }
      hit = true;
    });
    if (hit) return true;
  }
  return false;
}

std::vector<Vector> extreme_points(std::vector<Vector> points) {
  sort_unique(points);
  std::vector<Vector> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<Vector> others;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j != i) others.push_back(points[j]);
    }
    if (others.empty() || !in_convex_hull(others, points[i])) out.push_back(points[i]);
  }
  return out;
}

Rational random_rational(std::mt19937_64& rng, std::int64_t range, std::int64_t max_den) {
  const auto den = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(max_den)) + 1;
  const auto span = static_cast<std::uint64_t>(2 * range * den + 1);
  const auto num = static_cast<std::int64_t>(rng() % span) - range * den;
  return Rational(num, den);
}

Vector random_vector(std::mt19937_64& rng, std::size_t dim, std::int64_t range, std::int64_t max_den) {
  Vector v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = random_rational(rng, range, max_den);
  return v;
}

}  // namespace oracle
