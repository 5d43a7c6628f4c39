#pragma once

// Test-only reference computations. None of these go through the simplex
// solver or the double-description code they are used to check.

#include "gptlab/linalg.hpp"

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using gptlab::Matrix;
using gptlab::Rational;
using gptlab::Vector;

struct Halfspace {
  Vector a;
  Rational b;  // a·x ≤ b
};

/// Vertices of {x : a·x ≤ b for all halfspaces, e·x = f for all equalities}
/// by trying every square subsystem. Exponential; small inputs only.
std::vector<Vector> enumerate_vertices(const std::vector<Halfspace>& ineqs,
                                       const std::vector<Halfspace>& eqs, std::size_t dim);

/// Facets of a full-dimensional point set by testing every hyperplane through
/// `dim` of the points. Returned normalized (first nonzero |coef| = 1) and sorted.
std::vector<Halfspace> enumerate_facets(const std::vector<Vector>& points);

/// Carathéodory membership: x lies in some simplex spanned by the points.
bool in_convex_hull(const std::vector<Vector>& points, const Vector& x);

/// Extreme points by the Carathéodory test against the remaining points.
std::vector<Vector> extreme_points(std::vector<Vector> points);

/// Seeded rational in [-range, range] with denominator in [1, max_den].
Rational random_rational(std::mt19937_64& rng, std::int64_t range, std::int64_t max_den);

Vector random_vector(std::mt19937_64& rng, std::size_t dim, std::int64_t range, std::int64_t max_den);

}  // namespace oracle
