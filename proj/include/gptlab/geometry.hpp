#pragma once

#include "gptlab/lp.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace gptlab {

/// basepoint + span(directions); the directions are the RREF rows of the
/// difference vectors, so equal subspaces compare equal.
struct AffineSubspace {
  Vector basepoint;
  std::vector<Vector> directions;

  std::size_t ambient_dim() const { return basepoint.dim(); }
  int dim() const { return static_cast<int>(directions.size()); }
  bool contains(const Vector& x) const;
  /// Canonical equations n·x = c cutting out the subspace.
  std::vector<LinearConstraint> equations() const;
};

/// Convex hull of finitely many extreme points, stored sorted. The empty
/// polytope (dimension -1) is a legitimate value.
class VPolytope {
 public:
  VPolytope() = default;
  explicit VPolytope(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

  /// Caller guarantees every point is extreme; duplicates are dropped.
  static VPolytope from_extreme_points(std::size_t ambient_dim, std::vector<Vector> points);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  const std::vector<Vector>& vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }
  bool has_vertex(const Vector& v) const;

  friend bool operator==(const VPolytope&, const VPolytope&) = default;

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<Vector> vertices_;
};

/// {x : a·x ≤ b for every inequality, a·x = b for every equality}.
struct HPolytope {
  std::size_t ambient_dim = 0;
  std::vector<LinearConstraint> inequalities;
  std::vector<LinearConstraint> equalities;
};

AffineSubspace affine_hull(std::span<const Vector> points);

/// Affine dimension; -1 for the empty set.
int dimension(std::span<const Vector> points);
int dimension(const VPolytope& p);

VPolytope reduce_to_vertices(std::vector<Vector> points, std::size_t ambient_dim);

/// Convex weights λ ≥ 0, Σλ = 1, Σ λ_i v_i = x when x lies in p.
std::optional<Vector> convex_weights(const VPolytope& p, const Vector& x);
bool contains(const VPolytope& p, const Vector& x);

/// (a, b) with a·v ≤ b on every vertex and a·x ≥ b + 1, when x lies outside p.
std::optional<LinearConstraint> separating_hyperplane(const VPolytope& p, const Vector& x);

/// Facet description within the affine hull. Inequalities are scaled so the
/// first nonzero coefficient has absolute value 1 and are sorted.
HPolytope v_to_h(const VPolytope& p);

/// Exact vertex enumeration (double description on the homogenized cone).
/// Throws EmptyInput or UnboundedInput.
VPolytope h_to_v(const HPolytope& p);

VPolytope exposed_face(const VPolytope& p, const Vector& f, const Rational& c);

/// Facets in canonical inequality order.
std::vector<VPolytope> minus_faces(const VPolytope& p);

bool is_simplex(const VPolytope& p);

struct PyramidalResult {
  bool uniformly_pyramidal = false;
  /// (minus-face, apex) for every minus-face; filled only when true.
  std::vector<std::pair<VPolytope, Vector>> apexes;
};

PyramidalResult is_uniformly_pyramidal(const VPolytope& p);

VPolytope conv_union(const VPolytope& p, const VPolytope& q);

VPolytope intersect_with_affine(const VPolytope& p, const AffineSubspace& s);

/// A functional h, c with h·v = c on face vertices and h·v ≤ c - 1 on the
/// remaining vertices of p. Exists exactly when `face` is a nonempty face.
std::optional<LinearConstraint> exposing_functional(const VPolytope& p, const VPolytope& face);

bool is_face(const VPolytope& p, const VPolytope& face);

}  // namespace gptlab
