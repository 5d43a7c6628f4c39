#include "gptlab/geometry.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <cassert>

namespace gptlab {

namespace {

std::vector<Vector> rref_rows(std::span<const Vector> rows, std::size_t cols) {
  if (rows.empty()) return {};
  auto [reduced, pivots] = rref(Matrix::from_rows(rows, cols));
  std::vector<Vector> out;
  for (std::size_t r = 0; r < pivots.size(); ++r) out.push_back(reduced.row(r));
  return out;
}

/// Scales to the primitive integer vector with the same direction.
Vector primitive(const Vector& v) {
  Integer lcm = 1;
  for (const auto& e : v) {
    if (e != 0) lcm = boost::multiprecision::lcm(lcm, Integer(boost::multiprecision::denominator(e)));
  }
  Integer g = 0;
  for (const auto& e : v) {
    if (e != 0) g = boost::multiprecision::gcd(g, Integer(boost::multiprecision::numerator(e) * (lcm / boost::multiprecision::denominator(e))));
  }
  if (g == 0) return v;
  return Rational(lcm, g) * v;
}

struct Ray {
  Vector direction;
  boost::dynamic_bitset<> zeros;  // processed rows tight at this ray
};

/// Extreme rays of the pointed cone {x : rows·x ≥ 0} (Motzkin double
/// description). Returns nullopt when the cone has a lineality space.
std::optional<std::vector<Vector>> cone_extreme_rays(const Matrix& rows) {
  const std::size_t m = rows.rows();
  const std::size_t n = rows.cols();

  std::vector<std::size_t> initial;
  std::vector<Vector> initial_rows;
  for (std::size_t i = 0; i < m && initial.size() < n; ++i) {
    initial_rows.push_back(rows.row(i));
    if (rank(initial_rows) == initial_rows.size()) {
      initial.push_back(i);
    } else {
      initial_rows.pop_back();
    }
  }
  if (initial.size() < n) return std::nullopt;

  auto inv = inverse(Matrix::from_rows(initial_rows, n));
  assert(inv);
  std::vector<bool> processed(m, false);
  for (auto i : initial) processed[i] = true;

  std::vector<Ray> rays;
  for (std::size_t j = 0; j < n; ++j) {
    Ray r{primitive(inv->col(j)), boost::dynamic_bitset<>(m)};
    for (std::size_t k = 0; k < n; ++k) {
      if (k != j) r.zeros.set(initial[k]);
    }
    rays.push_back(std::move(r));
  }

  for (std::size_t i = 0; i < m; ++i) {
    if (processed[i]) continue;
    processed[i] = true;
    const Vector row = rows.row(i);
    std::vector<int> side(rays.size());
    std::vector<Rational> value(rays.size());
    for (std::size_t r = 0; r < rays.size(); ++r) {
      value[r] = dot(row, rays[r].direction);
      side[r] = sign(value[r]);
    }
    std::vector<Ray> next;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (side[r] > 0) next.push_back(rays[r]);
      if (side[r] == 0) {
        next.push_back(rays[r]);
        next.back().zeros.set(i);
      }
    }
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (side[p] <= 0) continue;
      for (std::size_t q = 0; q < rays.size(); ++q) {
        if (side[q] >= 0) continue;
        boost::dynamic_bitset<> common = rays[p].zeros & rays[q].zeros;
        if (common.count() + 2 < n) continue;
        bool adjacent = true;
        for (std::size_t t = 0; t < rays.size() && adjacent; ++t) {
          if (t == p || t == q) continue;
          if (common.is_subset_of(rays[t].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        Ray combined{primitive(value[p] * rays[q].direction - value[q] * rays[p].direction), common};
        combined.zeros.set(i);
        next.push_back(std::move(combined));
      }
    }
    rays = std::move(next);
  }

  std::vector<Vector> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.direction));
  return out;
}

void sort_unique(std::vector<Vector>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw Error(ErrorKind::DimensionMismatchInput,
                std::string(what) + ": ambient dimensions " + std::to_string(a) + " and " + std::to_string(b));
  }
}

}  // namespace

bool AffineSubspace::contains(const Vector& x) const {
  for (const auto& eq : equations()) {
    if (dot(eq.coeffs, x) != eq.rhs) return false;
  }
  return true;
}

std::vector<LinearConstraint> AffineSubspace::equations() const {
  const std::size_t n = ambient_dim();
  std::vector<Vector> normals = nullspace(Matrix::from_rows(directions, n));
  std::vector<LinearConstraint> out;
  for (auto& normal : rref_rows(normals, n)) {
    Rational rhs = dot(normal, basepoint);
    out.push_back({std::move(normal), std::move(rhs)});
  }
  return out;
}

VPolytope VPolytope::from_extreme_points(std::size_t ambient_dim, std::vector<Vector> points) {
  VPolytope p(ambient_dim);
  for (const auto& v : points) require_same_dim(v.dim(), ambient_dim, "vertex");
  sort_unique(points);
  p.vertices_ = std::move(points);
  return p;
}

bool VPolytope::has_vertex(const Vector& v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

AffineSubspace affine_hull(std::span<const Vector> points) {
  if (points.empty()) throw Error(ErrorKind::EmptyInput, "affine hull of no points");
  const Vector& base = *std::min_element(points.begin(), points.end());
  std::vector<Vector> diffs;
  for (const auto& p : points) {
    require_same_dim(p.dim(), base.dim(), "affine_hull");
    if (p != base) diffs.push_back(p - base);
  }
  return AffineSubspace{base, rref_rows(diffs, base.dim())};
}

int dimension(std::span<const Vector> points) {
  if (points.empty()) return -1;
  std::vector<Vector> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points[0]);
  return static_cast<int>(rank(diffs));
}

int dimension(const VPolytope& p) {
  return dimension(p.vertices());
}

std::optional<Vector> convex_weights(const VPolytope& p, const Vector& x) {
  require_same_dim(p.ambient_dim(), x.dim(), "contains");
  const auto& verts = p.vertices();
  if (verts.empty()) return std::nullopt;
  LpProblem lp;
  lp.num_vars = verts.size();
  for (std::size_t r = 0; r < x.dim(); ++r) {
    Vector row(verts.size());
    for (std::size_t j = 0; j < verts.size(); ++j) row[j] = verts[j][r];
    lp.add_eq(std::move(row), x[r]);
  }
  Vector ones(verts.size());
  for (auto& e : ones) e = 1;
  lp.add_eq(std::move(ones), 1);
  for (std::size_t j = 0; j < verts.size(); ++j) lp.add_ge(Vector::unit(verts.size(), j), 0);
  auto out = lp_solve(lp);
  if (const Vector* point = outcome_point(out)) return *point;
  return std::nullopt;
}

bool contains(const VPolytope& p, const Vector& x) {
  return convex_weights(p, x).has_value();
}

std::optional<LinearConstraint> separating_hyperplane(const VPolytope& p, const Vector& x) {
  require_same_dim(p.ambient_dim(), x.dim(), "separating_hyperplane");
  const std::size_t n = x.dim();
  LpProblem lp;
  lp.num_vars = n + 1;
  for (const auto& v : p.vertices()) lp.add_le(concat(v, Vector{Rational(-1)}), 0);
  lp.add_ge(concat(x, Vector{Rational(-1)}), 1);
  auto out = lp_solve(lp);
  const Vector* point = outcome_point(out);
  if (!point) return std::nullopt;
  Vector a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = (*point)[i];
  return LinearConstraint{std::move(a), (*point)[n]};
}

VPolytope reduce_to_vertices(std::vector<Vector> points, std::size_t ambient_dim) {
  for (const auto& v : points) require_same_dim(v.dim(), ambient_dim, "reduce_to_vertices");
  sort_unique(points);
  std::vector<Vector> kept;
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<Vector> others;
    others.reserve(points.size() - 1);
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j != i) others.push_back(points[j]);
    }
    if (others.empty() || !contains(VPolytope::from_extreme_points(ambient_dim, std::move(others)), points[i])) {
      kept.push_back(points[i]);
    }
  }
  return VPolytope::from_extreme_points(ambient_dim, std::move(kept));
}

HPolytope v_to_h(const VPolytope& p) {
  if (p.empty()) throw Error(ErrorKind::EmptyInput, "facet description of the empty polytope");
  const std::size_t n = p.ambient_dim();
  const auto& verts = p.vertices();
  AffineSubspace aff = affine_hull(verts);
  HPolytope h;
  h.ambient_dim = n;
  h.equalities = aff.equations();
  const std::size_t k = aff.directions.size();
  if (k == 0) return h;

  // Coordinates inside the hull: z = M (x - p0) with M = (BᵀB)⁻¹ Bᵀ.
  const Matrix b = Matrix::from_columns(aff.directions, n);
  const Matrix bt = b.transpose();
  auto gram_inv = inverse(bt * b);
  assert(gram_inv);
  const Matrix m = *gram_inv * bt;
  std::vector<Vector> coords;
  Vector centroid(k);
  for (const auto& v : verts) {
    coords.push_back(m * (v - aff.basepoint));
    centroid += coords.back();
  }
  centroid *= Rational(1, static_cast<long>(verts.size()));

  // Facets are the vertices of the polar of the centred point set.
  HPolytope polar;
  polar.ambient_dim = k;
  for (const auto& z : coords) polar.inequalities.push_back({z - centroid, Rational(1)});
  VPolytope polar_vertices = h_to_v(polar);

  std::vector<std::pair<Vector, Rational>> facets;
  for (const auto& a : polar_vertices.vertices()) {
    Vector normal = left_multiply(a, m);  // Mᵀa, already inside span(B)
    Rational rhs = 1 + dot(a, centroid) + dot(normal, aff.basepoint);
    for (const auto& e : normal) {
      if (e != 0) {
        Rational s = Rational(1) / abs(e);
        normal *= s;
        rhs *= s;
        break;
      }
    }
    facets.emplace_back(std::move(normal), std::move(rhs));
  }
  std::sort(facets.begin(), facets.end());
  for (auto& [a, rhs] : facets) h.inequalities.push_back({std::move(a), std::move(rhs)});
  return h;
}

VPolytope h_to_v(const HPolytope& p) {
  const std::size_t n = p.ambient_dim;
  Matrix eq(p.equalities.size(), n);
  Vector eq_rhs(p.equalities.size());
  for (std::size_t i = 0; i < p.equalities.size(); ++i) {
    require_same_dim(p.equalities[i].coeffs.dim(), n, "h_to_v equality");
    for (std::size_t j = 0; j < n; ++j) eq(i, j) = p.equalities[i].coeffs[j];
    eq_rhs[i] = p.equalities[i].rhs;
  }
  auto solved = solve_linear(eq, eq_rhs);
  if (std::holds_alternative<NoSolution>(solved)) {
    throw Error(ErrorKind::EmptyInput, "equalities are inconsistent");
  }
  const auto& family = std::get<SolutionFamily>(solved);
  const std::size_t k = family.directions.size();
  const Matrix basis = Matrix::from_columns(family.directions, n);

  // Reduced inequalities g·z ≤ h on the equality solution set.
  const std::size_t m = p.inequalities.size();
  Matrix g(m, k);
  Vector rhs(m);
  LpProblem feasibility;
  feasibility.num_vars = k;
  for (std::size_t i = 0; i < m; ++i) {
    require_same_dim(p.inequalities[i].coeffs.dim(), n, "h_to_v inequality");
    Vector row = left_multiply(p.inequalities[i].coeffs, basis);
    for (std::size_t j = 0; j < k; ++j) g(i, j) = row[j];
    rhs[i] = p.inequalities[i].rhs - dot(p.inequalities[i].coeffs, family.particular);
    feasibility.add_le(std::move(row), rhs[i]);
  }
  if (!is_feasible(lp_solve(feasibility))) {
    throw Error(ErrorKind::EmptyInput, "inequality system is infeasible");
  }
  if (k == 0) return VPolytope::from_extreme_points(n, {family.particular});
  if (rank(g) < k) {
    throw Error(ErrorKind::UnboundedInput, "constraint system has a lineality direction");
  }

  // Homogenized cone {(z, t) : h t - g z ≥ 0, t ≥ 0}.
  Matrix cone(m + 1, k + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) cone(i, j) = -g(i, j);
    cone(i, k) = rhs[i];
  }
  cone(m, k) = 1;
  auto rays = cone_extreme_rays(cone);
  if (!rays) throw Error(ErrorKind::UnboundedInput, "homogenized cone is not pointed");

  std::vector<Vector> vertices;
  for (const auto& ray : *rays) {
    const Rational& t = ray[k];
    if (t == 0) throw Error(ErrorKind::UnboundedInput, "recession direction " + to_string(ray));
    Vector z(k);
    for (std::size_t j = 0; j < k; ++j) z[j] = ray[j] / t;
    vertices.push_back(family.particular + basis * z);
  }
  return VPolytope::from_extreme_points(n, std::move(vertices));
}

VPolytope exposed_face(const VPolytope& p, const Vector& f, const Rational& c) {
  require_same_dim(p.ambient_dim(), f.dim(), "exposed_face");
  std::vector<Vector> tight;
  for (const auto& v : p.vertices()) {
    Rational value = dot(f, v);
    if (value > c) throw Error(ErrorKind::NotSupporting, "vertex " + to_string(v) + " violates the inequality");
    if (value == c) tight.push_back(v);
  }
  if (tight.empty()) throw Error(ErrorKind::NotSupporting, "no vertex attains the bound");
  return VPolytope::from_extreme_points(p.ambient_dim(), std::move(tight));
}

std::vector<VPolytope> minus_faces(const VPolytope& p) {
  if (dimension(p) < 1) throw Error(ErrorKind::ZeroDimensionalInput, "minus-faces need dimension at least 1");
  std::vector<VPolytope> faces;
  for (const auto& ineq : v_to_h(p).inequalities) faces.push_back(exposed_face(p, ineq.coeffs, ineq.rhs));
  return faces;
}

bool is_simplex(const VPolytope& p) {
  return static_cast<int>(p.size()) == dimension(p) + 1;
}

PyramidalResult is_uniformly_pyramidal(const VPolytope& p) {
  PyramidalResult result;
  auto faces = minus_faces(p);
  for (auto& face : faces) {
    std::vector<Vector> outside;
    for (const auto& v : p.vertices()) {
      if (!face.has_vertex(v)) outside.push_back(v);
    }
    if (outside.size() != 1) {
      result.apexes.clear();
      return result;
    }
    result.apexes.emplace_back(std::move(face), std::move(outside.front()));
  }
  result.uniformly_pyramidal = true;
  return result;
}

VPolytope conv_union(const VPolytope& p, const VPolytope& q) {
  require_same_dim(p.ambient_dim(), q.ambient_dim(), "conv_union");
  std::vector<Vector> all = p.vertices();
  all.insert(all.end(), q.vertices().begin(), q.vertices().end());
  return reduce_to_vertices(std::move(all), p.ambient_dim());
}

VPolytope intersect_with_affine(const VPolytope& p, const AffineSubspace& s) {
  require_same_dim(p.ambient_dim(), s.ambient_dim(), "intersect_with_affine");
  if (p.empty()) return p;
  HPolytope h = v_to_h(p);
  for (auto& eq : s.equations()) h.equalities.push_back(std::move(eq));
  try {
    return h_to_v(h);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::EmptyInput) return VPolytope(p.ambient_dim());
    throw;
  }
}

std::optional<LinearConstraint> exposing_functional(const VPolytope& p, const VPolytope& face) {
  require_same_dim(p.ambient_dim(), face.ambient_dim(), "exposing_functional");
  if (face.empty()) return std::nullopt;
  for (const auto& v : face.vertices()) {
    if (!p.has_vertex(v)) return std::nullopt;
  }
  const std::size_t n = p.ambient_dim();
  LpProblem lp;
  lp.num_vars = n + 1;
  for (const auto& v : p.vertices()) {
    Vector row = concat(v, Vector{Rational(-1)});
    if (face.has_vertex(v)) lp.add_eq(std::move(row), 0);
    else lp.add_le(std::move(row), -1);
  }
  auto out = lp_solve(lp);
  const Vector* point = outcome_point(out);
  if (!point) return std::nullopt;
  Vector h(n);
  for (std::size_t i = 0; i < n; ++i) h[i] = (*point)[i];
  return LinearConstraint{std::move(h), (*point)[n]};
}

bool is_face(const VPolytope& p, const VPolytope& face) {
  return exposing_functional(p, face).has_value();
}

}  // namespace gptlab
