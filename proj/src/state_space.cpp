#include "gptlab/state_space.hpp"

#include <mutex>

namespace gptlab {

std::string_view to_string(Classification c) {
  return c == Classification::Classical ? "Classical" : "DiscreteNonClassical";
}

struct StateSpace::Cache {
  std::once_flag sub_once, facets_once, effects_once, pure_once;
  VPolytope subnormalized;
  HPolytope facets;
  HPolytope effects;
  std::vector<Vector> pure;
};

StateSpace::StateSpace(std::size_t dim, Vector unit, VPolytope omega)
    : dim_(dim), unit_(std::move(unit)), omega_(std::move(omega)), cache_(std::make_shared<Cache>()) {}

StateSpace StateSpace::build(std::size_t dim_A, Vector unit, std::vector<Vector> vertices) {
  if (vertices.empty()) throw Error(ErrorKind::EmptyStateSet, "no state vertices given");
  if (unit.dim() != dim_A) {
    throw Error(ErrorKind::DimensionMismatchInput, "unit effect has dimension " + std::to_string(unit.dim()));
  }
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].dim() != dim_A) {
      throw Error(ErrorKind::DimensionMismatchInput, "vertex " + std::to_string(i) + " has dimension " +
                                                         std::to_string(vertices[i].dim()));
    }
    if (dot(unit, vertices[i]) != 1) {
      throw Error(ErrorKind::NotNormalized, "vertex " + std::to_string(i) + " has u_A value " +
                                                format_rational(dot(unit, vertices[i])));
    }
  }
  if (rank(vertices) < dim_A) {
    throw Error(ErrorKind::NotGenerating, "states span only " + std::to_string(rank(vertices)) + " of " +
                                              std::to_string(dim_A) + " dimensions");
  }
  return StateSpace(dim_A, std::move(unit), reduce_to_vertices(std::move(vertices), dim_A));
}

StateSpace StateSpace::lift(const VPolytope& base) {
  if (base.empty()) throw Error(ErrorKind::EmptyStateSet, "base polytope is empty");
  const std::size_t d = base.ambient_dim() + 1;
  std::vector<Vector> lifted;
  for (const auto& v : base.vertices()) lifted.push_back(concat(v, Vector{Rational(1)}));
  return build(d, Vector::unit(d, d - 1), std::move(lifted));
}

const VPolytope& StateSpace::subnormalized() const {
  std::call_once(cache_->sub_once, [this] {
    cache_->subnormalized = conv_union(omega_, VPolytope::from_extreme_points(dim_, {Vector::zero(dim_)}));
  });
  return cache_->subnormalized;
}

const HPolytope& StateSpace::subnormalized_facets() const {
  std::call_once(cache_->facets_once, [this] { cache_->facets = v_to_h(subnormalized()); });
  return cache_->facets;
}

const HPolytope& StateSpace::effect_polytope() const {
  std::call_once(cache_->effects_once, [this] {
    HPolytope h;
    h.ambient_dim = dim_;
    for (const auto& v : states()) {
      h.inequalities.push_back({v, 1});
      h.inequalities.push_back({-v, 0});
    }
    cache_->effects = std::move(h);
  });
  return cache_->effects;
}

const std::vector<Vector>& StateSpace::pure_effects() const {
  std::call_once(cache_->pure_once, [this] { cache_->pure = h_to_v(effect_polytope()).vertices(); });
  return cache_->pure;
}

bool is_effect(const StateSpace& a, const Vector& f) {
  if (f.dim() != a.dim()) return false;
  for (const auto& v : a.states()) {
    Rational value = dot(f, v);
    if (value < 0 || value > 1) return false;
  }
  return true;
}

bool is_pure(const StateSpace& a, const Vector& f) {
  if (!is_effect(a, f)) return false;
  std::vector<Vector> tight;
  for (const auto& v : a.states()) {
    Rational value = dot(f, v);
    if (value == 0 || value == 1) tight.push_back(v);
  }
  return rank(tight) == a.dim();
}

void require_pure(const StateSpace& a, const Vector& f) {
  if (f.dim() != a.dim()) {
    throw Error(ErrorKind::DimensionMismatchInput, "effect has dimension " + std::to_string(f.dim()));
  }
  if (!is_pure(a, f)) throw Error(ErrorKind::NotPure, to_string(f) + " is not a pure effect");
}

namespace {

VPolytope level_face(const StateSpace& a, const Vector& f, const Rational& level) {
  if (f.dim() != a.dim()) {
    throw Error(ErrorKind::DimensionMismatchInput, "effect has dimension " + std::to_string(f.dim()));
  }
  std::vector<Vector> hits;
  for (const auto& v : a.states()) {
    if (dot(f, v) == level) hits.push_back(v);
  }
  return VPolytope::from_extreme_points(a.dim(), std::move(hits));
}

}  // namespace

VPolytope certain_face(const StateSpace& a, const Vector& f) {
  return level_face(a, f, 1);
}

VPolytope impossible_face(const StateSpace& a, const Vector& f) {
  return level_face(a, f, 0);
}

Vector complementary(const StateSpace& a, const Vector& f) {
  return a.unit() - f;
}

VPolytope unanimity_face(const StateSpace& a, std::span<const Vector> s) {
  HPolytope h = a.effect_polytope();
  for (const auto& v : s) {
    if (!a.omega().has_vertex(v)) throw Error(ErrorKind::NotAStateVertex, to_string(v) + " is not a state vertex");
    h.equalities.push_back({v, 1});
  }
  return h_to_v(h);
}

Classification classify(const StateSpace& a) {
  return is_simplex(a.omega()) ? Classification::Classical : Classification::DiscreteNonClassical;
}

bool is_measurement(const StateSpace& a, std::span<const Vector> effects) {
  Vector sum(a.dim());
  for (const auto& f : effects) {
    if (!is_effect(a, f)) return false;
    sum += f;
  }
  return sum == a.unit();
}

}  // namespace gptlab
