#pragma once

#include "gptlab/geometry.hpp"

#include <memory>
#include <string_view>

namespace gptlab {

enum class Classification { Classical, DiscreteNonClassical };

std::string_view to_string(Classification c);

/// (A, A_+, u_A) with the normalized states Ω_A given by their vertices.
/// Effects are coordinate vectors in the dual basis, so f(ω) = f·ω.
/// Immutable once built; the derived polytopes are computed lazily and
/// shared between copies.
class StateSpace {
 public:
  /// Throws EmptyStateSet, DimensionMismatchInput, NotNormalized or NotGenerating.
  static StateSpace build(std::size_t dim_A, Vector unit, std::vector<Vector> vertices);

  /// Appends a coordinate 1 to every vertex of `base`; u_A reads that coordinate.
  static StateSpace lift(const VPolytope& base);

  std::size_t dim() const noexcept { return dim_; }
  const Vector& unit() const noexcept { return unit_; }
  const VPolytope& omega() const noexcept { return omega_; }
  const std::vector<Vector>& states() const noexcept { return omega_.vertices(); }

  /// conv(Ω_A ∪ {0}).
  const VPolytope& subnormalized() const;
  /// Facet inequalities of conv(Ω_A ∪ {0}).
  const HPolytope& subnormalized_facets() const;
  /// {f : 0 ≤ f·v ≤ 1 for every state vertex v}, two rows per vertex.
  const HPolytope& effect_polytope() const;
  /// Vertices of the effect polytope in canonical (lexicographic) order.
  const std::vector<Vector>& pure_effects() const;

 private:
  struct Cache;

  StateSpace(std::size_t dim, Vector unit, VPolytope omega);

  std::size_t dim_ = 0;
  Vector unit_;
  VPolytope omega_;
  std::shared_ptr<Cache> cache_;
};

bool is_effect(const StateSpace& a, const Vector& f);

/// Extremality in the effect polytope: the constraints tight at f span the dual.
bool is_pure(const StateSpace& a, const Vector& f);

/// Throws NotPure unless f is a pure effect of a.
void require_pure(const StateSpace& a, const Vector& f);

/// States of Ω_A with f(ω) = 1.
VPolytope certain_face(const StateSpace& a, const Vector& f);

/// States of Ω_A with f(ω) = 0.
VPolytope impossible_face(const StateSpace& a, const Vector& f);

Vector complementary(const StateSpace& a, const Vector& f);

/// {f ∈ E_A : f·ω = 1 for ω ∈ s}, in dual coordinates. Throws NotAStateVertex.
VPolytope unanimity_face(const StateSpace& a, std::span<const Vector> s);

Classification classify(const StateSpace& a);

/// Effects forming a measurement: each is an effect and together they sum to u_A.
bool is_measurement(const StateSpace& a, std::span<const Vector> effects);

}  // namespace gptlab
