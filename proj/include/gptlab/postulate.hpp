#pragma once

#include "gptlab/state_space.hpp"

#include <variant>

namespace gptlab {

/// A transformation T with uᵀT = fᵀ, T(Ω_A) ⊆ Ω_A^{≤1} and Tω = ω on F_f.
struct TransformationWitness {
  Vector effect;
  Matrix transformation;
};

namespace obstruction {

/// dim F_f + dim F̄_f > dim Ω_A − 1.
struct DimensionMismatch {
  int dim_certain = 0;
  int dim_impossible = 0;
  int dim_omega = 0;
};

/// A point of aff(F_f ∪ F̄_f) ∩ Ω_A outside conv(F_f ∪ F̄_f).
struct ShapeMismatch {
  Vector witness_point;
};

/// Farkas multipliers for the system returned by postulate_lp.
struct LpInfeasible {
  Vector farkas;
};

}  // namespace obstruction

using ObstructionCertificate =
    std::variant<obstruction::DimensionMismatch, obstruction::ShapeMismatch, obstruction::LpInfeasible>;

using PostulateOutcome = std::variant<TransformationWitness, ObstructionCertificate>;

std::string_view obstruction_name(const ObstructionCertificate& c);

bool lemma_condition_a(const StateSpace& a, const Vector& f);

struct ConditionB {
  enum class Status { Holds, Fails, NotApplicable };
  Status status = Status::NotApplicable;
  /// Set when the condition fails.
  std::optional<Vector> witness;
};

ConditionB lemma_condition_b(const StateSpace& a, const Vector& f);

/// Membership T ∈ T_f over the entries of T (row-major, T(i, j) at i·d + j),
/// followed by `extra_vars` unconstrained variables: equalities uᵀT = fᵀ and
/// the facets of Ω_A^{≤1} applied to T v, grouped by state vertex v.
LpProblem transformation_lp(const StateSpace& a, const Vector& f, std::size_t extra_vars = 0);

/// transformation_lp plus the equalities Tω = ω for the vertices of F_f.
LpProblem postulate_lp(const StateSpace& a, const Vector& f);

Matrix matrix_from_lp_point(const Vector& x, std::size_t d);

/// Throws NotPure (also for f = 0, whose certain face is empty).
PostulateOutcome find_transformation(const StateSpace& a, const Vector& f);

/// The unique pure effect whose certain face is the minus-face F. Throws NotAMinusFace.
Vector minus_face_pure_effect(const StateSpace& a, const VPolytope& face);

/// Re-checks a witness with exact arithmetic against the facets of Ω_A^{≤1}.
bool validate_witness(const StateSpace& a, const TransformationWitness& w);

/// Re-checks a certificate's defining inequality or membership claims.
bool validate_certificate(const StateSpace& a, const Vector& f, const ObstructionCertificate& c);

enum class Verdict { AllFeasible, ObstructionFound };

std::string_view to_string(Verdict v);

struct PostulateEntry {
  VPolytope face;  // certain face of the effect
  Vector effect;
  PostulateOutcome outcome;
};

struct PostulateReport {
  std::vector<PostulateEntry> entries;
  Verdict verdict = Verdict::AllFeasible;
};

/// One entry per minus-face of Ω_A, in canonical facet order. With
/// `all_pure`, every nonzero pure effect is checked instead.
PostulateReport check_postulate(const StateSpace& a, bool all_pure = false);

inline PostulateReport check_postulate_minusfaces(const StateSpace& a) {
  return check_postulate(a, false);
}

struct Theorem1Check {
  Verdict verdict = Verdict::AllFeasible;
  Classification classification = Classification::Classical;
  bool uniformly_pyramidal = false;
  /// AllFeasible ⇒ uniformly pyramidal.
  bool step_i = false;
  /// Uniformly pyramidal ⇒ simplex.
  bool step_ii = false;
  /// AllFeasible ⇔ Classical.
  bool consistent = false;

  bool holds() const { return step_i && step_ii && consistent; }
};

Theorem1Check theorem1_check(const StateSpace& a, const PostulateReport& report);
Theorem1Check theorem1_check(const StateSpace& a);

inline bool verify_theorem1(const StateSpace& a) {
  return theorem1_check(a).holds();
}

}  // namespace gptlab
