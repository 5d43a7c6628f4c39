#pragma once

#include "gptlab/postulate.hpp"

#include <cstdint>

namespace gptlab {

/// ℓ∞ and ℓ1 on the coordinates of A.
enum class PolyhedralNorm { MaxAbs, SumAbs };

std::string_view to_string(PolyhedralNorm norm);

/// Accepts "linf"/"maxabs" and "l1"/"sumabs". Throws ParseError.
PolyhedralNorm parse_norm(std::string_view text);

Rational norm_value(const Vector& x, PolyhedralNorm norm);

/// T is positive and u_A ∘ T = f.
bool in_tf(const StateSpace& a, const Vector& f, const Matrix& t);

/// D_f(T): the largest ‖Tω − ω‖ over vertices ω of F_f. Throws NotInTf or EmptyCertainFace.
Rational disturbance(const StateSpace& a, const Vector& f, const Matrix& t, PolyhedralNorm norm);

struct DisturbanceResult {
  Vector effect;
  PolyhedralNorm norm = PolyhedralNorm::MaxAbs;
  Rational epsilon;
  Matrix minimizer;
  /// First vertex of F_f (canonical order) attaining epsilon under the minimizer.
  Vector witness_state;
};

/// min over T ∈ T_f of D_f(T), as an exact LP optimum. Throws NotPure or EmptyCertainFace.
DisturbanceResult min_disturbance(const StateSpace& a, const Vector& f, PolyhedralNorm norm);

/// Constructive lower bound d(L(τ), Ω^{≤1}) / ((d_A − 1) α_max) for a minus-face
/// effect whose impossible face is a single state.
struct CaseIBound {
  Rational bound;
  /// Identity on F_f, zero on the impossible state.
  Matrix map;
  Vector tau;
  Rational distance;
  Rational alpha_max;
};

/// nullopt when not applicable (F̄_f is not a single point, or F_f is not a minus-face).
std::optional<CaseIBound> proof_bound_case_i(const StateSpace& a, const Vector& f, PolyhedralNorm norm);

/// Distance from x to Ω_A^{≤1} in the given norm.
Rational distance_to_subnormalized(const StateSpace& a, const Vector& x, PolyhedralNorm norm);

/// dim T(F_f) ≤ dim A − dim F̄_f − 2. Throws NotInTf.
bool lemma6_dimension_check(const StateSpace& a, const Vector& f, const Matrix& t);

/// Elements of T_f maximizing seeded random rational objectives.
std::vector<Matrix> sample_tf(const StateSpace& a, const Vector& f, std::uint64_t seed, int count);

/// min_disturbance for every minus-face effect of a non-classical space. Throws IsClassical.
std::vector<DisturbanceResult> minus_face_disturbances(const StateSpace& a, PolyhedralNorm norm);

/// Some minus-face effect has ε > 0. Throws IsClassical.
bool verify_theorem2(const StateSpace& a, PolyhedralNorm norm);

}  // namespace gptlab
