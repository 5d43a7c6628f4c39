#include "gptlab/postulate.hpp"

namespace gptlab {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

std::string_view obstruction_name(const ObstructionCertificate& c) {
  return std::visit(overloaded{[](const obstruction::DimensionMismatch&) { return "DimensionMismatch"; },
                               [](const obstruction::ShapeMismatch&) { return "ShapeMismatch"; },
                               [](const obstruction::LpInfeasible&) { return "LpInfeasible"; }},
                    c);
}

std::string_view to_string(Verdict v) {
  return v == Verdict::AllFeasible ? "AllFeasible" : "ObstructionFound";
}

bool lemma_condition_a(const StateSpace& a, const Vector& f) {
  require_pure(a, f);
  return dimension(certain_face(a, f)) + dimension(impossible_face(a, f)) <= dimension(a.omega()) - 1;
}

ConditionB lemma_condition_b(const StateSpace& a, const Vector& f) {
  require_pure(a, f);
  VPolytope certain = certain_face(a, f);
  VPolytope impossible = impossible_face(a, f);
  ConditionB result;
  if (impossible.size() >= 2 || certain.empty()) return result;
  VPolytope hull = conv_union(certain, impossible);
  VPolytope slice = intersect_with_affine(a.omega(), affine_hull(hull.vertices()));
  if (slice == hull) {
    result.status = ConditionB::Status::Holds;
    return result;
  }
  result.status = ConditionB::Status::Fails;
  for (const auto& v : slice.vertices()) {
    if (!contains(hull, v)) {
      result.witness = v;
      break;
    }
  }
  return result;
}

LpProblem transformation_lp(const StateSpace& a, const Vector& f, std::size_t extra_vars) {
  const std::size_t d = a.dim();
  const std::size_t n = d * d + extra_vars;
  const Vector& u = a.unit();
  LpProblem lp;
  lp.num_vars = n;
  for (std::size_t j = 0; j < d; ++j) {
    Vector row(n);
    for (std::size_t i = 0; i < d; ++i) row[i * d + j] = u[i];
    lp.add_eq(std::move(row), f[j]);
  }
  // g·(T v) = Σ_ij g_i T_ij v_j; Ω^{≤1} is full-dimensional so only inequalities occur.
  const auto& facets = a.subnormalized_facets().inequalities;
  for (const auto& v : a.states()) {
    for (const auto& facet : facets) {
      Vector row(n);
      for (std::size_t i = 0; i < d; ++i) {
        if (facet.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j) row[i * d + j] = facet.coeffs[i] * v[j];
      }
      lp.add_le(std::move(row), facet.rhs);
    }
  }
  return lp;
}

LpProblem postulate_lp(const StateSpace& a, const Vector& f) {
  const std::size_t d = a.dim();
  LpProblem lp = transformation_lp(a, f);
  const VPolytope certain = certain_face(a, f);
  for (const auto& w : certain.vertices()) {
    for (std::size_t i = 0; i < d; ++i) {
      Vector row(d * d);
      for (std::size_t j = 0; j < d; ++j) row[i * d + j] = w[j];
      lp.add_eq(std::move(row), w[i]);
    }
  }
  return lp;
}

Matrix matrix_from_lp_point(const Vector& x, std::size_t d) {
  Matrix t(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) t(i, j) = x[i * d + j];
  }
  return t;
}

PostulateOutcome find_transformation(const StateSpace& a, const Vector& f) {
  require_pure(a, f);
  if (f.is_zero()) throw Error(ErrorKind::NotPure, "the zero effect has an empty certain face");
  if (f == a.unit()) return TransformationWitness{f, Matrix::identity(a.dim())};

  LpProblem lp = postulate_lp(a, f);
  LpOutcome out = lp_solve(lp);
  if (const Vector* x = outcome_point(out)) return TransformationWitness{f, matrix_from_lp_point(*x, a.dim())};

  if (!lemma_condition_a(a, f)) {
    return ObstructionCertificate{obstruction::DimensionMismatch{
        dimension(certain_face(a, f)), dimension(impossible_face(a, f)), dimension(a.omega())}};
  }
  if (auto b = lemma_condition_b(a, f); b.status == ConditionB::Status::Fails) {
    return ObstructionCertificate{obstruction::ShapeMismatch{*b.witness}};
  }
  return ObstructionCertificate{obstruction::LpInfeasible{std::get<lp::Infeasible>(out).farkas}};
}

Vector minus_face_pure_effect(const StateSpace& a, const VPolytope& face) {
  if (face.ambient_dim() != a.dim() || face.empty() || dimension(face) != dimension(a.omega()) - 1 ||
      !is_face(a.omega(), face)) {
    throw Error(ErrorKind::NotAMinusFace, "face is not a facet of the state space");
  }
  const std::size_t d = a.dim();
  const auto& verts = face.vertices();
  auto solved = solve_linear(Matrix::from_rows(verts, d), Vector(std::vector<Rational>(verts.size(), Rational(1))));
  const auto& family = std::get<SolutionFamily>(solved);  // u_A is a solution
  if (family.directions.size() != 1) {
    throw Error(ErrorKind::NotAMinusFace, "face does not span a hyperplane");
  }
  const Vector& f0 = family.particular;
  const Vector& n = family.directions.front();

  const Vector* outside = nullptr;
  for (const auto& v : a.states()) {
    if (!face.has_vertex(v)) {
      outside = &v;
      break;
    }
  }
  // Minimize (f0 + t n)·p over the segment of effects that are 1 on F.
  LpProblem lp;
  lp.num_vars = 1;
  lp.objective = Vector{-dot(n, *outside)};
  for (const auto& v : a.states()) {
    lp.add_le(Vector{dot(n, v)}, 1 - dot(f0, v));
    lp.add_ge(Vector{dot(n, v)}, -dot(f0, v));
  }
  auto out = lp_solve(lp);
  const auto& opt = std::get<lp::Optimal>(out);
  Vector f = f0 + opt.point[0] * n;
  if (!is_pure(a, f) || certain_face(a, f) != face) {
    throw Error(ErrorKind::NotAMinusFace, "no pure effect has this certain face");
  }
  return f;
}

namespace {

bool in_subnormalized(const StateSpace& a, const Vector& x) {
  for (const auto& facet : a.subnormalized_facets().inequalities) {
    if (dot(facet.coeffs, x) > facet.rhs) return false;
  }
  return true;
}

}  // namespace

bool validate_witness(const StateSpace& a, const TransformationWitness& w) {
  const Matrix& t = w.transformation;
  if (t.rows() != a.dim() || t.cols() != a.dim()) return false;
  if (left_multiply(a.unit(), t) != w.effect) return false;
  const VPolytope certain = certain_face(a, w.effect);
  for (const auto& v : certain.vertices()) {
    if (t * v != v) return false;
  }
  for (const auto& v : a.states()) {
    if (!in_subnormalized(a, t * v)) return false;
  }
  return true;
}

bool validate_certificate(const StateSpace& a, const Vector& f, const ObstructionCertificate& c) {
  return std::visit(
      overloaded{
          [&](const obstruction::DimensionMismatch& m) {
            return m.dim_certain == dimension(certain_face(a, f)) &&
                   m.dim_impossible == dimension(impossible_face(a, f)) && m.dim_omega == dimension(a.omega()) &&
                   m.dim_certain + m.dim_impossible > m.dim_omega - 1;
          },
          [&](const obstruction::ShapeMismatch& s) {
            VPolytope certain = certain_face(a, f);
            VPolytope impossible = impossible_face(a, f);
            if (impossible.size() > 1) return false;
            VPolytope hull = conv_union(certain, impossible);
            return affine_hull(hull.vertices()).contains(s.witness_point) && contains(a.omega(), s.witness_point) &&
                   !contains(hull, s.witness_point);
          },
          [&](const obstruction::LpInfeasible& l) { return certifies_infeasible(postulate_lp(a, f), l.farkas); }},
      c);
}

PostulateReport check_postulate(const StateSpace& a, bool all_pure) {
  PostulateReport report;
  std::vector<Vector> effects;
  if (all_pure) {
    for (const auto& f : a.pure_effects()) {
      if (!f.is_zero()) effects.push_back(f);
    }
  } else if (dimension(a.omega()) >= 1) {
    for (const auto& face : minus_faces(a.omega())) effects.push_back(minus_face_pure_effect(a, face));
  }
  for (auto& f : effects) {
    PostulateOutcome outcome = find_transformation(a, f);
    if (std::holds_alternative<ObstructionCertificate>(outcome)) report.verdict = Verdict::ObstructionFound;
    report.entries.push_back({certain_face(a, f), std::move(f), std::move(outcome)});
  }
  return report;
}

Theorem1Check theorem1_check(const StateSpace& a, const PostulateReport& report) {
  Theorem1Check check;
  check.verdict = report.verdict;
  check.classification = classify(a);
  const bool simplex = check.classification == Classification::Classical;
  // A point is vacuously uniformly pyramidal: it has no minus-faces.
  check.uniformly_pyramidal = dimension(a.omega()) < 1 || is_uniformly_pyramidal(a.omega()).uniformly_pyramidal;
  const bool feasible = report.verdict == Verdict::AllFeasible;
  check.step_i = !feasible || check.uniformly_pyramidal;
  check.step_ii = !check.uniformly_pyramidal || simplex;
  check.consistent = feasible == simplex;
  return check;
}

Theorem1Check theorem1_check(const StateSpace& a) {
  return theorem1_check(a, check_postulate_minusfaces(a));
}

}  // namespace gptlab
