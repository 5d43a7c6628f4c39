#include "gptlab/disturbance.hpp"

#include <random>

namespace gptlab {

std::string_view to_string(PolyhedralNorm norm) {
  return norm == PolyhedralNorm::MaxAbs ? "linf" : "l1";
}

PolyhedralNorm parse_norm(std::string_view text) {
  if (text == "linf" || text == "maxabs") return PolyhedralNorm::MaxAbs;
  if (text == "l1" || text == "sumabs") return PolyhedralNorm::SumAbs;
  throw Error(ErrorKind::ParseError, "unknown norm '" + std::string(text) + "' (expected linf or l1)");
}

Rational norm_value(const Vector& x, PolyhedralNorm norm) {
  Rational out = 0;
  for (const auto& e : x) {
    if (norm == PolyhedralNorm::MaxAbs) out = std::max(out, abs(e));
    else out += abs(e);
  }
  return out;
}

bool in_tf(const StateSpace& a, const Vector& f, const Matrix& t) {
  if (t.rows() != a.dim() || t.cols() != a.dim() || f.dim() != a.dim()) return false;
  if (left_multiply(a.unit(), t) != f) return false;
  const auto& facets = a.subnormalized_facets().inequalities;
  for (const auto& v : a.states()) {
    Vector image = t * v;
    for (const auto& facet : facets) {
      if (dot(facet.coeffs, image) > facet.rhs) return false;
    }
  }
  return true;
}

namespace {

VPolytope nonempty_certain_face(const StateSpace& a, const Vector& f) {
  VPolytope face = certain_face(a, f);
  if (face.empty()) throw Error(ErrorKind::EmptyCertainFace, to_string(f) + " is never certain");
  return face;
}

void require_in_tf(const StateSpace& a, const Vector& f, const Matrix& t) {
  if (!in_tf(a, f, t)) throw Error(ErrorKind::NotInTf, "transformation is not a positive map inducing the effect");
}

// Adds ‖residual(x)‖ ≤ x[t_index] for a residual that is affine in x, given
// as rows r_k·x - c_k. SumAbs uses auxiliary variables starting at s_index.
void add_norm_bound(LpProblem& lp, const std::vector<LinearConstraint>& residual, std::size_t t_index,
                    std::size_t s_index, PolyhedralNorm norm) {
  const std::size_t n = lp.num_vars;
  Vector sum(n);
  for (std::size_t k = 0; k < residual.size(); ++k) {
    const std::size_t bound = norm == PolyhedralNorm::MaxAbs ? t_index : s_index + k;
    Vector up = residual[k].coeffs;
    up[bound] -= 1;
    lp.add_le(std::move(up), residual[k].rhs);
    Vector down = -residual[k].coeffs;
    down[bound] -= 1;
    lp.add_le(std::move(down), -residual[k].rhs);
    if (norm == PolyhedralNorm::SumAbs) sum[s_index + k] = 1;
  }
  if (norm == PolyhedralNorm::SumAbs) {
    sum[t_index] = -1;
    lp.add_le(std::move(sum), 0);
  }
}

}  // namespace

Rational disturbance(const StateSpace& a, const Vector& f, const Matrix& t, PolyhedralNorm norm) {
  VPolytope face = nonempty_certain_face(a, f);
  require_in_tf(a, f, t);
  Rational worst = 0;
  for (const auto& w : face.vertices()) worst = std::max(worst, norm_value(t * w - w, norm));
  return worst;
}

DisturbanceResult min_disturbance(const StateSpace& a, const Vector& f, PolyhedralNorm norm) {
  require_pure(a, f);
  VPolytope face = nonempty_certain_face(a, f);
  const std::size_t d = a.dim();
  const std::size_t t_index = d * d;
  const std::size_t per_vertex = norm == PolyhedralNorm::SumAbs ? d : 0;
  LpProblem lp = transformation_lp(a, f, 1 + per_vertex * face.size());
  const std::size_t n = lp.num_vars;

  for (std::size_t j = 0; j < face.size(); ++j) {
    const Vector& w = face.vertices()[j];
    // (Tω − ω)_i = Σ_k T_ik ω_k − ω_i.
    std::vector<LinearConstraint> residual;
    for (std::size_t i = 0; i < d; ++i) {
      Vector row(n);
      for (std::size_t k = 0; k < d; ++k) row[i * d + k] = w[k];
      residual.push_back({std::move(row), w[i]});
    }
    add_norm_bound(lp, residual, t_index, t_index + 1 + j * per_vertex, norm);
  }
  lp.objective = -Vector::unit(n, t_index);

  auto out = lp_solve(lp);
  const auto* opt = std::get_if<lp::Optimal>(&out);
  if (!opt) throw Error(ErrorKind::NoSolution, "disturbance program has no optimum");

  DisturbanceResult result;
  result.effect = f;
  result.norm = norm;
  result.minimizer = matrix_from_lp_point(opt->point, d);
  result.epsilon = disturbance(a, f, result.minimizer, norm);
  for (const auto& w : face.vertices()) {
    if (norm_value(result.minimizer * w - w, norm) == result.epsilon) {
      result.witness_state = w;
      break;
    }
  }
  return result;
}

Rational distance_to_subnormalized(const StateSpace& a, const Vector& x, PolyhedralNorm norm) {
  const std::size_t d = a.dim();
  // Variables: y (point of Ω^{≤1}), t, then s for SumAbs.
  const std::size_t n = d + 1 + (norm == PolyhedralNorm::SumAbs ? d : 0);
  LpProblem lp;
  lp.num_vars = n;
  for (const auto& facet : a.subnormalized_facets().inequalities) {
    Vector row(n);
    for (std::size_t i = 0; i < d; ++i) row[i] = facet.coeffs[i];
    lp.add_le(std::move(row), facet.rhs);
  }
  std::vector<LinearConstraint> residual;
  for (std::size_t i = 0; i < d; ++i) residual.push_back({-Vector::unit(n, i), -x[i]});
  add_norm_bound(lp, residual, d, d + 1, norm);
  lp.objective = -Vector::unit(n, d);
  auto out = lp_solve(lp);
  return -std::get<lp::Optimal>(out).value;
}

std::optional<CaseIBound> proof_bound_case_i(const StateSpace& a, const Vector& f, PolyhedralNorm norm) {
  require_pure(a, f);
  VPolytope face = certain_face(a, f);
  VPolytope impossible = impossible_face(a, f);
  if (impossible.size() != 1 || face.empty() || dimension(face) != dimension(a.omega()) - 1) return std::nullopt;
  const std::size_t d = a.dim();
  const Vector& bar = impossible.vertices().front();

  // Lexicographically first d - 1 independent vertices of F_f.
  std::vector<Vector> chosen;
  for (const auto& w : face.vertices()) {
    chosen.push_back(w);
    if (rank(chosen) < chosen.size()) chosen.pop_back();
    if (chosen.size() == d - 1) break;
  }
  std::vector<Vector> basis = chosen;
  basis.push_back(bar);
  const Matrix b = Matrix::from_columns(basis, d);
  const Matrix b_inv = *inverse(b);
  std::vector<Vector> images = chosen;
  images.push_back(Vector::zero(d));
  const Matrix map = Matrix::from_columns(images, d) * b_inv;

  CaseIBound result;
  result.map = map;
  result.distance = -1;
  for (const auto& v : a.states()) {
    Rational dist = distance_to_subnormalized(a, map * v, norm);
    if (dist > result.distance) {
      result.distance = dist;
      result.tau = v;
    }
  }
  if (result.distance == 0) {
    result.bound = 0;
    result.alpha_max = 0;
    return result;
  }
  Vector alpha = b_inv * result.tau;
  result.alpha_max = 0;
  for (std::size_t i = 0; i + 1 < d; ++i) result.alpha_max = std::max(result.alpha_max, abs(alpha[i]));
  result.bound = result.distance / (Rational(static_cast<long>(d - 1)) * result.alpha_max);
  return result;
}

bool lemma6_dimension_check(const StateSpace& a, const Vector& f, const Matrix& t) {
  require_in_tf(a, f, t);
  VPolytope face = nonempty_certain_face(a, f);
  VPolytope impossible = impossible_face(a, f);
  if (impossible.empty()) throw Error(ErrorKind::EmptyInput, "impossible face is empty");
  std::vector<Vector> images;
  for (const auto& w : face.vertices()) images.push_back(t * w);
  return dimension(images) <= static_cast<int>(a.dim()) - dimension(impossible) - 2;
}

std::vector<Matrix> sample_tf(const StateSpace& a, const Vector& f, std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  const std::size_t d = a.dim();
  LpProblem lp = transformation_lp(a, f);
  std::vector<Matrix> out;
  for (int i = 0; i < count; ++i) {
    Vector objective(d * d);
    for (auto& c : objective) {
      const auto den = static_cast<long>(rng() % 10) + 1;
      const auto num = static_cast<long>(rng() % 201) - 100;
      c = Rational(num, den);
    }
    lp.objective = std::move(objective);
    auto result = lp_solve(lp);
    out.push_back(matrix_from_lp_point(std::get<lp::Optimal>(result).point, d));
  }
  return out;
}

std::vector<DisturbanceResult> minus_face_disturbances(const StateSpace& a, PolyhedralNorm norm) {
  if (classify(a) == Classification::Classical) throw Error(ErrorKind::IsClassical, "state space is a simplex");
  std::vector<DisturbanceResult> out;
  for (const auto& face : minus_faces(a.omega())) out.push_back(min_disturbance(a, minus_face_pure_effect(a, face), norm));
  return out;
}

bool verify_theorem2(const StateSpace& a, PolyhedralNorm norm) {
  for (const auto& r : minus_face_disturbances(a, norm)) {
    if (r.epsilon > 0) return true;
  }
  return false;
}

}  // namespace gptlab
