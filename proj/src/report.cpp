#include "gptlab/report.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace gptlab {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw Error(ErrorKind::ParseError, field + ": " + what);
}

// Error text without the leading kind name.
std::string detail(const Error& e) {
  std::string_view text = e.what();
  const std::string prefix = std::string(to_string(e.kind())) + ": ";
  if (text.starts_with(prefix)) text.remove_prefix(prefix.size());
  return std::string(text);
}

Rational rational_field(const Json& j, const std::string& field) {
  if (!j.is_string()) field_error(field, "expected a rational string such as \"1/2\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    field_error(field, detail(e));
  }
}

Vector vector_field(const Json& j, const std::string& field, std::optional<std::size_t> dim = std::nullopt) {
  if (!j.is_array()) field_error(field, "expected an array");
  if (dim && j.size() != *dim) {
    field_error(field, "expected " + std::to_string(*dim) + " entries, got " + std::to_string(j.size()));
  }
  Vector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[i] = rational_field(j[i], field + "[" + std::to_string(i) + "]");
  return v;
}

Matrix matrix_field(const Json& j, const std::string& field, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) field_error(field, "expected " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    Vector row = vector_field(j[r], field + "[" + std::to_string(r) + "]", cols);
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
  }
  return m;
}

const Json& member(const Json& j, const std::string& key, const std::string& context) {
  if (!j.is_object()) field_error(context, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) field_error(context.empty() ? key : context + "." + key, "missing");
  return *it;
}

std::size_t index_of(const StateSpace& a, const Vector& v) {
  const auto& states = a.states();
  return static_cast<std::size_t>(std::lower_bound(states.begin(), states.end(), v) - states.begin());
}

Json indices_json(const StateSpace& a, const VPolytope& face) {
  Json out = Json::array();
  for (const auto& v : face.vertices()) out.push_back(index_of(a, v));
  return out;
}

Json facet_list_json(const HPolytope& h) {
  Json out = Json::array();
  for (const auto& c : h.inequalities) out.push_back({{"coeffs", vector_json(c.coeffs)}, {"rhs", rational_json(c.rhs)}});
  return out;
}

Json positivity_json(const StateSpace& a, const Matrix& t) {
  Json out = Json::array();
  for (const auto& v : a.states()) {
    auto weights = subnormalized_weights(a, t * v);
    if (!weights) throw Error(ErrorKind::NotInTf, "image of " + to_string(v) + " is not subnormalized");
    out.push_back(vector_json(*weights));
  }
  return out;
}

Json certificate_json(const StateSpace& a, const Vector& f, const ObstructionCertificate& cert) {
  return std::visit(
      overloaded{[&](const obstruction::DimensionMismatch& m) -> Json {
                   return {{"kind", "DimensionMismatch"},
                           {"dim_certain", m.dim_certain},
                           {"dim_impossible", m.dim_impossible},
                           {"dim_omega", m.dim_omega}};
                 },
                 [&](const obstruction::ShapeMismatch& s) -> Json {
                   VPolytope hull = conv_union(certain_face(a, f), impossible_face(a, f));
                   auto weights = convex_weights(a.omega(), s.witness_point);
                   auto sep = separating_hyperplane(hull, s.witness_point);
                   return {{"kind", "ShapeMismatch"},
                           {"witness_point", vector_json(s.witness_point)},
                           {"witness_weights", vector_json(*weights)},
                           {"separator", {{"coeffs", vector_json(sep->coeffs)}, {"rhs", rational_json(sep->rhs)}}}};
                 },
                 [&](const obstruction::LpInfeasible& l) -> Json {
                   return {{"kind", "LpInfeasible"},
                           {"facets", facet_list_json(a.subnormalized_facets())},
                           {"farkas", vector_json(l.farkas)}};
                 }},
      cert);
}

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

}  // namespace

Json rational_json(const Rational& r) {
  return format_rational(r);
}

Json vector_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& e : v) out.push_back(format_rational(e));
  return out;
}

Json matrix_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_json(m.row(r)));
  return out;
}

LoadedModel model_from_json(const Json& doc, std::string identity) {
  if (!doc.is_object()) field_error("model", "expected a JSON object");
  const Json& version = member(doc, "schema_version", "");
  if (!version.is_number_integer()) field_error("schema_version", "expected an integer");
  if (version.get<long long>() != kSchemaVersion) {
    field_error("schema_version", "unsupported version " + version.dump() + " (expected " +
                                      std::to_string(kSchemaVersion) + ")");
  }
  const Json& dim = member(doc, "dim_A", "");
  if (!dim.is_number_integer() || dim.get<long long>() < 1) field_error("dim_A", "expected a positive integer");
  const auto d = static_cast<std::size_t>(dim.get<long long>());
  Vector unit = vector_field(member(doc, "unit_effect", ""), "unit_effect", d);
  const Json& verts = member(doc, "vertices", "");
  if (!verts.is_array()) field_error("vertices", "expected an array of vertices");
  std::vector<Vector> vertices;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    vertices.push_back(vector_field(verts[i], "vertices[" + std::to_string(i) + "]", d));
  }
  LoadedModel out{StateSpace::build(1, Vector{1}, {Vector{1}}), std::move(identity), ""};
  for (const char* key : {"name", "description"}) {
    if (auto it = doc.find(key); it != doc.end() && !it->is_string()) field_error(key, "expected a string");
  }
  if (out.identity.empty()) out.identity = doc.value("name", std::string("unnamed"));
  out.description = doc.value("description", std::string());
  try {
    out.space = StateSpace::build(d, std::move(unit), std::move(vertices));
  } catch (const Error& e) {
    throw Error(e.kind(), "vertices: " + detail(e));
  }
  return out;
}

Json model_to_json(const StateSpace& a, const std::string& name, const std::string& description) {
  Json out;
  out["schema_version"] = kSchemaVersion;
  if (!name.empty()) out["name"] = name;
  if (!description.empty()) out["description"] = description;
  out["dim_A"] = a.dim();
  out["unit_effect"] = vector_json(a.unit());
  Json verts = Json::array();
  for (const auto& v : a.states()) verts.push_back(vector_json(v));
  out["vertices"] = std::move(verts);
  return out;
}

LoadedModel load_model(const std::string& ref) {
  if (ref.starts_with("zoo:")) {
    ModelSpec spec = parse_zoo_reference(ref);
    return {make_model(spec), zoo_reference(spec), spec.description};
  }
  std::ifstream in(ref);
  if (!in) throw Error(ErrorKind::ParseError, "model: cannot read file '" + ref + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("model: malformed JSON: ") + e.what());
  }
  return model_from_json(doc, doc.is_object() && doc.contains("name") && doc["name"].is_string()
                                  ? doc["name"].get<std::string>()
                                  : ref);
}

std::optional<Vector> subnormalized_weights(const StateSpace& a, const Vector& x) {
  const VPolytope& sub = a.subnormalized();
  auto weights = convex_weights(sub, x);
  if (!weights) return std::nullopt;
  Vector out(a.states().size());
  for (std::size_t k = 0; k < sub.size(); ++k) {
    const Vector& v = sub.vertices()[k];
    if (v.is_zero()) continue;
    out[index_of(a, v)] = (*weights)[k];
  }
  return out;
}

Json classification_json(const StateSpace& a) {
  return std::string(to_string(classify(a)));
}

Json effects_json(const StateSpace& a) {
  Json out = Json::array();
  std::size_t index = 0;
  for (const auto& f : a.pure_effects()) {
    VPolytope certain = certain_face(a, f);
    VPolytope impossible = impossible_face(a, f);
    out.push_back({{"index", index++},
                   {"functional", vector_json(f)},
                   {"certain_face", indices_json(a, certain)},
                   {"impossible_face", indices_json(a, impossible)},
                   {"dim_certain", dimension(certain)},
                   {"dim_impossible", dimension(impossible)}});
  }
  return out;
}

Json postulate_json(const StateSpace& a, const PostulateReport& report, bool all_pure) {
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    Json entry{{"face", indices_json(a, e.face)}, {"dim_face", dimension(e.face)}, {"effect", vector_json(e.effect)}};
    if (const auto* w = std::get_if<TransformationWitness>(&e.outcome)) {
      entry["outcome"] = "witness";
      entry["transformation"] = matrix_json(w->transformation);
      entry["positivity"] = positivity_json(a, w->transformation);
    } else {
      entry["outcome"] = "obstruction";
      entry["certificate"] = certificate_json(a, e.effect, std::get<ObstructionCertificate>(e.outcome));
    }
    entries.push_back(std::move(entry));
  }
  return {{"scope", all_pure ? "all_pure" : "minus_faces"},
          {"verdict", std::string(to_string(report.verdict))},
          {"entries", std::move(entries)}};
}

Json disturbance_json(const StateSpace& a, const std::vector<Vector>& effects, PolyhedralNorm norm, bool witness) {
  Json out = Json::array();
  for (const auto& f : effects) {
    DisturbanceResult r = min_disturbance(a, f, norm);
    Json entry{{"effect", vector_json(f)},
               {"norm", std::string(to_string(norm))},
               {"epsilon", rational_json(r.epsilon)},
               {"epsilon_decimal", format_decimal(r.epsilon)},
               {"witness_state", vector_json(r.witness_state)}};
    if (witness) {
      entry["minimizer"] = matrix_json(r.minimizer);
      entry["positivity"] = positivity_json(a, r.minimizer);
    }
    std::optional<CaseIBound> bound;
    if (dimension(certain_face(a, f)) == dimension(a.omega()) - 1) bound = proof_bound_case_i(a, f, norm);
    if (bound) {
      entry["case_i_bound"] = {{"bound", rational_json(bound->bound)},
                               {"bound_decimal", format_decimal(bound->bound)},
                               {"map", matrix_json(bound->map)},
                               {"tau", vector_json(bound->tau)},
                               {"distance", rational_json(bound->distance)},
                               {"alpha_max", rational_json(bound->alpha_max)}};
    } else {
      entry["case_i_bound"] = nullptr;
    }
    out.push_back(std::move(entry));
  }
  return out;
}

Json build_report(const LoadedModel& model, const ReportOptions& options) {
  const StateSpace& a = model.space;
  Json timings = Json::object();
  Json report;
  report["schema_version"] = kSchemaVersion;
  report["tool"] = {{"name", "gptlab"}, {"version", std::string(kToolVersion)}};
  Json m = model_to_json(a);
  m.erase("schema_version");
  report["model"] = {{"identity", model.identity}, {"description", model.description}};
  for (auto& [key, value] : m.items()) report["model"][key] = value;

  auto start = Clock::now();
  report["classification"] = classification_json(a);
  timings["classify_ms"] = elapsed_ms(start);

  start = Clock::now();
  report["pure_effects"] = effects_json(a);
  timings["effects_ms"] = elapsed_ms(start);

  start = Clock::now();
  PostulateReport postulate = check_postulate(a, options.all_pure);
  report["postulate"] = postulate_json(a, postulate, options.all_pure);
  Theorem1Check t1 = theorem1_check(a, options.all_pure ? check_postulate_minusfaces(a) : postulate);
  report["classicality"] = {{"verdict", std::string(to_string(t1.verdict))},
                        {"uniformly_pyramidal", t1.uniformly_pyramidal},
                        {"step_i", t1.step_i},
                        {"step_ii", t1.step_ii},
                        {"consistent", t1.consistent},
                        {"holds", t1.holds()}};
  timings["postulate_ms"] = elapsed_ms(start);

  const bool gated = a.dim() > options.disturbance_max_dim && !options.force;
  std::vector<Vector> effects;
  for (const auto& e : postulate.entries) effects.push_back(e.effect);

  start = Clock::now();
  if (gated) {
    report["disturbance"] = {{"status", "skipped"},
                             {"reason", "dim_A " + std::to_string(a.dim()) + " exceeds " +
                                            std::to_string(options.disturbance_max_dim) + "; rerun with --force"}};
  } else {
    report["disturbance"] = {{"status", "computed"},
                             {"norm", std::string(to_string(options.norm))},
                             {"entries", disturbance_json(a, effects, options.norm, true)}};
  }
  timings["disturbance_ms"] = elapsed_ms(start);

  start = Clock::now();
  if (gated) {
    report["dimension_bound"] = {{"status", "skipped"}};
  } else {
    Json entries = Json::array();
    for (const auto& f : effects) {
      VPolytope impossible = impossible_face(a, f);
      if (impossible.empty()) continue;
      const VPolytope certain = certain_face(a, f);
      int max_dim = -1;
      bool holds = true;
      for (const auto& t : sample_tf(a, f, options.seed, options.samples_per_effect)) {
        std::vector<Vector> images;
        for (const auto& w : certain.vertices()) images.push_back(t * w);
        max_dim = std::max(max_dim, dimension(images));
        holds = holds && lemma6_dimension_check(a, f, t);
      }
      entries.push_back({{"effect", vector_json(f)},
                         {"dim_impossible", dimension(impossible)},
                         {"bound", static_cast<int>(a.dim()) - dimension(impossible) - 2},
                         {"max_image_dim", max_dim},
                         {"holds", holds}});
    }
    report["dimension_bound"] = {{"status", "computed"},
                                 {"seed", options.seed},
                                 {"samples_per_effect", options.samples_per_effect},
                                 {"entries", std::move(entries)}};
  }
  timings["sampling_ms"] = elapsed_ms(start);

  if (options.timings) report["timings"] = std::move(timings);
  return report;
}

std::uint64_t seed_from_environment() {
  const char* raw = std::getenv("GPTLAB_SEED");
  if (!raw || !*raw) return 0;
  std::string_view text(raw);
  std::uint64_t seed = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), seed);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorKind::ParseError, "GPTLAB_SEED: expected a nonnegative integer, got '" + std::string(text) + "'");
  }
  return seed;
}

namespace {

// Exact re-validation against the model stored in the report. Nothing here
// solves an optimization problem.
class Verifier {
 public:
  explicit Verifier(VerificationResult& result) : result_(result) {}

  void expect(bool ok, const std::string& what) {
    ++result_.checked;
    if (!ok) result_.failures.push_back(what);
  }

  void load_model(const Json& model) {
    d_ = static_cast<std::size_t>(member(model, "dim_A", "model").get<long long>());
    unit_ = vector_field(member(model, "unit_effect", "model"), "model.unit_effect", d_);
    const Json& verts = member(model, "vertices", "model");
    for (std::size_t i = 0; i < verts.size(); ++i) {
      states_.push_back(vector_field(verts[i], "model.vertices[" + std::to_string(i) + "]", d_));
    }
    bool normalized = true;
    for (const auto& v : states_) normalized = normalized && dot(unit_, v) == 1;
    expect(normalized, "model: some state has u_A value different from 1");
    expect(rank(states_) == d_, "model: states do not span A");
    dim_omega_ = dimension(states_);
  }

  std::vector<std::size_t> level_set(const Vector& f, const Rational& level) const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < states_.size(); ++k) {
      if (dot(f, states_[k]) == level) out.push_back(k);
    }
    return out;
  }

  std::vector<Vector> pick(const std::vector<std::size_t>& idx) const {
    std::vector<Vector> out;
    for (auto i : idx) out.push_back(states_[i]);
    return out;
  }

  std::vector<std::size_t> indices(const Json& j, const std::string& field) const {
    if (!j.is_array()) field_error(field, "expected an index array");
    std::vector<std::size_t> out;
    for (const auto& e : j) {
      if (!e.is_number_unsigned() || e.get<std::size_t>() >= states_.size()) field_error(field, "bad state index");
      out.push_back(e.get<std::size_t>());
    }
    return out;
  }

  bool is_pure(const Vector& f) const {
    std::vector<Vector> tight;
    for (const auto& v : states_) {
      Rational value = dot(f, v);
      if (value < 0 || value > 1) return false;
      if (value == 0 || value == 1) tight.push_back(v);
    }
    return rank(tight) == d_;
  }

  // Σλ ≤ 1, λ ≥ 0 and Σ λ_k v_k = x.
  bool subnormalized_combination(const Vector& weights, const Vector& x) const {
    if (weights.dim() != states_.size()) return false;
    Vector sum(d_);
    Rational total = 0;
    for (std::size_t k = 0; k < states_.size(); ++k) {
      if (weights[k] < 0) return false;
      sum += weights[k] * states_[k];
      total += weights[k];
    }
    return total <= 1 && sum == x;
  }

  bool positive(const Matrix& t, const Json& positivity, const std::string& field) const {
    if (!positivity.is_array() || positivity.size() != states_.size()) field_error(field, "one weight row per state");
    for (std::size_t k = 0; k < states_.size(); ++k) {
      Vector w = vector_field(positivity[k], field + "[" + std::to_string(k) + "]", states_.size());
      if (!subnormalized_combination(w, t * states_[k])) return false;
    }
    return true;
  }

  void check_effects(const Json& table) {
    for (std::size_t i = 0; i < table.size(); ++i) {
      const std::string label = "pure_effects[" + std::to_string(i) + "]";
      const Json& e = table[i];
      Vector f = vector_field(member(e, "functional", label), label + ".functional", d_);
      expect(is_pure(f), label + ": not an extreme effect");
      auto certain = level_set(f, 1);
      auto impossible = level_set(f, 0);
      expect(indices(member(e, "certain_face", label), label + ".certain_face") == certain,
             label + ": certain face does not match f(ω) = 1");
      expect(indices(member(e, "impossible_face", label), label + ".impossible_face") == impossible,
             label + ": impossible face does not match f(ω) = 0");
      expect(member(e, "dim_certain", label).get<int>() == dimension(pick(certain)), label + ": dim_certain");
      expect(member(e, "dim_impossible", label).get<int>() == dimension(pick(impossible)), label + ": dim_impossible");
    }
  }

  void check_certificate(const Json& cert, const Vector& f, const std::vector<std::size_t>& certain,
                         const std::string& label) {
    const std::string kind = member(cert, "kind", label).get<std::string>();
    auto impossible = level_set(f, 0);
    if (kind == "DimensionMismatch") {
      const int dc = member(cert, "dim_certain", label).get<int>();
      const int di = member(cert, "dim_impossible", label).get<int>();
      const int dw = member(cert, "dim_omega", label).get<int>();
      expect(dc == dimension(pick(certain)) && di == dimension(pick(impossible)) && dw == dim_omega_,
             label + ": reported dimensions are wrong");
      expect(dc + di > dw - 1, label + ": dimensions do not violate the dimension condition");
    } else if (kind == "ShapeMismatch") {
      Vector p = vector_field(member(cert, "witness_point", label), label + ".witness_point", d_);
      Vector weights = vector_field(member(cert, "witness_weights", label), label + ".witness_weights", states_.size());
      const Json& sep = member(cert, "separator", label);
      Vector a = vector_field(member(sep, "coeffs", label), label + ".separator.coeffs", d_);
      Rational b = rational_field(member(sep, "rhs", label), label + ".separator.rhs");
      expect(impossible.size() <= 1, label + ": impossible face has more than one point");
      std::vector<Vector> hull = pick(certain);
      for (const auto& v : pick(impossible)) hull.push_back(v);
      // p ∈ aff(hull): p - h0 lies in the span of the differences.
      std::vector<Vector> diffs;
      for (const auto& v : hull) diffs.push_back(v - hull.front());
      const std::size_t r = rank(diffs);
      diffs.push_back(p - hull.front());
      expect(rank(diffs) == r, label + ": witness point is outside the affine hull");
      Rational total = 0;
      Vector sum(d_);
      bool nonneg = true;
      for (std::size_t k = 0; k < states_.size(); ++k) {
        nonneg = nonneg && weights[k] >= 0;
        total += weights[k];
        sum += weights[k] * states_[k];
      }
      expect(nonneg && total == 1 && sum == p, label + ": witness weights do not place the point in Ω");
      bool separated = dot(a, p) > b;
      for (const auto& v : hull) separated = separated && dot(a, v) <= b;
      expect(separated, label + ": separator does not exclude the point from the hull");
    } else if (kind == "LpInfeasible") {
      const Json& facets = member(cert, "facets", label);
      HPolytope h;
      h.ambient_dim = d_;
      for (std::size_t i = 0; i < facets.size(); ++i) {
        const std::string fl = label + ".facets[" + std::to_string(i) + "]";
        LinearConstraint c{vector_field(member(facets[i], "coeffs", fl), fl + ".coeffs", d_),
                           rational_field(member(facets[i], "rhs", fl), fl + ".rhs")};
        bool valid = c.rhs >= 0;
        for (const auto& v : states_) valid = valid && dot(c.coeffs, v) <= c.rhs;
        expect(valid, fl + ": not valid on Ω^{≤1}");
        h.inequalities.push_back(std::move(c));
      }
      Vector farkas = vector_field(member(cert, "farkas", label), label + ".farkas");
      expect(certifies_infeasible(rebuild_postulate_lp(f, certain, h), farkas), label + ": Farkas certificate fails");
    } else {
      expect(false, label + ": unknown certificate kind '" + kind + "'");
    }
  }

  LpProblem rebuild_postulate_lp(const Vector& f, const std::vector<std::size_t>& certain, const HPolytope& h) const {
    const std::size_t d = d_;
    LpProblem lp;
    lp.num_vars = d * d;
    for (std::size_t j = 0; j < d; ++j) {
      Vector row(d * d);
      for (std::size_t i = 0; i < d; ++i) row[i * d + j] = unit_[i];
      lp.add_eq(std::move(row), f[j]);
    }
    for (auto idx : certain) {
      const Vector& w = states_[idx];
      for (std::size_t i = 0; i < d; ++i) {
        Vector row(d * d);
        for (std::size_t j = 0; j < d; ++j) row[i * d + j] = w[j];
        lp.add_eq(std::move(row), w[i]);
      }
    }
    for (const auto& v : states_) {
      for (const auto& facet : h.inequalities) {
        Vector row(d * d);
        for (std::size_t i = 0; i < d; ++i) {
          for (std::size_t j = 0; j < d; ++j) row[i * d + j] = facet.coeffs[i] * v[j];
        }
        lp.add_le(std::move(row), facet.rhs);
      }
    }
    return lp;
  }

  void check_postulate(const Json& section, const std::string& classification) {
    const bool minus_only = member(section, "scope", "postulate").get<std::string>() == "minus_faces";
    const Json& entries = member(section, "entries", "postulate");
    bool all_witness = true;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const std::string label = "postulate.entries[" + std::to_string(i) + "]";
      const Json& e = entries[i];
      Vector f = vector_field(member(e, "effect", label), label + ".effect", d_);
      expect(is_pure(f), label + ": effect is not pure");
      auto certain = level_set(f, 1);
      expect(indices(member(e, "face", label), label + ".face") == certain, label + ": face is not the certain face");
      if (minus_only) expect(dimension(pick(certain)) == dim_omega_ - 1, label + ": face is not a minus-face");
      const std::string outcome = member(e, "outcome", label).get<std::string>();
      if (outcome == "witness") {
        Matrix t = matrix_field(member(e, "transformation", label), label + ".transformation", d_, d_);
        expect(left_multiply(unit_, t) == f, label + ": u_A ∘ T differs from f");
        bool fixes = true;
        for (auto idx : certain) fixes = fixes && t * states_[idx] == states_[idx];
        expect(fixes, label + ": T moves a state of the certain face");
        expect(positive(t, member(e, "positivity", label), label + ".positivity"),
               label + ": positivity weights do not reproduce T v");
      } else {
        all_witness = false;
        check_certificate(member(e, "certificate", label), f, certain, label + ".certificate");
      }
    }
    const std::string verdict = member(section, "verdict", "postulate").get<std::string>();
    expect((verdict == "AllFeasible") == all_witness, "postulate: verdict disagrees with the entries");
    if (minus_only) {
      const bool simplex = static_cast<int>(states_.size()) == dim_omega_ + 1;
      expect((classification == "Classical") == simplex, "classification: disagrees with the vertex count");
    }
  }

  void check_disturbance(const Json& section) {
    if (member(section, "status", "disturbance").get<std::string>() != "computed") return;
    const bool max_abs = parse_norm(member(section, "norm", "disturbance").get<std::string>()) == PolyhedralNorm::MaxAbs;
    const Json& entries = member(section, "entries", "disturbance");
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const std::string label = "disturbance.entries[" + std::to_string(i) + "]";
      const Json& e = entries[i];
      Vector f = vector_field(member(e, "effect", label), label + ".effect", d_);
      Rational eps = rational_field(member(e, "epsilon", label), label + ".epsilon");
      Matrix t = matrix_field(member(e, "minimizer", label), label + ".minimizer", d_, d_);
      Vector witness = vector_field(member(e, "witness_state", label), label + ".witness_state", d_);
      expect(left_multiply(unit_, t) == f, label + ": u_A ∘ T differs from f");
      expect(positive(t, member(e, "positivity", label), label + ".positivity"), label + ": minimizer is not positive");
      auto norm = max_abs ? PolyhedralNorm::MaxAbs : PolyhedralNorm::SumAbs;
      Rational worst = 0;
      for (auto idx : level_set(f, 1)) worst = std::max(worst, norm_value(t * states_[idx] - states_[idx], norm));
      expect(worst == eps, label + ": D_f(minimizer) differs from epsilon");
      expect(dot(f, witness) == 1 && norm_value(t * witness - witness, norm) == eps,
             label + ": witness state does not attain epsilon");
      const Json& bound = member(e, "case_i_bound", label);
      if (bound.is_null()) continue;
      Matrix l = matrix_field(member(bound, "map", label), label + ".case_i_bound.map", d_, d_);
      bool fixes = true;
      for (auto idx : level_set(f, 1)) fixes = fixes && l * states_[idx] == states_[idx];
      bool kills = true;
      for (auto idx : level_set(f, 0)) kills = kills && (l * states_[idx]).is_zero();
      expect(fixes && kills, label + ": constructive bound map does not fix F_f and kill the impossible state");
    }
  }

 private:
  VerificationResult& result_;
  std::size_t d_ = 0;
  Vector unit_;
  std::vector<Vector> states_;
  int dim_omega_ = -1;
};

}  // namespace

VerificationResult verify_report(const Json& report) {
  VerificationResult result;
  Verifier v(result);
  try {
    const Json& version = member(report, "schema_version", "");
    if (!version.is_number_integer() || version.get<int>() != kSchemaVersion) {
      field_error("schema_version", "unsupported report version");
    }
    v.load_model(member(report, "model", ""));
    if (!result.ok()) return result;
    v.check_effects(member(report, "pure_effects", ""));
    v.check_postulate(member(report, "postulate", ""), member(report, "classification", "").get<std::string>());
    if (report.contains("disturbance")) v.check_disturbance(report["disturbance"]);
  } catch (const Error& e) {
    result.failures.push_back(e.what());
  } catch (const Json::exception& e) {
    result.failures.push_back(std::string("report: malformed structure: ") + e.what());
  }
  return result;
}

}  // namespace gptlab
