#include "doctest.h"
#include "oracles.hpp"

#include "gptlab/report.hpp"

#include <cstdlib>

using namespace gptlab;

namespace {

std::string error_message(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  FAIL("expected an error");
  return {};
}

Json square_doc() {
  return model_to_json(polygon(4), "square");
}

LoadedModel zoo(const std::string& ref) {
  return load_model(ref);
}

bool mentions(const VerificationResult& r, const std::string& text) {
  for (const auto& f : r.failures) {
    if (f.find(text) != std::string::npos) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("model documents round-trip") {
  for (const auto& spec : standard_zoo()) {
    StateSpace a = make_model(spec);
    Json doc = model_to_json(a, zoo_reference(spec), spec.description);
    LoadedModel back = model_from_json(Json::parse(doc.dump()));
    CHECK(back.space.states() == a.states());
    CHECK(back.space.unit() == a.unit());
    CHECK(back.identity == zoo_reference(spec));
    CHECK(model_to_json(back.space, back.identity, back.description).dump() == doc.dump());
  }
}

TEST_CASE("random models round-trip") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t d = 2 + trial % 3;
    std::vector<Vector> points;
    for (int k = 0; k < 8; ++k) {
      Vector p = oracle::random_vector(rng, d - 1, 5, 4);
      std::vector<Rational> lifted(p.begin(), p.end());
      lifted.push_back(1);
      points.push_back(Vector(std::move(lifted)));
    }
    if (rank(points) < d) continue;
    StateSpace a = StateSpace::build(d, Vector::unit(d, d - 1), points);
    LoadedModel back = model_from_json(Json::parse(model_to_json(a).dump(2)));
    CHECK(back.space.states() == a.states());
  }
}

TEST_CASE("model parse errors name the field") {
  Json doc = square_doc();
  doc.erase("schema_version");
  CHECK(error_message([&] { model_from_json(doc); }).starts_with("ParseError: schema_version: missing"));

  doc = square_doc();
  doc["schema_version"] = 2;
  CHECK(error_message([&] { model_from_json(doc); }).starts_with("ParseError: schema_version: unsupported"));

  doc = square_doc();
  doc["vertices"][2][0] = 0.5;
  CHECK(error_message([&] { model_from_json(doc); }).starts_with("ParseError: vertices[2][0]:"));

  doc = square_doc();
  doc["vertices"][1][1] = "1/0";
  CHECK(error_message([&] { model_from_json(doc); }).starts_with("ParseError: vertices[1][1]:"));

  doc = square_doc();
  doc["vertices"][3] = Json::array({"1", "1"});
  CHECK(error_message([&] { model_from_json(doc); }).starts_with("ParseError: vertices[3]: expected 3 entries"));

  doc = square_doc();
  doc["unit_effect"] = Json::array({"0", "0"});
  CHECK(error_message([&] { model_from_json(doc); }).starts_with("ParseError: unit_effect:"));

  doc = square_doc();
  doc["dim_A"] = "3";
  CHECK(error_message([&] { model_from_json(doc); }).starts_with("ParseError: dim_A:"));

  doc = square_doc();
  doc["vertices"][0] = Json::array({"1", "0", "2"});
  std::string msg = error_message([&] { model_from_json(doc); });
  CHECK(msg.starts_with("NotNormalized: vertices:"));

  CHECK(error_message([] { load_model("/nonexistent/model.json"); }).starts_with("ParseError: model: cannot read"));
  CHECK(error_message([] { load_model("zoo:hexagon"); }).find("hexagon") != std::string::npos);
}

TEST_CASE("subnormalized weights reproduce the point") {
  StateSpace a = polygon(5);
  for (const auto& v : a.states()) {
    Vector x = Rational(1, 3) * v;
    auto w = subnormalized_weights(a, x);
    REQUIRE(w);
    Vector sum(a.dim());
    Rational total = 0;
    for (std::size_t k = 0; k < a.states().size(); ++k) {
      CHECK((*w)[k] >= 0);
      sum += (*w)[k] * a.states()[k];
      total += (*w)[k];
    }
    CHECK(sum == x);
    CHECK(total <= 1);
  }
  CHECK_FALSE(subnormalized_weights(a, Vector{0, 0, 2}));
  CHECK(subnormalized_weights(a, Vector{0, 0, 0}));
}

TEST_CASE("reports are deterministic and round-trip") {
  for (const char* ref : {"zoo:polygon:4", "zoo:polygon:5", "zoo:simplex:3"}) {
    LoadedModel m = zoo(ref);
    const std::string first = build_report(m, {}).dump(2);
    const std::string second = build_report(m, {}).dump(2);
    CHECK(first == second);
    CHECK(Json::parse(first).dump(2) == first);
  }
}

TEST_CASE("report contents for the square") {
  Json r = build_report(zoo("zoo:polygon:4"), {});
  CHECK(r["classification"] == "DiscreteNonClassical");
  CHECK(r["pure_effects"].size() == 6);
  CHECK(r["postulate"]["verdict"] == "ObstructionFound");
  REQUIRE(r["postulate"]["entries"].size() == 4);
  for (const auto& e : r["postulate"]["entries"]) {
    CHECK(e["certificate"]["kind"] == "DimensionMismatch");
  }
  REQUIRE(r["disturbance"]["entries"].size() == 4);
  for (const auto& e : r["disturbance"]["entries"]) CHECK(e["epsilon"] == "1/2");
  CHECK_FALSE(r.contains("timings"));
}

TEST_CASE("report contents for a simplex") {
  Json r = build_report(zoo("zoo:simplex:4"), {});
  CHECK(r["classification"] == "Classical");
  CHECK(r["postulate"]["verdict"] == "AllFeasible");
  REQUIRE(r["postulate"]["entries"].size() == 4);
  for (const auto& e : r["postulate"]["entries"]) CHECK(e["outcome"] == "witness");
  for (const auto& e : r["disturbance"]["entries"]) CHECK(e["epsilon"] == "0");
}

TEST_CASE("disturbance sections are gated by dimension") {
  LoadedModel m = zoo("zoo:nosignaling");
  Json r = build_report(m, {});
  CHECK(r["disturbance"]["status"] == "skipped");
  CHECK(r["dimension_bound"]["status"] == "skipped");
  CHECK(r["postulate"]["entries"].size() == 16);
  CHECK(verify_report(r).ok());

  ReportOptions small;
  small.disturbance_max_dim = 2;
  CHECK(build_report(zoo("zoo:polygon:4"), small)["disturbance"]["status"] == "skipped");
  small.force = true;
  CHECK(build_report(zoo("zoo:polygon:4"), small)["disturbance"]["status"] == "computed");
}

TEST_CASE("timings are opt-in") {
  ReportOptions options;
  options.timings = true;
  Json r = build_report(zoo("zoo:simplex:2"), options);
  REQUIRE(r.contains("timings"));
  CHECK(r["timings"].contains("postulate_ms"));
  CHECK(verify_report(r).ok());
}

TEST_CASE("all-pure reports verify") {
  ReportOptions options;
  options.all_pure = true;
  for (const char* ref : {"zoo:polygon:4", "zoo:polygon:5", "zoo:simplex:3", "zoo:square_pyramid"}) {
    Json r = build_report(zoo(ref), options);
    CHECK(r["postulate"]["scope"] == "all_pure");
    VerificationResult v = verify_report(r);
    CHECK_MESSAGE(v.ok(), ref);
  }
}

TEST_CASE("verify-report passes on generated reports") {
  for (const char* ref : {"zoo:polygon:3", "zoo:polygon:4", "zoo:polygon:5", "zoo:polygon:6", "zoo:simplex:1",
                          "zoo:simplex:5", "zoo:square_pyramid"}) {
    for (auto norm : {PolyhedralNorm::MaxAbs, PolyhedralNorm::SumAbs}) {
      ReportOptions options;
      options.norm = norm;
      VerificationResult v = verify_report(build_report(zoo(ref), options));
      CHECK_MESSAGE(v.ok(), ref);
      CHECK(v.checked > 0);
    }
  }
}

TEST_CASE("tampered witnesses are rejected") {
  const Json good = build_report(zoo("zoo:polygon:3"), {});
  REQUIRE(verify_report(good).ok());

  Json r = good;
  r["postulate"]["entries"][0]["transformation"][0][0] = "7";
  CHECK(mentions(verify_report(r), "postulate.entries[0]"));

  r = good;
  r["postulate"]["entries"][1]["positivity"][0][0] = "-1";
  CHECK(mentions(verify_report(r), "positivity"));

  r = good;
  r["postulate"]["verdict"] = "ObstructionFound";
  CHECK(mentions(verify_report(r), "verdict"));

  r = good;
  r["classification"] = "DiscreteNonClassical";
  CHECK(mentions(verify_report(r), "classification"));

  r = good;
  r["pure_effects"][0]["certain_face"] = Json::array({0});
  CHECK(mentions(verify_report(r), "pure_effects[0]"));

  r = good;
  r["model"]["vertices"][0][2] = "2";
  CHECK_FALSE(verify_report(r).ok());

  r = good;
  r["schema_version"] = 7;
  CHECK(mentions(verify_report(r), "schema_version"));

  r = good;
  r.erase("postulate");
  CHECK(mentions(verify_report(r), "postulate"));
}

TEST_CASE("tampered certificates are rejected") {
  const Json square = build_report(zoo("zoo:polygon:4"), {});
  Json r = square;
  r["postulate"]["entries"][0]["certificate"]["dim_impossible"] = 0;
  CHECK(mentions(verify_report(r), "dimensions"));

  const Json pentagon = build_report(zoo("zoo:polygon:5"), {});
  REQUIRE(verify_report(pentagon).ok());
  r = pentagon;
  r["postulate"]["entries"][2]["certificate"]["separator"]["rhs"] = "100";
  CHECK(mentions(verify_report(r), "separator"));

  r = pentagon;
  auto& weights = r["postulate"]["entries"][2]["certificate"]["witness_weights"];
  weights[1] = "1/2";
  CHECK(mentions(verify_report(r), "witness weights"));

  r = pentagon;
  r["postulate"]["entries"][2]["certificate"]["witness_point"] = Json::array({"0", "0", "1"});
  CHECK_FALSE(verify_report(r).ok());

  r = pentagon;
  r["postulate"]["entries"][0]["certificate"]["kind"] = "Mystery";
  CHECK(mentions(verify_report(r), "unknown certificate kind"));
}

TEST_CASE("tampered disturbance entries are rejected") {
  const Json good = build_report(zoo("zoo:polygon:5"), {});
  Json r = good;
  r["disturbance"]["entries"][0]["epsilon"] = "1/1000";
  CHECK(mentions(verify_report(r), "epsilon"));

  r = good;
  r["disturbance"]["entries"][0]["minimizer"] = matrix_json(Matrix::identity(3));
  CHECK_FALSE(verify_report(r).ok());

  r = good;
  r["disturbance"]["entries"][0]["case_i_bound"]["map"] = matrix_json(Matrix::identity(3));
  CHECK(mentions(verify_report(r), "constructive bound map"));
}

TEST_CASE("Farkas certificates verify without a solver") {
  // The square's edge effects are LP-infeasible as well; swap the dimension
  // certificate for the raw Farkas vector and check both directions.
  StateSpace a = polygon(4);
  Json r = build_report(zoo("zoo:polygon:4"), {});
  auto& entry = r["postulate"]["entries"][0];
  Vector f(3);
  for (std::size_t i = 0; i < 3; ++i) f[i] = parse_rational(entry["effect"][i].get<std::string>());
  auto out = lp_solve(postulate_lp(a, f));
  REQUIRE(std::holds_alternative<lp::Infeasible>(out));
  Json facets = Json::array();
  for (const auto& c : a.subnormalized_facets().inequalities) {
    facets.push_back({{"coeffs", vector_json(c.coeffs)}, {"rhs", rational_json(c.rhs)}});
  }
  entry["certificate"] = {{"kind", "LpInfeasible"},
                          {"facets", facets},
                          {"farkas", vector_json(std::get<lp::Infeasible>(out).farkas)}};
  CHECK(verify_report(r).ok());

  Json bad = r;
  auto& farkas = bad["postulate"]["entries"][0]["certificate"]["farkas"];
  for (auto& x : farkas) {
    if (x != "0") {
      x = "0";
      break;
    }
  }
  CHECK(mentions(verify_report(bad), "Farkas"));

  bad = r;
  bad["postulate"]["entries"][0]["certificate"]["facets"][0]["rhs"] = "-1";
  CHECK(mentions(verify_report(bad), "facets[0]"));
}

TEST_CASE("seed comes from the environment") {
  ::unsetenv("GPTLAB_SEED");
  CHECK(seed_from_environment() == 0);
  ::setenv("GPTLAB_SEED", "12345", 1);
  CHECK(seed_from_environment() == 12345);
  ::setenv("GPTLAB_SEED", "12x", 1);
  CHECK(error_message([] { seed_from_environment(); }).starts_with("ParseError: GPTLAB_SEED"));
  ::unsetenv("GPTLAB_SEED");

  ReportOptions a;
  ReportOptions b;
  b.seed = 99;
  LoadedModel m = zoo("zoo:polygon:5");
  Json ra = build_report(m, a);
  Json rb = build_report(m, b);
  CHECK(rb["dimension_bound"]["seed"] == 99);
  for (const auto& e : rb["dimension_bound"]["entries"]) CHECK(e["holds"] == true);
  CHECK(ra["postulate"] == rb["postulate"]);
}
