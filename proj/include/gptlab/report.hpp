#pragma once

#include "gptlab/disturbance.hpp"
#include "gptlab/models.hpp"

#include "json.hpp"

#include <cstdint>
#include <string>

namespace gptlab {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr std::string_view kToolVersion = "1.0.0";

struct LoadedModel {
  StateSpace space;
  std::string identity;
  std::string description;
};

/// Parses a model document. Errors are ParseError (or a build error) with a
/// message that starts with the offending field, e.g. "vertices[2][0]: ...".
LoadedModel model_from_json(const Json& doc, std::string identity = {});

Json model_to_json(const StateSpace& a, const std::string& name = {}, const std::string& description = {});

/// A file path or a "zoo:<name>[:<param>]" reference.
LoadedModel load_model(const std::string& ref);

Json rational_json(const Rational& r);
Json vector_json(const Vector& v);
Json matrix_json(const Matrix& m);

struct ReportOptions {
  bool all_pure = false;
  PolyhedralNorm norm = PolyhedralNorm::MaxAbs;
  /// Disturbance and sampling sections run only up to this dim_A unless forced.
  std::size_t disturbance_max_dim = 5;
  bool force = false;
  std::uint64_t seed = 0;
  int samples_per_effect = 20;
  bool timings = false;
};

/// Section builders; the report is their concatenation.
Json classification_json(const StateSpace& a);
Json effects_json(const StateSpace& a);
Json postulate_json(const StateSpace& a, const PostulateReport& report, bool all_pure);
Json disturbance_json(const StateSpace& a, const std::vector<Vector>& effects, PolyhedralNorm norm, bool witness);

/// Deterministic for fixed inputs unless timings are requested.
Json build_report(const LoadedModel& model, const ReportOptions& options);

/// Nonnegative weights λ over the state vertices with Σλ ≤ 1 and Σ λ_k v_k = x,
/// or nullopt when x lies outside Ω^{≤1}.
std::optional<Vector> subnormalized_weights(const StateSpace& a, const Vector& x);

struct VerificationResult {
  int checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Re-checks every witness and certificate in a report using exact linear
/// algebra only (no linear programming).
VerificationResult verify_report(const Json& report);

/// Process seed from GPTLAB_SEED (default 0). Throws ParseError on garbage.
std::uint64_t seed_from_environment();

}  // namespace gptlab
