#include "gptlab/report.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

using namespace gptlab;

namespace {

constexpr int kExitObstruction = 1;
constexpr int kExitError = 2;

void print_json(const Json& j) {
  std::cout << j.dump(2) << '\n';
}

std::string vector_text(const Json& entries) {
  std::string out = "(";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ", ";
    out += entries[i].get<std::string>();
  }
  return out + ")";
}

std::string face_string(const Json& indices) {
  std::string out = "{";
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(indices[i].get<std::size_t>());
  }
  return out + "}";
}

int cmd_classify(const std::string& ref, bool json) {
  LoadedModel m = load_model(ref);
  if (json) {
    print_json({{"model", m.identity}, {"classification", classification_json(m.space)}});
  } else {
    std::cout << to_string(classify(m.space)) << '\n';
  }
  return 0;
}

int cmd_effects(const std::string& ref, bool json) {
  LoadedModel m = load_model(ref);
  Json table = effects_json(m.space);
  if (json) {
    print_json({{"model", m.identity}, {"pure_effects", table}});
    return 0;
  }
  std::cout << table.size() << " pure effects\n";
  for (const auto& row : table) {
    std::cout << row["index"].get<std::size_t>() << "  " << vector_text((row["functional"]))
              << "  certain " << face_string(row["certain_face"]) << " dim " << row["dim_certain"].get<int>()
              << "  impossible " << face_string(row["impossible_face"]) << " dim "
              << row["dim_impossible"].get<int>() << '\n';
  }
  return 0;
}

int cmd_postulate(const std::string& ref, bool all_pure, bool json) {
  LoadedModel m = load_model(ref);
  PostulateReport report = check_postulate(m.space, all_pure);
  const int code = report.verdict == Verdict::AllFeasible ? 0 : kExitObstruction;
  if (json) {
    print_json({{"model", m.identity}, {"postulate", postulate_json(m.space, report, all_pure)}});
    return code;
  }
  for (const auto& e : report.entries) {
    std::cout << to_string(e.effect) << "  ";
    if (std::holds_alternative<TransformationWitness>(e.outcome)) {
      std::cout << "witness\n";
    } else {
      const auto& cert = std::get<ObstructionCertificate>(e.outcome);
      std::cout << obstruction_name(cert);
      if (const auto* dm = std::get_if<obstruction::DimensionMismatch>(&cert)) {
        std::cout << " (" << dm->dim_certain << "," << dm->dim_impossible << "," << dm->dim_omega << ")";
      } else if (const auto* sm = std::get_if<obstruction::ShapeMismatch>(&cert)) {
        std::cout << " at " << to_string(sm->witness_point);
      }
      std::cout << '\n';
    }
  }
  std::cout << to_string(report.verdict) << '\n';
  return code;
}

struct DisturbanceArgs {
  std::string norm = "linf";
  std::optional<std::size_t> effect_index;
  bool all = false;
  bool witness = false;
  bool force = false;
  bool json = false;
};

int cmd_disturbance(const std::string& ref, const DisturbanceArgs& args) {
  LoadedModel m = load_model(ref);
  const StateSpace& a = m.space;
  const PolyhedralNorm norm = parse_norm(args.norm);
  if (a.dim() > ReportOptions{}.disturbance_max_dim && !args.force) {
    throw Error(ErrorKind::ParseError, "dim_A " + std::to_string(a.dim()) +
                                           " exceeds the disturbance limit of 5; rerun with --force");
  }
  std::vector<Vector> effects;
  if (args.all) {
    for (const auto& face : minus_faces(a.omega())) effects.push_back(minus_face_pure_effect(a, face));
  } else {
    const auto& pure = a.pure_effects();
    if (*args.effect_index >= pure.size()) {
      throw Error(ErrorKind::ParseError, "--effect-index: " + std::to_string(*args.effect_index) +
                                             " out of range (model has " + std::to_string(pure.size()) +
                                             " pure effects)");
    }
    effects.push_back(pure[*args.effect_index]);
  }
  Json table = disturbance_json(a, effects, norm, args.witness);
  if (args.json) {
    print_json({{"model", m.identity}, {"disturbance", table}});
    return 0;
  }
  for (const auto& row : table) {
    std::cout << vector_text((row["effect"])) << "  " << row["norm"].get<std::string>()
              << "  epsilon " << row["epsilon"].get<std::string>() << " (~" << row["epsilon_decimal"].get<std::string>()
              << ")\n";
    if (args.witness) {
      for (const auto& r : row["minimizer"]) std::cout << "    " << vector_text((r)) << '\n';
    }
  }
  return 0;
}

int cmd_report(const std::string& ref, const std::string& out, const ReportOptions& options) {
  LoadedModel m = load_model(ref);
  Json report = build_report(m, options);
  const std::string text = report.dump(2) + "\n";
  if (out.empty() || out == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream file(out, std::ios::binary);
  if (!file || !(file << text) || !file.flush()) {
    throw Error(ErrorKind::ParseError, "--json: cannot write '" + out + "'");
  }
  return 0;
}

int cmd_verify(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "report: cannot read file '" + path + "'");
  Json report;
  try {
    report = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("report: malformed JSON: ") + e.what());
  }
  VerificationResult result = verify_report(report);
  for (const auto& f : result.failures) std::cerr << "FAIL " << f << '\n';
  std::cout << (result.ok() ? "OK" : "FAILED") << ": " << result.checked << " checks, " << result.failures.size()
            << " failures\n";
  return result.ok() ? 0 : kExitError;
}

int cmd_zoo(const std::string& ref) {
  if (ref.empty()) {
    for (const auto& entry : zoo_catalog()) {
      std::cout << entry.name;
      if (!entry.parameter.empty()) {
        std::cout << ":<" << entry.parameter << "> (" << entry.min_param << ".." << entry.max_param << ")";
      }
      std::cout << "  " << entry.description << '\n';
    }
    return 0;
  }
  LoadedModel m = load_model(ref.starts_with("zoo:") ? ref : "zoo:" + ref);
  print_json(model_to_json(m.space, m.identity, m.description));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of polytopic state spaces"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  std::string model;
  bool json = false;

  auto* classify_cmd = app.add_subcommand("classify", "Classical or DiscreteNonClassical");
  classify_cmd->add_option("model", model, "model file or zoo:<name>[:<param>]")->required();
  classify_cmd->add_flag("--json", json);

  auto* effects_cmd = app.add_subcommand("effects", "Pure effects with their certain and impossible faces");
  effects_cmd->add_option("model", model)->required();
  effects_cmd->add_flag("--json", json);

  bool all_pure = false;
  auto* postulate_cmd = app.add_subcommand("postulate", "Search a face-fixing transformation for each effect");
  postulate_cmd->add_option("model", model)->required();
  postulate_cmd->add_flag("--all-pure", all_pure, "check every pure effect, not only minus-face effects");
  postulate_cmd->add_flag("--json", json);

  DisturbanceArgs dist;
  std::size_t effect_index = 0;
  auto* disturbance_cmd = app.add_subcommand("disturbance", "Minimal disturbance epsilon");
  disturbance_cmd->add_option("model", model)->required();
  disturbance_cmd->add_option("--norm", dist.norm, "linf or l1")->check(CLI::IsMember({"linf", "l1"}));
  auto* index_opt = disturbance_cmd->add_option("--effect-index", effect_index, "row of the effects table");
  auto* all_opt = disturbance_cmd->add_flag("--all", dist.all, "every minus-face effect");
  index_opt->excludes(all_opt);
  disturbance_cmd->add_flag("--witness", dist.witness, "print the minimizing transformation");
  disturbance_cmd->add_flag("--force", dist.force, "lift the dimension limit");
  disturbance_cmd->add_flag("--json", dist.json);

  std::string out;
  std::string report_norm = "linf";
  ReportOptions options;
  auto* report_cmd = app.add_subcommand("report", "Full analysis report as JSON");
  report_cmd->add_option("model", model)->required();
  report_cmd->add_option("--json", out, "output path (default stdout)");
  report_cmd->add_option("--norm", report_norm)->check(CLI::IsMember({"linf", "l1"}));
  report_cmd->add_flag("--all-pure", options.all_pure);
  report_cmd->add_flag("--force", options.force, "run disturbance sections above dim_A 5");
  report_cmd->add_flag("--timings", options.timings, "include wall-clock stage timings (not reproducible)");

  std::string report_path;
  auto* verify_cmd = app.add_subcommand("verify-report", "Re-validate a report with exact arithmetic");
  verify_cmd->add_option("report", report_path)->required();

  std::string zoo_ref;
  auto* zoo_cmd = app.add_subcommand("zoo", "List the model zoo or print one model");
  zoo_cmd->add_option("model", zoo_ref, "e.g. polygon:5");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (*classify_cmd) return cmd_classify(model, json);
    if (*effects_cmd) return cmd_effects(model, json);
    if (*postulate_cmd) return cmd_postulate(model, all_pure, json);
    if (*disturbance_cmd) {
      if (!dist.all && index_opt->count() == 0) {
        std::cerr << "error: disturbance needs --effect-index <k> or --all\n";
        return kExitError;
      }
      if (index_opt->count()) dist.effect_index = effect_index;
      return cmd_disturbance(model, dist);
    }
    if (*report_cmd) {
      options.norm = parse_norm(report_norm);
      options.seed = seed_from_environment();
      return cmd_report(model, out, options);
    }
    if (*verify_cmd) return cmd_verify(report_path);
    if (*zoo_cmd) return cmd_zoo(zoo_ref);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
