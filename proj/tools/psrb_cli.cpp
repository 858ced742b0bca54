// psrb: run scenarios, the experiment grid, calibration, case-base traces and
// config validation.
//
// Exit codes: 0 success, 1 validation error, 2 mismatch, 3 runtime failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "psrb/case_kb.hpp"
#include "psrb/config_io.hpp"
#include "psrb/episode_io.hpp"
#include "psrb/experiment.hpp"
#include "psrb/governor.hpp"
#include "psrb/sim.hpp"

namespace fs = std::filesystem;
using namespace psrb;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitRuntime = 3;

struct ValidationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string kb = std::string(PSRB_DEFAULT_DATA_DIR) + "/seed_kb.jsonl";
  std::string profiles = std::string(PSRB_DEFAULT_DATA_DIR) + "/profiles.json";
  std::string out = "psrb_out";
  std::string risk_mode = "literal";
  bool seed_irrelevant = false;

  void attach(CLI::App* sub, bool with_profiles, bool with_out) {
    sub->add_option("--kb", kb, "Case-base JSONL file")->capture_default_str();
    if (with_profiles) sub->add_option("--profiles", profiles, "Character profiles JSON")->capture_default_str();
    if (with_out) sub->add_option("--out", out, "Output directory")->capture_default_str();
    sub->add_option("--risk-mode", risk_mode, "Risk semantics")
        ->check(CLI::IsMember({"literal", "harm"}))
        ->capture_default_str();
    sub->add_flag("--seed-irrelevant", seed_irrelevant, "Reserved; the simulation has no randomness");
  }

  [[nodiscard]] DecideOptions decide_options() const { return DecideOptions{.risk_mode = parse_risk_mode(risk_mode)}; }
};

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

fs::path prepare_out(const std::string& dir) {
  fs::path p(dir);
  fs::create_directories(p);
  return p;
}

int cmd_run(const Common& common, const std::string& scenario_path, const std::string& profile_name) {
  const Scenario scenario = load_scenario(scenario_path);
  const auto profiles = load_profiles(common.profiles);
  const CharacterProfile& profile = find_profile(profiles, profile_name);
  const CaseBase kb = load_case_base(fs::path(common.kb));

  const EpisodeLog log = run_episode(scenario, profile, kb, common.decide_options());
  const int id = behaviour_id(log);

  const fs::path out = prepare_out(common.out);
  const std::string stem = (scenario.name.empty() ? std::string("scenario") : scenario.name) + "_" + profile.name;
  std::ostringstream jsonl, csv, timeline;
  write_episode_jsonl(log, id, jsonl);
  write_utility_csv(log, csv);
  write_timeline(log, timeline);
  write_file(out / (stem + ".jsonl"), jsonl.str());
  write_file(out / (stem + "_utilities.csv"), csv.str());
  write_file(out / (stem + "_timeline.txt"), timeline.str());

  std::cout << timeline.str() << "behaviour id: " << id << '\n';
  return kExitOk;
}

int cmd_matrix(const Common& common) {
  const auto profiles = load_profiles(common.profiles);
  const CaseBase kb = load_case_base(fs::path(common.kb));
  const MatrixResult result = run_matrix(kb, profiles, reference_table(), common.decide_options());

  const std::string table = format_matrix(result);
  const std::string diff = format_diff(result);
  const fs::path out = prepare_out(common.out);
  write_file(out / "matrix.tsv", table);
  write_file(out / "diff.txt", diff);

  std::cout << table << "matched " << result.matched() << "/" << result.cells.size() << '\n';
  if (!result.all_match()) {
    std::cout << diff;
    return kExitMismatch;
  }
  return kExitOk;
}

TargetTable load_target(const std::string& path) {
  const auto doc = nlohmann::json::parse(read_text_file(path, "target file"), nullptr, false);
  if (doc.is_discarded() || !doc.is_object() || doc.value("format_version", 0) != kConfigFormatVersion ||
      !doc.contains("table") || !doc["table"].is_object()) {
    throw ConfigError("target file: expected {\"format_version\": 1, \"table\": {profile: [ids...]}}");
  }
  TargetTable table;
  for (const auto& [name, row] : doc["table"].items()) table[name] = row.get<std::vector<int>>();
  return table;
}

int cmd_calibrate(const Common& common, const std::string& target_path, bool no_target, std::size_t cap) {
  const CaseBase kb = load_case_base(fs::path(common.kb));
  const TargetTable target = target_path.empty() ? reference_table() : load_target(target_path);
  const fs::path out = prepare_out(common.out);

  std::ostringstream search_log;
  CalibrationOptions options;
  options.solution_cap = cap;
  options.decide = common.decide_options();
  options.log = [&](const std::string& line) { search_log << line << '\n'; };

  std::vector<CharacterProfile> chosen;
  bool all_solved = true;
  for (const auto& constraint : default_constraints()) {
    std::optional<std::vector<int>> row;
    if (!no_target) {
      auto it = target.find(constraint.name);
      if (it == target.end()) throw ConfigError("target table has no row for " + constraint.name);
      row = it->second;
    }
    const CalibrationResult r = calibrate_profile(kb, constraint, row, options);
    if (r.solved()) {
      chosen.push_back(r.solutions.front().profile);
      std::cout << r.name << ": " << r.solutions.size() << " solution(s) in " << r.evaluated << " evaluated; using c_w="
                << chosen.back().c_w << " c_au=" << chosen.back().c_au << " c_rp=" << chosen.back().c_rp << '\n';
      for (const auto& s : r.solutions) {
        search_log << r.name << " solution c_w=" << s.profile.c_w << " c_au=" << s.profile.c_au
                   << " c_rp=" << s.profile.c_rp << '\n';
      }
    } else {
      all_solved = false;
      std::cout << r.name << ": no configuration in " << r.evaluated << " evaluated";
      if (r.nearest_miss) {
        const auto& m = *r.nearest_miss;
        std::cout << "; nearest miss c_w=" << m.profile.c_w << " c_au=" << m.profile.c_au << " c_rp=" << m.profile.c_rp
                  << " matched " << m.matched << "/" << experiment_cases().size() << " row=";
        for (std::size_t i = 0; i < m.row.size(); ++i) std::cout << (i ? "," : "") << m.row[i];
      }
      std::cout << '\n';
    }
  }
  write_file(out / "calibration_log.txt", search_log.str());
  if (!all_solved) return kExitMismatch;
  write_file(out / "profiles.json", dump_profiles(chosen));
  std::cout << "wrote " << (out / "profiles.json").string() << '\n';
  return kExitOk;
}

int cmd_kb_trace(const Common& common, const std::string& query_path) {
  const TraceQuery q = load_trace_query(query_path);
  const CaseBase kb = load_case_base(fs::path(common.kb));
  const double au = autonomy_utility(q.behaviour, q.context);
  const double w = wellbeing_utility(q.behaviour, q.context).first;
  const FeatureVector features = make_features(q.context, q.behaviour, au, w);

  std::cout << "query: " << q.behaviour.label() << " Au=" << au << " W=" << w << '\n';
  if (kb.empty()) {
    std::cout << "no knowledge: case base is empty; the opinion follows the rule verdict\n";
    return kExitOk;
  }
  const auto neighbours = kb.retrieve(features);
  const Opinion op = aggregate_opinion(neighbours);
  char line[256];
  for (const auto& t : op.trace) {
    std::snprintf(line, sizeof line, "  %-40s distance=%.6f weight=%.6f\n", t.case_id.c_str(), t.distance, t.weight);
    std::cout << line;
  }
  std::snprintf(line, sizeof line, "score=%.6f acceptable=%s intentions=%s\n", op.score,
                op.acceptable ? "yes" : "no", join_values(op.intentions).c_str());
  std::cout << line;
  return kExitOk;
}

int cmd_validate(const Common& common, const std::string& scenario_path, const std::string& query_path,
                 bool check_profiles, bool check_kb) {
  if (check_profiles) {
    const auto profiles = load_profiles(common.profiles);
    std::cout << "profiles ok (" << profiles.size() << ")\n";
  }
  if (check_kb) {
    const CaseBase kb = load_case_base(fs::path(common.kb));
    std::cout << "case base ok (" << kb.size() << " cases)\n";
  }
  if (!scenario_path.empty()) {
    load_scenario(scenario_path);
    std::cout << "scenario ok\n";
  }
  if (!query_path.empty()) {
    load_trace_query(query_path);
    std::cout << "query ok\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pro-social rule-bending governor for a medication-reminder robot"};
  app.require_subcommand(1);

  Common common;
  std::string scenario_path, profile_name, query_path, target_path;
  bool no_target = false;
  std::size_t cap = 10;
  bool check_profiles = false, check_kb = false;

  auto* run = app.add_subcommand("run", "Run one scenario with one profile");
  common.attach(run, true, true);
  run->add_option("--scenario", scenario_path, "Scenario JSON")->required();
  run->add_option("--profile", profile_name, "Profile name")->required();

  auto* matrix = app.add_subcommand("matrix", "Run all six cases for every profile and diff the grid");
  common.attach(matrix, true, true);

  auto* calibrate = app.add_subcommand("calibrate", "Grid-search character profiles");
  common.attach(calibrate, false, true);
  calibrate->add_option("--target", target_path, "Target table JSON (defaults to the reference grid)");
  calibrate->add_flag("--no-target", no_target, "Only satisfy the qualitative constraints");
  calibrate->add_option("--cap", cap, "Maximum solutions reported per profile")->check(CLI::PositiveNumber);

  auto* trace = app.add_subcommand("kb-trace", "Show the nearest cases for one query");
  common.attach(trace, false, false);
  trace->add_option("--query", query_path, "Query JSON")->required();

  auto* validate = app.add_subcommand("validate", "Validate configuration files");
  common.attach(validate, true, false);
  validate->add_option("--scenario", scenario_path, "Scenario JSON");
  validate->add_option("--query", query_path, "Query JSON");
  validate->add_flag("--check-profiles", check_profiles, "Validate the profiles file");
  validate->add_flag("--check-kb", check_kb, "Validate the case base");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (common.seed_irrelevant) {
      throw ValidationFailure("--seed-irrelevant is reserved: the simulation is deterministic and takes no seed");
    }
    if (run->parsed()) return cmd_run(common, scenario_path, profile_name);
    if (matrix->parsed()) return cmd_matrix(common);
    if (calibrate->parsed()) return cmd_calibrate(common, target_path, no_target, cap);
    if (trace->parsed()) return cmd_kb_trace(common, query_path);
    if (validate->parsed()) return cmd_validate(common, scenario_path, query_path, check_profiles, check_kb);
  } catch (const ValidationFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const CaseBaseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "runtime failure: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitRuntime;
}
