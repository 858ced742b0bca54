#include "psrb/experiment.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace psrb {

const std::vector<ExperimentCase>& experiment_cases() {
  static const std::vector<ExperimentCase> cases = {
      {"case1", 1, 0}, {"case2", 2, 0}, {"case3", 3, 0}, {"case4", 1, 2}, {"case5", 2, 2}, {"case6", 3, 2},
  };
  return cases;
}

Scenario scenario_for(const ExperimentCase& c) {
  Scenario s;
  s.name = c.name;
  s.epsilon_m = c.epsilon_m;
  s.d = c.d;
  return s;
}

const TargetTable& reference_table() {
  // Expected behaviour class per character, in case order.
  static const TargetTable table = {
      {"M_a", {1, 4, 6, 1, 6, 6}},
      {"M_ar", {2, 5, 6, 7, 6, 6}},
      {"M_arw", {2, 4, 6, 1, 6, 6}},
      {"M_wr", {3, 6, 6, 6, 6, 6}},
  };
  return table;
}

std::size_t MatrixResult::matched() const {
  std::size_t n = 0;
  for (const auto& c : cells) n += c.matches() ? 1 : 0;
  return n;
}

std::vector<int> MatrixResult::row(const std::string& profile) const {
  std::vector<int> out;
  for (const auto& c : cells) {
    if (c.profile == profile) out.push_back(c.actual);
  }
  return out;
}

MatrixResult run_matrix(const CaseBase& kb, const std::vector<CharacterProfile>& profiles, const TargetTable& target,
                        const DecideOptions& options) {
  MatrixResult result;
  BehaviourCatalog catalog;
  const auto& cases = experiment_cases();
  for (const auto& profile : profiles) {
    const auto expected_row = target.find(profile.name);
    for (std::size_t i = 0; i < cases.size(); ++i) {
      MatrixCell cell;
      cell.case_name = cases[i].name;
      cell.profile = profile.name;
      try {
        const EpisodeLog log = run_episode(scenario_for(cases[i]), profile, kb, options);
        cell.actual = catalog.classify(log);
        cell.signature = behaviour_signature(log);
      } catch (const std::exception& e) {
        throw std::runtime_error("cell " + cases[i].name + "/" + profile.name + " failed: " + e.what());
      }
      if (expected_row != target.end() && i < expected_row->second.size()) cell.expected = expected_row->second[i];
      result.cells.push_back(std::move(cell));
    }
  }
  return result;
}

std::string format_matrix(const MatrixResult& result) {
  std::ostringstream out;
  out << "profile";
  for (const auto& c : experiment_cases()) out << '\t' << c.name;
  out << '\n';
  std::string current;
  for (const auto& cell : result.cells) {
    if (cell.profile != current) {
      if (!current.empty()) out << '\n';
      current = cell.profile;
      out << current;
    }
    out << '\t' << cell.actual;
  }
  if (!current.empty()) out << '\n';
  return out.str();
}

std::string format_diff(const MatrixResult& result) {
  std::ostringstream out;
  for (const auto& cell : result.cells) {
    if (cell.matches()) continue;
    out << cell.case_name << '/' << cell.profile << ": expected ";
    if (cell.expected) {
      out << *cell.expected;
    } else {
      out << "(none)";
    }
    out << ", got " << cell.actual << "  [" << cell.signature << "]\n";
  }
  return out.str();
}

const std::vector<ProfileConstraint>& default_constraints() {
  static const std::vector<ProfileConstraint> constraints = {
      {"M_a", {0, 3}, {7, 10}, {0, 1}, {ValueTag::autonomy}},
      {"M_ar", {0, 3}, {7, 10}, {7, 10}, {ValueTag::autonomy}},
      {"M_arw", {3, 7}, {3, 7}, {3, 7}, {ValueTag::autonomy, ValueTag::wellbeing}},
      {"M_wr", {7, 10}, {0, 3}, {7, 10}, {ValueTag::wellbeing}},
  };
  return constraints;
}

namespace {

std::string describe(const CalibrationCandidate& c) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "c_w=%g c_au=%g c_rp=%g matched=%d row=", c.profile.c_w, c.profile.c_au,
                c.profile.c_rp, c.matched);
  std::string out = buf;
  for (std::size_t i = 0; i < c.row.size(); ++i) out += (i ? "," : "") + std::to_string(c.row[i]);
  return out;
}

}  // namespace

CalibrationResult calibrate_profile(const CaseBase& kb, const ProfileConstraint& constraint,
                                    const std::optional<std::vector<int>>& target,
                                    const CalibrationOptions& options) {
  CalibrationResult result;
  result.name = constraint.name;
  const auto& cases = experiment_cases();

  for (int w = constraint.c_w.lo; w <= constraint.c_w.hi; ++w) {
    for (int au = constraint.c_au.lo; au <= constraint.c_au.hi; ++au) {
      for (int rp = constraint.c_rp.lo; rp <= constraint.c_rp.hi; ++rp) {
        CalibrationCandidate cand;
        cand.profile = CharacterProfile{constraint.name, double(w), double(au), double(rp), constraint.precedence};
        if (!target) {
          result.solutions.push_back(std::move(cand));
          return result;
        }
        BehaviourCatalog catalog;
        for (std::size_t i = 0; i < cases.size(); ++i) {
          const int id = catalog.classify(run_episode(scenario_for(cases[i]), cand.profile, kb, options.decide));
          cand.row.push_back(id);
          if (i < target->size() && (*target)[i] == id) ++cand.matched;
        }
        ++result.evaluated;
        const bool hit = cand.matched == static_cast<int>(target->size()) && target->size() == cases.size();
        if (options.log) options.log(constraint.name + " " + describe(cand) + (hit ? " MATCH" : ""));
        if (hit) {
          result.solutions.push_back(cand);
          if (result.solutions.size() >= options.solution_cap) return result;
        } else if (!result.nearest_miss || cand.matched > result.nearest_miss->matched) {
          result.nearest_miss = cand;
        }
      }
    }
  }
  return result;
}

}  // namespace psrb
