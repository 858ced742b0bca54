#pragma once

// The six-case, four-character experiment grid: running it, diffing it against
// the expected behaviour classes, and calibrating character profiles.

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "psrb/case_kb.hpp"
#include "psrb/governor.hpp"
#include "psrb/sim.hpp"

namespace psrb {

struct ExperimentCase {
  std::string name;
  int epsilon_m = 1;
  int d = 0;
};

/// The six (epsilon_m, d) cases, in table order.
const std::vector<ExperimentCase>& experiment_cases();

Scenario scenario_for(const ExperimentCase& c);

/// Expected behaviour class per case, keyed by profile name.
using TargetTable = std::map<std::string, std::vector<int>>;

/// Reference grid keyed by profile name: M_a, M_ar, M_arw, M_wr.
const TargetTable& reference_table();


struct MatrixCell {
  std::string case_name;
  std::string profile;
  int actual = 0;
  std::optional<int> expected;
  std::string signature;

  [[nodiscard]] bool matches() const { return expected && *expected == actual; }
};

struct MatrixResult {
  std::vector<MatrixCell> cells;  // profile-major, then table case order

  [[nodiscard]] std::size_t matched() const;
  [[nodiscard]] bool all_match() const { return !cells.empty() && matched() == cells.size(); }
  [[nodiscard]] std::vector<int> row(const std::string& profile) const;
};

MatrixResult run_matrix(const CaseBase& kb, const std::vector<CharacterProfile>& profiles,
                        const TargetTable& target = reference_table(), const DecideOptions& options = {});

/// Grid of behaviour ids, one row per profile.
std::string format_matrix(const MatrixResult& result);

/// Lines describing each mismatching cell; empty when everything matches.
std::string format_diff(const MatrixResult& result);

struct IntRange {
  int lo = 0;
  int hi = 10;
  [[nodiscard]] bool contains(int v) const noexcept { return v >= lo && v <= hi; }
};

/// Qualitative bounds on a character's traits.
struct ProfileConstraint {
  std::string name;
  IntRange c_w;
  IntRange c_au;
  IntRange c_rp;
  ValueSet precedence;
};

const std::vector<ProfileConstraint>& default_constraints();

struct CalibrationCandidate {
  CharacterProfile profile;
  std::vector<int> row;
  int matched = 0;
};

struct CalibrationResult {
  std::string name;
  int evaluated = 0;
  std::vector<CalibrationCandidate> solutions;  // up to the cap, grid order
  std::optional<CalibrationCandidate> nearest_miss;

  [[nodiscard]] bool solved() const noexcept { return !solutions.empty(); }
};

struct CalibrationOptions {
  std::size_t solution_cap = 10;
  DecideOptions decide;
  std::function<void(const std::string&)> log;  // optional search log sink
};

/// Grid search over integer traits 0..10 inside the constraint box. Without a
/// target row the first feasible configuration is returned unevaluated.
CalibrationResult calibrate_profile(const CaseBase& kb, const ProfileConstraint& constraint,
                                    const std::optional<std::vector<int>>& target,
                                    const CalibrationOptions& options = {});

}  // namespace psrb
