#pragma once

#include <functional>
#include <string>
#include <vector>

#include "psrb/model.hpp"

namespace psrb {

struct Rule {
  int id = 0;
  std::string description;
  std::function<bool(const Behaviour&, const DecisionContext&)> violated;
};

class RuleSet {
 public:
  RuleSet() = default;
  explicit RuleSet(std::vector<Rule> rules);

  /// The two care rules the robot ships with (ids 1 and 2).
  static RuleSet standard();

  [[nodiscard]] RuleVerdict check(const Behaviour& behaviour, const DecisionContext& ctx) const;
  [[nodiscard]] const std::vector<Rule>& rules() const noexcept { return rules_; }

 private:
  std::vector<Rule> rules_;  // sorted by id
};

inline constexpr int kRuleObeyInstructions = 1;
inline constexpr int kRuleReportUntakenDose = 2;

/// Rule 1: a pending resident instruction must be obeyed.
bool disobeys_pending_instruction(const Behaviour& behaviour, const DecisionContext& ctx);

/// Rule 2: after an ACKNOWLEDGE without taking the dose, the robot may not
/// close or park the incident without reporting it. A follow-up keeps the
/// incident open and does not count.
bool leaves_untaken_dose_unreported(const Behaviour& behaviour, const DecisionContext& ctx);

RuleVerdict check(const Behaviour& behaviour, const DecisionContext& ctx);

}  // namespace psrb
