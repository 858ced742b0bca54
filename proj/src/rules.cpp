#include "psrb/rules.hpp"

#include <algorithm>
#include <stdexcept>

namespace psrb {

RuleSet::RuleSet(std::vector<Rule> rules) : rules_(std::move(rules)) {
  std::sort(rules_.begin(), rules_.end(), [](const Rule& a, const Rule& b) { return a.id < b.id; });
  auto dup = std::adjacent_find(rules_.begin(), rules_.end(),
                                [](const Rule& a, const Rule& b) { return a.id == b.id; });
  if (dup != rules_.end()) throw std::invalid_argument("duplicate rule id " + std::to_string(dup->id));
}

RuleSet RuleSet::standard() {
  return RuleSet({
      Rule{kRuleObeyInstructions, "Obey the resident's pending instruction.", disobeys_pending_instruction},
      Rule{kRuleReportUntakenDose, "Escalate an acknowledged dose that was not taken.",
           leaves_untaken_dose_unreported},
  });
}

RuleVerdict RuleSet::check(const Behaviour& behaviour, const DecisionContext& ctx) const {
  RuleVerdict verdict;
  for (const Rule& rule : rules_) {
    if (rule.violated(behaviour, ctx)) verdict.violated_rule_ids.push_back(rule.id);
  }
  return verdict;
}

bool disobeys_pending_instruction(const Behaviour& behaviour, const DecisionContext& ctx) {
  const auto pending = ctx.pending_instruction();
  return pending && behaviour.obeys != pending;
}

bool leaves_untaken_dose_unreported(const Behaviour& behaviour, const DecisionContext& ctx) {
  if (!ctx.acknowledged_without_taking) return false;
  return behaviour.kind != BehaviourKind::report && behaviour.kind != BehaviourKind::follow_up;
}

RuleVerdict check(const Behaviour& behaviour, const DecisionContext& ctx) {
  static const RuleSet rules = RuleSet::standard();
  return rules.check(behaviour, ctx);
}

}  // namespace psrb
