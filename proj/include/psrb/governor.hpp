#pragma once

// One decision step: enumerate candidates, fill the blackboard, evaluate each
// candidate and recommend the desirable set.

#include <optional>
#include <vector>

#include "psrb/case_kb.hpp"
#include "psrb/evaluator.hpp"
#include "psrb/model.hpp"
#include "psrb/rules.hpp"
#include "psrb/utility.hpp"

namespace psrb {

/// Behaviours the robot may perform in this context, in canonical order.
std::vector<Behaviour> candidate_behaviours(const DecisionContext& ctx);

inline constexpr int kFollowUpsBeforeEscalation = 3;

struct DecideOptions {
  RiskMode risk_mode = RiskMode::literal;
  const RuleSet* rules = nullptr;  // nullptr selects RuleSet::standard()
};

struct Recommendation {
  std::vector<Behaviour> desirable;     // canonical order, never empty
  bool fallback = false;                // no candidate was desirable
  Blackboard blackboard;                // one entry per candidate
  std::vector<Desirability> outcomes;   // parallel to the blackboard entries

  [[nodiscard]] const BlackboardEntry* entry_for(const Behaviour& behaviour) const;
};

/// Opinion used when the case base is empty: mirrors the rule verdict.
Opinion default_opinion(const RuleVerdict& verdict);

Recommendation decide(const DecisionContext& ctx, const CharacterProfile& profile, const CaseBase& kb,
                      const DecideOptions& options = {});

/// Picks the behaviour to execute: the obeyed pending instruction first, then
/// the highest autonomy utility, then canonical order.
Behaviour arbitrate(const Recommendation& rec, std::optional<Instruction> pending_instruction);

}  // namespace psrb
