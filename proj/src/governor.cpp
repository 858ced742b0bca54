#include "psrb/governor.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace psrb {

namespace {

const Behaviour kSnoozeObeying{BehaviourKind::snooze, Instruction::snooze};
const Behaviour kWaitObeying{BehaviourKind::acknowledge_wait, Instruction::acknowledge};
const Behaviour kRemind{BehaviourKind::remind, std::nullopt};
const Behaviour kFollowUp{BehaviourKind::follow_up, std::nullopt};
const Behaviour kRecord{BehaviourKind::record, std::nullopt};
const Behaviour kReport{BehaviourKind::report, std::nullopt};

// Sort key: obeys the pending instruction, obeys anything, autonomy, canonical rank.
auto preference_key(const BlackboardEntry& e, std::optional<Instruction> pending) {
  const bool obeys_pending = pending && e.behaviour.obeys == pending;
  return std::make_tuple(!obeys_pending, !e.behaviour.obeys_instruction(), -e.autonomy_utility.value_or(0.0),
                         canonical_rank(e.behaviour));
}

const BlackboardEntry& best_of(const std::vector<const BlackboardEntry*>& pool, std::optional<Instruction> pending) {
  return **std::min_element(pool.begin(), pool.end(), [&](const BlackboardEntry* a, const BlackboardEntry* b) {
    return preference_key(*a, pending) < preference_key(*b, pending);
  });
}

}  // namespace

std::vector<Behaviour> candidate_behaviours(const DecisionContext& ctx) {
  switch (ctx.phase) {
    case DecisionPhase::cycle_start: return {kRemind};
    case DecisionPhase::instruction:
      if (ctx.pending_instruction() == Instruction::snooze) return {kSnoozeObeying, kFollowUp, kReport};
      if (ctx.pending_instruction() == Instruction::acknowledge) return {kReport, kWaitObeying};
      return {kRemind};
    case DecisionPhase::snooze_window: return {kSnoozeObeying};
    case DecisionPhase::follow_up_due:
      if (ctx.f < kFollowUpsBeforeEscalation) return {kFollowUp};
      return {kFollowUp, kRecord, kReport};
    case DecisionPhase::inspecting: return {kWaitObeying};
    case DecisionPhase::breach: return {kFollowUp, kRecord, kReport};
  }
  return {kRemind};
}

const BlackboardEntry* Recommendation::entry_for(const Behaviour& behaviour) const {
  for (const auto& e : blackboard.entries()) {
    if (e.behaviour == behaviour) return &e;
  }
  return nullptr;
}

Opinion default_opinion(const RuleVerdict& verdict) {
  Opinion op;
  op.acceptable = verdict.permissible();
  op.score = op.acceptable ? 1.0 : 0.0;
  op.no_knowledge = true;
  return op;
}

Recommendation decide(const DecisionContext& ctx, const CharacterProfile& profile, const CaseBase& kb,
                      const DecideOptions& options) {
  static const RuleSet standard_rules = RuleSet::standard();
  const RuleSet& rules = options.rules ? *options.rules : standard_rules;

  Recommendation rec;
  const auto candidates = candidate_behaviours(ctx);
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const Behaviour& b = candidates[i];
    BlackboardEntry& entry = rec.blackboard.add(b);
    entry.rule_verdict = rules.check(b, ctx);
    entry.autonomy_utility = autonomy_utility(b, ctx);
    auto [w, spec] = wellbeing_utility(b, ctx);
    entry.wellbeing_utility = w;
    entry.wellbeing_distribution = spec;
    const auto features = make_features(ctx, b, *entry.autonomy_utility, w);
    entry.kb_opinion = kb.query(features).value_or(default_opinion(*entry.rule_verdict));

    Desirability d = evaluate(entry, profile, options.risk_mode);
    rec.blackboard.write_desirability(i, d.value, d.branch, d.risk, d.explanation);
    rec.outcomes.push_back(std::move(d));
  }

  for (const auto& e : rec.blackboard.entries()) {
    if (e.desirability == 1) rec.desirable.push_back(e.behaviour);
  }
  if (rec.desirable.empty()) {
    rec.fallback = true;
    std::vector<const BlackboardEntry*> pool;
    for (const auto& e : rec.blackboard.entries()) {
      if (e.rule_verdict->permissible()) pool.push_back(&e);
    }
    if (pool.empty()) {
      for (const auto& e : rec.blackboard.entries()) pool.push_back(&e);
    }
    rec.desirable.push_back(best_of(pool, ctx.pending_instruction()).behaviour);
  }
  std::sort(rec.desirable.begin(), rec.desirable.end(),
            [](const Behaviour& a, const Behaviour& b) { return canonical_rank(a) < canonical_rank(b); });
  return rec;
}

Behaviour arbitrate(const Recommendation& rec, std::optional<Instruction> pending_instruction) {
  if (rec.desirable.empty()) throw std::invalid_argument("cannot arbitrate an empty recommendation");
  std::vector<const BlackboardEntry*> pool;
  for (const Behaviour& b : rec.desirable) {
    const BlackboardEntry* e = rec.entry_for(b);
    if (!e) throw std::invalid_argument("recommended behaviour " + b.label() + " missing from blackboard");
    pool.push_back(e);
  }
  return best_of(pool, pending_instruction).behaviour;
}

}  // namespace psrb
