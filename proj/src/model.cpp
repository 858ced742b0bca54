#include "psrb/model.hpp"

#include <algorithm>
#include <cmath>

namespace psrb {

namespace {

template <typename Enum, std::size_t N>
Enum parse_enum(std::string_view text, const std::array<Enum, N>& all, std::string_view what) {
  for (Enum e : all) {
    if (to_string(e) == text) return e;
  }
  throw std::invalid_argument("unknown " + std::string(what) + " '" + std::string(text) + "'");
}

bool in_scale(double value) { return std::isfinite(value) && value >= 0.0 && value <= 10.0; }

}  // namespace

std::string_view to_string(BehaviourKind kind) {
  switch (kind) {
    case BehaviourKind::remind: return "remind";
    case BehaviourKind::snooze: return "snooze";
    case BehaviourKind::follow_up: return "follow_up";
    case BehaviourKind::record: return "record";
    case BehaviourKind::report: return "report";
    case BehaviourKind::acknowledge_wait: return "acknowledge_wait";
  }
  return "?";
}

std::string_view to_string(Instruction instruction) {
  return instruction == Instruction::snooze ? "SNOOZE" : "ACKNOWLEDGE";
}

std::string_view to_string(ReminderState state) {
  switch (state) {
    case ReminderState::issued: return "issued";
    case ReminderState::snoozed: return "snoozed";
    case ReminderState::ignored: return "ignored";
    case ReminderState::acknowledged: return "acknowledged";
  }
  return "?";
}

std::string_view to_string(ValueTag value) {
  return value == ValueTag::wellbeing ? "wellbeing" : "autonomy";
}

std::string_view to_string(DecisionPhase phase) {
  switch (phase) {
    case DecisionPhase::cycle_start: return "cycle_start";
    case DecisionPhase::instruction: return "instruction";
    case DecisionPhase::snooze_window: return "snooze_window";
    case DecisionPhase::follow_up_due: return "follow_up_due";
    case DecisionPhase::inspecting: return "inspecting";
    case DecisionPhase::breach: return "breach";
  }
  return "?";
}

std::string_view to_string(Branch branch) {
  switch (branch) {
    case Branch::compliant_supported: return "compliant_supported";
    case Branch::noncompliant_unsupported: return "noncompliant_unsupported";
    case Branch::bend_evaluated: return "bend_evaluated";
    case Branch::suppress_evaluated: return "suppress_evaluated";
  }
  return "?";
}

BehaviourKind parse_behaviour_kind(std::string_view text) {
  return parse_enum(text, kAllBehaviourKinds, "behaviour");
}

Instruction parse_instruction(std::string_view text) {
  constexpr std::array<Instruction, 2> all = {Instruction::snooze, Instruction::acknowledge};
  return parse_enum(text, all, "instruction");
}

ReminderState parse_reminder_state(std::string_view text) {
  return parse_enum(text, kAllReminderStates, "reminder state");
}

ValueTag parse_value_tag(std::string_view text) { return parse_enum(text, kAllValues, "value"); }

DecisionPhase parse_decision_phase(std::string_view text) {
  constexpr std::array<DecisionPhase, 6> all = {
      DecisionPhase::cycle_start,   DecisionPhase::instruction, DecisionPhase::snooze_window,
      DecisionPhase::follow_up_due, DecisionPhase::inspecting,  DecisionPhase::breach};
  return parse_enum(text, all, "decision phase");
}

std::string join_values(const ValueSet& values) {
  if (values.empty()) return "none";
  std::string out;
  for (ValueTag v : kAllValues) {
    if (!values.contains(v)) continue;
    if (!out.empty()) out += ", ";
    out += to_string(v);
  }
  return out;
}

std::string Behaviour::label() const {
  std::string out(to_string(kind));
  if (obeys) {
    out += "(obeys ";
    out += to_string(*obeys);
    out += ")";
  }
  return out;
}

int canonical_rank(const Behaviour& behaviour) noexcept {
  return static_cast<int>(behaviour.kind) * 3 + (behaviour.obeys ? 1 + static_cast<int>(*behaviour.obeys) : 0);
}

ValidationResult validate_profile(const CharacterProfile& profile) {
  ValidationResult result;
  if (!in_scale(profile.c_w)) result.errors.emplace_back("c_w out of [0,10]");
  if (!in_scale(profile.c_au)) result.errors.emplace_back("c_au out of [0,10]");
  if (!in_scale(profile.c_rp)) result.errors.emplace_back("c_rp out of [0,10]");
  return result;
}

ValidationResult validate_context(const DecisionContext& ctx, int horizon) {
  ValidationResult result;
  if (ctx.epsilon_m < 1 || ctx.epsilon_m > 3) result.errors.emplace_back("epsilon_m out of {1,2,3}");
  if (ctx.d < 0) result.errors.emplace_back("d must be >= 0");
  if (ctx.f < 0) result.errors.emplace_back("f must be >= 0");
  if (ctx.step < 0 || ctx.step > horizon) result.errors.emplace_back("step out of [0,horizon]");
  if (ctx.acknowledged_without_taking && ctx.last_instruction != Instruction::acknowledge) {
    result.errors.emplace_back("acknowledged_without_taking requires last_instruction = ACKNOWLEDGE");
  }
  if (ctx.instruction_pending && !ctx.last_instruction) {
    result.errors.emplace_back("instruction_pending requires last_instruction");
  }
  return result;
}

BlackboardEntry& Blackboard::add(const Behaviour& behaviour) {
  auto duplicate = std::find_if(entries_.begin(), entries_.end(),
                                [&](const BlackboardEntry& e) { return e.behaviour == behaviour; });
  if (duplicate != entries_.end()) {
    throw std::logic_error("blackboard already holds an entry for " + behaviour.label());
  }
  BlackboardEntry& entry = entries_.emplace_back();
  entry.behaviour = behaviour;
  return entry;
}

BlackboardEntry& Blackboard::mutable_entry(std::size_t index) {
  BlackboardEntry& entry = entries_.at(index);
  if (entry.desirability) {
    throw std::logic_error("blackboard entry for " + entry.behaviour.label() + " is sealed");
  }
  return entry;
}

void Blackboard::write_desirability(std::size_t index, int value, Branch branch, double risk,
                                    std::string explanation) {
  BlackboardEntry& entry = mutable_entry(index);
  if (value != 0 && value != 1) throw std::invalid_argument("desirability must be 0 or 1");
  entry.desirability = value;
  entry.branch = branch;
  entry.risk = risk;
  entry.explanation = std::move(explanation);
}

}  // namespace psrb
