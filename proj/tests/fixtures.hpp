#pragma once

#include <string>
#include <vector>

#include "psrb/case_kb.hpp"
#include "psrb/config_io.hpp"
#include "psrb/model.hpp"

namespace fixtures {

inline std::string data_path(const std::string& name) { return std::string(PSRB_TEST_DATA_DIR) + "/" + name; }

inline const psrb::CaseBase& seed_kb() {
  static const psrb::CaseBase kb = psrb::load_case_base(std::filesystem::path(data_path("seed_kb.jsonl")));
  return kb;
}

inline const std::vector<psrb::CharacterProfile>& shipped_profiles() {
  static const auto profiles = psrb::load_profiles(data_path("profiles.json"));
  return profiles;
}

/// A second calibrated set, well inside each character's qualitative box.
inline std::vector<psrb::CharacterProfile> alternative_profiles() {
  using psrb::ValueTag;
  return {
      {"M_a", 1, 9, 0, {ValueTag::autonomy}},
      {"M_ar", 2, 9, 8, {ValueTag::autonomy}},
      {"M_arw", 4, 6, 5, {ValueTag::wellbeing, ValueTag::autonomy}},
      {"M_wr", 8, 2, 8, {ValueTag::wellbeing}},
  };
}

inline const psrb::CharacterProfile& profile(const std::string& name) {
  return psrb::find_profile(shipped_profiles(), name);
}

inline psrb::DecisionContext breach_context(int epsilon_m, int d, int f) {
  psrb::DecisionContext ctx;
  ctx.epsilon_m = epsilon_m;
  ctx.d = d;
  ctx.f = f;
  ctx.reminder_state = psrb::ReminderState::acknowledged;
  ctx.last_instruction = psrb::Instruction::acknowledge;
  ctx.acknowledged_without_taking = true;
  ctx.phase = psrb::DecisionPhase::breach;
  return ctx;
}

inline psrb::DecisionContext snooze_context(int epsilon_m, int d, int f, psrb::DecisionPhase phase) {
  psrb::DecisionContext ctx;
  ctx.epsilon_m = epsilon_m;
  ctx.d = d;
  ctx.f = f;
  ctx.reminder_state = psrb::ReminderState::snoozed;
  ctx.last_instruction = psrb::Instruction::snooze;
  ctx.instruction_pending = phase != psrb::DecisionPhase::follow_up_due;
  ctx.phase = phase;
  return ctx;
}

}  // namespace fixtures
