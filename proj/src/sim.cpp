#include "psrb/sim.hpp"

#include <algorithm>
#include <stdexcept>

namespace psrb {

std::string_view to_string(ResidentEvent event) {
  switch (event) {
    case ResidentEvent::none: return "none";
    case ResidentEvent::snooze: return "SNOOZE";
    case ResidentEvent::acknowledge: return "ACKNOWLEDGE";
    case ResidentEvent::took_medication: return "took_medication";
  }
  return "?";
}

std::string_view to_string(RobotPhase phase) {
  switch (phase) {
    case RobotPhase::idle: return "idle";
    case RobotPhase::reminded: return "reminded";
    case RobotPhase::snoozing: return "snoozing";
    case RobotPhase::inspecting: return "inspecting";
    case RobotPhase::escalated: return "escalated";
    case RobotPhase::cycle_closed: return "cycle_closed";
  }
  return "?";
}

std::string_view to_string(Terminal terminal) {
  switch (terminal) {
    case Terminal::running: return "running";
    case Terminal::medication_taken: return "medication_taken";
    case Terminal::recorded: return "recorded";
    case Terminal::reported: return "reported";
    case Terminal::horizon_reached: return "horizon_reached";
  }
  return "?";
}

ValidationResult validate_scenario(const Scenario& scenario) {
  ValidationResult result;
  if (scenario.epsilon_m < 1 || scenario.epsilon_m > 3) result.errors.emplace_back("epsilon_m out of {1,2,3}");
  if (scenario.d < 0) result.errors.emplace_back("d must be >= 0");
  if (scenario.horizon < 1 || scenario.horizon > kEpisodeHorizon) {
    result.errors.emplace_back("horizon out of [1," + std::to_string(kEpisodeHorizon) + "]");
  }
  if (scenario.resident.responses.empty()) result.errors.emplace_back("resident responses must not be empty");
  return result;
}

World::World(Scenario scenario, CharacterProfile profile, const CaseBase& kb, DecideOptions options)
    : kb_(&kb), options_(options) {
  if (auto v = validate_scenario(scenario); !v) throw std::invalid_argument("invalid scenario: " + v.errors.front());
  if (auto v = validate_profile(profile); !v) throw std::invalid_argument("invalid profile: " + v.errors.front());
  robot_.cycle_d = scenario.d;
  log_.scenario = std::move(scenario);
  log_.profile = std::move(profile);
  log_.risk_mode = options_.risk_mode;
}

DecisionContext World::build_context() const {
  DecisionContext ctx;
  ctx.epsilon_m = log_.scenario.epsilon_m;
  ctx.d = robot_.cycle_d;
  ctx.f = robot_.f;
  ctx.step = step_;
  ctx.phase = robot_.next_decision;
  ctx.last_instruction = robot_.last_instruction;
  switch (robot_.next_decision) {
    case DecisionPhase::cycle_start: ctx.reminder_state = ReminderState::issued; break;
    case DecisionPhase::instruction:
      ctx.reminder_state = robot_.last_instruction == Instruction::snooze ? ReminderState::snoozed
                                                                          : ReminderState::acknowledged;
      ctx.instruction_pending = true;
      break;
    case DecisionPhase::snooze_window:
      ctx.reminder_state = ReminderState::snoozed;
      ctx.instruction_pending = true;
      break;
    case DecisionPhase::follow_up_due: ctx.reminder_state = ReminderState::snoozed; break;
    case DecisionPhase::inspecting:
      ctx.reminder_state = ReminderState::acknowledged;
      ctx.instruction_pending = true;
      break;
    case DecisionPhase::breach:
      ctx.reminder_state = ReminderState::acknowledged;
      ctx.acknowledged_without_taking = true;
      break;
  }
  return ctx;
}

void World::step() {
  if (finished()) throw std::logic_error("episode already finished");
  ++step_;
  StepRecord record;
  record.step = step_;

  // Resident first: answer the reminder issued at the previous step.
  if (robot_.awaiting_response) {
    const auto& replies = log_.scenario.resident.responses;
    const Instruction reply = replies[responses_given_ % replies.size()];
    ++responses_given_;
    robot_.awaiting_response = false;
    robot_.last_instruction = reply;
    robot_.next_decision = DecisionPhase::instruction;
    record.resident_event = reply == Instruction::snooze ? ResidentEvent::snooze : ResidentEvent::acknowledge;
  } else if (robot_.next_decision == DecisionPhase::inspecting && log_.scenario.resident.takes_medication) {
    record.resident_event = ResidentEvent::took_medication;
  }

  // Robot perceives and decides.
  record.context = build_context();
  record.recommendation = decide(record.context, log_.profile, *kb_, options_);
  record.action = arbitrate(record.recommendation, record.context.pending_instruction());

  const DecisionPhase phase = record.context.phase;
  switch (record.action.kind) {
    case BehaviourKind::record:
    case BehaviourKind::report:
      robot_.phase = RobotPhase::escalated;
      log_.terminal = record.action.kind == BehaviourKind::record ? Terminal::recorded : Terminal::reported;
      break;
    case BehaviourKind::remind:
    case BehaviourKind::follow_up:
      if (record.action.kind == BehaviourKind::follow_up) ++robot_.f;
      robot_.awaiting_response = true;
      robot_.phase = RobotPhase::reminded;
      break;
    case BehaviourKind::snooze:
      robot_.phase = RobotPhase::snoozing;
      if (phase == DecisionPhase::instruction) {
        robot_.snooze_timer = kSnoozeSteps;
        robot_.next_decision = DecisionPhase::snooze_window;
      } else if (--robot_.snooze_timer == 0) {
        robot_.next_decision = DecisionPhase::follow_up_due;
      }
      break;
    case BehaviourKind::acknowledge_wait:
      robot_.phase = RobotPhase::inspecting;
      if (phase == DecisionPhase::instruction) {
        robot_.inspect_timer = kInspectionSteps;
        robot_.next_decision = DecisionPhase::inspecting;
      } else if (record.resident_event == ResidentEvent::took_medication) {
        robot_.inspect_timer = 0;
        robot_.phase = RobotPhase::cycle_closed;
        log_.terminal = Terminal::medication_taken;
      } else if (--robot_.inspect_timer == 0) {
        robot_.next_decision = DecisionPhase::breach;
      }
      break;
  }
  record.robot_phase_after = robot_.phase;
  log_.steps.push_back(std::move(record));

  if (!finished() && step_ >= log_.scenario.horizon) log_.terminal = Terminal::horizon_reached;
}

EpisodeLog run_episode(const Scenario& scenario, const CharacterProfile& profile, const CaseBase& kb,
                       const DecideOptions& options) {
  World world(scenario, profile, kb, options);
  while (!world.finished()) world.step();
  return world.take_log();
}

std::string behaviour_signature(const EpisodeLog& log) {
  std::string sig;
  for (const StepRecord& s : log.steps) {
    if (!sig.empty()) sig += ' ';
    sig += std::string(to_string(s.action.kind));
  }
  sig += " -> ";
  sig += to_string(log.terminal);
  return sig;
}

std::optional<int> known_behaviour_id(const EpisodeLog& log) {
  std::vector<const StepRecord*> breaches;
  const StepRecord* escalation = nullptr;
  for (const StepRecord& s : log.steps) {
    if (s.context.phase == DecisionPhase::breach) breaches.push_back(&s);
    if (!escalation && (s.action.kind == BehaviourKind::record || s.action.kind == BehaviourKind::report)) {
      escalation = &s;
    }
  }
  if (!escalation) {
    if (log.terminal == Terminal::horizon_reached) return 1;
    return std::nullopt;
  }
  if (escalation->context.phase != DecisionPhase::breach) return std::nullopt;

  const bool is_report = escalation->action.kind == BehaviourKind::report;
  const auto index = std::find(breaches.begin(), breaches.end(), escalation) - breaches.begin();
  if (index == 0) return is_report ? 6 : 7;
  if (index != 1) return std::nullopt;
  if (!is_report) return 2;

  const auto& first = breaches.front()->recommendation;
  const bool report_was_desirable = std::any_of(first.blackboard.entries().begin(), first.blackboard.entries().end(),
                                                [](const BlackboardEntry& e) {
                                                  return e.behaviour.kind == BehaviourKind::report &&
                                                         e.desirability == 1;
                                                });
  if (report_was_desirable) return 3;
  const bool any_fallback =
      std::any_of(log.steps.begin(), log.steps.end(), [](const StepRecord& s) { return s.recommendation.fallback; });
  return any_fallback ? 4 : 5;
}

int BehaviourCatalog::classify(const EpisodeLog& log) {
  if (auto id = known_behaviour_id(log)) return *id;
  auto [it, inserted] = synthetic_.try_emplace(behaviour_signature(log), next_id_);
  if (inserted) ++next_id_;
  return it->second;
}

int behaviour_id(const EpisodeLog& log) {
  BehaviourCatalog catalog;
  return catalog.classify(log);
}

}  // namespace psrb
