#pragma once

// Discrete-step world: a scripted resident and the reminder robot, stepped in a
// fixed resident-then-robot order.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "psrb/case_kb.hpp"
#include "psrb/governor.hpp"
#include "psrb/model.hpp"

namespace psrb {

inline constexpr int kSnoozeSteps = 3;
inline constexpr int kInspectionSteps = 2;

struct ResidentConfig {
  /// Replies to successive reminders, cycled. Never empty.
  std::vector<Instruction> responses{Instruction::snooze, Instruction::acknowledge};
  bool takes_medication = false;

  friend bool operator==(const ResidentConfig&, const ResidentConfig&) = default;
};

struct Scenario {
  std::string name;
  int epsilon_m = 1;
  int d = 0;
  ResidentConfig resident;
  int horizon = kEpisodeHorizon;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

ValidationResult validate_scenario(const Scenario& scenario);

enum class ResidentEvent : std::uint8_t { none, snooze, acknowledge, took_medication };

enum class RobotPhase : std::uint8_t { idle, reminded, snoozing, inspecting, escalated, cycle_closed };

enum class Terminal : std::uint8_t { running, medication_taken, recorded, reported, horizon_reached };

std::string_view to_string(ResidentEvent event);
std::string_view to_string(RobotPhase phase);
std::string_view to_string(Terminal terminal);

struct RobotState {
  int snooze_timer = 0;
  int inspect_timer = 0;
  int f = 0;
  int cycle_d = 0;
  RobotPhase phase = RobotPhase::idle;
  DecisionPhase next_decision = DecisionPhase::cycle_start;
  bool awaiting_response = false;
  std::optional<Instruction> last_instruction;
};

struct StepRecord {
  int step = 0;
  ResidentEvent resident_event = ResidentEvent::none;
  DecisionContext context;
  Recommendation recommendation;
  Behaviour action;
  RobotPhase robot_phase_after = RobotPhase::idle;
};

struct EpisodeLog {
  Scenario scenario;
  CharacterProfile profile;
  RiskMode risk_mode = RiskMode::literal;
  std::vector<StepRecord> steps;
  Terminal terminal = Terminal::running;
};

/// Mutable world for manual stepping; run_episode drives it to completion.
class World {
 public:
  World(Scenario scenario, CharacterProfile profile, const CaseBase& kb, DecideOptions options = {});

  [[nodiscard]] bool finished() const noexcept { return log_.terminal != Terminal::running; }
  [[nodiscard]] const RobotState& robot() const noexcept { return robot_; }
  [[nodiscard]] const EpisodeLog& log() const noexcept { return log_; }
  [[nodiscard]] int current_step() const noexcept { return step_; }

  /// Advances one step. Precondition: !finished().
  void step();

  EpisodeLog take_log() { return std::move(log_); }

 private:
  DecisionContext build_context() const;

  const CaseBase* kb_;
  DecideOptions options_;
  RobotState robot_;
  EpisodeLog log_;
  int step_ = 0;
  std::size_t responses_given_ = 0;
};

/// Throws std::invalid_argument on an invalid scenario or profile.
EpisodeLog run_episode(const Scenario& scenario, const CharacterProfile& profile, const CaseBase& kb,
                       const DecideOptions& options = {});

/// Compact action/terminal signature of an episode, used to name unknown classes.
std::string behaviour_signature(const EpisodeLog& log);

/// Assigns ids 1..7 to the known behaviour classes and fresh ids from 8 upward
/// to any other signature, stable within one catalog.
class BehaviourCatalog {
 public:
  int classify(const EpisodeLog& log);
  [[nodiscard]] const std::map<std::string, int>& synthetic() const noexcept { return synthetic_; }

 private:
  std::map<std::string, int> synthetic_;
  int next_id_ = 8;
};

int behaviour_id(const EpisodeLog& log);

/// Id among 1..7, or nullopt when the log matches none of the known classes.
std::optional<int> known_behaviour_id(const EpisodeLog& log);

}  // namespace psrb
