#pragma once

// Shared domain vocabulary for the medication-reminder governor: behaviours,
// decision contexts, character profiles and the per-step blackboard.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace psrb {

enum class BehaviourKind : std::uint8_t {
  remind,
  snooze,
  follow_up,
  record,
  report,
  acknowledge_wait,
};

inline constexpr std::array<BehaviourKind, 6> kAllBehaviourKinds = {
    BehaviourKind::remind, BehaviourKind::snooze, BehaviourKind::follow_up,
    BehaviourKind::record, BehaviourKind::report, BehaviourKind::acknowledge_wait};

enum class Instruction : std::uint8_t { snooze, acknowledge };

enum class ReminderState : std::uint8_t { issued, snoozed, ignored, acknowledged };

inline constexpr std::array<ReminderState, 4> kAllReminderStates = {
    ReminderState::issued, ReminderState::snoozed, ReminderState::ignored,
    ReminderState::acknowledged};

enum class ValueTag : std::uint8_t { wellbeing, autonomy };

inline constexpr std::array<ValueTag, 2> kAllValues = {ValueTag::wellbeing, ValueTag::autonomy};

using ValueSet = std::set<ValueTag>;

// Where in the reminder cycle the robot is when it consults the governor.
enum class DecisionPhase : std::uint8_t {
  cycle_start,    // first reminder of the cycle
  instruction,    // resident has just issued SNOOZE or ACKNOWLEDGE
  snooze_window,  // waiting out a SNOOZE
  follow_up_due,  // snooze window elapsed
  inspecting,     // checking whether the medication was taken after ACKNOWLEDGE
  breach,         // ACKNOWLEDGE given, medication not taken
};

std::string_view to_string(BehaviourKind kind);
std::string_view to_string(Instruction instruction);
std::string_view to_string(ReminderState state);
std::string_view to_string(ValueTag value);
std::string_view to_string(DecisionPhase phase);

BehaviourKind parse_behaviour_kind(std::string_view text);
Instruction parse_instruction(std::string_view text);
ReminderState parse_reminder_state(std::string_view text);
ValueTag parse_value_tag(std::string_view text);
DecisionPhase parse_decision_phase(std::string_view text);

/// Renders a value set as "wellbeing, autonomy" (canonical order), or "none".
std::string join_values(const ValueSet& values);

struct Behaviour {
  BehaviourKind kind = BehaviourKind::remind;
  /// Set iff this behaviour directly executes the resident's instruction.
  std::optional<Instruction> obeys;

  [[nodiscard]] bool obeys_instruction() const noexcept { return obeys.has_value(); }
  [[nodiscard]] std::string label() const;

  friend bool operator==(const Behaviour&, const Behaviour&) = default;
};

/// Canonical position used for ordering candidate lists and breaking ties.
int canonical_rank(const Behaviour& behaviour) noexcept;

struct CharacterProfile {
  std::string name;
  double c_w = 5.0;   // wellbeing preference
  double c_au = 5.0;  // autonomy preference
  double c_rp = 5.0;  // risk propensity
  ValueSet precedence;

  [[nodiscard]] double preference(ValueTag value) const noexcept {
    return value == ValueTag::wellbeing ? c_w : c_au;
  }

  friend bool operator==(const CharacterProfile&, const CharacterProfile&) = default;
};

struct ValidationResult {
  std::vector<std::string> errors;

  [[nodiscard]] bool ok() const noexcept { return errors.empty(); }
  explicit operator bool() const noexcept { return ok(); }
};

ValidationResult validate_profile(const CharacterProfile& profile);

inline constexpr int kEpisodeHorizon = 29;

struct DecisionContext {
  int epsilon_m = 1;  // medicine impact, 1..3
  int d = 0;          // consecutive missed doses carried into the episode
  int f = 0;          // follow-ups issued this cycle
  ReminderState reminder_state = ReminderState::issued;
  std::optional<Instruction> last_instruction;
  bool instruction_pending = false;
  bool acknowledged_without_taking = false;
  int step = 0;
  DecisionPhase phase = DecisionPhase::cycle_start;

  /// The instruction the robot is currently bound by, if any.
  [[nodiscard]] std::optional<Instruction> pending_instruction() const noexcept {
    return instruction_pending ? last_instruction : std::nullopt;
  }

  friend bool operator==(const DecisionContext&, const DecisionContext&) = default;
};

ValidationResult validate_context(const DecisionContext& ctx, int horizon = kEpisodeHorizon);

struct RuleVerdict {
  std::vector<int> violated_rule_ids;  // ascending

  [[nodiscard]] bool permissible() const noexcept { return violated_rule_ids.empty(); }
  friend bool operator==(const RuleVerdict&, const RuleVerdict&) = default;
};

struct GammaSpec {
  double alpha = 1.0;  // shape
  double beta = 1.0;   // scale
  double v = -1.0;     // location
  double grid_resolution = 0.05;

  friend bool operator==(const GammaSpec&, const GammaSpec&) = default;
};

struct TraceEntry {
  std::string case_id;
  double distance = 0.0;
  double weight = 0.0;

  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

struct Opinion {
  bool acceptable = false;
  double score = 0.0;
  ValueSet intentions;
  std::vector<TraceEntry> trace;
  bool no_knowledge = false;  // case base empty; opinion mirrors the rule verdict

  friend bool operator==(const Opinion&, const Opinion&) = default;
};

enum class Branch : std::uint8_t {
  compliant_supported,       // KB agrees, no rule broken
  noncompliant_unsupported,  // KB disagrees, rule broken
  bend_evaluated,            // KB supports breaking a rule
  suppress_evaluated,        // KB objects to a compliant action
};

std::string_view to_string(Branch branch);

struct BlackboardEntry {
  Behaviour behaviour;
  std::optional<RuleVerdict> rule_verdict;
  std::optional<double> autonomy_utility;
  std::optional<double> wellbeing_utility;
  std::optional<GammaSpec> wellbeing_distribution;
  std::optional<Opinion> kb_opinion;
  std::optional<int> desirability;
  std::optional<Branch> branch;
  std::optional<double> risk;
  std::string explanation;
};

/// Per-decision record. Entries are appended while a step is evaluated and
/// become read-only once their desirability has been written.
class Blackboard {
 public:
  BlackboardEntry& add(const Behaviour& behaviour);
  void write_desirability(std::size_t index, int value, Branch branch, double risk,
                          std::string explanation);

  [[nodiscard]] const std::vector<BlackboardEntry>& entries() const noexcept { return entries_; }
  [[nodiscard]] const BlackboardEntry& at(std::size_t index) const { return entries_.at(index); }
  [[nodiscard]] BlackboardEntry& mutable_entry(std::size_t index);
  [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }

 private:
  std::vector<BlackboardEntry> entries_;
};

}  // namespace psrb
