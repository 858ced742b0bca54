#pragma once

// Binary desirability of one candidate behaviour given rule verdict, case-base
// opinion, character profile and wellbeing risk.

#include <string>
#include <vector>

#include "psrb/model.hpp"
#include "psrb/utility.hpp"

namespace psrb {

struct ThresholdSet {
  double positive_wellbeing = 0.0;
  double positive_autonomy = 0.0;
  double negative_wellbeing = 0.0;
  double negative_autonomy = 0.0;
  double risk = 0.0;

  [[nodiscard]] double positive(ValueTag v) const noexcept {
    return v == ValueTag::wellbeing ? positive_wellbeing : positive_autonomy;
  }
  [[nodiscard]] double negative(ValueTag v) const noexcept {
    return v == ValueTag::wellbeing ? negative_wellbeing : negative_autonomy;
  }
};

double positive_threshold(double preference);
double negative_threshold(double preference);
double risk_threshold(double risk_propensity);

ThresholdSet thresholds(const CharacterProfile& profile);

/// The six fixed explanation texts for the rule-bending branches.
enum class ExplanationKind : std::uint8_t {
  bend_accepted,             // rule broken, desirable
  suppress_rejected_risk,    // compliant action dropped on risk
  suppress_rejected_values,  // compliant action dropped on value loss
  bend_rejected_risk,        // rule kept, values fine but risk too high
  bend_rejected_values,      // rule kept, value tradeoff insufficient
  suppress_declined,         // compliant action kept despite expert objection
};

std::string_view to_string(ExplanationKind kind);

std::string render_explanation(ExplanationKind kind, const std::vector<int>& rule_ids,
                               const ValueSet& intentions, const ValueSet& other_values);

struct Desirability {
  int value = 0;
  Branch branch = Branch::compliant_supported;
  std::optional<ExplanationKind> explanation_kind;  // set for the bend/suppress branches
  std::string explanation;
  double risk = 0.0;
  std::vector<TraceEntry> kb_trace;
};

/// Throws std::logic_error when the entry lacks a verdict, utilities, a
/// distribution or an opinion.
Desirability evaluate(const BlackboardEntry& entry, const CharacterProfile& profile,
                      RiskMode risk_mode = RiskMode::literal);

}  // namespace psrb
