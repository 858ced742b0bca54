#include "psrb/evaluator.hpp"

#include <cmath>
#include <stdexcept>

namespace psrb {

namespace {

std::string join_ids(const std::vector<int>& ids) {
  std::string out;
  for (int id : ids) {
    if (!out.empty()) out += ", ";
    out += std::to_string(id);
  }
  return out;
}

void replace_all(std::string& text, std::string_view placeholder, const std::string& value) {
  for (auto pos = text.find(placeholder); pos != std::string::npos;
       pos = text.find(placeholder, pos + value.size())) {
    text.replace(pos, placeholder.size(), value);
  }
}

double utility_for(ValueTag v, const BlackboardEntry& entry) {
  return v == ValueTag::wellbeing ? *entry.wellbeing_utility : *entry.autonomy_utility;
}

ValueSet complement(const ValueSet& values) {
  ValueSet out;
  for (ValueTag v : kAllValues) {
    if (!values.contains(v)) out.insert(v);
  }
  return out;
}

}  // namespace

double positive_threshold(double preference) { return (10.0 - preference) / 10.0; }
double negative_threshold(double preference) { return (preference - 10.0) / 10.0; }
double risk_threshold(double risk_propensity) { return (std::exp(risk_propensity / 4.17) - 1.0) / 10.0; }

ThresholdSet thresholds(const CharacterProfile& profile) {
  return ThresholdSet{
      .positive_wellbeing = positive_threshold(profile.c_w),
      .positive_autonomy = positive_threshold(profile.c_au),
      .negative_wellbeing = negative_threshold(profile.c_w),
      .negative_autonomy = negative_threshold(profile.c_au),
      .risk = risk_threshold(profile.c_rp),
  };
}

std::string_view to_string(ExplanationKind kind) {
  switch (kind) {
    case ExplanationKind::bend_accepted: return "bend_accepted";
    case ExplanationKind::suppress_rejected_risk: return "suppress_rejected_risk";
    case ExplanationKind::suppress_rejected_values: return "suppress_rejected_values";
    case ExplanationKind::bend_rejected_risk: return "bend_rejected_risk";
    case ExplanationKind::bend_rejected_values: return "bend_rejected_values";
    case ExplanationKind::suppress_declined: return "suppress_declined";
  }
  return "?";
}

std::string render_explanation(ExplanationKind kind, const std::vector<int>& rule_ids,
                               const ValueSet& intentions, const ValueSet& other_values) {
  std::string text;
  switch (kind) {
    case ExplanationKind::bend_accepted:
      text =
          "The action breaks the rules <rule_ids>. However, this action in this context is considered desirable by "
          "experts. Since it increases <intentions> values greatly, while not reducing the other values "
          "<other_values> by a considerable amount, and the outcome is within accepted risk levels, deemed accepted "
          "by the PSRB system.";
      break;
    case ExplanationKind::suppress_rejected_risk:
      text =
          "The action does not break any rules. However, this action in this context is considered undesirable by "
          "experts. Since the action outcomes introduce a high risk, deemed not accepted by the PSRB system.";
      break;
    case ExplanationKind::suppress_rejected_values:
      text =
          "The action does not break any rules. However, this action in this context is considered undesirable by "
          "experts. Since it decreases <intentions> values by a considerable amount, the action is deemed "
          "unacceptable by the system";
      break;
    case ExplanationKind::bend_rejected_risk:
      text =
          "The action breaks the rules <rule_ids>. However, this action in this context is considered desirable by "
          "experts. Although the value tradeoff is satisfactory, the risk taken by the action is not acceptable to "
          "bend the rule.";
      break;
    case ExplanationKind::bend_rejected_values:
      text =
          "The action breaks the rules <rule_ids>. However, this action in this context is considered desirable by "
          "experts. But, the PSRB system suggests that the value tradeoff is not satisfactory to bend the rule.";
      break;
    case ExplanationKind::suppress_declined:
      text =
          "The action does not break any rules. However, this action in this context is considered undesirable by "
          "experts. But, the PSRB system suggests that the value tradeoff is not satisfactory to bend the rule.";
      break;
    default: throw std::invalid_argument("unknown explanation kind");
  }
  replace_all(text, "<rule_ids>", join_ids(rule_ids));
  replace_all(text, "<intentions>", join_values(intentions));
  replace_all(text, "<other_values>", join_values(other_values));
  return text;
}

Desirability evaluate(const BlackboardEntry& entry, const CharacterProfile& profile, RiskMode risk_mode) {
  if (!entry.rule_verdict || !entry.autonomy_utility || !entry.wellbeing_utility || !entry.wellbeing_distribution ||
      !entry.kb_opinion) {
    throw std::logic_error("blackboard entry for " + entry.behaviour.label() + " is incomplete");
  }
  const RuleVerdict& verdict = *entry.rule_verdict;
  const Opinion& opinion = *entry.kb_opinion;
  const bool broken = !verdict.permissible();
  const ThresholdSet t = thresholds(profile);

  Desirability out;
  out.risk = behaviour_risk(*entry.wellbeing_distribution, risk_mode);
  out.kb_trace = opinion.trace;

  if (opinion.acceptable && !broken) {
    out.value = 1;
    out.branch = Branch::compliant_supported;
    out.explanation = "Complies with all rules and is supported by the case base.";
    return out;
  }
  if (!opinion.acceptable && broken) {
    out.value = 0;
    out.branch = Branch::noncompliant_unsupported;
    out.explanation = "Breaks rules " + join_ids(verdict.violated_rule_ids) + " and is not supported by the case base.";
    return out;
  }

  const bool too_risky = out.risk > t.risk;
  bool values_fail = false;
  const ValueSet others = complement(opinion.intentions);

  if (opinion.acceptable) {
    out.branch = Branch::bend_evaluated;
    for (ValueTag v : kAllValues) {
      const double u = utility_for(v, entry);
      const bool intended = opinion.intentions.contains(v);
      if (intended ? u < t.positive(v) : u < t.negative(v)) values_fail = true;
    }
    out.value = (values_fail || too_risky) ? 0 : 1;
    out.explanation_kind = values_fail  ? ExplanationKind::bend_rejected_values
                           : too_risky ? ExplanationKind::bend_rejected_risk
                                       : ExplanationKind::bend_accepted;
  } else {
    out.branch = Branch::suppress_evaluated;
    for (ValueTag v : kAllValues) {
      if (opinion.intentions.contains(v) && utility_for(v, entry) < t.negative(v)) values_fail = true;
    }
    out.value = (values_fail || too_risky) ? 0 : 1;
    out.explanation_kind = values_fail  ? ExplanationKind::suppress_rejected_values
                           : too_risky ? ExplanationKind::suppress_rejected_risk
                                       : ExplanationKind::suppress_declined;
  }
  out.explanation = render_explanation(*out.explanation_kind, verdict.violated_rule_ids, opinion.intentions, others);
  return out;
}

}  // namespace psrb
