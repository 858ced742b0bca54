#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "psrb/evaluator.hpp"
#include "psrb/governor.hpp"
#include "psrb/rules.hpp"

using namespace psrb;

namespace {

BlackboardEntry entry_for(const Behaviour& b, const DecisionContext& ctx, bool acceptable, ValueSet intentions) {
  BlackboardEntry e;
  e.behaviour = b;
  e.rule_verdict = check(b, ctx);
  e.autonomy_utility = autonomy_utility(b, ctx);
  auto [w, spec] = wellbeing_utility(b, ctx);
  e.wellbeing_utility = w;
  e.wellbeing_distribution = spec;
  Opinion op;
  op.acceptable = acceptable;
  op.score = acceptable ? 1.0 : 0.0;
  op.intentions = std::move(intentions);
  e.kb_opinion = op;
  return e;
}

const Behaviour kRecord{BehaviourKind::record, std::nullopt};
const Behaviour kReport{BehaviourKind::report, std::nullopt};
const Behaviour kSnooze{BehaviourKind::snooze, Instruction::snooze};

}  // namespace

TEST_CASE("thresholds") {
  const auto top = thresholds({"x", 10, 10, 0, {}});
  CHECK(top.positive_wellbeing == 0.0);
  CHECK(top.negative_autonomy == 0.0);
  CHECK(top.risk == 0.0);

  const auto mid = thresholds({"x", 4, 7, 10, {}});
  CHECK(mid.positive(ValueTag::wellbeing) == doctest::Approx(0.6));
  CHECK(mid.negative(ValueTag::wellbeing) == doctest::Approx(-0.6));
  CHECK(mid.positive(ValueTag::autonomy) == doctest::Approx(0.3));
  CHECK(mid.risk == doctest::Approx((std::exp(10.0 / 4.17) - 1.0) / 10.0));
  CHECK(std::abs(mid.risk - 1.0003) < 1e-3);
}

TEST_CASE("compliant and supported behaviour is desirable") {
  const auto ctx = fixtures::breach_context(3, 0, 1);
  const auto d = evaluate(entry_for(kReport, ctx, true, {ValueTag::wellbeing}), fixtures::profile("M_a"));
  CHECK(d.value == 1);
  CHECK(d.branch == Branch::compliant_supported);
  CHECK_FALSE(d.explanation_kind.has_value());
}

TEST_CASE("rule-breaking behaviour without expert support is rejected") {
  const auto ctx = fixtures::breach_context(1, 0, 1);
  const auto d = evaluate(entry_for(kRecord, ctx, false, {ValueTag::autonomy}), fixtures::profile("M_ar"));
  CHECK(d.value == 0);
  CHECK(d.branch == Branch::noncompliant_unsupported);
}

TEST_CASE("recording a second breach is bent for a risk-tolerant autonomy character only") {
  const auto ctx = fixtures::breach_context(1, 0, 3);
  const auto entry = entry_for(kRecord, ctx, true, {ValueTag::autonomy});

  const auto tolerant = evaluate(entry, fixtures::profile("M_ar"));
  CHECK(tolerant.value == 1);
  CHECK(tolerant.branch == Branch::bend_evaluated);
  CHECK(tolerant.explanation_kind == ExplanationKind::bend_accepted);
  CHECK(tolerant.explanation.rfind("The action breaks the rules 2.", 0) == 0);

  const auto cautious = evaluate(entry, fixtures::profile("M_a"));
  CHECK(cautious.value == 0);
  CHECK(cautious.explanation_kind == ExplanationKind::bend_rejected_risk);
  CHECK(cautious.explanation.find("the risk taken by the action is not acceptable to bend the rule.") !=
        std::string::npos);
}

TEST_CASE("a compliant snooze the experts dislike is dropped by a wellbeing-minded character") {
  auto ctx = fixtures::snooze_context(2, 0, 2, DecisionPhase::snooze_window);
  const auto entry = entry_for(kSnooze, ctx, false, {ValueTag::wellbeing});
  REQUIRE(entry.rule_verdict->permissible());
  CHECK(*entry.wellbeing_utility < thresholds(fixtures::profile("M_arw")).negative_wellbeing);
  const auto d = evaluate(entry, fixtures::profile("M_arw"));
  CHECK(d.value == 0);
  CHECK(d.branch == Branch::suppress_evaluated);
  CHECK(d.explanation_kind == ExplanationKind::suppress_rejected_values);
}

TEST_CASE("an expert objection that does not outweigh compliance keeps the action") {
  auto ctx = fixtures::breach_context(1, 0, 1);
  auto entry = entry_for(kReport, ctx, false, {ValueTag::autonomy});
  const auto d = evaluate(entry, fixtures::profile("M_wr"));
  CHECK(d.branch == Branch::suppress_evaluated);
  CHECK(d.value == 1);
  CHECK(d.explanation_kind == ExplanationKind::suppress_declined);
}

TEST_CASE("risk alone can suppress a compliant action") {
  auto ctx = fixtures::breach_context(1, 0, 1);
  auto entry = entry_for(kReport, ctx, false, {ValueTag::wellbeing});
  const CharacterProfile zero_risk{"z", 10, 10, 0, {}};
  const auto d = evaluate(entry, zero_risk, RiskMode::harm);
  CHECK(d.risk > 0.0);
  CHECK(d.value == 0);
  CHECK(d.explanation_kind == ExplanationKind::suppress_rejected_risk);
}

TEST_CASE("incomplete entries are refused") {
  BlackboardEntry e;
  e.behaviour = kReport;
  CHECK_THROWS_AS(evaluate(e, fixtures::profile("M_a")), std::logic_error);
  e = entry_for(kReport, fixtures::breach_context(1, 0, 1), true, {});
  e.kb_opinion.reset();
  CHECK_THROWS_AS(evaluate(e, fixtures::profile("M_a")), std::logic_error);
}

TEST_CASE("empty case base degrades to rule following") {
  const auto ctx = fixtures::breach_context(1, 0, 1);
  BlackboardEntry e = entry_for(kRecord, ctx, true, {});
  e.kb_opinion = default_opinion(*e.rule_verdict);
  CHECK(e.kb_opinion->no_knowledge);
  CHECK(evaluate(e, fixtures::profile("M_ar")).value == 0);

  BlackboardEntry r = entry_for(kReport, ctx, true, {});
  r.kb_opinion = default_opinion(*r.rule_verdict);
  CHECK(evaluate(r, fixtures::profile("M_ar")).value == 1);
}

TEST_CASE("explanation placeholders") {
  const auto text = render_explanation(ExplanationKind::bend_accepted, {1, 2}, {ValueTag::autonomy},
                                       {ValueTag::wellbeing});
  CHECK(text.find("breaks the rules 1, 2.") != std::string::npos);
  CHECK(text.find("increases autonomy values") != std::string::npos);
  CHECK(text.find("other values wellbeing by") != std::string::npos);
  CHECK(text.find('<') == std::string::npos);
  CHECK_THROWS_AS(render_explanation(static_cast<ExplanationKind>(42), {}, {}, {}), std::invalid_argument);
}
