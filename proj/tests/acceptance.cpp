// Acceptance checks: one PASS/FAIL line per criterion, exit status 0 only when
// all criteria pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "psrb/case_kb.hpp"
#include "psrb/episode_io.hpp"
#include "psrb/evaluator.hpp"
#include "psrb/experiment.hpp"
#include "psrb/governor.hpp"
#include "psrb/rules.hpp"
#include "psrb/sim.hpp"
#include "psrb/utility.hpp"

using namespace psrb;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return buf;
}

// 1 ------------------------------------------------------------------------
Outcome experiment_grid() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  const auto result = run_matrix(fixtures::seed_kb(), fixtures::shipped_profiles());
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const TargetTable expected = {
      {"M_a", {1, 4, 6, 1, 6, 6}},
      {"M_ar", {2, 5, 6, 7, 6, 6}},
      {"M_arw", {2, 4, 6, 1, 6, 6}},
      {"M_wr", {3, 6, 6, 6, 6, 6}},
  };
  for (const auto& [name, row] : expected) {
    if (result.row(name) != row) out.fail("row " + name + " differs: " + format_diff(result));
  }
  if (result.cells.size() != 24) out.fail("expected 24 cells");
  if (seconds >= 10.0) out.fail(fmt("took %.2f s", seconds));
  if (out.pass) out.detail = std::to_string(result.matched()) + "/24 cells, " + fmt("%.3f s", seconds);
  return out;
}

// 2 ------------------------------------------------------------------------
Outcome autonomy_lattice() {
  Outcome out;
  const std::vector<std::optional<Instruction>> tags = {std::nullopt, Instruction::snooze, Instruction::acknowledge};
  int checked = 0;
  for (BehaviourKind kind : kAllBehaviourKinds) {
    for (const auto& tag : tags) {
      // f stops at 10, where -0.1 f reaches the bottom of the autonomy range; an
      // episode of 29 steps cannot issue more than 7 follow-ups.
      for (int f = 0; f <= 10; ++f) {
        double expected = 0.0;
        if (tag) {
          expected = 1.0;
        } else if (kind == BehaviourKind::record) {
          expected = 0.5;
        } else if (kind == BehaviourKind::follow_up) {
          expected = -0.1 * f;
        } else if (kind == BehaviourKind::report) {
          expected = -0.7;
        }
        // Remaining context fields must not matter.
        for (int eps = 1; eps <= 3; ++eps) {
          for (bool pending : {false, true}) {
            for (bool awt : {false, true}) {
              DecisionContext ctx;
              ctx.epsilon_m = eps;
              ctx.d = eps - 1;
              ctx.f = f;
              ctx.last_instruction = Instruction::acknowledge;
              ctx.instruction_pending = pending;
              ctx.acknowledged_without_taking = awt;
              const double got = autonomy_utility({kind, tag}, ctx);
              ++checked;
              if (got != expected || got < -1.0 || got > 1.0) {
                out.fail(std::string(to_string(kind)) + fmt(" f=%g: got %.17g expected %.17g", f, got, expected));
              }
            }
          }
        }
      }
    }
  }
  int max_f = 0;
  for (const auto& c : experiment_cases()) {
    Scenario s = scenario_for(c);
    for (const auto& responses : {s.resident.responses, std::vector<Instruction>{Instruction::snooze},
                                  std::vector<Instruction>{Instruction::acknowledge}}) {
      s.resident.responses = responses;
      for (const auto& p : fixtures::shipped_profiles()) {
        for (const auto& step : run_episode(s, p, fixtures::seed_kb()).steps) max_f = std::max(max_f, step.context.f);
      }
    }
  }
  if (max_f > 10) out.fail("episodes reach f=" + std::to_string(max_f) + ", beyond the checked lattice");
  if (out.pass) {
    out.detail = std::to_string(checked) + " lattice points exact (f<=10; episodes reach f<=" + std::to_string(max_f) +
                 ")";
  }
  return out;
}

// 3 ------------------------------------------------------------------------
Outcome gamma_fidelity() {
  Outcome out;
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> alpha(0.5, 12.0), beta(0.005, 0.2), x(-1.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    double a = alpha(rng), b = beta(rng), xv = x(rng);
    if (a == 0.5) a = 0.5000001;
    const double want = oracle::gamma_pdf(xv, a, b);
    worst = std::max(worst, std::abs(gamma_pdf(xv, GammaSpec{a, b}) - want));
  }
  if (worst > 1e-9) out.fail(fmt("worst error %.3g", worst));

  // Every spec the experiment can reach: eps in {1,2,3}, d in {0,2}, f in 0..12.
  double worst_mass = 0.0;
  int specs = 0;
  for (int eps = 1; eps <= 3; ++eps) {
    for (int d : {0, 2}) {
      for (int f = 0; f <= 12; ++f) {
        DecisionContext ctx;
        ctx.epsilon_m = eps;
        ctx.d = d;
        ctx.f = f;
        for (BehaviourKind k : kAllBehaviourKinds) {
          const GammaSpec spec = wellbeing_utility({k, std::nullopt}, ctx).second;
          const double mass = oracle::integrate_support([&](double xv) { return gamma_pdf(xv, spec); });
          worst_mass = std::max(worst_mass, std::abs(mass - 1.0));
          ++specs;
        }
      }
    }
  }
  if (worst_mass > 1e-6) out.fail(fmt("mass off by %.3g", worst_mass));
  if (out.pass) {
    out.detail = fmt("max abs. error %.2g over 1000 samples; max |mass-1| %.2g", worst, worst_mass) + " over " +
                 std::to_string(specs) + " specs";
  }
  return out;
}

// 4 ------------------------------------------------------------------------
Outcome shape_scale() {
  Outcome out;
  const double want[] = {10.0, 4.5, 1.65};
  for (int e = 1; e <= 3; ++e) {
    if (std::abs(shape_param(e) - want[e - 1]) > 1e-12) out.fail(fmt("shape(%g)=%.17g", e, shape_param(e)));
  }
  const double scale0 = std::exp(-2.65) + 0.01;
  if (std::abs(scale_param(0) - scale0) > 1e-12) out.fail(fmt("scale(0)=%.17g", scale_param(0)));
  if (out.pass) out.detail = fmt("shape = 10, 4.5, 1.65; scale(0) = %.12f", scale_param(0));
  return out;
}

// 5 ------------------------------------------------------------------------
Outcome most_probable_utility() {
  Outcome out;
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> alpha(0.5, 12.0), beta(0.005, 0.2);
  for (int i = 0; i < 500; ++i) {
    const double a = alpha(rng), b = beta(rng);
    const double got = pmax_util(GammaSpec{a, b});
    if (got != oracle::grid_argmax(a, b)) out.fail(fmt("alpha=%g beta=%g: %g", a, b, got));
  }
  for (int eps = 1; eps <= 3; ++eps) {
    double prev = 2.0;
    for (int q = 0; q <= 16; ++q) {
      const double v = pmax_util(make_gamma_spec(eps, q * 0.25));
      if (v > prev) out.fail(fmt("eps=%g not monotone in d at %g", eps, q * 0.25));
      prev = v;
    }
  }
  for (int q = 0; q <= 16; ++q) {
    double prev = 2.0;
    for (int eps = 1; eps <= 3; ++eps) {
      const double v = pmax_util(make_gamma_spec(eps, q * 0.25));
      if (v > prev) out.fail(fmt("not monotone in eps at d=%g", q * 0.25));
      prev = v;
    }
  }
  if (out.pass) out.detail = "500 random specs equal the exhaustive argmax; monotone in d and eps";
  return out;
}

// 6 ------------------------------------------------------------------------
Outcome threshold_formulas() {
  Outcome out;
  double prev = -1.0;
  for (int c = 0; c <= 10; ++c) {
    const auto t = thresholds({"t", double(c), double(10 - c), double(c), {}});
    const double pos = (10.0 - c) / 10.0, neg = (c - 10.0) / 10.0;
    const double risk = (std::exp(c / 4.17) - 1.0) / 10.0;
    if (std::abs(t.positive_wellbeing - pos) > 1e-12 || std::abs(t.negative_wellbeing - neg) > 1e-12 ||
        std::abs(t.positive_autonomy - (c / 10.0)) > 1e-12 || std::abs(t.risk - risk) > 1e-12) {
      out.fail(fmt("C=%g mismatch", c));
    }
    if (!(t.risk > prev)) out.fail(fmt("risk threshold not strictly increasing at %g", c));
    prev = t.risk;
  }
  if (risk_threshold(0.0) != 0.0) out.fail("risk_threshold(0) != 0");
  if (out.pass) out.detail = fmt("risk threshold 0 .. %.6f, strictly increasing", risk_threshold(10.0));
  return out;
}

// 7 ------------------------------------------------------------------------
BlackboardEntry random_entry(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind(0, 5), rules(0, 3), eps(1, 3), vals(0, 3);
  std::uniform_real_distribution<double> util(-1.0, 1.0), beta(0.01, 0.1), dose(0.0, 5.0);
  std::bernoulli_distribution coin(0.5);
  BlackboardEntry e;
  e.behaviour = {kAllBehaviourKinds[static_cast<std::size_t>(kind(rng))], std::nullopt};
  RuleVerdict v;
  const int r = rules(rng);
  if (r & 1) v.violated_rule_ids.push_back(1);
  if (r & 2) v.violated_rule_ids.push_back(2);
  e.rule_verdict = v;
  e.autonomy_utility = util(rng);
  e.wellbeing_utility = util(rng);
  e.wellbeing_distribution = make_gamma_spec(eps(rng), dose(rng));
  Opinion op;
  op.acceptable = coin(rng);
  const int iv = vals(rng);
  if (iv & 1) op.intentions.insert(ValueTag::wellbeing);
  if (iv & 2) op.intentions.insert(ValueTag::autonomy);
  e.kb_opinion = op;
  return e;
}

Outcome evaluator_properties() {
  Outcome out;
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<int> trait(0, 10);
  std::bernoulli_distribution coin(0.5);
  const int n = 12000;
  for (int i = 0; i < n; ++i) {
    const BlackboardEntry e = random_entry(rng);
    const CharacterProfile p{"p", double(trait(rng)), double(trait(rng)), double(trait(rng)), {}};
    const RiskMode mode = coin(rng) ? RiskMode::harm : RiskMode::literal;
    const Desirability d = evaluate(e, p, mode);
    const bool broken = !e.rule_verdict->permissible();
    const bool acc = e.kb_opinion->acceptable;

    // (iv) exactly one branch per (opinion, verdict)
    const Branch expected_branch = acc && !broken    ? Branch::compliant_supported
                                   : !acc && broken  ? Branch::noncompliant_unsupported
                                   : acc             ? Branch::bend_evaluated
                                                     : Branch::suppress_evaluated;
    if (d.branch != expected_branch) out.fail("branch totality violated");
    // (i) no bending without support
    if (broken && !acc && d.value != 0) out.fail("rule bent without case-base support");
    if ((d.branch == Branch::bend_evaluated || d.branch == Branch::suppress_evaluated) && d.explanation.empty()) {
      out.fail("missing explanation");
    }
    // (ii) risk propensity monotonicity
    if (d.value == 1) {
      for (int r = static_cast<int>(p.c_rp) + 1; r <= 10; ++r) {
        CharacterProfile q = p;
        q.c_rp = r;
        if (evaluate(e, q, mode).value != 1) out.fail("not monotone in risk propensity");
      }
    }
    // (iii) value preference monotonicity on the bend branch
    if (d.branch == Branch::bend_evaluated && d.value == 1) {
      for (ValueTag v : e.kb_opinion->intentions) {
        for (int c = static_cast<int>(p.preference(v)) + 1; c <= 10; ++c) {
          CharacterProfile q = p;
          (v == ValueTag::wellbeing ? q.c_w : q.c_au) = c;
          if (evaluate(e, q, mode).value != 1) out.fail("not monotone in value preference");
        }
      }
    }
  }
  if (out.pass) out.detail = std::to_string(n) + " random inputs, 0 violations";
  return out;
}

// 8 ------------------------------------------------------------------------
Outcome knn_equivalence() {
  Outcome out;
  std::mt19937_64 rng(8080);
  std::uniform_int_distribution<int> size(1, 500), k(1, 7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::bernoulli_distribution coin(0.5);
  // Coarse coordinates create exact distance ties so id ordering is exercised.
  auto coord = [&] { return std::round(u(rng) * 4.0) / 4.0; };
  for (int base = 0; base < 200; ++base) {
    CaseBase kb;
    const int n = size(rng);
    for (int i = 0; i < n; ++i) {
      Case c;
      c.id = "k" + std::to_string((i * 7919) % 100003);
      c.features.resize(kFeatureDims);
      for (double& x : c.features) x = coord();
      c.acceptability = coin(rng) ? 1.0 : 0.0;
      c.intention = {ValueTag::autonomy};
      kb.add_case(std::move(c));
    }
    FeatureVector q(kFeatureDims);
    for (double& x : q) x = coord();
    const int kk = base == 0 ? 3 : k(rng);
    const auto got = kb.retrieve(q, kk);
    const auto want = oracle::nearest(kb, q, static_cast<std::size_t>(kk));
    if (got.size() != want.size()) {
      out.fail("size mismatch");
      continue;
    }
    for (std::size_t i = 0; i < got.size(); ++i) {
      if (got[i].item->id != want[i].first || got[i].distance != want[i].second) out.fail("neighbour mismatch");
    }
  }
  if (weight(0.1) != 10.0) out.fail("weight(0.1) != 10");
  if (weight(0.5) != 2.0) out.fail("weight(0.5) != 2");
  if (out.pass) out.detail = "200 random bases match brute force; weight(0.1)=10, weight(0.5)=2";
  return out;
}

// 9 ------------------------------------------------------------------------
Outcome explanation_templates() {
  Outcome out;
  const std::vector<int> rules = {2};
  const ValueSet intent = {ValueTag::autonomy};
  const ValueSet other = {ValueTag::wellbeing};
  const std::vector<std::pair<ExplanationKind, std::string>> expected = {
      {ExplanationKind::bend_accepted,
       "The action breaks the rules 2. However, this action in this context is considered desirable by experts. "
       "Since it increases autonomy values greatly, while not reducing the other values wellbeing by a considerable "
       "amount, and the outcome is within accepted risk levels, deemed accepted by the PSRB system."},
      {ExplanationKind::suppress_rejected_risk,
       "The action does not break any rules. However, this action in this context is considered undesirable by "
       "experts. Since the action outcomes introduce a high risk, deemed not accepted by the PSRB system."},
      {ExplanationKind::suppress_rejected_values,
       "The action does not break any rules. However, this action in this context is considered undesirable by "
       "experts. Since it decreases autonomy values by a considerable amount, the action is deemed unacceptable by "
       "the system"},
      {ExplanationKind::bend_rejected_risk,
       "The action breaks the rules 2. However, this action in this context is considered desirable by experts. "
       "Although the value tradeoff is satisfactory, the risk taken by the action is not acceptable to bend the rule."},
      {ExplanationKind::bend_rejected_values,
       "The action breaks the rules 2. However, this action in this context is considered desirable by experts. But, "
       "the PSRB system suggests that the value tradeoff is not satisfactory to bend the rule."},
      {ExplanationKind::suppress_declined,
       "The action does not break any rules. However, this action in this context is considered undesirable by "
       "experts. But, the PSRB system suggests that the value tradeoff is not satisfactory to bend the rule."},
  };
  for (const auto& [kind, text] : expected) {
    if (render_explanation(kind, rules, intent, other) != text) {
      out.fail("template " + std::string(to_string(kind)) + " differs");
    }
  }
  if (out.pass) out.detail = "6/6 templates byte-identical";
  return out;
}

// 10 -----------------------------------------------------------------------
Outcome determinism_and_replay() {
  Outcome out;
  std::size_t replayed = 0;
  std::vector<std::pair<Scenario, CharacterProfile>> runs;
  for (const auto& c : experiment_cases()) {
    for (const auto& p : fixtures::shipped_profiles()) runs.emplace_back(scenario_for(c), p);
  }
  Scenario taker = scenario_for(experiment_cases()[1]);
  taker.name = "taker";
  taker.resident.takes_medication = true;
  runs.emplace_back(taker, fixtures::profile("M_wr"));

  for (const auto& [scenario, profile] : runs) {
    for (RiskMode mode : {RiskMode::literal, RiskMode::harm}) {
      std::ostringstream a, b;
      const auto first = run_episode(scenario, profile, fixtures::seed_kb(), {mode});
      write_episode_jsonl(first, behaviour_id(first), a);
      const auto second = run_episode(scenario, profile, fixtures::seed_kb(), {mode});
      write_episode_jsonl(second, behaviour_id(second), b);
      if (a.str() != b.str()) out.fail(scenario.name + "/" + profile.name + " not byte-identical");

      std::istringstream in(a.str());
      for (const auto& item : read_logged_entries(in)) {
        ++replayed;
        if (evaluate(item.entry, profile, mode).value != item.logged_desirability) {
          out.fail(scenario.name + "/" + profile.name + " replay differs at step " + std::to_string(item.step));
        }
      }
    }
  }
  if (out.pass) {
    out.detail = std::to_string(runs.size() * 2) + " episodes byte-identical; " + std::to_string(replayed) +
                 " logged decisions replayed";
  }
  return out;
}

// 11 -----------------------------------------------------------------------
Outcome timing_rules() {
  Outcome out;
  const CharacterProfile& follower = fixtures::profile("M_a");

  // Default script, never escalates: window, inspection, lag and horizon.
  const auto log = run_episode(scenario_for(experiment_cases()[0]), follower, fixtures::seed_kb());
  if (log.steps.size() != static_cast<std::size_t>(kEpisodeHorizon) || log.terminal != Terminal::horizon_reached) {
    out.fail("horizon not reached at 29 steps");
  }
  int windows = 0, inspections = 0;
  for (std::size_t i = 0; i < log.steps.size(); ++i) {
    const auto& s = log.steps[i];
    if (i > 0 && s.step != log.steps[i - 1].step + 1) out.fail("step indices not consecutive");
    const bool reminded = i > 0 && (log.steps[i - 1].action.kind == BehaviourKind::remind ||
                                    log.steps[i - 1].action.kind == BehaviourKind::follow_up);
    if (reminded != (s.resident_event == ResidentEvent::snooze || s.resident_event == ResidentEvent::acknowledge)) {
      out.fail("response lag broken at step " + std::to_string(s.step));
    }
    auto phase_at = [&](std::size_t j) { return log.steps[j].context.phase; };
    if (s.resident_event == ResidentEvent::snooze) {
      ++windows;
      const std::size_t full = i + kSnoozeSteps + 1;
      for (std::size_t j = i + 1; j <= i + kSnoozeSteps && j < log.steps.size(); ++j) {
        if (phase_at(j) != DecisionPhase::snooze_window || log.steps[j].recommendation.blackboard.size() != 1) {
          out.fail("snooze window broken after step " + std::to_string(s.step));
        }
      }
      if (full < log.steps.size() && phase_at(full) != DecisionPhase::follow_up_due) {
        out.fail("window longer than 3 steps after step " + std::to_string(s.step));
      }
    }
    if (s.resident_event == ResidentEvent::acknowledge) {
      ++inspections;
      const std::size_t after = i + kInspectionSteps + 1;
      for (std::size_t j = i + 1; j <= i + kInspectionSteps && j < log.steps.size(); ++j) {
        if (phase_at(j) != DecisionPhase::inspecting) out.fail("inspection broken after step " + std::to_string(s.step));
      }
      if (after < log.steps.size() && phase_at(after) != DecisionPhase::breach) {
        out.fail("inspection not 2 steps after step " + std::to_string(s.step));
      }
    }
  }
  if (log.steps[1].resident_event != ResidentEvent::snooze) out.fail("no response at step 2");

  // Always-SNOOZE resident: candidate set grows exactly when f reaches 3.
  Scenario snoozer = scenario_for(experiment_cases()[0]);
  snoozer.resident.responses = {Instruction::snooze};
  const auto slog = run_episode(snoozer, follower, fixtures::seed_kb());
  int expansion_step = 0;
  for (const auto& s : slog.steps) {
    if (s.context.phase != DecisionPhase::follow_up_due) continue;
    const std::size_t n = s.recommendation.blackboard.size();
    if (s.context.f < 3 && n != 1) out.fail("early candidate expansion at f=" + std::to_string(s.context.f));
    if (s.context.f >= 3 && n != 3) out.fail("missing candidate expansion at f=" + std::to_string(s.context.f));
    if (s.context.f == 3 && expansion_step == 0) expansion_step = s.step;
  }
  if (expansion_step == 0) out.fail("f=3 never reached");

  if (out.pass) {
    out.detail = std::to_string(windows) + " snooze windows of 3, " + std::to_string(inspections) +
                 " inspections of 2, 1-step lag, expansion at step " + std::to_string(expansion_step) +
                 " (f=3), horizon 29";
  }
  return out;
}

// 12 -----------------------------------------------------------------------
Outcome risk_mode_discrimination() {
  Outcome out;
  // Case-1 record at a breach: eps=1, dose count d+1 = 1.
  DecisionContext case1 = fixtures::breach_context(1, 0, 3);
  const GammaSpec record_spec = wellbeing_utility({BehaviourKind::record, std::nullopt}, case1).second;
  const double record_risk = oracle::harm_risk(record_spec.alpha, record_spec.beta);
  if (std::abs(behaviour_risk(record_spec, RiskMode::harm) - record_risk) > 1e-9) out.fail("risk differs from scan");

  const double high = risk_threshold(10.0);
  const double low = risk_threshold(1.0);
  if (!(record_risk < high)) {
    out.fail(fmt("case-1 record harm risk %.4f is not below the highest threshold %.4f", record_risk, high));
  }
  if (!(record_risk > low)) out.fail(fmt("case-1 record harm risk %.4f not above %.4f", record_risk, low));

  double min_eps3 = 1e300;
  for (int d : {0, 2}) {
    DecisionContext c3 = fixtures::breach_context(3, d, 1);
    for (BehaviourKind k : {BehaviourKind::follow_up, BehaviourKind::record}) {
      const GammaSpec s = wellbeing_utility({k, std::nullopt}, c3).second;
      min_eps3 = std::min(min_eps3, oracle::harm_risk(s.alpha, s.beta));
    }
  }
  if (!(min_eps3 > high)) out.fail(fmt("eps=3 harm risk %.4f does not exceed %.4f", min_eps3, high));

  out.detail += (out.detail.empty() ? "" : "; ") +
                fmt("harm risk: case-1 record %.4f, eps=3 min %.4f; thresholds C_rp=1 %.4f", record_risk, min_eps3,
                    low) +
                fmt(", C_rp=10 %.4f", high);
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"experiment grid reproduction", experiment_grid},
      {"autonomy utility exactness", autonomy_lattice},
      {"wellbeing density fidelity", gamma_fidelity},
      {"shape and scale formulas", shape_scale},
      {"most probable utility", most_probable_utility},
      {"evaluator thresholds", threshold_formulas},
      {"evaluator branch properties", evaluator_properties},
      {"nearest-neighbour oracle equivalence", knn_equivalence},
      {"explanation fidelity", explanation_templates},
      {"determinism and replay", determinism_and_replay},
      {"timing rules", timing_rules},
      {"risk-mode discrimination", risk_mode_discrimination},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failed;
    std::printf("%s criterion %2zu: %s -- %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}
