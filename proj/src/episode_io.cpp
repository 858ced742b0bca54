#include "psrb/episode_io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace psrb {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json instruction_json(std::optional<Instruction> i) {
  if (!i) return nullptr;
  return std::string(to_string(*i));
}

ordered_json values_json(const ValueSet& values) {
  ordered_json out = ordered_json::array();
  for (ValueTag v : kAllValues) {
    if (values.contains(v)) out.push_back(std::string(to_string(v)));
  }
  return out;
}

ordered_json context_json(const DecisionContext& c) {
  return {{"epsilon_m", c.epsilon_m},
          {"d", c.d},
          {"f", c.f},
          {"reminder_state", std::string(to_string(c.reminder_state))},
          {"last_instruction", instruction_json(c.last_instruction)},
          {"pending", instruction_json(c.pending_instruction())},
          {"acknowledged_without_taking", c.acknowledged_without_taking},
          {"phase", std::string(to_string(c.phase))}};
}

ordered_json opinion_json(const Opinion& op) {
  ordered_json trace = ordered_json::array();
  for (const auto& t : op.trace) trace.push_back({{"id", t.case_id}, {"distance", t.distance}, {"weight", t.weight}});
  return {{"acceptable", op.acceptable},
          {"score", op.score},
          {"intentions", values_json(op.intentions)},
          {"no_knowledge", op.no_knowledge},
          {"trace", std::move(trace)}};
}

ordered_json candidate_json(const BlackboardEntry& e, const Desirability& d) {
  const GammaSpec& g = *e.wellbeing_distribution;
  ordered_json out;
  out["behaviour"] = std::string(to_string(e.behaviour.kind));
  out["obeys"] = instruction_json(e.behaviour.obeys);
  out["violated_rules"] = e.rule_verdict->violated_rule_ids;
  out["Au"] = *e.autonomy_utility;
  out["W"] = *e.wellbeing_utility;
  out["gamma"] = {{"alpha", g.alpha}, {"beta", g.beta}, {"v", g.v}, {"resolution", g.grid_resolution}};
  out["kb"] = opinion_json(*e.kb_opinion);
  out["risk"] = *e.risk;
  out["D"] = *e.desirability;
  out["branch"] = std::string(to_string(*e.branch));
  out["explanation_kind"] = d.explanation_kind ? ordered_json(std::string(to_string(*d.explanation_kind))) : nullptr;
  out["explanation"] = e.explanation;
  return out;
}

std::string labels(const std::vector<Behaviour>& behaviours) {
  std::string out;
  for (const auto& b : behaviours) {
    if (!out.empty()) out += ",";
    out += b.label();
  }
  return out;
}

std::string number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

std::optional<Instruction> read_instruction(const ordered_json& j) {
  if (j.is_null()) return std::nullopt;
  return parse_instruction(j.get<std::string>());
}

}  // namespace

void write_episode_jsonl(const EpisodeLog& log, int behaviour_class, std::ostream& out) {
  for (const StepRecord& s : log.steps) {
    ordered_json rec;
    rec["type"] = "step";
    rec["step"] = s.step;
    rec["resident"] = std::string(to_string(s.resident_event));
    rec["context"] = context_json(s.context);
    ordered_json candidates = ordered_json::array();
    const auto& entries = s.recommendation.blackboard.entries();
    for (std::size_t i = 0; i < entries.size(); ++i) {
      candidates.push_back(candidate_json(entries[i], s.recommendation.outcomes.at(i)));
    }
    rec["candidates"] = std::move(candidates);
    ordered_json recommended = ordered_json::array();
    for (const auto& b : s.recommendation.desirable) recommended.push_back(b.label());
    rec["recommended"] = std::move(recommended);
    rec["fallback"] = s.recommendation.fallback;
    rec["action"] = s.action.label();
    rec["robot_phase"] = std::string(to_string(s.robot_phase_after));
    out << rec.dump() << '\n';
  }
  ordered_json summary;
  summary["type"] = "summary";
  summary["scenario"] = log.scenario.name;
  summary["epsilon_m"] = log.scenario.epsilon_m;
  summary["d"] = log.scenario.d;
  summary["profile"] = {{"name", log.profile.name},
                        {"c_w", log.profile.c_w},
                        {"c_au", log.profile.c_au},
                        {"c_rp", log.profile.c_rp}};
  summary["risk_mode"] = std::string(to_string(log.risk_mode));
  summary["steps"] = log.steps.size();
  summary["terminal"] = std::string(to_string(log.terminal));
  summary["behaviour_id"] = behaviour_class;
  summary["signature"] = behaviour_signature(log);
  out << summary.dump() << '\n';
}

void write_utility_csv(const EpisodeLog& log, std::ostream& out) {
  out << "step,behavior,Au,W,risk,D\n";
  for (const StepRecord& s : log.steps) {
    for (const auto& e : s.recommendation.blackboard.entries()) {
      out << s.step << ',' << e.behaviour.label() << ',' << number(*e.autonomy_utility) << ','
          << number(*e.wellbeing_utility) << ',' << number(*e.risk) << ',' << *e.desirability << '\n';
    }
  }
}

void write_timeline(const EpisodeLog& log, std::ostream& out) {
  char line[256];
  std::snprintf(line, sizeof line, "%-4s | %-15s | %-36s | %s\n", "step", "HB", "RB", "EGR");
  out << line;
  for (const StepRecord& s : log.steps) {
    const std::string hb = s.resident_event == ResidentEvent::none ? "-" : std::string(to_string(s.resident_event));
    std::string egr = labels(s.recommendation.desirable);
    if (s.recommendation.fallback) egr += " (fallback)";
    std::snprintf(line, sizeof line, "%-4d | %-15s | %-36s | %s\n", s.step, hb.c_str(), s.action.label().c_str(),
                  egr.c_str());
    out << line;
  }
  out << "terminal: " << to_string(log.terminal) << '\n';
}

std::vector<LoggedEntry> read_logged_entries(std::istream& in) {
  std::vector<LoggedEntry> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto rec = ordered_json::parse(line);
    if (rec.at("type") != "step") continue;
    for (const auto& c : rec.at("candidates")) {
      LoggedEntry item;
      item.step = rec.at("step").get<int>();
      BlackboardEntry& e = item.entry;
      e.behaviour.kind = parse_behaviour_kind(c.at("behaviour").get<std::string>());
      e.behaviour.obeys = read_instruction(c.at("obeys"));
      e.rule_verdict = RuleVerdict{c.at("violated_rules").get<std::vector<int>>()};
      e.autonomy_utility = c.at("Au").get<double>();
      e.wellbeing_utility = c.at("W").get<double>();
      const auto& g = c.at("gamma");
      e.wellbeing_distribution = GammaSpec{g.at("alpha").get<double>(), g.at("beta").get<double>(),
                                           g.at("v").get<double>(), g.at("resolution").get<double>()};
      const auto& kb = c.at("kb");
      Opinion op;
      op.acceptable = kb.at("acceptable").get<bool>();
      op.score = kb.at("score").get<double>();
      op.no_knowledge = kb.at("no_knowledge").get<bool>();
      for (const auto& v : kb.at("intentions")) op.intentions.insert(parse_value_tag(v.get<std::string>()));
      for (const auto& t : kb.at("trace")) {
        op.trace.push_back({t.at("id").get<std::string>(), t.at("distance").get<double>(),
                            t.at("weight").get<double>()});
      }
      e.kb_opinion = std::move(op);
      item.logged_desirability = c.at("D").get<int>();
      out.push_back(std::move(item));
    }
  }
  return out;
}

}  // namespace psrb
