#include "psrb/case_kb.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "psrb/utility.hpp"

namespace psrb {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::string_view kFormatName = "psrb-case-base";
constexpr int kFormatVersion = 1;

double one_hot(bool hit) { return hit ? 1.0 : 0.0; }

// Keeps only the fields a case actually describes so that save/load round-trips.
DecisionContext normalise_context(const DecisionContext& ctx) {
  DecisionContext out;
  out.epsilon_m = ctx.epsilon_m;
  out.d = ctx.d;
  out.f = ctx.f;
  out.reminder_state = ctx.reminder_state;
  out.instruction_pending = ctx.pending_instruction().has_value();
  out.last_instruction = ctx.pending_instruction();
  out.acknowledged_without_taking = ctx.acknowledged_without_taking;
  if (out.acknowledged_without_taking && !out.last_instruction) {
    out.last_instruction = Instruction::acknowledge;
  }
  return out;
}

std::optional<Instruction> optional_instruction(const ordered_json& value) {
  if (value.is_null()) return std::nullopt;
  return parse_instruction(value.get<std::string>());
}

ordered_json instruction_json(std::optional<Instruction> instruction) {
  if (!instruction) return nullptr;
  return std::string(to_string(*instruction));
}

Case case_from_json(const ordered_json& record) {
  DecisionContext ctx;
  ctx.epsilon_m = record.at("epsilon_m").get<int>();
  ctx.d = record.at("d").get<int>();
  ctx.f = record.at("f").get<int>();
  ctx.reminder_state = parse_reminder_state(record.at("reminder_state").get<std::string>());
  ctx.last_instruction = optional_instruction(record.at("pending"));
  ctx.instruction_pending = ctx.last_instruction.has_value();
  ctx.acknowledged_without_taking = record.at("acknowledged_without_taking").get<bool>();

  Behaviour behaviour{.kind = parse_behaviour_kind(record.at("behaviour").get<std::string>()),
                      .obeys = optional_instruction(record.at("obeys"))};

  ValueSet intention;
  for (const auto& tag : record.at("intention")) intention.insert(parse_value_tag(tag.get<std::string>()));

  return make_case(record.at("id").get<std::string>(), ctx, behaviour,
                   record.at("acceptability").get<double>(), std::move(intention),
                   record.value("note", std::string{}));
}

ordered_json case_to_json(const Case& c) {
  ordered_json record;
  record["id"] = c.id;
  record["epsilon_m"] = c.context.epsilon_m;
  record["d"] = c.context.d;
  record["f"] = c.context.f;
  record["reminder_state"] = std::string(to_string(c.context.reminder_state));
  record["pending"] = instruction_json(c.context.pending_instruction());
  record["acknowledged_without_taking"] = c.context.acknowledged_without_taking;
  record["behaviour"] = std::string(to_string(c.behaviour.kind));
  record["obeys"] = instruction_json(c.behaviour.obeys);
  record["acceptability"] = c.acceptability;
  ordered_json tags = ordered_json::array();
  for (ValueTag v : kAllValues) {
    if (c.intention.contains(v)) tags.push_back(std::string(to_string(v)));
  }
  record["intention"] = std::move(tags);
  if (!c.note.empty()) record["note"] = c.note;
  return record;
}

void check_header(const ordered_json& header) {
  if (header.value("format", std::string{}) != kFormatName) {
    throw std::invalid_argument("header format must be \"" + std::string(kFormatName) + "\"");
  }
  if (header.value("version", 0) != kFormatVersion) {
    throw std::invalid_argument("unsupported case-base version");
  }
  const auto& manifest = header.at("manifest");
  if (!manifest.is_array() || manifest.size() != kFeatureDims) {
    throw std::invalid_argument("feature manifest must list " + std::to_string(kFeatureDims) + " dimensions");
  }
  for (std::size_t i = 0; i < kFeatureDims; ++i) {
    if (manifest[i].get<std::string>() != kFeatureManifest[i]) {
      throw std::invalid_argument("feature manifest mismatch at dimension " + std::to_string(i) + ": expected '" +
                                  std::string(kFeatureManifest[i]) + "'");
    }
  }
}

}  // namespace

FeatureVector make_features(const DecisionContext& ctx, const Behaviour& behaviour,
                            double autonomy_utility, double wellbeing_utility) {
  FeatureVector v;
  v.reserve(kFeatureDims);
  v.push_back(ctx.epsilon_m / 3.0);
  v.push_back(std::min(ctx.d, 4) / 4.0);
  v.push_back(std::min(ctx.f, 6) / 6.0);
  for (ReminderState s : kAllReminderStates) v.push_back(one_hot(ctx.reminder_state == s));
  const auto pending = ctx.pending_instruction();
  v.push_back(one_hot(!pending));
  v.push_back(one_hot(pending == Instruction::snooze));
  v.push_back(one_hot(pending == Instruction::acknowledge));
  v.push_back(one_hot(ctx.acknowledged_without_taking));
  for (BehaviourKind k : kAllBehaviourKinds) v.push_back(one_hot(behaviour.kind == k));
  v.push_back(autonomy_utility);
  v.push_back(wellbeing_utility);
  return v;
}

double distance(const FeatureVector& a, const FeatureVector& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("feature dimension mismatch: " + std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()));
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double diff = a[i] - b[i];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

double weight(double distance) {
  return distance <= kNearExactDistance ? kNearExactWeight : 1.0 / distance;
}

Case make_case(std::string id, const DecisionContext& ctx, const Behaviour& behaviour,
               double acceptability, ValueSet intention, std::string note) {
  Case c;
  c.id = std::move(id);
  c.context = normalise_context(ctx);
  c.behaviour = behaviour;
  const double au = autonomy_utility(behaviour, c.context);
  const double w = wellbeing_utility(behaviour, c.context).first;
  c.features = make_features(c.context, behaviour, au, w);
  c.acceptability = acceptability;
  c.intention = std::move(intention);
  c.note = std::move(note);
  return c;
}

void CaseBase::add_case(Case c) {
  if (c.id.empty()) throw CaseBaseError("case id must not be empty");
  if (find(c.id) != nullptr) throw CaseBaseError("duplicate case id '" + c.id + "'");
  if (c.intention.empty()) throw CaseBaseError("case '" + c.id + "' has an empty intention");
  if (!(c.acceptability >= 0.0 && c.acceptability <= 1.0)) {
    throw CaseBaseError("case '" + c.id + "' acceptability out of [0,1]");
  }
  if (c.features.size() != kFeatureDims) {
    throw CaseBaseError("case '" + c.id + "' has " + std::to_string(c.features.size()) + " features, expected " +
                        std::to_string(kFeatureDims));
  }
  cases_.push_back(std::move(c));
}

const Case* CaseBase::find(std::string_view id) const {
  auto it = std::find_if(cases_.begin(), cases_.end(), [&](const Case& c) { return c.id == id; });
  return it == cases_.end() ? nullptr : &*it;
}

std::vector<Neighbour> CaseBase::retrieve(const FeatureVector& query, int k) const {
  std::vector<Neighbour> all;
  all.reserve(cases_.size());
  for (const Case& c : cases_) all.push_back({&c, distance(c.features, query)});
  const auto take = std::min<std::size_t>(static_cast<std::size_t>(std::max(k, 0)), all.size());
  std::partial_sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(take), all.end(),
                    [](const Neighbour& a, const Neighbour& b) {
                      if (a.distance != b.distance) return a.distance < b.distance;
                      return a.item->id < b.item->id;
                    });
  all.resize(take);
  return all;
}

std::optional<Opinion> CaseBase::query(const FeatureVector& q, int k) const {
  if (cases_.empty()) return std::nullopt;
  return aggregate_opinion(retrieve(q, k));
}

Opinion aggregate_opinion(const std::vector<Neighbour>& neighbours) {
  if (neighbours.empty()) throw std::invalid_argument("aggregate_opinion needs at least one neighbour");
  Opinion op;
  double weighted = 0.0;
  double total = 0.0;
  for (const Neighbour& n : neighbours) {
    const double w = weight(n.distance);
    weighted += w * n.item->acceptability;
    total += w;
    op.trace.push_back({n.item->id, n.distance, w});
  }
  op.score = weighted / total;
  op.acceptable = op.score >= 0.5;
  for (const Neighbour& n : neighbours) {
    if ((n.item->acceptability >= 0.5) == op.acceptable) {
      op.intentions.insert(n.item->intention.begin(), n.item->intention.end());
    }
  }
  return op;
}

CaseBase load_case_base(std::istream& in) {
  CaseBase kb;
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const auto record = ordered_json::parse(line);
      if (!header_seen) {
        check_header(record);
        header_seen = true;
      } else {
        kb.add_case(case_from_json(record));
      }
    } catch (const std::exception& e) {
      throw CaseBaseError("case base line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!header_seen) throw CaseBaseError("case base has no header record");
  return kb;
}

CaseBase load_case_base(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CaseBaseError("case base not found: " + path.string());
  return load_case_base(in);
}

void save_case_base(const CaseBase& kb, std::ostream& out) {
  ordered_json header;
  header["format"] = kFormatName;
  header["version"] = kFormatVersion;
  ordered_json manifest = ordered_json::array();
  for (auto name : kFeatureManifest) manifest.push_back(name);
  header["manifest"] = std::move(manifest);
  out << header.dump() << '\n';
  for (const Case& c : kb.cases()) out << case_to_json(c).dump() << '\n';
}

void save_case_base(const CaseBase& kb, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw CaseBaseError("cannot write case base: " + path.string());
  save_case_base(kb, out);
}

}  // namespace psrb
