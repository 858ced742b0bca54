#include "psrb/config_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace psrb {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json parse_document(const std::string& text, std::string_view what) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw ConfigError(std::string(what) + ": " + e.what());
  }
  if (!doc.is_object()) throw ConfigError(std::string(what) + ": top level must be an object");
  if (doc.value("format_version", 0) != kConfigFormatVersion) {
    throw ConfigError(std::string(what) + ": format_version must be " + std::to_string(kConfigFormatVersion));
  }
  return doc;
}

template <typename Fn>
auto with_context(std::string_view what, Fn&& fn) {
  try {
    return fn();
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(std::string(what) + ": " + e.what());
  }
}

std::optional<Instruction> optional_instruction(const ordered_json& obj, const char* key) {
  if (!obj.contains(key) || obj.at(key).is_null()) return std::nullopt;
  return parse_instruction(obj.at(key).get<std::string>());
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path, std::string_view what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(std::string(what) + " not found: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<CharacterProfile> parse_profiles(const std::string& text) {
  const auto doc = parse_document(text, "profiles");
  return with_context("profiles", [&] {
    std::vector<CharacterProfile> out;
    std::set<std::string> names;
    for (const auto& item : doc.at("profiles")) {
      CharacterProfile p;
      p.name = item.at("name").get<std::string>();
      p.c_w = item.at("c_w").get<double>();
      p.c_au = item.at("c_au").get<double>();
      p.c_rp = item.at("c_rp").get<double>();
      for (const auto& v : item.value("precedence", ordered_json::array())) {
        p.precedence.insert(parse_value_tag(v.get<std::string>()));
      }
      if (p.name.empty()) throw ConfigError("profiles: profile name must not be empty");
      if (!names.insert(p.name).second) throw ConfigError("profiles: duplicate profile '" + p.name + "'");
      if (auto v = validate_profile(p); !v) throw ConfigError("profiles: '" + p.name + "': " + v.errors.front());
      out.push_back(std::move(p));
    }
    if (out.empty()) throw ConfigError("profiles: no profiles defined");
    return out;
  });
}

std::vector<CharacterProfile> load_profiles(const std::filesystem::path& path) {
  return parse_profiles(read_text_file(path, "profiles file"));
}

std::string dump_profiles(const std::vector<CharacterProfile>& profiles) {
  ordered_json doc;
  doc["format_version"] = kConfigFormatVersion;
  ordered_json list = ordered_json::array();
  for (const auto& p : profiles) {
    ordered_json item;
    item["name"] = p.name;
    item["c_w"] = p.c_w;
    item["c_au"] = p.c_au;
    item["c_rp"] = p.c_rp;
    ordered_json prec = ordered_json::array();
    for (ValueTag v : kAllValues) {
      if (p.precedence.contains(v)) prec.push_back(std::string(to_string(v)));
    }
    item["precedence"] = std::move(prec);
    list.push_back(std::move(item));
  }
  doc["profiles"] = std::move(list);
  return doc.dump(2) + "\n";
}

const CharacterProfile& find_profile(const std::vector<CharacterProfile>& profiles, std::string_view name) {
  for (const auto& p : profiles) {
    if (p.name == name) return p;
  }
  throw ConfigError("unknown profile '" + std::string(name) + "'");
}

Scenario parse_scenario(const std::string& text) {
  const auto doc = parse_document(text, "scenario");
  return with_context("scenario", [&] {
    Scenario s;
    s.name = doc.value("name", std::string{});
    s.epsilon_m = doc.at("epsilon_m").get<int>();
    s.d = doc.at("d").get<int>();
    s.horizon = doc.value("horizon", kEpisodeHorizon);
    if (doc.contains("resident")) {
      const auto& r = doc.at("resident");
      if (r.contains("responses")) {
        s.resident.responses.clear();
        for (const auto& v : r.at("responses")) s.resident.responses.push_back(parse_instruction(v.get<std::string>()));
      }
      s.resident.takes_medication = r.value("takes_medication", false);
    }
    if (auto v = validate_scenario(s); !v) throw ConfigError("scenario: " + v.errors.front());
    return s;
  });
}

Scenario load_scenario(const std::filesystem::path& path) {
  return parse_scenario(read_text_file(path, "scenario file"));
}

std::string dump_scenario(const Scenario& s) {
  ordered_json doc;
  doc["format_version"] = kConfigFormatVersion;
  doc["name"] = s.name;
  doc["epsilon_m"] = s.epsilon_m;
  doc["d"] = s.d;
  doc["horizon"] = s.horizon;
  ordered_json responses = ordered_json::array();
  for (Instruction i : s.resident.responses) responses.push_back(std::string(to_string(i)));
  doc["resident"] = {{"responses", std::move(responses)}, {"takes_medication", s.resident.takes_medication}};
  return doc.dump(2) + "\n";
}

TraceQuery parse_trace_query(const std::string& text) {
  const auto doc = parse_document(text, "query");
  return with_context("query", [&] {
    TraceQuery q;
    const auto& c = doc.at("context");
    q.context.epsilon_m = c.at("epsilon_m").get<int>();
    q.context.d = c.at("d").get<int>();
    q.context.f = c.at("f").get<int>();
    q.context.reminder_state = parse_reminder_state(c.at("reminder_state").get<std::string>());
    q.context.last_instruction = optional_instruction(c, "pending");
    q.context.instruction_pending = q.context.last_instruction.has_value();
    q.context.acknowledged_without_taking = c.value("acknowledged_without_taking", false);
    if (q.context.acknowledged_without_taking && !q.context.last_instruction) {
      q.context.last_instruction = Instruction::acknowledge;
    }
    q.behaviour.kind = parse_behaviour_kind(doc.at("behaviour").get<std::string>());
    q.behaviour.obeys = optional_instruction(doc, "obeys");
    if (auto v = validate_context(q.context); !v) throw ConfigError("query: " + v.errors.front());
    return q;
  });
}

TraceQuery load_trace_query(const std::filesystem::path& path) {
  return parse_trace_query(read_text_file(path, "query file"));
}

}  // namespace psrb
