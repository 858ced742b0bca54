#pragma once

// JSON configuration files: character profiles, scenarios and single
// decision-context queries. Every file carries "format_version": 1.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "psrb/model.hpp"
#include "psrb/sim.hpp"

namespace psrb {

inline constexpr int kConfigFormatVersion = 1;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<CharacterProfile> parse_profiles(const std::string& text);
std::vector<CharacterProfile> load_profiles(const std::filesystem::path& path);
std::string dump_profiles(const std::vector<CharacterProfile>& profiles);

/// Throws ConfigError when no profile has the given name.
const CharacterProfile& find_profile(const std::vector<CharacterProfile>& profiles, std::string_view name);

Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::filesystem::path& path);
std::string dump_scenario(const Scenario& scenario);

struct TraceQuery {
  DecisionContext context;
  Behaviour behaviour;
};

TraceQuery parse_trace_query(const std::string& text);
TraceQuery load_trace_query(const std::filesystem::path& path);

/// Reads a whole file; throws ConfigError naming the path when it is missing.
std::string read_text_file(const std::filesystem::path& path, std::string_view what);

}  // namespace psrb
