#pragma once

// Expert case base with K-nearest-neighbour retrieval and weighted voting.

#include <array>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "psrb/model.hpp"

namespace psrb {

using FeatureVector = std::vector<double>;

inline constexpr std::array<std::string_view, 19> kFeatureManifest = {
    "epsilon_m/3",
    "min(d,4)/4",
    "min(f,6)/6",
    "reminder_state=issued",
    "reminder_state=snoozed",
    "reminder_state=ignored",
    "reminder_state=acknowledged",
    "pending=none",
    "pending=SNOOZE",
    "pending=ACKNOWLEDGE",
    "acknowledged_without_taking",
    "behaviour=remind",
    "behaviour=snooze",
    "behaviour=follow_up",
    "behaviour=record",
    "behaviour=report",
    "behaviour=acknowledge_wait",
    "autonomy_utility",
    "wellbeing_utility",
};

inline constexpr std::size_t kFeatureDims = kFeatureManifest.size();
inline constexpr int kDefaultNeighbours = 3;
inline constexpr double kNearExactDistance = 0.1;
inline constexpr double kNearExactWeight = 10.0;

FeatureVector make_features(const DecisionContext& ctx, const Behaviour& behaviour,
                            double autonomy_utility, double wellbeing_utility);

/// Euclidean distance; throws std::invalid_argument on a dimension mismatch.
double distance(const FeatureVector& a, const FeatureVector& b);

/// Voting weight: 10 within the near-exact radius, inverse distance beyond it.
double weight(double distance);

struct Case {
  std::string id;
  DecisionContext context;  // raw scenario fields as authored
  Behaviour behaviour;
  FeatureVector features;
  double acceptability = 0.0;
  ValueSet intention;
  std::string note;

  friend bool operator==(const Case&, const Case&) = default;
};

/// Builds a case whose features are derived from the raw fields.
Case make_case(std::string id, const DecisionContext& ctx, const Behaviour& behaviour,
               double acceptability, ValueSet intention, std::string note = {});

struct Neighbour {
  const Case* item = nullptr;
  double distance = 0.0;
};

class CaseBaseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CaseBase {
 public:
  CaseBase() = default;

  /// Throws CaseBaseError on duplicate id, empty intention, bad dimensionality
  /// or acceptability outside [0,1].
  void add_case(Case c);

  [[nodiscard]] const std::vector<Case>& cases() const noexcept { return cases_; }
  [[nodiscard]] std::size_t size() const noexcept { return cases_.size(); }
  [[nodiscard]] bool empty() const noexcept { return cases_.empty(); }
  [[nodiscard]] const Case* find(std::string_view id) const;

  /// Returns a copy without the cases whose ids satisfy the predicate.
  template <typename Pred>
  [[nodiscard]] CaseBase without(Pred&& drop) const {
    CaseBase out;
    for (const Case& c : cases_) {
      if (!drop(c)) out.cases_.push_back(c);
    }
    return out;
  }

  /// k nearest cases, ascending by distance then id. Empty when the base is empty.
  [[nodiscard]] std::vector<Neighbour> retrieve(const FeatureVector& query,
                                                int k = kDefaultNeighbours) const;

  /// nullopt signals "no knowledge" (empty base).
  [[nodiscard]] std::optional<Opinion> query(const FeatureVector& query,
                                             int k = kDefaultNeighbours) const;

 private:
  std::vector<Case> cases_;
};

/// Weighted vote over the neighbours; precondition: non-empty.
Opinion aggregate_opinion(const std::vector<Neighbour>& neighbours);

CaseBase load_case_base(std::istream& in);
CaseBase load_case_base(const std::filesystem::path& path);
void save_case_base(const CaseBase& kb, std::ostream& out);
void save_case_base(const CaseBase& kb, const std::filesystem::path& path);

}  // namespace psrb
