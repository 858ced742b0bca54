#pragma once

// Stakeholder utilities for the resident: autonomy (piecewise constant in the
// behaviour) and wellbeing (most probable value of a shifted Gamma density).

#include <utility>

#include "psrb/model.hpp"

namespace psrb {

inline constexpr int kGridPoints = 41;
inline constexpr double kGammaLocation = -1.0;
inline constexpr double kGridResolution = 0.05;

/// Utility grid {-1.0, -0.95, ..., 1.0}. Points are i/20 - 1 computed as
/// (i - 20) / 20 so each one is the correctly rounded decimal value.
constexpr double grid_point(int index) noexcept { return static_cast<double>(index - 20) / 20.0; }

enum class RiskMode : std::uint8_t {
  literal,  // max over the full grid of g(x) * x
  harm,     // max over x < 0 of g(x) * |x|
};

std::string_view to_string(RiskMode mode);
RiskMode parse_risk_mode(std::string_view text);

double autonomy_utility(const Behaviour& behaviour, const DecisionContext& ctx);

/// Shape of the wellbeing density; epsilon_m must be 1, 2 or 3.
double shape_param(int epsilon_m);

/// Scale of the wellbeing density for a (possibly fractional) missed-dose count.
double scale_param(double dose_count);

GammaSpec make_gamma_spec(int epsilon_m, double dose_count);

double gamma_pdf(double x, const GammaSpec& spec);

/// Grid argmax of the density; ties resolve toward the larger x.
double pmax_util(const GammaSpec& spec);

/// Missed-dose count at which the behaviour's wellbeing density is taken.
double wellbeing_dose_count(const Behaviour& behaviour, const DecisionContext& ctx);

std::pair<double, GammaSpec> wellbeing_utility(const Behaviour& behaviour, const DecisionContext& ctx);

double behaviour_risk(const GammaSpec& spec, RiskMode mode = RiskMode::literal);

}  // namespace psrb
