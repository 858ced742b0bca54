#include "psrb/utility.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace psrb {

std::string_view to_string(RiskMode mode) { return mode == RiskMode::literal ? "literal" : "harm"; }

RiskMode parse_risk_mode(std::string_view text) {
  if (text == "literal") return RiskMode::literal;
  if (text == "harm") return RiskMode::harm;
  throw std::invalid_argument("unknown risk mode '" + std::string(text) + "' (expected harm|literal)");
}

double autonomy_utility(const Behaviour& behaviour, const DecisionContext& ctx) {
  if (behaviour.obeys) return 1.0;
  switch (behaviour.kind) {
    case BehaviourKind::record: return 0.5;
    case BehaviourKind::follow_up: return -0.1 * ctx.f;
    case BehaviourKind::report: return -0.7;
    case BehaviourKind::remind:
    case BehaviourKind::snooze:
    case BehaviourKind::acknowledge_wait: return 0.0;
  }
  return 0.0;
}

double shape_param(int epsilon_m) {
  if (epsilon_m < 1 || epsilon_m > 3) {
    throw std::invalid_argument("epsilon_m must be 1, 2 or 3 (got " + std::to_string(epsilon_m) + ")");
  }
  const double e = epsilon_m;
  return 1.325 * e * e - 9.475 * e + 18.15;
}

double scale_param(double dose_count) { return std::exp(-2.65 - dose_count / 2.0) + 0.01; }

GammaSpec make_gamma_spec(int epsilon_m, double dose_count) {
  return GammaSpec{.alpha = shape_param(epsilon_m), .beta = scale_param(dose_count)};
}

double gamma_pdf(double x, const GammaSpec& spec) {
  if (x <= spec.v) return 0.0;
  const double z = (x - spec.v) / spec.beta;
  // log form keeps large shapes and tiny scales finite
  const double log_pdf = (spec.alpha - 1.0) * std::log(z) - z - std::log(spec.beta) - std::lgamma(spec.alpha);
  return std::exp(log_pdf);
}

double pmax_util(const GammaSpec& spec) {
  double best_x = grid_point(0);
  double best_density = -1.0;
  for (int i = 0; i < kGridPoints; ++i) {
    const double x = grid_point(i);
    const double density = gamma_pdf(x, spec);
    if (density >= best_density) {
      best_density = density;
      best_x = x;
    }
  }
  return best_x;
}

double wellbeing_dose_count(const Behaviour& behaviour, const DecisionContext& ctx) {
  const double d = ctx.d;
  const double f = ctx.f;
  switch (behaviour.kind) {
    case BehaviourKind::snooze: return d + f / 8.0;
    case BehaviourKind::follow_up: return d + f / 3.0;
    case BehaviourKind::remind: return d + f / 4.0;
    case BehaviourKind::record:
    case BehaviourKind::report:
    case BehaviourKind::acknowledge_wait: return d + 1.0;
  }
  return d + 1.0;
}

std::pair<double, GammaSpec> wellbeing_utility(const Behaviour& behaviour, const DecisionContext& ctx) {
  const GammaSpec spec = make_gamma_spec(ctx.epsilon_m, wellbeing_dose_count(behaviour, ctx));
  const double mode = pmax_util(spec);
  switch (behaviour.kind) {
    case BehaviourKind::snooze:
    case BehaviourKind::follow_up:
    case BehaviourKind::record: return {mode, spec};
    case BehaviourKind::remind: return {mode + 0.5, spec};
    case BehaviourKind::report:
    case BehaviourKind::acknowledge_wait: return {std::abs(mode), spec};
  }
  return {mode, spec};
}

double behaviour_risk(const GammaSpec& spec, RiskMode mode) {
  double highest = mode == RiskMode::harm ? 0.0 : -std::numeric_limits<double>::infinity();
  for (int i = 0; i < kGridPoints; ++i) {
    const double x = grid_point(i);
    if (mode == RiskMode::harm) {
      if (x >= 0.0) break;
      highest = std::max(highest, gamma_pdf(x, spec) * -x);
    } else {
      highest = std::max(highest, gamma_pdf(x, spec) * x);
    }
  }
  return highest;
}

}  // namespace psrb
