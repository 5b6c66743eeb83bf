#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "correlation.hpp"
#include "error.hpp"
#include "initialization.hpp"
#include "layout.hpp"
#include "mobility.hpp"
#include "practice_model.hpp"

namespace sopra {

/// Every free parameter of a scenario. Defaults describe the 50-agent
/// faculty floor.
struct ScenarioConfig {
  // [scenario]
  int agent_count = 50;
  int seed_informed = 1;
  double p_transmit = 1.0;
  double habit_threshold = 0.8;
  double conversation_radius = 2.0;
  int days = 5;
  bool mutual_talk_required = false;
  std::uint64_t seed = 1;

  // [schedule]
  ScheduleParams schedule;

  // [frequencies]
  FrequencyTables frequencies = FrequencyTables::standard(Catalogue::standard());

  // [values]
  double value_mean = 0.5;
  double value_sd = 0.15;
  double related_value_mean = 0.5;
  double related_value_sd = 0.15;
  ValueCorrelationMatrix value_correlation = ValueCorrelationMatrix::circumplex();

  // [habits]
  double habit_log_mean = -1.5;
  double habit_log_sd = 0.8;

  // [layout]
  LayoutParams layout;

  int total_ticks() const noexcept { return days * schedule.day_length; }

  /// Throws ConstraintError naming the first offending key.
  void validate(const Catalogue& cat = Catalogue::standard()) const {
    auto prob = [](double v, const char* key) {
      if (!(v >= 0.0 && v <= 1.0)) throw ConstraintError(std::string(key) + " must be in [0,1]");
    };
    auto sd = [](double v, const char* key) {
      if (!(v >= 0.0) || !std::isfinite(v)) throw ConstraintError(std::string(key) + " must be >= 0");
    };
    auto finite = [](double v, const char* key) {
      if (!std::isfinite(v)) throw ConstraintError(std::string(key) + " must be finite");
    };
    if (agent_count < 1) throw ConstraintError("scenario.agent_count must be >= 1");
    if (seed_informed < 0 || seed_informed > agent_count)
      throw ConstraintError("scenario.seed_informed must be in [0, agent_count]");
    prob(p_transmit, "scenario.p_transmit");
    if (!(habit_threshold > 0.0 && habit_threshold <= 1.0)) throw ConstraintError("scenario.habit_threshold must be in (0,1]");
    if (!(conversation_radius >= 0.0) || !std::isfinite(conversation_radius))
      throw ConstraintError("scenario.conversation_radius must be >= 0");
    if (days < 1) throw ConstraintError("scenario.days must be >= 1");
    schedule.validate();
    frequencies.validate(cat);
    prob(value_mean, "values.mean");
    sd(value_sd, "values.sd");
    prob(related_value_mean, "values.related_mean");
    sd(related_value_sd, "values.related_sd");
    if (value_correlation.dimension() != cat.values().size())
      throw ConstraintError("values.correlation must be " + std::to_string(cat.values().size()) + "x" +
                            std::to_string(cat.values().size()));
    finite(habit_log_mean, "habits.log_mean");
    sd(habit_log_sd, "habits.log_sd");
    layout.validate();
  }

  bool operator==(const ScenarioConfig&) const = default;
};

}  // namespace sopra
