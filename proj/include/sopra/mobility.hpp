#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "error.hpp"
#include "location.hpp"
#include "practice_model.hpp"
#include "rng.hpp"

namespace sopra {

/// Daily routine parameters, in ticks (one tick is one minute).
struct ScheduleParams {
  int day_length = 480;
  double lunch_mean = 240.0;
  double lunch_sd = 15.0;
  int lunch_dwell = 30;
  std::vector<double> coffee_means{120.0, 360.0};  // one entry per coffee trip
  double coffee_sd = 15.0;
  int coffee_dwell = 10;
  int hallway_transit = 2;

  int trip_length(int dwell) const noexcept { return 2 * hallway_transit + dwell; }

  void validate() const {
    if (day_length < 1) throw ConstraintError("schedule.day_length must be >= 1");
    if (hallway_transit < 1) throw ConstraintError("schedule.hallway_transit must be >= 1");
    if (lunch_dwell < 1) throw ConstraintError("schedule.lunch_dwell must be >= 1");
    if (coffee_dwell < 1) throw ConstraintError("schedule.coffee_dwell must be >= 1");
    if (!(lunch_sd >= 0.0) || !std::isfinite(lunch_sd)) throw ConstraintError("schedule.lunch_sd must be >= 0");
    if (!(coffee_sd >= 0.0) || !std::isfinite(coffee_sd)) throw ConstraintError("schedule.coffee_sd must be >= 0");
    if (!std::isfinite(lunch_mean)) throw ConstraintError("schedule.lunch_mean must be finite");
    for (double m : coffee_means)
      if (!std::isfinite(m)) throw ConstraintError("schedule.coffee_means must be finite");
    // A trip departs at tick >= 1 and is back in the office before the last tick.
    if (day_length < trip_length(std::max(lunch_dwell, coffee_dwell)) + 2)
      throw ConstraintError("schedule.day_length too short for the configured trips");
  }

  bool operator==(const ScheduleParams&) const = default;
};

enum class TripKind : std::uint8_t { Lunch, Coffee };

struct Trip {
  TripKind kind = TripKind::Lunch;
  int departure = 0;  // tick of day the agent steps into the hallway
  int dwell = 0;
  std::uint32_t index = 0;  // coffee trip number; 0 for lunch

  bool operator==(const Trip&) const = default;
};

struct DailySchedule {
  int lunch_departure = 0;  // sampled and clamped, kept even if the trip was dropped
  std::vector<Trip> trips;  // sorted, non-overlapping
  int hallway_transit = 2;

  bool operator==(const DailySchedule&) const = default;
};

/// Clamps a sampled departure so the whole trip (out, dwell, back) fits
/// between tick 1 and the day's last tick.
inline int clamp_departure(double sample, int trip_length, int day_length) {
  const int latest = day_length - 1 - trip_length;
  const double rounded = std::round(sample);
  if (!(rounded >= 1.0)) return 1;
  if (rounded >= latest) return latest;
  return static_cast<int>(rounded);
}

/// Samples one day of departures. Trips are sorted by departure (lunch
/// first on equal ticks) and greedily kept from the earliest, dropping any
/// that would leave before the previous kept trip is back in the office.
inline DailySchedule plan_day(Rng& rng, const ScheduleParams& p) {
  DailySchedule s;
  s.hallway_transit = p.hallway_transit;
  std::vector<Trip> all;
  s.lunch_departure = clamp_departure(rng.normal(p.lunch_mean, p.lunch_sd), p.trip_length(p.lunch_dwell), p.day_length);
  all.push_back({TripKind::Lunch, s.lunch_departure, p.lunch_dwell, 0});
  for (std::uint32_t i = 0; i < p.coffee_means.size(); ++i) {
    const int dep = clamp_departure(rng.normal(p.coffee_means[i], p.coffee_sd), p.trip_length(p.coffee_dwell), p.day_length);
    all.push_back({TripKind::Coffee, dep, p.coffee_dwell, i});
  }
  std::stable_sort(all.begin(), all.end(), [](const Trip& a, const Trip& b) {
    if (a.departure != b.departure) return a.departure < b.departure;
    return a.kind < b.kind;
  });
  int back_in_office = 0;
  for (const Trip& t : all) {
    if (t.departure <= back_in_office) continue;
    s.trips.push_back(t);
    back_in_office = t.departure + p.trip_length(t.dwell);
  }
  return s;
}

/// Location at `tick` of the day for an agent following `schedule`:
/// Office, then per trip Hallway (transit), destination (dwell), Hallway
/// (transit), Office.
inline LocationState step_location(std::uint32_t office, std::uint32_t coffee_place, const DailySchedule& schedule,
                                   int tick) {
  const int transit = schedule.hallway_transit;
  for (const Trip& t : schedule.trips) {
    const int out_end = t.departure + transit;
    const int dwell_end = out_end + t.dwell;
    const int back = dwell_end + transit;
    if (tick < t.departure) break;
    if (tick >= back) continue;
    if (tick < out_end) return {LocationKind::Hallway, 0, out_end - tick};
    if (tick < dwell_end) {
      if (t.kind == TripKind::Lunch) return {LocationKind::Restaurant, 0, dwell_end - tick};
      return {LocationKind::CoffeePlace, coffee_place, dwell_end - tick};
    }
    return {LocationKind::Hallway, 0, back - tick};
  }
  return office_at(office);
}

inline LocationState step_location(const Agent& agent, const DailySchedule& schedule, int tick) {
  return step_location(agent.office, agent.coffee_place, schedule, tick);
}

}  // namespace sopra
