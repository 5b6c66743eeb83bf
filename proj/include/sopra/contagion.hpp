#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "error.hpp"
#include "ids.hpp"
#include "location.hpp"
#include "rng.hpp"

namespace sopra {

/// Who knows the rumour and since when.
class RumourState {
 public:
  explicit RumourState(std::size_t population) : informed_at_(population) {}

  std::size_t population() const noexcept { return informed_at_.size(); }
  std::size_t informed_count() const noexcept { return count_; }

  bool informed(AgentId a) const { return informed_at_.at(a.index()).has_value(); }
  std::optional<int> informed_at(AgentId a) const { return informed_at_.at(a.index()); }

  /// Knew the rumour before `tick` started. Agents told during a tick only
  /// pass it on from the next tick.
  bool informed_before(AgentId a, int tick) const {
    const auto& t = informed_at_.at(a.index());
    return t && *t < tick;
  }

  /// Marks an agent informed at `tick`; no effect if already informed.
  bool inform(AgentId a, int tick) {
    auto& t = informed_at_.at(a.index());
    if (t) return false;
    t = tick;
    ++count_;
    return true;
  }

 private:
  std::vector<std::optional<int>> informed_at_;
  std::size_t count_ = 0;
};

/// One rumourmongering enactment. Each uninformed listener learns the
/// rumour with probability p_transmit; nothing happens unless the speaker
/// knew it before this tick. Returns how many listeners were newly informed.
inline std::size_t transmit(RumourState& state, AgentId speaker, std::span<const AgentId> listeners, double p_transmit,
                            int tick, Rng& rng) {
  if (!state.informed_before(speaker, tick)) return 0;
  std::size_t told = 0;
  for (AgentId l : listeners) {
    if (l == speaker || state.informed(l)) continue;
    if (rng.bernoulli(p_transmit) && state.inform(l, tick)) ++told;
  }
  return told;
}

/// Counts for one resolved tick.
struct TickRecord {
  int tick = 0;
  std::size_t informed_count = 0;
  std::size_t rumour_acts = 0;
  std::size_t fact_acts = 0;
  std::array<std::size_t, kLocationKindCount> talk_by_location{};  // indexed by LocationKind

  bool operator==(const TickRecord&) const = default;
};

inline constexpr std::array<double, 3> kWatermarks{0.5, 0.9, 1.0};

/// Per-tick series for one run plus the first tick each informed fraction
/// in kWatermarks was reached.
struct MetricsTrace {
  std::size_t population = 0;
  std::vector<TickRecord> ticks;
  std::array<std::optional<int>, kWatermarks.size()> time_to_fraction{};

  std::optional<int> t50() const { return time_to_fraction[0]; }
  std::optional<int> t90() const { return time_to_fraction[1]; }
  std::optional<int> t100() const { return time_to_fraction[2]; }

  double final_informed_fraction() const {
    if (ticks.empty() || population == 0) return 0.0;
    return static_cast<double>(ticks.back().informed_count) / static_cast<double>(population);
  }

  bool operator==(const MetricsTrace&) const = default;
};

/// Appends a tick (informed count taken from `state`) and updates the
/// watermarks.
inline void record_tick(MetricsTrace& trace, TickRecord record, const RumourState& state) {
  if (trace.population == 0) trace.population = state.population();
  if (!trace.ticks.empty() && record.tick <= trace.ticks.back().tick)
    throw ConstraintError("ticks must be recorded in increasing order");
  record.informed_count = state.informed_count();
  const double fraction =
      static_cast<double>(record.informed_count) / static_cast<double>(std::max<std::size_t>(trace.population, 1));
  for (std::size_t i = 0; i < kWatermarks.size(); ++i)
    if (!trace.time_to_fraction[i] && fraction >= kWatermarks[i]) trace.time_to_fraction[i] = record.tick;
  trace.ticks.push_back(record);
}

}  // namespace sopra
