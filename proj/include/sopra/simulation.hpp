#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "contagion.hpp"
#include "decision.hpp"
#include "mobility.hpp"
#include "population.hpp"
#include "rng.hpp"
#include "scenario.hpp"
#include "world.hpp"

namespace sopra {

/// Tags for the random streams derived from a run seed.
namespace stream {
inline constexpr std::uint64_t kPopulation = 1;
inline constexpr std::uint64_t kSchedule = 2;
inline constexpr std::uint64_t kTransmission = 3;
}  // namespace stream

/// One replication. Tick 0 is the initial state (everyone in their office,
/// seeds informed); each step() resolves the next tick in two phases: move
/// every agent, then let every agent with company choose an activity and
/// apply rumour transmission in ascending speaker order.
class Simulation {
 public:
  Simulation(ScenarioConfig config, LayoutConfig layout, std::uint64_t seed,
             const Catalogue& cat = Catalogue::standard())
      : config_(validated(std::move(config), cat)),
        seed_(seed),
        world_(std::move(layout), static_cast<std::size_t>(config_.agent_count), config_.conversation_radius),
        rumour_(static_cast<std::size_t>(config_.agent_count)),
        transmission_rng_(derive_seed(seed, {stream::kTransmission})),
        rumour_id_(cat.find_activity("rumourmongering")),
        fact_id_(cat.find_activity("fact_talk")) {
    Rng pop_rng(derive_seed(seed, {stream::kPopulation}));
    world_.set_agents(build_population(config_, cat, world_, pop_rng));

    const std::size_t n = world_.population();
    candidates_.reserve(n);
    for (const auto& a : world_.agents()) {
      candidates_.push_back(candidate_activities(cat, a));
      if (a.informed) rumour_.inform(a.id, 0);
    }
    nearby_.resize(n);
    decisions_.resize(n);
    schedules_.resize(n);
    plan_day(0);
    for (const auto& a : world_.agents()) world_.place(a.id, step_location(a, schedules_[a.id.index()], 0));
    world_.settle();
    record_tick(trace_, TickRecord{0}, rumour_);
    next_tick_ = 1;
  }

  const ScenarioConfig& config() const noexcept { return config_; }
  const World& world() const noexcept { return world_; }
  const RumourState& rumour() const noexcept { return rumour_; }
  const MetricsTrace& trace() const noexcept { return trace_; }
  int next_tick() const noexcept { return next_tick_; }
  bool finished() const noexcept { return next_tick_ >= config_.total_ticks(); }
  const DailySchedule& schedule(AgentId a) const { return schedules_.at(a.index()); }

  /// Outcomes of the last resolved tick; empty for agents that did not talk.
  std::span<const std::optional<DecisionOutcome>> decisions() const noexcept { return decisions_; }

  void step() {
    const int t = next_tick_;
    const int day_length = config_.schedule.day_length;
    const int tod = t % day_length;
    if (tod == 0) plan_day(t / day_length);

    for (const auto& a : world_.agents()) world_.place(a.id, step_location(a, schedules_[a.id.index()], tod));
    world_.settle();

    TickRecord rec{t};
    for (const auto& a : world_.agents()) {
      const auto i = a.id.index();
      auto& near = nearby_[i];
      world_.nearby(a.id, near);
      decisions_[i].reset();
      const bool has_company =
          std::any_of(near.begin(), near.end(), [&](ElementId e) { return world_.is_agent_element(e); });
      if (!has_company) continue;
      decisions_[i] = decide_activity({a, near, candidates_[i], config_.habit_threshold});
      if (!decisions_[i]) continue;
      if (decisions_[i]->activity == rumour_id_) ++rec.rumour_acts;
      if (decisions_[i]->activity == fact_id_) ++rec.fact_acts;
      ++rec.talk_by_location[static_cast<std::size_t>(a.location.kind)];
    }

    if (rumour_id_) {
      for (const auto& a : world_.agents()) {
        const auto& d = decisions_[a.id.index()];
        if (!d || d->activity != *rumour_id_ || !rumour_.informed_before(a.id, t)) continue;
        listeners_.clear();
        for (ElementId e : nearby_[a.id.index()]) {
          const auto other = world_.agent_of(e);
          if (!other) continue;
          if (config_.mutual_talk_required && !decisions_[other->index()]) continue;
          listeners_.push_back(*other);
        }
        transmit(rumour_, a.id, listeners_, config_.p_transmit, t, transmission_rng_);
      }
    }
    for (auto& a : world_.agents()) a.informed = rumour_.informed(a.id);

    record_tick(trace_, rec, rumour_);
    ++next_tick_;
  }

  MetricsTrace run() {
    while (!finished()) step();
    return trace_;
  }

 private:
  static ScenarioConfig validated(ScenarioConfig c, const Catalogue& cat) {
    c.validate(cat);
    return c;
  }

  void plan_day(int day) {
    for (const auto& a : world_.agents()) {
      Rng rng(derive_seed(seed_, {stream::kSchedule, static_cast<std::uint64_t>(day), a.id.value}));
      schedules_[a.id.index()] = sopra::plan_day(rng, config_.schedule);
    }
  }

  ScenarioConfig config_;
  std::uint64_t seed_;
  World world_;
  RumourState rumour_;
  Rng transmission_rng_;
  std::optional<ActivityId> rumour_id_;
  std::optional<ActivityId> fact_id_;
  MetricsTrace trace_;
  int next_tick_ = 0;
  std::vector<std::vector<ActivityId>> candidates_;
  std::vector<std::vector<ElementId>> nearby_;
  std::vector<std::optional<DecisionOutcome>> decisions_;
  std::vector<DailySchedule> schedules_;
  std::vector<AgentId> listeners_;
};

/// Builds the population, plans schedules and steps every tick of the
/// configured days. Deterministic in (config, layout, seed).
inline MetricsTrace run_replication(const ScenarioConfig& config, const LayoutConfig& layout, std::uint64_t seed,
                                    const Catalogue& cat = Catalogue::standard()) {
  return Simulation(config, layout, seed, cat).run();
}

}  // namespace sopra
