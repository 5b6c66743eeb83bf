#pragma once

#include <vector>

#include "initialization.hpp"
#include "practice_model.hpp"
#include "rng.hpp"
#include "scenario.hpp"
#include "world.hpp"

namespace sopra {

/// Samples `config.agent_count` agents with independent competences, value
/// adherence and practice graphs. Agents start in their assigned office;
/// the `seed_informed` lowest ids know the rumour.
inline std::vector<Agent> build_population(const ScenarioConfig& config, const Catalogue& cat, const World& world,
                                           Rng& rng) {
  if (config.agent_count < 1) throw ConstraintError("scenario.agent_count must be >= 1");
  if (world.population() != static_cast<std::size_t>(config.agent_count))
    throw ConstraintError("layout population does not match scenario.agent_count");
  const auto& freq = config.frequencies;
  const std::size_t n_act = cat.activities().size();
  const std::size_t n_val = cat.values().size();
  const auto factor = config.value_correlation.cholesky();

  ActivitySet everything;
  for (const auto& a : cat.activities()) everything.insert(a.id);

  std::vector<Agent> agents;
  agents.reserve(static_cast<std::size_t>(config.agent_count));
  for (std::uint32_t i = 0; i < static_cast<std::uint32_t>(config.agent_count); ++i) {
    Agent a;
    a.id = AgentId{i};
    a.office = world.office_of(a.id);
    a.coffee_place = world.coffee_place_of(a.id);
    a.location = office_at(a.office);
    a.position = world.layout().offices[a.office].position;
    a.competences = sample_competences(rng, freq.agent_competence_prob, cat.competences().size());
    a.practice.required_competence = sample_required_competences(rng, freq, n_act);
    a.value_adherence =
        sample_value_adherence(rng, factor, config.value_correlation.dimension(), config.value_mean, config.value_sd);
    a.practice.related_value =
        sample_related_values(rng, freq, n_act, n_val, config.related_value_mean, config.related_value_sd);
    a.practice.habitual_trigger = sample_habit_strengths(rng, freq, world.elements(), n_act, config.habit_log_mean,
                                                         config.habit_log_sd, world.agent_element(a.id));
    a.practice.knowledge = everything;
    a.informed = static_cast<int>(i) < config.seed_informed;
    agents.push_back(std::move(a));
  }
  return agents;
}

}  // namespace sopra
