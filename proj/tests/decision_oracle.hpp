#pragma once

#include <map>
#include <random>
#include <vector>

#include "test_support.hpp"

namespace sopra::testing {

// Element ids used by the hand-built contexts.
inline constexpr ElementId kHallway{0};
inline constexpr ElementId kRestaurant{1};
inline constexpr ElementId kAlice{2};
inline constexpr ElementId kOffice{3};

/// Bob as drawn in the worked instance: he links rumourmongering to
/// privacy, curiosity and social power, believes it needs networking and an
/// eye for juicy details, is triggered by the hallway, the restaurant and
/// Alice, masters networking only, and values ambition most and pleasure
/// least.
inline Agent bob() {
  Agent a = blank_agent();
  a.competences = {competence("network_skills")};
  a.practice.required_competence[rumour().index()] = {competence("network_skills"), competence("observing_skills")};
  auto& rv = a.practice.related_value;
  rv.set(rumour().index(), value("self_direction").index(), 0.7);  // privacy, curiosity
  rv.set(rumour().index(), value("power").index(), 0.6);           // social power
  auto& tr = a.practice.habitual_trigger;
  tr.set(kHallway.index(), rumour().index(), 0.5);
  tr.set(kRestaurant.index(), rumour().index(), 0.4);
  tr.set(kAlice.index(), rumour().index(), 0.9);
  a.value_adherence = {0.5, 0.6, 0.1, 0.9, 0.5, 0.4, 0.3};  // achievement highest, hedonism lowest
  return a;
}

inline const std::vector<ActivityId> kBoth{fact(), rumour()};

// -- randomized comparison against a naive re-evaluation ---------------------

/// Random contexts biased toward the interesting boundaries: strengths of
/// exactly 1.0 (habit ties), zero adherence (value ties), empty requirement
/// sets and single-candidate lists.
struct RandomContext {
  Agent agent;
  std::vector<ElementId> nearby;
  std::vector<ActivityId> candidates;
  double threshold;
};

inline RandomContext random_context(std::mt19937_64& gen) {
  constexpr std::size_t kElements = 6;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto coin = [&](double p) { return u(gen) < p; };
  RandomContext c{blank_agent(kElements), {}, {}, 0.0};
  Agent& a = c.agent;
  for (std::uint32_t k = 0; k < 8; ++k)
    if (coin(0.5)) a.competences.insert(CompetenceId{k});
  for (ActivityId act : kBoth) {
    for (std::uint32_t k = 0; k < 8; ++k)
      if (coin(0.15)) a.practice.required_competence[act.index()].insert(CompetenceId{k});
    for (std::size_t e = 0; e < kElements; ++e)
      if (coin(0.6)) a.practice.habitual_trigger.set(e, act.index(), coin(0.25) ? 1.0 : u(gen));
    for (std::size_t v = 0; v < 7; ++v)
      if (coin(0.5)) a.practice.related_value.set(act.index(), v, coin(0.1) ? 0.5 : u(gen));
  }
  for (auto& w : a.value_adherence) w = coin(0.2) ? 0.0 : u(gen);
  for (std::uint32_t e = 0; e < kElements; ++e)
    if (coin(0.5)) c.nearby.push_back(ElementId{e});
  const double pick = u(gen);
  c.candidates = pick < 0.8 ? kBoth : pick < 0.9 ? std::vector<ActivityId>{fact()} : std::vector<ActivityId>{rumour()};
  c.threshold = coin(0.3) ? 1.0 : 0.05 + 0.95 * u(gen);
  return c;
}

inline DecisionOutcome naive_decide(const RandomContext& c) {
  const Agent& a = c.agent;
  std::vector<ActivityId> feasible;
  for (ActivityId act : c.candidates) {
    bool ok = true;
    for (std::uint32_t k = 0; k < 32; ++k)
      if (a.practice.required_competence[act.index()].contains(CompetenceId{k}) && !a.competences.contains(CompetenceId{k}))
        ok = false;
    if (ok) feasible.push_back(act);
  }
  if (feasible.size() == 1) return {feasible[0], DecisionStage::Competence};

  std::map<ActivityId, double> strength;
  for (ActivityId act : c.candidates) {
    strength[act] = 0.0;
    for (ElementId e : c.nearby)
      if (auto w = a.practice.habitual_trigger.find(e.index(), act.index())) strength[act] = std::max(strength[act], *w);
  }
  double top = -1;
  for (const auto& [act, s] : strength) top = std::max(top, s);
  std::vector<ActivityId> at_top;
  for (const auto& [act, s] : strength)
    if (s == top) at_top.push_back(act);
  if (top >= c.threshold && at_top.size() == 1) return {at_top[0], DecisionStage::Habit};

  std::map<ActivityId, double> score;
  for (ActivityId act : c.candidates) {
    score[act] = 0.0;
    for (std::size_t v = 0; v < 7; ++v)
      score[act] += a.value_adherence[v] * a.practice.related_value.find(act.index(), v).value_or(0.0);
  }
  ActivityId best = score.begin()->first;  // std::map iterates in ascending id order
  for (const auto& [act, s] : score)
    if (s > score[best]) best = act;
  return {best, DecisionStage::Value};
}

}  // namespace sopra::testing
