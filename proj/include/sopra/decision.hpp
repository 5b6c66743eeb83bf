#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>

#include "practice_model.hpp"

namespace sopra {

/// Everything the choose-activity rules look at for one agent on one tick.
struct DecisionContext {
  const Agent& agent;
  std::span<const ElementId> nearby;
  std::span<const ActivityId> candidates;
  double habit_threshold = 0.8;
};

enum class DecisionStage : std::uint8_t { Competence, Habit, Value };

inline std::string to_string(DecisionStage s) {
  switch (s) {
    case DecisionStage::Competence: return "competence";
    case DecisionStage::Habit: return "habit";
    case DecisionStage::Value: return "value";
  }
  return "?";
}

struct DecisionOutcome {
  ActivityId activity;
  DecisionStage stage = DecisionStage::Value;
  bool operator==(const DecisionOutcome&) const = default;
};

/// Stage 1. An activity is feasible when every competence the agent
/// believes it requires is one the agent has. Concludes only when exactly
/// one candidate is feasible.
inline std::optional<ActivityId> competence_stage(const DecisionContext& ctx) {
  std::optional<ActivityId> feasible;
  std::size_t n_feasible = 0;
  const auto& required = ctx.agent.practice.required_competence;
  for (ActivityId a : ctx.candidates) {
    const CompetenceSet need = a.index() < required.size() ? required[a.index()] : CompetenceSet{};
    if (need.subset_of(ctx.agent.competences)) {
      feasible = a;
      ++n_feasible;
    }
  }
  if (n_feasible == 1) return feasible;
  return std::nullopt;
}

/// Strongest trigger of `activity` among the nearby elements, 0 if none.
inline double trigger_strength(const DecisionContext& ctx, ActivityId activity) {
  const auto& triggers = ctx.agent.practice.habitual_trigger;
  double best = 0.0;
  for (ElementId e : ctx.nearby)
    if (e.index() < triggers.rows()) best = std::max(best, triggers.get_or_zero(e.index(), activity.index()));
  return best;
}

/// Stage 2. Concludes on the candidate with the strongest nearby trigger if
/// that strength reaches the threshold and no other candidate ties it.
inline std::optional<ActivityId> habit_stage(const DecisionContext& ctx) {
  std::optional<ActivityId> best;
  double best_strength = -1.0;
  bool tied = false;
  for (ActivityId a : ctx.candidates) {
    const double s = trigger_strength(ctx, a);
    if (s > best_strength) {
      best = a;
      best_strength = s;
      tied = false;
    } else if (s == best_strength) {
      tied = true;
    }
  }
  if (best && !tied && best_strength >= ctx.habit_threshold) return best;
  return std::nullopt;
}

/// Stage 3 score: sum over values of adherence times related-value weight.
inline double value_score(const Agent& agent, ActivityId a) {
  const auto& related = agent.practice.related_value;
  if (a.index() >= related.rows()) return 0.0;
  double score = 0.0;
  const std::size_t n = std::min(agent.value_adherence.size(), related.cols());
  for (std::size_t v = 0; v < n; ++v) score += agent.value_adherence[v] * related.get_or_zero(a.index(), v);
  return score;
}

/// Stage 3. Highest value score; ties go to the lowest activity id.
/// Candidates must be non-empty.
inline ActivityId value_stage(const DecisionContext& ctx) {
  ActivityId best = ctx.candidates.front();
  double best_score = value_score(ctx.agent, best);
  for (ActivityId a : ctx.candidates.subspan(1)) {
    const double s = value_score(ctx.agent, a);
    if (s > best_score || (s == best_score && a < best)) {
      best = a;
      best_score = s;
    }
  }
  return best;
}

/// Competences, then habits, then values. No outcome for an empty
/// candidate list (the agent idles).
inline std::optional<DecisionOutcome> decide_activity(const DecisionContext& ctx) {
  if (ctx.candidates.empty()) return std::nullopt;
  if (auto a = competence_stage(ctx)) return DecisionOutcome{*a, DecisionStage::Competence};
  if (auto a = habit_stage(ctx)) return DecisionOutcome{*a, DecisionStage::Habit};
  return DecisionOutcome{value_stage(ctx), DecisionStage::Value};
}

}  // namespace sopra
