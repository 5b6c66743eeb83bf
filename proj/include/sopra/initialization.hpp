#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "correlation.hpp"
#include "error.hpp"
#include "practice_model.hpp"
#include "rng.hpp"

namespace sopra {

/// Interview-derived link frequencies and element lists for each leaf
/// activity.
struct FrequencyTables {
  /// Probability that an agent believes the activity requires the competence.
  std::map<std::pair<ActivityId, CompetenceId>, double> competence_belief;
  /// Context element categories that can habitually trigger each activity.
  std::map<ActivityId, std::set<ElementCategory>> trigger_categories;
  /// Values every agent links to each activity.
  std::map<ActivityId, std::set<ValueId>> value_links;
  /// Chance that an agent masters any one competence.
  double agent_competence_prob = 0.5;

  /// Element lists for rumourmongering and fact talk, with every listed
  /// competence belief at frequency 0.5. "Friend" and "Colleague" map to
  /// the agent category.
  static FrequencyTables standard(const Catalogue& cat) {
    FrequencyTables t;
    const ActivityId rumour = *cat.find_activity("rumourmongering");
    const ActivityId fact = *cat.find_activity("fact_talk");
    auto link_competences = [&](ActivityId a, std::initializer_list<const char*> names) {
      for (const char* n : names) t.competence_belief[{a, *cat.find_competence(n)}] = 0.5;
    };
    auto link_values = [&](ActivityId a, std::initializer_list<const char*> names) {
      for (const char* n : names) t.value_links[a].insert(*cat.find_value(n));
    };
    link_competences(rumour, {"sneaky_skills", "network_skills", "talking_skills", "observing_skills"});
    link_competences(fact, {"being_knowledgeable", "listening_skills", "critical_thinking_skills",
                            "communication_skills"});
    link_values(rumour, {"self_direction", "power", "hedonism", "achievement", "benevolence"});
    link_values(fact, {"universalism", "self_direction", "benevolence", "achievement", "tradition"});
    using C = ElementCategory;
    t.trigger_categories[rumour] = {C::Agent, C::CoffeePlace, C::Hallway, C::Restaurant,
                                    C::Office, C::Phone,       C::Computer};
    t.trigger_categories[fact] = {C::Agent,      C::AcademicStaff, C::Office,     C::Conference,
                                  C::MeetingRoom, C::Classroom,     C::Restaurant, C::Phone,
                                  C::Computer,    C::Pen,           C::Coffee};
    return t;
  }

  void validate(const Catalogue& cat) const {
    auto check_prob = [](double p, const std::string& what) {
      if (!(p >= 0.0 && p <= 1.0)) throw ConstraintError(what + " must be a probability in [0,1]");
    };
    check_prob(agent_competence_prob, "frequencies.agent_competence_prob");
    for (const auto& [key, f] : competence_belief) {
      cat.activity(key.first);
      if (key.second.index() >= cat.competences().size()) throw ConstraintError("unknown competence id");
      check_prob(f, "frequencies.competence." + cat.activity(key.first).name + "." + cat.competences()[key.second.index()].name);
    }
    for (const auto& [a, values] : value_links) {
      cat.activity(a);
      for (ValueId v : values)
        if (v.index() >= cat.values().size()) throw ConstraintError("unknown value id");
    }
    for (const auto& [a, cats] : trigger_categories) cat.activity(a);
  }

  bool operator==(const FrequencyTables&) const = default;
};

/// Each of `count` competences included independently with probability p.
inline CompetenceSet sample_competences(Rng& rng, double p, std::size_t count) {
  CompetenceSet out;
  for (std::uint32_t i = 0; i < count; ++i)
    if (rng.bernoulli(p)) out.insert(CompetenceId{i});
  return out;
}

/// One Bernoulli draw per configured (activity, competence) frequency.
inline std::vector<CompetenceSet> sample_required_competences(Rng& rng, const FrequencyTables& tables,
                                                              std::size_t activity_count) {
  std::vector<CompetenceSet> out(activity_count);
  for (const auto& [key, f] : tables.competence_belief)
    if (rng.bernoulli(f)) out.at(key.first.index()).insert(key.second);
  return out;
}

/// Correlated normal value adherence: mean + sd * L z, clamped to [0, 1].
/// `factor` is the row-major lower Cholesky factor of the correlation.
inline std::vector<double> sample_value_adherence(Rng& rng, std::span<const double> factor, std::size_t dim,
                                                  double mean, double sd) {
  std::vector<double> z(dim);
  for (auto& zi : z) zi = rng.standard_normal();
  std::vector<double> out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    double acc = 0.0;
    for (std::size_t k = 0; k <= i; ++k) acc += factor[i * dim + k] * z[k];
    out[i] = std::clamp(mean + sd * acc, 0.0, 1.0);
  }
  return out;
}

inline std::vector<double> sample_value_adherence(Rng& rng, const ValueCorrelationMatrix& corr, double mean,
                                                  double sd) {
  if (!(sd >= 0.0)) throw ConstraintError("value adherence sd must be >= 0");
  const auto factor = corr.cholesky();
  return sample_value_adherence(rng, factor, corr.dimension(), mean, sd);
}

/// Normal(mean, sd) conditioned on [0, 1] by rejection. mean must lie in
/// [0, 1].
inline double sample_truncated_normal(Rng& rng, double mean, double sd) {
  if (sd == 0.0) return mean;
  for (;;) {
    const double x = rng.normal(mean, sd);
    if (x >= 0.0 && x <= 1.0) return x;
  }
}

/// Weight for every linked (activity, value) pair; unlinked pairs stay absent.
inline AssociationTable sample_related_values(Rng& rng, const FrequencyTables& tables, std::size_t activity_count,
                                              std::size_t value_count, double mean = 0.5, double sd = 0.15) {
  AssociationTable out(activity_count, value_count);
  for (const auto& [a, values] : tables.value_links)
    for (ValueId v : values) out.set(a.index(), v.index(), sample_truncated_normal(rng, mean, sd));
  return out;
}

/// Clipped log-normal habit strength: min(1, exp(z)), z ~ N(log_mean, log_sd).
inline double sample_habit_strength(Rng& rng, double log_mean, double log_sd) {
  return std::min(1.0, std::exp(rng.normal(log_mean, log_sd)));
}

/// Trigger strength for every element whose category is listed for an
/// activity. `self` (the agent's own AgentRef element) is skipped.
inline AssociationTable sample_habit_strengths(Rng& rng, const FrequencyTables& tables,
                                               std::span<const ContextElement> elements, std::size_t activity_count,
                                               double log_mean, double log_sd,
                                               std::optional<ElementId> self = std::nullopt) {
  AssociationTable out(elements.size(), activity_count);
  for (const auto& e : elements) {
    if (self && e.id == *self) continue;
    for (const auto& [a, cats] : tables.trigger_categories)
      if (cats.contains(e.category)) out.set(e.id.index(), a.index(), sample_habit_strength(rng, log_mean, log_sd));
  }
  return out;
}

}  // namespace sopra
