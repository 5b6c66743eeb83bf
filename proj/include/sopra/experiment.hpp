#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "contagion.hpp"
#include "error.hpp"
#include "layout.hpp"
#include "scenario.hpp"
#include "simulation.hpp"

namespace sopra {

enum class LayoutVariant : std::uint8_t { OfficeSize, CoffeePlaces };

inline std::string to_string(LayoutVariant v) { return v == LayoutVariant::OfficeSize ? "office-size" : "coffee-places"; }

inline std::optional<LayoutVariant> parse_layout_variant(std::string_view s) {
  if (s == "office-size") return LayoutVariant::OfficeSize;
  if (s == "coffee-places") return LayoutVariant::CoffeePlaces;
  return std::nullopt;
}

/// Layout for one experiment level. OfficeSize: offices of capacity
/// `level` sharing one coffee place. CoffeePlaces: offices of the base
/// capacity and `level` coffee places; agents use the nearest one.
inline LayoutConfig generate_layout(LayoutVariant variant, int level, std::size_t population,
                                    const LayoutParams& base = {}) {
  if (level <= 0) throw ConstraintError("layout level must be >= 1, got " + std::to_string(level));
  if (variant == LayoutVariant::OfficeSize) return make_layout(population, level, 1, base.grid_spacing);
  return make_layout(population, base.office_capacity, level, base.grid_spacing);
}

struct ExperimentPlan {
  LayoutVariant variant = LayoutVariant::OfficeSize;
  std::vector<int> levels;
  int replications = 30;
  std::uint64_t base_seed = 1;

  /// base_seed + level_index * replications + replication.
  std::uint64_t seed_for(std::size_t level_index, std::size_t replication) const {
    return base_seed + level_index * static_cast<std::uint64_t>(replications) + replication;
  }

  std::size_t job_count() const { return levels.size() * static_cast<std::size_t>(replications); }

  void validate() const {
    if (levels.empty()) throw ConstraintError("experiment needs at least one level");
    if (replications < 1) throw ConstraintError("replications must be >= 1");
    for (int l : levels)
      if (l <= 0) throw ConstraintError("layout level must be >= 1, got " + std::to_string(l));
  }
};

/// The two default studies: office sizes 1/5/10 and 1/2/4 coffee places.
inline std::array<ExperimentPlan, 2> default_plans(std::uint64_t base_seed = 1, int replications = 30) {
  return {ExperimentPlan{LayoutVariant::OfficeSize, {1, 5, 10}, replications, base_seed},
          ExperimentPlan{LayoutVariant::CoffeePlaces, {1, 2, 4}, replications, base_seed}};
}

struct ReplicationRow {
  LayoutVariant variant = LayoutVariant::OfficeSize;
  int level = 0;
  int replication = 0;
  double final_informed_fraction = 0.0;
  std::array<std::optional<int>, kWatermarks.size()> time_to_fraction{};

  bool operator==(const ReplicationRow&) const = default;
};

struct Stat {
  double mean = 0.0;
  double sd = 0.0;  // sample standard deviation; 0 for a single value
  bool operator==(const Stat&) const = default;
};

inline Stat mean_sd(std::span<const double> xs) {
  Stat s;
  if (xs.empty()) return s;
  s.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - s.mean) * (x - s.mean);
    s.sd = std::sqrt(ss / static_cast<double>(xs.size() - 1));
  }
  return s;
}

/// Per-level aggregate. Watermark statistics cover only the replications
/// that reached the watermark; `reached` says how many did.
struct LevelSummary {
  LayoutVariant variant = LayoutVariant::OfficeSize;
  int level = 0;
  std::size_t replications = 0;
  Stat final_informed_fraction;
  std::array<std::optional<Stat>, kWatermarks.size()> time_to_fraction{};
  std::array<std::size_t, kWatermarks.size()> reached{};

  bool operator==(const LevelSummary&) const = default;
};

inline LevelSummary summarize(std::span<const ReplicationRow> rows) {
  LevelSummary s;
  if (rows.empty()) return s;
  s.variant = rows.front().variant;
  s.level = rows.front().level;
  s.replications = rows.size();
  std::vector<double> fractions;
  for (const auto& r : rows) fractions.push_back(r.final_informed_fraction);
  s.final_informed_fraction = mean_sd(fractions);
  for (std::size_t w = 0; w < kWatermarks.size(); ++w) {
    std::vector<double> ticks;
    for (const auto& r : rows)
      if (r.time_to_fraction[w]) ticks.push_back(*r.time_to_fraction[w]);
    s.reached[w] = ticks.size();
    if (!ticks.empty()) s.time_to_fraction[w] = mean_sd(ticks);
  }
  return s;
}

/// One row per (level, replication) in plan order, then one summary per level.
struct ExperimentTable {
  std::vector<ReplicationRow> rows;
  std::vector<LevelSummary> summaries;
};

struct RunOptions {
  unsigned threads = 1;
  /// Execution order over job indices (level_index * replications + rep);
  /// empty means natural order. Never affects results.
  std::vector<std::size_t> order;
  /// Called with each finished trace, possibly from several threads at once.
  std::function<void(std::size_t job, const MetricsTrace&)> on_trace;
};

inline ExperimentTable run_experiment(const ExperimentPlan& plan, const ScenarioConfig& scenario,
                                      const RunOptions& options = {}) {
  plan.validate();
  scenario.validate();
  const std::size_t jobs = plan.job_count();
  const auto reps = static_cast<std::size_t>(plan.replications);
  const auto population = static_cast<std::size_t>(scenario.agent_count);

  std::vector<std::size_t> order = options.order;
  if (order.empty()) {
    order.resize(jobs);
    std::iota(order.begin(), order.end(), std::size_t{0});
  }
  {
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (sorted.size() != jobs || sorted[i] != i) throw ConstraintError("execution order must permute the jobs");
  }

  std::vector<LayoutConfig> layouts;
  for (int level : plan.levels) layouts.push_back(generate_layout(plan.variant, level, population, scenario.layout));

  ExperimentTable table;
  table.rows.resize(jobs);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < jobs;) {
      const std::size_t job = order[k];
      const std::size_t li = job / reps;
      const std::size_t rep = job % reps;
      try {
        const MetricsTrace trace = run_replication(scenario, layouts[li], plan.seed_for(li, rep));
        table.rows[job] = {plan.variant, plan.levels[li], static_cast<int>(rep), trace.final_informed_fraction(),
                           trace.time_to_fraction};
        if (options.on_trace) options.on_trace(job, trace);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = jobs;
      }
    }
  };
  const unsigned threads = std::clamp<unsigned>(options.threads, 1u, static_cast<unsigned>(std::max<std::size_t>(jobs, 1)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  for (std::size_t li = 0; li < plan.levels.size(); ++li)
    table.summaries.push_back(summarize(std::span(table.rows).subspan(li * reps, reps)));
  return table;
}

}  // namespace sopra
