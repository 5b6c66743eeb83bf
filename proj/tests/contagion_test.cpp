#include <gtest/gtest.h>

#include "test_support.hpp"

namespace sopra {
namespace {

using namespace sopra::testing;

std::vector<AgentId> ids(std::initializer_list<std::uint32_t> xs) {
  std::vector<AgentId> out;
  for (auto x : xs) out.push_back(AgentId{x});
  return out;
}

TEST(Transmit, NoAudienceNoChange) {
  RumourState s(5);
  s.inform(AgentId{0}, 0);
  Rng rng(1);
  EXPECT_EQ(transmit(s, AgentId{0}, {}, 1.0, 3, rng), 0u);
  EXPECT_EQ(s.informed_count(), 1u);
}

TEST(Transmit, UninformedSpeakerHasNothingToTell) {
  RumourState s(6);
  Rng rng(1);
  EXPECT_EQ(transmit(s, AgentId{0}, ids({1, 2, 3, 4, 5}), 1.0, 3, rng), 0u);
  EXPECT_EQ(s.informed_count(), 0u);
}

TEST(Transmit, CertainTransmissionInformsEveryListener) {
  RumourState s(4);
  s.inform(AgentId{0}, 0);
  Rng rng(1);
  EXPECT_EQ(transmit(s, AgentId{0}, ids({1, 2, 3}), 1.0, 7, rng), 3u);
  for (std::uint32_t i = 1; i < 4; ++i) EXPECT_EQ(s.informed_at(AgentId{i}), 7);
  EXPECT_EQ(s.informed_at(AgentId{0}), 0);
}

TEST(Transmit, SpeakerToldThisTickWaitsUntilNextTick) {
  RumourState s(3);
  s.inform(AgentId{0}, 0);
  Rng rng(1);
  transmit(s, AgentId{0}, ids({1}), 1.0, 4, rng);
  EXPECT_EQ(transmit(s, AgentId{1}, ids({2}), 1.0, 4, rng), 0u);
  EXPECT_EQ(transmit(s, AgentId{1}, ids({2}), 1.0, 5, rng), 1u);
}

TEST(Transmit, HalfProbabilityMatchesBinomialMean) {
  // Three listeners at p = 0.5: mean 1.5, per-trial sd sqrt(0.75).
  constexpr int kTrials = 10'000;
  Rng rng(99);
  double total = 0;
  for (int i = 0; i < kTrials; ++i) {
    RumourState s(4);
    s.inform(AgentId{0}, 0);
    total += transmit(s, AgentId{0}, ids({1, 2, 3}), 0.5, 1, rng);
  }
  EXPECT_NEAR(total / kTrials, 1.5, 3 * std::sqrt(0.75 / kTrials));
}

TEST(RecordTick, WatermarksAreFirstReachingTick) {
  RumourState s(4);
  MetricsTrace tr;
  s.inform(AgentId{0}, 0);
  record_tick(tr, TickRecord{0}, s);
  s.inform(AgentId{1}, 1);
  record_tick(tr, TickRecord{1}, s);
  record_tick(tr, TickRecord{2}, s);
  s.inform(AgentId{2}, 3);
  s.inform(AgentId{3}, 3);
  record_tick(tr, TickRecord{3}, s);
  EXPECT_EQ(tr.t50(), 1);
  EXPECT_EQ(tr.t90(), 3);
  EXPECT_EQ(tr.t100(), 3);
  EXPECT_EQ(tr.final_informed_fraction(), 1.0);
  EXPECT_THROW(record_tick(tr, TickRecord{3}, s), ConstraintError);
}

ScenarioConfig one_day() {
  ScenarioConfig c;
  c.days = 1;
  return c;
}

TEST(RecordTick, ZeroTransmissionKeepsSeedCountFlat) {
  ScenarioConfig c = one_day();
  c.p_transmit = 0.0;
  c.seed_informed = 3;
  const auto tr = run_replication(c, make_layout(50, 50, 1, 10.0), 5);
  ASSERT_EQ(tr.ticks.size(), 480u);
  for (const auto& r : tr.ticks) EXPECT_EQ(r.informed_count, 3u);
  EXPECT_GT(tr.ticks[10].rumour_acts + tr.ticks[10].fact_acts, 0u);  // talking still happens
}

TEST(RecordTick, SingleAgentNeverSpreads) {
  ScenarioConfig c = one_day();
  c.agent_count = 1;
  const auto tr = run_replication(c, make_layout(1, 5, 1, 10.0), 5);
  for (const auto& r : tr.ticks) {
    EXPECT_EQ(r.informed_count, 1u);
    EXPECT_EQ(r.rumour_acts + r.fact_acts, 0u);  // nobody to talk to
  }
  EXPECT_EQ(tr.t100(), 0);
}

TEST(RecordTick, ForcedCoLocatedRumourmongeringSaturatesWithinTwoTicks) {
  // Every agent believes fact talk needs a competence nobody has, and
  // rumourmongering needs nothing, so stage 1 always picks rumourmongering.
  ScenarioConfig c = one_day();
  c.frequencies.competence_belief.clear();
  c.frequencies.competence_belief[{fact(), competence("listening_skills")}] = 1.0;
  c.frequencies.agent_competence_prob = 0.0;
  Simulation sim(c, make_layout(50, 50, 1, 10.0), 3);
  sim.step();
  for (const auto& d : sim.decisions()) EXPECT_EQ(d, (DecisionOutcome{rumour(), DecisionStage::Competence}));
  const auto tr = sim.run();
  ASSERT_TRUE(tr.t100());
  EXPECT_LE(*tr.t100(), 2);
}

TEST(Simulation, InformedCountMonotoneAndEveryInfectionCausal) {
  ScenarioConfig c;
  c.days = 2;
  c.p_transmit = 0.7;
  c.seed_informed = 3;
  Simulation sim(c, make_layout(50, 5, 2, 10.0), 21);
  std::size_t prev = sim.rumour().informed_count();
  while (!sim.finished()) {
    std::vector<bool> before;
    for (const auto& a : sim.world().agents()) before.push_back(a.informed);
    const int t = sim.next_tick();
    sim.step();
    const std::size_t now = sim.rumour().informed_count();
    ASSERT_GE(now, prev);
    ASSERT_LE(now, 50u);
    prev = now;
    for (const auto& a : sim.world().agents()) {
      if (before[a.id.index()] || !a.informed) continue;
      EXPECT_EQ(sim.rumour().informed_at(a.id), t);
      // Some nearby agent, informed at an earlier tick, chose rumourmongering.
      bool has_infector = false;
      for (ElementId e : sim.world().nearby(a.id)) {
        const auto other = sim.world().agent_of(e);
        if (!other) continue;
        const auto& d = sim.decisions()[other->index()];
        const auto when = sim.rumour().informed_at(*other);
        if (d && d->activity == rumour() && when && *when < t) has_infector = true;
      }
      EXPECT_TRUE(has_infector) << "agent " << a.id.value << " at tick " << t;
    }
  }
  EXPECT_GT(prev, 3u);
}

TEST(Simulation, MutualTalkFlagOnlyNarrowsTransmission) {
  ScenarioConfig c;
  c.days = 1;
  auto loose = run_replication(c, make_layout(50, 5, 1, 10.0), 8);
  c.mutual_talk_required = true;
  auto strict = run_replication(c, make_layout(50, 5, 1, 10.0), 8);
  // Every agent with company talks, so requiring both sides to talk changes nothing here.
  EXPECT_EQ(loose, strict);
}

}  // namespace
}  // namespace sopra
