// Copyright 2026 The SWF Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "swf/policies.h"

#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"
#include "swf/oracle.h"
#include "swf/random.h"
#include "test_scenarios.h"

namespace swf {
namespace {

using ::swf::testing::PointMass;
using ::swf::testing::ShannonScenario;

// Two channels with one level each and a budget that forbids using both:
// arms (0,0), (0,1), (1,0).
Scenario DisjointScenario() {
  return ShannonScenario({{1}, {1}}, {PointMass(0.5), PointMass(0.5)}, 1);
}

std::vector<Observation> FullFeedback(const FeasibleSet& f, ArmIndex arm,
                                      const std::vector<double>& gains) {
  std::vector<Observation> out;
  for (std::uint32_t i : f.channels(arm)) out.push_back({i, gains[i]});
  return out;
}

TEST(PolicyKindTest, NamesRoundTrip) {
  for (PolicyKind kind : kAllPolicies) {
    EXPECT_EQ(ParsePolicyKind(ToString(kind)), kind);
  }
  EXPECT_FALSE(ParsePolicyKind("ucb2").has_value());
  EXPECT_EQ(ParseArgmaxMethod("knapsack"), ArgmaxMethod::kKnapsack);
  EXPECT_FALSE(ParseArgmaxMethod("greedy").has_value());
}

TEST(ExplorationRadiusTest, Formula) {
  EXPECT_DOUBLE_EQ(ExplorationRadius(2, 20, 4),
                   std::sqrt(3.0 * std::log(20.0) / 4.0));
  EXPECT_EQ(ExplorationRadius(4, 1, 7), 0.0);
  EXPECT_TRUE(std::isinf(ExplorationRadius(1, 5, 0)));
}

TEST(InitializationTest, ChannelCoveringOnBundledScenario) {
  const Scenario s = testing::Cwf2BundledScenario();
  const FeasibleSet f = EnumerateFeasibleSet(s);
  const auto plays = ChannelCoveringPlays(f);
  ASSERT_EQ(plays.size(), 4u);
  std::vector<int> covered(4, 0);
  for (std::size_t t = 0; t < 4; ++t) {
    EXPECT_NE(f.arm(plays[t]).levels[t], 0);
    // The first arm in index order that powers channel t.
    for (ArmIndex k = 0; k < plays[t]; ++k) EXPECT_EQ(f.arm(k).levels[t], 0);
    for (std::size_t i : f.arm(plays[t]).Support()) covered[i] = 1;
  }
  EXPECT_EQ(std::accumulate(covered.begin(), covered.end(), 0), 4);
}

TEST(InitializationTest, SingleChannelNeedsOneRound) {
  const Scenario s = ShannonScenario({{10}}, {PointMass(0.5)}, 10);
  const FeasibleSet f = EnumerateFeasibleSet(s);
  EXPECT_EQ(ChannelCoveringPlays(f), (std::vector<ArmIndex>{1}));
}

TEST(InitializationTest, UnpoweredChannelThrows) {
  const FeasibleSet f({{{0, 0}}, {{5, 0}}}, {{5}, {10}});
  EXPECT_THROW(ChannelCoveringPlays(f), std::invalid_argument);
}

TEST(InitializationTest, VariableCoveringCoversEveryUsedVariable) {
  const Scenario s = testing::Cwf2BundledScenario();
  const FeasibleSet f = EnumerateFeasibleSet(s);
  const auto plays = VariableCoveringPlays(f);
  std::vector<int> covered(f.num_variables(), 0);
  for (ArmIndex k : plays) {
    for (std::uint32_t v : f.variables(k)) covered[v] = 1;
  }
  for (std::size_t v = 0; v < f.num_variables(); ++v) {
    EXPECT_EQ(covered[v], f.variable_used(v) ? 1 : 0);
  }
  EXPECT_GT(plays.size(), ChannelCoveringPlays(f).size());
}

TEST(Cwf1Test, SelectsLargerIndexAmongDisjointArms) {
  const Scenario s = DisjointScenario();
  const FeasibleSet f = EnumerateFeasibleSet(s);
  Cwf1State state = MakeCwf1State(f, 1);
  state.m = {1, 1};
  state.y_bar = {1.1, 2.0};
  EXPECT_EQ(f.arm(Cwf1Select(state, f, 1)), (PowerAllocation{{0, 1}}));
  state.y_bar = {2.0, 1.1};
  EXPECT_EQ(f.arm(Cwf1Select(state, f, 1)), (PowerAllocation{{1, 0}}));
}

TEST(Cwf1Test, IndexFormula) {
  const Scenario s = ShannonScenario({{1}}, {PointMass(0.5)}, 1);
  const FeasibleSet f = EnumerateFeasibleSet(s);
  Cwf1State state = MakeCwf1State(f, 2);
  state.m = {4};
  state.y_bar = {0.5};
  std::vector<double> indices(1);
  // y_bar + sqrt((L + 1) ln n / m).
  Cwf1Indices(state, f, 20, indices);
  EXPECT_DOUBLE_EQ(indices[0], 0.5 + std::sqrt(3.0 * std::log(20.0) / 4.0));
}

TEST(Cwf1Test, FirstObservationRefreshesEveryLevel) {
  const Scenario s = ShannonScenario({{10, 20}}, {PointMass(0.5)}, 20);
  const FeasibleSet f = EnumerateFeasibleSet(s);
  Cwf1State state = MakeCwf1State(f, 1);
  const ArmIndex arm = *f.Find({{10}});
  const std::vector<Observation> seen = {{0, 0.5}};
  Cwf1Update(state, s.rate(), f, arm, seen);
  EXPECT_DOUBLE_EQ(state.y_bar[0], std::log(6.0));
  EXPECT_DOUBLE_EQ(state.y_bar[1], std::log(11.0));
  EXPECT_EQ(state.m[0], 1u);

  // A zero observation shrinks every level by m / (m + 1).
  const std::vector<Observation> zero = {{0, 0.0}};
  Cwf1Update(state, s.rate(), f, arm, zero);
  EXPECT_DOUBLE_EQ(state.y_bar[0], std::log(6.0) / 2.0);
  EXPECT_DOUBLE_EQ(state.y_bar[1], std::log(11.0) / 2.0);
}

TEST(Cwf1Test, ConstantObservationsGiveExactRate) {
  const Scenario s = ShannonScenario({{10, 20}}, {PointMass(0.3)}, 20);
  const FeasibleSet f = EnumerateFeasibleSet(s);
  Cwf1State state = MakeCwf1State(f, 1);
  const std::vector<Observation> seen = {{0, 0.3}};
  for (int t = 0; t < 1000; ++t) Cwf1Update(state, s.rate(), f, 2, seen);
  EXPECT_NEAR(state.y_bar[0], std::log1p(3.0), 1e-13);
  EXPECT_NEAR(state.y_bar[1], std::log1p(6.0), 1e-13);
}

TEST(Cwf1Test, RejectsFeedbackOutsideSupport) {
  const Scenario s = DisjointScenario();
  const FeasibleSet f = EnumerateFeasibleSet(s);
  Cwf1State state = MakeCwf1State(f, 1);
  const ArmIndex arm = *f.Find({{1, 0}});
  const std::vector<Observation> wrong = {{1, 0.5}};
  EXPECT_THROW(Cwf1Update(state, s.rate(), f, arm, wrong),
               std::invalid_argument);
  const std::vector<Observation> extra = {{0, 0.5}, {1, 0.5}};
  EXPECT_THROW(Cwf1Update(state, s.rate(), f, arm, extra),
               std::invalid_argument);
  const std::vector<Observation> out_of_range = {{0, 1.5}};
  EXPECT_THROW(Cwf1Update(state, s.rate(), f, arm, out_of_range),
               std::invalid_argument);
  EXPECT_EQ(state.m, (std::vector<std::uint64_t>{0, 0}));
}

TEST(Cwf2Test, IndexFormula) {
  const Scenario s = ShannonScenario({{1}}, {PointMass(0.5)}, 1);
  const FeasibleSet f = EnumerateFeasibleSet(s);
  Cwf2State state = MakeCwf2State(f, 2);
  state.m = {4};
  state.x_bar = {0.5};
  std::vector<double> indices(1);
  Cwf2Indices(state, s.rate(), f, 20, indices);
  const double c = std::sqrt(3.0 * std::log(20.0) / 4.0);
  EXPECT_DOUBLE_EQ(indices[0], std::log(1.5) + std::log1p(c));
  // ln 1 = 0: the index is the empirical pseudo-rate alone.
  Cwf2Indices(state, s.rate(), f, 1, indices);
  EXPECT_DOUBLE_EQ(indices[0], std::log(1.5));
}

TEST(Cwf2Test, RunningMean) {
  const Scenario s = DisjointScenario();
  const FeasibleSet f = EnumerateFeasibleSet(s);
  Cwf2State state = MakeCwf2State(f, 1);
  const ArmIndex arm = *f.Find({{1, 0}});
  const std::vector<Observation> zero = {{0, 0.0}};
  const std::vector<Observation> one = {{0, 1.0}};
  Cwf2Update(state, f, arm, zero);
  Cwf2Update(state, f, arm, one);
  EXPECT_DOUBLE_EQ(state.x_bar[0], 0.5);
  EXPECT_EQ(state.m[0], 2u);
  EXPECT_EQ(state.m[1], 0u);
  // An empty arm leaves everything but n alone.
  Cwf2Update(state, f, 0, {});
  EXPECT_DOUBLE_EQ(state.x_bar[0], 0.5);
  EXPECT_EQ(state.n, 3u);
}

// Property: the streaming mean equals the batch mean to 1e-12.
TEST(Cwf2Test, StreamingMeanMatchesBatchMean) {
  const Scenario s = ShannonScenario({{1}}, {PointMass(0.5)}, 1);
  const FeasibleSet f = EnumerateFeasibleSet(s);
  Cwf2State state = MakeCwf2State(f, 1);
  RandomStream rng(3, 0);
  std::vector<double> xs;
  for (int t = 0; t < 100000; ++t) {
    xs.push_back(rng.NextUniform());
    const std::vector<Observation> seen = {{0, xs.back()}};
    Cwf2Update(state, f, 1, seen);
  }
  long double batch = 0.0L;
  for (double x : xs) batch += x;
  EXPECT_NEAR(state.x_bar[0], static_cast<double>(batch / xs.size()), 1e-12);
}

TEST(Ucb1Test, PlaysUnplayedArmsFirstInIndexOrder) {
  const Scenario s = DisjointScenario();
  const FeasibleSet f = EnumerateFeasibleSet(s);
  Ucb1State state = MakeUcb1State(f);
  const std::vector<double> gains = {0.5, 0.5};
  for (ArmIndex k = 0; k < f.size(); ++k) {
    ASSERT_EQ(Ucb1Select(state, k + 1), k);
    Ucb1Update(state, s.rate(), f, k, FullFeedback(f, k, gains));
  }
  EXPECT_EQ(std::accumulate(state.m.begin(), state.m.end(), std::uint64_t{0}),
            state.n);
}

TEST(Ucb1Test, PicksHigherMeanAfterEqualPlays) {
  const Scenario s = DisjointScenario();
  const FeasibleSet f = EnumerateFeasibleSet(s);
  Ucb1State state = MakeUcb1State(f);
  state.m = {5, 5, 5};
  state.mean = {0.0, 0.9, 0.1};
  EXPECT_EQ(Ucb1Select(state, 16), 1u);
}

TEST(Ucb1Test, IndexFormula) {
  // Y = 0.5, m = 2: index 0.5 + sqrt(2 ln n / 2). The competing arm sits
  // just below and just above that value.
  const Scenario s = DisjointScenario();
  const FeasibleSet f = EnumerateFeasibleSet(s);
  Ucb1State state = MakeUcb1State(f);
  const std::uint64_t n = 3;
  const double index = 0.5 + std::sqrt(std::log(3.0));
  state.m = {2, 2, 1};
  state.mean = {0.5, -10.0, index - std::sqrt(2.0 * std::log(3.0)) - 1e-9};
  EXPECT_EQ(Ucb1Select(state, n), 0u);
  state.mean[2] += 2e-9;
  EXPECT_EQ(Ucb1Select(state, n), 2u);
}

TEST(LlrTest, OnlyThePlayedLevelIsRefreshed) {
  const Scenario s = ShannonScenario({{10, 20}}, {PointMass(0.5)}, 20);
  const FeasibleSet f = EnumerateFeasibleSet(s);
  LlrState llr = MakeLlrState(f, 1);
  Cwf1State cwf1 = MakeCwf1State(f, 1);
  const ArmIndex arm = *f.Find({{10}});
  const std::vector<Observation> seen = {{0, 0.5}};
  LlrUpdate(llr, s.rate(), f, arm, seen);
  Cwf1Update(cwf1, s.rate(), f, arm, seen);
  EXPECT_EQ(llr.m, (std::vector<std::uint64_t>{1, 0}));
  EXPECT_DOUBLE_EQ(llr.y_bar[0], std::log(6.0));
  EXPECT_EQ(llr.y_bar[1], 0.0);
  EXPECT_DOUBLE_EQ(cwf1.y_bar[1], std::log(11.0));
}

// With every level observed equally often, LLR and CWF1 compute the same
// indices and therefore pick the same arm.
TEST(LlrTest, AgreesWithCwf1UnderEqualCounts) {
  const Scenario s = testing::Cwf2BundledScenario();
  const FeasibleSet f = EnumerateFeasibleSet(s);
  std::mt19937_64 gen(8);
  std::uniform_real_distribution<double> unit(0.0, 3.0);
  for (int trial = 0; trial < 100; ++trial) {
    Cwf1State cwf1 = MakeCwf1State(f, 4);
    LlrState llr = MakeLlrState(f, 4);
    for (std::size_t i = 0; i < 4; ++i) {
      cwf1.m[i] = 1 + gen() % 50;
      const std::size_t begin = f.channel_offset(i);
      for (std::size_t l = 0; l < f.levels()[i].size(); ++l) {
        const double y = unit(gen);
        cwf1.y_bar[begin + l] = y;
        llr.y_bar[begin + l] = y;
        llr.m[begin + l] = cwf1.m[i];
      }
    }
    const std::uint64_t round = 100 + gen() % 1000;
    EXPECT_EQ(LlrSelect(llr, f, round), Cwf1Select(cwf1, f, round));
  }
}

// Property: adding c to every per-variable index moves each arm's score by
// c |A_a|.
TEST(IndexAssemblyTest, ShiftScalesWithSupportSize) {
  const FeasibleSet f =
      EnumerateFeasibleSet(testing::BundledLevels(), 60, true);
  std::mt19937_64 gen(4);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> values(f.num_variables());
  for (double& v : values) v = unit(gen);
  const double c = 0.375;
  std::vector<double> shifted = values;
  for (double& v : shifted) v += c;
  for (ArmIndex k = 0; k < f.size(); ++k) {
    EXPECT_NEAR(f.Score(k, shifted) - f.Score(k, values),
                c * static_cast<double>(f.arm(k).Support().size()), 1e-12);
  }
}

// With zero bonuses (round 1) and exact statistics, CWF1 returns an
// O1-optimal arm and CWF2 an O2-optimal arm.
TEST(OracleEquivalenceTest, ExactStatisticsRecoverTheOptimum) {
  for (const Scenario& s :
       {testing::Cwf1BundledScenario(), testing::Cwf2BundledScenario()}) {
    const FeasibleSet f = EnumerateFeasibleSet(s);
    const Oracle oracle(s, f);
    const GapProfile profile = oracle.Profile();

    Cwf1State cwf1 = MakeCwf1State(f, 4);
    cwf1.m.assign(4, 1);
    cwf1.y_bar = oracle.expected_rates();
    EXPECT_TRUE(profile.o1.IsOptimal(Cwf1Select(cwf1, f, 1)));

    Cwf2State cwf2 = MakeCwf2State(f, 4);
    cwf2.m.assign(4, 1);
    cwf2.x_bar = oracle.means();
    EXPECT_TRUE(profile.o2.IsOptimal(Cwf2Select(cwf2, s.rate(), f, 1)));

    LlrState llr = MakeLlrState(f, 4);
    llr.m.assign(f.num_variables(), 1);
    llr.y_bar = oracle.expected_rates();
    EXPECT_TRUE(profile.o1.IsOptimal(LlrSelect(llr, f, 1)));
  }
}

// Degenerate laws with huge n / m balance: the CWF2 pick equals the O2
// optimum.
TEST(OracleEquivalenceTest, DegenerateLawsLargeCounts) {
  const Scenario s =
      ShannonScenario({{10, 20}, {10, 20}, {10}},
                      {PointMass(0.2), PointMass(0.6), PointMass(0.4)}, 30);
  const FeasibleSet f = EnumerateFeasibleSet(s);
  const GapProfile profile = Oracle(s, f).Profile();
  Cwf2State state = MakeCwf2State(f, 3);
  state.x_bar = {0.2, 0.6, 0.4};
  state.m.assign(3, 1000000000000ULL);
  EXPECT_TRUE(profile.o2.IsOptimal(Cwf2Select(state, s.rate(), f, 1000)));
}

TEST(PolicyTest, StateSizes) {
  const Scenario s = testing::Cwf2BundledScenario();
  const FeasibleSet f = EnumerateFeasibleSet(s);
  EXPECT_EQ(MakePolicy(PolicyKind::kCwf1, s, f)->StateSize(), 12u + 4u);
  EXPECT_EQ(MakePolicy(PolicyKind::kCwf2, s, f)->StateSize(), 8u);
  EXPECT_EQ(MakePolicy(PolicyKind::kUcb1, s, f)->StateSize(), 280u);
  EXPECT_EQ(MakePolicy(PolicyKind::kLlr, s, f)->StateSize(), 24u);
}

TEST(PolicyTest, InitializationLengths) {
  const Scenario s = testing::Cwf2BundledScenario();
  const FeasibleSet f = EnumerateFeasibleSet(s);
  EXPECT_EQ(MakePolicy(PolicyKind::kCwf1, s, f)->initialization().size(), 4u);
  EXPECT_EQ(MakePolicy(PolicyKind::kCwf2, s, f)->initialization().size(), 4u);
  EXPECT_EQ(MakePolicy(PolicyKind::kUcb1, s, f)->initialization().size(), 140u);
  EXPECT_GT(MakePolicy(PolicyKind::kLlr, s, f)->initialization().size(), 4u);
}

TEST(PolicyTest, KnapsackArgmaxMatchesExhaustiveDuringPlay) {
  const Scenario s = testing::Cwf1BundledScenario();
  const FeasibleSet f = EnumerateFeasibleSet(s);
  for (PolicyKind kind :
       {PolicyKind::kCwf1, PolicyKind::kCwf2, PolicyKind::kLlr}) {
    auto exhaustive = MakePolicy(kind, s, f, {});
    auto knapsack =
        MakePolicy(kind, s, f, {std::nullopt, ArgmaxMethod::kKnapsack});
    RandomStream rng(12, 0);
    std::vector<double> gains(4);
    const auto& init = exhaustive->initialization();
    int disagreements = 0;
    for (std::uint64_t n = 1; n <= 3000; ++n) {
      ArmIndex arm = n <= init.size() ? init[n - 1] : exhaustive->Select(n);
      if (n > init.size() && knapsack->Select(n) != arm) ++disagreements;
      SampleGainsInto(s.laws(), rng, gains);
      const auto feedback = FullFeedback(f, arm, gains);
      exhaustive->Update(arm, feedback);
      knapsack->Update(arm, feedback);
    }
    EXPECT_EQ(disagreements, 0) << ToString(kind);
  }
}

}  // namespace
}  // namespace swf
