// Copyright 2026 The skillrate Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "skillrate/models.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "oracles/reference_models.h"
#include "skillrate/error.h"
#include "skillrate/gaussian.h"
#include "test_util.h"

namespace skillrate {
namespace {

const Rating kDefault{25.0, 25.0 / 3.0};

ModelConfig NoTau(Model model) {
  ConfigOptions options;
  options.tau = 0.0;
  return ModelConfig::Create(model, options);
}

std::vector<TeamUpdate> UpdatesFor(Model model, const Teams& teams,
                                   const std::vector<int>& ranks,
                                   Execution execution = Execution::kSerial) {
  std::vector<TeamRating> sorted = AggregateTeams(teams, ranks);
  return TeamUpdates(sorted, NoTau(model), execution);
}

Teams Singles(int k) { return Teams(k, Team{kDefault}); }

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

TEST(AggregateTest, SumsAndSorts) {
  Teams teams = {{kDefault, kDefault}, {{20.0, 2.0}}, {{30.0, 3.0}}};
  std::vector<TeamRating> out = AggregateTeams(teams, std::vector<int>{2, 1, 2});
  ASSERT_EQ(out.size(), 3u);
  EXPECT_EQ(out[0].source_index, 1u);
  EXPECT_EQ(out[1].source_index, 0u);
  EXPECT_EQ(out[2].source_index, 2u);
  EXPECT_EQ(out[1].mu, 50.0);
  EXPECT_NEAR(out[1].sigma_sq, 1250.0 / 9.0, 1e-12);
  EXPECT_EQ(out[0].sigma_sq, 4.0);
}

TEST(AggregateTest, Errors) {
  EXPECT_EQ(CodeOf([] { AggregateTeams(Teams{{kDefault}}, std::vector<int>{1}); }),
            ErrorCode::kEmptyMatch);
  EXPECT_EQ(CodeOf([] { AggregateTeams(Teams{{kDefault}, {}}, std::vector<int>{1, 2}); }),
            ErrorCode::kEmptyTeam);
  EXPECT_EQ(CodeOf([] { AggregateTeams(Singles(2), std::vector<int>{1}); }),
            ErrorCode::kRankMismatch);
}

TEST(DynamicsTest, Values) {
  EXPECT_EQ(ApplyDynamics(Singles(2), 0.0), Singles(2));
  Teams once = ApplyDynamics(Singles(1), 25.0 / 300.0);
  EXPECT_NEAR(once[0][0].sigma, 8.333749989583854, 1e-14);
  EXPECT_EQ(once[0][0].mu, 25.0);
  Teams twice = ApplyDynamics(ApplyDynamics(Singles(1), 0.1), 0.1);
  Teams scaled = ApplyDynamics(Singles(1), 0.1 * std::sqrt(2.0));
  EXPECT_NEAR(twice[0][0].sigma, scaled[0][0].sigma, 1e-14);
}

TEST(PlackettLuceTest, C) {
  std::vector<TeamRating> two = AggregateTeams(Singles(2), std::vector<int>{1, 2});
  EXPECT_NEAR(PlackettLuceC(two, 25.0 / 6.0), 13.176156917368248, 1e-13);
  std::vector<TeamRating> three = AggregateTeams(Singles(3), std::vector<int>{1, 2, 3});
  EXPECT_NEAR(PlackettLuceC(three, 25.0 / 6.0), 16.137430609197570, 1e-13);
}

TEST(PlackettLuceTest, OneVersusOne) {
  auto u = UpdatesFor(Model::kPlackettLuce, Singles(2), {1, 2});
  EXPECT_NEAR(u[0].omega, 2.6352313834736494, 1e-13);
  EXPECT_NEAR(u[1].omega, -2.6352313834736494, 1e-13);
  EXPECT_NEAR(u[0].delta, 0.06324555320336759, 1e-15);
  EXPECT_NEAR(u[1].delta, 0.06324555320336759, 1e-15);
}

TEST(PlackettLuceTest, ThreeTeams) {
  auto u = UpdatesFor(Model::kPlackettLuce, Singles(3), {1, 2, 3});
  EXPECT_NEAR(u[0].omega, 2.8688765527462347, 1e-13);
  EXPECT_NEAR(u[1].omega, 0.71721913818655868, 1e-13);
  EXPECT_NEAR(u[2].omega, -3.5860956909327934, 1e-13);
  EXPECT_NEAR(u[0].omega + u[1].omega + u[2].omega, 0.0, 1e-12);
  EXPECT_NEAR(u[0].delta, 0.030601349895959837, 1e-15);
  EXPECT_NEAR(u[1].delta, 0.065027868528914654, 1e-15);
  EXPECT_NEAR(u[2].delta, 0.065027868528914654, 1e-15);
}

TEST(PlackettLuceTest, AllTiedIdenticalTeamsDoNotMove) {
  for (int k = 2; k <= 6; ++k) {
    for (const TeamUpdate& u : UpdatesFor(Model::kPlackettLuce, Singles(k),
                                          std::vector<int>(k, 1))) {
      EXPECT_NEAR(u.omega, 0.0, 1e-14);
      EXPECT_GT(u.delta, 0.0);
    }
  }
}

TEST(BradleyTerryTest, FullThreeTeams) {
  auto u = UpdatesFor(Model::kBradleyTerryFull, Singles(3), {1, 2, 3});
  EXPECT_NEAR(u[0].omega, 5.2704627669472989, 1e-13);
  EXPECT_NEAR(u[1].omega, 0.0, 1e-14);
  EXPECT_NEAR(u[2].omega, -5.2704627669472989, 1e-13);
  for (const TeamUpdate& x : u) EXPECT_NEAR(x.delta, 0.12649110640673517, 1e-15);
}

TEST(BradleyTerryTest, PartialThreeTeams) {
  auto u = UpdatesFor(Model::kBradleyTerryPart, Singles(3), {1, 2, 3});
  EXPECT_NEAR(u[0].omega, 2.6352313834736494, 1e-13);
  EXPECT_NEAR(u[1].omega, 0.0, 1e-14);
  EXPECT_NEAR(u[2].omega, -2.6352313834736494, 1e-13);
  EXPECT_NEAR(u[0].delta, 0.06324555320336759, 1e-15);
  EXPECT_NEAR(u[1].delta, 0.12649110640673517, 1e-15);
  EXPECT_NEAR(u[2].delta, 0.06324555320336759, 1e-15);
}

TEST(BradleyTerryTest, TwoTiedTeamsDoNotMove) {
  for (Model model : {Model::kBradleyTerryFull, Model::kBradleyTerryPart}) {
    for (const TeamUpdate& u : UpdatesFor(model, Singles(2), {1, 1})) {
      EXPECT_EQ(u.omega, 0.0);
    }
  }
}

TEST(BradleyTerryTest, PartialIgnoresNonAdjacentTeams) {
  Teams teams = Singles(4);
  auto base = UpdatesFor(Model::kBradleyTerryPart, teams, {1, 2, 3, 4});
  teams[3][0].mu = 45.0;
  auto moved = UpdatesFor(Model::kBradleyTerryPart, teams, {1, 2, 3, 4});
  EXPECT_EQ(base[0].omega, moved[0].omega);
  EXPECT_EQ(base[0].delta, moved[0].delta);
  EXPECT_EQ(base[1].omega, moved[1].omega);
  EXPECT_NE(base[2].omega, moved[2].omega);
}

TEST(ThurstoneMostellerTest, OneVersusOne) {
  auto u = UpdatesFor(Model::kThurstoneMostellerFull, Singles(2), {1, 2});
  EXPECT_NEAR(u[0].omega, 4.2307187089932146, 1e-12);
  EXPECT_NEAR(u[1].omega, -4.2307187089932146, 1e-12);
  EXPECT_NEAR(u[0].delta, 0.16147122859074225, 1e-14);
  EXPECT_EQ(u[0].delta, u[1].delta);
  // Same value through the gaussian module directly.
  const double c = 13.176156917368248;
  EXPECT_NEAR(u[0].omega, 625.0 / 9.0 / c * gaussian::VWin(0.0, 0.1 / c), 1e-12);
}

TEST(ThurstoneMostellerTest, FullAndPartialThreeTeams) {
  auto full = UpdatesFor(Model::kThurstoneMostellerFull, Singles(3), {1, 2, 3});
  EXPECT_NEAR(full[0].omega, 8.4614374179864291, 1e-12);
  EXPECT_NEAR(full[1].omega, 0.0, 1e-13);
  EXPECT_NEAR(full[2].omega, -8.4614374179864291, 1e-12);
  for (const TeamUpdate& x : full) EXPECT_NEAR(x.delta, 0.32294245718148450, 1e-14);

  auto part = UpdatesFor(Model::kThurstoneMostellerPart, Singles(3), {1, 2, 3});
  EXPECT_NEAR(part[0].omega, 4.2307187089932146, 1e-12);
  EXPECT_NEAR(part[2].omega, -4.2307187089932146, 1e-12);
  EXPECT_NEAR(part[0].delta, 0.16147122859074225, 1e-14);
  EXPECT_EQ(part[1].omega, full[1].omega);
  EXPECT_EQ(part[1].delta, full[1].delta);
}

TEST(ThurstoneMostellerTest, TwoTiedTeams) {
  for (Model model : {Model::kThurstoneMostellerFull, Model::kThurstoneMostellerPart}) {
    auto u = UpdatesFor(model, Singles(2), {1, 1});
    for (const TeamUpdate& x : u) {
      EXPECT_EQ(x.omega, 0.0);
      EXPECT_NEAR(x.delta, 0.25297735559228797, 1e-14);
    }
  }
}

TEST(DistributeTest, Shares) {
  Teams single = {{kDefault}, {kDefault}};
  std::vector<TeamUpdate> updates = {{1.5, 0.1}, {-1.5, 0.1}};
  Teams out = DistributeToPlayers(single, updates, 1e-4);
  EXPECT_EQ(out[0][0].mu, 26.5);
  EXPECT_EQ(out[1][0].mu, 23.5);

  Teams pair = {{kDefault, kDefault}, {kDefault}};
  out = DistributeToPlayers(pair, updates, 1e-4);
  EXPECT_EQ(out[0][0].mu, 25.75);
  EXPECT_EQ(out[0][1].mu, 25.75);

  std::vector<TeamUpdate> huge = {{0.0, 5.0}, {0.0, 5.0}};
  out = DistributeToPlayers(single, huge, 1e-4);
  EXPECT_DOUBLE_EQ(out[0][0].sigma, kDefault.sigma * 0.01);

  std::vector<TeamUpdate> one = {{0.0, 0.0}};
  EXPECT_EQ(CodeOf([&] { DistributeToPlayers(single, one, 1e-4); }),
            ErrorCode::kShapeMismatch);
}

TEST(DistributeTest, LargerSigmaMovesMore) {
  Teams teams = {{{25.0, 2.0}, {25.0, 6.0}}, {kDefault}};
  Teams out = DistributeToPlayers(teams, std::vector<TeamUpdate>{{2.0, 0.2}, {-2.0, 0.2}},
                                  1e-4);
  EXPECT_GT(out[0][1].mu - 25.0, out[0][0].mu - 25.0);
}

TEST(RateTest, TwoVersusTwoDefaults) {
  ModelConfig config = ModelConfig::Create(Model::kPlackettLuce);
  Teams out = Rate(config, {{kDefault, kDefault}, {kDefault, kDefault}});
  EXPECT_NEAR(out[0][0].mu, 26.964294621803063, 1e-12);
  EXPECT_NEAR(out[0][0].sigma, 8.177962604389991, 1e-12);
  EXPECT_NEAR(out[1][0].mu, 23.035705378196937, 1e-12);
  EXPECT_NEAR(out[1][0].sigma, 8.177962604389991, 1e-12);
  EXPECT_EQ(out[0][0], out[0][1]);
  EXPECT_EQ(out[1][0], out[1][1]);
}

TEST(RateTest, OneVersusOneNoTau) {
  Teams out = Rate(NoTau(Model::kPlackettLuce), Singles(2));
  EXPECT_NEAR(out[0][0].mu, 27.635231383473649, 1e-12);
  EXPECT_NEAR(out[0][0].sigma, 8.0655063163235468, 1e-12);
  EXPECT_NEAR(out[1][0].mu, 22.36476861652635, 1e-12);
  EXPECT_NEAR(out[1][0].sigma, 8.0655063163235468, 1e-12);
}

TEST(RateTest, ScoresEquivalentToRanks) {
  ModelConfig config = ModelConfig::Create(Model::kPlackettLuce);
  Teams teams = {{{20.0, 4.0}}, {{30.0, 6.0}}, {{25.0, 2.0}}};
  EXPECT_EQ(Rate(config, teams, Outcome::Scores({3.0, 7.0, 3.0})),
            Rate(config, teams, Outcome::Ranks({2, 1, 2})));
  EXPECT_EQ(ScoresToRanks(std::vector<double>{3.0, 7.0, 5.0, 7.0}),
            (std::vector<int>{3, 1, 2, 1}));
}

TEST(RateTest, ListedOrderIsFinishingOrder) {
  ModelConfig config = ModelConfig::Create(Model::kBradleyTerryFull);
  Teams teams = {{{20.0, 4.0}}, {{30.0, 6.0}}, {{25.0, 2.0}}};
  EXPECT_EQ(Rate(config, teams), Rate(config, teams, Outcome::Ranks({1, 2, 3})));
}

TEST(RateTest, LimitSigmaCapsAtPrior) {
  ConfigOptions options;
  options.limit_sigma = true;
  options.tau = 5.0;
  ModelConfig config = ModelConfig::Create(Model::kPlackettLuce, options);
  Teams teams = {{{25.0, 1.0}}, {{25.0, 1.0}}};
  Teams out = Rate(config, teams);
  EXPECT_EQ(out[0][0].sigma, 1.0);
  options.limit_sigma = false;
  EXPECT_GT(Rate(ModelConfig::Create(Model::kPlackettLuce, options), teams)[0][0].sigma,
            1.0);
}

TEST(RateTest, Errors) {
  ModelConfig config = ModelConfig::Create(Model::kPlackettLuce);
  EXPECT_EQ(CodeOf([&] { Rate(config, Singles(1)); }), ErrorCode::kEmptyMatch);
  EXPECT_EQ(CodeOf([&] { Rate(config, {{kDefault}, {}}); }), ErrorCode::kEmptyTeam);
  EXPECT_EQ(CodeOf([&] { Rate(config, Singles(2), Outcome::Ranks({1})); }),
            ErrorCode::kRankMismatch);
  EXPECT_EQ(CodeOf([&] { Rate(config, Singles(2), Outcome::Ranks({0, 1})); }),
            ErrorCode::kRankMismatch);
  EXPECT_EQ(CodeOf([&] { Rate(config, Singles(2), Outcome::Scores({1.0, 2.0, 3.0})); }),
            ErrorCode::kRankMismatch);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  EXPECT_EQ(CodeOf([&] { Rate(config, Singles(2), Outcome::Scores({nan, 2.0})); }),
            ErrorCode::kNonFiniteInput);
  EXPECT_EQ(CodeOf([&] { Rate(config, {{{nan, 1.0}}, {kDefault}}); }),
            ErrorCode::kNonFiniteInput);
  EXPECT_EQ(CodeOf([&] { Rate(config, {{{25.0, 0.0}}, {kDefault}}); }),
            ErrorCode::kNonFiniteInput);
}

TEST(RateTest, InputNotMutatedAndDeterministic) {
  testing::Gen gen(5);
  Teams teams = gen.RandomTeams(3, 3);
  Teams copy = teams;
  ModelConfig config = ModelConfig::Create(Model::kThurstoneMostellerFull);
  Teams a = Rate(config, teams, Outcome::Ranks({2, 1, 3}));
  EXPECT_EQ(teams, copy);
  EXPECT_EQ(a, Rate(config, teams, Outcome::Ranks({2, 1, 3})));
}

// ---- Properties over random instances ----

constexpr int kInstances = 1000;

TEST(ModelPropertyTest, MatchesLongDoubleReference) {
  testing::Gen gen(101);
  for (Model model : kAllModels) {
    for (int n = 0; n < kInstances / 2; ++n) {
      Teams teams = gen.RandomTeams(2, 6);
      std::vector<int> ranks =
          gen.Coin() ? gen.StrictRanks(teams.size()) : gen.TiedRanks(teams.size());
      ConfigOptions options;
      options.limit_sigma = gen.Coin(0.3);
      if (gen.Coin(0.3)) options.tau = 0.0;
      ModelConfig config = ModelConfig::Create(model, options);
      Teams got = Rate(config, teams, Outcome::Ranks(ranks));
      auto want = oracle::ReferenceRate(config, teams, ranks);
      for (std::size_t i = 0; i < teams.size(); ++i) {
        for (std::size_t j = 0; j < teams[i].size(); ++j) {
          ASSERT_NEAR(got[i][j].mu, static_cast<double>(want[i][j].mu), 1e-9)
              << ModelName(model) << " instance " << n;
          ASSERT_NEAR(got[i][j].sigma, static_cast<double>(want[i][j].sigma), 1e-9)
              << ModelName(model) << " instance " << n;
        }
      }
    }
  }
}

TEST(ModelPropertyTest, TwoTeamEquivalences) {
  testing::Gen gen(102);
  double worst_pl = 0.0, worst_tm = 0.0;
  for (int n = 0; n < kInstances; ++n) {
    Teams teams = gen.RandomTeams(2, 2);
    std::vector<int> ranks = gen.Coin(0.2) ? std::vector<int>{1, 1} : gen.StrictRanks(2);
    auto rate = [&](Model m) { return Rate(ModelConfig::Create(m), teams, Outcome::Ranks(ranks)); };
    Teams pl = rate(Model::kPlackettLuce);
    Teams btf = rate(Model::kBradleyTerryFull);
    Teams btp = rate(Model::kBradleyTerryPart);
    Teams tmf = rate(Model::kThurstoneMostellerFull);
    Teams tmp = rate(Model::kThurstoneMostellerPart);
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < teams[i].size(); ++j) {
        for (const Teams* other : {&btf, &btp}) {
          worst_pl = std::max({worst_pl, std::abs(pl[i][j].mu - (*other)[i][j].mu),
                               std::abs(pl[i][j].sigma - (*other)[i][j].sigma)});
        }
        worst_tm = std::max({worst_tm, std::abs(tmf[i][j].mu - tmp[i][j].mu),
                             std::abs(tmf[i][j].sigma - tmp[i][j].sigma)});
      }
    }
  }
  EXPECT_LT(worst_pl, 1e-12);
  EXPECT_LT(worst_tm, 1e-12);
}

TEST(ModelPropertyTest, SigmaNeverIncreasesWithoutTau) {
  testing::Gen gen(103);
  for (Model model : kAllModels) {
    ModelConfig config = NoTau(model);
    for (int n = 0; n < kInstances; ++n) {
      Teams teams = gen.RandomTeams(2, 8);
      std::vector<int> ranks =
          gen.Coin() ? gen.StrictRanks(teams.size()) : gen.TiedRanks(teams.size());
      Teams out = Rate(config, teams, Outcome::Ranks(ranks));
      for (std::size_t i = 0; i < teams.size(); ++i) {
        for (std::size_t j = 0; j < teams[i].size(); ++j) {
          double before = teams[i][j].sigma, after = out[i][j].sigma;
          ASSERT_LE(after, before) << ModelName(model);
          ASSERT_GE(after * after, config.kappa() * before * before * (1 - 1e-12))
              << ModelName(model);
        }
      }
    }
  }
}

TEST(ModelPropertyTest, FullTieOfIdenticalTeamsKeepsMeans) {
  testing::Gen gen(104);
  for (Model model : kAllModels) {
    for (int n = 0; n < kInstances; ++n) {
      int k = gen.Int(2, 8);
      Team team(gen.Int(1, 4));
      for (Rating& r : team) r = gen.RandomRating();
      Teams teams(k, team);
      Teams out = Rate(ModelConfig::Create(model), teams,
                       Outcome::Ranks(std::vector<int>(k, 1)));
      for (std::size_t i = 0; i < teams.size(); ++i) {
        for (std::size_t j = 0; j < team.size(); ++j) {
          ASSERT_NEAR(out[i][j].mu, teams[i][j].mu, 1e-12) << ModelName(model);
        }
      }
    }
  }
}

TEST(ModelPropertyTest, PlackettLuceConservesMeanForEqualTeamVariance) {
  testing::Gen gen(105);
  for (int n = 0; n < kInstances; ++n) {
    int k = gen.Int(2, 8);
    int size = gen.Int(1, 4);
    std::vector<double> sigmas(size);
    for (double& s : sigmas) s = gen.Real(1.0, 10.0);
    Teams teams(k);
    for (Team& team : teams) {
      // Same sigma multiset per team, in a shuffled order, with random mus.
      std::vector<double> order = sigmas;
      std::shuffle(order.begin(), order.end(), gen.engine());
      for (double s : order) team.push_back({gen.Real(0.0, 50.0), s});
    }
    std::vector<int> ranks = gen.Coin() ? gen.StrictRanks(k) : gen.TiedRanks(k);
    Teams out = Rate(ModelConfig::Create(Model::kPlackettLuce), teams, Outcome::Ranks(ranks));
    double change = 0.0;
    for (std::size_t i = 0; i < teams.size(); ++i) {
      for (std::size_t j = 0; j < teams[i].size(); ++j) {
        change += out[i][j].mu - teams[i][j].mu;
      }
    }
    ASSERT_LT(std::abs(change), 1e-9) << n;
  }
}

TEST(ModelPropertyTest, TwoTeamWinnerRisesLoserFalls) {
  testing::Gen gen(106);
  for (Model model : kAllModels) {
    for (int n = 0; n < kInstances; ++n) {
      Teams teams = gen.RandomTeams(2, 2);
      Teams out = Rate(ModelConfig::Create(model), teams);
      double before0 = 0, after0 = 0, before1 = 0, after1 = 0;
      for (std::size_t j = 0; j < teams[0].size(); ++j) {
        before0 += teams[0][j].mu;
        after0 += out[0][j].mu;
      }
      for (std::size_t j = 0; j < teams[1].size(); ++j) {
        before1 += teams[1][j].mu;
        after1 += out[1][j].mu;
      }
      ASSERT_GE(after0, before0) << ModelName(model);
      ASSERT_LE(after1, before1) << ModelName(model);
      // Strict unless the winner was so far ahead that the update underflows.
      if (before0 - before1 < 40.0) {
        ASSERT_GT(after0, before0) << ModelName(model);
        ASSERT_LT(after1, before1) << ModelName(model);
      }
    }
  }
}

TEST(ModelPropertyTest, PermutationEquivariance) {
  testing::Gen gen(107);
  for (Model model : kAllModels) {
    const bool partial = model == Model::kBradleyTerryPart ||
                         model == Model::kThurstoneMostellerPart;
    ModelConfig config = ModelConfig::Create(model);
    for (int n = 0; n < kInstances; ++n) {
      Teams teams = gen.RandomTeams(2, 7);
      const std::size_t k = teams.size();
      // Adjacency among tied teams follows input order, so partial rules
      // are only equivariant for strict rankings.
      std::vector<int> ranks = partial || gen.Coin() ? gen.StrictRanks(k) : gen.TiedRanks(k);
      std::vector<std::size_t> perm(k);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), gen.engine());
      Teams permuted(k);
      std::vector<int> permuted_ranks(k);
      for (std::size_t i = 0; i < k; ++i) {
        permuted[i] = teams[perm[i]];
        permuted_ranks[i] = ranks[perm[i]];
      }
      Teams a = Rate(config, teams, Outcome::Ranks(ranks));
      Teams b = Rate(config, permuted, Outcome::Ranks(permuted_ranks));
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < teams[perm[i]].size(); ++j) {
          ASSERT_NEAR(b[i][j].mu, a[perm[i]][j].mu, 1e-12) << ModelName(model);
          ASSERT_NEAR(b[i][j].sigma, a[perm[i]][j].sigma, 1e-12) << ModelName(model);
        }
      }
    }
  }
}

TEST(ModelPropertyTest, EqualPriorsOnATeamGetEqualPosteriors) {
  testing::Gen gen(108);
  for (Model model : kAllModels) {
    for (int n = 0; n < 200; ++n) {
      Teams teams = gen.RandomTeams(2, 5);
      Rating shared = gen.RandomRating();
      teams[0] = Team(gen.Int(2, 4), shared);
      Teams out = Rate(ModelConfig::Create(model), teams,
                       Outcome::Ranks(gen.TiedRanks(teams.size())));
      for (const Rating& r : out[0]) ASSERT_EQ(r, out[0][0]);
    }
  }
}

TEST(ModelPropertyTest, DeltaNonNegativeAndOmegaFinite) {
  testing::Gen gen(109);
  for (Model model : kAllModels) {
    for (int n = 0; n < 300; ++n) {
      Teams teams = gen.RandomTeams(2, 8);
      // Include extreme skill gaps to reach the gaussian tails.
      if (gen.Coin(0.3)) teams[0][0].mu = gen.Real(-5000.0, 5000.0);
      auto updates = UpdatesFor(model, teams, gen.TiedRanks(teams.size()));
      for (const TeamUpdate& u : updates) {
        ASSERT_TRUE(std::isfinite(u.omega));
        ASSERT_GE(u.delta, 0.0);
      }
    }
  }
}

TEST(ParallelTest, KernelsBitIdenticalToSerial) {
  testing::Gen gen(110);
  for (Model model : kAllModels) {
    for (int n = 0; n < 20; ++n) {
      Teams teams = gen.RandomTeams(2, 150, 1, 2);
      std::vector<int> ranks = gen.TiedRanks(teams.size());
      auto serial = UpdatesFor(model, teams, ranks, Execution::kSerial);
      auto parallel = UpdatesFor(model, teams, ranks, Execution::kParallel);
      ASSERT_EQ(serial.size(), parallel.size());
      for (std::size_t i = 0; i < serial.size(); ++i) {
        ASSERT_EQ(serial[i].omega, parallel[i].omega);
        ASSERT_EQ(serial[i].delta, parallel[i].delta);
      }
      ModelConfig config = ModelConfig::Create(model);
      ASSERT_EQ(Rate(config, teams, Outcome::Ranks(ranks), Execution::kSerial),
                Rate(config, teams, Outcome::Ranks(ranks), Execution::kParallel));
    }
  }
}

}  // namespace
}  // namespace skillrate
