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

// The shared rating pipeline and the five team-level update rules.
//
// Every rule maps rank-sorted team aggregates to a TeamUpdate per team:
// omega is the additive shift of the team mean and delta the variance-shrink
// argument. DistributeToPlayers then splits both across team members in
// proportion to each member's share of the team variance.

#ifndef SKILLRATE_MODELS_H_
#define SKILLRATE_MODELS_H_

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "skillrate/core.h"
#include "skillrate/execution.h"

namespace skillrate {

struct TeamUpdate {
  double omega = 0.0;
  double delta = 0.0;
};

// How a match finished. Ranks ascend from 1 = best; scores descend (higher is
// better). ListedOrder means the teams finished in the order given.
class Outcome {
 public:
  static Outcome ListedOrder() { return Outcome(std::monostate{}); }
  static Outcome Ranks(std::vector<int> ranks) {
    return Outcome(std::move(ranks));
  }
  static Outcome Scores(std::vector<double> scores) {
    return Outcome(std::move(scores));
  }

  bool has_ranks() const { return std::holds_alternative<std::vector<int>>(v_); }
  bool has_scores() const {
    return std::holds_alternative<std::vector<double>>(v_);
  }
  const std::vector<int>& ranks() const { return std::get<std::vector<int>>(v_); }
  const std::vector<double>& scores() const {
    return std::get<std::vector<double>>(v_);
  }

  // Rank per team (1 = best). Scores convert to dense ranks of descending
  // score. Throws Error(kRankMismatch) when the length differs from
  // team_count or a rank is < 1, Error(kNonFiniteInput) for a non-finite
  // score.
  std::vector<int> ResolveRanks(std::size_t team_count) const;

 private:
  using Value = std::variant<std::monostate, std::vector<int>, std::vector<double>>;
  explicit Outcome(Value v) : v_(std::move(v)) {}
  Value v_;
};

// Dense ranks of descending scores: the highest score gets rank 1 and equal
// scores share a rank.
std::vector<int> ScoresToRanks(std::span<const double> scores);

// Throws Error(kEmptyMatch) for fewer than two teams and Error(kEmptyTeam)
// when a team has no players.
void ValidateTeams(const Teams& teams);

// Team aggregates sorted by rank ascending; ties keep input order.
std::vector<TeamRating> AggregateTeams(const Teams& teams,
                                       std::span<const int> ranks);

// sigma <- sqrt(sigma^2 + tau^2) for every player.
Teams ApplyDynamics(const Teams& teams, double tau);

// sqrt(sum_i (sigma_i^2 + beta^2)).
double PlackettLuceC(std::span<const TeamRating> team_ratings, double beta);

// The update rules take rank-sorted aggregates (as from AggregateTeams) and
// return one update per input team, in the same order. Under
// Execution::kParallel the per-team loop runs as an OpenMP kernel; results
// are bit-identical to the serial loop.
std::vector<TeamUpdate> PlackettLuceUpdates(
    std::span<const TeamRating> team_ratings, const ModelConfig& config,
    Execution execution = Execution::kSerial);
std::vector<TeamUpdate> BradleyTerryFullUpdates(
    std::span<const TeamRating> team_ratings, const ModelConfig& config,
    Execution execution = Execution::kSerial);
// Each team pairs only with its neighbours in the rank-sorted sequence.
std::vector<TeamUpdate> BradleyTerryPartUpdates(
    std::span<const TeamRating> team_ratings, const ModelConfig& config,
    Execution execution = Execution::kSerial);
std::vector<TeamUpdate> ThurstoneMostellerFullUpdates(
    std::span<const TeamRating> team_ratings, const ModelConfig& config,
    Execution execution = Execution::kSerial);
std::vector<TeamUpdate> ThurstoneMostellerPartUpdates(
    std::span<const TeamRating> team_ratings, const ModelConfig& config,
    Execution execution = Execution::kSerial);

// Dispatches on config.model().
std::vector<TeamUpdate> TeamUpdates(std::span<const TeamRating> team_ratings,
                                    const ModelConfig& config,
                                    Execution execution = Execution::kSerial);

// For player j of team i:
//   mu_ij    += (sigma_ij^2 / sigma_i^2) * omega_i
//   sigma_ij *= sqrt(max(1 - (sigma_ij^2 / sigma_i^2) * delta_i, kappa))
// `teams` and `updates` are indexed alike; sigma_i^2 is recomputed from the
// team. Throws Error(kShapeMismatch) when the sizes differ.
Teams DistributeToPlayers(const Teams& teams,
                          std::span<const TeamUpdate> updates, double kappa);

// Team count from which Rate switches to the parallel kernels when asked to.
inline constexpr std::size_t kParallelTeamThreshold = 64;

// Full pipeline: resolve ranks, inflate sigma by tau, aggregate and sort,
// apply the model rule, distribute to players and restore input order. With
// limit_sigma no player's sigma ends above its value before the call. Inputs
// are not modified.
//
// Throws Error with kEmptyMatch, kEmptyTeam, kRankMismatch or
// kNonFiniteInput (non-finite mu/sigma or sigma <= 0).
Teams Rate(const ModelConfig& config, const Teams& teams,
           const Outcome& outcome = Outcome::ListedOrder(),
           Execution execution = Execution::kSerial);

}  // namespace skillrate

#endif  // SKILLRATE_MODELS_H_
