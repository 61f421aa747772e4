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
#include <numeric>
#include <string>

#include "skillrate/error.h"
#include "skillrate/gaussian.h"

namespace skillrate {

std::vector<int> ScoresToRanks(std::span<const double> scores) {
  std::vector<double> distinct(scores.begin(), scores.end());
  std::sort(distinct.begin(), distinct.end(), std::greater<>());
  distinct.erase(std::unique(distinct.begin(), distinct.end()),
                 distinct.end());
  std::vector<int> ranks;
  ranks.reserve(scores.size());
  for (double score : scores) {
    auto it = std::lower_bound(distinct.begin(), distinct.end(), score,
                               std::greater<>());
    ranks.push_back(static_cast<int>(it - distinct.begin()) + 1);
  }
  return ranks;
}

std::vector<int> Outcome::ResolveRanks(std::size_t team_count) const {
  if (has_ranks()) {
    const auto& r = ranks();
    if (r.size() != team_count) {
      throw Error(ErrorCode::kRankMismatch,
                  "got " + std::to_string(r.size()) + " ranks for " +
                      std::to_string(team_count) + " teams");
    }
    for (int rank : r) {
      if (rank < 1) throw Error(ErrorCode::kRankMismatch, "ranks must be >= 1");
    }
    return r;
  }
  if (has_scores()) {
    const auto& s = scores();
    if (s.size() != team_count) {
      throw Error(ErrorCode::kRankMismatch,
                  "got " + std::to_string(s.size()) + " scores for " +
                      std::to_string(team_count) + " teams");
    }
    for (double score : s) {
      if (!std::isfinite(score)) {
        throw Error(ErrorCode::kNonFiniteInput, "scores must be finite");
      }
    }
    return ScoresToRanks(s);
  }
  std::vector<int> listed(team_count);
  std::iota(listed.begin(), listed.end(), 1);
  return listed;
}

void ValidateTeams(const Teams& teams) {
  if (teams.size() < 2) {
    throw Error(ErrorCode::kEmptyMatch, "a match needs at least two teams");
  }
  for (std::size_t i = 0; i < teams.size(); ++i) {
    if (teams[i].empty()) {
      throw Error(ErrorCode::kEmptyTeam,
                  "team " + std::to_string(i) + " has no players");
    }
  }
}

std::vector<TeamRating> AggregateTeams(const Teams& teams,
                                       std::span<const int> ranks) {
  ValidateTeams(teams);
  if (ranks.size() != teams.size()) {
    throw Error(ErrorCode::kRankMismatch, "rank count differs from team count");
  }
  std::vector<TeamRating> out;
  out.reserve(teams.size());
  for (std::size_t i = 0; i < teams.size(); ++i) {
    TeamRating team{0.0, 0.0, ranks[i], i};
    for (const Rating& player : teams[i]) {
      team.mu += player.mu;
      team.sigma_sq += player.sigma * player.sigma;
    }
    out.push_back(team);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const TeamRating& a, const TeamRating& b) {
                     return a.rank < b.rank;
                   });
  return out;
}

Teams ApplyDynamics(const Teams& teams, double tau) {
  Teams out = teams;
  if (tau == 0.0) return out;
  double tau_sq = tau * tau;
  for (Team& team : out) {
    for (Rating& player : team) {
      player.sigma = std::sqrt(player.sigma * player.sigma + tau_sq);
    }
  }
  return out;
}

double PlackettLuceC(std::span<const TeamRating> team_ratings, double beta) {
  double beta_sq = beta * beta;
  double sum = 0.0;
  for (const TeamRating& team : team_ratings) sum += team.sigma_sq + beta_sq;
  return std::sqrt(sum);
}

std::vector<TeamUpdate> PlackettLuceUpdates(
    std::span<const TeamRating> team_ratings, const ModelConfig& config,
    Execution execution) {
  const std::size_t k = team_ratings.size();
  const double c = PlackettLuceC(team_ratings, config.beta());

  // exp(mu/c) shifted by the largest mean; P_iq is invariant to the shift.
  double max_mu = team_ratings.empty() ? 0.0 : team_ratings[0].mu;
  for (const TeamRating& team : team_ratings) max_mu = std::max(max_mu, team.mu);
  std::vector<double> strength(k);
  for (std::size_t i = 0; i < k; ++i) {
    strength[i] = std::exp((team_ratings[i].mu - max_mu) / c);
  }

  // sum_q: total strength of teams ranked no better than q.
  // tie_count: number of teams sharing q's rank.
  std::vector<double> sum_q(k, 0.0);
  std::vector<double> tie_count(k, 0.0);
  for (std::size_t q = 0; q < k; ++q) {
    for (std::size_t s = 0; s < k; ++s) {
      if (team_ratings[s].rank >= team_ratings[q].rank) sum_q[q] += strength[s];
      if (team_ratings[s].rank == team_ratings[q].rank) tie_count[q] += 1.0;
    }
  }

  std::vector<TeamUpdate> updates(k);
  const long long n = static_cast<long long>(k);
#pragma omp parallel for schedule(static) if (execution == Execution::kParallel)
  for (long long ii = 0; ii < n; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    const TeamRating& team = team_ratings[i];
    double omega = 0.0;
    double delta = 0.0;
    for (std::size_t q = 0; q < k; ++q) {
      if (team_ratings[q].rank > team.rank) continue;
      double p = strength[i] / sum_q[q];
      omega += ((q == i ? 1.0 : 0.0) - p) / tie_count[q];
      delta += p * (1.0 - p) / tie_count[q];
    }
    double gamma = config.gamma()(c, k, team.sigma_sq);
    updates[i].omega = omega * team.sigma_sq / c;
    updates[i].delta = gamma * delta * team.sigma_sq / (c * c);
  }
  return updates;
}

namespace {

struct PairTerm {
  double omega = 0.0;
  double delta = 0.0;
};

PairTerm BradleyTerryPair(const TeamRating& i, const TeamRating& q,
                          const ModelConfig& config, std::size_t k) {
  double beta = config.beta();
  double c = std::sqrt(i.sigma_sq + q.sigma_sq + 2.0 * beta * beta);
  double p = 1.0 / (1.0 + std::exp((q.mu - i.mu) / c));
  double score = q.rank > i.rank ? 1.0 : (q.rank == i.rank ? 0.5 : 0.0);
  double gamma = config.gamma()(c, k, i.sigma_sq);
  double spread = i.sigma_sq / c;
  return {spread * (score - p), gamma * spread / c * p * (1.0 - p)};
}

PairTerm ThurstoneMostellerPair(const TeamRating& i, const TeamRating& q,
                                const ModelConfig& config, std::size_t k) {
  double beta = config.beta();
  double c = std::sqrt(i.sigma_sq + q.sigma_sq + 2.0 * beta * beta);
  double x = (i.mu - q.mu) / c;
  double t = config.epsilon() / c;
  double gamma = config.gamma()(c, k, i.sigma_sq);
  double spread = i.sigma_sq / c;
  double shrink = gamma * spread / c;
  if (q.rank > i.rank) {
    return {spread * gaussian::VWin(x, t), shrink * gaussian::WWin(x, t)};
  }
  if (q.rank < i.rank) {
    return {-spread * gaussian::VWin(-x, t), shrink * gaussian::WWin(-x, t)};
  }
  return {spread * gaussian::VDraw(x, t), shrink * gaussian::WDraw(x, t)};
}

template <typename PairFn>
std::vector<TeamUpdate> PairwiseUpdates(std::span<const TeamRating> teams,
                                        const ModelConfig& config,
                                        Execution execution, bool adjacent_only,
                                        PairFn pair) {
  const std::size_t k = teams.size();
  std::vector<TeamUpdate> updates(k);
  const long long n = static_cast<long long>(k);
#pragma omp parallel for schedule(static) if (execution == Execution::kParallel)
  for (long long ii = 0; ii < n; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    TeamUpdate update;
    auto accumulate = [&](std::size_t q) {
      PairTerm term = pair(teams[i], teams[q], config, k);
      update.omega += term.omega;
      update.delta += term.delta;
    };
    if (adjacent_only) {
      if (i > 0) accumulate(i - 1);
      if (i + 1 < k) accumulate(i + 1);
    } else {
      for (std::size_t q = 0; q < k; ++q) {
        if (q != i) accumulate(q);
      }
    }
    updates[i] = update;
  }
  return updates;
}

}  // namespace

std::vector<TeamUpdate> BradleyTerryFullUpdates(
    std::span<const TeamRating> team_ratings, const ModelConfig& config,
    Execution execution) {
  return PairwiseUpdates(team_ratings, config, execution, false,
                         BradleyTerryPair);
}

std::vector<TeamUpdate> BradleyTerryPartUpdates(
    std::span<const TeamRating> team_ratings, const ModelConfig& config,
    Execution execution) {
  return PairwiseUpdates(team_ratings, config, execution, true,
                         BradleyTerryPair);
}

std::vector<TeamUpdate> ThurstoneMostellerFullUpdates(
    std::span<const TeamRating> team_ratings, const ModelConfig& config,
    Execution execution) {
  return PairwiseUpdates(team_ratings, config, execution, false,
                         ThurstoneMostellerPair);
}

std::vector<TeamUpdate> ThurstoneMostellerPartUpdates(
    std::span<const TeamRating> team_ratings, const ModelConfig& config,
    Execution execution) {
  return PairwiseUpdates(team_ratings, config, execution, true,
                         ThurstoneMostellerPair);
}

std::vector<TeamUpdate> TeamUpdates(std::span<const TeamRating> team_ratings,
                                    const ModelConfig& config,
                                    Execution execution) {
  switch (config.model()) {
    case Model::kPlackettLuce:
      return PlackettLuceUpdates(team_ratings, config, execution);
    case Model::kBradleyTerryFull:
      return BradleyTerryFullUpdates(team_ratings, config, execution);
    case Model::kBradleyTerryPart:
      return BradleyTerryPartUpdates(team_ratings, config, execution);
    case Model::kThurstoneMostellerFull:
      return ThurstoneMostellerFullUpdates(team_ratings, config, execution);
    case Model::kThurstoneMostellerPart:
      return ThurstoneMostellerPartUpdates(team_ratings, config, execution);
  }
  return {};
}

Teams DistributeToPlayers(const Teams& teams,
                          std::span<const TeamUpdate> updates, double kappa) {
  if (teams.size() != updates.size()) {
    throw Error(ErrorCode::kShapeMismatch,
                std::to_string(updates.size()) + " updates for " +
                    std::to_string(teams.size()) + " teams");
  }
  Teams out = teams;
  for (std::size_t i = 0; i < out.size(); ++i) {
    double team_sigma_sq = 0.0;
    for (const Rating& player : teams[i]) {
      team_sigma_sq += player.sigma * player.sigma;
    }
    for (Rating& player : out[i]) {
      double share = player.sigma * player.sigma / team_sigma_sq;
      player.mu += share * updates[i].omega;
      player.sigma *= std::sqrt(std::max(1.0 - share * updates[i].delta, kappa));
    }
  }
  return out;
}

Teams Rate(const ModelConfig& config, const Teams& teams,
           const Outcome& outcome, Execution execution) {
  ValidateTeams(teams);
  for (const Team& team : teams) {
    for (const Rating& player : team) {
      if (!player.IsValid()) {
        throw Error(ErrorCode::kNonFiniteInput,
                    "ratings need finite mu and finite sigma > 0");
      }
    }
  }
  std::vector<int> ranks = outcome.ResolveRanks(teams.size());

  Teams inflated = ApplyDynamics(teams, config.tau());
  std::vector<TeamRating> sorted = AggregateTeams(inflated, ranks);
  Execution kernel = execution == Execution::kParallel &&
                             sorted.size() >= kParallelTeamThreshold
                         ? Execution::kParallel
                         : Execution::kSerial;
  std::vector<TeamUpdate> sorted_updates = TeamUpdates(sorted, config, kernel);

  std::vector<TeamUpdate> updates(teams.size());
  for (std::size_t s = 0; s < sorted.size(); ++s) {
    updates[sorted[s].source_index] = sorted_updates[s];
  }
  Teams result = DistributeToPlayers(inflated, updates, config.kappa());

  if (config.limit_sigma()) {
    for (std::size_t i = 0; i < result.size(); ++i) {
      for (std::size_t j = 0; j < result[i].size(); ++j) {
        result[i][j].sigma = std::min(result[i][j].sigma, teams[i][j].sigma);
      }
    }
  }
  return result;
}

}  // namespace skillrate
