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

#include "skillrate/synth.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <utility>

#include "skillrate/error.h"

namespace skillrate {

double SynthRandom::Uniform() {
  // 53 random bits, offset by half a step so 0 and 1 are never produced.
  return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double SynthRandom::Normal() {
  double radius = std::sqrt(-2.0 * std::log(Uniform()));
  return radius * std::cos(2.0 * std::numbers::pi * Uniform());
}

double SynthRandom::Gumbel() { return -std::log(-std::log(Uniform())); }

std::uint64_t SynthRandom::Below(std::uint64_t bound) {
  // Reject the top partial bucket of the 64-bit range.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<LatentPlayer> GeneratePlayers(std::size_t n, std::uint64_t seed,
                                          const SynthParams& params) {
  if (n < 2) {
    throw Error(ErrorCode::kInvalidArgument, "need at least two players");
  }
  SynthRandom rng(seed);
  std::vector<LatentPlayer> players;
  players.reserve(n);
  char id[32];
  for (std::size_t i = 0; i < n; ++i) {
    std::snprintf(id, sizeof(id), "p%04zu", i);
    players.push_back({id, params.mu + params.sigma * rng.Normal()});
  }
  return players;
}

namespace {

void FillBlock(const std::vector<LatentPlayer>& players, std::size_t first,
               std::size_t last, std::size_t team_size,
               std::size_t teams_per_match, std::uint64_t block_seed,
               const SynthParams& params, std::vector<MatchRecord>& out) {
  SynthRandom rng(block_seed);
  const std::size_t needed = team_size * teams_per_match;
  const double noise_scale = params.beta * std::sqrt(static_cast<double>(team_size));
  std::vector<std::size_t> pool(players.size());
  for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = i;
  std::vector<double> strength(teams_per_match);

  for (std::size_t m = first; m < last; ++m) {
    // Partial Fisher-Yates; the prefix is a uniform subset whatever order
    // earlier matches left the pool in.
    for (std::size_t i = 0; i < needed; ++i) {
      std::size_t j = i + rng.Below(pool.size() - i);
      std::swap(pool[i], pool[j]);
    }

    MatchRecord& match = out[m];
    match.id = "g" + std::to_string(m);
    match.ts = static_cast<std::int64_t>(m);
    match.teams.assign(teams_per_match, {});
    for (std::size_t t = 0; t < teams_per_match; ++t) {
      double total = 0.0;
      for (std::size_t s = 0; s < team_size; ++s) {
        const LatentPlayer& player = players[pool[t * team_size + s]];
        match.teams[t].push_back(player.id);
        total += player.skill;
      }
      strength[t] = total + noise_scale * rng.Gumbel();
    }
    std::vector<int> ranks(teams_per_match);
    for (std::size_t t = 0; t < teams_per_match; ++t) {
      int better = 0;
      for (double other : strength) better += other > strength[t] ? 1 : 0;
      ranks[t] = better + 1;
    }
    match.ranks = std::move(ranks);
  }
}

}  // namespace

std::vector<MatchRecord> GenerateMatches(
    const std::vector<LatentPlayer>& players, std::size_t count,
    std::size_t team_size, std::size_t teams_per_match, std::uint64_t seed,
    const SynthParams& params, Execution execution) {
  if (team_size == 0 || teams_per_match < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "need team_size >= 1 and teams_per_match >= 2");
  }
  if (team_size * teams_per_match > players.size()) {
    throw Error(ErrorCode::kInsufficientPlayers,
                "a match needs " + std::to_string(team_size * teams_per_match) +
                    " players but only " + std::to_string(players.size()) +
                    " exist");
  }
  std::vector<MatchRecord> out(count);
  const long long blocks =
      static_cast<long long>((count + kSynthBlockSize - 1) / kSynthBlockSize);
#pragma omp parallel for schedule(dynamic, 1) if (execution == Execution::kParallel)
  for (long long b = 0; b < blocks; ++b) {
    std::size_t first = static_cast<std::size_t>(b) * kSynthBlockSize;
    std::size_t last = std::min(count, first + kSynthBlockSize);
    FillBlock(players, first, last, team_size, teams_per_match,
              DeriveSeed(seed, static_cast<std::uint64_t>(b)), params, out);
  }
  return out;
}

}  // namespace skillrate
