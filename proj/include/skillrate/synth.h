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

// Seeded synthetic tournaments with known latent skills.
//
// Randomness comes from std::mt19937_64, whose output sequence is fixed by
// the C++ standard. Uniforms, normals (Box-Muller) and Gumbel variates are
// derived from its raw 64-bit output here rather than through the standard
// distribution classes, whose algorithms vary between library vendors.
//
// Team performance is the sum of latent member skills plus Gumbel noise with
// scale beta * sqrt(team_size); finishing order is descending performance,
// which makes the ground truth an exact Plackett-Luce process.

#ifndef SKILLRATE_SYNTH_H_
#define SKILLRATE_SYNTH_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "skillrate/core.h"
#include "skillrate/execution.h"
#include "skillrate/store.h"

namespace skillrate {

struct LatentPlayer {
  std::string id;
  double skill = 0.0;

  friend bool operator==(const LatentPlayer&, const LatentPlayer&) = default;
};

struct SynthParams {
  double mu = ModelConfig::kDefaultMu;
  double sigma = ModelConfig::kDefaultSigma;
  double beta = ModelConfig::kDefaultSigma / 2.0;
};

// Portable draws from a seeded mt19937_64.
class SynthRandom {
 public:
  explicit SynthRandom(std::uint64_t seed) : engine_(seed) {}

  // Uniform on the open interval (0, 1).
  double Uniform();
  double Normal();
  // Standard Gumbel (location 0, scale 1).
  double Gumbel();
  // Uniform integer in [0, bound), bound > 0; rejection sampling, no bias.
  std::uint64_t Below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

// Seed for block `index` of a stream seeded with `seed` (SplitMix64 mix).
std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t index);

// Players "p0000", "p0001", ... with skills ~ Normal(mu, sigma^2).
// Throws Error(kInvalidArgument) when n < 2.
std::vector<LatentPlayer> GeneratePlayers(std::size_t n, std::uint64_t seed,
                                          const SynthParams& params = {});

// Matches are generated in fixed blocks of kSynthBlockSize, block b drawing
// from DeriveSeed(seed, b); the parallel kernel fills blocks concurrently and
// yields the same log as the serial loop. Each match draws
// team_size * teams_per_match distinct players uniformly. Match ids are
// "g<index>", ts is the index, and ranks are given explicitly.
//
// Throws Error(kInsufficientPlayers) when a match needs more players than
// exist, Error(kInvalidArgument) for team_size == 0 or teams_per_match < 2.
inline constexpr std::size_t kSynthBlockSize = 256;

std::vector<MatchRecord> GenerateMatches(
    const std::vector<LatentPlayer>& players, std::size_t count,
    std::size_t team_size, std::size_t teams_per_match, std::uint64_t seed,
    const SynthParams& params = {}, Execution execution = Execution::kSerial);

}  // namespace skillrate

#endif  // SKILLRATE_SYNTH_H_
