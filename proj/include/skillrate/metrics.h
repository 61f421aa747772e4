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

// Benchmark harness: winner-prediction accuracy by sequential replay,
// Rank-Biased Overlap between rankings, and ordinal leaderboards.

#ifndef SKILLRATE_METRICS_H_
#define SKILLRATE_METRICS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "skillrate/core.h"
#include "skillrate/execution.h"
#include "skillrate/store.h"

namespace skillrate {

struct AccuracyReport {
  std::int64_t correct = 0;
  std::int64_t incorrect = 0;
  std::int64_t skipped = 0;
  // correct / (correct + incorrect), 0 when nothing was scored.
  double accuracy = 0.0;
  double runtime_seconds = 0.0;
};

struct ReplayOptions {
  // A match is scored only if every participant already has this many games.
  std::int64_t min_games = 0;
  // Matches before this index are applied but never scored.
  std::size_t score_from = 0;
};

struct ReplayResult {
  AccuracyReport report;
  RatingStore store;
};

// Replays `matches` in order onto `initial`. Before applying each match the
// winner is predicted as the argmax of PredictWin (lowest team index on
// ties) and compared with the true rank-1 team; matches tied for first are
// skipped. Every match is applied whether scored or not.
ReplayResult Replay(std::span<const MatchRecord> matches, RatingStore initial,
                    const ReplayOptions& options = {});

// Replay from an empty store with `config`.
AccuracyReport AccuracyReplay(std::span<const MatchRecord> matches,
                              const ModelConfig& config,
                              const ReplayOptions& options = {});

// One independent replay per config, each from an empty store. The parallel
// kernel runs configs on separate OpenMP threads.
std::vector<ReplayResult> EvaluateModels(std::span<const MatchRecord> matches,
                                         std::span<const ModelConfig> configs,
                                         const ReplayOptions& options = {},
                                         Execution execution = Execution::kSerial);

inline constexpr double kDefaultRboPersistence = 0.99;

// Extrapolated Rank-Biased Overlap of two equal-length rankings:
//   (X_k / k) p^k + ((1 - p) / p) sum_{d=1..k} (X_d / d) p^d,
// X_d = |prefix_d(a) ∩ prefix_d(b)|. Two empty lists score 1.
// Errors: kLengthMismatch, kDuplicateId, kInvalidArgument (p outside (0,1)).
double Rbo(std::span<const std::string> a, std::span<const std::string> b,
           double p = kDefaultRboPersistence);

// Player ids by ordinal (mu - z sigma) descending, ties by id ascending.
std::vector<std::string> Leaderboard(const RatingStore& store, double z);

std::string FormatReportLine(std::string_view model,
                             const AccuracyReport& report);

}  // namespace skillrate

#endif  // SKILLRATE_METRICS_H_
