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

// Outcome prediction from current ratings. All three predictors work on team
// aggregates and the pairwise normalizer c_iq = sqrt(s_i^2 + s_q^2 + 2 beta^2).

#ifndef SKILLRATE_PREDICT_H_
#define SKILLRATE_PREDICT_H_

#include <span>
#include <vector>

#include "skillrate/core.h"
#include "skillrate/execution.h"

namespace skillrate {

// Per-team win probability: the mean over the k(k-1)/2 pairs of
// Phi((mu_i - mu_q) / c_iq), summed over the team's pairs. Sums to one.
std::vector<double> PredictWin(const ModelConfig& config, const Teams& teams);

struct RankPrediction {
  int rank = 1;
  double probability = 0.0;
};

// Competition ranking (1 + number of strictly better teams) of the
// PredictWin scores; the probability reported per team is its win score.
std::vector<RankPrediction> PredictRank(const ModelConfig& config,
                                        const Teams& teams);

// Mean over pairs of P(|performance difference| < epsilon).
double PredictDraw(const ModelConfig& config, const Teams& teams);

// PredictWin over many independent matches. The parallel kernel spreads
// matches over OpenMP threads; output matches the serial loop exactly.
std::vector<std::vector<double>> PredictWinBatch(
    const ModelConfig& config, std::span<const Teams> matches,
    Execution execution = Execution::kSerial);

}  // namespace skillrate

#endif  // SKILLRATE_PREDICT_H_
