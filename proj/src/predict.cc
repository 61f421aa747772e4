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

#include "skillrate/predict.h"

#include <algorithm>
#include <cmath>
#include <exception>

#include "skillrate/error.h"
#include "skillrate/gaussian.h"
#include "skillrate/models.h"

namespace skillrate {
namespace {

struct Aggregate {
  double mu = 0.0;
  double sigma_sq = 0.0;
};

std::vector<Aggregate> Aggregates(const Teams& teams) {
  ValidateTeams(teams);
  std::vector<Aggregate> out;
  out.reserve(teams.size());
  for (const Team& team : teams) {
    Aggregate agg;
    for (const Rating& player : team) {
      if (!player.IsValid()) {
        throw Error(ErrorCode::kNonFiniteInput,
                    "ratings need finite mu and finite sigma > 0");
      }
      agg.mu += player.mu;
      agg.sigma_sq += player.sigma * player.sigma;
    }
    out.push_back(agg);
  }
  return out;
}

double PairScale(const Aggregate& a, const Aggregate& b, double beta) {
  return std::sqrt(a.sigma_sq + b.sigma_sq + 2.0 * beta * beta);
}

// P(lo < Z < hi) for standard normal Z, evaluated on the side of the
// distribution that avoids cancellation.
double IntervalProbability(double lo, double hi) {
  if (hi <= lo) return 0.0;
  if (lo >= 0.0) return gaussian::Cdf(-lo) - gaussian::Cdf(-hi);
  if (hi <= 0.0) return gaussian::Cdf(hi) - gaussian::Cdf(lo);
  return 1.0 - gaussian::Cdf(lo) - gaussian::Cdf(-hi);
}

}  // namespace

std::vector<double> PredictWin(const ModelConfig& config, const Teams& teams) {
  std::vector<Aggregate> agg = Aggregates(teams);
  const std::size_t k = agg.size();
  const double pair_count = static_cast<double>(k * (k - 1)) / 2.0;
  std::vector<double> out(k);
  std::vector<double> terms;
  terms.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    terms.clear();
    for (std::size_t q = 0; q < k; ++q) {
      if (q == i) continue;
      double c = PairScale(agg[i], agg[q], config.beta());
      terms.push_back(gaussian::Cdf((agg[i].mu - agg[q].mu) / c));
    }
    // Summing in sorted order makes equal multisets of pair terms produce
    // exactly equal scores, independent of team order.
    std::sort(terms.begin(), terms.end());
    double sum = 0.0;
    for (double term : terms) sum += term;
    out[i] = sum / pair_count;
  }
  return out;
}

std::vector<RankPrediction> PredictRank(const ModelConfig& config,
                                        const Teams& teams) {
  std::vector<double> win = PredictWin(config, teams);
  std::vector<RankPrediction> out(win.size());
  for (std::size_t i = 0; i < win.size(); ++i) {
    int better = 0;
    for (double other : win) better += other > win[i] ? 1 : 0;
    out[i] = {better + 1, win[i]};
  }
  return out;
}

double PredictDraw(const ModelConfig& config, const Teams& teams) {
  std::vector<Aggregate> agg = Aggregates(teams);
  const std::size_t k = agg.size();
  const double eps = config.epsilon();
  double sum = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t q = i + 1; q < k; ++q) {
      double c = PairScale(agg[i], agg[q], config.beta());
      double diff = agg[i].mu - agg[q].mu;
      sum += IntervalProbability((-eps - diff) / c, (eps - diff) / c);
    }
  }
  return std::clamp(sum / (static_cast<double>(k * (k - 1)) / 2.0), 0.0, 1.0);
}

std::vector<std::vector<double>> PredictWinBatch(
    const ModelConfig& config, std::span<const Teams> matches,
    Execution execution) {
  std::vector<std::vector<double>> out(matches.size());
  const long long n = static_cast<long long>(matches.size());
  if (execution == Execution::kSerial) {
    for (long long m = 0; m < n; ++m) out[m] = PredictWin(config, matches[m]);
    return out;
  }
  // Exceptions may not cross the parallel region; one captured failure is
  // rethrown after the loop.
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 64)
  for (long long m = 0; m < n; ++m) {
    try {
      out[m] = PredictWin(config, matches[m]);
    } catch (...) {
#pragma omp critical(skillrate_predict_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace skillrate
