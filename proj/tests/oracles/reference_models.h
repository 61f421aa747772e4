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

// Test-only literal transcription of the five update rules in long double.
// Works on teams in caller order with explicit rank sets (no sorting, no
// exponent shift, set membership recomputed per term) and uses the 50-digit
// Gaussian oracle for the Thurstone-Mosteller corrections.

#ifndef SKILLRATE_TESTS_ORACLES_REFERENCE_MODELS_H_
#define SKILLRATE_TESTS_ORACLES_REFERENCE_MODELS_H_

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "oracles/gaussian_oracle.h"
#include "skillrate/core.h"

namespace skillrate::oracle {

struct RefRating {
  long double mu;
  long double sigma;
};

inline long double RefV(long double x, long double t, bool draw) {
  Hp hx(x), ht(t);
  return (draw ? HpVDraw(hx, ht) : HpVWin(hx, ht)).convert_to<long double>();
}

inline long double RefW(long double x, long double t, bool draw) {
  Hp hx(x), ht(t);
  return (draw ? HpWDraw(hx, ht) : HpWWin(hx, ht)).convert_to<long double>();
}

// Rates `teams` (finishing ranks, 1 = best) with the rule selected by
// config.model(), following the full pipeline including tau and limit_sigma.
inline std::vector<std::vector<RefRating>> ReferenceRate(
    const ModelConfig& config, const Teams& teams, const std::vector<int>& ranks) {
  const std::size_t k = teams.size();
  const long double beta = config.beta();
  const long double tau = config.tau();

  std::vector<std::vector<RefRating>> players(k);
  std::vector<long double> mu(k, 0.0L), var(k, 0.0L);
  for (std::size_t i = 0; i < k; ++i) {
    for (const Rating& r : teams[i]) {
      long double s = std::sqrt(static_cast<long double>(r.sigma) * r.sigma + tau * tau);
      players[i].push_back({r.mu, s});
      mu[i] += r.mu;
      var[i] += s * s;
    }
  }

  std::vector<long double> omega(k, 0.0L), delta(k, 0.0L);
  const Model model = config.model();
  if (model == Model::kPlackettLuce) {
    long double c_sq = 0.0L;
    for (std::size_t i = 0; i < k; ++i) c_sq += var[i] + beta * beta;
    long double c = std::sqrt(c_sq);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t q = 0; q < k; ++q) {
        if (ranks[q] > ranks[i]) continue;
        long double denom = 0.0L;
        long double ties = 0.0L;
        for (std::size_t s = 0; s < k; ++s) {
          if (ranks[s] >= ranks[q]) denom += std::exp(mu[s] / c);
          if (ranks[s] == ranks[q]) ties += 1.0L;
        }
        long double p = std::exp(mu[i] / c) / denom;
        omega[i] += ((i == q ? 1.0L : 0.0L) - p) / ties;
        delta[i] += p * (1.0L - p) / ties;
      }
      long double gamma = std::sqrt(var[i]) / c;
      omega[i] *= var[i] / c;
      delta[i] *= gamma * var[i] / (c * c);
    }
  } else {
    const bool partial = model == Model::kBradleyTerryPart ||
                         model == Model::kThurstoneMostellerPart;
    const bool logistic = model == Model::kBradleyTerryFull ||
                          model == Model::kBradleyTerryPart;
    // Positions in the stable rank order, for the adjacency of partial rules.
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return ranks[a] < ranks[b]; });
    std::vector<std::size_t> position(k);
    for (std::size_t p = 0; p < k; ++p) position[order[p]] = p;

    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t q = 0; q < k; ++q) {
        if (q == i) continue;
        if (partial && (position[q] + 1 != position[i] && position[i] + 1 != position[q])) {
          continue;
        }
        long double c = std::sqrt(var[i] + var[q] + 2.0L * beta * beta);
        long double gamma = std::sqrt(var[i]) / c;
        if (logistic) {
          long double p = 1.0L / (1.0L + std::exp(-(mu[i] - mu[q]) / c));
          long double s = ranks[q] > ranks[i] ? 1.0L : (ranks[q] == ranks[i] ? 0.5L : 0.0L);
          omega[i] += var[i] / c * (s - p);
          delta[i] += gamma * var[i] / (c * c) * p * (1.0L - p);
        } else {
          long double x = (mu[i] - mu[q]) / c;
          long double t = config.epsilon() / c;
          if (ranks[q] > ranks[i]) {
            omega[i] += var[i] / c * RefV(x, t, false);
            delta[i] += gamma * var[i] / (c * c) * RefW(x, t, false);
          } else if (ranks[q] < ranks[i]) {
            omega[i] -= var[i] / c * RefV(-x, t, false);
            delta[i] += gamma * var[i] / (c * c) * RefW(-x, t, false);
          } else {
            omega[i] += var[i] / c * RefV(x, t, true);
            delta[i] += gamma * var[i] / (c * c) * RefW(x, t, true);
          }
        }
      }
    }
  }

  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < players[i].size(); ++j) {
      RefRating& p = players[i][j];
      long double share = p.sigma * p.sigma / var[i];
      p.mu += share * omega[i];
      p.sigma *= std::sqrt(std::max(1.0L - share * delta[i],
                                    static_cast<long double>(config.kappa())));
      if (config.limit_sigma()) {
        p.sigma = std::min(p.sigma, static_cast<long double>(teams[i][j].sigma));
      }
    }
  }
  return players;
}

}  // namespace skillrate::oracle

#endif  // SKILLRATE_TESTS_ORACLES_REFERENCE_MODELS_H_
