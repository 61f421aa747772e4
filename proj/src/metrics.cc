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

#include "skillrate/metrics.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <optional>
#include <unordered_set>

#include "json.hpp"
#include "skillrate/error.h"
#include "skillrate/predict.h"

namespace skillrate {
namespace {

// Index of the unique best-ranked team, or nullopt when first place is tied.
std::optional<std::size_t> TrueWinner(const MatchRecord& match) {
  std::vector<int> ranks = match.ResolvedRanks();
  auto best = std::min_element(ranks.begin(), ranks.end());
  if (std::count(ranks.begin(), ranks.end(), *best) > 1) return std::nullopt;
  return static_cast<std::size_t>(best - ranks.begin());
}

bool Experienced(const RatingStore& store, const MatchRecord& match,
                 std::int64_t min_games) {
  for (const auto& team : match.teams) {
    for (const std::string& id : team) {
      if (store.GamesOf(id) < min_games) return false;
    }
  }
  return true;
}

}  // namespace

ReplayResult Replay(std::span<const MatchRecord> matches, RatingStore initial,
                    const ReplayOptions& options) {
  auto start = std::chrono::steady_clock::now();
  ReplayResult result{AccuracyReport{}, std::move(initial)};
  AccuracyReport& report = result.report;
  RatingStore& store = result.store;

  for (std::size_t m = 0; m < matches.size(); ++m) {
    const MatchRecord& match = matches[m];
    std::optional<std::size_t> winner = TrueWinner(match);
    if (m < options.score_from || !winner ||
        !Experienced(store, match, options.min_games)) {
      ++report.skipped;
    } else {
      Teams teams;
      for (const auto& ids : match.teams) {
        Team& team = teams.emplace_back();
        for (const std::string& id : ids) team.push_back(store.RatingOf(id));
      }
      std::vector<double> win = PredictWin(store.config(), teams);
      auto predicted = static_cast<std::size_t>(
          std::max_element(win.begin(), win.end()) - win.begin());
      if (predicted == *winner) {
        ++report.correct;
      } else {
        ++report.incorrect;
      }
    }
    ApplyMatch(store, match);
  }

  std::int64_t scored = report.correct + report.incorrect;
  report.accuracy =
      scored == 0 ? 0.0 : static_cast<double>(report.correct) / scored;
  report.runtime_seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
  return result;
}

AccuracyReport AccuracyReplay(std::span<const MatchRecord> matches,
                              const ModelConfig& config,
                              const ReplayOptions& options) {
  return Replay(matches, RatingStore(config), options).report;
}

std::vector<ReplayResult> EvaluateModels(std::span<const MatchRecord> matches,
                                         std::span<const ModelConfig> configs,
                                         const ReplayOptions& options,
                                         Execution execution) {
  std::vector<std::optional<ReplayResult>> slots(configs.size());
  const long long n = static_cast<long long>(configs.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1) if (execution == Execution::kParallel)
  for (long long i = 0; i < n; ++i) {
    try {
      slots[i].emplace(Replay(matches, RatingStore(configs[i]), options));
    } catch (...) {
#pragma omp critical(skillrate_evaluate_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  std::vector<ReplayResult> results;
  results.reserve(slots.size());
  for (auto& slot : slots) results.push_back(std::move(*slot));
  return results;
}

double Rbo(std::span<const std::string> a, std::span<const std::string> b,
           double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "RBO persistence must lie in (0, 1)");
  }
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kLengthMismatch, "RBO needs equal-length rankings");
  }
  const std::size_t k = a.size();
  if (k == 0) return 1.0;

  // Evaluated through the per-depth shortfall e_d = 1 - X_d / d, using
  // ((1 - p) / p) sum_{d=1..k} p^d = 1 - p^k, so identical rankings give
  // exactly 1:  RBO = 1 - e_k p^k - ((1 - p) / p) sum_d e_d p^d.
  std::unordered_set<std::string_view> seen_a;
  std::unordered_set<std::string_view> seen_b;
  std::size_t overlap = 0;
  double shortfall = 0.0;
  double p_pow = 1.0;
  double last_shortfall = 0.0;
  for (std::size_t d = 1; d <= k; ++d) {
    std::string_view x = a[d - 1];
    std::string_view y = b[d - 1];
    if (!seen_a.insert(x).second || !seen_b.insert(y).second) {
      throw Error(ErrorCode::kDuplicateId, "RBO rankings must not repeat ids");
    }
    if (x == y) {
      ++overlap;
    } else {
      overlap += seen_b.count(x) + seen_a.count(y);
    }
    p_pow *= p;
    last_shortfall = static_cast<double>(d - overlap) / d;
    shortfall += last_shortfall * p_pow;
  }
  if (overlap == 0) return 0.0;
  double rbo = 1.0 - last_shortfall * p_pow - (1.0 - p) / p * shortfall;
  return std::clamp(rbo, 0.0, 1.0);
}

std::vector<std::string> Leaderboard(const RatingStore& store, double z) {
  struct Entry {
    double ordinal;
    const std::string* id;
  };
  std::vector<Entry> entries;
  entries.reserve(store.players().size());
  for (const auto& [id, record] : store.players()) {
    entries.push_back({Ordinal(record.rating, z), &id});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& l, const Entry& r) {
    if (l.ordinal != r.ordinal) return l.ordinal > r.ordinal;
    return *l.id < *r.id;
  });
  std::vector<std::string> ids;
  ids.reserve(entries.size());
  for (const Entry& entry : entries) ids.push_back(*entry.id);
  return ids;
}

std::string FormatReportLine(std::string_view model,
                             const AccuracyReport& report) {
  nlohmann::json doc = {
      {"model", model},
      {"matches", report.correct + report.incorrect + report.skipped},
      {"correct", report.correct},
      {"incorrect", report.incorrect},
      {"skipped", report.skipped},
      {"accuracy", report.accuracy},
      {"runtime_seconds", report.runtime_seconds},
  };
  return doc.dump();
}

}  // namespace skillrate
