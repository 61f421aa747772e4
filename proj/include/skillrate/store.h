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

// Match logs and persistent rating stores.
//
// Match log: UTF-8 text, one JSON object per line:
//   {"id":"m1","ts":0,"teams":[["p1","p2"],["p3"]],"ranks":[1,2]}
// "ts" is optional; at most one of "ranks"/"scores" may be present, and with
// neither the teams finished in listed order. Unknown fields are ignored.
// Blank lines are skipped.
//
// Store file: one JSON document
//   {"version":"1","model":"pl","config":{...},
//    "players":{"p1":{"mu":..,"sigma":..,"games":..,"updated_ts":..}}}
// Doubles are written in shortest round-trip form, so load(save(s)) == s
// bit for bit.

#ifndef SKILLRATE_STORE_H_
#define SKILLRATE_STORE_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skillrate/core.h"
#include "skillrate/models.h"

namespace skillrate {

struct MatchRecord {
  std::string id;
  std::int64_t ts = 0;
  std::vector<std::vector<std::string>> teams;
  std::optional<std::vector<int>> ranks;
  std::optional<std::vector<double>> scores;

  Outcome outcome() const;
  // Rank per team (1 = best), resolved from ranks, scores or listed order.
  std::vector<int> ResolvedRanks() const;

  friend bool operator==(const MatchRecord&, const MatchRecord&) = default;
};

// Throws Error(kValidationError) when the record breaks an invariant: fewer
// than two teams, an empty team, a player listed twice, both ranks and scores,
// a length mismatch, a rank below 1 or a non-finite score.
void ValidateMatch(const MatchRecord& match);

// Parses and validates one log line. Errors are kParseError for malformed
// JSON or wrong field types and kValidationError for invariant violations;
// `line_number` (1-based, 0 = unknown) is included in the message.
MatchRecord ParseMatchLine(std::string_view line, std::size_t line_number = 0);
std::string FormatMatchLine(const MatchRecord& match);

std::vector<MatchRecord> ReadMatchLog(const std::filesystem::path& path);
std::vector<MatchRecord> ParseMatchLog(std::string_view text);
void WriteMatchLog(const std::filesystem::path& path,
                   const std::vector<MatchRecord>& matches);

struct PlayerRecord {
  std::string id;
  Rating rating;
  std::int64_t games = 0;
  std::int64_t updated_ts = 0;

  friend bool operator==(const PlayerRecord&, const PlayerRecord&) = default;
};

class RatingStore {
 public:
  explicit RatingStore(ModelConfig config) : config_(config) {}

  const ModelConfig& config() const { return config_; }
  std::string_view model_name() const { return ModelName(config_.model()); }
  const std::map<std::string, PlayerRecord, std::less<>>& players() const {
    return players_;
  }

  const PlayerRecord* Find(std::string_view id) const;
  // Current rating, or the default rating for an unknown id.
  Rating RatingOf(std::string_view id) const;
  std::int64_t GamesOf(std::string_view id) const;

  // Inserts or replaces a player. Throws Error(kValidationError) for an
  // invalid rating or negative game count.
  void Put(PlayerRecord record);

  friend bool operator==(const RatingStore&, const RatingStore&) = default;

 private:
  ModelConfig config_;
  std::map<std::string, PlayerRecord, std::less<>> players_;
};

// Rates the match with the store's model, creating unknown players with the
// default rating. Increments games and sets updated_ts for every
// participant. The store is unchanged if rating fails.
void ApplyMatch(RatingStore& store, const MatchRecord& match,
                Execution execution = Execution::kSerial);

inline constexpr std::string_view kStoreVersion = "1";

std::string SerializeStore(const RatingStore& store);
// Errors: kParseError (malformed document), kVersionError (version other
// than "1"), kValidationError (bad ratings or model/config values).
RatingStore DeserializeStore(std::string_view text);

// Errors as DeserializeStore, plus kIoError when the file cannot be read or
// written.
RatingStore LoadStore(const std::filesystem::path& path);
void SaveStore(const RatingStore& store, const std::filesystem::path& path);

}  // namespace skillrate

#endif  // SKILLRATE_STORE_H_
