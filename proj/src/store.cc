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

#include "skillrate/store.h"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "skillrate/error.h"

namespace skillrate {

using nlohmann::json;

namespace {

std::string LineContext(std::size_t line_number) {
  return line_number == 0 ? std::string()
                          : "line " + std::to_string(line_number) + ": ";
}

[[noreturn]] void ParseFailure(std::size_t line_number, const std::string& what) {
  throw Error(ErrorCode::kParseError, LineContext(line_number) + what);
}

[[noreturn]] void Invalid(const std::string& what) {
  throw Error(ErrorCode::kValidationError, what);
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIoError, "cannot read " + path.string());
  return buffer.str();
}

void WriteFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  out << text;
  out.flush();
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
}

}  // namespace

Outcome MatchRecord::outcome() const {
  if (ranks) return Outcome::Ranks(*ranks);
  if (scores) return Outcome::Scores(*scores);
  return Outcome::ListedOrder();
}

std::vector<int> MatchRecord::ResolvedRanks() const {
  return outcome().ResolveRanks(teams.size());
}

void ValidateMatch(const MatchRecord& match) {
  const std::string where = "match '" + match.id + "': ";
  if (match.teams.size() < 2) Invalid(where + "needs at least two teams");
  std::set<std::string_view> seen;
  for (const auto& team : match.teams) {
    if (team.empty()) Invalid(where + "empty team");
    for (const std::string& player : team) {
      if (!seen.insert(player).second) {
        Invalid(where + "player '" + player + "' appears twice");
      }
    }
  }
  if (match.ranks && match.scores) {
    Invalid(where + "give ranks or scores, not both");
  }
  if (match.ranks) {
    if (match.ranks->size() != match.teams.size()) {
      Invalid(where + "rank count differs from team count");
    }
    for (int rank : *match.ranks) {
      if (rank < 1) Invalid(where + "ranks must be >= 1");
    }
  }
  if (match.scores) {
    if (match.scores->size() != match.teams.size()) {
      Invalid(where + "score count differs from team count");
    }
    for (double score : *match.scores) {
      if (!std::isfinite(score)) Invalid(where + "scores must be finite");
    }
  }
}

MatchRecord ParseMatchLine(std::string_view line, std::size_t line_number) {
  json doc = json::parse(line.begin(), line.end(), nullptr, false);
  if (doc.is_discarded()) ParseFailure(line_number, "malformed JSON");
  if (!doc.is_object()) ParseFailure(line_number, "expected a JSON object");

  MatchRecord match;
  auto id = doc.find("id");
  if (id == doc.end() || !id->is_string()) {
    ParseFailure(line_number, "\"id\" must be a string");
  }
  match.id = id->get<std::string>();

  if (auto ts = doc.find("ts"); ts != doc.end()) {
    if (!ts->is_number_integer()) {
      ParseFailure(line_number, "\"ts\" must be an integer");
    }
    match.ts = ts->get<std::int64_t>();
  }

  auto teams = doc.find("teams");
  if (teams == doc.end() || !teams->is_array()) {
    ParseFailure(line_number, "\"teams\" must be an array of arrays");
  }
  for (const json& team : *teams) {
    if (!team.is_array()) {
      ParseFailure(line_number, "\"teams\" must be an array of arrays");
    }
    auto& players = match.teams.emplace_back();
    for (const json& player : team) {
      if (!player.is_string()) {
        ParseFailure(line_number, "player ids must be strings");
      }
      players.push_back(player.get<std::string>());
    }
  }

  if (auto ranks = doc.find("ranks"); ranks != doc.end()) {
    if (!ranks->is_array()) ParseFailure(line_number, "\"ranks\" must be an array");
    auto& out = match.ranks.emplace();
    for (const json& rank : *ranks) {
      if (!rank.is_number_integer()) {
        ParseFailure(line_number, "ranks must be integers");
      }
      out.push_back(rank.get<int>());
    }
  }
  if (auto scores = doc.find("scores"); scores != doc.end()) {
    if (!scores->is_array()) {
      ParseFailure(line_number, "\"scores\" must be an array");
    }
    auto& out = match.scores.emplace();
    for (const json& score : *scores) {
      if (!score.is_number()) ParseFailure(line_number, "scores must be numbers");
      out.push_back(score.get<double>());
    }
  }

  try {
    ValidateMatch(match);
  } catch (const Error& e) {
    throw Error(ErrorCode::kValidationError,
                LineContext(line_number) + e.what());
  }
  return match;
}

std::string FormatMatchLine(const MatchRecord& match) {
  json doc = json::object();
  doc["id"] = match.id;
  doc["ts"] = match.ts;
  doc["teams"] = match.teams;
  if (match.ranks) doc["ranks"] = *match.ranks;
  if (match.scores) doc["scores"] = *match.scores;
  return doc.dump();
}

std::vector<MatchRecord> ParseMatchLog(std::string_view text) {
  std::vector<MatchRecord> matches;
  std::size_t line_number = 0;
  while (!text.empty()) {
    ++line_number;
    std::size_t end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view() : text.substr(end + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
    matches.push_back(ParseMatchLine(line, line_number));
  }
  return matches;
}

std::vector<MatchRecord> ReadMatchLog(const std::filesystem::path& path) {
  return ParseMatchLog(ReadFile(path));
}

void WriteMatchLog(const std::filesystem::path& path,
                   const std::vector<MatchRecord>& matches) {
  std::string text;
  for (const MatchRecord& match : matches) {
    text += FormatMatchLine(match);
    text += '\n';
  }
  WriteFile(path, text);
}

const PlayerRecord* RatingStore::Find(std::string_view id) const {
  auto it = players_.find(id);
  return it == players_.end() ? nullptr : &it->second;
}

Rating RatingStore::RatingOf(std::string_view id) const {
  const PlayerRecord* record = Find(id);
  return record ? record->rating : DefaultRating(config_);
}

std::int64_t RatingStore::GamesOf(std::string_view id) const {
  const PlayerRecord* record = Find(id);
  return record ? record->games : 0;
}

void RatingStore::Put(PlayerRecord record) {
  if (!record.rating.IsValid()) {
    Invalid("player '" + record.id + "' needs finite mu and sigma > 0");
  }
  if (record.games < 0) Invalid("player '" + record.id + "' has games < 0");
  std::string key = record.id;
  players_.insert_or_assign(std::move(key), std::move(record));
}

void ApplyMatch(RatingStore& store, const MatchRecord& match,
                Execution execution) {
  Teams teams;
  teams.reserve(match.teams.size());
  for (const auto& ids : match.teams) {
    Team& team = teams.emplace_back();
    for (const std::string& id : ids) team.push_back(store.RatingOf(id));
  }
  Teams rated = Rate(store.config(), teams, match.outcome(), execution);
  for (std::size_t i = 0; i < match.teams.size(); ++i) {
    for (std::size_t j = 0; j < match.teams[i].size(); ++j) {
      const std::string& id = match.teams[i][j];
      store.Put(PlayerRecord{id, rated[i][j], store.GamesOf(id) + 1, match.ts});
    }
  }
}

std::string SerializeStore(const RatingStore& store) {
  const ModelConfig& config = store.config();
  json doc = json::object();
  doc["version"] = kStoreVersion;
  doc["model"] = store.model_name();
  doc["config"] = {
      {"mu", config.mu()},           {"sigma", config.sigma()},
      {"beta", config.beta()},       {"kappa", config.kappa()},
      {"tau", config.tau()},         {"epsilon", config.epsilon()},
      {"z", config.z()},             {"limit_sigma", config.limit_sigma()},
  };
  json players = json::object();
  for (const auto& [id, record] : store.players()) {
    players[id] = {{"mu", record.rating.mu},
                   {"sigma", record.rating.sigma},
                   {"games", record.games},
                   {"updated_ts", record.updated_ts}};
  }
  doc["players"] = std::move(players);
  return doc.dump(1) + "\n";
}

namespace {

double NumberField(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_number()) {
    throw Error(ErrorCode::kParseError,
                where + ": \"" + key + "\" must be a number");
  }
  return it->get<double>();
}

std::int64_t IntegerField(const json& obj, const char* key,
                          const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_number_integer()) {
    throw Error(ErrorCode::kParseError,
                where + ": \"" + key + "\" must be an integer");
  }
  return it->get<std::int64_t>();
}

}  // namespace

RatingStore DeserializeStore(std::string_view text) {
  json doc = json::parse(text.begin(), text.end(), nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw Error(ErrorCode::kParseError, "store is not a JSON object");
  }
  auto version = doc.find("version");
  if (version == doc.end()) {
    throw Error(ErrorCode::kParseError, "store has no \"version\"");
  }
  if (!version->is_string() || version->get<std::string>() != kStoreVersion) {
    throw Error(ErrorCode::kVersionError,
                "unsupported store version " + version->dump() +
                    " (supported: \"1\")");
  }
  auto model = doc.find("model");
  if (model == doc.end() || !model->is_string()) {
    throw Error(ErrorCode::kParseError, "store \"model\" must be a string");
  }
  auto config_doc = doc.find("config");
  if (config_doc == doc.end() || !config_doc->is_object()) {
    throw Error(ErrorCode::kParseError, "store \"config\" must be an object");
  }
  auto limit = config_doc->find("limit_sigma");
  if (limit == config_doc->end() || !limit->is_boolean()) {
    throw Error(ErrorCode::kParseError,
                "config: \"limit_sigma\" must be a boolean");
  }
  ConfigOptions options;
  options.mu = NumberField(*config_doc, "mu", "config");
  options.sigma = NumberField(*config_doc, "sigma", "config");
  options.beta = NumberField(*config_doc, "beta", "config");
  options.kappa = NumberField(*config_doc, "kappa", "config");
  options.tau = NumberField(*config_doc, "tau", "config");
  options.epsilon = NumberField(*config_doc, "epsilon", "config");
  options.z = NumberField(*config_doc, "z", "config");
  options.limit_sigma = limit->get<bool>();

  std::optional<RatingStore> store;
  try {
    store.emplace(ModelConfig::Create(ParseModelName(model->get<std::string>()),
                                      options));
  } catch (const Error& e) {
    throw Error(ErrorCode::kValidationError, e.what());
  }

  auto players = doc.find("players");
  if (players == doc.end() || !players->is_object()) {
    throw Error(ErrorCode::kParseError, "store \"players\" must be an object");
  }
  for (const auto& [id, entry] : players->items()) {
    const std::string where = "player '" + id + "'";
    if (!entry.is_object()) {
      throw Error(ErrorCode::kParseError, where + " must be an object");
    }
    PlayerRecord record{id,
                        Rating{NumberField(entry, "mu", where),
                               NumberField(entry, "sigma", where)},
                        IntegerField(entry, "games", where),
                        IntegerField(entry, "updated_ts", where)};
    store->Put(std::move(record));
  }
  return std::move(*store);
}

RatingStore LoadStore(const std::filesystem::path& path) {
  return DeserializeStore(ReadFile(path));
}

void SaveStore(const RatingStore& store, const std::filesystem::path& path) {
  WriteFile(path, SerializeStore(store));
}

}  // namespace skillrate
