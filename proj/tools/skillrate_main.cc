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

// skillrate: rate matches, replay logs, predict outcomes and print
// leaderboards from the command line.
//
// Exit codes: 0 success, 1 usage error, 2 data error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "skillrate/core.h"
#include "skillrate/error.h"
#include "skillrate/metrics.h"
#include "skillrate/models.h"
#include "skillrate/predict.h"
#include "skillrate/store.h"
#include "skillrate/synth.h"

namespace {

using nlohmann::json;
using skillrate::Error;
using skillrate::ErrorCode;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

// Raised for flag combinations CLI11 cannot check on its own.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigFlags {
  std::optional<std::string> model;
  std::optional<double> mu, sigma, beta, kappa, tau, epsilon;
  bool limit_sigma = false;

  skillrate::ModelConfig Build() const {
    skillrate::ConfigOptions options;
    options.mu = mu;
    options.sigma = sigma;
    options.beta = beta;
    options.kappa = kappa;
    options.tau = tau;
    options.epsilon = epsilon;
    options.limit_sigma = limit_sigma;
    return skillrate::ModelConfig::Create(
        skillrate::ParseModelName(model.value_or("pl")), options);
  }

  bool HasOverrides() const {
    return mu || sigma || beta || kappa || tau || epsilon || limit_sigma;
  }
};

void AddConfigFlags(CLI::App* cmd, ConfigFlags& flags) {
  cmd->add_option("--model", flags.model, "Model: pl, btf, btp, tmf, tmp (default pl)");
  cmd->add_option("--mu", flags.mu, "Initial mean (default 25)");
  cmd->add_option("--sigma", flags.sigma, "Initial sigma (default 25/3)");
  cmd->add_option("--beta", flags.beta, "Performance scale (default sigma/2)");
  cmd->add_option("--kappa", flags.kappa, "Variance floor factor (default 0.0001)");
  cmd->add_option("--tau", flags.tau, "Additive dynamics (default 25/300)");
  cmd->add_option("--epsilon", flags.epsilon, "Draw margin (default 0.1)");
  cmd->add_flag("--limit-sigma", flags.limit_sigma,
                "Never let a rating's sigma grow through an update");
}

// Existing stores keep their own config; flags only shape a new store, and a
// conflicting --model is rejected.
skillrate::RatingStore OpenStore(const std::string& path,
                                 const ConfigFlags& flags) {
  if (!std::filesystem::exists(path)) {
    try {
      return skillrate::RatingStore(flags.Build());
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }
  skillrate::RatingStore store = skillrate::LoadStore(path);
  if (flags.model && *flags.model != store.model_name()) {
    throw UsageError("store " + path + " uses model " +
                     std::string(store.model_name()) + ", not " + *flags.model);
  }
  if (flags.HasOverrides()) {
    std::cerr << "note: " << path
              << " exists; its stored config is used and config flags are ignored\n";
  }
  return store;
}

std::string Fixed(double value) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(4) << value;
  return out.str();
}

std::vector<std::string> SplitCommas(const std::string& text) {
  std::vector<std::string> parts;
  std::string current;
  std::istringstream in(text);
  while (std::getline(in, current, ',')) {
    if (!current.empty()) parts.push_back(current);
  }
  return parts;
}

void PrintRatingsTable(const std::vector<skillrate::PlayerRecord>& rows,
                       double z) {
  std::cout << std::left << std::setw(16) << "player" << std::right
            << std::setw(12) << "mu" << std::setw(12) << "sigma"
            << std::setw(12) << "ordinal" << std::setw(8) << "games" << "\n";
  for (const auto& row : rows) {
    std::cout << std::left << std::setw(16) << row.id << std::right
              << std::setw(12) << Fixed(row.rating.mu) << std::setw(12)
              << Fixed(row.rating.sigma) << std::setw(12)
              << Fixed(skillrate::Ordinal(row.rating, z)) << std::setw(8)
              << row.games << "\n";
  }
}

json RatingsJson(const std::vector<skillrate::PlayerRecord>& rows, double z) {
  json players = json::array();
  for (const auto& row : rows) {
    players.push_back({{"id", row.id},
                       {"mu", row.rating.mu},
                       {"sigma", row.rating.sigma},
                       {"ordinal", skillrate::Ordinal(row.rating, z)},
                       {"games", row.games}});
  }
  return players;
}

// ---- rate -----------------------------------------------------------------

struct RateArgs {
  ConfigFlags config;
  std::string store;
  std::string match;
  bool json = false;
};

int RunRate(const RateArgs& args) {
  std::string line = args.match;
  if (line == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    line = buffer.str();
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) {
      line.pop_back();
    }
  }
  skillrate::MatchRecord match = skillrate::ParseMatchLine(line, 1);
  skillrate::RatingStore store = OpenStore(args.store, args.config);
  skillrate::ApplyMatch(store, match);
  skillrate::SaveStore(store, args.store);

  std::vector<skillrate::PlayerRecord> rows;
  for (const auto& team : match.teams) {
    for (const std::string& id : team) rows.push_back(*store.Find(id));
  }
  double z = store.config().z();
  if (args.json) {
    std::cout << json{{"match", match.id}, {"players", RatingsJson(rows, z)}}.dump()
              << "\n";
  } else {
    PrintRatingsTable(rows, z);
  }
  return kExitOk;
}

// ---- replay ---------------------------------------------------------------

struct ReplayArgs {
  ConfigFlags config;
  std::string store;
  std::string log;
  std::int64_t min_games = 0;
  std::optional<std::string> report;
  bool json = false;
};

void PrintReportTable(
    const std::vector<std::pair<std::string, skillrate::AccuracyReport>>& rows) {
  std::cout << std::left << std::setw(8) << "model" << std::right
            << std::setw(10) << "correct" << std::setw(11) << "incorrect"
            << std::setw(10) << "skipped" << std::setw(11) << "accuracy"
            << std::setw(12) << "runtime_s" << "\n";
  for (const auto& [model, report] : rows) {
    std::cout << std::left << std::setw(8) << model << std::right
              << std::setw(10) << report.correct << std::setw(11)
              << report.incorrect << std::setw(10) << report.skipped
              << std::setw(11) << Fixed(report.accuracy) << std::setw(12)
              << Fixed(report.runtime_seconds) << "\n";
  }
}

int RunReplay(const ReplayArgs& args) {
  if (args.min_games < 0) throw UsageError("--min-games must be >= 0");
  std::vector<skillrate::MatchRecord> matches = skillrate::ReadMatchLog(args.log);
  skillrate::RatingStore store = OpenStore(args.store, args.config);
  skillrate::ReplayOptions options;
  options.min_games = args.min_games;
  skillrate::ReplayResult result =
      skillrate::Replay(matches, std::move(store), options);
  skillrate::SaveStore(result.store, args.store);

  std::string model(result.store.model_name());
  std::string line = skillrate::FormatReportLine(model, result.report);
  if (args.report) {
    std::ofstream out(*args.report, std::ios::trunc);
    out << line << "\n";
    if (!out) throw Error(ErrorCode::kIoError, "cannot write " + *args.report);
  }
  if (args.json) {
    std::cout << line << "\n";
  } else {
    PrintReportTable({{model, result.report}});
  }
  return kExitOk;
}

// ---- predict --------------------------------------------------------------

struct PredictArgs {
  std::string store;
  std::vector<std::string> teams;
  bool json = false;
};

int RunPredict(const PredictArgs& args) {
  skillrate::RatingStore store = skillrate::LoadStore(args.store);
  skillrate::Teams teams;
  std::vector<std::vector<std::string>> ids;
  for (const std::string& spec : args.teams) {
    ids.push_back(SplitCommas(spec));
    if (ids.back().empty()) throw UsageError("empty team in --teams");
    skillrate::Team& team = teams.emplace_back();
    for (const std::string& id : ids.back()) team.push_back(store.RatingOf(id));
  }
  const skillrate::ModelConfig& config = store.config();
  std::vector<double> win = skillrate::PredictWin(config, teams);
  std::vector<skillrate::RankPrediction> rank = skillrate::PredictRank(config, teams);
  double draw = skillrate::PredictDraw(config, teams);

  if (args.json) {
    json out_teams = json::array();
    for (std::size_t i = 0; i < teams.size(); ++i) {
      out_teams.push_back({{"players", ids[i]},
                           {"win", win[i]},
                           {"rank", rank[i].rank},
                           {"rank_probability", rank[i].probability}});
    }
    std::cout << json{{"teams", out_teams}, {"draw", draw}}.dump() << "\n";
    return kExitOk;
  }
  std::cout << std::left << std::setw(6) << "team" << std::setw(30) << "players"
            << std::right << std::setw(10) << "win" << std::setw(6) << "rank"
            << "\n";
  for (std::size_t i = 0; i < teams.size(); ++i) {
    std::string members;
    for (const std::string& id : ids[i]) members += (members.empty() ? "" : ",") + id;
    std::cout << std::left << std::setw(6) << i + 1 << std::setw(30) << members
              << std::right << std::setw(10) << Fixed(win[i]) << std::setw(6)
              << rank[i].rank << "\n";
  }
  std::cout << "draw probability: " << Fixed(draw) << "\n";
  return kExitOk;
}

// ---- leaderboard ----------------------------------------------------------

struct LeaderboardArgs {
  std::string store;
  std::optional<std::size_t> top;
  std::optional<double> z;
  bool json = false;
};

int RunLeaderboard(const LeaderboardArgs& args) {
  skillrate::RatingStore store = skillrate::LoadStore(args.store);
  double z = args.z.value_or(store.config().z());
  if (!(z > 0.0)) throw UsageError("--z must be > 0");
  std::vector<std::string> ids = skillrate::Leaderboard(store, z);
  if (args.top && *args.top < ids.size()) ids.resize(*args.top);
  std::vector<skillrate::PlayerRecord> rows;
  for (const std::string& id : ids) rows.push_back(*store.Find(id));
  if (args.json) {
    std::cout << json{{"z", z}, {"players", RatingsJson(rows, z)}}.dump() << "\n";
  } else {
    PrintRatingsTable(rows, z);
  }
  return kExitOk;
}

// ---- benchmark ------------------------------------------------------------

struct BenchmarkArgs {
  ConfigFlags config;
  std::string log;
  std::string models = "pl,btf,btp,tmf,tmp";
  double rbo_p = skillrate::kDefaultRboPersistence;
  std::int64_t min_games = 0;
  bool parallel = false;
  bool json = false;
};

int RunBenchmark(const BenchmarkArgs& args) {
  if (!(args.rbo_p > 0.0 && args.rbo_p < 1.0)) {
    throw UsageError("--rbo-p must lie in (0, 1)");
  }
  if (args.min_games < 0) throw UsageError("--min-games must be >= 0");
  if (args.config.model) throw UsageError("use --models with benchmark");
  std::vector<std::string> names = SplitCommas(args.models);
  if (names.empty()) throw UsageError("--models needs at least one model");

  std::vector<skillrate::ModelConfig> configs;
  for (const std::string& name : names) {
    ConfigFlags flags = args.config;
    flags.model = name;
    try {
      configs.push_back(flags.Build());
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }
  std::vector<skillrate::MatchRecord> matches = skillrate::ReadMatchLog(args.log);
  skillrate::ReplayOptions options;
  options.min_games = args.min_games;
  std::vector<skillrate::ReplayResult> results = skillrate::EvaluateModels(
      matches, configs, options,
      args.parallel ? skillrate::Execution::kParallel
                    : skillrate::Execution::kSerial);

  std::vector<std::vector<std::string>> boards;
  for (std::size_t i = 0; i < results.size(); ++i) {
    boards.push_back(skillrate::Leaderboard(results[i].store, configs[i].z()));
  }
  std::vector<std::vector<double>> rbo(results.size(),
                                       std::vector<double>(results.size()));
  for (std::size_t i = 0; i < results.size(); ++i) {
    for (std::size_t j = 0; j < results.size(); ++j) {
      rbo[i][j] = skillrate::Rbo(boards[i], boards[j], args.rbo_p);
    }
  }

  if (args.json) {
    for (std::size_t i = 0; i < results.size(); ++i) {
      std::cout << skillrate::FormatReportLine(names[i], results[i].report)
                << "\n";
    }
    std::cout << json{{"rbo_p", args.rbo_p}, {"models", names}, {"rbo", rbo}}.dump()
              << "\n";
    return kExitOk;
  }
  std::vector<std::pair<std::string, skillrate::AccuracyReport>> rows;
  for (std::size_t i = 0; i < results.size(); ++i) {
    rows.emplace_back(names[i], results[i].report);
  }
  PrintReportTable(rows);
  std::cout << "\nRBO x100 of final leaderboards (p = " << args.rbo_p << ")\n"
            << std::setw(8) << "";
  for (const std::string& name : names) std::cout << std::setw(10) << name;
  std::cout << "\n";
  for (std::size_t i = 0; i < names.size(); ++i) {
    std::cout << std::left << std::setw(8) << names[i] << std::right;
    for (std::size_t j = 0; j < names.size(); ++j) {
      std::cout << std::setw(10) << Fixed(rbo[i][j] * 100.0);
    }
    std::cout << "\n";
  }
  return kExitOk;
}

// ---- gen ------------------------------------------------------------------

struct GenArgs {
  std::size_t players = 0;
  std::size_t matches = 0;
  std::size_t team_size = 1;
  std::size_t teams_per_match = 2;
  std::uint64_t seed = 0;
  std::string out;
  std::optional<std::string> skills_out;
};

int RunGen(const GenArgs& args) {
  std::vector<skillrate::LatentPlayer> players;
  std::vector<skillrate::MatchRecord> matches;
  try {
    players = skillrate::GeneratePlayers(args.players, args.seed);
    matches = skillrate::GenerateMatches(
        players, args.matches, args.team_size, args.teams_per_match,
        skillrate::DeriveSeed(args.seed, UINT64_MAX),
        skillrate::SynthParams{}, skillrate::Execution::kParallel);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  skillrate::WriteMatchLog(args.out, matches);
  if (args.skills_out) {
    json skills = json::object();
    for (const auto& player : players) skills[player.id] = player.skill;
    std::ofstream out(*args.skills_out, std::ios::trunc);
    out << skills.dump(1) << "\n";
    if (!out) throw Error(ErrorCode::kIoError, "cannot write " + *args.skills_out);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"skillrate: Bayesian skill ratings for multi-team matches"};
  app.require_subcommand(1);

  RateArgs rate;
  CLI::App* rate_cmd = app.add_subcommand("rate", "Apply one match to a store and print the new ratings");
  AddConfigFlags(rate_cmd, rate.config);
  rate_cmd->add_option("--store", rate.store, "Store file (created if missing)")->required();
  rate_cmd->add_option("--match", rate.match, "Match as one JSON log line, or - to read stdin")->required();
  rate_cmd->add_flag("--json", rate.json, "Machine-readable output");

  ReplayArgs replay;
  CLI::App* replay_cmd = app.add_subcommand("replay", "Replay a match log and report winner-prediction accuracy");
  AddConfigFlags(replay_cmd, replay.config);
  replay_cmd->add_option("--store", replay.store, "Store file; continued if present, written at the end")->required();
  replay_cmd->add_option("--log", replay.log, "Match log (JSON lines)")->required();
  replay_cmd->add_option("--min-games", replay.min_games, "Score a match only if every player has this many prior games");
  replay_cmd->add_option("--report", replay.report, "Also write the report line to this file");
  replay_cmd->add_flag("--json", replay.json, "Machine-readable output");

  PredictArgs predict;
  CLI::App* predict_cmd = app.add_subcommand("predict", "Predict win, rank and draw probabilities");
  predict_cmd->add_option("--store", predict.store, "Store file")->required();
  predict_cmd->add_option("--teams", predict.teams, "One comma-separated id list per team, e.g. --teams a,b c,d")->required()->expected(2, -1);
  predict_cmd->add_flag("--json", predict.json, "Machine-readable output");

  LeaderboardArgs board;
  CLI::App* board_cmd = app.add_subcommand("leaderboard", "Print players by ordinal (mu - z*sigma)");
  board_cmd->add_option("--store", board.store, "Store file")->required();
  board_cmd->add_option("--top", board.top, "Only the first N players");
  board_cmd->add_option("--z", board.z, "Ordinal multiplier (default: store's z)");
  board_cmd->add_flag("--json", board.json, "Machine-readable output");

  BenchmarkArgs bench;
  CLI::App* bench_cmd = app.add_subcommand("benchmark", "Compare models on a log: accuracy, runtime and leaderboard RBO");
  AddConfigFlags(bench_cmd, bench.config);
  bench_cmd->add_option("--log", bench.log, "Match log (JSON lines)")->required();
  bench_cmd->add_option("--models", bench.models, "Comma-separated models (default pl,btf,btp,tmf,tmp)");
  bench_cmd->add_option("--rbo-p", bench.rbo_p, "RBO persistence p in (0,1) (default 0.99)");
  bench_cmd->add_option("--min-games", bench.min_games, "Score a match only if every player has this many prior games");
  bench_cmd->add_flag("--parallel", bench.parallel, "Evaluate models on concurrent threads");
  bench_cmd->add_flag("--json", bench.json, "Machine-readable output");

  GenArgs gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Write a synthetic match log with latent skills");
  gen_cmd->add_option("--players", gen.players, "Number of players")->required();
  gen_cmd->add_option("--matches", gen.matches, "Number of matches")->required();
  gen_cmd->add_option("--team-size", gen.team_size, "Players per team")->required();
  gen_cmd->add_option("--teams-per-match", gen.teams_per_match, "Teams per match")->required();
  gen_cmd->add_option("--seed", gen.seed, "Random seed")->required();
  gen_cmd->add_option("--out", gen.out, "Output match log")->required();
  gen_cmd->add_option("--skills-out", gen.skills_out, "Also write latent skills as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*rate_cmd) return RunRate(rate);
    if (*replay_cmd) return RunReplay(replay);
    if (*predict_cmd) return RunPredict(predict);
    if (*board_cmd) return RunLeaderboard(board);
    if (*bench_cmd) return RunBenchmark(bench);
    if (*gen_cmd) return RunGen(gen);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}
