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

#include "skillrate/core.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "skillrate/error.h"

namespace skillrate {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kEmptyMatch: return "EmptyMatch";
    case ErrorCode::kEmptyTeam: return "EmptyTeam";
    case ErrorCode::kRankMismatch: return "RankMismatch";
    case ErrorCode::kNonFiniteInput: return "NonFiniteInput";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kValidationError: return "ValidationError";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kVersionError: return "VersionError";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kDuplicateId: return "DuplicateId";
    case ErrorCode::kInsufficientPlayers: return "InsufficientPlayers";
  }
  return "Unknown";
}

bool Rating::IsValid() const {
  return std::isfinite(mu) && std::isfinite(sigma) && sigma > 0.0;
}

std::string_view ModelName(Model model) {
  switch (model) {
    case Model::kPlackettLuce: return "pl";
    case Model::kBradleyTerryFull: return "btf";
    case Model::kBradleyTerryPart: return "btp";
    case Model::kThurstoneMostellerFull: return "tmf";
    case Model::kThurstoneMostellerPart: return "tmp";
  }
  return "pl";
}

Model ParseModelName(std::string_view name) {
  for (Model model : kAllModels) {
    if (ModelName(model) == name) return model;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown model '" + std::string(name) +
                  "' (expected pl, btf, btp, tmf or tmp)");
}

double DefaultGamma(double c, std::size_t /*team_count*/,
                    double team_sigma_sq) {
  return std::sqrt(team_sigma_sq) / c;
}

namespace {

void Require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::kInvalidConfig, what);
}

}  // namespace

ModelConfig ModelConfig::Create(Model model, const ConfigOptions& options) {
  ModelConfig config;
  config.model_ = model;
  config.mu_ = options.mu.value_or(kDefaultMu);
  config.sigma_ = options.sigma.value_or(kDefaultSigma);
  config.beta_ = options.beta.value_or(config.sigma_ / 2.0);
  config.kappa_ = options.kappa.value_or(kDefaultKappa);
  config.tau_ = options.tau.value_or(kDefaultTau);
  config.epsilon_ = options.epsilon.value_or(kDefaultEpsilon);
  config.z_ = options.z.value_or(kDefaultZ);
  config.limit_sigma_ = options.limit_sigma;
  config.gamma_ = options.gamma != nullptr ? options.gamma : &DefaultGamma;

  Require(std::isfinite(config.mu_), "mu must be finite");
  Require(std::isfinite(config.sigma_) && config.sigma_ > 0.0,
          "sigma must be finite and > 0");
  Require(std::isfinite(config.beta_) && config.beta_ > 0.0,
          "beta must be finite and > 0");
  Require(config.kappa_ > 0.0 && config.kappa_ < 1.0,
          "kappa must lie in (0, 1)");
  Require(std::isfinite(config.tau_) && config.tau_ >= 0.0,
          "tau must be finite and >= 0");
  Require(std::isfinite(config.epsilon_) && config.epsilon_ >= 0.0,
          "epsilon must be finite and >= 0");
  Require(std::isfinite(config.z_) && config.z_ > 0.0,
          "z must be finite and > 0");
  return config;
}

ConfigOptions ModelConfig::ToOptions() const {
  ConfigOptions options;
  options.mu = mu_;
  options.sigma = sigma_;
  options.beta = beta_;
  options.kappa = kappa_;
  options.tau = tau_;
  options.epsilon = epsilon_;
  options.z = z_;
  options.limit_sigma = limit_sigma_;
  options.gamma = gamma_;
  return options;
}

Rating DefaultRating(const ModelConfig& config) {
  return Rating{config.mu(), config.sigma()};
}

double Ordinal(const Rating& rating, double z) {
  return rating.mu - z * rating.sigma;
}

Rating Decay(const Rating& rating, int periods, double decay_rate,
             double sigma_cap) {
  if (periods < 0 || !(decay_rate >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "decay needs periods >= 0 and decay_rate >= 0");
  }
  if (periods == 0) return rating;
  double inflated = std::sqrt(rating.sigma * rating.sigma +
                              periods * decay_rate * decay_rate);
  return Rating{rating.mu,
                std::max(rating.sigma, std::min(inflated, sigma_cap))};
}

}  // namespace skillrate
