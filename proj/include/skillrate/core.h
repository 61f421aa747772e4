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

// Domain types shared by every rating model: a player's skill belief, the
// model configuration and its defaults, and the per-team aggregate that the
// update rules operate on.

#ifndef SKILLRATE_CORE_H_
#define SKILLRATE_CORE_H_

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace skillrate {

// A player's skill belief: Normal(mu, sigma^2) in rating points.
struct Rating {
  double mu = 0.0;
  double sigma = 1.0;

  // True when mu and sigma are finite and sigma > 0.
  bool IsValid() const;

  friend bool operator==(const Rating&, const Rating&) = default;
};

using Team = std::vector<Rating>;
using Teams = std::vector<Team>;

enum class Model {
  kPlackettLuce,
  kBradleyTerryFull,
  kBradleyTerryPart,
  kThurstoneMostellerFull,
  kThurstoneMostellerPart,
};

inline constexpr Model kAllModels[] = {
    Model::kPlackettLuce,           Model::kBradleyTerryFull,
    Model::kBradleyTerryPart,       Model::kThurstoneMostellerFull,
    Model::kThurstoneMostellerPart,
};

// Short names used by files and the command line: pl, btf, btp, tmf, tmp.
std::string_view ModelName(Model model);
// Throws Error(kInvalidArgument) for an unknown name.
Model ParseModelName(std::string_view name);

// Scale factor gamma applied to the variance update of a team. `c` is the
// normalizer used by the rule (the global c for Plackett-Luce, c_iq for the
// pairwise rules). The default is sqrt(team_sigma_sq) / c.
using GammaFunction = double (*)(double c, std::size_t team_count,
                                 double team_sigma_sq);

double DefaultGamma(double c, std::size_t team_count, double team_sigma_sq);

// Unset fields take the model defaults. beta defaults to sigma/2 of the
// resolved sigma, so overriding sigma alone rescales beta as well.
struct ConfigOptions {
  std::optional<double> mu;
  std::optional<double> sigma;
  std::optional<double> beta;
  std::optional<double> kappa;
  std::optional<double> tau;
  std::optional<double> epsilon;
  std::optional<double> z;
  bool limit_sigma = false;
  GammaFunction gamma = nullptr;
};

// Immutable, validated model configuration.
class ModelConfig {
 public:
  static constexpr double kDefaultMu = 25.0;
  static constexpr double kDefaultSigma = 25.0 / 3.0;
  static constexpr double kDefaultKappa = 0.0001;
  static constexpr double kDefaultTau = 25.0 / 300.0;
  static constexpr double kDefaultEpsilon = 0.1;
  static constexpr double kDefaultZ = 3.0;

  // Throws Error(kInvalidConfig) unless sigma > 0, beta > 0, 0 < kappa < 1,
  // tau >= 0, epsilon >= 0, z > 0 and every value is finite.
  static ModelConfig Create(Model model, const ConfigOptions& options = {});

  Model model() const { return model_; }
  double mu() const { return mu_; }
  double sigma() const { return sigma_; }
  double beta() const { return beta_; }
  double kappa() const { return kappa_; }
  double tau() const { return tau_; }
  double epsilon() const { return epsilon_; }
  double z() const { return z_; }
  bool limit_sigma() const { return limit_sigma_; }
  GammaFunction gamma() const { return gamma_; }

  // Options that recreate this config exactly.
  ConfigOptions ToOptions() const;

  friend bool operator==(const ModelConfig&, const ModelConfig&) = default;

 private:
  ModelConfig() = default;

  Model model_ = Model::kPlackettLuce;
  double mu_ = kDefaultMu;
  double sigma_ = kDefaultSigma;
  double beta_ = kDefaultSigma / 2.0;
  double kappa_ = kDefaultKappa;
  double tau_ = kDefaultTau;
  double epsilon_ = kDefaultEpsilon;
  double z_ = kDefaultZ;
  bool limit_sigma_ = false;
  GammaFunction gamma_ = &DefaultGamma;
};

// Team-level aggregate consumed by the update rules.
struct TeamRating {
  double mu = 0.0;        // sum of member mus
  double sigma_sq = 0.0;  // sum of member sigma^2
  int rank = 1;           // 1 = best; equal values tie
  std::size_t source_index = 0;
};

Rating DefaultRating(const ModelConfig& config);

// Conservative skill estimate mu - z * sigma. Not clamped at zero.
double Ordinal(const Rating& rating, double z);

// Inflates sigma for `periods` inactive periods:
// sigma' = min(sqrt(sigma^2 + periods * decay_rate^2), sigma_cap).
// mu is unchanged. A cap below the current sigma leaves sigma as is.
Rating Decay(const Rating& rating, int periods, double decay_rate,
             double sigma_cap);

}  // namespace skillrate

#endif  // SKILLRATE_CORE_H_
