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

#include "skillrate/gaussian.h"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace skillrate::gaussian {
namespace {

constexpr double kInvSqrt2Pi = 0.3989422804014326779399460599343818684759;

// Above this argument the Mills ratio comes from its continued fraction,
// which is converged to full double precision with kMillsTerms terms.
constexpr double kMillsContinuedFractionFrom = 5.0;
constexpr int kMillsTerms = 40;

// Below this draw margin the truncation interval is treated as a point and
// the second-order expansion in t is used.
constexpr double kTinyMargin = 1e-5;

double Clamp01(double w) { return std::clamp(w, 0.0, 1.0); }

}  // namespace

double Pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

double Cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double MillsRatio(double x) {
  if (x >= kMillsContinuedFractionFrom) {
    // 1 / (x + 1 / (x + 2 / (x + 3 / (x + ...))))
    double tail = x;
    for (int k = kMillsTerms; k >= 1; --k) tail = x + k / tail;
    return 1.0 / tail;
  }
  return 0.5 * std::erfc(x / std::numbers::sqrt2) / Pdf(x);
}

double VWin(double x, double t) {
  double y = x - t;
  if (-y >= kMillsContinuedFractionFrom) return 1.0 / MillsRatio(-y);
  return Pdf(y) / Cdf(y);
}

double WWin(double x, double t) {
  double v = VWin(x, t);
  return Clamp01(v * (v + (x - t)));
}

// Both draw functions divide numerator and denominator by phi(t - |x|),
// which keeps them finite and accurate deep into the tails:
//   Phi(t - x) - Phi(-t - x) = phi(t - x) [M(x - t) - r M(x + t)],
//   phi(-t - x) = r phi(t - x),  r = exp(-2 t x),  x >= 0.
// VDraw is odd and WDraw even in x.
double VDraw(double x, double t) {
  double ax = std::abs(x);
  double v;
  if (t < kTinyMargin) {
    v = -ax * (1.0 - t * t / 3.0);
  } else {
    double r = std::exp(-2.0 * t * ax);
    double denom = MillsRatio(ax - t) - r * MillsRatio(ax + t);
    v = std::expm1(-2.0 * t * ax) / denom;
  }
  return x < 0.0 ? -v : v;
}

double WDraw(double x, double t) {
  double ax = std::abs(x);
  if (t < kTinyMargin) return Clamp01(1.0 - t * t / 3.0);
  double r = std::exp(-2.0 * t * ax);
  double denom = MillsRatio(ax - t) - r * MillsRatio(ax + t);
  double v = std::expm1(-2.0 * t * ax) / denom;
  return Clamp01(v * v + ((t - ax) + (t + ax) * r) / denom);
}

}  // namespace skillrate::gaussian
