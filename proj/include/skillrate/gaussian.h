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

// Standard-normal primitives and the truncated-normal moment corrections used
// by the Thurstone-Mosteller update rules.
//
// For a win, v and w are the mean shift and variance reduction of N(0,1)
// truncated to (t - x, inf) expressed at y = x - t; for a draw the truncation
// interval is [-t - x, t - x]. All four are finite for any finite input.

#ifndef SKILLRATE_GAUSSIAN_H_
#define SKILLRATE_GAUSSIAN_H_

namespace skillrate::gaussian {

double Pdf(double x);
double Cdf(double x);

// Mills ratio Phi(-x) / phi(x). Accurate in both tails.
double MillsRatio(double x);

// phi(x - t) / Phi(x - t).
double VWin(double x, double t);
// VWin * (VWin + x - t), clamped to [0, 1].
double WWin(double x, double t);
// (phi(-t - x) - phi(t - x)) / (Phi(t - x) - Phi(-t - x)); needs t >= 0.
double VDraw(double x, double t);
// VDraw^2 + ((t - x) phi(t - x) - (-t - x) phi(-t - x)) /
//           (Phi(t - x) - Phi(-t - x)), clamped to [0, 1]; needs t >= 0.
double WDraw(double x, double t);

}  // namespace skillrate::gaussian

#endif  // SKILLRATE_GAUSSIAN_H_
