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

#ifndef SKILLRATE_EXECUTION_H_
#define SKILLRATE_EXECUTION_H_

#include <cstddef>

namespace skillrate {

// Selects between the serial reference loop and the OpenMP kernel. Every
// kernel produces bit-identical results under both policies.
enum class Execution { kSerial, kParallel };

// Number of OpenMP threads the parallel kernels will use (1 without OpenMP).
int MaxThreads();

}  // namespace skillrate

#endif  // SKILLRATE_EXECUTION_H_
