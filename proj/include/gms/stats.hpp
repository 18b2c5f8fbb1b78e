// Copyright 2026 The gmsc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "gms/circuit.hpp"

namespace gms {

/// Gate counts plus an execution-time estimate from ASAP layering with
/// 110us single-qubit-only layers and 672us layers containing any
/// entangling gate.
struct StatsRecord {
  int sqg_count = 0;
  int entangling_count = 0;
  int layer_count = 0;
  double time_ms = 0.0;
};

StatsRecord circuit_stats(const Circuit& c);

}  // namespace gms
