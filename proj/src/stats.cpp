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

#include "gms/stats.hpp"

#include <algorithm>
#include <vector>

namespace gms {

StatsRecord circuit_stats(const Circuit& c) {
  StatsRecord rec;
  std::vector<int> last_layer(c.qubit_count, 0);  // 0 = before first layer
  std::vector<bool> layer_entangling;             // index = layer - 1
  for (const Gate& g : c.gates) {
    bool ent = g.is_entangling();
    if (ent)
      ++rec.entangling_count;
    else
      ++rec.sqg_count;
    int layer = 0;
    for (int q : g.qubits()) layer = std::max(layer, last_layer[q]);
    ++layer;
    for (int q : g.qubits()) last_layer[q] = layer;
    if (static_cast<int>(layer_entangling.size()) < layer)
      layer_entangling.resize(layer, false);
    if (ent) layer_entangling[layer - 1] = true;
  }
  rec.layer_count = static_cast<int>(layer_entangling.size());
  for (bool ent : layer_entangling) rec.time_ms += ent ? 0.672 : 0.110;
  return rec;
}

}  // namespace gms
