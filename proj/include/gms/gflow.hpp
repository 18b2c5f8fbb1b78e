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

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "gms/zx.hpp"

namespace gms {

/// Open-graph view of a graph-like diagram: the spiders with their Hadamard
/// edges, the input/output spiders (those attached to a boundary), and the
/// measurement-plane labels of non-outputs.
struct LabelledOpenGraph {
  std::vector<VertexId> vertices;  // ascending
  std::map<VertexId, std::set<VertexId>> adj;
  std::vector<VertexId> inputs, outputs;  // in boundary order
  std::set<VertexId> input_set, output_set;
  std::map<VertexId, Plane> label;  // defined exactly on non-outputs
  std::map<VertexId, Phase> angle;  // ditto

  bool is_input(VertexId v) const { return input_set.count(v) > 0; }
  bool is_output(VertexId v) const { return output_set.count(v) > 0; }
};

LabelledOpenGraph open_graph_of(const ZxDiagram& d);

/// {w : |N(w) ∩ K| odd}.
std::set<VertexId> odd_neighbourhood(const LabelledOpenGraph& g,
                                     const std::set<VertexId>& k);

/// Correction sets plus integer layers encoding the partial order:
/// outputs sit at layer 0 and v comes before w (v < w in the order) iff
/// layer(v) > layer(w).
struct GflowCert {
  std::map<VertexId, std::set<VertexId>> g;
  std::map<VertexId, int> layer;
};

/// All five correction-set conditions, for every non-output vertex, plus the
/// domain requirements (g on non-outputs only, g(v) avoiding inputs).
bool verify_gflow(const LabelledOpenGraph& graph, const GflowCert& cert);

/// Maximally delayed gflow by back-to-front GF(2) solving: each round finds
/// every still-uncorrected vertex whose correction set fits inside the
/// already-corrected region, and assigns the next layer. Returns nullopt
/// when some vertex can never be corrected (no gflow exists).
std::optional<GflowCert> find_maximally_delayed_gflow(
    const LabelledOpenGraph& graph);

bool gflow_exists(const ZxDiagram& d);

}  // namespace gms
