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

#include "gms/zx.hpp"

namespace gms {

/// Rule-application counters for one full_simplify run.
struct SimplifyStats {
  int identity_removals = 0;
  int gadget_fusions = 0;
  int pivots = 0;
  int local_complementations = 0;
  int gadget_pivots = 0;

  int total() const {
    return identity_removals + gadget_fusions + pivots +
           local_complementations + gadget_pivots;
  }
};

/// Spider eligible for rewriting: not a boundary and not attached to one.
/// Boundary-adjacent spiders are deliberately left alone so extraction can
/// rely on clean boundary wires.
bool is_rewrite_interior(const ZxDiagram& d, VertexId v);

/// Degree-1 YZ spider carrying a phase-gadget angle.
bool is_gadget_pendant(const ZxDiagram& d, VertexId v);

/// Spider with a gadget pendant attached. Axles are never consumed by the
/// Clifford rewrites so gadget structure survives simplification.
bool is_gadget_axle(const ZxDiagram& d, VertexId v);

/// Removes v (XY plane, phase exactly +-pi/2, rewrite-interior), complements
/// the edges among its neighbours and subtracts v's phase from each of them.
/// Throws std::invalid_argument on a precondition violation.
void local_complement_at(ZxDiagram& d, VertexId v);

/// Removes the Hadamard-adjacent pair u, v (both XY, phases exactly 0 or pi,
/// rewrite-interior), complementing edges between the three neighbour groups
/// N(u)-only, N(v)-only and shared, with the standard phase updates.
/// Throws std::invalid_argument on a precondition violation.
void pivot_at(ZxDiagram& d, VertexId u, VertexId v);

/// Extracts v's phase into a fresh phase-gadget pair (connector + YZ pendant
/// hanging off v), then runs pivot_at(u, v). u must be rewrite-interior XY
/// with a Pauli phase and adjacent to v; v rewrite-interior XY. Returns false
/// without changes when v is already a degree-1 gadget vertex.
bool pivot_gadget(ZxDiagram& d, VertexId u, VertexId v);

/// Runs identity removal, gadget fusion, pivoting, local complementation and
/// gadget pivoting to fixpoint, scanning in ascending vertex id order.
/// Preserves semantics up to global phase and gflow existence.
ZxDiagram full_simplify(ZxDiagram d, SimplifyStats* stats = nullptr);

}  // namespace gms
