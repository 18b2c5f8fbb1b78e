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

/// Single-qubit cleanup over circuits on {RZ, RX, R, H, GMS}, applied to a
/// fixpoint per qubit wire:
///   H H -> identity, H RX(t) H -> RZ(t), H RZ(t) H -> RX(t),
///   adjacent same-axis rotations merge (zero results dropped),
///   RX commutes through GMS toward the outputs when that enables a merge.
/// The GMS sequence (count, order, couplings, angles) is left untouched;
/// general R gates only participate by dropping when their angle is zero.
/// The single-qubit gate count never increases.
Circuit optimize_sqg(const Circuit& c);

/// Lower every H to RZ(pi/2) RX(pi/2) RZ(pi/2) (equal up to global phase),
/// leaving all other gates in place.
Circuit lower_h_to_native(const Circuit& c);

}  // namespace gms
