// Copyright 2026 The qtrans Authors
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

#pragma once

#include "qtrans/circuit.hpp"
#include "qtrans/lower.hpp"
#include "qtrans/transforms.hpp"

namespace qtrans {

/// H on qubit n-1, then the half-size transform on qubits 0..n-2; n gates in total.
Circuit build_walsh(unsigned n);

struct QftOptions {
    /// Emit a ROTWIRES after every level instead of one trailing BITREV.
    bool per_level_permutations = false;
};

/**
 * Per level m = n-1 .. 0: H on qubit m, then PHASE(2 pi 2^j / 2^{m+1}) on
 * qubit j conditioned on qubit m for j = m-1 .. 0. The wire permutations of
 * all levels (each moves the top qubit of its level to qubit 0) are deferred
 * into one bit reversal.
 */
Circuit build_qft(unsigned n, const QftOptions &options = {});

/**
 * Half-size transform on qubits 0..n-2, then six gates per level:
 * conditioned Z (phase flip of basis N/2+1), H on the top qubit, conditioned
 * A_N on qubit 0, and a swap of qubits 0 and n-1 as three conditioned CNOTs.
 * The conditions are qubit n-1 = 1 (for the first Z and A_N) and qubits
 * 1..n-2 = 0.
 */
Circuit build_slant(unsigned n);

/**
 * ROTWIRES right (moves the parity bit to the top), the half-size transform
 * on qubits 0..n-2, the BC block conditioned on qubit n-1, and H on qubit n-1.
 */
Circuit build_hartley(unsigned n);

/**
 * The BC_{N/2} block on n-1 qubits (n >= 3). Qubit n-2 is the sign qubit b,
 * qubits 0..n-3 the argument x:
 * TCOMP(x | b), Z(b), Z(b | x = 0), ROT_k(b | x_k) with angle 2 pi 2^k / N,
 * TCOMP(x | b).
 */
Circuit build_bc(unsigned n);

Circuit build_transform(Transform t, unsigned n);

struct SynthRequest {
    Transform transform;
    unsigned n;
    bool lower = false;
    LoweringOptions lowering;
};

Circuit synthesize(const SynthRequest &request);

} // namespace qtrans
