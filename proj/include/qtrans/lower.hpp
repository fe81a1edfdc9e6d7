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

#include <cstddef>
#include <string>
#include <vector>

#include "qtrans/circuit.hpp"

namespace qtrans {

/**
 * Target gate sets.
 *
 * Relaxed keeps single-qubit gates, singly-controlled U and Toffolis.
 * StrictElementary emits only single-qubit gates and CNOTs: Toffolis become
 * the 6-CNOT / 9 single-qubit sequence and controlled-U the two-CNOT
 * A-X-B-X-C form.
 */
enum class LoweringMode { Relaxed, StrictElementary };

struct LoweringOptions {
    LoweringMode mode = LoweringMode::Relaxed;
    /// Cap on workbits added on top of the input circuit's ancillas.
    unsigned max_ancillas = 64;
    /// Drop inverse pairs separated only by gates that commute with them.
    bool cancel_inverses = true;
};

struct GateExpansion {
    std::size_t input_index = 0;
    std::string input;
    std::size_t emitted = 0;
    unsigned ancillas = 0;
};

struct LoweringReport {
    std::size_t input_gate_count = 0;
    std::size_t output_elementary_count = 0;
    /// Peak number of workbits held at once (they are reused gate to gate).
    unsigned ancillas_used = 0;
    /// Emitted gates removed by inverse-pair cancellation, in the output gate set.
    std::size_t cancelled_gates = 0;
    std::vector<GateExpansion> expansions;
};

struct LoweredCircuit {
    Circuit circuit;
    LoweringReport report;
};

/**
 * Rewrites macros and multiply-conditioned gates into the target gate set.
 *
 * Workbits are appended after the input circuit's qubits, start in |0> and are
 * returned to |0> after every gate. On the subspace where they are |0>, the
 * output acts exactly like the input.
 *
 * Throws AncillaBudgetExceeded if more than options.max_ancillas workbits are
 * needed at once. With options.cancel_inverses, U followed by U^-1 on the same
 * target and conditions is removed when every gate between them acts
 * diagonally on all shared qubits (so the pair commutes past it); this mostly removes ladder uncompute/recompute pairs between gates that
 * share conditions. Expansion entries count gates before cancellation.
 */
LoweredCircuit lower_circuit(const Circuit &circuit, const LoweringOptions &options = {});

/// True if `gate` is already in the target gate set of `mode`.
bool is_lowered(const Gate &gate, LoweringMode mode);
bool is_lowered(const Circuit &circuit, LoweringMode mode);

/// A lowered gate list and the workbits (first_ancilla, first_ancilla+1, ...) it uses.
struct GateSequence {
    std::vector<Gate> gates;
    unsigned ancillas_used = 0;
};

/**
 * AND-ladder lowering of a single-qubit gate with k >= 2 conditions.
 * Zero-conditions are X-conjugated. Toffolis accumulate the conjunction into
 * workbits; for U = X the last Toffoli targets the gate's qubit directly
 * (k - 2 workbits), otherwise a controlled U fires from the last workbit
 * (k - 1 workbits). The ladder is then unwound.
 */
GateSequence lower_multicontrol(const SingleQubitGate &gate, Qubit first_ancilla,
                                LoweringMode mode);

/**
 * Conditioned bitwise NOT followed by a conditioned ripple increment. The
 * increment keeps its carries in workbits, so the cost is O(m + |C|).
 */
GateSequence lower_tcomp(const TwosComplementGate &gate, Qubit first_ancilla, LoweringMode mode);

/// Wire permutations as swaps of three CNOTs; a transposition as a CNOT-conjugated multi-controlled X.
GateSequence lower_perm(const PermutationGate &gate, Qubit first_ancilla, LoweringMode mode);

/**
 * Emitted gate count of a k-condition gate with all one-conditions:
 * per_condition * k + constant (k >= 2).
 */
struct MulticontrolCost {
    std::size_t per_condition;
    std::ptrdiff_t constant;
};
MulticontrolCost multicontrol_cost(LoweringMode mode, bool pauli_x_target);

} // namespace qtrans
