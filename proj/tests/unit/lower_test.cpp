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

#include <cmath>

#include <gtest/gtest.h>

#include "qtrans/error.hpp"
#include "qtrans/lower.hpp"
#include "qtrans/simulate.hpp"
#include "qtrans/synth.hpp"
#include "reference.hpp"

namespace qtrans {
namespace {

const std::vector<LoweringMode> kModes = {LoweringMode::Relaxed, LoweringMode::StrictElementary};

const char *name(LoweringMode m) { return m == LoweringMode::Relaxed ? "relaxed" : "strict"; }

/// Lowered matrix on the ancilla-zero subspace, compared with the reference matrix of the input.
double lowering_error(const Circuit &c, LoweringMode mode) {
    const LoweredCircuit lowered = lower_circuit(c, {mode});
    const ExtractedMatrix x = extract_matrix(lowered.circuit);
    EXPECT_LT(x.ancilla_residual, 1e-10);
    const DenseMatrix expected = ref::restrict_to_data(ref::circuit_matrix(c), c.data_qubits());
    return max_abs_diff(x.matrix, expected);
}

Circuit wrap(const std::vector<Gate> &gates, unsigned data, unsigned ancillas) {
    Circuit c(data, ancillas);
    for (const Gate &g : gates) {
        c.append(g);
    }
    return c;
}

TEST(Lower, CnotIsUnchanged) {
    Circuit c(2);
    c.append(cnot(1, 0));
    for (LoweringMode m : kModes) {
        const LoweredCircuit out = lower_circuit(c, {m});
        EXPECT_EQ(out.circuit, c) << name(m);
        EXPECT_EQ(out.report.ancillas_used, 0U);
    }
}

TEST(Lower, StrictToffoliIsTheToffoliPermutation) {
    Circuit c(3);
    c.append(toffoli(0, 1, 2));
    const LoweredCircuit out = lower_circuit(c, {LoweringMode::StrictElementary});
    EXPECT_EQ(out.circuit.size(), 15U);
    EXPECT_TRUE(out.circuit.elementary_only());
    DenseMatrix toffoli_perm = DenseMatrix::identity(8);
    toffoli_perm(3, 3) = toffoli_perm(7, 7) = 0.0;
    toffoli_perm(3, 7) = toffoli_perm(7, 3) = 1.0;
    EXPECT_LT(max_abs_diff(extract_matrix(out.circuit).matrix, toffoli_perm), 1e-12);
    // Relaxed mode keeps the Toffoli.
    EXPECT_EQ(lower_circuit(c).circuit, c);
}

TEST(Lower, ZeroConditionIsConjugatedByX) {
    Circuit c(3);
    c.append(h_gate(0, ConditionSet::zero(2)));
    const LoweredCircuit out = lower_circuit(c);
    ASSERT_EQ(out.circuit.size(), 3U);
    EXPECT_EQ(describe(out.circuit.gates()[0]), describe(x_gate(2)));
    EXPECT_EQ(out.circuit.gates()[1].conditions(), ConditionSet::one(2));
    EXPECT_EQ(describe(out.circuit.gates()[2]), describe(x_gate(2)));
    for (LoweringMode m : kModes) {
        EXPECT_LT(lowering_error(c, m), 1e-12) << name(m);
    }
}

TEST(Lower, MulticontrolToffoliCase) {
    SingleQubitGate g{2, pauli_x(), ConditionSet({}, {0, 1}), GateName::X};
    const GateSequence relaxed = lower_multicontrol(g, 3, LoweringMode::Relaxed);
    EXPECT_EQ(relaxed.gates.size(), 1U);
    const GateSequence strict = lower_multicontrol(g, 3, LoweringMode::StrictElementary);
    EXPECT_EQ(strict.gates.size(), 15U);
    EXPECT_EQ(strict.ancillas_used, 0U);
    const Circuit c = wrap(strict.gates, 3, 1);
    DenseMatrix expected = ref::gate_matrix(Gate(g), 3);
    EXPECT_LT(max_abs_diff(extract_matrix(c).matrix, expected), 1e-12);
}

TEST(Lower, MulticontrolMixedConditions) {
    std::mt19937_64 rng(3);
    const Unitary2 u = ref::random_unitary(rng);
    // +a -b +c on a 4-qubit register, target qubit 3.
    SingleQubitGate g{3, u, ConditionSet({1}, {0, 2})};
    for (LoweringMode m : kModes) {
        const GateSequence seq = lower_multicontrol(g, 4, m);
        EXPECT_EQ(seq.ancillas_used, 2U);
        const Circuit c = wrap(seq.gates, 4, seq.ancillas_used);
        const ExtractedMatrix x = extract_matrix(c);
        EXPECT_LT(x.ancilla_residual, 1e-12);
        EXPECT_LT(max_abs_diff(x.matrix, ref::gate_matrix(Gate(g), 4)), 1e-12) << name(m);
    }
}

TEST(Lower, DoublyConditionedZOnlyPhasesMatchingStates) {
    SingleQubitGate g{0, pauli_z(), ConditionSet({}, {1, 2}), GateName::Z};
    for (LoweringMode m : kModes) {
        const GateSequence seq = lower_multicontrol(g, 3, m);
        const Circuit c = wrap(seq.gates, 3, seq.ancillas_used);
        for (BasisIndex k = 0; k < 8; ++k) {
            const StateVector out = run(c, StateVector::basis(3, k));
            const double sign = k == 7 ? -1.0 : 1.0;
            EXPECT_LT(std::abs(out[k] - sign), 1e-12) << name(m) << " " << k;
        }
    }
    EXPECT_THROW(lower_multicontrol({0, pauli_z(), ConditionSet::one(1)}, 2, LoweringMode::Relaxed),
                 InvalidArgument);
}

TEST(Lower, CountLawIsLinearInConditions) {
    for (LoweringMode m : kModes) {
        for (bool x_target : {false, true}) {
            const MulticontrolCost cost = multicontrol_cost(m, x_target);
            std::vector<double> ks;
            std::vector<double> sizes;
            for (unsigned k = 2; k <= 8; ++k) {
                std::vector<Qubit> ones;
                for (Qubit q = 1; q <= k; ++q) {
                    ones.push_back(q);
                }
                const SingleQubitGate g{0, x_target ? pauli_x() : hadamard(), ConditionSet({}, ones)};
                const std::size_t size = lower_multicontrol(g, k + 1, m).gates.size();
                EXPECT_EQ(static_cast<std::ptrdiff_t>(size),
                          static_cast<std::ptrdiff_t>(cost.per_condition * k) + cost.constant)
                    << name(m) << " k=" << k;
                ks.push_back(k);
                sizes.push_back(static_cast<double>(size));
            }
            double mk = 0, ms = 0;
            for (std::size_t i = 0; i < ks.size(); ++i) {
                mk += ks[i] / ks.size();
                ms += sizes[i] / sizes.size();
            }
            double num = 0, den = 0;
            for (std::size_t i = 0; i < ks.size(); ++i) {
                num += (ks[i] - mk) * (sizes[i] - ms);
                den += (ks[i] - mk) * (ks[i] - mk);
            }
            const double slope = num / den;
            EXPECT_NEAR(slope, static_cast<double>(cost.per_condition), 0.1 * cost.per_condition);
        }
    }
}

TEST(Lower, TwosComplementValues) {
    const TwosComplementGate t{{0, 2}, {}};
    for (LoweringMode m : kModes) {
        const GateSequence seq = lower_tcomp(t, 3, m);
        const Circuit c = wrap(seq.gates, 3, seq.ancillas_used);
        const StateVector three = run(c, StateVector::basis(3, 3));
        EXPECT_LT(std::abs(three[5] - 1.0), 1e-12) << name(m);
        const StateVector zero = run(c, StateVector::basis(3, 0));
        EXPECT_LT(std::abs(zero[0] - 1.0), 1e-12) << name(m);
    }
}

TEST(Lower, TwosComplementTwiceIsIdentity) {
    for (const ConditionSet &cond : {ConditionSet{}, ConditionSet({5}, {4})}) {
        const TwosComplementGate t{{0, 3}, cond};
        for (LoweringMode m : kModes) {
            const GateSequence seq = lower_tcomp(t, 6, m);
            Circuit c = wrap(seq.gates, 6, seq.ancillas_used);
            c.append(Circuit(c));
            const ExtractedMatrix x = extract_matrix(c);
            EXPECT_LT(x.ancilla_residual, 1e-12);
            EXPECT_LT(max_abs_diff(x.matrix, DenseMatrix::identity(64)), 1e-12) << name(m);
        }
    }
}

TEST(Lower, TwosComplementCostIsLinear) {
    std::vector<std::size_t> sizes;
    for (unsigned m = 1; m <= 12; ++m) {
        sizes.push_back(lower_tcomp({{0, m - 1}, ConditionSet::one(m)}, m + 1, LoweringMode::Relaxed)
                            .gates.size());
    }
    for (std::size_t i = 3; i < sizes.size(); ++i) {
        EXPECT_EQ(sizes[i] - sizes[i - 1], sizes[2] - sizes[1]);
    }
}

TEST(Lower, WirePermutations) {
    const PermutationGate bitrev{BitReversal{{0, 3}}, {}};
    const GateSequence seq = lower_perm(bitrev, 4, LoweringMode::Relaxed);
    ASSERT_EQ(seq.gates.size(), 6U);
    EXPECT_EQ(seq.ancillas_used, 0U);
    EXPECT_EQ(describe(seq.gates[0]), describe(cnot(0, 3)));
    EXPECT_EQ(describe(seq.gates[3]), describe(cnot(1, 2)));
    EXPECT_LT(max_abs_diff(extract_matrix(wrap(seq.gates, 4, 0)).matrix,
                           ref::gate_matrix(Gate(bitrev), 4)),
              1e-15);

    const GateSequence swap = lower_perm({WireSwap{0, 1}, {}}, 2, LoweringMode::StrictElementary);
    ASSERT_EQ(swap.gates.size(), 3U);
    DenseMatrix swap_matrix(4);
    swap_matrix(0, 0) = swap_matrix(3, 3) = swap_matrix(1, 2) = swap_matrix(2, 1) = 1.0;
    EXPECT_LT(max_abs_diff(extract_matrix(wrap(swap.gates, 2, 0)).matrix, swap_matrix), 1e-15);

    const GateSequence three = lower_perm({BitReversal{{0, 2}}, {}}, 3, LoweringMode::Relaxed);
    const StateVector out = run(wrap(three.gates, 3, 0), StateVector::basis(3, 1));
    EXPECT_EQ(out[4], Complex(1.0));

    const GateSequence rot = lower_perm({RotateWires{{0, 3}, WireRotation::Left}, {}}, 4,
                                        LoweringMode::Relaxed);
    EXPECT_EQ(rot.gates.size(), 9U);
}

TEST(Lower, ConditionedPermutationsConditionEveryCnot) {
    const PermutationGate p{RotateWires{{0, 2}, WireRotation::Right}, ConditionSet({3}, {4})};
    const GateSequence macro_level = lower_perm(p, 5, LoweringMode::Relaxed);
    const Circuit c = wrap(macro_level.gates, 5, macro_level.ancillas_used);
    EXPECT_LT(max_abs_diff(extract_matrix(c).matrix, ref::gate_matrix(Gate(p), 5)), 1e-12);
}

TEST(Lower, TranspositionMatchesReference) {
    for (BasisIndex i = 0; i < 8; ++i) {
        for (BasisIndex j = 0; j < 8; ++j) {
            if (i == j) {
                continue;
            }
            const PermutationGate p{Transposition{{1, 3}, i, j}, ConditionSet::zero(0)};
            for (LoweringMode m : kModes) {
                const GateSequence seq = lower_perm(p, 4, m);
                const ExtractedMatrix x = extract_matrix(wrap(seq.gates, 4, seq.ancillas_used));
                EXPECT_LT(max_abs_diff(x.matrix, ref::gate_matrix(Gate(p), 4)), 1e-12)
                    << i << "<->" << j << " " << name(m);
            }
        }
    }
}

TEST(Lower, RandomCircuitsPreserveSemantics) {
    std::mt19937_64 rng(500);
    for (int trial = 0; trial < 500; ++trial) {
        const unsigned n = 1 + trial % 5;
        const Circuit c = ref::random_circuit(rng, {n, 10, true, 0.5});
        for (LoweringMode m : kModes) {
            const LoweredCircuit out = lower_circuit(c, {m});
            EXPECT_TRUE(is_lowered(out.circuit, m));
            if (m == LoweringMode::StrictElementary) {
                EXPECT_TRUE(out.circuit.elementary_only());
            }
            const ExtractedMatrix x = extract_matrix(out.circuit);
            EXPECT_LT(x.ancilla_residual, 1e-10);
            const DenseMatrix expected = ref::circuit_matrix(c);
            ASSERT_LT(max_abs_diff(x.matrix, expected), 1e-10) << "trial " << trial << " " << name(m);
        }
    }
}

TEST(Lower, CancellationDoesNotChangeSemantics) {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        const Circuit c = ref::random_circuit(rng, {4, 12, true, 0.6});
        for (LoweringMode m : kModes) {
            const LoweredCircuit with = lower_circuit(c, {m, 64, true});
            const LoweredCircuit without = lower_circuit(c, {m, 64, false});
            EXPECT_EQ(without.report.cancelled_gates, 0U);
            EXPECT_EQ(with.circuit.size() + with.report.cancelled_gates, without.circuit.size());
            EXPECT_LT(max_abs_diff(extract_matrix(with.circuit).matrix,
                                   extract_matrix(without.circuit).matrix),
                      1e-10);
        }
    }
}

TEST(Lower, SharedGuardsCancel) {
    Circuit c(4);
    const ConditionSet guard({1, 2}, {});
    c.append(cnot(0, 3).with_extra_conditions(guard));
    c.append(cnot(3, 0).with_extra_conditions(guard));
    const LoweredCircuit out = lower_circuit(c);
    EXPECT_GT(out.report.cancelled_gates, 0U);
    EXPECT_LT(lowering_error(c, LoweringMode::Relaxed), 1e-12);
}

TEST(Lower, TransformsStillMatchOracles) {
    for (Transform t : {Transform::Dft, Transform::Walsh, Transform::Slant, Transform::Hartley}) {
        for (unsigned n = 1; n <= 5; ++n) {
            for (LoweringMode m : kModes) {
                const LoweredCircuit out = lower_circuit(build_transform(t, n), {m});
                const ExtractedMatrix x = extract_matrix(out.circuit);
                EXPECT_LT(x.ancilla_residual, 1e-10);
                EXPECT_LT(max_abs_diff(x.matrix, oracle_matrix(t, n)), 1e-10)
                    << transform_name(t) << " n=" << n << " " << name(m);
            }
        }
    }
}

TEST(Lower, ReportDescribesExpansion) {
    const Circuit c = build_hartley(4);
    const LoweredCircuit out = lower_circuit(c, {LoweringMode::StrictElementary});
    EXPECT_EQ(out.report.input_gate_count, c.size());
    EXPECT_EQ(out.report.expansions.size(), c.size());
    EXPECT_EQ(out.report.output_elementary_count, out.circuit.size());
    EXPECT_EQ(out.circuit.ancilla_qubits(), out.report.ancillas_used);
    std::size_t emitted = 0;
    unsigned peak = 0;
    for (const GateExpansion &e : out.report.expansions) {
        emitted += e.emitted;
        peak = std::max(peak, e.ancillas);
    }
    EXPECT_EQ(emitted, out.circuit.size() + out.report.cancelled_gates);
    EXPECT_EQ(peak, out.report.ancillas_used);
}

TEST(Lower, AncillaBudget) {
    Circuit c(6);
    c.append(h_gate(0, ConditionSet({}, {1, 2, 3, 4, 5})));
    EXPECT_EQ(lower_circuit(c).report.ancillas_used, 4U);
    EXPECT_NO_THROW(lower_circuit(c, {LoweringMode::Relaxed, 4}));
    EXPECT_THROW(lower_circuit(c, {LoweringMode::Relaxed, 3}), AncillaBudgetExceeded);
}

TEST(Lower, ConditionsMayUseInputAncillas) {
    Circuit c(2, 1);
    c.append(x_gate(2, ConditionSet::one(0)));
    c.append(h_gate(1, ConditionSet({}, {0, 2})));
    c.append(x_gate(2, ConditionSet::one(0)));
    for (LoweringMode m : kModes) {
        const LoweredCircuit out = lower_circuit(c, {m});
        EXPECT_EQ(out.circuit.data_qubits(), 2U);
        EXPECT_LT(max_abs_diff(extract_matrix(out.circuit).matrix, extract_matrix(c).matrix), 1e-12);
    }
}

TEST(Lower, IsLowered) {
    EXPECT_TRUE(is_lowered(toffoli(0, 1, 2), LoweringMode::Relaxed));
    EXPECT_FALSE(is_lowered(toffoli(0, 1, 2), LoweringMode::StrictElementary));
    EXPECT_TRUE(is_lowered(h_gate(0, ConditionSet::one(1)), LoweringMode::Relaxed));
    EXPECT_FALSE(is_lowered(h_gate(0, ConditionSet::one(1)), LoweringMode::StrictElementary));
    EXPECT_FALSE(is_lowered(x_gate(0, ConditionSet::zero(1)), LoweringMode::Relaxed));
    EXPECT_FALSE(is_lowered(bit_reversal({0, 1}), LoweringMode::Relaxed));
}

} // namespace
} // namespace qtrans
