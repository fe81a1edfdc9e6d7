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

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qtrans/unitary2.hpp"

namespace qtrans {

/**
 * Qubit indices and basis states.
 *
 * A register of m qubits has 2^m basis states. The basis index k corresponds
 * to the bit string x_{m-1} ... x_0 with k = sum_i x_i 2^i: qubit 0 is the
 * least significant bit and qubit m-1 the most significant. Ket labels are
 * written most significant first, so |10> on two qubits is index 2.
 * Every module uses this convention.
 */
using Qubit = unsigned;
using BasisIndex = std::uint64_t;

/// Largest register the IR accepts; basis indices must fit in 64 bits.
inline constexpr unsigned kMaxQubits = 62;

constexpr bool qubit_value(BasisIndex index, Qubit q) { return ((index >> q) & 1U) != 0; }

/// Parses a ket label such as "10" (most significant first) into its index.
BasisIndex basis_index_from_label(std::string_view label);

/**
 * Zero-conditions (C0) and one-conditions (C1) of a conditional gate.
 *
 * The gate acts on basis states with x_q = 0 for q in C0 and x_q = 1 for q in
 * C1 and leaves every other state unchanged. Both lists are kept sorted and
 * free of duplicates. Conditions may name ancilla qubits.
 */
class ConditionSet {
  public:
    ConditionSet() = default;
    /// Throws InvalidArgument when the two sets intersect.
    ConditionSet(std::vector<Qubit> zeros, std::vector<Qubit> ones);

    static ConditionSet one(Qubit q) { return ConditionSet({}, {q}); }
    static ConditionSet zero(Qubit q) { return ConditionSet({q}, {}); }

    const std::vector<Qubit> &zeros() const { return zeros_; }
    const std::vector<Qubit> &ones() const { return ones_; }

    std::size_t size() const { return zeros_.size() + ones_.size(); }
    bool empty() const { return zeros_.empty() && ones_.empty(); }
    bool contains(Qubit q) const;

    /// Union of both condition sets; throws if a qubit is required to be 0 and 1.
    ConditionSet merged(const ConditionSet &other) const;

    BasisIndex mask() const { return mask_; }
    BasisIndex value() const { return value_; }
    bool satisfied_by(BasisIndex index) const { return (index & mask_) == value_; }

    bool operator==(const ConditionSet &other) const {
        return zeros_ == other.zeros_ && ones_ == other.ones_;
    }

  private:
    std::vector<Qubit> zeros_;
    std::vector<Qubit> ones_;
    BasisIndex mask_ = 0;
    BasisIndex value_ = 0;
};

/// Shorthand names kept so serialized circuits stay readable and round-trip exactly.
enum class GateName { Custom, X, Z, H, Phase, Rot };

struct SingleQubitGate {
    Qubit target;
    Unitary2 unitary;
    ConditionSet conditions;
    GateName name = GateName::Custom;
    double angle = 0.0; // Phase and Rot only
};

/// Inclusive range of qubits lo..hi.
struct QubitRange {
    Qubit lo;
    Qubit hi;

    unsigned width() const { return hi - lo + 1; }
    bool contains(Qubit q) const { return q >= lo && q <= hi; }
    bool operator==(const QubitRange &) const = default;
};

enum class WireRotation {
    Left,  // value on qubit i moves to i+1, hi wraps to lo
    Right, // value on qubit i moves to i-1, lo wraps to hi
};

struct BitReversal {
    QubitRange range;
};
struct RotateWires {
    QubitRange range;
    WireRotation direction;
};
/// Exchanges two basis states of the range register (values relative to range.lo).
struct Transposition {
    QubitRange range;
    BasisIndex first;
    BasisIndex second;
};
struct WireSwap {
    Qubit first;
    Qubit second;
};

using PermutationSpec = std::variant<BitReversal, RotateWires, Transposition, WireSwap>;

struct PermutationGate {
    PermutationSpec spec;
    ConditionSet conditions;
};

/// |x> -> |(2^m - x) mod 2^m> on an m-qubit range.
struct TwosComplementGate {
    QubitRange range;
    ConditionSet conditions;
};

/**
 * One IR instruction. Every gate denotes a unitary on the full state space;
 * the two macro kinds denote (conditioned) permutation matrices.
 */
class Gate {
  public:
    using Kind = std::variant<SingleQubitGate, PermutationGate, TwosComplementGate>;

    Gate(SingleQubitGate gate);
    Gate(PermutationGate gate);
    Gate(TwosComplementGate gate);

    const Kind &kind() const { return kind_; }
    template <class T> const T *get_if() const { return std::get_if<T>(&kind_); }

    const ConditionSet &conditions() const;
    std::vector<Qubit> targets() const;
    Qubit max_qubit() const;
    bool is_macro() const { return !std::holds_alternative<SingleQubitGate>(kind_); }

    Gate with_conditions(ConditionSet conditions) const;
    Gate with_extra_conditions(const ConditionSet &extra) const {
        return with_conditions(conditions().merged(extra));
    }

  private:
    void validate() const;

    Kind kind_;
};

// Factories.
Gate x_gate(Qubit target, ConditionSet conditions = {});
Gate z_gate(Qubit target, ConditionSet conditions = {});
Gate h_gate(Qubit target, ConditionSet conditions = {});
Gate phase_gate(Qubit target, double theta, ConditionSet conditions = {});
Gate rot_gate(Qubit target, double theta, ConditionSet conditions = {});
Gate unitary_gate(Qubit target, const Unitary2 &u, ConditionSet conditions = {});
Gate cnot(Qubit control, Qubit target);
Gate toffoli(Qubit control_a, Qubit control_b, Qubit target);

Gate bit_reversal(QubitRange range, ConditionSet conditions = {});
Gate rotate_wires(QubitRange range, WireRotation direction, ConditionSet conditions = {});
Gate transposition(QubitRange range, BasisIndex first, BasisIndex second,
                   ConditionSet conditions = {});
Gate swap_qubits(Qubit a, Qubit b, ConditionSet conditions = {});
Gate twos_complement(QubitRange range, ConditionSet conditions = {});

/// Image of a basis index under an (unconditioned) permutation macro.
BasisIndex permute_basis_index(const PermutationSpec &spec, BasisIndex index);
/// Image of a basis index under an (unconditioned) two's complement macro.
BasisIndex twos_complement_index(const QubitRange &range, BasisIndex index);

/// Single-qubit gate with no zero-conditions and at most one one-condition.
bool is_elementary(const Gate &gate);

std::string describe(const Gate &gate);

} // namespace qtrans
