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

#include "qtrans/gate.hpp"

#include <algorithm>
#include <sstream>

#include "qtrans/error.hpp"

namespace qtrans {

namespace {

void normalize(std::vector<Qubit> &qubits) {
    std::sort(qubits.begin(), qubits.end());
    qubits.erase(std::unique(qubits.begin(), qubits.end()), qubits.end());
}

template <class... Ts> struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts> Overloaded(Ts...) -> Overloaded<Ts...>;

void check_range(const QubitRange &range) {
    if (range.lo > range.hi || range.hi >= kMaxQubits) {
        throw InvalidArgument("invalid qubit range " + std::to_string(range.lo) + ".." +
                              std::to_string(range.hi));
    }
}

std::vector<Qubit> range_qubits(const QubitRange &range) {
    std::vector<Qubit> out;
    for (Qubit q = range.lo; q <= range.hi; ++q) {
        out.push_back(q);
    }
    return out;
}

} // namespace

BasisIndex basis_index_from_label(std::string_view label) {
    if (label.empty() || label.size() > kMaxQubits) {
        throw InvalidArgument("ket label must have 1.." + std::to_string(kMaxQubits) + " bits");
    }
    BasisIndex index = 0;
    for (char c : label) {
        if (c != '0' && c != '1') {
            throw InvalidArgument("ket label may contain only 0 and 1");
        }
        index = (index << 1) | static_cast<BasisIndex>(c - '0');
    }
    return index;
}

ConditionSet::ConditionSet(std::vector<Qubit> zeros, std::vector<Qubit> ones)
    : zeros_(std::move(zeros)), ones_(std::move(ones)) {
    normalize(zeros_);
    normalize(ones_);
    for (Qubit q : zeros_) {
        if (q >= kMaxQubits) {
            throw InvalidArgument("condition qubit out of range");
        }
        mask_ |= BasisIndex{1} << q;
    }
    for (Qubit q : ones_) {
        if (q >= kMaxQubits) {
            throw InvalidArgument("condition qubit out of range");
        }
        if (std::binary_search(zeros_.begin(), zeros_.end(), q)) {
            throw InvalidArgument("qubit " + std::to_string(q) +
                                  " is both a zero- and a one-condition");
        }
        mask_ |= BasisIndex{1} << q;
        value_ |= BasisIndex{1} << q;
    }
}

bool ConditionSet::contains(Qubit q) const {
    return q < kMaxQubits && ((mask_ >> q) & 1U) != 0;
}

ConditionSet ConditionSet::merged(const ConditionSet &other) const {
    std::vector<Qubit> zeros = zeros_;
    zeros.insert(zeros.end(), other.zeros_.begin(), other.zeros_.end());
    std::vector<Qubit> ones = ones_;
    ones.insert(ones.end(), other.ones_.begin(), other.ones_.end());
    return ConditionSet(std::move(zeros), std::move(ones));
}

Gate::Gate(SingleQubitGate gate) : kind_(std::move(gate)) { validate(); }
Gate::Gate(PermutationGate gate) : kind_(std::move(gate)) { validate(); }
Gate::Gate(TwosComplementGate gate) : kind_(std::move(gate)) { validate(); }

const ConditionSet &Gate::conditions() const {
    return std::visit([](const auto &g) -> const ConditionSet & { return g.conditions; }, kind_);
}

std::vector<Qubit> Gate::targets() const {
    return std::visit(
        Overloaded{
            [](const SingleQubitGate &g) { return std::vector<Qubit>{g.target}; },
            [](const TwosComplementGate &g) { return range_qubits(g.range); },
            [](const PermutationGate &g) {
                return std::visit(
                    Overloaded{
                        [](const WireSwap &s) { return std::vector<Qubit>{s.first, s.second}; },
                        [](const auto &s) { return range_qubits(s.range); },
                    },
                    g.spec);
            },
        },
        kind_);
}

Qubit Gate::max_qubit() const {
    auto t = targets();
    Qubit top = *std::max_element(t.begin(), t.end());
    const auto &c = conditions();
    if (!c.zeros().empty()) {
        top = std::max(top, c.zeros().back());
    }
    if (!c.ones().empty()) {
        top = std::max(top, c.ones().back());
    }
    return top;
}

Gate Gate::with_conditions(ConditionSet conditions) const {
    Kind copy = kind_;
    std::visit([&](auto &g) { g.conditions = std::move(conditions); }, copy);
    return std::visit([](auto &&g) { return Gate(std::move(g)); }, std::move(copy));
}

void Gate::validate() const {
    std::visit(Overloaded{
                   [](const SingleQubitGate &g) {
                       if (g.target >= kMaxQubits) {
                           throw InvalidArgument("target qubit out of range");
                       }
                   },
                   [](const TwosComplementGate &g) { check_range(g.range); },
                   [](const PermutationGate &g) {
                       std::visit(Overloaded{
                                      [](const WireSwap &s) {
                                          if (s.first == s.second || s.first >= kMaxQubits ||
                                              s.second >= kMaxQubits) {
                                              throw InvalidArgument("invalid wire swap");
                                          }
                                      },
                                      [](const Transposition &t) {
                                          check_range(t.range);
                                          const BasisIndex dim = BasisIndex{1} << t.range.width();
                                          if (t.first == t.second || t.first >= dim ||
                                              t.second >= dim) {
                                              throw InvalidArgument("invalid transposition");
                                          }
                                      },
                                      [](const auto &s) { check_range(s.range); },
                                  },
                                  g.spec);
                   },
               },
               kind_);
    for (Qubit q : targets()) {
        if (conditions().contains(q)) {
            throw InvalidArgument("qubit " + std::to_string(q) +
                                  " is both a target and a condition");
        }
    }
}

Gate x_gate(Qubit target, ConditionSet conditions) {
    return SingleQubitGate{target, pauli_x(), std::move(conditions), GateName::X};
}

Gate z_gate(Qubit target, ConditionSet conditions) {
    return SingleQubitGate{target, pauli_z(), std::move(conditions), GateName::Z};
}

Gate h_gate(Qubit target, ConditionSet conditions) {
    return SingleQubitGate{target, hadamard(), std::move(conditions), GateName::H};
}

Gate phase_gate(Qubit target, double theta, ConditionSet conditions) {
    return SingleQubitGate{target, phase_shift(theta), std::move(conditions), GateName::Phase,
                           theta};
}

Gate rot_gate(Qubit target, double theta, ConditionSet conditions) {
    return SingleQubitGate{target, rotation(theta), std::move(conditions), GateName::Rot, theta};
}

Gate unitary_gate(Qubit target, const Unitary2 &u, ConditionSet conditions) {
    return SingleQubitGate{target, u, std::move(conditions), GateName::Custom};
}

Gate cnot(Qubit control, Qubit target) { return x_gate(target, ConditionSet::one(control)); }

Gate toffoli(Qubit control_a, Qubit control_b, Qubit target) {
    return x_gate(target, ConditionSet({}, {control_a, control_b}));
}

Gate bit_reversal(QubitRange range, ConditionSet conditions) {
    return PermutationGate{BitReversal{range}, std::move(conditions)};
}

Gate rotate_wires(QubitRange range, WireRotation direction, ConditionSet conditions) {
    return PermutationGate{RotateWires{range, direction}, std::move(conditions)};
}

Gate transposition(QubitRange range, BasisIndex first, BasisIndex second,
                   ConditionSet conditions) {
    return PermutationGate{Transposition{range, first, second}, std::move(conditions)};
}

Gate swap_qubits(Qubit a, Qubit b, ConditionSet conditions) {
    return PermutationGate{WireSwap{a, b}, std::move(conditions)};
}

Gate twos_complement(QubitRange range, ConditionSet conditions) {
    return TwosComplementGate{range, std::move(conditions)};
}

namespace {

BasisIndex range_mask(const QubitRange &r) {
    return ((BasisIndex{1} << r.width()) - 1) << r.lo;
}

BasisIndex extract(const QubitRange &r, BasisIndex index) {
    return (index & range_mask(r)) >> r.lo;
}

BasisIndex insert(const QubitRange &r, BasisIndex index, BasisIndex value) {
    return (index & ~range_mask(r)) | (value << r.lo);
}

} // namespace

BasisIndex permute_basis_index(const PermutationSpec &spec, BasisIndex index) {
    return std::visit(
        Overloaded{
            [&](const BitReversal &p) {
                const unsigned w = p.range.width();
                BasisIndex v = extract(p.range, index);
                BasisIndex r = 0;
                for (unsigned i = 0; i < w; ++i) {
                    r |= ((v >> i) & 1U) << (w - 1 - i);
                }
                return insert(p.range, index, r);
            },
            [&](const RotateWires &p) {
                const unsigned w = p.range.width();
                const BasisIndex v = extract(p.range, index);
                const BasisIndex top = BasisIndex{1} << (w - 1);
                BasisIndex r = 0;
                if (p.direction == WireRotation::Left) {
                    r = ((v << 1) & ((top << 1) - 1)) | (v >> (w - 1));
                } else {
                    r = (v >> 1) | ((v & 1U) ? top : 0);
                }
                return insert(p.range, index, r);
            },
            [&](const Transposition &p) {
                const BasisIndex v = extract(p.range, index);
                if (v == p.first) {
                    return insert(p.range, index, p.second);
                }
                if (v == p.second) {
                    return insert(p.range, index, p.first);
                }
                return index;
            },
            [&](const WireSwap &p) {
                const bool a = qubit_value(index, p.first);
                const bool b = qubit_value(index, p.second);
                if (a == b) {
                    return index;
                }
                return index ^ (BasisIndex{1} << p.first) ^ (BasisIndex{1} << p.second);
            },
        },
        spec);
}

BasisIndex twos_complement_index(const QubitRange &range, BasisIndex index) {
    const BasisIndex modulus_mask = (BasisIndex{1} << range.width()) - 1;
    const BasisIndex v = extract(range, index);
    return insert(range, index, (~v + 1) & modulus_mask);
}

bool is_elementary(const Gate &gate) {
    const auto *g = gate.get_if<SingleQubitGate>();
    return g != nullptr && g->conditions.zeros().empty() && g->conditions.ones().size() <= 1;
}

namespace {

std::string format_conditions(const ConditionSet &c) {
    std::ostringstream out;
    for (Qubit q : c.ones()) {
        out << " +" << q;
    }
    for (Qubit q : c.zeros()) {
        out << " -" << q;
    }
    return out.str();
}

std::string format_range(const QubitRange &r) {
    return std::to_string(r.lo) + ".." + std::to_string(r.hi);
}

} // namespace

std::string describe(const Gate &gate) {
    std::ostringstream out;
    std::visit(Overloaded{
                   [&](const SingleQubitGate &g) {
                       static constexpr const char *names[] = {"U", "X", "Z", "H", "PHASE", "ROT"};
                       out << names[static_cast<int>(g.name)] << " " << g.target;
                   },
                   [&](const TwosComplementGate &g) { out << "TCOMP " << format_range(g.range); },
                   [&](const PermutationGate &g) {
                       std::visit(Overloaded{
                                      [&](const BitReversal &p) {
                                          out << "BITREV " << format_range(p.range);
                                      },
                                      [&](const RotateWires &p) {
                                          out << "ROTWIRES "
                                              << (p.direction == WireRotation::Left ? "left"
                                                                                    : "right")
                                              << " " << format_range(p.range);
                                      },
                                      [&](const Transposition &p) {
                                          out << "TRANSP " << p.first << " " << p.second << " "
                                              << format_range(p.range);
                                      },
                                      [&](const WireSwap &p) {
                                          out << "SWAPQ " << p.first << " " << p.second;
                                      },
                                  },
                                  g.spec);
                   },
               },
               gate.kind());
    out << format_conditions(gate.conditions());
    return out.str();
}

} // namespace qtrans
