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

#include "qtrans/circuit.hpp"

#include <algorithm>

#include "qtrans/error.hpp"

namespace qtrans {

Circuit::Circuit(unsigned data_qubits, unsigned ancilla_qubits, std::string label)
    : data_qubits_(data_qubits), ancilla_qubits_(ancilla_qubits), label_(std::move(label)) {
    if (data_qubits == 0) {
        throw InvalidArgument("a circuit needs at least one data qubit");
    }
    if (data_qubits + ancilla_qubits > kMaxQubits) {
        throw InvalidArgument("circuit exceeds " + std::to_string(kMaxQubits) + " qubits");
    }
}

Circuit &Circuit::append(Gate gate) {
    if (gate.max_qubit() >= total_qubits()) {
        throw InvalidArgument("gate '" + describe(gate) + "' references qubit " +
                              std::to_string(gate.max_qubit()) + " of a " +
                              std::to_string(total_qubits()) + "-qubit circuit");
    }
    gates_.push_back(std::move(gate));
    return *this;
}

Circuit &Circuit::append(const Circuit &other, const ConditionSet &extra) {
    for (const Gate &g : other.gates()) {
        append(extra.empty() ? g : g.with_extra_conditions(extra));
    }
    return *this;
}

bool Circuit::elementary_only() const {
    return std::all_of(gates_.begin(), gates_.end(), [](const Gate &g) { return is_elementary(g); });
}

bool Circuit::operator==(const Circuit &other) const {
    if (data_qubits_ != other.data_qubits_ || ancilla_qubits_ != other.ancilla_qubits_ ||
        gates_.size() != other.gates_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < gates_.size(); ++i) {
        if (describe(gates_[i]) != describe(other.gates_[i])) {
            return false;
        }
        const auto *a = gates_[i].get_if<SingleQubitGate>();
        const auto *b = other.gates_[i].get_if<SingleQubitGate>();
        if (a != nullptr && (b == nullptr || !(a->unitary == b->unitary))) {
            return false;
        }
    }
    return true;
}

Circuit append_gate(Circuit circuit, Gate gate) {
    circuit.append(std::move(gate));
    return circuit;
}

} // namespace qtrans
