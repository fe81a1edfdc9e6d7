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

#include <string>
#include <vector>

#include "qtrans/gate.hpp"

namespace qtrans {

/**
 * Ordered gate sequence over `data_qubits` data qubits followed by
 * `ancilla_qubits` ancillas. Data qubits occupy indices 0..n-1 and ancillas
 * n..n+a-1, so a data basis state keeps its index when ancillas are |0>.
 *
 * Gates act left to right in time; the circuit matrix is the product of gate
 * matrices right to left.
 */
class Circuit {
  public:
    explicit Circuit(unsigned data_qubits, unsigned ancilla_qubits = 0, std::string label = {});

    unsigned data_qubits() const { return data_qubits_; }
    unsigned ancilla_qubits() const { return ancilla_qubits_; }
    unsigned total_qubits() const { return data_qubits_ + ancilla_qubits_; }

    const std::vector<Gate> &gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }
    bool empty() const { return gates_.empty(); }

    const std::string &label() const { return label_; }
    void set_label(std::string label) { label_ = std::move(label); }

    /// Throws InvalidArgument if the gate references a qubit outside the circuit.
    Circuit &append(Gate gate);

    /// Appends every gate of `other`, each extended by `extra` conditions.
    Circuit &append(const Circuit &other, const ConditionSet &extra = {});

    /// True iff every gate is single-qubit with no zero-conditions and at most one one-condition.
    bool elementary_only() const;

    bool operator==(const Circuit &other) const;

  private:
    unsigned data_qubits_;
    unsigned ancilla_qubits_;
    std::vector<Gate> gates_;
    std::string label_;
};

/// Value-semantic append.
Circuit append_gate(Circuit circuit, Gate gate);

} // namespace qtrans
