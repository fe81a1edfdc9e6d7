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
#include <span>
#include <vector>

#include "qtrans/gate.hpp"

namespace qtrans {

/// Tolerance on | ||psi|| - 1 | for states handed to the simulator.
inline constexpr double kNormTolerance = 1e-10;

/// Dense amplitude array of 2^m entries, indexed by the qubit convention in gate.hpp.
class StateVector {
  public:
    /// |0...0> on `qubits` qubits.
    explicit StateVector(unsigned qubits);

    static StateVector basis(unsigned qubits, BasisIndex index);

    /// Length must be a power of two and the norm 1 within kNormTolerance.
    static StateVector from_amplitudes(std::vector<Complex> amplitudes);

    unsigned qubits() const { return qubits_; }
    std::size_t dim() const { return amplitudes_.size(); }

    std::span<const Complex> amplitudes() const { return amplitudes_; }
    std::span<Complex> amplitudes() { return amplitudes_; }

    const Complex &operator[](std::size_t k) const { return amplitudes_[k]; }
    Complex &operator[](std::size_t k) { return amplitudes_[k]; }

    double norm() const;

  private:
    StateVector(unsigned qubits, std::vector<Complex> amplitudes)
        : qubits_(qubits), amplitudes_(std::move(amplitudes)) {}

    unsigned qubits_;
    std::vector<Complex> amplitudes_;
};

/**
 * Applies `gate` in place. Single-qubit gates update each amplitude pair
 * (bit target = 0 / 1) whose index satisfies the conditions; macros permute
 * the amplitudes of condition-satisfying indices.
 *
 * Works on any amplitude array of length 2^m; throws InvalidArgument if the
 * gate references a qubit >= m.
 */
void apply_gate(std::span<Complex> amplitudes, const Gate &gate);
void apply_gate(StateVector &psi, const Gate &gate);

} // namespace qtrans
