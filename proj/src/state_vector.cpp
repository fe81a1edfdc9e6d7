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

#include "qtrans/state_vector.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "qtrans/error.hpp"

namespace qtrans {

namespace {

unsigned qubits_for_dim(std::size_t dim) {
    if (dim == 0 || !std::has_single_bit(dim)) {
        throw InvalidArgument("state length " + std::to_string(dim) + " is not a power of two");
    }
    return static_cast<unsigned>(std::countr_zero(dim));
}

void apply_single(std::span<Complex> amps, const SingleQubitGate &g) {
    const std::size_t stride = std::size_t{1} << g.target;
    const std::size_t low_mask = stride - 1;
    const BasisIndex mask = g.conditions.mask();
    const BasisIndex value = g.conditions.value();
    const Complex u00 = g.unitary(0, 0);
    const Complex u01 = g.unitary(0, 1);
    const Complex u10 = g.unitary(1, 0);
    const Complex u11 = g.unitary(1, 1);
    const std::size_t pairs = amps.size() / 2;
    for (std::size_t i = 0; i < pairs; ++i) {
        const std::size_t i0 = ((i & ~low_mask) << 1) | (i & low_mask);
        if ((i0 & mask) != value) {
            continue;
        }
        const std::size_t i1 = i0 | stride;
        const Complex a0 = amps[i0];
        const Complex a1 = amps[i1];
        amps[i0] = u00 * a0 + u01 * a1;
        amps[i1] = u10 * a0 + u11 * a1;
    }
}

template <class Image>
void apply_permutation(std::span<Complex> amps, const ConditionSet &conditions, Image image) {
    std::vector<Complex> out(amps.begin(), amps.end());
    for (std::size_t k = 0; k < amps.size(); ++k) {
        if (conditions.satisfied_by(k)) {
            out[image(k)] = amps[k];
        }
    }
    std::copy(out.begin(), out.end(), amps.begin());
}

} // namespace

StateVector::StateVector(unsigned qubits) : qubits_(qubits) {
    if (qubits > 30) {
        throw InvalidArgument("state vectors are limited to 30 qubits");
    }
    amplitudes_.assign(std::size_t{1} << qubits, Complex{});
    amplitudes_[0] = 1.0;
}

StateVector StateVector::basis(unsigned qubits, BasisIndex index) {
    StateVector psi(qubits);
    if (index >= psi.dim()) {
        throw InvalidArgument("basis index " + std::to_string(index) + " out of range");
    }
    psi.amplitudes_[0] = 0.0;
    psi.amplitudes_[index] = 1.0;
    return psi;
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
    const unsigned qubits = qubits_for_dim(amplitudes.size());
    StateVector psi(qubits, std::move(amplitudes));
    if (std::abs(psi.norm() - 1.0) > kNormTolerance) {
        throw InvalidArgument("state is not normalized (norm " + std::to_string(psi.norm()) + ")");
    }
    return psi;
}

double StateVector::norm() const {
    double sum = 0.0;
    for (const auto &z : amplitudes_) {
        sum += std::norm(z);
    }
    return std::sqrt(sum);
}

void apply_gate(std::span<Complex> amplitudes, const Gate &gate) {
    const unsigned qubits = qubits_for_dim(amplitudes.size());
    if (gate.max_qubit() >= qubits) {
        throw InvalidArgument("gate '" + describe(gate) + "' does not fit a " +
                              std::to_string(qubits) + "-qubit state");
    }
    if (const auto *g = gate.get_if<SingleQubitGate>()) {
        apply_single(amplitudes, *g);
    } else if (const auto *p = gate.get_if<PermutationGate>()) {
        apply_permutation(amplitudes, p->conditions,
                          [&](BasisIndex k) { return permute_basis_index(p->spec, k); });
    } else if (const auto *t = gate.get_if<TwosComplementGate>()) {
        apply_permutation(amplitudes, t->conditions,
                          [&](BasisIndex k) { return twos_complement_index(t->range, k); });
    }
}

void apply_gate(StateVector &psi, const Gate &gate) { apply_gate(psi.amplitudes(), gate); }

} // namespace qtrans
