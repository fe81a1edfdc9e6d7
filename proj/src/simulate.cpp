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

#include "qtrans/simulate.hpp"

#include <cmath>
#include <random>
#include <string>

#include "qtrans/error.hpp"

namespace qtrans {

StateVector run(const Circuit &circuit, const StateVector &psi0) {
    const unsigned total = circuit.total_qubits();
    StateVector psi(total);
    if (psi0.qubits() == total) {
        psi = psi0;
    } else if (psi0.qubits() == circuit.data_qubits()) {
        // Ancillas are the high qubits, so data amplitudes keep their indices.
        std::copy(psi0.amplitudes().begin(), psi0.amplitudes().end(), psi.amplitudes().begin());
    } else {
        throw InvalidArgument("state has " + std::to_string(psi0.qubits()) +
                              " qubits; circuit has " + std::to_string(circuit.data_qubits()) +
                              " data and " + std::to_string(circuit.ancilla_qubits()) +
                              " ancilla qubits");
    }
    for (const Gate &g : circuit.gates()) {
        apply_gate(psi, g);
    }
    return psi;
}

ExtractedMatrix extract_matrix(const Circuit &circuit, double leak_tolerance) {
    if (circuit.data_qubits() > kMaxExtractQubits) {
        throw InvalidArgument("extract_matrix supports at most " +
                              std::to_string(kMaxExtractQubits) + " data qubits");
    }
    const std::size_t dim = std::size_t{1} << circuit.data_qubits();
    ExtractedMatrix out{DenseMatrix(dim), 0.0};
    std::vector<Complex> work(std::size_t{1} << circuit.total_qubits());
    for (std::size_t col = 0; col < dim; ++col) {
        std::fill(work.begin(), work.end(), Complex{});
        work[col] = 1.0;
        for (const Gate &g : circuit.gates()) {
            apply_gate(work, g);
        }
        for (std::size_t row = 0; row < dim; ++row) {
            out.matrix(row, col) = work[row];
        }
        double leak = 0.0;
        for (std::size_t k = dim; k < work.size(); ++k) {
            leak += std::norm(work[k]);
        }
        out.ancilla_residual = std::max(out.ancilla_residual, std::sqrt(leak));
    }
    if (out.ancilla_residual > leak_tolerance) {
        throw AncillaLeak("ancilla leak: residual amplitude " +
                              std::to_string(out.ancilla_residual) +
                              " outside the ancilla-zero subspace",
                          out.ancilla_residual);
    }
    return out;
}

namespace {

std::discrete_distribution<BasisIndex> outcome_distribution(std::span<const Complex> amplitudes) {
    std::vector<double> weights(amplitudes.size());
    double total = 0.0;
    for (std::size_t k = 0; k < amplitudes.size(); ++k) {
        weights[k] = std::norm(amplitudes[k]);
        total += weights[k];
    }
    if (!(total > 0.0) || !std::isfinite(total)) {
        throw InvalidArgument("cannot sample from a zero or non-finite state");
    }
    return std::discrete_distribution<BasisIndex>(weights.begin(), weights.end());
}

} // namespace

BasisIndex measure_all(std::span<const Complex> amplitudes, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto dist = outcome_distribution(amplitudes);
    return dist(rng);
}

BasisIndex measure_all(const StateVector &psi, std::uint64_t seed) {
    return measure_all(psi.amplitudes(), seed);
}

std::map<BasisIndex, std::size_t> sample_counts(std::span<const Complex> amplitudes,
                                                std::size_t shots, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto dist = outcome_distribution(amplitudes);
    std::map<BasisIndex, std::size_t> counts;
    for (std::size_t s = 0; s < shots; ++s) {
        ++counts[dist(rng)];
    }
    return counts;
}

} // namespace qtrans
