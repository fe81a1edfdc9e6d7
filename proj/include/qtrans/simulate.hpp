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
#include <map>
#include <span>

#include "qtrans/circuit.hpp"
#include "qtrans/dense_matrix.hpp"
#include "qtrans/state_vector.hpp"

namespace qtrans {

/// Largest data register whose full matrix extract_matrix will build.
inline constexpr unsigned kMaxExtractQubits = 12;

/// Default bound on amplitude left outside the ancilla-zero subspace.
inline constexpr double kLeakTolerance = 1e-10;

/**
 * Runs `circuit` on `psi0`. `psi0` either covers every qubit of the circuit
 * or only the data qubits, in which case the ancillas start in |0>.
 * Throws InvalidArgument on any other dimension.
 */
StateVector run(const Circuit &circuit, const StateVector &psi0);

struct ExtractedMatrix {
    DenseMatrix matrix;
    /// Largest norm, over input basis states, of the output outside the ancilla-zero subspace.
    double ancilla_residual = 0.0;
};

/**
 * Column k is run(circuit, |k>) restricted to the ancilla-zero subspace.
 * Throws AncillaLeak when the residual exceeds `leak_tolerance`.
 */
ExtractedMatrix extract_matrix(const Circuit &circuit, double leak_tolerance = kLeakTolerance);

/**
 * Samples one basis index with probability |a_k|^2 / ||a||^2. The input need
 * not be normalized and is not modified.
 */
BasisIndex measure_all(std::span<const Complex> amplitudes, std::uint64_t seed);
BasisIndex measure_all(const StateVector &psi, std::uint64_t seed);

/// Histogram of `shots` independent samples drawn from one seeded generator.
std::map<BasisIndex, std::size_t> sample_counts(std::span<const Complex> amplitudes,
                                                std::size_t shots, std::uint64_t seed);

} // namespace qtrans
