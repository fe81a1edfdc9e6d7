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
#include <string_view>

#include "qtrans/dense_matrix.hpp"
#include "qtrans/unitary2.hpp"

namespace qtrans {

enum class Transform { Dft, Walsh, Slant, Hartley };

/// Accepts dft|qft|fourier, walsh|wht|hadamard, slant, hartley|dht.
Transform parse_transform(std::string_view name);
std::string_view transform_name(Transform t);

/// Largest qubit count the dense oracle of `t` supports.
unsigned max_oracle_qubits(Transform t);

// Dense ground-truth matrices of size N = 2^n. All throw InvalidArgument for n
// outside 1..max_oracle_qubits.

/// (j, k) entry omega^{jk} / sqrt(N), omega = exp(2 pi i / N).
DenseMatrix dft_matrix(unsigned n);

/// W_2 = H, W_N = (1_2 (x) W_{N/2}) (H (x) 1_{N/2}).
DenseMatrix wht_matrix(unsigned n);

/**
 * S_2 = H, S_N = Q_N (1_2 (x) S_{N/2}) with
 * Q_N = P^a_N (1_{N/2} (+) (A_N (+) 1)) (H (x) 1_{N/2}) P^b_N.
 * P^a swaps basis states 1 and N/2; P^b negates basis state N/2+1.
 */
DenseMatrix slant_matrix(unsigned n);

/// (k, l) entry cas(2 pi k l / N) / sqrt(N), cas = cos + sin. Real and symmetric.
DenseMatrix dht_matrix(unsigned n);

/**
 * The N/2 x N/2 block BC_{N/2} of the Hartley recursion (n >= 2, N = 2^n):
 * index 0 is fixed and indices 1..N/2-1 carry the cross matrix CS with
 * c^k = cos(2 pi k / N) on the diagonal, s^k = sin(2 pi k / N) on the
 * anti-diagonal, 1 at N/4 and -c^k in the lower half.
 */
DenseMatrix bc_matrix(unsigned n);

DenseMatrix oracle_matrix(Transform t, unsigned n);

/// Slant coefficients a_N, b_N. b_N is absent for N = 2.
struct SlantCoeffs {
    double a;
    std::optional<double> b;
};

/**
 * a_2 = 1, b_N = 1 / sqrt(1 + 4 a_{N/2}^2), a_N = 2 b_N a_{N/2}.
 * N must be a power of two >= 2 (up to 2^kMaxQubits). Memoized; thread-safe.
 */
SlantCoeffs slant_coeffs(std::uint64_t size);

/// A_N = [[a_N, b_N], [-b_N, a_N]] for N >= 4.
Unitary2 slant_rotation(std::uint64_t size);

} // namespace qtrans
