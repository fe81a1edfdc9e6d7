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

#include <array>
#include <complex>
#include <string_view>

namespace qtrans {

using Complex = std::complex<double>;

/// Entry-wise tolerance for U*U^dagger = I when a Unitary2 is constructed.
inline constexpr double kUnitarityTolerance = 1e-12;

/**
 * A 2x2 unitary matrix, stored row-major.
 *
 * Construction verifies unitarity and finiteness, so every Unitary2 in the
 * program is a valid single-qubit operation.
 */
class Unitary2 {
  public:
    using Entries = std::array<Complex, 4>;

    explicit Unitary2(const Entries &entries);

    static Unitary2 identity();

    const Complex &operator()(int row, int col) const { return entries_[2 * row + col]; }
    const Entries &entries() const { return entries_; }

    Unitary2 adjoint() const;
    bool is_pauli_x() const;

    friend Unitary2 operator*(const Unitary2 &lhs, const Unitary2 &rhs);
    bool operator==(const Unitary2 &) const = default;

  private:
    struct Unchecked {};
    Unitary2(const Entries &entries, Unchecked) : entries_(entries) {}

    Entries entries_;
};

Unitary2 pauli_x();
Unitary2 pauli_z();
Unitary2 hadamard();

/// diag(1, e^{i theta}).
Unitary2 phase_shift(double theta);

/// Real rotation [[cos t, -sin t], [sin t, cos t]].
Unitary2 rotation(double theta);

/// Looks up X, Z or H by name; throws InvalidArgument otherwise.
Unitary2 make_named_gate(std::string_view name);

/// Max entry-wise |a - b|.
double max_abs_diff(const Unitary2 &a, const Unitary2 &b);

} // namespace qtrans
