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

#include "qtrans/unitary2.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qtrans/error.hpp"

namespace qtrans {

Unitary2::Unitary2(const Entries &entries) : entries_(entries) {
    for (const auto &z : entries_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw InvalidArgument("unitary entry is not finite");
        }
    }
    // U U^dagger
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            Complex sum = (*this)(r, 0) * std::conj((*this)(c, 0)) +
                          (*this)(r, 1) * std::conj((*this)(c, 1));
            double expected = r == c ? 1.0 : 0.0;
            if (std::abs(sum - expected) > kUnitarityTolerance) {
                throw InvalidArgument("2x2 matrix is not unitary (deviation " +
                                      std::to_string(std::abs(sum - expected)) + ")");
            }
        }
    }
}

Unitary2 Unitary2::identity() { return Unitary2({1.0, 0.0, 0.0, 1.0}, Unchecked{}); }

Unitary2 Unitary2::adjoint() const {
    return Unitary2({std::conj(entries_[0]), std::conj(entries_[2]), std::conj(entries_[1]),
                     std::conj(entries_[3])},
                    Unchecked{});
}

bool Unitary2::is_pauli_x() const {
    return entries_[0] == Complex{} && entries_[1] == Complex{1.0} && entries_[2] == Complex{1.0} &&
           entries_[3] == Complex{};
}

Unitary2 operator*(const Unitary2 &lhs, const Unitary2 &rhs) {
    Unitary2::Entries out{};
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            out[2 * r + c] = lhs(r, 0) * rhs(0, c) + lhs(r, 1) * rhs(1, c);
        }
    }
    return Unitary2(out);
}

Unitary2 pauli_x() { return Unitary2({0.0, 1.0, 1.0, 0.0}); }

Unitary2 pauli_z() { return Unitary2({1.0, 0.0, 0.0, -1.0}); }

Unitary2 hadamard() {
    const double h = 1.0 / std::numbers::sqrt2;
    return Unitary2({h, h, h, -h});
}

Unitary2 phase_shift(double theta) {
    return Unitary2({1.0, 0.0, 0.0, std::polar(1.0, theta)});
}

Unitary2 rotation(double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return Unitary2({c, -s, s, c});
}

Unitary2 make_named_gate(std::string_view name) {
    if (name == "X") {
        return pauli_x();
    }
    if (name == "Z") {
        return pauli_z();
    }
    if (name == "H") {
        return hadamard();
    }
    throw InvalidArgument("unknown gate name '" + std::string(name) + "'");
}

double max_abs_diff(const Unitary2 &a, const Unitary2 &b) {
    double worst = 0.0;
    for (int k = 0; k < 4; ++k) {
        worst = std::max(worst, std::abs(a.entries()[k] - b.entries()[k]));
    }
    return worst;
}

} // namespace qtrans
