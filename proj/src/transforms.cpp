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

#include "qtrans/transforms.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>
#include <vector>

#include "qtrans/error.hpp"
#include "qtrans/gate.hpp"
#include "qtrans/sparse_matrix.hpp"

namespace qtrans {

namespace {

constexpr unsigned kMaxDenseQubits = 12;
constexpr unsigned kMaxSlantQubits = 10;

void check_qubits(unsigned n, unsigned max, const char *what) {
    if (n < 1 || n > max) {
        throw InvalidArgument(std::string(what) + " supports 1 <= n <= " + std::to_string(max) +
                              ", got n = " + std::to_string(n));
    }
}

/// exp(2 pi i r / N) for r = 0..N-1, evaluated directly for every r.
std::vector<Complex> roots_of_unity(std::size_t size) {
    std::vector<Complex> roots(size);
    for (std::size_t r = 0; r < size; ++r) {
        roots[r] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) /
                                       static_cast<double>(size));
    }
    return roots;
}

DenseMatrix hadamard_matrix() { return DenseMatrix::from_unitary(hadamard()); }

/// 1_2 (x) M
DenseMatrix block_diagonal_pair(const DenseMatrix &m) {
    const std::size_t h = m.dim();
    DenseMatrix out(2 * h);
    for (std::size_t r = 0; r < h; ++r) {
        for (std::size_t c = 0; c < h; ++c) {
            out(r, c) = m(r, c);
            out(h + r, h + c) = m(r, c);
        }
    }
    return out;
}

/// H (x) 1_{N/2}
SparseMatrix top_butterfly(std::size_t size) {
    return kron(to_sparse(hadamard()), SparseMatrix::identity(size / 2));
}

/// Q_N = P^a (1_{N/2} (+) (A_N (+) 1_{N/2-2})) (H (x) 1_{N/2}) P^b
SparseMatrix slant_stage(std::size_t size) {
    const std::size_t half = size / 2;
    auto pa = SparseMatrix::permutation(size, [half](std::size_t k) {
        return k == 1 ? half : k == half ? 1 : k;
    });
    std::vector<Complex> signs(size, 1.0);
    signs[half + 1] = -1.0;
    auto pb = SparseMatrix::diagonal(signs);
    auto q_hat = direct_sum(to_sparse(slant_rotation(size)), SparseMatrix::identity(half - 2));
    auto middle = direct_sum(SparseMatrix::identity(half), q_hat);
    return pa * middle * top_butterfly(size) * pb;
}

} // namespace

Transform parse_transform(std::string_view name) {
    if (name == "dft" || name == "qft" || name == "fourier") {
        return Transform::Dft;
    }
    if (name == "walsh" || name == "wht" || name == "hadamard") {
        return Transform::Walsh;
    }
    if (name == "slant") {
        return Transform::Slant;
    }
    if (name == "hartley" || name == "dht") {
        return Transform::Hartley;
    }
    throw InvalidArgument("unknown transform '" + std::string(name) + "'");
}

std::string_view transform_name(Transform t) {
    switch (t) {
    case Transform::Dft:
        return "dft";
    case Transform::Walsh:
        return "walsh";
    case Transform::Slant:
        return "slant";
    case Transform::Hartley:
        return "hartley";
    }
    return "?";
}

unsigned max_oracle_qubits(Transform t) {
    return t == Transform::Slant ? kMaxSlantQubits : kMaxDenseQubits;
}

DenseMatrix dft_matrix(unsigned n) {
    check_qubits(n, kMaxDenseQubits, "dft_matrix");
    const std::size_t size = std::size_t{1} << n;
    const auto roots = roots_of_unity(size);
    const double scale = 1.0 / std::sqrt(static_cast<double>(size));
    DenseMatrix f(size);
    for (std::size_t j = 0; j < size; ++j) {
        for (std::size_t k = 0; k < size; ++k) {
            f(j, k) = roots[(j * k) % size] * scale;
        }
    }
    return f;
}

DenseMatrix wht_matrix(unsigned n) {
    check_qubits(n, kMaxDenseQubits, "wht_matrix");
    DenseMatrix w = hadamard_matrix();
    for (unsigned level = 2; level <= n; ++level) {
        const std::size_t size = std::size_t{1} << level;
        w = block_diagonal_pair(w) * top_butterfly(size);
    }
    return w;
}

DenseMatrix slant_matrix(unsigned n) {
    check_qubits(n, kMaxSlantQubits, "slant_matrix");
    DenseMatrix s = hadamard_matrix();
    for (unsigned level = 2; level <= n; ++level) {
        const std::size_t size = std::size_t{1} << level;
        s = slant_stage(size) * block_diagonal_pair(s);
    }
    return s;
}

DenseMatrix dht_matrix(unsigned n) {
    check_qubits(n, kMaxDenseQubits, "dht_matrix");
    const std::size_t size = std::size_t{1} << n;
    const double scale = 1.0 / std::sqrt(static_cast<double>(size));
    std::vector<double> cas(size);
    for (std::size_t r = 0; r < size; ++r) {
        const double angle =
            2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(size);
        cas[r] = (std::cos(angle) + std::sin(angle)) * scale;
    }
    DenseMatrix h(size);
    for (std::size_t k = 0; k < size; ++k) {
        for (std::size_t l = k; l < size; ++l) {
            const double v = cas[(k * l) % size];
            h(k, l) = v;
            h(l, k) = v;
        }
    }
    return h;
}

DenseMatrix bc_matrix(unsigned n) {
    if (n < 2 || n > kMaxDenseQubits) {
        throw InvalidArgument("bc_matrix needs 2 <= n <= " + std::to_string(kMaxDenseQubits));
    }
    const std::size_t size = std::size_t{1} << n;
    const std::size_t half = size / 2;
    const std::size_t quarter = size / 4;
    DenseMatrix bc(half);
    bc(0, 0) = 1.0;
    bc(quarter, quarter) = 1.0;
    for (std::size_t k = 1; k < quarter; ++k) {
        const double angle =
            2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(size);
        const double c = std::cos(angle);
        const double s = std::sin(angle);
        bc(k, k) = c;
        bc(k, half - k) = s;
        bc(half - k, k) = s;
        bc(half - k, half - k) = -c;
    }
    return bc;
}

DenseMatrix oracle_matrix(Transform t, unsigned n) {
    switch (t) {
    case Transform::Dft:
        return dft_matrix(n);
    case Transform::Walsh:
        return wht_matrix(n);
    case Transform::Slant:
        return slant_matrix(n);
    case Transform::Hartley:
        return dht_matrix(n);
    }
    throw InvalidArgument("unknown transform");
}

SlantCoeffs slant_coeffs(std::uint64_t size) {
    if (size < 2 || (size & (size - 1)) != 0 || size > (std::uint64_t{1} << kMaxQubits)) {
        throw InvalidArgument("slant_coeffs needs a power of two N >= 2, got " +
                              std::to_string(size));
    }
    static std::mutex mutex;
    static std::map<std::uint64_t, SlantCoeffs> table{{2, SlantCoeffs{1.0, std::nullopt}}};

    std::lock_guard lock(mutex);
    auto it = table.lower_bound(size);
    if (it != table.end() && it->first == size) {
        return it->second;
    }
    auto [known, coeffs] = *std::prev(table.upper_bound(size));
    for (std::uint64_t n = known * 2; n <= size; n *= 2) {
        const double b = 1.0 / std::sqrt(1.0 + 4.0 * coeffs.a * coeffs.a);
        coeffs = SlantCoeffs{2.0 * b * coeffs.a, b};
        table.emplace(n, coeffs);
    }
    return coeffs;
}

Unitary2 slant_rotation(std::uint64_t size) {
    if (size < 4) {
        throw InvalidArgument("A_N is defined for N >= 4");
    }
    const auto [a, b] = slant_coeffs(size);
    return Unitary2({a, *b, -*b, a});
}

} // namespace qtrans
