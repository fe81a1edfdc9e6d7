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

#include "qtrans/dense_matrix.hpp"

#include <cmath>
#include <string>

#include "qtrans/error.hpp"

namespace qtrans {

DenseMatrix::DenseMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

DenseMatrix DenseMatrix::identity(std::size_t dim) {
    DenseMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

DenseMatrix DenseMatrix::from_unitary(const Unitary2 &u) {
    DenseMatrix m(2);
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            m(r, c) = u(r, c);
        }
    }
    return m;
}

DenseMatrix DenseMatrix::adjoint() const {
    DenseMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

DenseMatrix DenseMatrix::transpose() const {
    DenseMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            out(c, r) = (*this)(r, c);
        }
    }
    return out;
}

double DenseMatrix::unitarity_error() const {
    double worst = 0.0;
    // (M^dagger M)_{ij} = sum_k conj(M_ki) M_kj
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = i; j < dim_; ++j) {
            Complex sum{};
            for (std::size_t k = 0; k < dim_; ++k) {
                sum += std::conj((*this)(k, i)) * (*this)(k, j);
            }
            worst = std::max(worst, std::abs(sum - (i == j ? 1.0 : 0.0)));
        }
    }
    return worst;
}

bool DenseMatrix::is_real() const {
    for (const auto &z : data_) {
        if (z.imag() != 0.0) {
            return false;
        }
    }
    return true;
}

DenseMatrix operator*(const DenseMatrix &lhs, const DenseMatrix &rhs) {
    if (lhs.dim() != rhs.dim()) {
        throw InvalidArgument("matrix dimension mismatch");
    }
    const std::size_t n = lhs.dim();
    DenseMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto out_row = out.row(i);
        for (std::size_t k = 0; k < n; ++k) {
            const Complex a = lhs(i, k);
            if (a == Complex{}) {
                continue;
            }
            auto rhs_row = rhs.row(k);
            for (std::size_t j = 0; j < n; ++j) {
                out_row[j] += a * rhs_row[j];
            }
        }
    }
    return out;
}

DenseMatrix kron(const DenseMatrix &a, const DenseMatrix &b) {
    const std::size_t na = a.dim();
    const std::size_t nb = b.dim();
    DenseMatrix out(na * nb);
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = 0; j < na; ++j) {
            const Complex s = a(i, j);
            if (s == Complex{}) {
                continue;
            }
            for (std::size_t k = 0; k < nb; ++k) {
                for (std::size_t l = 0; l < nb; ++l) {
                    out(i * nb + k, j * nb + l) = s * b(k, l);
                }
            }
        }
    }
    return out;
}

EntryDeviation worst_entry(const DenseMatrix &expected, const DenseMatrix &actual) {
    if (expected.dim() != actual.dim()) {
        throw InvalidArgument("matrix dimension mismatch: " + std::to_string(expected.dim()) +
                              " vs " + std::to_string(actual.dim()));
    }
    EntryDeviation worst;
    worst.error = -1.0;
    for (std::size_t r = 0; r < expected.dim(); ++r) {
        for (std::size_t c = 0; c < expected.dim(); ++c) {
            double e = std::abs(expected(r, c) - actual(r, c));
            if (e > worst.error) {
                worst = {r, c, expected(r, c), actual(r, c), e};
            }
        }
    }
    return worst;
}

double max_abs_diff(const DenseMatrix &a, const DenseMatrix &b) { return worst_entry(a, b).error; }

} // namespace qtrans
