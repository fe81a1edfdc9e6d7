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

#include "qtrans/sparse_matrix.hpp"

#include <algorithm>

#include "qtrans/error.hpp"

namespace qtrans {

SparseMatrix SparseMatrix::identity(std::size_t dim) {
    SparseMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m.add(i, i, 1.0);
    }
    return m;
}

SparseMatrix SparseMatrix::permutation(std::size_t dim,
                                       const std::function<std::size_t(std::size_t)> &image) {
    SparseMatrix m(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        m.add(image(k), k, 1.0);
    }
    return m;
}

SparseMatrix SparseMatrix::diagonal(const std::vector<Complex> &diag) {
    SparseMatrix m(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) {
        m.add(i, i, diag[i]);
    }
    return m;
}

void SparseMatrix::add(std::size_t row, std::size_t col, Complex value) {
    if (row >= dim_ || col >= dim_) {
        throw InvalidArgument("sparse matrix index out of range");
    }
    auto &r = rows_[row];
    auto it = std::find_if(r.begin(), r.end(), [&](const Entry &e) { return e.first == col; });
    if (it != r.end()) {
        it->second += value;
    } else {
        r.emplace_back(col, value);
    }
}

DenseMatrix SparseMatrix::to_dense() const {
    DenseMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (const auto &[c, v] : rows_[r]) {
            out(r, c) += v;
        }
    }
    return out;
}

SparseMatrix operator*(const SparseMatrix &lhs, const SparseMatrix &rhs) {
    if (lhs.dim() != rhs.dim()) {
        throw InvalidArgument("matrix dimension mismatch");
    }
    SparseMatrix out(lhs.dim());
    for (std::size_t i = 0; i < lhs.dim(); ++i) {
        for (const auto &[k, a] : lhs.row(i)) {
            for (const auto &[j, b] : rhs.row(k)) {
                out.add(i, j, a * b);
            }
        }
    }
    return out;
}

DenseMatrix operator*(const SparseMatrix &lhs, const DenseMatrix &rhs) {
    if (lhs.dim() != rhs.dim()) {
        throw InvalidArgument("matrix dimension mismatch");
    }
    const std::size_t n = lhs.dim();
    DenseMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto out_row = out.row(i);
        for (const auto &[k, a] : lhs.row(i)) {
            auto rhs_row = rhs.row(k);
            for (std::size_t j = 0; j < n; ++j) {
                out_row[j] += a * rhs_row[j];
            }
        }
    }
    return out;
}

DenseMatrix operator*(const DenseMatrix &lhs, const SparseMatrix &rhs) {
    if (lhs.dim() != rhs.dim()) {
        throw InvalidArgument("matrix dimension mismatch");
    }
    const std::size_t n = lhs.dim();
    DenseMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto out_row = out.row(i);
        auto lhs_row = lhs.row(i);
        for (std::size_t k = 0; k < n; ++k) {
            if (lhs_row[k] == Complex{}) {
                continue;
            }
            for (const auto &[j, b] : rhs.row(k)) {
                out_row[j] += lhs_row[k] * b;
            }
        }
    }
    return out;
}

SparseMatrix kron(const SparseMatrix &a, const SparseMatrix &b) {
    const std::size_t nb = b.dim();
    SparseMatrix out(a.dim() * nb);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (const auto &[j, s] : a.row(i)) {
            for (std::size_t k = 0; k < nb; ++k) {
                for (const auto &[l, v] : b.row(k)) {
                    out.add(i * nb + k, j * nb + l, s * v);
                }
            }
        }
    }
    return out;
}

SparseMatrix direct_sum(const SparseMatrix &a, const SparseMatrix &b) {
    const std::size_t na = a.dim();
    SparseMatrix out(na + b.dim());
    for (std::size_t i = 0; i < na; ++i) {
        for (const auto &[j, v] : a.row(i)) {
            out.add(i, j, v);
        }
    }
    for (std::size_t i = 0; i < b.dim(); ++i) {
        for (const auto &[j, v] : b.row(i)) {
            out.add(na + i, na + j, v);
        }
    }
    return out;
}

SparseMatrix to_sparse(const Unitary2 &u) {
    SparseMatrix m(2);
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            if (u(r, c) != Complex{}) {
                m.add(r, c, u(r, c));
            }
        }
    }
    return m;
}

} // namespace qtrans
