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
#include <functional>
#include <utility>
#include <vector>

#include "qtrans/dense_matrix.hpp"

namespace qtrans {

/**
 * Square matrix stored as per-row lists of (column, value).
 *
 * The structured factors of the fast transforms (permutations, twiddle
 * diagonals, butterflies) have O(1) entries per row, so products with a dense
 * matrix cost O(N^2) instead of O(N^3).
 */
class SparseMatrix {
  public:
    using Entry = std::pair<std::size_t, Complex>;

    explicit SparseMatrix(std::size_t dim) : dim_(dim), rows_(dim) {}

    static SparseMatrix identity(std::size_t dim);
    /// Column k has a single 1 in row image(k).
    static SparseMatrix permutation(std::size_t dim,
                                    const std::function<std::size_t(std::size_t)> &image);
    static SparseMatrix diagonal(const std::vector<Complex> &diag);

    std::size_t dim() const { return dim_; }
    const std::vector<Entry> &row(std::size_t r) const { return rows_[r]; }

    /// Adds `value` to entry (row, col).
    void add(std::size_t row, std::size_t col, Complex value);

    DenseMatrix to_dense() const;

    friend SparseMatrix operator*(const SparseMatrix &lhs, const SparseMatrix &rhs);
    friend DenseMatrix operator*(const SparseMatrix &lhs, const DenseMatrix &rhs);
    friend DenseMatrix operator*(const DenseMatrix &lhs, const SparseMatrix &rhs);

  private:
    std::size_t dim_;
    std::vector<std::vector<Entry>> rows_;
};

SparseMatrix kron(const SparseMatrix &a, const SparseMatrix &b);
SparseMatrix direct_sum(const SparseMatrix &a, const SparseMatrix &b);
SparseMatrix to_sparse(const Unitary2 &u);

} // namespace qtrans
