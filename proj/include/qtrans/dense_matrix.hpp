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
#include <span>
#include <utility>
#include <vector>

#include "qtrans/unitary2.hpp"

namespace qtrans {

/// Square complex matrix, row-major.
class DenseMatrix {
  public:
    explicit DenseMatrix(std::size_t dim);

    static DenseMatrix identity(std::size_t dim);
    static DenseMatrix from_unitary(const Unitary2 &u);

    std::size_t dim() const { return dim_; }

    Complex &operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
    const Complex &operator()(std::size_t row, std::size_t col) const {
        return data_[row * dim_ + col];
    }

    std::span<Complex> row(std::size_t r) { return {data_.data() + r * dim_, dim_}; }
    std::span<const Complex> row(std::size_t r) const { return {data_.data() + r * dim_, dim_}; }

    const std::vector<Complex> &data() const { return data_; }

    DenseMatrix adjoint() const;
    DenseMatrix transpose() const;

    /// max |(M^dagger M - I)_{ij}|
    double unitarity_error() const;
    bool is_real() const;

    friend DenseMatrix operator*(const DenseMatrix &lhs, const DenseMatrix &rhs);

  private:
    std::size_t dim_;
    std::vector<Complex> data_;
};

DenseMatrix kron(const DenseMatrix &a, const DenseMatrix &b);

/// Largest entry-wise deviation and where it occurs.
struct EntryDeviation {
    std::size_t row = 0;
    std::size_t col = 0;
    Complex expected;
    Complex actual;
    double error = 0.0;
};

/// Throws InvalidArgument on a dimension mismatch.
EntryDeviation worst_entry(const DenseMatrix &expected, const DenseMatrix &actual);

double max_abs_diff(const DenseMatrix &a, const DenseMatrix &b);

} // namespace qtrans
