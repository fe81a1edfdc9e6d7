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

#include <cmath>
#include <thread>

#include <gtest/gtest.h>

#include "qtrans/error.hpp"
#include "qtrans/transforms.hpp"
#include "reference.hpp"

namespace qtrans {
namespace {

const double kHalf = 0.5;
const Complex kI(0.0, 1.0);

DenseMatrix from_rows(const std::vector<std::vector<Complex>> &rows, double scale) {
    DenseMatrix m(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < rows.size(); ++c) {
            m(r, c) = scale * rows[r][c];
        }
    }
    return m;
}

DenseMatrix power(const DenseMatrix &m, int k) {
    DenseMatrix acc = DenseMatrix::identity(m.dim());
    for (int i = 0; i < k; ++i) {
        acc = acc * m;
    }
    return acc;
}

const DenseMatrix kH = DenseMatrix::from_unitary(hadamard());

TEST(Transforms, SizeOneIsHadamard) {
    for (Transform t : {Transform::Dft, Transform::Walsh, Transform::Slant, Transform::Hartley}) {
        EXPECT_LT(max_abs_diff(oracle_matrix(t, 1), kH), 1e-15) << transform_name(t);
    }
}

TEST(Transforms, DftTwoQubits) {
    const DenseMatrix expected = from_rows(
        {{1, 1, 1, 1}, {1, kI, -1.0, -kI}, {1, -1.0, 1, -1.0}, {1, -kI, -1.0, kI}}, kHalf);
    EXPECT_LT(max_abs_diff(dft_matrix(2), expected), 1e-15);
}

TEST(Transforms, WhtTwoQubits) {
    const DenseMatrix expected =
        from_rows({{1, 1, 1, 1}, {1, -1.0, 1, -1.0}, {1, 1, -1.0, -1.0}, {1, -1.0, -1.0, 1}}, kHalf);
    EXPECT_LT(max_abs_diff(wht_matrix(2), expected), 1e-15);
}

TEST(Transforms, DhtTwoQubits) {
    const DenseMatrix expected =
        from_rows({{1, 1, 1, 1}, {1, 1, -1.0, -1.0}, {1, -1.0, 1, -1.0}, {1, -1.0, -1.0, 1}}, kHalf);
    EXPECT_LT(max_abs_diff(dht_matrix(2), expected), 1e-15);
}

TEST(Transforms, MatchIndependentDefinitions) {
    for (unsigned n = 1; n <= 8; ++n) {
        EXPECT_LT(max_abs_diff(dft_matrix(n), ref::dft(n)), 1e-12) << n;
        EXPECT_LT(max_abs_diff(wht_matrix(n), ref::wht(n)), 1e-12) << n;
        EXPECT_LT(max_abs_diff(dht_matrix(n), ref::dht(n)), 1e-12) << n;
        EXPECT_LT(max_abs_diff(slant_matrix(n), ref::slant(n)), 1e-12) << n;
    }
}

TEST(Transforms, WhtIsTensorPowerOfHadamard) {
    DenseMatrix power_h = kH;
    for (unsigned n = 1; n <= 8; ++n) {
        EXPECT_LT(max_abs_diff(wht_matrix(n), power_h), 1e-12) << n;
        power_h = kron(power_h, kH);
    }
}

TEST(Transforms, OraclesAreUnitary) {
    for (Transform t : {Transform::Dft, Transform::Walsh, Transform::Slant, Transform::Hartley}) {
        for (unsigned n = 1; n <= 8; ++n) {
            EXPECT_LT(oracle_matrix(t, n).unitarity_error(), 1e-10) << transform_name(t) << n;
        }
    }
}

TEST(Transforms, Involutions) {
    for (unsigned n = 1; n <= 6; ++n) {
        const DenseMatrix id = DenseMatrix::identity(std::size_t{1} << n);
        EXPECT_LT(max_abs_diff(power(dht_matrix(n), 2), id), 1e-10) << n;
        EXPECT_LT(max_abs_diff(power(wht_matrix(n), 2), id), 1e-10) << n;
        if (n <= 5) {
            EXPECT_LT(max_abs_diff(power(dft_matrix(n), 4), id), 1e-10) << n;
        }
    }
}

TEST(Transforms, DhtIsRealAndExactlySymmetric) {
    for (unsigned n = 1; n <= 7; ++n) {
        const DenseMatrix m = dht_matrix(n);
        EXPECT_TRUE(m.is_real());
        EXPECT_EQ(m.transpose().data(), m.data());
    }
}

TEST(Transforms, SlantBasisFunctions) {
    for (unsigned n = 1; n <= 6; ++n) {
        const DenseMatrix s = slant_matrix(n);
        const std::size_t size = s.dim();
        const double level = 1.0 / std::sqrt(static_cast<double>(size));
        for (std::size_t k = 0; k < size; ++k) {
            EXPECT_NEAR(s(0, k).real(), level, 1e-12);
        }
        double dot = 0;
        for (std::size_t k = 0; k < size; ++k) {
            dot += s(0, k).real() * s(1, k).real();
        }
        EXPECT_LT(std::abs(dot), 1e-12);
        if (size >= 4) {
            const double step = s(1, 1).real() - s(1, 0).real();
            EXPECT_LT(step, -1e-3) << "row 1 should decrease";
            for (std::size_t k = 1; k + 1 < size; ++k) {
                EXPECT_NEAR(s(1, k + 1).real() - s(1, k).real(), step, 1e-12) << n << " " << k;
            }
        }
    }
}

TEST(Transforms, SlantCoefficients) {
    const SlantCoeffs two = slant_coeffs(2);
    EXPECT_EQ(two.a, 1.0);
    EXPECT_FALSE(two.b.has_value());
    const SlantCoeffs four = slant_coeffs(4);
    EXPECT_NEAR(four.a, 2 / std::sqrt(5.0), 1e-15);
    EXPECT_NEAR(*four.b, 1 / std::sqrt(5.0), 1e-15);
    const SlantCoeffs eight = slant_coeffs(8);
    EXPECT_NEAR(eight.a, 4 / std::sqrt(21.0), 1e-15);
    EXPECT_NEAR(*eight.b, std::sqrt(5.0 / 21.0), 1e-15);
    for (std::uint64_t size = 4; size <= (1U << 20); size *= 2) {
        const auto [a, b] = ref::slant_ab(size);
        EXPECT_NEAR(slant_coeffs(size).a, a, 1e-15);
        EXPECT_NEAR(*slant_coeffs(size).b, b, 1e-15);
    }
    EXPECT_THROW(slant_coeffs(1), InvalidArgument);
    EXPECT_THROW(slant_coeffs(6), InvalidArgument);
    EXPECT_THROW(slant_rotation(2), InvalidArgument);
}

TEST(Transforms, SlantRotationIsOrthogonal) {
    for (std::uint64_t size = 4; size <= (1U << 10); size *= 2) {
        const Unitary2 a = slant_rotation(size);
        EXPECT_LT(max_abs_diff(a * a.adjoint(), Unitary2::identity()), 1e-15) << size;
        EXPECT_EQ(a(0, 0), a(1, 1));
        EXPECT_EQ(a(0, 1), -a(1, 0));
    }
}

TEST(Transforms, SlantCoefficientsAreThreadSafe) {
    std::vector<std::thread> workers;
    std::vector<double> results(8);
    for (std::size_t i = 0; i < results.size(); ++i) {
        workers.emplace_back([&results, i] { results[i] = slant_coeffs(std::uint64_t{1} << 40).a; });
    }
    for (auto &w : workers) {
        w.join();
    }
    for (double r : results) {
        EXPECT_EQ(r, results[0]);
    }
}

TEST(Transforms, BcActionTable) {
    for (unsigned n = 3; n <= 5; ++n) {
        EXPECT_LT(max_abs_diff(bc_matrix(n), ref::bc(n)), 1e-15) << n;
    }
    const DenseMatrix b = bc_matrix(4);
    EXPECT_EQ(b(0, 0), Complex(1.0));
    EXPECT_EQ(b(4, 4), Complex(1.0));
    EXPECT_LT(max_abs_diff(b.transpose() * b, DenseMatrix::identity(8)), 1e-12);
    EXPECT_EQ(bc_matrix(2).dim(), 2U);
    EXPECT_LT(max_abs_diff(bc_matrix(2), DenseMatrix::identity(2)), 1e-15);
    EXPECT_THROW(bc_matrix(1), InvalidArgument);
}

TEST(Transforms, RangeChecks) {
    EXPECT_THROW(dft_matrix(0), InvalidArgument);
    EXPECT_THROW(dft_matrix(13), InvalidArgument);
    EXPECT_THROW(wht_matrix(13), InvalidArgument);
    EXPECT_THROW(dht_matrix(13), InvalidArgument);
    EXPECT_THROW(slant_matrix(11), InvalidArgument);
    EXPECT_EQ(max_oracle_qubits(Transform::Slant), 10U);
    EXPECT_EQ(max_oracle_qubits(Transform::Dft), 12U);
}

TEST(Transforms, NameParsing) {
    EXPECT_EQ(parse_transform("qft"), Transform::Dft);
    EXPECT_EQ(parse_transform("dft"), Transform::Dft);
    EXPECT_EQ(parse_transform("wht"), Transform::Walsh);
    EXPECT_EQ(parse_transform("hadamard"), Transform::Walsh);
    EXPECT_EQ(parse_transform("dht"), Transform::Hartley);
    EXPECT_EQ(parse_transform("slant"), Transform::Slant);
    EXPECT_THROW(parse_transform("cosine"), InvalidArgument);
    for (Transform t : {Transform::Dft, Transform::Walsh, Transform::Slant, Transform::Hartley}) {
        EXPECT_EQ(parse_transform(transform_name(t)), t);
    }
}

} // namespace
} // namespace qtrans
