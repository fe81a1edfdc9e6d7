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

#include <filesystem>

#include <gtest/gtest.h>

#include "qtrans/error.hpp"
#include "qtrans/mat_text.hpp"
#include "qtrans/transforms.hpp"
#include "qtrans/vec_text.hpp"
#include "reference.hpp"

namespace qtrans {
namespace {

TEST(MatText, RoundTripIsExact) {
    const DenseMatrix m = dft_matrix(3);
    const std::string text = to_mat_text(m);
    EXPECT_EQ(text.rfind("mat-text v1\ndim 8\n", 0), 0U);
    const DenseMatrix back = parse_mat_text(text);
    EXPECT_EQ(back.data(), m.data());
    EXPECT_EQ(to_mat_text(back), text);
}

TEST(MatText, RejectsMalformedInput) {
    EXPECT_THROW(parse_mat_text("mat-text v2\ndim 1\n1 0\n"), ParseError);
    EXPECT_THROW(parse_mat_text("mat-text v1\ndim 3\n"), ParseError);
    EXPECT_THROW(parse_mat_text("mat-text v1\ndim 2\n1 0 0 0\n"), ParseError);
    EXPECT_THROW(parse_mat_text("mat-text v1\ndim 2\n1 0 0 0\n0 0 1\n"), ParseError);
    try {
        parse_mat_text("mat-text v1\ndim 2\n1 0 0 0\n0 0 x 0\n");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line(), 4U);
    }
}

TEST(VecText, RoundTripIsExact) {
    std::mt19937_64 rng(9);
    const auto v = ref::random_state(rng, 3);
    const std::string text = to_vec_text(v);
    EXPECT_EQ(text.rfind("vec-text v1\ndim 8\n", 0), 0U);
    EXPECT_EQ(parse_vec_text(text), v);
}

TEST(VecText, RejectsMalformedInput) {
    EXPECT_THROW(parse_vec_text("vec-text v1\ndim 3\n1 0\n0 0\n0 0\n"), ParseError);
    EXPECT_THROW(parse_vec_text("vec-text v1\ndim 2\n1 0\n"), ParseError);
    EXPECT_THROW(parse_vec_text("vec-text v1\ndim 2\n1 0\n0\n"), ParseError);
    EXPECT_THROW(parse_vec_text("dim 2\n1 0\n0 0\n"), ParseError);
}

TEST(VecText, FileRoundTrip) {
    const auto path = std::filesystem::temp_directory_path() / "qtrans_vec_text_test.vec";
    const std::vector<Complex> v = {{0.6, 0.0}, {0.0, -0.8}};
    write_vec_text(path, v);
    EXPECT_EQ(read_vec_text(path), v);
    std::filesystem::remove(path);
}

} // namespace
} // namespace qtrans
