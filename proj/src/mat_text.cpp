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

#include "qtrans/mat_text.hpp"

#include <sstream>

#include "qtrans/error.hpp"
#include "text_util.hpp"

namespace qtrans {

std::string to_mat_text(const DenseMatrix &m) {
    std::ostringstream out;
    out << "mat-text v1\n";
    out << "dim " << m.dim() << '\n';
    for (std::size_t r = 0; r < m.dim(); ++r) {
        for (std::size_t c = 0; c < m.dim(); ++c) {
            if (c > 0) {
                out << ' ';
            }
            out << text::format_double(m(r, c).real()) << ' '
                << text::format_double(m(r, c).imag());
        }
        out << '\n';
    }
    return out.str();
}

DenseMatrix parse_mat_text(std::string_view contents) {
    auto lines = text::tokenize(contents);
    if (lines.empty() || lines[0].tokens.size() != 2 || lines[0].tokens[0] != "mat-text" ||
        lines[0].tokens[1] != "v1") {
        throw ParseError(lines.empty() ? 1 : lines[0].number, "missing 'mat-text v1' header");
    }
    if (lines.size() < 2 || lines[1].tokens.size() != 2 || lines[1].tokens[0] != "dim") {
        throw ParseError(lines.size() < 2 ? lines[0].number + 1 : lines[1].number,
                         "expected 'dim <N>'");
    }
    const auto dim = text::parse_uint(lines[1].tokens[1], lines[1].number);
    if (dim == 0 || dim > (1ULL << 12)) {
        throw ParseError(lines[1].number, "unsupported dimension");
    }
    if (lines.size() != dim + 2) {
        throw ParseError(lines.back().number, "expected " + std::to_string(dim) + " matrix rows");
    }
    DenseMatrix m(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        const auto &l = lines[r + 2];
        if (l.tokens.size() != 2 * dim) {
            throw ParseError(l.number, "expected " + std::to_string(2 * dim) + " numbers");
        }
        for (std::size_t c = 0; c < dim; ++c) {
            m(r, c) = {text::parse_double(l.tokens[2 * c], l.number),
                       text::parse_double(l.tokens[2 * c + 1], l.number)};
        }
    }
    return m;
}

DenseMatrix read_mat_text(const std::filesystem::path &path) {
    return parse_mat_text(text::read_file(path));
}

void write_mat_text(const std::filesystem::path &path, const DenseMatrix &m) {
    text::write_file(path, to_mat_text(m));
}

} // namespace qtrans
