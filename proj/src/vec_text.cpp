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

#include "qtrans/vec_text.hpp"

#include <sstream>

#include "qtrans/error.hpp"
#include "text_util.hpp"

namespace qtrans {

std::string to_vec_text(std::span<const Complex> amplitudes) {
    std::ostringstream out;
    out << "vec-text v1\n";
    out << "dim " << amplitudes.size() << '\n';
    for (const auto &z : amplitudes) {
        out << text::format_double(z.real()) << ' ' << text::format_double(z.imag()) << '\n';
    }
    return out.str();
}

std::vector<Complex> parse_vec_text(std::string_view contents) {
    auto lines = text::tokenize(contents);
    if (lines.empty() || lines[0].tokens.size() != 2 || lines[0].tokens[0] != "vec-text" ||
        lines[0].tokens[1] != "v1") {
        throw ParseError(lines.empty() ? 1 : lines[0].number, "missing 'vec-text v1' header");
    }
    if (lines.size() < 2 || lines[1].tokens.size() != 2 || lines[1].tokens[0] != "dim") {
        throw ParseError(lines.size() < 2 ? lines[0].number + 1 : lines[1].number,
                         "expected 'dim <2^m>'");
    }
    const auto dim = text::parse_uint(lines[1].tokens[1], lines[1].number);
    if (dim == 0 || (dim & (dim - 1)) != 0 || dim > (1ULL << 30)) {
        throw ParseError(lines[1].number, "dim must be a power of two");
    }
    if (lines.size() != dim + 2) {
        throw ParseError(lines.back().number, "expected " + std::to_string(dim) + " amplitudes");
    }
    std::vector<Complex> out(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        const auto &l = lines[k + 2];
        if (l.tokens.size() != 2) {
            throw ParseError(l.number, "expected 're im'");
        }
        out[k] = {text::parse_double(l.tokens[0], l.number),
                  text::parse_double(l.tokens[1], l.number)};
    }
    return out;
}

std::vector<Complex> read_vec_text(const std::filesystem::path &path) {
    return parse_vec_text(text::read_file(path));
}

void write_vec_text(const std::filesystem::path &path, std::span<const Complex> amplitudes) {
    text::write_file(path, to_vec_text(amplitudes));
}

} // namespace qtrans
