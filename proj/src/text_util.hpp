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

// Tokenizing and number formatting shared by the text formats.

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace qtrans::text {

/// Input line with comments stripped, split on whitespace.
struct Line {
    std::size_t number;
    std::vector<std::string_view> tokens;
};

/// Non-empty lines of `text`; `#` starts a comment.
std::vector<Line> tokenize(std::string_view text);

/// %.17g
std::string format_double(double value);

double parse_double(std::string_view token, std::size_t line);
unsigned long long parse_uint(std::string_view token, std::size_t line);

std::string read_file(const std::filesystem::path &path);
void write_file(const std::filesystem::path &path, const std::string &contents);

} // namespace qtrans::text
