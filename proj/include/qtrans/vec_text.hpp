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

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qtrans/unitary2.hpp"

namespace qtrans {

// vec-text v1: header line, `dim <2^m>`, then one `re im` pair per line.
std::string to_vec_text(std::span<const Complex> amplitudes);
std::vector<Complex> parse_vec_text(std::string_view text);

std::vector<Complex> read_vec_text(const std::filesystem::path &path);
void write_vec_text(const std::filesystem::path &path, std::span<const Complex> amplitudes);

} // namespace qtrans
