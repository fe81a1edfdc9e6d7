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
#include <string>
#include <string_view>

#include "qtrans/dense_matrix.hpp"

namespace qtrans {

/**
 * mat-text v1:
 *   mat-text v1
 *   dim <N>
 *   N lines of 2N floats (re im pairs per entry), 17 significant digits.
 */
std::string to_mat_text(const DenseMatrix &m);
DenseMatrix parse_mat_text(std::string_view text);

DenseMatrix read_mat_text(const std::filesystem::path &path);
void write_mat_text(const std::filesystem::path &path, const DenseMatrix &m);

} // namespace qtrans
