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

#include "qtrans/circuit.hpp"

namespace qtrans {

/**
 * qc-text v1 circuit format.
 *
 *   qc-text v1
 *   qubits <n>
 *   ancillas <a>
 *   <one gate per line>
 *
 * Gate lines (conditions [c] are `+q` one-conditions and `-q` zero-conditions):
 *   U <t> [c] <8 floats: row-major re/im pairs>
 *   X|Z|H <t> [c]
 *   PHASE <t> <theta> [c]      diag(1, e^{i theta})
 *   ROT <t> <theta> [c]        [[cos, -sin], [sin, cos]]
 *   BITREV [lo..hi] [c]
 *   ROTWIRES left|right [lo..hi] [c]
 *   SWAPQ <i> <j> [c]
 *   TRANSP <i> <j> [lo..hi] [c]
 *   TCOMP <lo>..<hi> [c]
 *
 * Ranges default to the data register when omitted. `#` starts a comment.
 * Floats are written with 17 significant digits.
 */
std::string to_qc_text(const Circuit &circuit);

/// Throws ParseError carrying the offending line number.
Circuit parse_qc_text(std::string_view text);

Circuit read_qc_text(const std::filesystem::path &path);
void write_qc_text(const std::filesystem::path &path, const Circuit &circuit);

} // namespace qtrans
