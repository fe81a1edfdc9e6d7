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
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qtrans/circuit.hpp"
#include "qtrans/transforms.hpp"

namespace qtrans {

enum class CountMode { HighLevel, Lowered, StrictElementary };

std::string_view count_mode_name(CountMode mode);
CountMode parse_count_mode(std::string_view name);

/**
 * Cost of one gate in high-level counting. Single-qubit gates count 1 however
 * many conditions they carry; BITREV over k wires counts floor(k/2) swaps,
 * ROTWIRES counts k-1 swaps, SWAPQ/TRANSP/TCOMP count 1.
 */
std::size_t high_level_cost(const Gate &gate);

/**
 * Exact gate count. HighLevel accepts any circuit. Lowered and
 * StrictElementary require a circuit already in the matching gate set and
 * throw ModeMismatch otherwise.
 */
std::size_t count_gates(const Circuit &circuit, CountMode mode);

/// Counts of one transform size in all three modes.
struct CountRow {
    unsigned n;
    std::uint64_t size;
    std::size_t high_level;
    std::size_t lowered;
    std::size_t strict_elementary;
};

std::vector<CountRow> count_table(Transform t, unsigned n_max, unsigned n_min = 1);

/// Tab-separated: header `n N high_level lowered strict_elementary`, one row per size.
std::string format_count_table(const std::vector<CountRow> &rows);

/// Least-squares fit of log(count) = log(c) + p log(n).
struct PowerFit {
    double exponent = 0.0;
    double coefficient = 0.0;
    /// RMS of the log-space residuals.
    double residual = 0.0;
};

PowerFit fit_power_law(const std::map<unsigned, std::size_t> &counts);

/// Smallest C with count(n) <= C n^2 over the table.
double quadratic_dominance_constant(const std::map<unsigned, std::size_t> &counts);

/**
 * Per-level cost P(2^n) of the recursive block, written out gate by gate and
 * counted in high-level mode: count(n) - count(n-1).
 */
std::size_t expected_block_cost(Transform t, unsigned n);

struct CountProfile {
    Transform transform;
    CountMode mode;
    std::map<unsigned, std::size_t> table;
    PowerFit fit;
    double dominance_constant = 0.0;
    /// HighLevel only: every count(n) - count(n-1) equals expected_block_cost.
    std::optional<bool> recurrence_holds;
    std::vector<unsigned> recurrence_failures;
};

/**
 * Counts build_t(n) for n = 1..n_max in `mode`, checks the per-level
 * recurrence in high-level mode, and fits count(n) ~ c n^p over
 * n = fit_from..n_max. Lowered modes are limited to n_max <= 10.
 */
CountProfile check_recurrence(Transform t, unsigned n_max, CountMode mode,
                              unsigned fit_from = 2);

} // namespace qtrans
