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

#include "qtrans/analyze.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qtrans/error.hpp"
#include "qtrans/lower.hpp"
#include "qtrans/synth.hpp"

namespace qtrans {

namespace {

constexpr unsigned kMaxLoweredProfileQubits = 10;

std::size_t lowered_size(const Circuit &c, LoweringMode mode) {
    return lower_circuit(c, {mode, LoweringOptions{}.max_ancillas}).circuit.size();
}

} // namespace

std::string_view count_mode_name(CountMode mode) {
    switch (mode) {
    case CountMode::HighLevel:
        return "high_level";
    case CountMode::Lowered:
        return "lowered";
    case CountMode::StrictElementary:
        return "strict_elementary";
    }
    return "unknown";
}

CountMode parse_count_mode(std::string_view name) {
    if (name == "high_level" || name == "high-level") {
        return CountMode::HighLevel;
    }
    if (name == "lowered") {
        return CountMode::Lowered;
    }
    if (name == "strict_elementary" || name == "strict-elementary") {
        return CountMode::StrictElementary;
    }
    throw InvalidArgument("unknown count mode '" + std::string(name) + "'");
}

std::size_t high_level_cost(const Gate &gate) {
    if (const auto *p = gate.get_if<PermutationGate>()) {
        if (const auto *r = std::get_if<BitReversal>(&p->spec)) {
            return r->range.width() / 2;
        }
        if (const auto *r = std::get_if<RotateWires>(&p->spec)) {
            return r->range.width() - 1;
        }
    }
    return 1;
}

std::size_t count_gates(const Circuit &circuit, CountMode mode) {
    if (mode == CountMode::HighLevel) {
        std::size_t total = 0;
        for (const Gate &g : circuit.gates()) {
            total += high_level_cost(g);
        }
        return total;
    }
    const LoweringMode lm =
        mode == CountMode::Lowered ? LoweringMode::Relaxed : LoweringMode::StrictElementary;
    for (std::size_t i = 0; i < circuit.size(); ++i) {
        if (!is_lowered(circuit.gates()[i], lm)) {
            throw ModeMismatch("gate " + std::to_string(i) + " ('" +
                               describe(circuit.gates()[i]) + "') is not in the " +
                               std::string(count_mode_name(mode)) + " gate set; lower first");
        }
    }
    return circuit.size();
}

std::vector<CountRow> count_table(Transform t, unsigned n_max, unsigned n_min) {
    if (n_min < 1 || n_min > n_max) {
        throw InvalidArgument("count_table: need 1 <= n_min <= n_max");
    }
    std::vector<CountRow> rows;
    for (unsigned n = n_min; n <= n_max; ++n) {
        const Circuit c = build_transform(t, n);
        rows.push_back({n, std::uint64_t{1} << n, count_gates(c, CountMode::HighLevel),
                        lowered_size(c, LoweringMode::Relaxed),
                        lowered_size(c, LoweringMode::StrictElementary)});
    }
    return rows;
}

std::string format_count_table(const std::vector<CountRow> &rows) {
    std::ostringstream out;
    out << "n\tN\thigh_level\tlowered\tstrict_elementary\n";
    for (const CountRow &r : rows) {
        out << r.n << '\t' << r.size << '\t' << r.high_level << '\t' << r.lowered << '\t'
            << r.strict_elementary << '\n';
    }
    return out.str();
}

PowerFit fit_power_law(const std::map<unsigned, std::size_t> &counts) {
    std::vector<double> xs;
    std::vector<double> ys;
    for (const auto &[n, count] : counts) {
        if (n == 0 || count == 0) {
            throw InvalidArgument("fit_power_law: n and counts must be positive");
        }
        xs.push_back(std::log(static_cast<double>(n)));
        ys.push_back(std::log(static_cast<double>(count)));
    }
    if (xs.size() < 2) {
        throw InvalidArgument("fit_power_law: need at least two points");
    }
    const double k = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    const double denom = k * sxx - sx * sx;
    if (denom == 0) {
        throw InvalidArgument("fit_power_law: need at least two distinct n");
    }
    PowerFit fit;
    fit.exponent = (k * sxy - sx * sy) / denom;
    const double intercept = (sy - fit.exponent * sx) / k;
    fit.coefficient = std::exp(intercept);
    double sq = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = ys[i] - (intercept + fit.exponent * xs[i]);
        sq += r * r;
    }
    fit.residual = std::sqrt(sq / k);
    return fit;
}

double quadratic_dominance_constant(const std::map<unsigned, std::size_t> &counts) {
    double c = 0;
    for (const auto &[n, count] : counts) {
        if (n == 0) {
            throw InvalidArgument("quadratic_dominance_constant: n must be positive");
        }
        c = std::max(c, static_cast<double>(count) / (static_cast<double>(n) * n));
    }
    return c;
}

std::size_t expected_block_cost(Transform t, unsigned n) {
    if (n < 1) {
        throw InvalidArgument("expected_block_cost: n must be >= 1");
    }
    switch (t) {
    case Transform::Walsh:
        return 1;
    case Transform::Dft:
        // H, n-1 controlled phases, and the growth of the trailing bit reversal.
        return n + (n / 2 - (n - 1) / 2);
    case Transform::Slant:
        return n == 1 ? 1 : 6;
    case Transform::Hartley:
        if (n == 1) {
            return 1;
        }
        // wire rotation, BC block (two TCOMPs, two Z, n-2 rotations), H
        return (n - 1) + (n >= 3 ? n + 2 : 0) + 1;
    }
    return 0;
}

CountProfile check_recurrence(Transform t, unsigned n_max, CountMode mode, unsigned fit_from) {
    if (n_max < 1) {
        throw InvalidArgument("check_recurrence: n_max must be >= 1");
    }
    if (mode != CountMode::HighLevel && n_max > kMaxLoweredProfileQubits) {
        throw InvalidArgument("check_recurrence: n_max must be <= " +
                              std::to_string(kMaxLoweredProfileQubits) + " for lowered modes");
    }
    CountProfile profile{t, mode, {}, {}, 0.0, std::nullopt, {}};
    for (unsigned n = 1; n <= n_max; ++n) {
        const Circuit c = build_transform(t, n);
        switch (mode) {
        case CountMode::HighLevel:
            profile.table[n] = count_gates(c, mode);
            break;
        case CountMode::Lowered:
            profile.table[n] = lowered_size(c, LoweringMode::Relaxed);
            break;
        case CountMode::StrictElementary:
            profile.table[n] = lowered_size(c, LoweringMode::StrictElementary);
            break;
        }
    }
    if (mode == CountMode::HighLevel) {
        std::size_t previous = 0;
        for (const auto &[n, count] : profile.table) {
            if (count - previous != expected_block_cost(t, n)) {
                profile.recurrence_failures.push_back(n);
            }
            previous = count;
        }
        profile.recurrence_holds = profile.recurrence_failures.empty();
    }
    std::map<unsigned, std::size_t> fit_range(profile.table.lower_bound(fit_from),
                                              profile.table.end());
    if (fit_range.size() >= 2) {
        profile.fit = fit_power_law(fit_range);
    }
    if (!fit_range.empty()) {
        profile.dominance_constant = quadratic_dominance_constant(fit_range);
    }
    return profile;
}

} // namespace qtrans
