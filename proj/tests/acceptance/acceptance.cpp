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

// Acceptance checks. Prints one PASS/FAIL line per criterion; with a criterion
// number as argument only that one runs. Exit status is non-zero if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "qtrans/analyze.hpp"
#include "qtrans/error.hpp"
#include "qtrans/lower.hpp"
#include "qtrans/simulate.hpp"
#include "qtrans/synth.hpp"
#include "qtrans/transforms.hpp"
#include "reference.hpp"

namespace {

using namespace qtrans;

const std::vector<Transform> kAll = {Transform::Dft, Transform::Walsh, Transform::Slant,
                                     Transform::Hartley};

DenseMatrix reference(Transform t, unsigned n) {
    switch (t) {
    case Transform::Dft: return ref::dft(n);
    case Transform::Walsh: return ref::wht(n);
    case Transform::Slant: return ref::slant(n);
    case Transform::Hartley: return ref::dht(n);
    }
    return ref::wht(n);
}

struct Outcome {
    bool pass;
    std::string detail;
};

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Outcome oracle_equivalence() {
    const auto start = std::chrono::steady_clock::now();
    double worst = 0;
    for (Transform t : kAll) {
        for (unsigned n = 1; n <= 6; ++n) {
            worst = std::max(worst, max_abs_diff(extract_matrix(build_transform(t, n)).matrix,
                                                 reference(t, n)));
        }
    }
    const double elapsed = seconds_since(start);
    return {worst < 1e-10 && elapsed < 30,
            "max error " + sci(worst) + " (< 1e-10), " + sci(elapsed) + " s (< 30 s)"};
}

Outcome lowered_equivalence() {
    const auto start = std::chrono::steady_clock::now();
    double worst = 0;
    double residual = 0;
    for (Transform t : kAll) {
        for (unsigned n = 1; n <= 5; ++n) {
            const LoweredCircuit out =
                lower_circuit(build_transform(t, n), {LoweringMode::StrictElementary});
            if (!out.circuit.elementary_only()) {
                return {false, std::string(transform_name(t)) + " output not elementary-only"};
            }
            try {
                const ExtractedMatrix x = extract_matrix(out.circuit);
                worst = std::max(worst, max_abs_diff(x.matrix, reference(t, n)));
                residual = std::max(residual, x.ancilla_residual);
            } catch (const AncillaLeak &leak) {
                return {false, "ancilla leak " + sci(leak.residual())};
            }
        }
    }
    const double elapsed = seconds_since(start);
    return {worst < 1e-10 && residual < 1e-10 && elapsed < 120,
            "strict-elementary max error " + sci(worst) + ", ancilla residual " + sci(residual) +
                ", " + sci(elapsed) + " s (< 120 s)"};
}

Outcome walsh_count() {
    for (unsigned n = 1; n <= 12; ++n) {
        const Circuit c = build_walsh(n);
        for (CountMode m : {CountMode::HighLevel, CountMode::Lowered, CountMode::StrictElementary}) {
            if (count_gates(c, m) != n) {
                return {false, "n=" + std::to_string(n) + " counts " +
                                   std::to_string(count_gates(c, m))};
            }
        }
    }
    return {true, "count(build_walsh(n)) = n for n = 1..12 in every mode"};
}

Outcome qft_count() {
    for (unsigned n = 1; n <= 10; ++n) {
        const Circuit c = build_qft(n);
        std::size_t single = 0;
        std::size_t swap_cnots = 0;
        for (const Gate &g : c.gates()) {
            if (g.get_if<SingleQubitGate>() != nullptr) {
                ++single;
            } else if (const auto *p = g.get_if<PermutationGate>()) {
                swap_cnots += lower_perm(*p, n, LoweringMode::StrictElementary).gates.size();
            }
        }
        const std::size_t expected_single = n + n * (n - 1) / 2;
        const std::size_t expected_cnots = 3 * (n / 2);
        const std::size_t high = count_gates(c, CountMode::HighLevel);
        if (single != expected_single || swap_cnots != expected_cnots ||
            high != expected_single + n / 2) {
            return {false, "n=" + std::to_string(n) + ": " + std::to_string(single) + " H/phase, " +
                               std::to_string(swap_cnots) + " bit-reversal CNOTs"};
        }
    }
    return {true, "n + n(n-1)/2 H/phase gates and 3*floor(n/2) bit-reversal CNOTs, n = 1..10"};
}

Outcome count_bounds() {
    const auto start = std::chrono::steady_clock::now();
    bool pass = true;
    std::string detail;
    for (Transform t : {Transform::Slant, Transform::Hartley}) {
        const CountProfile p = check_recurrence(t, 8, CountMode::Lowered, 2);
        bool dominated = true;
        for (const auto &[n, count] : p.table) {
            if (n >= 2 && static_cast<double>(count) > p.dominance_constant * n * n + 1e-9) {
                dominated = false;
            }
        }
        const bool ok = dominated && p.fit.exponent <= 2.15;
        pass = pass && ok;
        detail += std::string(transform_name(t)) + ": exponent " + sci(p.fit.exponent) +
                  " (<= 2.15), C " + sci(p.dominance_constant) + (ok ? "" : " [over]") +
                  ", strict exponent " +
                  sci(check_recurrence(t, 8, CountMode::StrictElementary, 2).fit.exponent) + "; ";
    }
    const double elapsed = seconds_since(start);
    pass = pass && elapsed < 60;
    return {pass, detail + sci(elapsed) + " s (< 60 s)"};
}

Outcome bc_action_table() {
    double worst = 0;
    for (unsigned n = 3; n <= 5; ++n) {
        const Circuit bc = build_bc(n);
        const DenseMatrix expected = ref::bc(n);
        for (BasisIndex k = 0; k < expected.dim(); ++k) {
            const StateVector out = run(bc, StateVector::basis(bc.data_qubits(), k));
            for (std::size_t r = 0; r < expected.dim(); ++r) {
                worst = std::max(worst, std::abs(out[r] - expected(r, k)));
            }
        }
    }
    return {worst < 1e-12, "n = 3..5, every basis state, amplitude error " + sci(worst) + " (< 1e-12)"};
}

Outcome slant_coefficients() {
    const SlantCoeffs four = slant_coeffs(4);
    const SlantCoeffs eight = slant_coeffs(8);
    const double err = std::max({std::abs(four.a - 2 / std::sqrt(5.0)),
                                 std::abs(*four.b - 1 / std::sqrt(5.0)),
                                 std::abs(eight.a - 4 / std::sqrt(21.0)),
                                 std::abs(*eight.b - std::sqrt(5.0 / 21.0))});
    double unitarity = 0;
    for (std::uint64_t size = 4; size <= 1024; size *= 2) {
        unitarity = std::max(unitarity, DenseMatrix::from_unitary(slant_rotation(size)).unitarity_error());
    }
    return {err <= 1e-15 && unitarity < 1e-15,
            "coefficient error " + sci(err) + " (<= 1e-15), A_N unitarity " + sci(unitarity) +
                " (< 1e-15) up to N = 1024"};
}

DenseMatrix power(const DenseMatrix &m, int k) {
    DenseMatrix acc = DenseMatrix::identity(m.dim());
    for (int i = 0; i < k; ++i) {
        acc = acc * m;
    }
    return acc;
}

Outcome involutions() {
    double h2 = 0, f4 = 0, w2 = 0;
    for (unsigned n = 1; n <= 6; ++n) {
        const DenseMatrix id = DenseMatrix::identity(std::size_t{1} << n);
        h2 = std::max(h2, max_abs_diff(power(dht_matrix(n), 2), id));
        w2 = std::max(w2, max_abs_diff(power(wht_matrix(n), 2), id));
        if (n <= 5) {
            f4 = std::max(f4, max_abs_diff(power(dft_matrix(n), 4), id));
        }
    }
    return {h2 < 1e-10 && f4 < 1e-10 && w2 < 1e-10,
            "H^2 " + sci(h2) + ", F^4 " + sci(f4) + ", W^2 " + sci(w2) + " (< 1e-10)"};
}

Outcome measurement() {
    Circuit h(1);
    h.append(h_gate(0));
    const StateVector psi = run(h, StateVector(1));
    const auto counts = sample_counts(psi.amplitudes(), 100000, 20260101);
    const double freq = static_cast<double>(counts.count(0) ? counts.at(0) : 0) / 100000.0;
    return {std::abs(freq - 0.5) <= 0.01, "outcome-0 frequency " + sci(freq) + " (0.5 +- 0.01)"};
}

Outcome random_lowering() {
    std::mt19937_64 rng(20260);
    double worst = 0;
    int leaks = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const unsigned n = 1 + trial % 5;
        const Circuit c = ref::random_circuit(rng, {n, 10, true, 0.5});
        const DenseMatrix expected = ref::circuit_matrix(c);
        for (LoweringMode m : {LoweringMode::Relaxed, LoweringMode::StrictElementary}) {
            try {
                const ExtractedMatrix x = extract_matrix(lower_circuit(c, {m}).circuit);
                worst = std::max(worst, max_abs_diff(x.matrix, expected));
            } catch (const AncillaLeak &) {
                ++leaks;
            }
        }
    }
    return {worst < 1e-10 && leaks == 0,
            "500 circuits x 2 modes, max error " + sci(worst) + " (< 1e-10), " +
                std::to_string(leaks) + " ancilla leaks"};
}

struct Criterion {
    const char *title;
    std::function<Outcome()> check;
};

} // namespace

int main(int argc, char **argv) {
    const std::vector<Criterion> criteria = {
        {"oracle equivalence, n = 1..6", oracle_equivalence},
        {"strict lowered equivalence, n = 1..5", lowered_equivalence},
        {"walsh count exactness", walsh_count},
        {"qft high-level count", qft_count},
        {"slant/hartley lowered count ~ n^2", count_bounds},
        {"BC action table", bc_action_table},
        {"slant coefficients", slant_coefficients},
        {"structural involutions", involutions},
        {"measurement statistics", measurement},
        {"random-circuit lowering", random_lowering},
    };
    std::size_t first = 1;
    std::size_t last = criteria.size();
    if (argc > 1) {
        first = last = std::strtoul(argv[1], nullptr, 10);
        if (first < 1 || first > criteria.size()) {
            std::fprintf(stderr, "usage: %s [criterion 1..%zu]\n", argv[0], criteria.size());
            return 2;
        }
    }
    bool all = true;
    for (std::size_t i = first; i <= last; ++i) {
        Outcome o;
        try {
            o = criteria[i - 1].check();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        all = all && o.pass;
        std::printf("%s criterion %zu (%s): %s\n", o.pass ? "PASS" : "FAIL", i,
                    criteria[i - 1].title, o.detail.c_str());
    }
    return all ? 0 : 1;
}
