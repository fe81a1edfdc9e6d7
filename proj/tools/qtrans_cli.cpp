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

// qtrans command-line tool.
//
// Exit codes: 0 ok, 1 internal failure, 2 usage or malformed input,
// 3 verification mismatch.

#include <cstdint>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qtrans/analyze.hpp"
#include "qtrans/error.hpp"
#include "qtrans/lower.hpp"
#include "qtrans/mat_text.hpp"
#include "qtrans/qc_text.hpp"
#include "qtrans/simulate.hpp"
#include "qtrans/synth.hpp"
#include "qtrans/transforms.hpp"
#include "qtrans/vec_text.hpp"

namespace {

using namespace qtrans;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitMismatch = 3;

constexpr double kDefaultTolerance = 1e-10;
constexpr std::uint64_t kDefaultSeed = 20260101;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt(Complex z) { return fmt(z.real()) + " " + fmt(z.imag()); }

struct TransformArgs {
    std::string transform;
    unsigned n = 0;
};

struct LowerArgs {
    bool lower = false;
    bool strict = false;
    unsigned max_ancillas = LoweringOptions{}.max_ancillas;
    bool no_cancel = false;

    bool enabled() const { return lower || strict; }
    LoweringOptions options() const {
        return {strict ? LoweringMode::StrictElementary : LoweringMode::Relaxed, max_ancillas,
                !no_cancel};
    }
};

void add_lower_flags(CLI::App *cmd, LowerArgs &args) {
    cmd->add_flag("--lower", args.lower, "Lower macros and multiply-conditioned gates");
    cmd->add_flag("--strict-elementary", args.strict,
                  "Lower to single-qubit gates and CNOTs only (implies --lower)");
    cmd->add_option("--max-ancillas", args.max_ancillas, "Workbit budget for lowering");
    cmd->add_flag("--no-cancel", args.no_cancel, "Keep adjacent inverse pairs in the lowered output");
}

void write_or_print(const std::string &path, const std::string &text,
                    void (*writer)(const std::filesystem::path &, const std::string &)) {
    if (path.empty() || path == "-") {
        std::cout << text;
    } else {
        writer(path, text);
    }
}

void write_text_file(const std::filesystem::path &path, const std::string &text) {
    std::FILE *f = std::fopen(path.c_str(), "wb");
    if (f == nullptr) {
        throw Error("cannot write '" + path.string() + "'");
    }
    const bool ok = std::fwrite(text.data(), 1, text.size(), f) == text.size();
    if (std::fclose(f) != 0 || !ok) {
        throw Error("write to '" + path.string() + "' failed");
    }
}

std::string count_or_na(const Circuit &c, LoweringMode mode, unsigned max_ancillas) {
    try {
        return std::to_string(lower_circuit(c, {mode, max_ancillas}).circuit.size());
    } catch (const AncillaBudgetExceeded &) {
        return "n/a";
    }
}

int cmd_synth(const TransformArgs &t, const LowerArgs &l, bool per_level, const std::string &out) {
    const Transform transform = parse_transform(t.transform);
    Circuit c = transform == Transform::Dft ? build_qft(t.n, {per_level}) : build_transform(transform, t.n);
    const std::string high = std::to_string(count_gates(c, CountMode::HighLevel));
    const std::string relaxed = count_or_na(c, LoweringMode::Relaxed, l.max_ancillas);
    const std::string strict = count_or_na(c, LoweringMode::StrictElementary, l.max_ancillas);
    if (l.enabled()) {
        c = lower_circuit(c, l.options()).circuit;
    }
    write_or_print(out, to_qc_text(c), write_text_file);
    std::cerr << "gates high_level=" << high << " lowered=" << relaxed
              << " strict_elementary=" << strict << " emitted=" << c.size()
              << " ancillas=" << c.ancilla_qubits() << '\n';
    return kExitOk;
}

int cmd_verify(const TransformArgs &t, const LowerArgs &l, const std::string &circuit_path,
               double tol) {
    const Transform transform = parse_transform(t.transform);
    if (t.n > max_oracle_qubits(transform)) {
        throw InvalidArgument("--n above the oracle limit of " +
                              std::to_string(max_oracle_qubits(transform)));
    }
    Circuit c = circuit_path.empty() ? build_transform(transform, t.n) : read_qc_text(circuit_path);
    if (l.enabled()) {
        c = lower_circuit(c, l.options()).circuit;
    }
    if (c.data_qubits() != t.n) {
        std::cout << "MISMATCH circuit has " << c.data_qubits() << " data qubits, expected "
                  << t.n << '\n';
        return kExitMismatch;
    }
    std::optional<ExtractedMatrix> extracted;
    try {
        extracted = extract_matrix(c);
    } catch (const AncillaLeak &leak) {
        std::cout << "MISMATCH ancilla leak, residual " << fmt(leak.residual()) << '\n';
        return kExitMismatch;
    }
    const DenseMatrix oracle = oracle_matrix(transform, t.n);
    const EntryDeviation worst = worst_entry(oracle, extracted->matrix);
    std::cout << "transform " << transform_name(transform) << " n " << t.n << " gates "
              << c.size() << " ancillas " << c.ancilla_qubits() << '\n';
    std::cout << "max_error " << fmt(worst.error) << '\n';
    std::cout << "ancilla_residual " << fmt(extracted->ancilla_residual) << '\n';
    if (worst.error < tol) {
        std::cout << "OK\n";
        return kExitOk;
    }
    std::cout << "MISMATCH worst entry (" << worst.row << ", " << worst.col << ") expected "
              << fmt(worst.expected) << " actual " << fmt(worst.actual) << '\n';
    return kExitMismatch;
}

int cmd_matrix(const TransformArgs &t, const std::string &circuit_path, const std::string &out) {
    DenseMatrix m(1);
    if (!circuit_path.empty()) {
        m = extract_matrix(read_qc_text(circuit_path)).matrix;
    } else if (!t.transform.empty() && t.n > 0) {
        m = oracle_matrix(parse_transform(t.transform), t.n);
    } else {
        throw InvalidArgument("matrix needs --circuit or both --transform and --n");
    }
    write_or_print(out, to_mat_text(m), write_text_file);
    return kExitOk;
}

int cmd_sim(const std::string &circuit_path, const std::string &input,
            std::optional<BasisIndex> basis, std::optional<std::size_t> shots,
            std::uint64_t seed, const std::string &out) {
    const Circuit c = read_qc_text(circuit_path);
    StateVector psi0(1);
    if (!input.empty()) {
        psi0 = StateVector::from_amplitudes(read_vec_text(input));
    } else if (basis) {
        if (c.data_qubits() < 64 && *basis >> c.data_qubits() != 0) {
            throw InvalidArgument("--basis " + std::to_string(*basis) + " out of range for " +
                                  std::to_string(c.data_qubits()) + " data qubits");
        }
        psi0 = StateVector::basis(c.data_qubits(), *basis);
    } else {
        throw InvalidArgument("sim needs --input or --basis");
    }
    const StateVector psi = run(c, psi0);
    if (!shots || !out.empty()) {
        write_or_print(out, to_vec_text(psi.amplitudes()), write_text_file);
    }
    if (shots) {
        const auto counts = sample_counts(psi.amplitudes(), *shots, seed);
        std::cout << "# outcome\tbits\tcount\tfrequency\n";
        for (const auto &[k, n] : counts) {
            std::string bits;
            for (unsigned q = psi.qubits(); q-- > 0;) {
                bits += ((k >> q) & 1U) ? '1' : '0';
            }
            std::cout << k << '\t' << bits << '\t' << n << '\t'
                      << fmt(static_cast<double>(n) / static_cast<double>(*shots)) << '\n';
        }
    }
    return kExitOk;
}

int cmd_count(const std::string &name, unsigned n_max, unsigned fit_from) {
    const Transform transform = parse_transform(name);
    std::cout << format_count_table(count_table(transform, n_max));
    for (CountMode mode : {CountMode::HighLevel, CountMode::Lowered, CountMode::StrictElementary}) {
        const unsigned limit = mode == CountMode::HighLevel ? n_max : std::min(n_max, 10U);
        if (limit <= fit_from) {
            continue;
        }
        const CountProfile p = check_recurrence(transform, limit, mode, fit_from);
        std::cout << "# fit " << count_mode_name(mode) << " n=" << fit_from << ".." << limit
                  << " exponent " << fmt(p.fit.exponent) << " coefficient "
                  << fmt(p.fit.coefficient) << " residual " << fmt(p.fit.residual)
                  << " quadratic_constant " << fmt(p.dominance_constant);
        if (p.recurrence_holds) {
            std::cout << " recurrence " << (*p.recurrence_holds ? "holds" : "fails");
        }
        std::cout << '\n';
    }
    return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Synthesize, lower, simulate and verify recursive transform circuits"};
    app.require_subcommand(1);

    const std::string transform_help = "dft|walsh|slant|hartley (aliases qft, wht, dht)";
    const auto n_range = CLI::Range(1U, kMaxQubits);

    TransformArgs synth_t;
    LowerArgs synth_l;
    bool per_level = false;
    std::string synth_out;
    auto *synth = app.add_subcommand("synth", "Write the circuit for a transform as qc-text");
    synth->add_option("--transform", synth_t.transform, transform_help)->required();
    synth->add_option("--n", synth_t.n, "Number of qubits")->required()->check(n_range);
    add_lower_flags(synth, synth_l);
    synth->add_flag("--per-level-perm", per_level,
                    "dft: one wire rotation per level instead of a trailing bit reversal");
    synth->add_option("-o,--output", synth_out, "Output file (default stdout)");

    TransformArgs verify_t;
    LowerArgs verify_l;
    std::string verify_circuit;
    double tol = kDefaultTolerance;
    auto *verify = app.add_subcommand("verify", "Compare a circuit's matrix with the transform");
    verify->add_option("--transform", verify_t.transform, transform_help)->required();
    verify->add_option("--n", verify_t.n, "Number of qubits")->required()->check(n_range);
    add_lower_flags(verify, verify_l);
    verify->add_option("--circuit", verify_circuit, "qc-text file (default: synthesize)");
    verify->add_option("--tol", tol, "Max-entry tolerance")->check(CLI::PositiveNumber);

    TransformArgs matrix_t;
    std::string matrix_circuit;
    std::string matrix_out;
    auto *matrix = app.add_subcommand("matrix", "Dump a transform or circuit matrix as mat-text");
    matrix->add_option("--transform", matrix_t.transform, transform_help);
    matrix->add_option("--n", matrix_t.n, "Number of qubits")->check(n_range);
    matrix->add_option("--circuit", matrix_circuit, "qc-text file");
    matrix->add_option("-o,--output", matrix_out, "Output file (default stdout)");

    std::string sim_circuit;
    std::string sim_input;
    std::optional<BasisIndex> sim_basis;
    std::optional<std::size_t> sim_shots;
    std::uint64_t seed = kDefaultSeed;
    std::string sim_out;
    auto *sim = app.add_subcommand("sim", "Run a circuit on a state");
    sim->add_option("--circuit", sim_circuit, "qc-text file")->required();
    auto *input_opt = sim->add_option("--input", sim_input, "vec-text input state");
    sim->add_option("--basis", sim_basis, "Start in basis state k")->excludes(input_opt);
    sim->add_option("--shots", sim_shots, "Sample this many measurements");
    sim->add_option("--seed", seed, "Sampling seed");
    sim->add_option("-o,--output", sim_out, "Output state file");

    std::string count_transform;
    unsigned n_max = 8;
    unsigned fit_from = 2;
    auto *count = app.add_subcommand("count", "Gate-count table and power-law fit");
    count->add_option("--transform", count_transform, transform_help)->required();
    count->add_option("--n-max", n_max, "Largest n")->check(CLI::Range(1U, 20U));
    count->add_option("--fit-from", fit_from, "Smallest n used in the fit")->check(CLI::Range(1U, 20U));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*synth) {
            return cmd_synth(synth_t, synth_l, per_level, synth_out);
        }
        if (*verify) {
            return cmd_verify(verify_t, verify_l, verify_circuit, tol);
        }
        if (*matrix) {
            return cmd_matrix(matrix_t, matrix_circuit, matrix_out);
        }
        if (*sim) {
            return cmd_sim(sim_circuit, sim_input, sim_basis, sim_shots, seed, sim_out);
        }
        if (*count) {
            return cmd_count(count_transform, n_max, fit_from);
        }
    } catch (const ParseError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InvalidArgument &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ModeMismatch &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const AncillaBudgetExceeded &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitInternal;
}
