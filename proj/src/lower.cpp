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

#include "qtrans/lower.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <optional>

#include "qtrans/error.hpp"

namespace qtrans {

namespace {

Unitary2 rz(double theta) {
    return Unitary2({std::polar(1.0, -theta / 2), 0.0, 0.0, std::polar(1.0, theta / 2)});
}

Unitary2 ry(double theta) {
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    return Unitary2({c, -s, s, c});
}

/// U = e^{i alpha} Rz(beta) Ry(gamma) Rz(delta)
struct ZyzAngles {
    double alpha;
    double beta;
    double gamma;
    double delta;
};

ZyzAngles zyz_decompose(const Unitary2 &u) {
    const Complex det = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
    const double alpha = std::arg(det) / 2;
    const Complex phase = std::polar(1.0, -alpha);
    const Complex a = phase * u(0, 0);
    const Complex b = phase * u(1, 0);
    const double gamma = 2 * std::atan2(std::abs(b), std::abs(a));
    constexpr double tiny = 1e-14;
    const double sum = std::abs(a) > tiny ? -2 * std::arg(a) : 0.0;  // beta + delta
    const double diff = std::abs(b) > tiny ? 2 * std::arg(b) : 0.0;  // beta - delta
    return {alpha, (sum + diff) / 2, gamma, (sum - diff) / 2};
}

class Emitter {
  public:
    Emitter(LoweringMode mode, Qubit first_ancilla) : mode_(mode), first_ancilla_(first_ancilla) {}

    void lower(const Gate &gate, unsigned held) {
        if (const auto *g = gate.get_if<SingleQubitGate>()) {
            lower_single(*g, held);
        } else if (const auto *p = gate.get_if<PermutationGate>()) {
            lower_perm(*p, held);
        } else if (const auto *t = gate.get_if<TwosComplementGate>()) {
            lower_tcomp(*t, held);
        }
    }

    void lower_single(const SingleQubitGate &g, unsigned held) {
        const auto &zeros = g.conditions.zeros();
        for (Qubit q : zeros) {
            emit(x_gate(q));
        }
        // Zero-conditions lead the ladder so that gates sharing a guard share its prefix.
        std::vector<Qubit> controls = zeros;
        controls.insert(controls.end(), g.conditions.ones().begin(), g.conditions.ones().end());
        lower_controlled(g, controls, held);
        for (Qubit q : zeros) {
            emit(x_gate(q));
        }
    }

    void lower_controlled(const SingleQubitGate &g, const std::vector<Qubit> &controls,
                          unsigned held) {
        const std::size_t k = controls.size();
        const bool is_x = g.unitary.is_pauli_x();
        const bool strict = mode_ == LoweringMode::StrictElementary;
        SingleQubitGate bare = g;
        bare.conditions = ConditionSet({}, controls);

        if (k == 0) {
            emit(bare);
            return;
        }
        if (k == 1) {
            if (is_x || !strict) {
                emit(bare);
            } else {
                controlled_unitary(controls[0], g.target, g.unitary);
            }
            return;
        }
        if (k == 2 && is_x) {
            if (strict) {
                toffoli_elementary(controls[0], controls[1], g.target);
            } else {
                emit(bare);
            }
            return;
        }

        // AND-ladder: workbit j holds c_0 AND ... AND c_{j+1}.
        const std::size_t ladder = is_x ? k - 2 : k - 1;
        const unsigned in_use = held + static_cast<unsigned>(ladder);
        std::vector<Gate> compute;
        Qubit acc = controls[0];
        for (std::size_t j = 0; j < ladder; ++j) {
            Qubit next = ancilla(held + static_cast<unsigned>(j));
            compute.push_back(toffoli(acc, controls[j + 1], next));
            acc = next;
        }
        for (const Gate &t : compute) {
            lower(t, in_use);
        }
        if (is_x) {
            lower_controlled(g, {acc, controls[k - 1]}, in_use);
        } else {
            lower_controlled(g, {acc}, in_use);
        }
        for (auto it = compute.rbegin(); it != compute.rend(); ++it) {
            lower(*it, in_use);
        }
    }

    void lower_perm(const PermutationGate &p, unsigned held) {
        const ConditionSet &c = p.conditions;
        auto swap = [&](Qubit a, Qubit b) {
            lower(cnot(a, b).with_extra_conditions(c), held);
            lower(cnot(b, a).with_extra_conditions(c), held);
            lower(cnot(a, b).with_extra_conditions(c), held);
        };
        if (const auto *s = std::get_if<WireSwap>(&p.spec)) {
            swap(s->first, s->second);
        } else if (const auto *r = std::get_if<BitReversal>(&p.spec)) {
            const unsigned w = r->range.width();
            for (unsigned i = 0; i < w / 2; ++i) {
                swap(r->range.lo + i, r->range.hi - i);
            }
        } else if (const auto *r = std::get_if<RotateWires>(&p.spec)) {
            if (r->direction == WireRotation::Right) {
                for (Qubit q = r->range.lo; q < r->range.hi; ++q) {
                    swap(q, q + 1);
                }
            } else {
                for (Qubit q = r->range.hi; q > r->range.lo; --q) {
                    swap(q - 1, q);
                }
            }
        } else if (const auto *t = std::get_if<Transposition>(&p.spec)) {
            transposition_gates(*t, c, held);
        }
    }

    void lower_tcomp(const TwosComplementGate &t, unsigned held) {
        const auto &zeros = t.conditions.zeros();
        for (Qubit q : zeros) {
            emit(x_gate(q));
        }
        std::vector<Qubit> controls = zeros;
        controls.insert(controls.end(), t.conditions.ones().begin(), t.conditions.ones().end());

        unsigned in_use = held;
        // enable = AND of all controls, absent when unconditioned.
        std::optional<Qubit> enable;
        std::vector<Gate> enable_ladder;
        if (controls.size() == 1) {
            enable = controls[0];
        } else if (controls.size() >= 2) {
            Qubit acc = controls[0];
            for (std::size_t j = 1; j < controls.size(); ++j) {
                Qubit next = ancilla(in_use++);
                enable_ladder.push_back(toffoli(acc, controls[j], next));
                acc = next;
            }
            enable = acc;
        }
        for (const Gate &g : enable_ladder) {
            lower(g, in_use);
        }

        auto flip = [&](Qubit q) { lower(enable ? cnot(*enable, q) : x_gate(q), in_use); };

        const unsigned m = t.range.width();
        auto reg = [&](unsigned i) { return t.range.lo + i; };

        for (unsigned i = 0; i < m; ++i) {
            flip(reg(i));
        }

        // carry[i] = enable AND r_0 AND ... AND r_{i-1}; carry[1] is r_0 itself when unconditioned.
        std::vector<Qubit> carry(m);
        std::vector<bool> carry_is_workbit(m, false);
        for (unsigned i = 1; i < m; ++i) {
            if (i == 1 && !enable) {
                carry[1] = reg(0);
                continue;
            }
            const Qubit prev = i == 1 ? *enable : carry[i - 1];
            carry[i] = ancilla(in_use++);
            carry_is_workbit[i] = true;
            lower(toffoli(prev, reg(i - 1), carry[i]), in_use);
        }
        for (unsigned i = m; i-- > 1;) {
            lower(cnot(carry[i], reg(i)), in_use);
            if (carry_is_workbit[i]) {
                const Qubit prev = i == 1 ? *enable : carry[i - 1];
                lower(toffoli(prev, reg(i - 1), carry[i]), in_use);
            }
        }
        flip(reg(0));

        for (auto it = enable_ladder.rbegin(); it != enable_ladder.rend(); ++it) {
            lower(*it, in_use);
        }
        for (Qubit q : zeros) {
            emit(x_gate(q));
        }
    }

    std::vector<Gate> take() { return std::move(out_); }
    unsigned peak() const { return peak_; }

  private:
    Qubit ancilla(unsigned slot) {
        peak_ = std::max(peak_, slot + 1);
        if (first_ancilla_ + slot >= kMaxQubits) {
            throw AncillaBudgetExceeded("lowering needs more than " +
                                        std::to_string(kMaxQubits) + " qubits");
        }
        return first_ancilla_ + slot;
    }

    void emit(Gate g) { out_.push_back(std::move(g)); }

    /// C, CX, B, CX, A on the target and a phase on the control.
    void controlled_unitary(Qubit control, Qubit target, const Unitary2 &u) {
        const auto [alpha, beta, gamma, delta] = zyz_decompose(u);
        const Unitary2 a = rz(beta) * ry(gamma / 2);
        const Unitary2 b = ry(-gamma / 2) * rz(-(delta + beta) / 2);
        const Unitary2 c = rz((delta - beta) / 2);
        emit(unitary_gate(target, c));
        emit(cnot(control, target));
        emit(unitary_gate(target, b));
        emit(cnot(control, target));
        emit(unitary_gate(target, a));
        emit(phase_gate(control, alpha));
    }

    void toffoli_elementary(Qubit a, Qubit b, Qubit t) {
        constexpr double quarter = std::numbers::pi / 4;
        emit(h_gate(t));
        emit(cnot(b, t));
        emit(phase_gate(t, -quarter));
        emit(cnot(a, t));
        emit(phase_gate(t, quarter));
        emit(cnot(b, t));
        emit(phase_gate(t, -quarter));
        emit(cnot(a, t));
        emit(phase_gate(b, quarter));
        emit(phase_gate(t, quarter));
        emit(h_gate(t));
        emit(cnot(a, b));
        emit(phase_gate(a, quarter));
        emit(phase_gate(b, -quarter));
        emit(cnot(a, b));
    }

    // CNOTs from the lowest differing bit make the two states adjacent; a
    // fully conditioned X then exchanges them.
    void transposition_gates(const Transposition &t, const ConditionSet &c, unsigned held) {
        const BasisIndex diff = t.first ^ t.second;
        const unsigned pivot = static_cast<unsigned>(std::countr_zero(diff));
        const Qubit pivot_qubit = t.range.lo + pivot;
        std::vector<Gate> conjugation;
        for (unsigned q = 0; q < t.range.width(); ++q) {
            if (q != pivot && ((diff >> q) & 1U)) {
                conjugation.push_back(cnot(pivot_qubit, t.range.lo + q));
            }
        }
        const BasisIndex rest = ((t.first >> pivot) & 1U) ? t.second : t.first;
        std::vector<Qubit> zeros;
        std::vector<Qubit> ones;
        for (unsigned q = 0; q < t.range.width(); ++q) {
            if (q != pivot) {
                (((rest >> q) & 1U) ? ones : zeros).push_back(t.range.lo + q);
            }
        }
        for (const Gate &g : conjugation) {
            lower(g, held);
        }
        lower(x_gate(pivot_qubit, ConditionSet(zeros, ones).merged(c)), held);
        for (auto it = conjugation.rbegin(); it != conjugation.rend(); ++it) {
            lower(*it, held);
        }
    }

    LoweringMode mode_;
    Qubit first_ancilla_;
    unsigned peak_ = 0;
    std::vector<Gate> out_;
};

constexpr std::size_t kCancelWindow = 64;
constexpr double kCancelTolerance = 1e-13;

bool is_diagonal(const Unitary2 &u) { return u(0, 1) == 0.0 && u(1, 0) == 0.0; }

/// Acts diagonally in the computational basis of q (or not at all).
bool diagonal_on(const SingleQubitGate &g, Qubit q) {
    return q != g.target || is_diagonal(g.unitary);
}

std::vector<Qubit> support(const SingleQubitGate &g) {
    std::vector<Qubit> qs = g.conditions.zeros();
    qs.insert(qs.end(), g.conditions.ones().begin(), g.conditions.ones().end());
    qs.push_back(g.target);
    return qs;
}

// Sufficient condition: every shared qubit is acted on diagonally by both.
bool commute(const SingleQubitGate &a, const SingleQubitGate &b) {
    const auto qa = support(a);
    for (Qubit q : support(b)) {
        if (std::find(qa.begin(), qa.end(), q) != qa.end() &&
            !(diagonal_on(a, q) && diagonal_on(b, q))) {
            return false;
        }
    }
    return true;
}

bool inverse_pair(const SingleQubitGate &a, const SingleQubitGate &b) {
    return a.target == b.target && a.conditions == b.conditions &&
           max_abs_diff(a.unitary * b.unitary, Unitary2::identity()) < kCancelTolerance;
}

/// Appends `g` to `out` unless it cancels an earlier gate; returns true on cancellation.
bool push_or_cancel(std::vector<Gate> &out, Gate g) {
    const auto *incoming = g.get_if<SingleQubitGate>();
    if (incoming != nullptr) {
        const std::size_t stop = out.size() > kCancelWindow ? out.size() - kCancelWindow : 0;
        for (std::size_t j = out.size(); j-- > stop;) {
            const auto *earlier = out[j].get_if<SingleQubitGate>();
            if (earlier == nullptr) {
                break;
            }
            if (inverse_pair(*earlier, *incoming)) {
                out.erase(out.begin() + static_cast<std::ptrdiff_t>(j));
                return true;
            }
            if (!commute(*earlier, *incoming)) {
                break;
            }
        }
    }
    out.push_back(std::move(g));
    return false;
}

GateSequence finish(Emitter &e) {
    GateSequence seq;
    seq.ancillas_used = e.peak();
    seq.gates = e.take();
    return seq;
}

} // namespace

bool is_lowered(const Gate &gate, LoweringMode mode) {
    const auto *g = gate.get_if<SingleQubitGate>();
    if (g == nullptr || !g->conditions.zeros().empty()) {
        return false;
    }
    const std::size_t k = g->conditions.ones().size();
    const bool is_x = g->unitary.is_pauli_x();
    if (mode == LoweringMode::StrictElementary) {
        return k == 0 || (k == 1 && is_x);
    }
    return k <= 1 || (k == 2 && is_x);
}

bool is_lowered(const Circuit &circuit, LoweringMode mode) {
    return std::all_of(circuit.gates().begin(), circuit.gates().end(),
                       [mode](const Gate &g) { return is_lowered(g, mode); });
}

GateSequence lower_multicontrol(const SingleQubitGate &gate, Qubit first_ancilla,
                                LoweringMode mode) {
    if (gate.conditions.size() < 2) {
        throw InvalidArgument("lower_multicontrol needs at least two conditions");
    }
    Emitter e(mode, first_ancilla);
    e.lower_single(gate, 0);
    return finish(e);
}

GateSequence lower_tcomp(const TwosComplementGate &gate, Qubit first_ancilla, LoweringMode mode) {
    Emitter e(mode, first_ancilla);
    e.lower_tcomp(gate, 0);
    return finish(e);
}

GateSequence lower_perm(const PermutationGate &gate, Qubit first_ancilla, LoweringMode mode) {
    Emitter e(mode, first_ancilla);
    e.lower_perm(gate, 0);
    return finish(e);
}

MulticontrolCost multicontrol_cost(LoweringMode mode, bool pauli_x_target) {
    // Relaxed: 2(k-1) Toffolis + controlled U, or 2(k-2) + 1 Toffolis for X.
    // Strict: Toffoli = 15 gates, controlled U = 6 gates.
    const bool strict = mode == LoweringMode::StrictElementary;
    const std::size_t toffoli_cost = strict ? 15 : 1;
    if (pauli_x_target) {
        return {2 * toffoli_cost, -3 * static_cast<std::ptrdiff_t>(toffoli_cost)};
    }
    const std::size_t cu_cost = strict ? 6 : 1;
    return {2 * toffoli_cost,
            static_cast<std::ptrdiff_t>(cu_cost) - 2 * static_cast<std::ptrdiff_t>(toffoli_cost)};
}

LoweredCircuit lower_circuit(const Circuit &circuit, const LoweringOptions &options) {
    const Qubit first_ancilla = circuit.total_qubits();
    const bool strict = options.mode == LoweringMode::StrictElementary;
    LoweringReport report;
    report.input_gate_count = circuit.size();

    auto append = [&](std::vector<Gate> &stream, Gate g) {
        if (!options.cancel_inverses) {
            stream.push_back(std::move(g));
        } else {
            push_or_cancel(stream, std::move(g));
        }
    };
    auto expand_strict = [&](const Gate &g) {
        Emitter e(LoweringMode::StrictElementary, first_ancilla);
        e.lower(g, 0);
        return e.take();
    };

    // Strict lowering goes through the relaxed gate set first, so that
    // Toffoli pairs cancel before they are expanded.
    std::vector<Gate> relaxed;
    for (std::size_t i = 0; i < circuit.size(); ++i) {
        const Gate &g = circuit.gates()[i];
        Emitter e(LoweringMode::Relaxed, first_ancilla);
        e.lower(g, 0);
        auto seq = finish(e);
        if (seq.ancillas_used > options.max_ancillas) {
            throw AncillaBudgetExceeded("gate " + std::to_string(i) + " ('" + describe(g) +
                                        "') needs " + std::to_string(seq.ancillas_used) +
                                        " workbits; budget is " +
                                        std::to_string(options.max_ancillas));
        }
        std::size_t emitted = seq.gates.size();
        if (strict) {
            emitted = 0;
            for (const Gate &h : seq.gates) {
                emitted += expand_strict(h).size();
            }
        }
        report.ancillas_used = std::max(report.ancillas_used, seq.ancillas_used);
        report.expansions.push_back({i, describe(g), emitted, seq.ancillas_used});
        for (Gate &h : seq.gates) {
            append(relaxed, std::move(h));
        }
    }

    std::vector<Gate> gates;
    if (strict) {
        for (const Gate &h : relaxed) {
            for (Gate &x : expand_strict(h)) {
                append(gates, std::move(x));
            }
        }
    } else {
        gates = std::move(relaxed);
    }

    Circuit out(circuit.data_qubits(), circuit.ancilla_qubits() + report.ancillas_used,
                circuit.label());
    for (Gate &g : gates) {
        out.append(std::move(g));
    }
    report.output_elementary_count = out.size();
    std::size_t emitted = 0;
    for (const GateExpansion &x : report.expansions) {
        emitted += x.emitted;
    }
    report.cancelled_gates = emitted - out.size();
    return {std::move(out), std::move(report)};
}

} // namespace qtrans
