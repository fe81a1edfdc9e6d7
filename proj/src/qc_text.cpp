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

#include "qtrans/qc_text.hpp"

#include <span>
#include <sstream>

#include "qtrans/error.hpp"
#include "text_util.hpp"

namespace qtrans {

namespace {

template <class... Ts> struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts> Overloaded(Ts...) -> Overloaded<Ts...>;

void write_conditions(std::ostream &out, const ConditionSet &c) {
    for (Qubit q : c.ones()) {
        out << " +" << q;
    }
    for (Qubit q : c.zeros()) {
        out << " -" << q;
    }
}

void write_range(std::ostream &out, const QubitRange &r) { out << ' ' << r.lo << ".." << r.hi; }

void write_optional_range(std::ostream &out, const QubitRange &r, unsigned data_qubits) {
    if (!(r == QubitRange{0, data_qubits - 1})) {
        write_range(out, r);
    }
}

void write_gate(std::ostream &out, const Gate &gate, unsigned data_qubits) {
    std::visit(
        Overloaded{
            [&](const SingleQubitGate &g) {
                switch (g.name) {
                case GateName::X:
                    out << "X " << g.target;
                    write_conditions(out, g.conditions);
                    return;
                case GateName::Z:
                    out << "Z " << g.target;
                    write_conditions(out, g.conditions);
                    return;
                case GateName::H:
                    out << "H " << g.target;
                    write_conditions(out, g.conditions);
                    return;
                case GateName::Phase:
                case GateName::Rot:
                    out << (g.name == GateName::Phase ? "PHASE " : "ROT ") << g.target << ' '
                        << text::format_double(g.angle);
                    write_conditions(out, g.conditions);
                    return;
                case GateName::Custom:
                    out << "U " << g.target;
                    write_conditions(out, g.conditions);
                    for (const Complex &z : g.unitary.entries()) {
                        out << ' ' << text::format_double(z.real()) << ' '
                            << text::format_double(z.imag());
                    }
                    return;
                }
            },
            [&](const TwosComplementGate &g) {
                out << "TCOMP";
                write_range(out, g.range);
                write_conditions(out, g.conditions);
            },
            [&](const PermutationGate &g) {
                std::visit(Overloaded{
                               [&](const BitReversal &p) {
                                   out << "BITREV";
                                   write_optional_range(out, p.range, data_qubits);
                               },
                               [&](const RotateWires &p) {
                                   out << "ROTWIRES "
                                       << (p.direction == WireRotation::Left ? "left" : "right");
                                   write_optional_range(out, p.range, data_qubits);
                               },
                               [&](const Transposition &p) {
                                   out << "TRANSP " << p.first << ' ' << p.second;
                                   write_optional_range(out, p.range, data_qubits);
                               },
                               [&](const WireSwap &p) {
                                   out << "SWAPQ " << p.first << ' ' << p.second;
                               },
                           },
                           g.spec);
                write_conditions(out, g.conditions);
            },
        },
        gate.kind());
    out << '\n';
}

bool is_range_token(std::string_view t) { return t.find("..") != std::string_view::npos; }

QubitRange parse_range(std::string_view t, std::size_t line) {
    auto dots = t.find("..");
    if (dots == std::string_view::npos) {
        throw ParseError(line, "expected a range lo..hi, got '" + std::string(t) + "'");
    }
    auto lo = text::parse_uint(t.substr(0, dots), line);
    auto hi = text::parse_uint(t.substr(dots + 2), line);
    if (lo > hi || hi >= kMaxQubits) {
        throw ParseError(line, "invalid range '" + std::string(t) + "'");
    }
    return {static_cast<Qubit>(lo), static_cast<Qubit>(hi)};
}

Qubit parse_qubit(std::string_view t, std::size_t line) {
    auto q = text::parse_uint(t, line);
    if (q >= kMaxQubits) {
        throw ParseError(line, "qubit index " + std::string(t) + " out of range");
    }
    return static_cast<Qubit>(q);
}

ConditionSet parse_conditions(std::span<const std::string_view> tokens, std::size_t line) {
    std::vector<Qubit> zeros;
    std::vector<Qubit> ones;
    for (auto t : tokens) {
        if (t.size() < 2 || (t[0] != '+' && t[0] != '-')) {
            throw ParseError(line, "expected a condition +q or -q, got '" + std::string(t) + "'");
        }
        Qubit q = parse_qubit(t.substr(1), line);
        (t[0] == '+' ? ones : zeros).push_back(q);
    }
    return ConditionSet(std::move(zeros), std::move(ones));
}

void require_at_least(const text::Line &l, std::size_t n) {
    if (l.tokens.size() < n) {
        throw ParseError(l.number, "too few tokens for " + std::string(l.tokens[0]));
    }
}

Gate parse_gate(const text::Line &l, unsigned data_qubits) {
    const auto &tk = l.tokens;
    const std::string_view op = tk[0];
    const std::size_t ln = l.number;
    std::span<const std::string_view> all(tk);
    const QubitRange data_range{0, data_qubits - 1};

    if (op == "X" || op == "Z" || op == "H") {
        require_at_least(l, 2);
        Qubit t = parse_qubit(tk[1], ln);
        auto c = parse_conditions(all.subspan(2), ln);
        return op == "X" ? x_gate(t, c) : op == "Z" ? z_gate(t, c) : h_gate(t, c);
    }
    if (op == "PHASE" || op == "ROT") {
        require_at_least(l, 3);
        Qubit t = parse_qubit(tk[1], ln);
        double theta = text::parse_double(tk[2], ln);
        auto c = parse_conditions(all.subspan(3), ln);
        return op == "PHASE" ? phase_gate(t, theta, c) : rot_gate(t, theta, c);
    }
    if (op == "U") {
        require_at_least(l, 10);
        Qubit t = parse_qubit(tk[1], ln);
        auto c = parse_conditions(all.subspan(2, tk.size() - 10), ln);
        Unitary2::Entries e{};
        for (std::size_t k = 0; k < 4; ++k) {
            const std::size_t base = tk.size() - 8 + 2 * k;
            e[k] = {text::parse_double(tk[base], ln), text::parse_double(tk[base + 1], ln)};
        }
        return unitary_gate(t, Unitary2(e), c);
    }
    if (op == "BITREV") {
        std::size_t next = 1;
        QubitRange r = data_range;
        if (tk.size() > 1 && is_range_token(tk[1])) {
            r = parse_range(tk[1], ln);
            next = 2;
        }
        return bit_reversal(r, parse_conditions(all.subspan(next), ln));
    }
    if (op == "ROTWIRES") {
        require_at_least(l, 2);
        WireRotation dir;
        if (tk[1] == "left") {
            dir = WireRotation::Left;
        } else if (tk[1] == "right") {
            dir = WireRotation::Right;
        } else {
            throw ParseError(ln, "ROTWIRES direction must be left or right");
        }
        std::size_t next = 2;
        QubitRange r = data_range;
        if (tk.size() > 2 && is_range_token(tk[2])) {
            r = parse_range(tk[2], ln);
            next = 3;
        }
        return rotate_wires(r, dir, parse_conditions(all.subspan(next), ln));
    }
    if (op == "SWAPQ") {
        require_at_least(l, 3);
        return swap_qubits(parse_qubit(tk[1], ln), parse_qubit(tk[2], ln),
                           parse_conditions(all.subspan(3), ln));
    }
    if (op == "TRANSP") {
        require_at_least(l, 3);
        auto i = text::parse_uint(tk[1], ln);
        auto j = text::parse_uint(tk[2], ln);
        std::size_t next = 3;
        QubitRange r = data_range;
        if (tk.size() > 3 && is_range_token(tk[3])) {
            r = parse_range(tk[3], ln);
            next = 4;
        }
        return transposition(r, i, j, parse_conditions(all.subspan(next), ln));
    }
    if (op == "TCOMP") {
        require_at_least(l, 2);
        return twos_complement(parse_range(tk[1], ln), parse_conditions(all.subspan(2), ln));
    }
    throw ParseError(ln, "unknown gate '" + std::string(op) + "'");
}

unsigned parse_header_count(const text::Line &l, std::string_view key) {
    if (l.tokens.size() != 2 || l.tokens[0] != key) {
        throw ParseError(l.number, "expected '" + std::string(key) + " <count>'");
    }
    auto v = text::parse_uint(l.tokens[1], l.number);
    if (v > kMaxQubits) {
        throw ParseError(l.number, std::string(key) + " count too large");
    }
    return static_cast<unsigned>(v);
}

} // namespace

std::string to_qc_text(const Circuit &circuit) {
    std::ostringstream out;
    out << "qc-text v1\n";
    out << "qubits " << circuit.data_qubits() << '\n';
    out << "ancillas " << circuit.ancilla_qubits() << '\n';
    for (const Gate &g : circuit.gates()) {
        write_gate(out, g, circuit.data_qubits());
    }
    return out.str();
}

Circuit parse_qc_text(std::string_view text) {
    auto lines = text::tokenize(text);
    if (lines.empty() || lines[0].tokens.size() != 2 || lines[0].tokens[0] != "qc-text" ||
        lines[0].tokens[1] != "v1") {
        throw ParseError(lines.empty() ? 1 : lines[0].number, "missing 'qc-text v1' header");
    }
    if (lines.size() < 3) {
        throw ParseError(lines.back().number, "missing qubits/ancillas header lines");
    }
    const unsigned n = parse_header_count(lines[1], "qubits");
    const unsigned a = parse_header_count(lines[2], "ancillas");
    if (n == 0 || n + a > kMaxQubits) {
        throw ParseError(lines[1].number, "unsupported register size");
    }
    Circuit circuit(n, a);
    for (std::size_t i = 3; i < lines.size(); ++i) {
        try {
            circuit.append(parse_gate(lines[i], n));
        } catch (const ParseError &) {
            throw;
        } catch (const InvalidArgument &e) {
            throw ParseError(lines[i].number, e.what());
        }
    }
    return circuit;
}

Circuit read_qc_text(const std::filesystem::path &path) {
    return parse_qc_text(text::read_file(path));
}

void write_qc_text(const std::filesystem::path &path, const Circuit &circuit) {
    text::write_file(path, to_qc_text(circuit));
}

} // namespace qtrans
