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

#include "qtrans/synth.hpp"

#include <numbers>
#include <string>
#include <vector>

#include "qtrans/error.hpp"

namespace qtrans {

namespace {

void require_size(unsigned n, const char *what) {
    if (n < 1 || n > kMaxQubits) {
        throw InvalidArgument(std::string(what) + ": n must be in 1.." +
                              std::to_string(kMaxQubits) + ", got " + std::to_string(n));
    }
}

std::vector<Qubit> qubit_span(Qubit lo, Qubit hi) {
    std::vector<Qubit> out;
    for (Qubit q = lo; q <= hi; ++q) {
        out.push_back(q);
    }
    return out;
}

std::string label_for(Transform t, unsigned n) {
    return std::string(transform_name(t)) + " n=" + std::to_string(n);
}

void emit_walsh(Circuit &c, unsigned n) {
    for (unsigned m = n; m-- > 0;) {
        c.append(h_gate(m));
    }
}

void emit_slant(Circuit &c, unsigned n) {
    if (n == 1) {
        c.append(h_gate(0));
        return;
    }
    emit_slant(c, n - 1);
    const Qubit top = n - 1;
    const std::vector<Qubit> middle = n > 2 ? qubit_span(1, n - 2) : std::vector<Qubit>{};
    const ConditionSet guarded(middle, {top});
    const ConditionSet swap_guard(middle, {});
    c.append(z_gate(0, guarded));
    c.append(h_gate(top));
    c.append(unitary_gate(0, slant_rotation(std::uint64_t{1} << n), guarded));
    c.append(cnot(0, top).with_extra_conditions(swap_guard));
    c.append(cnot(top, 0).with_extra_conditions(swap_guard));
    c.append(cnot(0, top).with_extra_conditions(swap_guard));
}

void emit_hartley(Circuit &c, unsigned n) {
    if (n == 1) {
        c.append(h_gate(0));
        return;
    }
    c.append(rotate_wires({0, n - 1}, WireRotation::Right));
    emit_hartley(c, n - 1);
    if (n >= 3) {
        c.append(build_bc(n), ConditionSet::one(n - 1));
    }
    c.append(h_gate(n - 1));
}

} // namespace

Circuit build_walsh(unsigned n) {
    require_size(n, "build_walsh");
    Circuit c(n, 0, label_for(Transform::Walsh, n));
    emit_walsh(c, n);
    return c;
}

Circuit build_qft(unsigned n, const QftOptions &options) {
    require_size(n, "build_qft");
    Circuit c(n, 0, label_for(Transform::Dft, n));
    for (unsigned m = n; m-- > 0;) {
        c.append(h_gate(m));
        for (unsigned j = m; j-- > 0;) {
            const double theta = 2 * std::numbers::pi * static_cast<double>(std::uint64_t{1} << j) /
                                 static_cast<double>(std::uint64_t{2} << m);
            c.append(phase_gate(j, theta, ConditionSet::one(m)));
        }
    }
    if (options.per_level_permutations) {
        // Innermost level first: level m moves qubit m down to qubit 0.
        for (unsigned m = 1; m < n; ++m) {
            c.append(rotate_wires({0, m}, WireRotation::Left));
        }
    } else if (n >= 2) {
        c.append(bit_reversal({0, n - 1}));
    }
    return c;
}

Circuit build_slant(unsigned n) {
    require_size(n, "build_slant");
    Circuit c(n, 0, label_for(Transform::Slant, n));
    emit_slant(c, n);
    return c;
}

Circuit build_hartley(unsigned n) {
    require_size(n, "build_hartley");
    Circuit c(n, 0, label_for(Transform::Hartley, n));
    emit_hartley(c, n);
    return c;
}

Circuit build_bc(unsigned n) {
    if (n < 3 || n > kMaxQubits) {
        throw InvalidArgument("build_bc: n must be in 3.." + std::to_string(kMaxQubits) +
                              ", got " + std::to_string(n));
    }
    const unsigned width = n - 1;
    const Qubit sign = width - 1;
    const QubitRange arg{0, width - 2};
    Circuit c(width, 0, "bc n=" + std::to_string(n));
    c.append(twos_complement(arg, ConditionSet::one(sign)));
    c.append(z_gate(sign));
    c.append(z_gate(sign, ConditionSet(qubit_span(arg.lo, arg.hi), {})));
    const double size = static_cast<double>(std::uint64_t{1} << n);
    for (Qubit k = arg.lo; k <= arg.hi; ++k) {
        const double theta = 2 * std::numbers::pi * static_cast<double>(std::uint64_t{1} << k) / size;
        c.append(rot_gate(sign, theta, ConditionSet::one(k)));
    }
    c.append(twos_complement(arg, ConditionSet::one(sign)));
    return c;
}

Circuit build_transform(Transform t, unsigned n) {
    switch (t) {
    case Transform::Dft:
        return build_qft(n);
    case Transform::Walsh:
        return build_walsh(n);
    case Transform::Slant:
        return build_slant(n);
    case Transform::Hartley:
        return build_hartley(n);
    }
    throw InvalidArgument("unknown transform");
}

Circuit synthesize(const SynthRequest &request) {
    Circuit c = build_transform(request.transform, request.n);
    if (!request.lower) {
        return c;
    }
    return lower_circuit(c, request.lowering).circuit;
}

} // namespace qtrans
