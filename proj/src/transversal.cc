// Copyright 2026 The nicebases Authors
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

#include "nb/transversal.h"

#include <algorithm>
#include <map>

namespace nb {

ImageOutsideCode::ImageOutsideCode(const std::string &gate, std::uint32_t state, const std::string &witness)
    : std::runtime_error(
          gate + " moves logical state " + std::to_string(state) + " outside the code space: " + witness) {
}

namespace {

DenseMatrix logical_matrix(std::uint32_t dim, const std::function<std::pair<std::uint32_t, CycInt>(std::uint32_t)> &f) {
    DenseMatrix m(dim);
    for (std::uint32_t col = 0; col < dim; col++) {
        auto [row, value] = f(col);
        m.at(row, col) = value;
    }
    return m;
}

MonomialMatrix site_shift(std::uint32_t n, std::uint32_t k) {
    return MonomialMatrix::shift(n).power(k).lifted(n);
}

MonomialMatrix site_clock(std::uint32_t n, std::uint32_t k) {
    return MonomialMatrix::clock(n).power(k).lifted(n);
}

}  // namespace

TransversalGate identity_gate(const PuncturedQuantumCode &code) {
    TransversalGate g;
    g.label = "identity";
    g.kind = GateKind::kIdentity;
    for (std::uint32_t i = 0; i < code.l; i++) {
        g.sites.emplace_back(MonomialMatrix::identity(code.n).lifted(code.n));
    }
    g.expected = DenseMatrix::identity(code.n);
    return g;
}

TransversalGate logical_increment(const PuncturedQuantumCode &code) {
    TransversalGate g;
    g.label = "increment";
    g.kind = GateKind::kIncrement;
    for (std::uint32_t i = 0; i < code.l; i++) {
        g.sites.emplace_back(site_shift(code.n, code.e1p[i]));
    }
    std::uint32_t n = code.n;
    g.expected = logical_matrix(n, [n](std::uint32_t i) { return std::make_pair((i + 1) % n, CycInt(1)); });
    return g;
}

Word phase_vector(const PuncturedQuantumCode &code) {
    for (const auto &x : code.dp.codewords()) {
        if (dot_mod(x, code.e1p, code.n) == 1 % code.n) {
            return x;
        }
    }
    throw NoPhaseVector();
}

TransversalGate logical_phase(const PuncturedQuantumCode &code) {
    Word x = phase_vector(code);
    TransversalGate g;
    g.label = "phase";
    g.kind = GateKind::kPhase;
    for (std::uint32_t i = 0; i < code.l; i++) {
        g.sites.emplace_back(site_clock(code.n, x[i]));
    }
    std::uint32_t n = code.n;
    g.expected = logical_matrix(n, [n](std::uint32_t i) { return std::make_pair(i, CycInt::zeta(n, i)); });
    return g;
}

TransversalGate logical_cadd(const PuncturedQuantumCode &code) {
    TransversalGate g;
    g.label = "cadd";
    g.kind = GateKind::kControlledAdd;
    g.two_block = true;
    std::uint32_t n = code.n;
    g.expected = logical_matrix(n * n, [n](std::uint32_t col) {
        std::uint32_t i = col / n, j = col % n;
        return std::make_pair(i * n + (i + j) % n, CycInt(1));
    });
    return g;
}

TransversalGate compose_gates(const TransversalGate &outer, const TransversalGate &inner) {
    if (outer.two_block || inner.two_block || outer.sites.size() != inner.sites.size()) {
        throw std::invalid_argument("compose_gates: single-block gates of equal length only");
    }
    TransversalGate g;
    g.label = outer.label + "*" + inner.label;
    g.kind = GateKind::kCustom;
    for (size_t i = 0; i < outer.sites.size(); i++) {
        g.sites.push_back(outer.sites[i] * inner.sites[i]);
    }
    g.expected = dense_mul(outer.expected, inner.expected);
    g.allow_reflection = outer.allow_reflection || inner.allow_reflection;
    return g;
}

TransversalGate gate_power(const TransversalGate &g, std::uint32_t k) {
    if (g.two_block) {
        throw std::invalid_argument("gate_power: single-block gates only");
    }
    TransversalGate r;
    r.label = g.label + "^" + std::to_string(k);
    r.kind = GateKind::kCustom;
    r.allow_reflection = g.allow_reflection;
    std::uint32_t dim = g.expected.dim();
    r.expected = DenseMatrix::identity(dim);
    for (const auto &s : g.sites) {
        r.sites.emplace_back(MonomialMatrix::identity(s.dim()));
    }
    for (std::uint32_t t = 0; t < k; t++) {
        for (size_t i = 0; i < r.sites.size(); i++) {
            r.sites[i] = g.sites[i] * r.sites[i];
        }
        r.expected = dense_mul(g.expected, r.expected);
    }
    return r;
}

StateVector apply_gate(const TransversalGate &gate, const StateVector &s) {
    if (gate.two_block) {
        std::uint32_t sites = s.num_sites();
        if (sites % 2 != 0) {
            throw std::invalid_argument("apply_gate: two-block gate needs an even number of sites");
        }
        std::uint32_t l = sites / 2;
        const auto &dims = s.site_dims();
        return apply_basis_map(s, [l, &dims](std::vector<std::uint32_t> &digits) {
            for (std::uint32_t k = 0; k < l; k++) {
                digits[l + k] = (digits[l + k] + digits[k]) % dims[k];
            }
        });
    }
    if (gate.sites.size() != s.num_sites()) {
        throw std::invalid_argument("apply_gate: gate length does not match the state");
    }
    return apply_ops(gate.sites, s);
}

std::vector<StateVector> logical_basis(const PuncturedQuantumCode &code, bool two_block) {
    std::vector<StateVector> single;
    for (std::uint32_t i = 0; i < code.n; i++) {
        single.push_back(logical_state(code, i));
    }
    if (!two_block) {
        return single;
    }
    std::vector<StateVector> pairs;
    for (std::uint32_t i = 0; i < code.n; i++) {
        for (std::uint32_t j = 0; j < code.n; j++) {
            pairs.push_back(state_tensor(single[i], single[j]));
        }
    }
    return pairs;
}

LogicalActionReport verify_logical_action(const PuncturedQuantumCode &code, const TransversalGate &gate) {
    LogicalActionReport r;
    std::vector<StateVector> basis = logical_basis(code, gate.two_block);
    std::uint32_t dim = static_cast<std::uint32_t>(basis.size());
    CycInt norm(static_cast<std::int64_t>(code.c0.size()));
    if (gate.two_block) {
        norm = norm * norm;
    }
    r.induced = DenseMatrix(dim);
    for (std::uint32_t i = 0; i < dim; i++) {
        StateVector image = apply_gate(gate, basis[i]);
        StateVector projection(image.site_dims());
        for (std::uint32_t j = 0; j < dim; j++) {
            CycInt overlap = inner_product(basis[j], image);
            r.induced.at(j, i) = overlap;
            if (!overlap.is_zero()) {
                projection += basis[j].scaled(overlap);
            }
        }
        // norm * image must equal its expansion over the logical basis.
        StateVector residual = image.scaled(norm) - projection;
        if (!residual.is_zero() && r.in_code) {
            r.in_code = false;
            const auto &[index, value] = *residual.amplitudes().begin();
            r.witness = "logical state " + std::to_string(i) + ": residual amplitude " + value.to_string() +
                        " at basis index " + std::to_string(index);
        }
    }
    if (gate.expected.dim() == dim) {
        r.matches = dense_proportional(r.induced, gate.expected).has_value();
        if (!r.matches && gate.allow_reflection) {
            DenseMatrix reflected(dim);
            for (std::uint32_t row = 0; row < dim; row++) {
                for (std::uint32_t col = 0; col < dim; col++) {
                    reflected.at((dim - row) % dim, col) = gate.expected.at(row, col);
                }
            }
            r.reflected = dense_proportional(r.induced, reflected).has_value();
        }
    }
    if (r.in_code && !r.matches && !r.reflected && r.witness.empty()) {
        r.witness = "induced logical matrix is not proportional to the expected action";
    }
    r.pass = r.in_code && (r.matches || r.reflected);
    return r;
}

FourierGate transversal_fourier(const PuncturedQuantumCode &code, const Guards &guards) {
    if (!is_self_dual(code.c, guards)) {
        throw NotSelfDual();
    }
    std::uint32_t n = code.n;
    if (n > guards.max_dense_dim) {
        throw GuardExceeded("max_dense_dim", n, guards.max_dense_dim);
    }
    TransversalGate g;
    g.label = "fourier";
    g.kind = GateKind::kFourier;
    g.allow_reflection = true;
    for (std::uint32_t i = 0; i < code.l; i++) {
        g.sites.emplace_back(DenseMatrix::fourier(n));
    }
    g.expected = DenseMatrix::fourier(n);
    LogicalActionReport action = verify_logical_action(code, g);
    if (!action.in_code) {
        throw ImageOutsideCode("fourier", 0, action.witness);
    }
    return FourierGate{std::move(g), std::move(action)};
}

bool verify_clock_shift(const PuncturedQuantumCode &code) {
    TransversalGate inc = logical_increment(code);
    TransversalGate phase = logical_phase(code);
    CycInt omega = CycInt::zeta(code.n, 1);
    for (std::uint32_t j = 0; j < code.n; j++) {
        StateVector s = logical_state(code, j);
        StateVector pi = apply_gate(phase, apply_gate(inc, s));
        StateVector ip = apply_gate(inc, apply_gate(phase, s));
        if (!(pi == ip.scaled(omega))) {
            return false;
        }
    }
    return true;
}

FourierConjugationReport verify_fourier_conjugation(std::uint32_t n) {
    if (n < 2) {
        throw std::invalid_argument("verify_fourier_conjugation: n must be at least 2");
    }
    FourierConjugationReport r;
    r.n = n;
    DenseMatrix f = DenseMatrix::fourier(n);
    DenseMatrix f_adj = f.adjoint();
    for (std::uint32_t k = 0; k < n; k++) {
        DenseMatrix lhs = dense_mul(dense_mul(f, to_dense(MonomialMatrix::clock(n).power(k))), f_adj);
        DenseMatrix rhs = to_dense(MonomialMatrix::cyclic(n).power(k)).scaled(CycInt(n));
        bool ok = lhs == rhs;
        r.per_k.push_back(ok);
        r.pass = r.pass && ok;
    }
    return r;
}

namespace {

std::vector<ReadoutOutcome> group_by_coset(
    const StateVector &s, const LinearCodeZn &subgroup, const std::optional<Word> &unit, std::uint32_t n) {
    std::map<Word, CycInt> weights;
    for (const auto &[index, amp] : s.amplitudes()) {
        Word z = s.decode(index);
        Word least = z;
        for (const auto &c : subgroup.codewords()) {
            Word candidate = add_mod(z, c, n);
            if (candidate < least) {
                least = std::move(candidate);
            }
        }
        weights[least] += amp * amp.conj();
    }
    std::vector<ReadoutOutcome> out;
    for (auto &[coset, weight] : weights) {
        ReadoutOutcome o{coset, std::nullopt, weight};
        if (unit) {
            for (std::uint32_t i = 0; i < n; i++) {
                if (subgroup.contains(sub_mod(coset, scale_mod(*unit, i, n), n))) {
                    o.logical = i;
                    break;
                }
            }
        }
        out.push_back(std::move(o));
    }
    return out;
}

}  // namespace

std::vector<ReadoutOutcome> readout_computational(const PuncturedQuantumCode &code, const StateVector &s) {
    return group_by_coset(s, code.c0, code.e1p, code.n);
}

std::vector<ReadoutOutcome> readout_fourier(const PuncturedQuantumCode &code, const StateVector &s) {
    std::vector<Operator> ops;
    for (std::uint32_t i = 0; i < code.l; i++) {
        ops.emplace_back(DenseMatrix::fourier(code.n));
    }
    StateVector transformed = apply_ops(ops, s);
    std::optional<Word> unit;
    try {
        Word f1 = find_e1(code.d);
        unit = Word(f1.begin(), f1.end() - 1);
    } catch (const NoUnitLastCoordinate &) {
    }
    return group_by_coset(transformed, code.d0, unit, code.n);
}

}  // namespace nb
