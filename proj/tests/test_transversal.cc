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

#include <gtest/gtest.h>

#include "test_util.h"

using namespace nb;
using nb_test::golay;
using nb_test::steane;
using nb_test::tetra;

namespace {

// Column i holds the image of basis state i under |j> -> omega^{a j} |j + b>.
DenseMatrix logical_error_matrix(std::uint32_t n, std::uint32_t a, std::uint32_t b) {
    DenseMatrix m(n);
    for (std::uint32_t j = 0; j < n; j++) {
        m.at((j + b) % n, j) = CycInt::zeta(n, static_cast<std::int64_t>(a) * j);
    }
    return m;
}

}  // namespace

TEST(Increment, maps_each_logical_state_forward) {
    for (const auto *code : {&steane(), &tetra(), &golay()}) {
        TransversalGate inc = logical_increment(*code);
        ASSERT_EQ(inc.sites.size(), code->l);
        for (std::uint32_t i = 0; i < code->n; i++) {
            EXPECT_EQ(apply_gate(inc, logical_state(*code, i)), logical_state(*code, (i + 1) % code->n));
        }
        StateVector s = logical_state(*code, 1);
        StateVector t = s;
        for (std::uint32_t k = 0; k < code->n; k++) {
            t = apply_gate(inc, t);
        }
        EXPECT_EQ(t, s);
        EXPECT_EQ(apply_gate(gate_power(inc, code->n), s), s);
    }
}

TEST(Increment, steane_induced_matrix_is_swap) {
    LogicalActionReport r = verify_logical_action(steane(), logical_increment(steane()));
    EXPECT_TRUE(r.pass);
    EXPECT_TRUE(r.in_code);
    EXPECT_TRUE(r.matches);
    EXPECT_EQ(r.induced.at(0, 0), CycInt(0));
    EXPECT_EQ(r.induced.at(1, 1), CycInt(0));
    EXPECT_EQ(r.induced.at(0, 1), CycInt(8));
    EXPECT_EQ(r.induced.at(1, 0), CycInt(8));
}

TEST(Phase, vector_and_action) {
    for (const auto *code : {&steane(), &tetra(), &golay()}) {
        Word x = phase_vector(*code);
        EXPECT_TRUE(code->dp.contains(x));
        EXPECT_EQ(dot_mod(x, code->e1p, code->n), 1u);
        for (const auto &w : code->dp.codewords()) {
            if (dot_mod(w, code->e1p, code->n) == 1) {
                EXPECT_LE(x, w);
            }
        }
        TransversalGate ph = logical_phase(*code);
        for (std::uint32_t i = 0; i < code->n; i++) {
            StateVector s = logical_state(*code, i);
            EXPECT_EQ(apply_gate(ph, s), s.scaled(CycInt::zeta(code->n, i)));
        }
        EXPECT_EQ(apply_gate(gate_power(ph, code->n), logical_state(*code, 1)), logical_state(*code, 1));
    }
}

TEST(Phase, clock_shift_relation) {
    for (const auto *code : {&steane(), &tetra(), &golay()}) {
        EXPECT_TRUE(verify_clock_shift(*code));
        TransversalGate inc = logical_increment(*code), ph = logical_phase(*code);
        for (std::uint32_t j = 0; j < code->n; j++) {
            StateVector s = logical_state(*code, j);
            auto r = proportional(apply_gate(ph, apply_gate(inc, s)), apply_gate(inc, apply_gate(ph, s)));
            ASSERT_TRUE(r.has_value());
            EXPECT_EQ(r->numerator, CycInt::zeta(code->n) * r->denominator);
        }
    }
}

TEST(Phase, missing_vector_is_reported) {
    // Valid codes always have a phase vector; a zero e'_1 has none.
    PuncturedQuantumCode broken = steane();
    broken.e1p.assign(broken.l, 0);
    EXPECT_THROW(phase_vector(broken), NoPhaseVector);
}

TEST(ErrorGroup, all_logical_errors_transversal) {
    for (const auto *code : {&steane(), &tetra()}) {
        std::uint32_t n = code->n;
        TransversalGate inc = logical_increment(*code), ph = logical_phase(*code);
        for (std::uint32_t a = 0; a < n; a++) {
            for (std::uint32_t b = 0; b < n; b++) {
                TransversalGate g = compose_gates(gate_power(inc, b), gate_power(ph, a));
                g.expected = logical_error_matrix(n, a, b);
                EXPECT_TRUE(verify_logical_action(*code, g).pass) << a << "," << b;
                for (std::uint32_t j = 0; j < n; j++) {
                    EXPECT_EQ(apply_gate(g, logical_state(*code, j)),
                              logical_state(*code, (j + b) % n).scaled(CycInt::zeta(n, static_cast<std::int64_t>(a) * j)));
                }
            }
        }
    }
}

TEST(Fourier, steane_hadamard_images) {
    const PuncturedQuantumCode &c = steane();
    FourierGate f = transversal_fourier(c);
    EXPECT_TRUE(f.action.pass);
    StateVector plus = logical_state(c, 0) + logical_state(c, 1);
    StateVector minus = logical_state(c, 0) - logical_state(c, 1);
    EXPECT_TRUE(proportional(apply_gate(f.gate, logical_state(c, 0)), plus).has_value());
    EXPECT_TRUE(proportional(apply_gate(f.gate, logical_state(c, 1)), minus).has_value());
    EXPECT_FALSE(proportional(apply_gate(f.gate, logical_state(c, 1)), plus).has_value());
}

TEST(Fourier, tetracode_action_allows_reflection) {
    FourierGate f = transversal_fourier(tetra());
    EXPECT_TRUE(f.action.pass);
    EXPECT_TRUE(f.action.in_code);
    // Either M_{ji} is proportional to omega^{ij} or to omega^{-ij}.
    std::uint32_t n = 3;
    bool forward = true, backward = true;
    const DenseMatrix &m = f.action.induced;
    for (std::uint32_t j = 0; j < n; j++) {
        for (std::uint32_t i = 0; i < n; i++) {
            forward &= m.at(j, i) * CycInt::zeta(n, 0) == m.at(0, 0) * CycInt::zeta(n, static_cast<std::int64_t>(i) * j);
            backward &= m.at(j, i) == m.at(0, 0) * CycInt::zeta(n, -static_cast<std::int64_t>(i) * j);
        }
    }
    EXPECT_TRUE(forward || backward);
    EXPECT_EQ(f.action.reflected, backward && !forward);
}

TEST(Fourier, square_reflects_logical_index) {
    for (const auto *code : {&steane(), &tetra()}) {
        FourierGate f = transversal_fourier(*code);
        for (std::uint32_t i = 0; i < code->n; i++) {
            StateVector twice = apply_gate(f.gate, apply_gate(f.gate, logical_state(*code, i)));
            EXPECT_TRUE(proportional(twice, logical_state(*code, (code->n - i) % code->n)).has_value());
        }
    }
}

TEST(Fourier, rejects_non_self_dual) {
    PuncturedQuantumCode r = build_code(LinearCodeZn(2, 4, {{1, 1, 1, 1}}));
    EXPECT_THROW(transversal_fourier(r), NotSelfDual);
}

TEST(Fourier, conjugation_identity) {
    for (std::uint32_t n = 2; n <= 12; n++) {
        FourierConjugationReport r = verify_fourier_conjugation(n);
        EXPECT_TRUE(r.pass) << "n = " << n;
        ASSERT_EQ(r.per_k.size(), n);
    }
    // n = 2 by hand: H Z H = 2 X with H = [[1,1],[1,-1]].
    DenseMatrix h = DenseMatrix::fourier(2);
    DenseMatrix z(2, {CycInt(1), CycInt(0), CycInt(0), CycInt(-1)});
    DenseMatrix x(2, {CycInt(0), CycInt(2), CycInt(2), CycInt(0)});
    EXPECT_EQ(dense_mul(dense_mul(h, z), dense_adjoint(h)), x);
}

TEST(ControlledAdd, steane_cnot) {
    const PuncturedQuantumCode &c = steane();
    TransversalGate g = logical_cadd(c);
    EXPECT_TRUE(g.two_block);
    StateVector in = state_tensor(logical_state(c, 1), logical_state(c, 1));
    StateVector out = apply_gate(g, in);
    EXPECT_EQ(out.support_size(), 64u);
    EXPECT_EQ(out, state_tensor(logical_state(c, 1), logical_state(c, 0)));
    for (std::uint32_t j = 0; j < 2; j++) {
        StateVector s = state_tensor(logical_state(c, 0), logical_state(c, j));
        EXPECT_EQ(apply_gate(g, s), s);
    }
    EXPECT_TRUE(verify_logical_action(c, g).pass);
}

TEST(ControlledAdd, tetracode_all_products_and_order) {
    const PuncturedQuantumCode &c = tetra();
    TransversalGate g = logical_cadd(c);
    for (std::uint32_t i = 0; i < 3; i++) {
        for (std::uint32_t j = 0; j < 3; j++) {
            StateVector s = state_tensor(logical_state(c, i), logical_state(c, j));
            EXPECT_EQ(apply_gate(g, s), state_tensor(logical_state(c, i), logical_state(c, (i + j) % 3)));
            StateVector t = s;
            for (int k = 0; k < 3; k++) {
                t = apply_gate(g, t);
            }
            EXPECT_EQ(t, s);
        }
    }
    LogicalActionReport r = verify_logical_action(c, g);
    EXPECT_TRUE(r.pass);
    EXPECT_TRUE(r.in_code);
}

TEST(LogicalAction, identity_gate) {
    LogicalActionReport r = verify_logical_action(tetra(), identity_gate(tetra()));
    EXPECT_TRUE(r.pass);
    for (std::uint32_t i = 0; i < 3; i++) {
        for (std::uint32_t j = 0; j < 3; j++) {
            EXPECT_EQ(r.induced.at(i, j), CycInt(i == j ? 3 : 0));
        }
    }
}

TEST(LogicalAction, stray_shift_leaves_code) {
    TransversalGate g = identity_gate(steane());
    g.sites[3] = Operator(MonomialMatrix::shift(2));
    LogicalActionReport r = verify_logical_action(steane(), g);
    EXPECT_FALSE(r.pass);
    EXPECT_FALSE(r.in_code);
    EXPECT_FALSE(r.witness.empty());
}

TEST(LogicalAction, wrong_expectation_fails) {
    TransversalGate g = logical_increment(steane());
    g.expected = DenseMatrix::identity(2);
    LogicalActionReport r = verify_logical_action(steane(), g);
    EXPECT_TRUE(r.in_code);
    EXPECT_FALSE(r.matches);
    EXPECT_FALSE(r.pass);
}

TEST(LogicalAction, golay_increment_and_phase) {
    EXPECT_TRUE(verify_logical_action(golay(), logical_increment(golay())).pass);
    EXPECT_TRUE(verify_logical_action(golay(), logical_phase(golay())).pass);
}

TEST(Readout, computational_basis) {
    const PuncturedQuantumCode &c = steane();
    std::vector<ReadoutOutcome> r = readout_computational(c, logical_state(c, 1));
    ASSERT_EQ(r.size(), 1u);
    EXPECT_EQ(r[0].logical, std::optional<std::uint32_t>(1));
    EXPECT_EQ(r[0].weight, CycInt(8));
    std::vector<ReadoutOutcome> both = readout_computational(c, logical_state(c, 0) + logical_state(c, 1));
    ASSERT_EQ(both.size(), 2u);
    EXPECT_EQ(both[0].weight, both[1].weight);

    ErrorIndex err = ErrorIndex::identity(7);
    err.y[2] = 1;
    std::vector<ReadoutOutcome> off = readout_computational(c, apply_error(err, logical_state(c, 0), 2));
    ASSERT_EQ(off.size(), 1u);
    EXPECT_FALSE(off[0].logical.has_value());
}

TEST(Readout, fourier_basis) {
    const PuncturedQuantumCode &c = steane();
    std::vector<ReadoutOutcome> r = readout_fourier(c, logical_state(c, 0));
    ASSERT_EQ(r.size(), 2u);
    EXPECT_EQ(r[0].weight, r[1].weight);
    EXPECT_TRUE(r[0].logical.has_value());
    EXPECT_TRUE(r[1].logical.has_value());
    EXPECT_NE(*r[0].logical, *r[1].logical);
    StateVector plus = logical_state(c, 0) + logical_state(c, 1);
    std::vector<ReadoutOutcome> p = readout_fourier(c, plus);
    ASSERT_EQ(p.size(), 1u);
    EXPECT_EQ(p[0].logical, std::optional<std::uint32_t>(0));
}
