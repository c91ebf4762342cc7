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


#include "nb/exactmat.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "test_util.h"

using namespace nb;
using nb_test::random_cycint;
using nb_test::random_dense;
using nb_test::random_monomial;
using nb_test::random_state;

namespace {

// Built straight from the column action M|j> = zeta^{p_j}|pi(j)>.
DenseMatrix dense_oracle(const MonomialMatrix &m) {
    DenseMatrix d(m.dim());
    for (std::uint32_t j = 0; j < m.dim(); j++) {
        d.at(m.perm()[j], j) = CycInt::zeta(m.order(), m.phases()[j]);
    }
    return d;
}

// Leibniz expansion.
CycInt leibniz_det(const DenseMatrix &a) {
    std::vector<std::uint32_t> p(a.dim());
    std::iota(p.begin(), p.end(), 0u);
    CycInt total;
    do {
        int inversions = 0;
        for (size_t i = 0; i < p.size(); i++) {
            for (size_t j = i + 1; j < p.size(); j++) {
                inversions += p[i] > p[j];
            }
        }
        CycInt term(inversions % 2 ? -1 : 1);
        for (std::uint32_t i = 0; i < a.dim(); i++) {
            term *= a.at(i, p[i]);
        }
        total += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

std::vector<std::uint32_t> digits_of(const StateVector &s, StateVector::Index idx) {
    return s.decode(idx);
}

}  // namespace

TEST(Monomial, compose_examples) {
    EXPECT_TRUE(mono_compose(MonomialMatrix::cyclic(2), MonomialMatrix::cyclic(2)).is_identity());
    for (std::uint32_t n = 2; n <= 7; n++) {
        MonomialMatrix c = MonomialMatrix::cyclic(n), d = MonomialMatrix::clock(n);
        EXPECT_EQ(mono_compose(c, d), mono_compose(d, c).scalar_mul(1)) << "n = " << n;
        EXPECT_EQ(mono_compose(MonomialMatrix::shift(n), c), MonomialMatrix::identity(n));
    }
}

TEST(Monomial, trace_and_det_examples) {
    EXPECT_EQ(MonomialMatrix::identity(5).trace(), CycInt(5));
    EXPECT_TRUE(MonomialMatrix::clock(3).trace().is_zero());
    EXPECT_EQ(MonomialMatrix::cyclic(5).det(), CycInt(1));
    EXPECT_EQ(MonomialMatrix::cyclic(4).det(), CycInt(-1));
    EXPECT_EQ(MonomialMatrix::cyclic(2).det(), CycInt(-1));
}

TEST(Monomial, tensor_examples) {
    MonomialMatrix i2 = MonomialMatrix::identity(2), n2 = MonomialMatrix::cyclic(2);
    EXPECT_TRUE(mono_tensor(i2, i2).is_identity());
    EXPECT_EQ(mono_compose(mono_tensor(n2, i2), mono_tensor(i2, n2)), mono_tensor(n2, n2));
}

TEST(Monomial, dense_of_swap) {
    DenseMatrix n2 = to_dense(MonomialMatrix::cyclic(2));
    EXPECT_EQ(n2.at(0, 0), CycInt(0));
    EXPECT_EQ(n2.at(0, 1), CycInt(1));
    EXPECT_EQ(n2.at(1, 0), CycInt(1));
    EXPECT_EQ(n2.at(1, 1), CycInt(0));
}

TEST(Monomial, shift_clock_actions) {
    for (std::uint32_t n = 2; n <= 6; n++) {
        for (std::uint32_t z = 0; z < n; z++) {
            EXPECT_EQ(MonomialMatrix::shift(n).entry((z + 1) % n, z), CycInt(1));
            EXPECT_EQ(MonomialMatrix::cyclic(n).entry((z + n - 1) % n, z), CycInt(1));
            EXPECT_EQ(MonomialMatrix::clock(n).entry(z, z), CycInt::zeta(n, z));
        }
    }
}

TEST(Monomial, random_dense_oracle_agreement) {
    std::mt19937 rng(31);
    std::uniform_int_distribution<std::uint32_t> dim(1, 8), order(1, 12);
    for (int trial = 0; trial < 200; trial++) {
        std::uint32_t n = dim(rng);
        MonomialMatrix a = random_monomial(rng, n, order(rng));
        MonomialMatrix b = random_monomial(rng, n, order(rng));
        DenseMatrix da = dense_oracle(a), db = dense_oracle(b);
        EXPECT_EQ(to_dense(a), da);
        EXPECT_EQ(dense_mul(da, db), to_dense(mono_compose(a, b)));
        EXPECT_EQ(dense_adjoint(da), to_dense(a.adjoint()));
        EXPECT_EQ(da.trace(), a.trace());
        if (n <= 6) {
            EXPECT_EQ(leibniz_det(da), a.det());
        }
        for (std::uint32_t r = 0; r < n; r++) {
            for (std::uint32_t c = 0; c < n; c++) {
                EXPECT_EQ(a.entry(r, c), da.at(r, c));
            }
        }
    }
}

TEST(Monomial, random_tensor_oracle) {
    std::mt19937 rng(32);
    std::uniform_int_distribution<std::uint32_t> dim(1, 4), order(1, 8);
    for (int trial = 0; trial < 100; trial++) {
        MonomialMatrix a = random_monomial(rng, dim(rng), order(rng));
        MonomialMatrix b = random_monomial(rng, dim(rng), order(rng));
        MonomialMatrix t = mono_tensor(a, b);
        EXPECT_EQ(t.trace(), a.trace() * b.trace());
        EXPECT_EQ(to_dense(t), dense_tensor(to_dense(a), to_dense(b)));
        // Oracle through entries: (a (x) b)[ra*nb+rb, ca*nb+cb] = a[ra,ca] b[rb,cb].
        std::uint32_t nb = b.dim();
        for (std::uint32_t r = 0; r < t.dim(); r++) {
            for (std::uint32_t c = 0; c < t.dim(); c++) {
                EXPECT_EQ(t.entry(r, c), a.entry(r / nb, c / nb) * b.entry(r % nb, c % nb));
            }
        }
    }
}

TEST(Monomial, random_group_properties) {
    std::mt19937 rng(33);
    std::uniform_int_distribution<std::uint32_t> dim(1, 9), order(1, 12);
    for (int trial = 0; trial < 300; trial++) {
        std::uint32_t n = dim(rng);
        MonomialMatrix a = random_monomial(rng, n, order(rng));
        MonomialMatrix b = random_monomial(rng, n, order(rng));
        EXPECT_TRUE(mono_compose(a, a.adjoint()).is_identity());
        EXPECT_TRUE(mono_compose(a.adjoint(), a).is_identity());
        EXPECT_EQ(mono_compose(a, b).trace(), mono_compose(b, a).trace());
        EXPECT_EQ(mono_compose(a, b).det(), a.det() * b.det());
        EXPECT_EQ(a.reduced(), a);
        EXPECT_EQ(a.lifted(a.order() * 3), a);
        EXPECT_EQ(a.lifted(a.order() * 2).key(), a.key());
        EXPECT_EQ(a.power(3), mono_compose(a, mono_compose(a, a)));
        auto ratio = mono_proportional(a.scalar_mul(5), a);
        ASSERT_TRUE(ratio.has_value());
        EXPECT_EQ(*ratio, CycInt::zeta(a.order(), 5));
    }
}

TEST(Monomial, dimension_mismatch_throws) {
    EXPECT_THROW(mono_compose(MonomialMatrix::identity(2), MonomialMatrix::identity(3)), std::exception);
    EXPECT_THROW(dense_mul(DenseMatrix::identity(2), DenseMatrix::identity(3)), std::exception);
    EXPECT_THROW(MonomialMatrix(2, {0, 0}, {0, 0}), std::exception);
}

TEST(Dense, fourier_is_unitary_up_to_n) {
    for (std::uint32_t n = 1; n <= 8; n++) {
        DenseMatrix f = DenseMatrix::fourier(n);
        DenseMatrix prod = dense_mul(f, dense_adjoint(f));
        CycInt s;
        ASSERT_TRUE(dense_scalar_check(prod, &s)) << "n = " << n;
        EXPECT_EQ(s, CycInt(static_cast<std::int64_t>(n)));
        EXPECT_EQ(prod, DenseMatrix::identity(n).scaled(CycInt(static_cast<std::int64_t>(n))));
    }
}

TEST(Dense, random_algebra) {
    std::mt19937 rng(41);
    std::uniform_int_distribution<std::uint32_t> dim(1, 4), order(1, 8);
    for (int trial = 0; trial < 60; trial++) {
        std::uint32_t n = dim(rng), m = order(rng);
        DenseMatrix a = random_dense(rng, n, m), b = random_dense(rng, n, m), c = random_dense(rng, n, m);
        EXPECT_EQ(dense_mul(dense_mul(a, b), c), dense_mul(a, dense_mul(b, c)));
        EXPECT_EQ(dense_adjoint(dense_mul(a, b)), dense_mul(dense_adjoint(b), dense_adjoint(a)));
        EXPECT_EQ(dense_mul(a, b + c), dense_mul(a, b) + dense_mul(a, c));
        EXPECT_EQ(dense_mul(a, b).trace(), dense_mul(b, a).trace());
        CycInt s = random_cycint(rng, m, -2, 2);
        if (!s.is_zero()) {
            auto r = dense_proportional(a.scaled(s), a);
            bool a_zero = a == DenseMatrix(n);
            if (!a_zero) {
                ASSERT_TRUE(r.has_value());
                EXPECT_EQ(r->numerator, s * r->denominator);
            }
        }
        EXPECT_TRUE(dense_equal(a, a));
    }
}

TEST(Operator, monomial_and_dense_paths_agree) {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 100; trial++) {
        std::uint32_t n = 1 + static_cast<std::uint32_t>(trial % 6);
        MonomialMatrix a = random_monomial(rng, n, 6), b = random_monomial(rng, n, 4);
        Operator ma(a), mb(b), da(to_dense(a)), db(to_dense(b));
        EXPECT_EQ((ma * mb).dense(), (da * db).dense());
        EXPECT_EQ(ma.trace(), da.trace());
        EXPECT_EQ(ma.adjoint().dense(), da.adjoint().dense());
        EXPECT_EQ(op_tensor(ma, mb).dense(), op_tensor(da, db).dense());
        if (n <= 5) {
            EXPECT_EQ(ma.det(), da.det());
        }
        EXPECT_TRUE(ma == da);
    }
}

TEST(State, apply_mono_examples) {
    StateVector s = StateVector::basis({3, 3}, 1 * 3 + 2);
    std::vector<MonomialMatrix> ids(2, MonomialMatrix::identity(3));
    EXPECT_EQ(apply_mono(ids, s), s);
    std::vector<MonomialMatrix> clocks(2, MonomialMatrix::clock(3));
    EXPECT_EQ(apply_mono(clocks, s), s);
    std::vector<MonomialMatrix> shifts(2, MonomialMatrix::shift(3));
    EXPECT_EQ(apply_mono(shifts, s), StateVector::basis({3, 3}, 2 * 3 + 0));
    StateVector t = StateVector::basis({3, 3}, 1 * 3 + 1);
    EXPECT_EQ(apply_mono(clocks, t), t.scaled(CycInt::zeta(3, 2)));
}

TEST(State, encoding_is_big_endian) {
    StateVector s({2, 3, 5});
    EXPECT_EQ(s.dim(), 30u);
    std::vector<std::uint32_t> d{1, 2, 3};
    EXPECT_EQ(s.encode(d), 1u * 15 + 2u * 5 + 3u);
    EXPECT_EQ(s.decode(28), (std::vector<std::uint32_t>{1, 2, 3}));
}

TEST(State, inner_product_examples) {
    StateVector u({3});
    u.add(0, CycInt(1));
    u.add(1, CycInt::zeta(3));
    EXPECT_EQ(inner_product(u, u), CycInt(2));
    for (StateVector::Index a = 0; a < 4; a++) {
        for (StateVector::Index b = 0; b < 4; b++) {
            EXPECT_EQ(inner_product(StateVector::basis({2, 2}, a), StateVector::basis({2, 2}, b)),
                      CycInt(a == b ? 1 : 0));
        }
    }
    u.add(0, CycInt(-1));
    EXPECT_EQ(u.support_size(), 1u);
}

TEST(State, proportional_examples) {
    std::mt19937 rng(5);
    StateVector u = random_state(rng, {5, 5}, 5, 6);
    auto r = proportional(u.scaled(CycInt::zeta(5)), u);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(r->numerator, CycInt::zeta(5) * r->denominator);
    EXPECT_FALSE(proportional(StateVector::basis({2}, 0), StateVector::basis({2}, 1)).has_value());
    StateVector v = u;
    v.add(u.amplitudes().begin()->first, CycInt(1));
    EXPECT_FALSE(proportional(v, u).has_value() && !(v == u));
}

TEST(State, random_apply_mono_linear_and_unitary) {
    std::mt19937 rng(51);
    std::uniform_int_distribution<std::uint32_t> site(2, 4), len(1, 3);
    for (int trial = 0; trial < 100; trial++) {
        std::uint32_t l = len(rng);
        std::vector<std::uint32_t> dims(l);
        std::vector<MonomialMatrix> ops;
        for (auto &d : dims) {
            d = site(rng);
            ops.push_back(random_monomial(rng, d, 6));
        }
        StateVector u = random_state(rng, dims, 6, 5), v = random_state(rng, dims, 6, 5);
        StateVector au = apply_mono(ops, u), av = apply_mono(ops, v);
        EXPECT_EQ(apply_mono(ops, u + v), au + av);
        EXPECT_EQ(inner_product(au, av), inner_product(u, v));
        // Oracle: the same action computed digit by digit.
        StateVector expect(dims);
        for (const auto &[idx, amp] : u.amplitudes()) {
            std::vector<std::uint32_t> dg = digits_of(u, idx);
            CycInt a = amp;
            for (std::uint32_t i = 0; i < l; i++) {
                a *= CycInt::zeta(ops[i].order(), ops[i].phases()[dg[i]]);
                dg[i] = ops[i].perm()[dg[i]];
            }
            expect.add(expect.encode(dg), a);
        }
        EXPECT_EQ(au, expect);
        std::vector<Operator> dense_ops;
        for (const auto &o : ops) {
            dense_ops.emplace_back(to_dense(o));
        }
        EXPECT_EQ(apply_ops(dense_ops, u), au);
    }
}

TEST(State, tensor_and_inner_product) {
    std::mt19937 rng(52);
    StateVector a = random_state(rng, {2, 3}, 3, 4), b = random_state(rng, {4}, 4, 3);
    StateVector c = random_state(rng, {2, 3}, 3, 4), d = random_state(rng, {4}, 4, 3);
    EXPECT_EQ(inner_product(state_tensor(a, b), state_tensor(c, d)), inner_product(a, c) * inner_product(b, d));
}

TEST(State, shape_mismatch_throws) {
    EXPECT_THROW(inner_product(StateVector({2}), StateVector({3})), std::exception);
}
