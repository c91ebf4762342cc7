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

#include "nb/errorbasis.h"

#include <numeric>
#include <unordered_map>

namespace nb {

namespace {

// Key identifying a monomial matrix up to a root-of-unity scalar.
std::string projective_key(const MonomialMatrix &m) {
    return m.scalar_mul(-static_cast<std::int64_t>(m.phases()[0])).key();
}

// Exact quotient t / n; the power basis is an integral basis of Z[zeta_m],
// so t is divisible by n in the ring iff every canonical coefficient is.
CycInt divide_by_integer(const CycInt &t, std::uint32_t n) {
    std::vector<BigInt> c = t.coeffs();
    for (auto &x : c) {
        if (x % n != 0) {
            throw std::logic_error("divide_by_integer: not an exact multiple");
        }
        x /= n;
    }
    return CycInt::from_coeffs(t.order(), std::move(c));
}

std::string pair_label(std::uint32_t i, std::uint32_t j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

NotNiceError::NotNiceError(size_t i, size_t j)
    : std::runtime_error(
          "product of elements " + std::to_string(i) + " and " + std::to_string(j) +
          " is not proportional to a basis element"),
      i(i),
      j(j) {
}

ErrorBasis build_shift_clock(std::uint32_t n, ShiftClockLabeling labeling) {
    if (n < 2) {
        throw std::invalid_argument("build_shift_clock: n must be at least 2");
    }
    MonomialMatrix clock = MonomialMatrix::clock(n);
    MonomialMatrix step = labeling == ShiftClockLabeling::kShift ? MonomialMatrix::shift(n) : MonomialMatrix::cyclic(n);
    ErrorBasis b;
    b.dim = n;
    for (std::uint32_t i = 0; i < n; i++) {
        MonomialMatrix di = clock.power(i);
        for (std::uint32_t j = 0; j < n; j++) {
            b.elements.emplace_back(mono_compose(di, step.power(j)).lifted(n));
            b.labels.push_back(pair_label(i, j));
        }
    }
    return b;
}

ErrorBasis tensor_basis(const ErrorBasis &a, const ErrorBasis &b) {
    ErrorBasis r;
    r.dim = a.dim * b.dim;
    for (size_t i = 0; i < a.size(); i++) {
        for (size_t j = 0; j < b.size(); j++) {
            r.elements.push_back(op_tensor(a.elements[i], b.elements[j]));
            r.labels.push_back("(" + a.labels[i] + "," + b.labels[j] + ")");
        }
    }
    return r;
}

ErrorBasis qubit_basis() {
    MonomialMatrix id = MonomialMatrix::identity(2);
    MonomialMatrix flip(2, {1, 0}, {0, 0});
    MonomialMatrix sign(2, {0, 1}, {0, 1});
    return ErrorBasis{2, {id, flip, sign, mono_compose(flip, sign)}, {"I", "N", "S", "NS"}};
}

ErrorBasis qubit_basis_det_one() {
    ErrorBasis b = qubit_basis();
    b.elements[1] = b.elements[1].monomial().scalar_mul(4, 1);
    b.elements[2] = b.elements[2].monomial().scalar_mul(4, 1);
    b.labels = {"I", "iN", "iS", "NS"};
    return b;
}

OrthonormalReport verify_orthonormal(const ErrorBasis &basis) {
    OrthonormalReport r;
    std::uint32_t n = basis.dim;
    r.correct_count = basis.size() == static_cast<size_t>(n) * n;
    r.identity_first = !basis.elements.empty() && basis.elements[0].dim() == n &&
                       basis.elements[0] == Operator(MonomialMatrix::identity(n));
    std::vector<Operator> adjoints;
    adjoints.reserve(basis.size());
    for (const auto &e : basis.elements) {
        adjoints.push_back(e.adjoint());
    }
    for (size_t i = 0; i < basis.size(); i++) {
        for (size_t j = 0; j < basis.size(); j++) {
            CycInt t = (adjoints[i] * basis.elements[j]).trace();
            CycInt expected = i == j ? CycInt(n) : CycInt(0);
            r.pairs_checked++;
            if (!(t == expected)) {
                r.violations.push_back({i, j, t});
            }
        }
    }
    r.pass = r.correct_count && r.identity_first && r.violations.empty();
    return r;
}

StructureConstants verify_nice(const ErrorBasis &basis) {
    size_t count = basis.size();
    bool all_monomial = true;
    for (const auto &e : basis.elements) {
        all_monomial = all_monomial && e.is_monomial();
    }
    std::unordered_map<std::string, size_t> by_key;
    if (all_monomial) {
        for (size_t k = 0; k < count; k++) {
            by_key.emplace(projective_key(basis.elements[k].monomial()), k);
        }
    }
    StructureConstants sc;
    sc.w.assign(count, std::vector<CycInt>(count));
    sc.star.assign(count, std::vector<size_t>(count, 0));
    for (size_t i = 0; i < count; i++) {
        for (size_t j = 0; j < count; j++) {
            Operator product = basis.elements[i] * basis.elements[j];
            if (all_monomial) {
                auto it = by_key.find(projective_key(product.monomial()));
                if (it == by_key.end()) {
                    throw NotNiceError(i, j);
                }
                sc.star[i][j] = it->second;
                sc.w[i][j] = *mono_proportional(product.monomial(), basis.elements[it->second].monomial());
                continue;
            }
            bool found = false;
            for (size_t k = 0; k < count && !found; k++) {
                if (!op_proportional(product, basis.elements[k])) {
                    continue;
                }
                // w = tr(E_k^dag E_i E_j) / n.
                CycInt t = (basis.elements[k].adjoint() * product).trace();
                sc.star[i][j] = k;
                sc.w[i][j] = divide_by_integer(t, basis.dim);
                found = true;
            }
            if (!found) {
                throw NotNiceError(i, j);
            }
        }
    }
    return sc;
}

GroupReport index_group(const StructureConstants &sc) {
    GroupReport r;
    size_t n = sc.size();
    r.order = n;
    r.table = sc.star;
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            if (sc.star[i][j] >= n) {
                r.closure = false;
            }
        }
    }
    if (!r.closure) {
        r.identity = r.inverses = r.associative = r.abelian = false;
        return r;
    }
    for (size_t j = 0; j < n; j++) {
        if (sc.star[0][j] != j || sc.star[j][0] != j) {
            r.identity = false;
        }
    }
    for (size_t i = 0; i < n; i++) {
        bool has_inverse = false;
        for (size_t j = 0; j < n && !has_inverse; j++) {
            has_inverse = sc.star[i][j] == 0 && sc.star[j][i] == 0;
        }
        r.inverses = r.inverses && has_inverse;
    }
    for (size_t i = 0; i < n && r.associative; i++) {
        for (size_t j = 0; j < n && r.associative; j++) {
            for (size_t k = 0; k < n; k++) {
                if (sc.star[sc.star[i][j]][k] != sc.star[i][sc.star[j][k]]) {
                    r.associative = false;
                    break;
                }
            }
        }
    }
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            if (sc.star[i][j] != sc.star[j][i]) {
                r.abelian = false;
            }
        }
    }
    return r;
}

VeryNiceReport verify_very_nice(const ErrorBasis &basis, const StructureConstants &sc) {
    VeryNiceReport r;
    CycInt one(1);
    for (size_t i = 0; i < basis.size(); i++) {
        if (!(basis.elements[i].det() == one)) {
            r.det_not_one.push_back(i);
        }
    }
    for (size_t i = 0; i < sc.size(); i++) {
        for (size_t j = 0; j < sc.size(); j++) {
            if (!(sc.w[i][j].pow(basis.dim) == one)) {
                r.w_not_nth_root.emplace_back(i, j);
            }
        }
    }
    r.pass = r.det_not_one.empty() && r.w_not_nth_root.empty();
    return r;
}

ErrorBasis normalize_det(const ErrorBasis &basis) {
    ErrorBasis r = basis;
    std::uint32_t n = basis.dim;
    for (auto &e : r.elements) {
        if (!e.is_monomial()) {
            throw std::invalid_argument("normalize_det: monomial elements only");
        }
        const MonomialMatrix &m = e.monomial();
        // det = +-zeta_m^t is a power of zeta_M with M = lcm(m, 2).
        std::uint32_t big = std::lcm(m.order(), 2u);
        CycInt det = m.det();
        std::uint32_t exponent = big;
        for (std::uint32_t k = 0; k < big; k++) {
            if (CycInt::zeta(big, k) == det) {
                exponent = k;
                break;
            }
        }
        if (exponent == big) {
            throw std::logic_error("normalize_det: determinant is not a root of unity");
        }
        // (zeta_{M n}^{-e})^n = zeta_M^{-e}.
        e = m.scalar_mul(big * n, -static_cast<std::int64_t>(exponent)).reduced();
    }
    return r;
}

Expansion expand_operator(const DenseMatrix &a, const ErrorBasis &basis) {
    if (a.dim() != basis.dim) {
        throw std::invalid_argument("expand_operator: dimension mismatch");
    }
    Expansion e;
    e.n = basis.dim;
    for (const auto &op : basis.elements) {
        CycInt t;
        if (op.is_monomial()) {
            const MonomialMatrix &m = op.monomial();
            for (std::uint32_t j = 0; j < m.dim(); j++) {
                const CycInt &x = a.at(m.perm()[j], j);
                if (!x.is_zero()) {
                    t += CycInt::zeta(m.order(), -static_cast<std::int64_t>(m.phases()[j])) * x;
                }
            }
        } else {
            t = dense_mul(op.dense().adjoint(), a).trace();
        }
        e.traces.push_back(t);
    }
    return e;
}

DenseMatrix reconstruct_scaled(const Expansion &e, const ErrorBasis &basis) {
    DenseMatrix total(basis.dim);
    for (size_t k = 0; k < basis.size(); k++) {
        if (!e.traces[k].is_zero()) {
            total = total + basis.elements[k].dense().scaled(e.traces[k]);
        }
    }
    return total;
}

CycInt commutation_product(const StructureConstants &sc, std::span<const size_t> d, std::span<const size_t> d2) {
    if (d.size() != d2.size()) {
        throw std::invalid_argument("commutation_product: index lists differ in length");
    }
    for (size_t i = 0; i < sc.size(); i++) {
        for (size_t j = 0; j < i; j++) {
            if (sc.star[i][j] != sc.star[j][i]) {
                throw std::invalid_argument("commutation_product: index group is not abelian");
            }
        }
    }
    CycInt total(1);
    for (size_t i = 0; i < d.size(); i++) {
        total *= sc.w[d[i]][d2[i]] * sc.w[d2[i]][d[i]].conj();
    }
    return total;
}

}  // namespace nb
