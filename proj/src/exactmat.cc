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

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nb {

namespace {

std::uint32_t mod_exponent(std::int64_t k, std::uint32_t m) {
    std::int64_t e = k % static_cast<std::int64_t>(m);
    return static_cast<std::uint32_t>(e < 0 ? e + m : e);
}

void require_same_dim(std::uint32_t a, std::uint32_t b, const char *what) {
    if (a != b) {
        throw std::invalid_argument(
            std::string(what) + ": dimension mismatch (" + std::to_string(a) + " vs " + std::to_string(b) + ")");
    }
}

}  // namespace

// ---------------------------------------------------------------- monomial

MonomialMatrix::MonomialMatrix(std::uint32_t order, std::vector<std::uint32_t> perm, std::vector<std::uint32_t> phases)
    : order_(order), perm_(std::move(perm)), phases_(std::move(phases)) {
    if (order_ == 0) {
        throw std::invalid_argument("MonomialMatrix: phase order must be positive");
    }
    if (perm_.empty() || perm_.size() != phases_.size()) {
        throw std::invalid_argument("MonomialMatrix: perm and phases must be nonempty and of equal length");
    }
    std::vector<bool> seen(perm_.size(), false);
    for (auto p : perm_) {
        if (p >= perm_.size() || seen[p]) {
            throw std::invalid_argument("MonomialMatrix: perm is not a bijection");
        }
        seen[p] = true;
    }
    for (auto &ph : phases_) {
        ph %= order_;
    }
}

MonomialMatrix MonomialMatrix::identity(std::uint32_t dim) {
    std::vector<std::uint32_t> perm(dim);
    std::iota(perm.begin(), perm.end(), 0u);
    return MonomialMatrix(1, std::move(perm), std::vector<std::uint32_t>(dim, 0));
}

MonomialMatrix MonomialMatrix::shift(std::uint32_t n) {
    std::vector<std::uint32_t> perm(n);
    for (std::uint32_t j = 0; j < n; j++) {
        perm[j] = (j + 1) % n;
    }
    return MonomialMatrix(n, std::move(perm), std::vector<std::uint32_t>(n, 0));
}

MonomialMatrix MonomialMatrix::clock(std::uint32_t n) {
    std::vector<std::uint32_t> perm(n), phases(n);
    for (std::uint32_t j = 0; j < n; j++) {
        perm[j] = j;
        phases[j] = j;
    }
    return MonomialMatrix(n, std::move(perm), std::move(phases));
}

MonomialMatrix MonomialMatrix::cyclic(std::uint32_t n) {
    std::vector<std::uint32_t> perm(n);
    for (std::uint32_t j = 0; j < n; j++) {
        perm[j] = (j + n - 1) % n;
    }
    return MonomialMatrix(n, std::move(perm), std::vector<std::uint32_t>(n, 0));
}

MonomialMatrix MonomialMatrix::lifted(std::uint32_t target) const {
    if (target == order_) {
        return *this;
    }
    if (target % order_ != 0) {
        throw std::invalid_argument("MonomialMatrix::lifted: target order is not a multiple");
    }
    std::uint32_t step = target / order_;
    std::vector<std::uint32_t> phases(phases_);
    for (auto &p : phases) {
        p *= step;
    }
    return MonomialMatrix(target, perm_, std::move(phases));
}

MonomialMatrix MonomialMatrix::reduced() const {
    std::uint32_t g = order_;
    for (auto p : phases_) {
        g = std::gcd(g, p);
    }
    std::vector<std::uint32_t> phases(phases_);
    for (auto &p : phases) {
        p /= g;
    }
    return MonomialMatrix(order_ / g, perm_, std::move(phases));
}

std::string MonomialMatrix::key() const {
    MonomialMatrix r = reduced();
    std::ostringstream out;
    out << r.dim() << ';' << r.order_ << ';';
    for (auto p : r.perm_) {
        out << p << ',';
    }
    out << ';';
    for (auto p : r.phases_) {
        out << p << ',';
    }
    return out.str();
}

CycInt MonomialMatrix::entry(std::uint32_t row, std::uint32_t col) const {
    if (perm_.at(col) != row) {
        return CycInt(0);
    }
    return CycInt::zeta(order_, phases_[col]);
}

MonomialMatrix MonomialMatrix::adjoint() const {
    std::vector<std::uint32_t> perm(dim()), phases(dim());
    for (std::uint32_t j = 0; j < dim(); j++) {
        perm[perm_[j]] = j;
        phases[perm_[j]] = (order_ - phases_[j]) % order_;
    }
    return MonomialMatrix(order_, std::move(perm), std::move(phases));
}

CycInt MonomialMatrix::trace() const {
    std::vector<BigInt> c(order_);
    for (std::uint32_t j = 0; j < dim(); j++) {
        if (perm_[j] == j) {
            c[phases_[j]] += 1;
        }
    }
    return CycInt::from_coeffs(order_, std::move(c));
}

CycInt MonomialMatrix::det() const {
    // Sign from the cycle structure: each cycle of length L contributes (-1)^(L-1).
    std::vector<bool> seen(dim(), false);
    int sign = 1;
    for (std::uint32_t j = 0; j < dim(); j++) {
        if (seen[j]) {
            continue;
        }
        std::uint32_t len = 0;
        for (std::uint32_t k = j; !seen[k]; k = perm_[k]) {
            seen[k] = true;
            len++;
        }
        if (len % 2 == 0) {
            sign = -sign;
        }
    }
    std::uint64_t total = 0;
    for (auto p : phases_) {
        total += p;
    }
    return CycInt(sign) * CycInt::zeta(order_, static_cast<std::int64_t>(total % order_));
}

MonomialMatrix MonomialMatrix::scalar_mul(std::int64_t k) const {
    return scalar_mul(order_, k);
}

MonomialMatrix MonomialMatrix::scalar_mul(std::uint32_t order, std::int64_t k) const {
    std::uint32_t m = std::lcm(order, order_);
    MonomialMatrix r = lifted(m);
    std::uint32_t add = mod_exponent(k, order) * (m / order);
    for (auto &p : r.phases_) {
        p = (p + add) % m;
    }
    return r;
}

MonomialMatrix MonomialMatrix::power(std::uint64_t k) const {
    MonomialMatrix result = identity(dim());
    MonomialMatrix base = *this;
    while (k > 0) {
        if (k & 1) {
            result = mono_compose(result, base);
        }
        k >>= 1;
        if (k > 0) {
            base = mono_compose(base, base);
        }
    }
    return result;
}

bool MonomialMatrix::is_identity() const {
    for (std::uint32_t j = 0; j < dim(); j++) {
        if (perm_[j] != j || phases_[j] != 0) {
            return false;
        }
    }
    return true;
}

bool operator==(const MonomialMatrix &a, const MonomialMatrix &b) {
    if (a.perm_ != b.perm_) {
        return false;
    }
    std::uint32_t m = std::lcm(a.order_, b.order_);
    return a.lifted(m).phases_ == b.lifted(m).phases_;
}

MonomialMatrix mono_compose(const MonomialMatrix &a, const MonomialMatrix &b) {
    require_same_dim(a.dim(), b.dim(), "mono_compose");
    std::uint32_t m = std::lcm(a.order(), b.order());
    MonomialMatrix la = a.lifted(m);
    MonomialMatrix lb = b.lifted(m);
    std::vector<std::uint32_t> perm(a.dim()), phases(a.dim());
    for (std::uint32_t j = 0; j < a.dim(); j++) {
        std::uint32_t mid = lb.perm()[j];
        perm[j] = la.perm()[mid];
        phases[j] = (lb.phases()[j] + la.phases()[mid]) % m;
    }
    return MonomialMatrix(m, std::move(perm), std::move(phases));
}

MonomialMatrix mono_tensor(const MonomialMatrix &a, const MonomialMatrix &b) {
    std::uint32_t m = std::lcm(a.order(), b.order());
    MonomialMatrix la = a.lifted(m);
    MonomialMatrix lb = b.lifted(m);
    std::uint32_t nb = b.dim();
    std::vector<std::uint32_t> perm(a.dim() * nb), phases(a.dim() * nb);
    for (std::uint32_t ja = 0; ja < a.dim(); ja++) {
        for (std::uint32_t jb = 0; jb < nb; jb++) {
            perm[ja * nb + jb] = la.perm()[ja] * nb + lb.perm()[jb];
            phases[ja * nb + jb] = (la.phases()[ja] + lb.phases()[jb]) % m;
        }
    }
    return MonomialMatrix(m, std::move(perm), std::move(phases));
}

std::optional<CycInt> mono_proportional(const MonomialMatrix &a, const MonomialMatrix &b) {
    if (a.dim() != b.dim() || a.perm() != b.perm()) {
        return std::nullopt;
    }
    std::uint32_t m = std::lcm(a.order(), b.order());
    MonomialMatrix la = a.lifted(m);
    MonomialMatrix lb = b.lifted(m);
    std::uint32_t diff = (la.phases()[0] + m - lb.phases()[0]) % m;
    for (std::uint32_t j = 1; j < a.dim(); j++) {
        if ((la.phases()[j] + m - lb.phases()[j]) % m != diff) {
            return std::nullopt;
        }
    }
    return CycInt::zeta(m, diff);
}

// ------------------------------------------------------------------- dense

DenseMatrix::DenseMatrix(std::uint32_t dim) : dim_(dim), entries_(static_cast<size_t>(dim) * dim) {
}

DenseMatrix::DenseMatrix(std::uint32_t dim, std::vector<CycInt> entries) : dim_(dim), entries_(std::move(entries)) {
    if (entries_.size() != static_cast<size_t>(dim) * dim) {
        throw std::invalid_argument("DenseMatrix: entry count must be dim*dim");
    }
}

DenseMatrix DenseMatrix::identity(std::uint32_t dim) {
    DenseMatrix r(dim);
    for (std::uint32_t i = 0; i < dim; i++) {
        r.at(i, i) = 1;
    }
    return r;
}

DenseMatrix DenseMatrix::fourier(std::uint32_t n) {
    DenseMatrix r(n);
    for (std::uint32_t i = 0; i < n; i++) {
        for (std::uint32_t j = 0; j < n; j++) {
            r.at(i, j) = CycInt::zeta(n, static_cast<std::int64_t>(i) * j);
        }
    }
    return r;
}

DenseMatrix DenseMatrix::adjoint() const {
    DenseMatrix r(dim_);
    for (std::uint32_t i = 0; i < dim_; i++) {
        for (std::uint32_t j = 0; j < dim_; j++) {
            r.at(j, i) = at(i, j).conj();
        }
    }
    return r;
}

CycInt DenseMatrix::trace() const {
    CycInt t;
    for (std::uint32_t i = 0; i < dim_; i++) {
        t += at(i, i);
    }
    return t;
}

DenseMatrix DenseMatrix::scaled(const CycInt &s) const {
    DenseMatrix r(*this);
    for (auto &e : r.entries_) {
        e = e * s;
    }
    return r;
}

std::string DenseMatrix::to_string() const {
    std::ostringstream out;
    out << "[";
    for (std::uint32_t i = 0; i < dim_; i++) {
        out << (i ? ", [" : "[");
        for (std::uint32_t j = 0; j < dim_; j++) {
            out << (j ? ", " : "") << at(i, j).to_string();
        }
        out << "]";
    }
    out << "]";
    return out.str();
}

bool operator==(const DenseMatrix &a, const DenseMatrix &b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
}

DenseMatrix operator+(const DenseMatrix &a, const DenseMatrix &b) {
    require_same_dim(a.dim_, b.dim_, "DenseMatrix::operator+");
    DenseMatrix r(a);
    for (size_t k = 0; k < r.entries_.size(); k++) {
        r.entries_[k] += b.entries_[k];
    }
    return r;
}

DenseMatrix to_dense(const MonomialMatrix &a) {
    DenseMatrix r(a.dim());
    for (std::uint32_t j = 0; j < a.dim(); j++) {
        r.at(a.perm()[j], j) = CycInt::zeta(a.order(), a.phases()[j]);
    }
    return r;
}

DenseMatrix dense_mul(const DenseMatrix &a, const DenseMatrix &b) {
    require_same_dim(a.dim(), b.dim(), "dense_mul");
    std::uint32_t n = a.dim();
    DenseMatrix r(n);
    for (std::uint32_t i = 0; i < n; i++) {
        for (std::uint32_t k = 0; k < n; k++) {
            const CycInt &aik = a.at(i, k);
            if (aik.is_zero()) {
                continue;
            }
            for (std::uint32_t j = 0; j < n; j++) {
                if (!b.at(k, j).is_zero()) {
                    r.at(i, j) += aik * b.at(k, j);
                }
            }
        }
    }
    return r;
}

DenseMatrix dense_adjoint(const DenseMatrix &a) {
    return a.adjoint();
}

bool dense_equal(const DenseMatrix &a, const DenseMatrix &b) {
    return a == b;
}

DenseMatrix dense_tensor(const DenseMatrix &a, const DenseMatrix &b) {
    std::uint32_t na = a.dim(), nb = b.dim();
    DenseMatrix r(na * nb);
    for (std::uint32_t i = 0; i < na; i++) {
        for (std::uint32_t j = 0; j < na; j++) {
            if (a.at(i, j).is_zero()) {
                continue;
            }
            for (std::uint32_t k = 0; k < nb; k++) {
                for (std::uint32_t l = 0; l < nb; l++) {
                    r.at(i * nb + k, j * nb + l) = a.at(i, j) * b.at(k, l);
                }
            }
        }
    }
    return r;
}

bool dense_scalar_check(const DenseMatrix &a, CycInt *scalar) {
    std::uint32_t n = a.dim();
    for (std::uint32_t i = 0; i < n; i++) {
        for (std::uint32_t j = 0; j < n; j++) {
            if (i != j && !a.at(i, j).is_zero()) {
                return false;
            }
        }
        if (!(a.at(i, i) == a.at(0, 0))) {
            return false;
        }
    }
    if (scalar != nullptr) {
        *scalar = a.at(0, 0);
    }
    return true;
}

std::optional<Ratio> dense_proportional(const DenseMatrix &a, const DenseMatrix &b) {
    if (a.dim() != b.dim()) {
        return std::nullopt;
    }
    std::uint32_t n = a.dim();
    std::optional<std::pair<std::uint32_t, std::uint32_t>> pivot;
    for (std::uint32_t i = 0; i < n && !pivot; i++) {
        for (std::uint32_t j = 0; j < n; j++) {
            if (!b.at(i, j).is_zero()) {
                pivot = {i, j};
                break;
            }
        }
    }
    if (!pivot) {
        return std::nullopt;
    }
    const CycInt &a0 = a.at(pivot->first, pivot->second);
    const CycInt &b0 = b.at(pivot->first, pivot->second);
    if (a0.is_zero()) {
        return std::nullopt;
    }
    for (std::uint32_t i = 0; i < n; i++) {
        for (std::uint32_t j = 0; j < n; j++) {
            const CycInt &x = a.at(i, j);
            const CycInt &y = b.at(i, j);
            if (x.is_zero() != y.is_zero()) {
                return std::nullopt;
            }
            if (!x.is_zero() && !(x * b0 == y * a0)) {
                return std::nullopt;
            }
        }
    }
    return Ratio{a0, b0};
}

// ---------------------------------------------------------------- operator

DenseMatrix Operator::dense() const {
    if (is_monomial()) {
        return to_dense(monomial());
    }
    return std::get<DenseMatrix>(rep_);
}

std::uint32_t Operator::dim() const {
    return is_monomial() ? monomial().dim() : std::get<DenseMatrix>(rep_).dim();
}

Operator Operator::adjoint() const {
    if (is_monomial()) {
        return monomial().adjoint();
    }
    return std::get<DenseMatrix>(rep_).adjoint();
}

CycInt Operator::trace() const {
    return is_monomial() ? monomial().trace() : std::get<DenseMatrix>(rep_).trace();
}

CycInt Operator::det() const {
    if (is_monomial()) {
        return monomial().det();
    }
    // Leibniz expansion; no division available in the ring.
    const DenseMatrix &d = std::get<DenseMatrix>(rep_);
    std::uint32_t n = d.dim();
    if (n > 8) {
        throw std::invalid_argument("Operator::det: dense determinant limited to dim <= 8");
    }
    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    CycInt total;
    do {
        CycInt term(1);
        for (std::uint32_t i = 0; i < n && !term.is_zero(); i++) {
            term *= d.at(i, perm[i]);
        }
        if (term.is_zero()) {
            continue;
        }
        int inversions = 0;
        for (std::uint32_t i = 0; i < n; i++) {
            for (std::uint32_t j = i + 1; j < n; j++) {
                inversions += perm[i] > perm[j];
            }
        }
        total += inversions % 2 ? -term : term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

Operator operator*(const Operator &a, const Operator &b) {
    if (a.is_monomial() && b.is_monomial()) {
        return mono_compose(a.monomial(), b.monomial());
    }
    return dense_mul(a.dense(), b.dense());
}

bool operator==(const Operator &a, const Operator &b) {
    if (a.is_monomial() && b.is_monomial()) {
        return a.monomial() == b.monomial();
    }
    return a.dense() == b.dense();
}

Operator op_tensor(const Operator &a, const Operator &b) {
    if (a.is_monomial() && b.is_monomial()) {
        return mono_tensor(a.monomial(), b.monomial());
    }
    return dense_tensor(a.dense(), b.dense());
}

std::optional<Ratio> op_proportional(const Operator &a, const Operator &b) {
    if (a.is_monomial() && b.is_monomial()) {
        auto s = mono_proportional(a.monomial(), b.monomial());
        if (!s) {
            return std::nullopt;
        }
        return Ratio{*s, CycInt(1)};
    }
    return dense_proportional(a.dense(), b.dense());
}

// ------------------------------------------------------------------- state

StateVector::StateVector(std::vector<std::uint32_t> site_dims) : site_dims_(std::move(site_dims)), dim_(1) {
    for (auto d : site_dims_) {
        if (d == 0) {
            throw std::invalid_argument("StateVector: site dimension must be positive");
        }
        if (dim_ > std::numeric_limits<Index>::max() / d) {
            throw std::invalid_argument("StateVector: total dimension overflows 64 bits");
        }
        dim_ *= d;
    }
}

StateVector StateVector::basis(std::vector<std::uint32_t> site_dims, Index index) {
    StateVector s(std::move(site_dims));
    if (index >= s.dim_) {
        throw std::out_of_range("StateVector::basis: index out of range");
    }
    s.add(index, CycInt(1));
    return s;
}

CycInt StateVector::amplitude(Index index) const {
    auto it = amps_.find(index);
    return it == amps_.end() ? CycInt(0) : it->second;
}

void StateVector::add(Index index, const CycInt &value) {
    if (index >= dim_) {
        throw std::out_of_range("StateVector::add: index out of range");
    }
    if (value.is_zero()) {
        return;
    }
    std::uint32_t m = std::lcm(order_, value.order());
    if (m != order_) {
        for (auto &[k, v] : amps_) {
            v = v.lifted(m);
        }
        order_ = m;
    }
    auto it = amps_.find(index);
    if (it == amps_.end()) {
        amps_.emplace(index, value.lifted(m));
        return;
    }
    it->second += value;
    if (it->second.is_zero()) {
        amps_.erase(it);
    }
}

StateVector::Index StateVector::encode(std::span<const std::uint32_t> digits) const {
    if (digits.size() != site_dims_.size()) {
        throw std::invalid_argument("StateVector::encode: wrong digit count");
    }
    Index idx = 0;
    for (size_t i = 0; i < digits.size(); i++) {
        if (digits[i] >= site_dims_[i]) {
            throw std::out_of_range("StateVector::encode: digit out of range");
        }
        idx = idx * site_dims_[i] + digits[i];
    }
    return idx;
}

std::vector<std::uint32_t> StateVector::decode(Index index) const {
    std::vector<std::uint32_t> digits(site_dims_.size());
    for (size_t i = site_dims_.size(); i-- > 0;) {
        digits[i] = static_cast<std::uint32_t>(index % site_dims_[i]);
        index /= site_dims_[i];
    }
    return digits;
}

StateVector StateVector::scaled(const CycInt &s) const {
    StateVector r(site_dims_);
    for (const auto &[k, v] : amps_) {
        r.add(k, v * s);
    }
    return r;
}

void StateVector::require_same_shape(const StateVector &other) const {
    if (site_dims_ != other.site_dims_) {
        throw std::invalid_argument("StateVector: site dimensions differ");
    }
}

StateVector &StateVector::operator+=(const StateVector &other) {
    require_same_shape(other);
    for (const auto &[k, v] : other.amps_) {
        add(k, v);
    }
    return *this;
}

StateVector &StateVector::operator-=(const StateVector &other) {
    require_same_shape(other);
    for (const auto &[k, v] : other.amps_) {
        add(k, -v);
    }
    return *this;
}

bool operator==(const StateVector &a, const StateVector &b) {
    return a.site_dims_ == b.site_dims_ && a.amps_ == b.amps_;
}

StateVector apply_mono(std::span<const MonomialMatrix> ops, const StateVector &s) {
    if (ops.size() != s.num_sites()) {
        throw std::invalid_argument("apply_mono: need one operator per site");
    }
    std::uint32_t m = 1;
    for (size_t i = 0; i < ops.size(); i++) {
        require_same_dim(ops[i].dim(), s.site_dims()[i], "apply_mono");
        m = std::lcm(m, ops[i].order());
    }
    std::vector<CycInt> roots(m);
    for (std::uint32_t k = 0; k < m; k++) {
        roots[k] = CycInt::zeta(m, k);
    }
    StateVector out(s.site_dims());
    for (const auto &[idx, amp] : s.amplitudes()) {
        auto digits = s.decode(idx);
        std::uint64_t phase = 0;
        for (size_t i = 0; i < ops.size(); i++) {
            std::uint32_t d = digits[i];
            phase += static_cast<std::uint64_t>(ops[i].phases()[d]) * (m / ops[i].order());
            digits[i] = ops[i].perm()[d];
        }
        phase %= m;
        out.add(out.encode(digits), phase == 0 ? amp : amp * roots[phase]);
    }
    return out;
}

StateVector apply_ops(std::span<const Operator> ops, const StateVector &s) {
    if (ops.size() != s.num_sites()) {
        throw std::invalid_argument("apply_ops: need one operator per site");
    }
    std::vector<MonomialMatrix> mono;
    mono.reserve(ops.size());
    for (size_t i = 0; i < ops.size(); i++) {
        require_same_dim(ops[i].dim(), s.site_dims()[i], "apply_ops");
        mono.push_back(ops[i].is_monomial() ? ops[i].monomial() : MonomialMatrix::identity(ops[i].dim()));
    }
    StateVector cur = apply_mono(mono, s);
    for (size_t i = 0; i < ops.size(); i++) {
        if (ops[i].is_monomial()) {
            continue;
        }
        DenseMatrix d = ops[i].dense();
        StateVector next(s.site_dims());
        for (const auto &[idx, amp] : cur.amplitudes()) {
            auto digits = cur.decode(idx);
            std::uint32_t col = digits[i];
            for (std::uint32_t row = 0; row < d.dim(); row++) {
                if (d.at(row, col).is_zero()) {
                    continue;
                }
                digits[i] = row;
                next.add(next.encode(digits), d.at(row, col) * amp);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

StateVector apply_basis_map(
    const StateVector &s, const std::function<void(std::vector<std::uint32_t> &)> &map_digits) {
    StateVector out(s.site_dims());
    for (const auto &[idx, amp] : s.amplitudes()) {
        auto digits = s.decode(idx);
        map_digits(digits);
        out.add(out.encode(digits), amp);
    }
    return out;
}

StateVector state_tensor(const StateVector &a, const StateVector &b) {
    std::vector<std::uint32_t> dims = a.site_dims();
    dims.insert(dims.end(), b.site_dims().begin(), b.site_dims().end());
    StateVector out(std::move(dims));
    for (const auto &[ia, va] : a.amplitudes()) {
        for (const auto &[ib, vb] : b.amplitudes()) {
            out.add(ia * b.dim() + ib, va * vb);
        }
    }
    return out;
}

CycInt inner_product(const StateVector &u, const StateVector &v) {
    if (u.site_dims() != v.site_dims()) {
        throw std::invalid_argument("inner_product: dimension mismatch");
    }
    CycInt total;
    const auto &small = u.support_size() <= v.support_size() ? u : v;
    const auto &large = &small == &u ? v : u;
    for (const auto &[k, a] : small.amplitudes()) {
        auto it = large.amplitudes().find(k);
        if (it == large.amplitudes().end()) {
            continue;
        }
        const CycInt &uk = &small == &u ? a : it->second;
        const CycInt &vk = &small == &u ? it->second : a;
        total += uk.conj() * vk;
    }
    return total;
}

std::optional<Ratio> proportional(const StateVector &u, const StateVector &v) {
    if (u.site_dims() != v.site_dims() || u.is_zero() || v.is_zero()) {
        return std::nullopt;
    }
    if (u.support_size() != v.support_size()) {
        return std::nullopt;
    }
    const CycInt &u0 = u.amplitudes().begin()->second;
    const CycInt &v0 = v.amplitudes().begin()->second;
    auto it = v.amplitudes().begin();
    for (const auto &[k, a] : u.amplitudes()) {
        if (it->first != k) {
            return std::nullopt;
        }
        if (!(a * v0 == it->second * u0)) {
            return std::nullopt;
        }
        ++it;
    }
    return Ratio{u0, v0};
}

std::string render(const StateVector &s) {
    std::ostringstream out;
    bool first = true;
    for (const auto &[idx, amp] : s.amplitudes()) {
        out << (first ? "" : " + ") << "(" << amp.to_string() << ")|";
        for (auto d : s.decode(idx)) {
            out << d;
        }
        out << ">";
        first = false;
    }
    if (first) {
        out << "0";
    }
    return out.str();
}

}  // namespace nb
