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

#include "nb/cyclotomic.h"

#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nb {

namespace {

// Exact division of `num` by a monic `den`; both lowest degree first.
std::vector<std::int64_t> divide_monic(std::vector<std::int64_t> num, const std::vector<std::int64_t> &den) {
    size_t dd = den.size() - 1;
    if (num.size() < den.size()) {
        throw std::logic_error("divide_monic: degree too small");
    }
    std::vector<std::int64_t> quot(num.size() - dd, 0);
    for (size_t k = num.size(); k-- > dd;) {
        std::int64_t c = num[k];
        quot[k - dd] = c;
        if (c == 0) {
            continue;
        }
        for (size_t t = 0; t <= dd; t++) {
            num[k - dd + t] -= c * den[t];
        }
    }
    for (size_t k = 0; k < dd; k++) {
        if (num[k] != 0) {
            throw std::logic_error("divide_monic: nonzero remainder");
        }
    }
    return quot;
}

std::mutex poly_mutex;
std::map<std::uint32_t, std::vector<std::int64_t>> poly_cache;

const std::vector<std::int64_t> &cyclotomic_poly_locked(std::uint32_t m) {
    auto it = poly_cache.find(m);
    if (it != poly_cache.end()) {
        return it->second;
    }
    std::vector<std::int64_t> p(m + 1, 0);
    p[0] = -1;
    p[m] = 1;
    for (std::uint32_t d = 1; d < m; d++) {
        if (m % d == 0) {
            p = divide_monic(std::move(p), cyclotomic_poly_locked(d));
        }
    }
    return poly_cache.emplace(m, std::move(p)).first->second;
}

}  // namespace

const std::vector<std::int64_t> &cyclotomic_poly(std::uint32_t m) {
    if (m == 0) {
        throw std::invalid_argument("cyclotomic_poly: order must be positive");
    }
    std::lock_guard<std::mutex> lock(poly_mutex);
    return cyclotomic_poly_locked(m);
}

std::uint32_t euler_phi(std::uint32_t m) {
    std::uint32_t result = m;
    for (std::uint32_t p = 2; p * p <= m; p++) {
        if (m % p == 0) {
            while (m % p == 0) {
                m /= p;
            }
            result -= result / p;
        }
    }
    if (m > 1) {
        result -= result / m;
    }
    return result;
}

std::uint32_t lcm_order(std::uint32_t a, std::uint32_t b) {
    return std::lcm(a, b);
}

void reduce_mod_cyclotomic(std::uint32_t m, std::vector<BigInt> &coeffs) {
    const auto &phi = cyclotomic_poly(m);
    size_t deg = phi.size() - 1;
    for (size_t k = coeffs.size(); k-- > deg;) {
        if (coeffs[k].is_zero()) {
            continue;
        }
        BigInt c = coeffs[k];
        coeffs[k] = 0;
        for (size_t t = 0; t < deg; t++) {
            if (phi[t] != 0) {
                coeffs[k - deg + t] -= c * phi[t];
            }
        }
    }
}

CycInt::CycInt() : order_(1), coeffs_(1) {
}

CycInt::CycInt(std::int64_t value) : order_(1), coeffs_{BigInt(value)} {
}

CycInt::CycInt(const BigInt &value) : order_(1), coeffs_{value} {
}

CycInt::CycInt(std::uint32_t order, std::vector<BigInt> coeffs, bool canonical)
    : order_(order), coeffs_(std::move(coeffs)) {
    if (!canonical) {
        canonicalize();
    }
}

CycInt CycInt::zeta(std::uint32_t m, std::int64_t k) {
    if (m == 0) {
        throw std::invalid_argument("CycInt::zeta: order must be positive");
    }
    std::int64_t e = k % static_cast<std::int64_t>(m);
    if (e < 0) {
        e += m;
    }
    std::vector<BigInt> c(m);
    c[e] = 1;
    return CycInt(m, std::move(c), false);
}

CycInt CycInt::from_coeffs(std::uint32_t m, std::vector<BigInt> coeffs) {
    if (m == 0) {
        throw std::invalid_argument("CycInt::from_coeffs: order must be positive");
    }
    if (coeffs.size() != m) {
        throw std::invalid_argument("CycInt::from_coeffs: need exactly m coefficients");
    }
    return CycInt(m, std::move(coeffs), false);
}

void CycInt::canonicalize() {
    reduce_mod_cyclotomic(order_, coeffs_);
}

bool CycInt::is_zero() const {
    for (const auto &c : coeffs_) {
        if (!c.is_zero()) {
            return false;
        }
    }
    return true;
}

CycInt CycInt::lifted(std::uint32_t target) const {
    if (target == order_) {
        return *this;
    }
    if (target % order_ != 0) {
        throw std::invalid_argument("CycInt::lifted: target order is not a multiple");
    }
    std::uint32_t step = target / order_;
    std::vector<BigInt> c(target);
    for (std::uint32_t k = 0; k < order_; k++) {
        c[k * step] = coeffs_[k];
    }
    return CycInt(target, std::move(c), false);
}

CycInt CycInt::conj() const {
    std::vector<BigInt> c(order_);
    for (std::uint32_t k = 0; k < order_; k++) {
        c[(order_ - k) % order_] = coeffs_[k];
    }
    return CycInt(order_, std::move(c), false);
}

CycInt CycInt::pow(std::uint64_t k) const {
    CycInt result = CycInt(1).lifted(order_);
    CycInt base = *this;
    while (k > 0) {
        if (k & 1) {
            result *= base;
        }
        k >>= 1;
        if (k > 0) {
            base *= base;
        }
    }
    return result;
}

std::complex<double> CycInt::embed_complex() const {
    std::complex<double> total = 0;
    for (std::uint32_t k = 0; k < order_; k++) {
        if (coeffs_[k].is_zero()) {
            continue;
        }
        double angle = 2 * std::numbers::pi * k / order_;
        total += coeffs_[k].convert_to<double>() * std::polar(1.0, angle);
    }
    return total;
}

std::string CycInt::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (std::uint32_t k = 0; k < order_; k++) {
        if (coeffs_[k].is_zero()) {
            continue;
        }
        BigInt c = coeffs_[k];
        if (!first) {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) {
                c = -c;
            }
        }
        first = false;
        out << c;
        if (k == 1) {
            out << "*z";
        } else if (k > 1) {
            out << "*z^" << k;
        }
    }
    if (first) {
        out << "0";
    }
    if (order_ > 2) {
        out << " (z = zeta_" << order_ << ")";
    }
    return out.str();
}

CycInt CycInt::operator-() const {
    CycInt r = *this;
    for (auto &c : r.coeffs_) {
        c = -c;
    }
    return r;
}

CycInt &CycInt::operator+=(const CycInt &other) {
    std::uint32_t m = std::lcm(order_, other.order_);
    if (m != order_) {
        *this = lifted(m);
    }
    if (other.order_ == m) {
        for (std::uint32_t k = 0; k < m; k++) {
            coeffs_[k] += other.coeffs_[k];
        }
    } else {
        std::uint32_t step = m / other.order_;
        for (std::uint32_t k = 0; k < other.order_; k++) {
            coeffs_[k * step] += other.coeffs_[k];
        }
        canonicalize();
    }
    return *this;
}

CycInt &CycInt::operator-=(const CycInt &other) {
    return *this += -other;
}

CycInt &CycInt::operator*=(const CycInt &other) {
    *this = *this * other;
    return *this;
}

CycInt operator*(const CycInt &a, const CycInt &b) {
    std::uint32_t m = std::lcm(a.order_, b.order_);
    const CycInt &x = a.order_ == m ? a : a.lifted(m);
    CycInt y_storage;
    const CycInt *y = &b;
    if (b.order_ != m) {
        y_storage = b.lifted(m);
        y = &y_storage;
    }
    // Canonical inputs are supported on the first phi(m) positions.
    size_t deg = cyclotomic_poly(m).size() - 1;
    std::vector<BigInt> c(m);
    for (size_t i = 0; i < deg && i < m; i++) {
        if (x.coeffs_[i].is_zero()) {
            continue;
        }
        for (size_t j = 0; j < deg && j < m; j++) {
            if (y->coeffs_[j].is_zero()) {
                continue;
            }
            c[(i + j) % m] += x.coeffs_[i] * y->coeffs_[j];
        }
    }
    return CycInt(m, std::move(c), false);
}

bool operator==(const CycInt &a, const CycInt &b) {
    if (a.order_ == b.order_) {
        return a.coeffs_ == b.coeffs_;
    }
    std::uint32_t m = std::lcm(a.order_, b.order_);
    return a.lifted(m).coeffs_ == b.lifted(m).coeffs_;
}

std::ostream &operator<<(std::ostream &out, const CycInt &value) {
    return out << value.to_string();
}

}  // namespace nb
