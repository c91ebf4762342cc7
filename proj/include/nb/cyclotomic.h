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

#ifndef NB_CYCLOTOMIC_H
#define NB_CYCLOTOMIC_H

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace nb {

using BigInt = boost::multiprecision::cpp_int;

/// Coefficients of the m-th cyclotomic polynomial, lowest degree first.
/// The result is monic of degree phi(m). Results are memoized.
const std::vector<std::int64_t> &cyclotomic_poly(std::uint32_t m);

/// Euler's totient.
std::uint32_t euler_phi(std::uint32_t m);

std::uint32_t lcm_order(std::uint32_t a, std::uint32_t b);

/// An exact element of Z[zeta_m], zeta_m = exp(2 pi i / m).
///
/// Stored as a length-m coefficient vector over powers of zeta_m, always kept
/// in canonical form: reduced modulo Phi_m, so only the first phi(m) entries
/// can be nonzero. Two values of different orders are compared (and combined)
/// after lifting both to the lcm of their orders.
class CycInt {
   public:
    CycInt();
    CycInt(std::int64_t value);  // NOLINT: integers embed implicitly
    CycInt(const BigInt &value);  // NOLINT

    /// zeta_m^k, with k taken modulo m.
    static CycInt zeta(std::uint32_t m, std::int64_t k = 1);
    /// Canonicalizes an arbitrary coefficient vector of length m.
    static CycInt from_coeffs(std::uint32_t m, std::vector<BigInt> coeffs);

    std::uint32_t order() const {
        return order_;
    }
    const std::vector<BigInt> &coeffs() const {
        return coeffs_;
    }
    bool is_zero() const;

    /// The same element re-expressed over zeta_target; target must be a
    /// multiple of order().
    CycInt lifted(std::uint32_t target) const;

    CycInt conj() const;
    /// k-th power for k >= 0.
    CycInt pow(std::uint64_t k) const;
    std::complex<double> embed_complex() const;

    /// "a0 + a1*z + ... (z = zeta_m)".
    std::string to_string() const;

    CycInt operator-() const;
    CycInt &operator+=(const CycInt &other);
    CycInt &operator-=(const CycInt &other);
    CycInt &operator*=(const CycInt &other);
    friend CycInt operator+(CycInt a, const CycInt &b) {
        return a += b;
    }
    friend CycInt operator-(CycInt a, const CycInt &b) {
        return a -= b;
    }
    friend CycInt operator*(const CycInt &a, const CycInt &b);
    friend bool operator==(const CycInt &a, const CycInt &b);

   private:
    CycInt(std::uint32_t order, std::vector<BigInt> coeffs, bool canonical);
    void canonicalize();

    std::uint32_t order_;
    std::vector<BigInt> coeffs_;
};

/// Reduces a coefficient vector of length m modulo Phi_m in place.
void reduce_mod_cyclotomic(std::uint32_t m, std::vector<BigInt> &coeffs);

std::ostream &operator<<(std::ostream &out, const CycInt &value);

}  // namespace nb

#endif
