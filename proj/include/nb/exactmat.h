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

#ifndef NB_EXACTMAT_H
#define NB_EXACTMAT_H

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "nb/cyclotomic.h"

namespace nb {

/// A generalized permutation matrix whose nonzero entries are powers of
/// zeta_order: M|j> = zeta^{phases[j]} |perm[j]>.
class MonomialMatrix {
   public:
    MonomialMatrix(std::uint32_t order, std::vector<std::uint32_t> perm, std::vector<std::uint32_t> phases);

    static MonomialMatrix identity(std::uint32_t dim);
    /// X|z> = |z+1 mod n>.
    static MonomialMatrix shift(std::uint32_t n);
    /// D|z> = omega^z |z>, omega = zeta_n.
    static MonomialMatrix clock(std::uint32_t n);
    /// The cyclic permutation with entries delta_{j, i+1}: C|z> = |z-1 mod n>.
    static MonomialMatrix cyclic(std::uint32_t n);

    std::uint32_t dim() const {
        return static_cast<std::uint32_t>(perm_.size());
    }
    std::uint32_t order() const {
        return order_;
    }
    const std::vector<std::uint32_t> &perm() const {
        return perm_;
    }
    const std::vector<std::uint32_t> &phases() const {
        return phases_;
    }

    MonomialMatrix lifted(std::uint32_t target) const;
    /// Same matrix over the smallest phase order that represents it.
    MonomialMatrix reduced() const;
    /// Serialized (dim, order, perm, phases) of reduced(); equal matrices
    /// have equal keys.
    std::string key() const;

    /// Entry in row `row`, column `col`.
    CycInt entry(std::uint32_t row, std::uint32_t col) const;

    MonomialMatrix adjoint() const;
    CycInt trace() const;
    CycInt det() const;
    /// zeta_order^k times this matrix.
    MonomialMatrix scalar_mul(std::int64_t k) const;
    MonomialMatrix scalar_mul(std::uint32_t order, std::int64_t k) const;
    MonomialMatrix power(std::uint64_t k) const;
    bool is_identity() const;

    friend bool operator==(const MonomialMatrix &a, const MonomialMatrix &b);

   private:
    std::uint32_t order_;
    std::vector<std::uint32_t> perm_;
    std::vector<std::uint32_t> phases_;
};

/// a∘b: apply b first.
MonomialMatrix mono_compose(const MonomialMatrix &a, const MonomialMatrix &b);
MonomialMatrix mono_tensor(const MonomialMatrix &a, const MonomialMatrix &b);

/// If a = zeta^k b for some root of unity, returns that root (as a CycInt).
std::optional<CycInt> mono_proportional(const MonomialMatrix &a, const MonomialMatrix &b);

/// Square matrix over CycInt, row-major.
class DenseMatrix {
   public:
    explicit DenseMatrix(std::uint32_t dim);
    DenseMatrix(std::uint32_t dim, std::vector<CycInt> entries);

    static DenseMatrix identity(std::uint32_t dim);
    /// Unnormalized Fourier matrix F_{ij} = omega^{ij}.
    static DenseMatrix fourier(std::uint32_t n);

    std::uint32_t dim() const {
        return dim_;
    }
    const CycInt &at(std::uint32_t row, std::uint32_t col) const {
        return entries_[static_cast<size_t>(row) * dim_ + col];
    }
    CycInt &at(std::uint32_t row, std::uint32_t col) {
        return entries_[static_cast<size_t>(row) * dim_ + col];
    }

    DenseMatrix adjoint() const;
    CycInt trace() const;
    DenseMatrix scaled(const CycInt &s) const;
    std::string to_string() const;

    friend bool operator==(const DenseMatrix &a, const DenseMatrix &b);
    friend DenseMatrix operator+(const DenseMatrix &a, const DenseMatrix &b);

   private:
    std::uint32_t dim_;
    std::vector<CycInt> entries_;
};

DenseMatrix to_dense(const MonomialMatrix &a);
DenseMatrix dense_mul(const DenseMatrix &a, const DenseMatrix &b);
DenseMatrix dense_adjoint(const DenseMatrix &a);
bool dense_equal(const DenseMatrix &a, const DenseMatrix &b);
DenseMatrix dense_tensor(const DenseMatrix &a, const DenseMatrix &b);
/// True iff a = s * I for some scalar s; the scalar is written to `scalar`.
bool dense_scalar_check(const DenseMatrix &a, CycInt *scalar = nullptr);

/// Evidence that a = (numerator / denominator) * b, found without division.
struct Ratio {
    CycInt numerator;
    CycInt denominator;
};
std::optional<Ratio> dense_proportional(const DenseMatrix &a, const DenseMatrix &b);

/// A single-site operator: monomial where possible, dense otherwise.
class Operator {
   public:
    Operator(MonomialMatrix m) : rep_(std::move(m)) {  // NOLINT
    }
    Operator(DenseMatrix d) : rep_(std::move(d)) {  // NOLINT
    }

    bool is_monomial() const {
        return std::holds_alternative<MonomialMatrix>(rep_);
    }
    const MonomialMatrix &monomial() const {
        return std::get<MonomialMatrix>(rep_);
    }
    DenseMatrix dense() const;
    std::uint32_t dim() const;

    Operator adjoint() const;
    CycInt trace() const;
    CycInt det() const;

    friend Operator operator*(const Operator &a, const Operator &b);
    friend bool operator==(const Operator &a, const Operator &b);

   private:
    std::variant<MonomialMatrix, DenseMatrix> rep_;
};

Operator op_tensor(const Operator &a, const Operator &b);
/// If a = s b for a nonzero scalar, returns s as a ratio.
std::optional<Ratio> op_proportional(const Operator &a, const Operator &b);

/// Sparse state on a tensor product of sites. Basis indices are encoded
/// big-endian mixed radix: site 0 is the most significant digit.
class StateVector {
   public:
    using Index = std::uint64_t;

    explicit StateVector(std::vector<std::uint32_t> site_dims);
    static StateVector basis(std::vector<std::uint32_t> site_dims, Index index);

    const std::vector<std::uint32_t> &site_dims() const {
        return site_dims_;
    }
    std::uint32_t num_sites() const {
        return static_cast<std::uint32_t>(site_dims_.size());
    }
    Index dim() const {
        return dim_;
    }
    std::uint32_t order() const {
        return order_;
    }
    const std::map<Index, CycInt> &amplitudes() const {
        return amps_;
    }
    size_t support_size() const {
        return amps_.size();
    }
    bool is_zero() const {
        return amps_.empty();
    }
    CycInt amplitude(Index index) const;

    /// Adds `value` to the amplitude at `index`, dropping it if it cancels.
    void add(Index index, const CycInt &value);

    Index encode(std::span<const std::uint32_t> digits) const;
    std::vector<std::uint32_t> decode(Index index) const;

    StateVector scaled(const CycInt &s) const;
    StateVector &operator+=(const StateVector &other);
    StateVector &operator-=(const StateVector &other);
    friend StateVector operator+(StateVector a, const StateVector &b) {
        return a += b;
    }
    friend StateVector operator-(StateVector a, const StateVector &b) {
        return a -= b;
    }
    friend bool operator==(const StateVector &a, const StateVector &b);

   private:
    void require_same_shape(const StateVector &other) const;

    std::vector<std::uint32_t> site_dims_;
    Index dim_;
    std::uint32_t order_ = 1;
    std::map<Index, CycInt> amps_;
};

/// Applies ops[i] to site i. Cost is linear in the support size.
StateVector apply_mono(std::span<const MonomialMatrix> ops, const StateVector &s);
/// Applies a (possibly dense) operator to each site; empty operators skip.
StateVector apply_ops(std::span<const Operator> ops, const StateVector &s);
/// Applies a basis permutation given on digit vectors.
StateVector apply_basis_map(
    const StateVector &s, const std::function<void(std::vector<std::uint32_t> &)> &map_digits);

/// Tensor product state; a's sites come first.
StateVector state_tensor(const StateVector &a, const StateVector &b);

CycInt inner_product(const StateVector &u, const StateVector &v);
/// Decides u = s v for a nonzero scalar s without division; the ratio is
/// reported at the first support index.
std::optional<Ratio> proportional(const StateVector &u, const StateVector &v);

std::string render(const StateVector &s);

}  // namespace nb

#endif
