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

#ifndef NB_ERRORBASIS_H
#define NB_ERRORBASIS_H

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "nb/exactmat.h"

namespace nb {

/// n^2 unitary operators on an n-dimensional space, identity first.
struct ErrorBasis {
    std::uint32_t dim = 0;
    std::vector<Operator> elements;
    std::vector<std::string> labels;

    size_t size() const {
        return elements.size();
    }
};

/// How the shift/clock basis labels its elements. Element (i, j) sits at
/// position i*n + j in both cases.
enum class ShiftClockLabeling {
    /// D^i X^j with X|z> = |z+1>.
    kShift,
    /// D^i C^j with C the cyclic permutation C|z> = |z-1>; this labeling has
    /// E_{i,j} E_{k,l} = omega^{jk} E_{i+k, j+l}.
    kCyclic,
};

ErrorBasis build_shift_clock(std::uint32_t n, ShiftClockLabeling labeling = ShiftClockLabeling::kShift);
ErrorBasis tensor_basis(const ErrorBasis &a, const ErrorBasis &b);

/// {I, N, S, NS} on a qubit.
ErrorBasis qubit_basis();
/// {I, iN, iS, NS}: the determinant-one variant.
ErrorBasis qubit_basis_det_one();

struct TraceViolation {
    size_t i;
    size_t j;
    CycInt value;
};

struct OrthonormalReport {
    bool pass = true;
    bool identity_first = true;
    bool correct_count = true;
    size_t pairs_checked = 0;
    std::vector<TraceViolation> violations;
};

/// Checks tr(E_i^dag E_j) = n delta_ij over all pairs.
OrthonormalReport verify_orthonormal(const ErrorBasis &basis);

/// E_i E_j = w[i][j] E_{star[i][j]}.
struct StructureConstants {
    std::vector<std::vector<CycInt>> w;
    std::vector<std::vector<size_t>> star;

    size_t size() const {
        return star.size();
    }
};

class NotNiceError : public std::runtime_error {
   public:
    NotNiceError(size_t i, size_t j);
    size_t i;
    size_t j;
};

/// Throws NotNiceError when some product is not proportional to an element.
StructureConstants verify_nice(const ErrorBasis &basis);

using CayleyTable = std::vector<std::vector<size_t>>;

struct GroupReport {
    size_t order = 0;
    bool closure = true;
    bool identity = true;
    bool inverses = true;
    bool associative = true;
    bool abelian = true;
    CayleyTable table;

    bool is_group() const {
        return closure && identity && inverses && associative;
    }
};

/// Group axioms of the induced operation on indices, with identity at 0.
GroupReport index_group(const StructureConstants &sc);

struct VeryNiceReport {
    bool pass = true;
    std::vector<size_t> det_not_one;
    std::vector<std::pair<size_t, size_t>> w_not_nth_root;
};
VeryNiceReport verify_very_nice(const ErrorBasis &basis, const StructureConstants &sc);

/// Multiplies each element by a root of unity making its determinant one,
/// raising the phase order as needed. Monomial elements only.
ErrorBasis normalize_det(const ErrorBasis &basis);

/// n * c_k = traces[k] = tr(E_k^dag A).
struct Expansion {
    std::uint32_t n = 0;
    std::vector<CycInt> traces;
};
Expansion expand_operator(const DenseMatrix &a, const ErrorBasis &basis);
/// sum_k traces[k] E_k, which equals n * A for a complete orthonormal basis.
DenseMatrix reconstruct_scaled(const Expansion &e, const ErrorBasis &basis);

/// prod_i w[d_i][d'_i] * conj(w[d'_i][d_i]); requires an abelian index group.
CycInt commutation_product(const StructureConstants &sc, std::span<const size_t> d, std::span<const size_t> d2);

// ------------------------------------------------------------- groups

/// Closes a set of monomial matrices under multiplication. Throws if the
/// group grows past `limit` elements.
std::vector<MonomialMatrix> close_group(std::span<const MonomialMatrix> generators, size_t limit = 100000);

struct GroupInvariants {
    size_t order = 0;
    std::map<size_t, size_t> order_profile;  // element order -> count
    size_t center_size = 0;
    size_t abelianization_size = 0;
    size_t abelianization_exponent = 0;

    friend bool operator==(const GroupInvariants &, const GroupInvariants &) = default;
};
GroupInvariants group_invariants(const CayleyTable &table);

/// Cayley table of Z_2 x D_4 on elements t^a r^b s^c, index a*8 + c*4 + b.
CayleyTable z2_x_d4_table();
/// Generators (t, r, s) of z2_x_d4_table().
std::vector<size_t> z2_x_d4_generators();

/// An explicit isomorphism source -> target, as target indices per source
/// element; `generator_images` are the images of `source_generators`.
struct Isomorphism {
    std::vector<size_t> map;
    std::vector<size_t> generator_images;
};

/// Searches images of the source generators; every candidate map is checked
/// to be a bijective homomorphism on all pairs.
std::optional<Isomorphism> find_isomorphism(
    const CayleyTable &source, std::span<const size_t> source_generators, const CayleyTable &target);

// -------------------------------------------------------------- Egner basis

MonomialMatrix egner_a();
MonomialMatrix egner_b();
MonomialMatrix egner_c();

struct EgnerResult {
    std::vector<MonomialMatrix> group;
    std::vector<MonomialMatrix> center;
    std::vector<std::pair<std::string, bool>> relations;
    ErrorBasis basis;
};

/// Closes <A, B, C>, checks the defining relations, and picks the
/// lexicographically least member of each coset of the center (I for the
/// identity coset).
EgnerResult build_egner();

}  // namespace nb

#endif
