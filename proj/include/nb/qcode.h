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

#ifndef NB_QCODE_H
#define NB_QCODE_H

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nb/exactmat.h"
#include "nb/zncodes.h"

namespace nb {

/// Index of the error operator E(x, y): |z> -> omega^{x.z} |z + y>, applied
/// site-wise. x is the phase part, y the shift part.
struct ErrorIndex {
    Word x;
    Word y;

    static ErrorIndex identity(std::uint32_t sites);

    std::uint32_t sites() const {
        return static_cast<std::uint32_t>(x.size());
    }
    /// Number of sites where (x_i, y_i) != (0, 0).
    size_t weight() const;
    bool is_identity() const;
    std::string to_string() const;

    friend bool operator==(const ErrorIndex &a, const ErrorIndex &b) = default;
    /// Weight first, then lexicographic on the per-site pairs (x_i, y_i).
    friend bool operator<(const ErrorIndex &a, const ErrorIndex &b);
};

ErrorIndex error_add(const ErrorIndex &a, const ErrorIndex &b, std::uint32_t n);
ErrorIndex error_sub(const ErrorIndex &a, const ErrorIndex &b, std::uint32_t n);

/// (y.x' - x.y') mod n. With the E(x, y) convention above,
/// E(d) E(d') = omega^{-sp(d, d')} E(d') E(d).
std::uint32_t symplectic_product(const ErrorIndex &d, const ErrorIndex &d2, std::uint32_t n);

/// Per-site operators X^{y_i} D^{x_i}.
std::vector<MonomialMatrix> error_operators(const ErrorIndex &d, std::uint32_t n);
StateVector apply_error(const ErrorIndex &d, const StateVector &s, std::uint32_t n);
/// Applies E(d)^dag.
StateVector apply_error_adjoint(const ErrorIndex &d, const StateVector &s, std::uint32_t n);

/// Visits every index of weight <= max_weight, weight by weight; the visited
/// object is reused between calls. Unordered within a weight.
void for_each_error(
    std::uint32_t n, std::uint32_t sites, size_t max_weight, const std::function<void(const ErrorIndex &)> &visit);
/// Every index of weight <= max_weight on `sites` sites, sorted by operator<.
std::vector<ErrorIndex> enumerate_errors(
    std::uint32_t n, std::uint32_t sites, size_t max_weight, const Guards &guards = {});
/// Number of indices of weight <= max_weight, saturating at UINT64_MAX.
std::uint64_t count_errors(std::uint32_t n, std::uint32_t sites, size_t max_weight);

/// Which punctured code supplies the phase and shift parts of the stabilizer
/// generators.
enum class Convention {
    /// Phase parts from C'_0, shift parts from D'_0.
    kLiteral,
    /// Phase parts from D'_0, shift parts from C'_0.
    kSwapped,
    /// Try kLiteral, then kSwapped.
    kAuto,
};
std::string convention_name(Convention c);
Convention parse_convention(const std::string &name);

struct NamedCheck {
    std::string name;
    bool pass;
    std::string detail;
};

class CodeConstructionError : public std::runtime_error {
   public:
    CodeConstructionError(std::string check, const std::string &detail);
    std::string check;
};

struct PuncturedQuantumCode {
    std::uint32_t n = 2;
    std::uint32_t l = 1;
    LinearCodeZn c;
    LinearCodeZn d;
    LinearCodeZn cp;  // C'
    LinearCodeZn c0;  // C'_0
    LinearCodeZn dp;  // D'
    LinearCodeZn d0;  // D'_0
    Word e1p;         // e'_1
    Convention convention = Convention::kSwapped;
    bool literal_ok = false;
    bool swapped_ok = false;
    std::vector<ErrorIndex> generators;
    std::vector<NamedCheck> checks;

    std::vector<std::uint32_t> site_dims() const {
        return std::vector<std::uint32_t>(l, n);
    }
    /// e'_i = i e'_1.
    Word e_prime(std::uint32_t i) const;
    /// Phase-part and shift-part codes of the stabilizer under `convention`.
    const LinearCodeZn &phase_code() const;
    const LinearCodeZn &shift_code() const;
};

/// Phase-type generators first, then shift-type.
std::vector<ErrorIndex> stabilizer_generators(const LinearCodeZn &phase_part, const LinearCodeZn &shift_part);

/// Builds the punctured code from C (and D, defaulting to dual(C)).
/// Throws CodeConstructionError naming the failed check.
PuncturedQuantumCode build_code(
    const LinearCodeZn &c, const std::optional<LinearCodeZn> &d = std::nullopt, Convention convention = Convention::kAuto,
    const Guards &guards = {});

/// sum over z in C'_0 + e'_i of |z>, all amplitudes one.
StateVector logical_state(const PuncturedQuantumCode &code, std::uint32_t i);

/// sum over z in C'_0 of omega^{c_x.z} |z + e'_i + d_y>.
StateVector syndrome_state(const PuncturedQuantumCode &code, const Word &cx, const Word &dy, std::uint32_t i);

struct EigenspaceReport {
    bool pass = true;
    /// Eigenvalue per generator; absent where the check failed.
    std::vector<std::optional<CycInt>> eigenvalues;
    std::vector<std::string> witnesses;
};
EigenspaceReport verify_eigenspace(const PuncturedQuantumCode &code);
EigenspaceReport verify_eigenspace(const PuncturedQuantumCode &code, const std::vector<ErrorIndex> &generators);

// ------------------------------------------------------------ KL conditions

/// <i_L| E_a^dag E_b |j_L> for every i, j (row-major, n x n), unnormalized.
struct KlCell {
    size_t a;
    size_t b;
    std::vector<CycInt> elements;

    /// lambda_{a,b}: the common diagonal value (valid when the cell passes).
    const CycInt &lambda() const {
        return elements[0];
    }
    friend bool operator==(const KlCell &, const KlCell &) = default;
};

struct KlViolation {
    size_t a;
    size_t b;
    std::uint32_t i;
    std::uint32_t j;
    CycInt value;
    std::string kind;  // "off-diagonal" or "diagonal-varies"
};

struct KlResult {
    bool pass = true;
    size_t e = 0;
    std::vector<ErrorIndex> errors;
    size_t pairs_checked = 0;
    size_t violation_count = 0;
    std::vector<KlViolation> violations;  // first few
    std::vector<KlCell> table;           // filled when requested
};

KlResult kl_check_exhaustive(
    const PuncturedQuantumCode &code, size_t e, bool store_table = true, const Guards &guards = {});
/// Same verdict and table without building states: each matrix element is a
/// coset test on the shift part plus a character sum over C'_0.
KlResult kl_check_fast(const PuncturedQuantumCode &code, size_t e, bool store_table = true, const Guards &guards = {});

/// One cell by the coset test and character sum, without states.
KlCell kl_cell_fast(const PuncturedQuantumCode &code, const ErrorIndex &a, const ErrorIndex &b);

/// One cell computed from states, for spot checks on codes too large for the
/// full exhaustive table.
KlCell kl_cell_exhaustive(const PuncturedQuantumCode &code, const ErrorIndex &a, const ErrorIndex &b);

/// sum over z in C'_0 of omega^{x.z}, by direct summation.
CycInt character_sum(const PuncturedQuantumCode &code, const Word &x);

struct DistanceCertificate {
    size_t e = 0;
    size_t min_weight_cp = 0;
    size_t min_weight_dp = 0;
    bool by_min_weight = false;
    bool scan_done = false;
    bool by_scan = false;
    size_t scanned = 0;
    size_t centralizer_hits = 0;        // nonzero, weight <= 2e, commuting with H
    size_t membership_failures = 0;     // hits whose parts are outside C' x D'
    size_t logical_hits = 0;            // hits acting nontrivially on the code
    std::string note;

    bool agree() const {
        return !scan_done || by_min_weight == by_scan;
    }
    bool pass() const {
        return by_min_weight && (!scan_done || by_scan) && membership_failures == 0;
    }
};
DistanceCertificate distance_certificate(const PuncturedQuantumCode &code, size_t e, const Guards &guards = {});

// ----------------------------------------------------------------- decoding

/// Commutation exponents of d against each stabilizer generator.
Word syndrome_of(const ErrorIndex &d, const PuncturedQuantumCode &code);

class SyndromeCollision : public std::runtime_error {
   public:
    SyndromeCollision(ErrorIndex first, ErrorIndex second);
    ErrorIndex first;
    ErrorIndex second;
};

class DecoderMiss : public std::runtime_error {
   public:
    explicit DecoderMiss(const Word &syndrome);
};

struct Decoder {
    size_t e = 0;
    bool strict = true;
    std::map<Word, ErrorIndex> table;
    /// n^{2l} / (|C'| |D'|): the number of distinct syndromes.
    std::uint64_t reachable_syndromes = 0;
};

/// Table of every weight <= e error by syndrome. Lenient decoders also fill
/// the remaining syndromes with the first minimum-weight index found, up to
/// weight `fill_weight_limit` (0 means the block length).
Decoder build_decoder(
    const PuncturedQuantumCode &code, size_t e, bool strict = true, const Guards &guards = {},
    size_t fill_weight_limit = 0);

/// Logical error E_L(a, b): |j_L> -> omega^{a j} |(j + b)_L>.
struct LogicalPair {
    std::uint32_t a;
    std::uint32_t b;
    friend auto operator<=>(const LogicalPair &, const LogicalPair &) = default;
};

/// Identifies E(d) restricted to the code as a logical error, up to a global
/// scalar, by acting on every logical basis state. Absent if E(d) does not
/// act as a logical error-basis element.
std::optional<LogicalPair> logical_action(const PuncturedQuantumCode &code, const ErrorIndex &d);

struct RecoveryResult {
    StateVector recovered;
    ErrorIndex correction;
    Word syndrome;
    std::optional<LogicalPair> residual;
};

/// Corrects `corrupted` = E(actual_error)|psi> by the decoder's choice for
/// the syndrome of actual_error. Throws DecoderMiss on a strict-table miss.
RecoveryResult recover(
    const PuncturedQuantumCode &code, const Decoder &decoder, const StateVector &corrupted,
    const ErrorIndex &actual_error);

struct SweepResult {
    size_t max_weight = 0;
    size_t tried = 0;
    size_t recovered = 0;  // proportional to the original, residual (0, 0)
    size_t misses = 0;
    size_t invalid_residuals = 0;
    std::map<LogicalPair, size_t> residuals;
};

/// Every error of weight <= max_weight on every logical basis state.
SweepResult simulate_sweep(
    const PuncturedQuantumCode &code, const Decoder &decoder, size_t max_weight, const Guards &guards = {});

}  // namespace nb

#endif
