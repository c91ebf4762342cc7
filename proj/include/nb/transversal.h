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

#ifndef NB_TRANSVERSAL_H
#define NB_TRANSVERSAL_H

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nb/exactmat.h"
#include "nb/qcode.h"

namespace nb {

class NotSelfDual : public std::runtime_error {
   public:
    NotSelfDual() : std::runtime_error("code C is not self-dual") {
    }
};

class NoPhaseVector : public std::runtime_error {
   public:
    NoPhaseVector() : std::runtime_error("no x in D' has x.e'_1 = 1 mod n") {
    }
};

class ImageOutsideCode : public std::runtime_error {
   public:
    ImageOutsideCode(const std::string &gate, std::uint32_t state, const std::string &witness);
};

enum class GateKind { kIdentity, kIncrement, kPhase, kFourier, kControlledAdd, kCustom };

/// A logical operation built from independent per-site operators.
struct TransversalGate {
    std::string label;
    GateKind kind = GateKind::kCustom;
    /// Operator on each site of a single block.
    std::vector<Operator> sites;
    /// Two blocks with the site-pair rule |z_i>|w_i> -> |z_i>|w_i + z_i>.
    bool two_block = false;
    /// Expected logical action; column i is the image of logical basis state
    /// i (i = i1 n + i2 for two blocks).
    DenseMatrix expected{1};
    /// Also accept the expected action composed with the reflection i -> -i.
    bool allow_reflection = false;
};

TransversalGate identity_gate(const PuncturedQuantumCode &code);
/// Site i carries X^{(e'_1)_i}.
TransversalGate logical_increment(const PuncturedQuantumCode &code);
/// Site i carries D^{x_i} for the least x in D' with x.e'_1 = 1.
TransversalGate logical_phase(const PuncturedQuantumCode &code);
/// The vector x used by logical_phase.
Word phase_vector(const PuncturedQuantumCode &code);
TransversalGate logical_cadd(const PuncturedQuantumCode &code);

/// Site-wise product: apply `inner` first. Single-block gates only.
TransversalGate compose_gates(const TransversalGate &outer, const TransversalGate &inner);
TransversalGate gate_power(const TransversalGate &g, std::uint32_t k);

StateVector apply_gate(const TransversalGate &gate, const StateVector &s);

struct LogicalActionReport {
    bool pass = false;
    bool in_code = true;
    bool matches = false;
    bool reflected = false;
    /// Raw overlaps <j_L|G|i_L> at (j, i), unnormalized.
    DenseMatrix induced{1};
    std::string witness;
};

/// Logical basis states of one block, or product states of two blocks.
std::vector<StateVector> logical_basis(const PuncturedQuantumCode &code, bool two_block);

LogicalActionReport verify_logical_action(const PuncturedQuantumCode &code, const TransversalGate &gate);

struct FourierGate {
    TransversalGate gate;
    LogicalActionReport action;
};
/// Unnormalized F on every site. Throws NotSelfDual, or ImageOutsideCode if
/// some image leaves the code space.
FourierGate transversal_fourier(const PuncturedQuantumCode &code, const Guards &guards = {});

/// Increment after phase versus phase after increment on every logical
/// state: P I |j_L> = omega I P |j_L> exactly.
bool verify_clock_shift(const PuncturedQuantumCode &code);

struct FourierConjugationReport {
    std::uint32_t n = 2;
    bool pass = true;
    /// per_k[k]: F D^k F^dag = n C^k.
    std::vector<bool> per_k;
};
FourierConjugationReport verify_fourier_conjugation(std::uint32_t n);

struct ReadoutOutcome {
    /// Lexicographically least word of the coset.
    Word coset;
    /// Logical value when the coset is one of the code's logical cosets.
    std::optional<std::uint32_t> logical;
    /// Sum of |amplitude|^2 over the coset, exact.
    CycInt weight;
};

/// Groups the computational-basis amplitudes by coset of C'_0.
std::vector<ReadoutOutcome> readout_computational(const PuncturedQuantumCode &code, const StateVector &s);
/// Applies F on every site, then groups by coset of D'_0.
std::vector<ReadoutOutcome> readout_fourier(const PuncturedQuantumCode &code, const StateVector &s);

}  // namespace nb

#endif
