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

#include "nb/qcode.h"

#include <algorithm>
#include <sstream>

namespace nb {

namespace {

void require_sites(const ErrorIndex &a, const ErrorIndex &b) {
    if (a.x.size() != b.x.size() || a.y.size() != b.y.size() || a.x.size() != a.y.size()) {
        throw std::invalid_argument("error indices have different lengths");
    }
}

std::string word_string(const Word &w) {
    std::string s;
    for (auto v : w) {
        s += std::to_string(v);
    }
    return s;
}

}  // namespace

ErrorIndex ErrorIndex::identity(std::uint32_t sites) {
    return ErrorIndex{Word(sites, 0), Word(sites, 0)};
}

size_t ErrorIndex::weight() const {
    size_t w = 0;
    for (size_t i = 0; i < x.size(); i++) {
        w += (x[i] != 0 || y[i] != 0);
    }
    return w;
}

bool ErrorIndex::is_identity() const {
    return weight() == 0;
}

std::string ErrorIndex::to_string() const {
    return "(" + word_string(x) + "|" + word_string(y) + ")";
}

bool operator<(const ErrorIndex &a, const ErrorIndex &b) {
    size_t wa = a.weight(), wb = b.weight();
    if (wa != wb) {
        return wa < wb;
    }
    for (size_t i = 0; i < a.x.size() && i < b.x.size(); i++) {
        if (a.x[i] != b.x[i]) {
            return a.x[i] < b.x[i];
        }
        if (a.y[i] != b.y[i]) {
            return a.y[i] < b.y[i];
        }
    }
    return a.x.size() < b.x.size();
}

ErrorIndex error_add(const ErrorIndex &a, const ErrorIndex &b, std::uint32_t n) {
    require_sites(a, b);
    return ErrorIndex{add_mod(a.x, b.x, n), add_mod(a.y, b.y, n)};
}

ErrorIndex error_sub(const ErrorIndex &a, const ErrorIndex &b, std::uint32_t n) {
    require_sites(a, b);
    return ErrorIndex{sub_mod(a.x, b.x, n), sub_mod(a.y, b.y, n)};
}

std::uint32_t symplectic_product(const ErrorIndex &d, const ErrorIndex &d2, std::uint32_t n) {
    require_sites(d, d2);
    return (dot_mod(d.y, d2.x, n) + n - dot_mod(d.x, d2.y, n)) % n;
}

std::vector<MonomialMatrix> error_operators(const ErrorIndex &d, std::uint32_t n) {
    std::vector<MonomialMatrix> ops;
    ops.reserve(d.x.size());
    for (size_t i = 0; i < d.x.size(); i++) {
        std::vector<std::uint32_t> perm(n), phases(n);
        for (std::uint32_t z = 0; z < n; z++) {
            perm[z] = (z + d.y[i]) % n;
            phases[z] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(d.x[i]) * z) % n);
        }
        ops.emplace_back(n, std::move(perm), std::move(phases));
    }
    return ops;
}

StateVector apply_error(const ErrorIndex &d, const StateVector &s, std::uint32_t n) {
    if (d.x.size() != s.num_sites()) {
        throw std::invalid_argument("apply_error: index length does not match the state");
    }
    return apply_mono(error_operators(d, n), s);
}

StateVector apply_error_adjoint(const ErrorIndex &d, const StateVector &s, std::uint32_t n) {
    if (d.x.size() != s.num_sites()) {
        throw std::invalid_argument("apply_error_adjoint: index length does not match the state");
    }
    std::vector<MonomialMatrix> ops = error_operators(d, n);
    for (auto &op : ops) {
        op = op.adjoint();
    }
    return apply_mono(ops, s);
}

std::uint64_t count_errors(std::uint32_t n, std::uint32_t sites, size_t max_weight) {
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    unsigned __int128 total = 0;
    unsigned __int128 binom = 1;  // C(sites, t)
    unsigned __int128 power = 1;  // (n^2 - 1)^t
    std::uint64_t per_site = static_cast<std::uint64_t>(n) * n - 1;
    for (size_t t = 0; t <= max_weight && t <= sites; t++) {
        if (t > 0) {
            binom = binom * (sites - t + 1) / t;
            power *= per_site;
        }
        total += binom * power;
        if (total > kMax || power > kMax || binom > kMax) {
            return kMax;
        }
    }
    return static_cast<std::uint64_t>(total);
}

void for_each_error(
    std::uint32_t n, std::uint32_t sites, size_t max_weight, const std::function<void(const ErrorIndex &)> &visit) {
    ErrorIndex d = ErrorIndex::identity(sites);
    std::uint32_t values = n * n;
    for (size_t w = 0; w <= max_weight && w <= sites; w++) {
        std::vector<std::uint32_t> support(w);
        for (size_t k = 0; k < w; k++) {
            support[k] = static_cast<std::uint32_t>(k);
        }
        while (true) {
            // Odometer over nonzero site values v = x n + y on the support.
            std::vector<std::uint32_t> v(w, 1);
            while (true) {
                for (size_t k = 0; k < w; k++) {
                    d.x[support[k]] = v[k] / n;
                    d.y[support[k]] = v[k] % n;
                }
                visit(d);
                size_t pos = 0;
                while (pos < w && ++v[pos] == values) {
                    v[pos] = 1;
                    pos++;
                }
                if (pos == w) {
                    break;
                }
            }
            for (size_t k = 0; k < w; k++) {
                d.x[support[k]] = 0;
                d.y[support[k]] = 0;
            }
            // Next combination of w sites.
            size_t k = w;
            while (k > 0 && support[k - 1] == sites - w + k - 1) {
                k--;
            }
            if (k == 0) {
                break;
            }
            support[k - 1]++;
            for (size_t j = k; j < w; j++) {
                support[j] = support[j - 1] + 1;
            }
        }
    }
}

std::vector<ErrorIndex> enumerate_errors(
    std::uint32_t n, std::uint32_t sites, size_t max_weight, const Guards &guards) {
    std::uint64_t count = count_errors(n, sites, max_weight);
    if (count > guards.max_ambient) {
        throw GuardExceeded("max_ambient", count, guards.max_ambient);
    }
    std::vector<ErrorIndex> out;
    out.reserve(count);
    for_each_error(n, sites, max_weight, [&](const ErrorIndex &d) { out.push_back(d); });
    std::sort(out.begin(), out.end());
    return out;
}

std::string convention_name(Convention c) {
    switch (c) {
        case Convention::kLiteral:
            return "literal";
        case Convention::kSwapped:
            return "swapped";
        case Convention::kAuto:
            return "auto";
    }
    return "unknown";
}

Convention parse_convention(const std::string &name) {
    if (name == "literal") {
        return Convention::kLiteral;
    }
    if (name == "swapped") {
        return Convention::kSwapped;
    }
    if (name == "auto") {
        return Convention::kAuto;
    }
    throw std::invalid_argument("unknown convention: " + name);
}

CodeConstructionError::CodeConstructionError(std::string check, const std::string &detail)
    : std::runtime_error("code construction failed at check '" + check + "': " + detail), check(std::move(check)) {
}

Word PuncturedQuantumCode::e_prime(std::uint32_t i) const {
    return scale_mod(e1p, i, n);
}

const LinearCodeZn &PuncturedQuantumCode::phase_code() const {
    return convention == Convention::kLiteral ? c0 : d0;
}

const LinearCodeZn &PuncturedQuantumCode::shift_code() const {
    return convention == Convention::kLiteral ? d0 : c0;
}

std::vector<ErrorIndex> stabilizer_generators(const LinearCodeZn &phase_part, const LinearCodeZn &shift_part) {
    std::uint32_t l = phase_part.length();
    std::vector<ErrorIndex> gens;
    for (const auto &g : phase_part.generators()) {
        gens.push_back(ErrorIndex{g, Word(l, 0)});
    }
    for (const auto &g : shift_part.generators()) {
        gens.push_back(ErrorIndex{Word(l, 0), g});
    }
    return gens;
}

namespace {

bool pairwise_orthogonal(const std::vector<ErrorIndex> &gens, std::uint32_t n, std::string *witness) {
    for (size_t a = 0; a < gens.size(); a++) {
        for (size_t b = a + 1; b < gens.size(); b++) {
            if (symplectic_product(gens[a], gens[b], n) != 0) {
                *witness = gens[a].to_string() + " vs " + gens[b].to_string();
                return false;
            }
        }
    }
    return true;
}

LinearCodeZn dual_of(const LinearCodeZn &code, const Guards &guards) {
    std::uint64_t ambient = ambient_size(code.modulus(), code.length());
    if (ambient > guards.max_ambient && is_prime(code.modulus())) {
        return dual_prime_fast(code, guards);
    }
    return dual(code, guards);
}

}  // namespace

PuncturedQuantumCode build_code(
    const LinearCodeZn &c, const std::optional<LinearCodeZn> &d, Convention convention, const Guards &guards) {
    PuncturedQuantumCode code;
    auto record = [&code](const std::string &name, bool pass, const std::string &detail) {
        code.checks.push_back({name, pass, detail});
        if (!pass) {
            throw CodeConstructionError(name, detail);
        }
    };
    std::uint32_t n = c.modulus();
    if (c.length() < 2) {
        record("length", false, "C must have length at least 2");
    }
    if (d && (d->modulus() != n || d->length() != c.length())) {
        record("shape", false, "C and D have different moduli or lengths");
    }
    code.n = n;
    code.l = c.length() - 1;
    code.c = c;
    code.d = d ? *d : dual_of(c, guards);

    record("last_coord_surjective", last_coord_surjective(c), "last coordinate of C is not onto Z_n");
    Word e1;
    try {
        e1 = find_e1(c);
    } catch (const NoUnitLastCoordinate &ex) {
        record("unit_last_coordinate", false, ex.what());
    }
    record("unit_last_coordinate", true, "e_1 = " + word_string(e1));

    code.cp = puncture_last(c);
    code.c0 = shorten_last(c);
    code.dp = puncture_last(code.d);
    code.d0 = shorten_last(code.d);
    code.e1p = Word(e1.begin(), e1.end() - 1);

    bool disjoint = true;
    std::string witness;
    for (std::uint32_t k = 1; k < n && disjoint; k++) {
        if (code.c0.contains(code.e_prime(k))) {
            disjoint = false;
            witness = "e'_" + std::to_string(k) + " lies in C'_0";
        }
    }
    record("cosets_disjoint", disjoint, witness.empty() ? "n distinct cosets of C'_0" : witness);

    record("dual(C') = D'_0", dual_of(code.cp, guards) == code.d0, "checked by enumeration");
    record("dual(C'_0) = D'", dual_of(code.c0, guards) == code.dp, "checked by enumeration");

    std::vector<ErrorIndex> literal = stabilizer_generators(code.c0, code.d0);
    std::vector<ErrorIndex> swapped = stabilizer_generators(code.d0, code.c0);
    std::string literal_witness, swapped_witness;
    bool literal_commutes = pairwise_orthogonal(literal, n, &literal_witness);
    bool swapped_commutes = pairwise_orthogonal(swapped, n, &swapped_witness);
    code.literal_ok = literal_commutes && verify_eigenspace(code, literal).pass;
    code.swapped_ok = swapped_commutes && verify_eigenspace(code, swapped).pass;

    Convention chosen = convention;
    if (convention == Convention::kAuto) {
        chosen = code.literal_ok ? Convention::kLiteral : Convention::kSwapped;
    }
    code.convention = chosen;
    code.generators = chosen == Convention::kLiteral ? literal : swapped;
    bool commutes = chosen == Convention::kLiteral ? literal_commutes : swapped_commutes;
    const std::string &comm_witness = chosen == Convention::kLiteral ? literal_witness : swapped_witness;
    record("generators_commute", commutes, commutes ? "all pairs symplectically orthogonal" : comm_witness);
    bool eigen_ok = chosen == Convention::kLiteral ? code.literal_ok : code.swapped_ok;
    record(
        "eigenspace", eigen_ok,
        "convention " + convention_name(chosen) + (eigen_ok ? " passes" : " fails") + " (literal " +
            (code.literal_ok ? "passes" : "fails") + ", swapped " + (code.swapped_ok ? "passes" : "fails") + ")");
    return code;
}

StateVector logical_state(const PuncturedQuantumCode &code, std::uint32_t i) {
    StateVector s(code.site_dims());
    Word shift = code.e_prime(i % code.n);
    for (const auto &z : code.c0.codewords()) {
        s.add(s.encode(add_mod(z, shift, code.n)), CycInt(1));
    }
    return s;
}

StateVector syndrome_state(const PuncturedQuantumCode &code, const Word &cx, const Word &dy, std::uint32_t i) {
    StateVector s(code.site_dims());
    Word shift = add_mod(code.e_prime(i % code.n), dy, code.n);
    for (const auto &z : code.c0.codewords()) {
        s.add(s.encode(add_mod(z, shift, code.n)), CycInt::zeta(code.n, dot_mod(cx, z, code.n)));
    }
    return s;
}

EigenspaceReport verify_eigenspace(const PuncturedQuantumCode &code) {
    return verify_eigenspace(code, code.generators);
}

EigenspaceReport verify_eigenspace(const PuncturedQuantumCode &code, const std::vector<ErrorIndex> &generators) {
    EigenspaceReport r;
    std::vector<StateVector> states;
    for (std::uint32_t i = 0; i < code.n; i++) {
        states.push_back(logical_state(code, i));
    }
    for (size_t g = 0; g < generators.size(); g++) {
        std::optional<Ratio> first;
        bool ok = true;
        for (std::uint32_t i = 0; i < code.n && ok; i++) {
            StateVector image = apply_error(generators[g], states[i], code.n);
            std::optional<Ratio> ratio = proportional(image, states[i]);
            if (!ratio) {
                ok = false;
                r.witnesses.push_back(
                    "generator " + generators[g].to_string() + " does not preserve |" + std::to_string(i) + "_L>");
            } else if (!first) {
                first = ratio;
            } else if (!(ratio->numerator * first->denominator == first->numerator * ratio->denominator)) {
                ok = false;
                r.witnesses.push_back(
                    "generator " + generators[g].to_string() + " has an eigenvalue depending on the logical state");
            }
        }
        if (ok && first) {
            // Logical states have unit amplitudes, so the denominator is 1.
            r.eigenvalues.push_back(first->numerator);
        } else {
            r.eigenvalues.push_back(std::nullopt);
            r.pass = false;
        }
    }
    return r;
}

}  // namespace nb
