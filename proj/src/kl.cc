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

#include <algorithm>

#include "nb/qcode.h"

namespace nb {

namespace {

constexpr size_t kMaxViolations = 32;

// Adds a cell's verdict to the result.
void judge_cell(KlResult &r, const KlCell &cell, std::uint32_t n) {
    r.pairs_checked++;
    bool ok = true;
    for (std::uint32_t i = 0; i < n; i++) {
        for (std::uint32_t j = 0; j < n; j++) {
            const CycInt &v = cell.elements[i * n + j];
            const char *kind = nullptr;
            if (i != j && !v.is_zero()) {
                kind = "off-diagonal";
            } else if (i == j && !(v == cell.elements[0])) {
                kind = "diagonal-varies";
            }
            if (kind) {
                ok = false;
                if (r.violations.size() < kMaxViolations) {
                    r.violations.push_back({cell.a, cell.b, i, j, v, kind});
                }
            }
        }
    }
    if (!ok) {
        r.pass = false;
        r.violation_count++;
    }
}

std::vector<ErrorIndex> kl_errors(const PuncturedQuantumCode &code, size_t e, const Guards &guards) {
    std::uint64_t count = count_errors(code.n, code.l, e);
    if (count > 0 && count > guards.max_ambient / count) {
        throw GuardExceeded("max_ambient", count * count, guards.max_ambient);
    }
    return enumerate_errors(code.n, code.l, e, guards);
}

// Nonzero entries of <i|E(dx, dy)|j> scaled by omega^base: i = j + t, value
// omega^{base + j s} |C'_0|.
std::vector<CycInt> fast_elements(
    std::uint32_t n, bool nonzero, std::uint32_t t, std::uint32_t base, std::uint32_t s,
    const std::vector<CycInt> &scaled_roots) {
    std::vector<CycInt> out(static_cast<size_t>(n) * n);
    if (nonzero) {
        for (std::uint32_t j = 0; j < n; j++) {
            std::uint32_t i = (j + t) % n;
            out[i * n + j] = scaled_roots[(base + static_cast<std::uint64_t>(j) * s) % n];
        }
    }
    return out;
}

std::vector<CycInt> scaled_roots_of(const PuncturedQuantumCode &code) {
    const CycInt c0_size(static_cast<std::int64_t>(code.c0.size()));
    std::vector<CycInt> roots;
    for (std::uint32_t k = 0; k < code.n; k++) {
        roots.push_back(CycInt::zeta(code.n, k) * c0_size);
    }
    return roots;
}

}  // namespace

KlCell kl_cell_fast(const PuncturedQuantumCode &code, const ErrorIndex &a, const ErrorIndex &b) {
    const std::uint32_t n = code.n;
    Word dx = sub_mod(b.x, a.x, n), dy = sub_mod(b.y, a.y, n);
    std::uint32_t base = (n - dot_mod(a.x, dy, n)) % n;
    std::uint32_t s = dot_mod(dx, code.e1p, n);
    std::int32_t t = -1;
    for (std::uint32_t k = 0; k < n && t < 0; k++) {
        if (code.c0.contains(sub_mod(dy, code.e_prime(k), n))) {
            t = static_cast<std::int32_t>(k);
        }
    }
    bool nonzero = t >= 0 && code.dp.contains(dx);
    return KlCell{0, 0, fast_elements(n, nonzero, nonzero ? static_cast<std::uint32_t>(t) : 0, base, s, scaled_roots_of(code))};
}

KlCell kl_cell_exhaustive(const PuncturedQuantumCode &code, const ErrorIndex &a, const ErrorIndex &b) {
    KlCell cell{0, 0, {}};
    std::vector<StateVector> ea, eb;
    for (std::uint32_t i = 0; i < code.n; i++) {
        StateVector s = logical_state(code, i);
        ea.push_back(apply_error(a, s, code.n));
        eb.push_back(apply_error(b, s, code.n));
    }
    for (std::uint32_t i = 0; i < code.n; i++) {
        for (std::uint32_t j = 0; j < code.n; j++) {
            cell.elements.push_back(inner_product(ea[i], eb[j]));
        }
    }
    return cell;
}

KlResult kl_check_exhaustive(const PuncturedQuantumCode &code, size_t e, bool store_table, const Guards &guards) {
    KlResult r;
    r.e = e;
    r.errors = kl_errors(code, e, guards);
    std::uint32_t n = code.n;
    // images[a][i] = E_a |i_L>.
    std::vector<std::vector<StateVector>> images;
    images.reserve(r.errors.size());
    std::vector<StateVector> logical;
    for (std::uint32_t i = 0; i < n; i++) {
        logical.push_back(logical_state(code, i));
    }
    for (const auto &d : r.errors) {
        std::vector<StateVector> row;
        for (std::uint32_t i = 0; i < n; i++) {
            row.push_back(apply_error(d, logical[i], n));
        }
        images.push_back(std::move(row));
    }
    for (size_t a = 0; a < r.errors.size(); a++) {
        for (size_t b = 0; b < r.errors.size(); b++) {
            KlCell cell{a, b, {}};
            cell.elements.reserve(static_cast<size_t>(n) * n);
            for (std::uint32_t i = 0; i < n; i++) {
                for (std::uint32_t j = 0; j < n; j++) {
                    cell.elements.push_back(inner_product(images[a][i], images[b][j]));
                }
            }
            judge_cell(r, cell, n);
            if (store_table) {
                r.table.push_back(std::move(cell));
            }
        }
    }
    return r;
}

KlResult kl_check_fast(const PuncturedQuantumCode &code, size_t e, bool store_table, const Guards &guards) {
    KlResult r;
    r.e = e;
    r.errors = kl_errors(code, e, guards);
    const std::uint32_t n = code.n;
    const std::uint32_t l = code.l;
    std::uint64_t ambient = ambient_size(n, l);
    if (ambient > guards.max_ambient) {
        throw GuardExceeded("max_ambient", ambient, guards.max_ambient);
    }

    // coset[packed y] = t if y lies in C'_0 + t e'_1, else -1 (y outside C').
    std::vector<std::int32_t> coset(ambient, -1);
    for (std::uint32_t t = 0; t < n; t++) {
        Word shift = code.e_prime(t);
        for (const auto &z : code.c0.codewords()) {
            coset[pack_word(add_mod(z, shift, n), n)] = static_cast<std::int32_t>(t);
        }
    }
    // Membership in D' = dual(C'_0): the character sum over C'_0 is |C'_0|
    // there and zero elsewhere.
    std::vector<bool> in_dp(ambient, false);
    for (const auto &w : code.dp.codewords()) {
        in_dp[pack_word(w, n)] = true;
    }
    std::vector<std::uint64_t> place(l);
    for (std::uint32_t k = 0; k < l; k++) {
        place[k] = 1;
        for (std::uint32_t m = k + 1; m < l; m++) {
            place[k] *= n;
        }
    }
    const size_t count = r.errors.size();
    std::vector<std::uint32_t> xs(count * l), ys(count * l);
    for (size_t a = 0; a < count; a++) {
        std::copy(r.errors[a].x.begin(), r.errors[a].x.end(), xs.begin() + a * l);
        std::copy(r.errors[a].y.begin(), r.errors[a].y.end(), ys.begin() + a * l);
    }
    const std::vector<CycInt> scaled_roots = scaled_roots_of(code);

    for (size_t a = 0; a < count; a++) {
        const std::uint32_t *xa = &xs[a * l];
        const std::uint32_t *ya = &ys[a * l];
        for (size_t b = 0; b < count; b++) {
            const std::uint32_t *xb = &xs[b * l];
            const std::uint32_t *yb = &ys[b * l];
            // E_a^dag E_b = omega^{-x_a . dy} E(dx, dy).
            std::uint64_t px = 0, py = 0;
            std::uint64_t phase = 0, slope = 0;
            for (std::uint32_t k = 0; k < l; k++) {
                std::uint32_t dx = (xb[k] + n - xa[k]) % n;
                std::uint32_t dy = (yb[k] + n - ya[k]) % n;
                px += dx * place[k];
                py += dy * place[k];
                phase += static_cast<std::uint64_t>(xa[k]) * dy;
                slope += static_cast<std::uint64_t>(dx) * code.e1p[k];
            }
            std::int32_t t = coset[py];
            bool nonzero = t >= 0 && in_dp[px];
            std::uint32_t base = static_cast<std::uint32_t>((n - phase % n) % n);
            std::uint32_t s = static_cast<std::uint32_t>(slope % n);
            bool cell_ok = !nonzero || (t == 0 && s == 0);
            r.pairs_checked++;
            if (!cell_ok) {
                r.pass = false;
                r.violation_count++;
                if (r.violations.size() < kMaxViolations) {
                    // <i|.|j> for j = 1 when t = 0 (diagonal varies), else j = 0.
                    std::uint32_t j = t == 0 ? 1 : 0;
                    std::uint32_t i = (j + static_cast<std::uint32_t>(t)) % n;
                    r.violations.push_back(
                        {a, b, i, j, scaled_roots[(base + j * s) % n], t == 0 ? "diagonal-varies" : "off-diagonal"});
                }
            }
            if (store_table) {
                r.table.push_back(KlCell{
                    a, b, fast_elements(n, nonzero, nonzero ? static_cast<std::uint32_t>(t) : 0, base, s, scaled_roots)});
            }
        }
    }
    return r;
}

CycInt character_sum(const PuncturedQuantumCode &code, const Word &x) {
    std::vector<std::int64_t> counts(code.n, 0);
    for (const auto &z : code.c0.codewords()) {
        counts[dot_mod(x, z, code.n)]++;
    }
    CycInt total;
    for (std::uint32_t k = 0; k < code.n; k++) {
        if (counts[k] != 0) {
            total += CycInt::zeta(code.n, k) * CycInt(counts[k]);
        }
    }
    return total;
}

DistanceCertificate distance_certificate(const PuncturedQuantumCode &code, size_t e, const Guards &guards) {
    DistanceCertificate cert;
    cert.e = e;
    cert.min_weight_cp = min_weight(code.cp);
    cert.min_weight_dp = min_weight(code.dp);
    size_t need = 2 * e + 1;
    cert.by_min_weight = cert.min_weight_cp >= need && cert.min_weight_dp >= need;

    std::uint64_t count = count_errors(code.n, code.l, 2 * e);
    if (count > guards.max_ambient) {
        cert.note = "scan of " + std::to_string(count) + " indices exceeds max_ambient; certificate (i) only";
        return cert;
    }
    bool literal = code.convention == Convention::kLiteral;
    // Centralizer of H: phase part in C' and shift part in D' (literal), or
    // the reverse (swapped). H itself uses the shortened codes.
    const LinearCodeZn &x_full = literal ? code.cp : code.dp;
    const LinearCodeZn &y_full = literal ? code.dp : code.cp;
    const LinearCodeZn &x_stab = literal ? code.c0 : code.d0;
    const LinearCodeZn &y_stab = literal ? code.d0 : code.c0;
    for_each_error(code.n, code.l, 2 * e, [&](const ErrorIndex &d) {
        cert.scanned++;
        if (d.is_identity()) {
            return;
        }
        for (const auto &g : code.generators) {
            if (symplectic_product(g, d, code.n) != 0) {
                return;
            }
        }
        cert.centralizer_hits++;
        if (!x_full.contains(d.x) || !y_full.contains(d.y)) {
            cert.membership_failures++;
        }
        if (!x_stab.contains(d.x) || !y_stab.contains(d.y)) {
            cert.logical_hits++;
        }
    });
    cert.scan_done = true;
    cert.by_scan = cert.membership_failures == 0 && cert.logical_hits == 0;
    return cert;
}

}  // namespace nb
