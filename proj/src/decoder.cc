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

std::string syndrome_string(const Word &s) {
    std::string out;
    for (size_t k = 0; k < s.size(); k++) {
        out += (k ? "," : "") + std::to_string(s[k]);
    }
    return "[" + out + "]";
}

}  // namespace

Word syndrome_of(const ErrorIndex &d, const PuncturedQuantumCode &code) {
    Word s;
    s.reserve(code.generators.size());
    for (const auto &g : code.generators) {
        s.push_back(symplectic_product(g, d, code.n));
    }
    return s;
}

SyndromeCollision::SyndromeCollision(ErrorIndex first, ErrorIndex second)
    : std::runtime_error("errors " + first.to_string() + " and " + second.to_string() + " share a syndrome"),
      first(std::move(first)),
      second(std::move(second)) {
}

DecoderMiss::DecoderMiss(const Word &syndrome)
    : std::runtime_error("no decoder entry for syndrome " + syndrome_string(syndrome)) {
}

Decoder build_decoder(
    const PuncturedQuantumCode &code, size_t e, bool strict, const Guards &guards, size_t fill_weight_limit) {
    Decoder dec;
    dec.e = e;
    dec.strict = strict;
    std::uint64_t total_exponent = ambient_size(code.n, 2 * code.l);
    dec.reachable_syndromes = total_exponent / (code.cp.size() * code.dp.size());

    for (const auto &d : enumerate_errors(code.n, code.l, e, guards)) {
        Word s = syndrome_of(d, code);
        auto [it, inserted] = dec.table.emplace(s, d);
        if (!inserted) {
            throw SyndromeCollision(it->second, d);
        }
    }
    if (strict) {
        return dec;
    }
    size_t limit = fill_weight_limit == 0 ? code.l : std::min<size_t>(fill_weight_limit, code.l);
    for (size_t w = e + 1; w <= limit && dec.table.size() < dec.reachable_syndromes; w++) {
        std::uint64_t count = count_errors(code.n, code.l, w);
        if (count > guards.max_ambient) {
            throw GuardExceeded("max_ambient", count, guards.max_ambient);
        }
        std::vector<ErrorIndex> layer;
        for_each_error(code.n, code.l, w, [&](const ErrorIndex &d) {
            if (d.weight() == w) {
                layer.push_back(d);
            }
        });
        std::sort(layer.begin(), layer.end());
        for (const auto &d : layer) {
            dec.table.emplace(syndrome_of(d, code), d);
        }
    }
    return dec;
}

std::optional<LogicalPair> logical_action(const PuncturedQuantumCode &code, const ErrorIndex &d) {
    std::uint32_t n = code.n;
    std::vector<StateVector> logical, images;
    for (std::uint32_t j = 0; j < n; j++) {
        logical.push_back(logical_state(code, j));
    }
    for (std::uint32_t j = 0; j < n; j++) {
        images.push_back(apply_error(d, logical[j], n));
    }
    for (std::uint32_t b = 0; b < n; b++) {
        if (!proportional(images[0], logical[b])) {
            continue;
        }
        // Logical states have unit amplitudes, so the scalar is read off directly.
        CycInt scalar = images[0].amplitude(logical[b].amplitudes().begin()->first);
        for (std::uint32_t a = 0; a < n; a++) {
            bool ok = true;
            for (std::uint32_t j = 0; j < n && ok; j++) {
                CycInt coefficient = scalar * CycInt::zeta(n, static_cast<std::int64_t>(a) * j);
                ok = images[j] == logical[(j + b) % n].scaled(coefficient);
            }
            if (ok) {
                return LogicalPair{a, b};
            }
        }
        return std::nullopt;
    }
    return std::nullopt;
}

RecoveryResult recover(
    const PuncturedQuantumCode &code, const Decoder &decoder, const StateVector &corrupted,
    const ErrorIndex &actual_error) {
    Word syndrome = syndrome_of(actual_error, code);
    auto it = decoder.table.find(syndrome);
    if (it == decoder.table.end()) {
        throw DecoderMiss(syndrome);
    }
    const ErrorIndex &correction = it->second;
    // E_c^dag E_d is a scalar multiple of E(d - c).
    return RecoveryResult{
        apply_error_adjoint(correction, corrupted, code.n), correction, std::move(syndrome),
        logical_action(code, error_sub(actual_error, correction, code.n))};
}

SweepResult simulate_sweep(
    const PuncturedQuantumCode &code, const Decoder &decoder, size_t max_weight, const Guards &guards) {
    SweepResult sw;
    sw.max_weight = max_weight;
    std::uint32_t n = code.n;
    std::vector<StateVector> logical;
    for (std::uint32_t j = 0; j < n; j++) {
        logical.push_back(logical_state(code, j));
    }
    for (const auto &d : enumerate_errors(n, code.l, max_weight, guards)) {
        for (std::uint32_t j = 0; j < n; j++) {
            sw.tried++;
            std::optional<RecoveryResult> r;
            try {
                r = recover(code, decoder, apply_error(d, logical[j], n), d);
            } catch (const DecoderMiss &) {
                sw.misses++;
                continue;
            }
            if (!r->residual) {
                sw.invalid_residuals++;
                continue;
            }
            const LogicalPair p = *r->residual;
            StateVector expected =
                logical[(j + p.b) % n].scaled(CycInt::zeta(n, static_cast<std::int64_t>(p.a) * j));
            if (!proportional(r->recovered, expected)) {
                sw.invalid_residuals++;
                continue;
            }
            sw.residuals[p]++;
            if (p.a == 0 && p.b == 0) {
                sw.recovered++;
            }
        }
    }
    return sw;
}

}  // namespace nb
