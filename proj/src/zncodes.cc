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

#include "nb/zncodes.h"

#include <algorithm>
#include <set>

namespace nb {

GuardExceeded::GuardExceeded(const std::string &guard, std::uint64_t requested, std::uint64_t limit)
    : std::runtime_error(
          "size guard '" + guard + "' exceeded: need " + std::to_string(requested) + ", limit " +
          std::to_string(limit)),
      guard(guard) {
}

size_t hamming_weight(std::span<const std::uint32_t> w) {
    return static_cast<size_t>(std::count_if(w.begin(), w.end(), [](std::uint32_t x) { return x != 0; }));
}

std::uint32_t dot_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b, std::uint32_t n) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("dot_mod: length mismatch");
    }
    std::uint64_t total = 0;
    for (size_t i = 0; i < a.size(); i++) {
        total += static_cast<std::uint64_t>(a[i]) * b[i];
    }
    return static_cast<std::uint32_t>(total % n);
}

Word add_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b, std::uint32_t n) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("add_mod: length mismatch");
    }
    Word r(a.size());
    for (size_t i = 0; i < a.size(); i++) {
        r[i] = (a[i] + b[i]) % n;
    }
    return r;
}

Word sub_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b, std::uint32_t n) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("sub_mod: length mismatch");
    }
    Word r(a.size());
    for (size_t i = 0; i < a.size(); i++) {
        r[i] = (a[i] + n - b[i] % n) % n;
    }
    return r;
}

Word scale_mod(std::span<const std::uint32_t> a, std::uint64_t k, std::uint32_t n) {
    Word r(a.size());
    for (size_t i = 0; i < a.size(); i++) {
        r[i] = static_cast<std::uint32_t>((a[i] * (k % n)) % n);
    }
    return r;
}

std::uint64_t pack_word(std::span<const std::uint32_t> w, std::uint32_t n) {
    std::uint64_t p = 0;
    for (auto x : w) {
        p = p * n + x;
    }
    return p;
}

Word unpack_word(std::uint64_t packed, std::uint32_t n, std::uint32_t length) {
    Word w(length);
    for (std::uint32_t i = length; i-- > 0;) {
        w[i] = static_cast<std::uint32_t>(packed % n);
        packed /= n;
    }
    return w;
}

std::uint64_t ambient_size(std::uint32_t n, std::uint32_t length) {
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < length; i++) {
        if (total > std::numeric_limits<std::uint64_t>::max() / n) {
            throw std::invalid_argument("ambient space Z_n^L does not fit in 64 bits");
        }
        total *= n;
    }
    return total;
}

bool is_prime(std::uint32_t n) {
    if (n < 2) {
        return false;
    }
    for (std::uint32_t p = 2; p * p <= n; p++) {
        if (n % p == 0) {
            return false;
        }
    }
    return true;
}

namespace {

void validate_word(std::span<const std::uint32_t> w, std::uint32_t n, std::uint32_t length) {
    if (w.size() != length) {
        throw std::invalid_argument(
            "codeword has length " + std::to_string(w.size()) + ", expected " + std::to_string(length));
    }
    for (auto x : w) {
        if (x >= n) {
            throw std::invalid_argument("codeword entry " + std::to_string(x) + " out of range for Z_" + std::to_string(n));
        }
    }
}

}  // namespace

std::vector<Word> enumerate_span(
    std::uint32_t n, std::uint32_t length, std::span<const Word> generators, const Guards &guards) {
    ambient_size(n, length);
    std::vector<Word> words{Word(length, 0)};
    std::unordered_set<std::uint64_t> seen{0};
    for (const auto &g : generators) {
        validate_word(g, n, length);
        // S <- S + <g>: closing under one generator at a time reaches the span.
        size_t base = words.size();
        for (size_t s = 0; s < base; s++) {
            Word cur = words[s];
            while (true) {
                cur = add_mod(cur, g, n);
                if (!seen.insert(pack_word(cur, n)).second) {
                    break;
                }
                words.push_back(cur);
                if (words.size() > guards.max_ambient) {
                    throw GuardExceeded("max_ambient", words.size(), guards.max_ambient);
                }
            }
        }
    }
    std::sort(words.begin(), words.end());
    return words;
}

std::vector<Word> generating_set(std::uint32_t n, std::uint32_t length, std::span<const Word> words) {
    std::vector<Word> gens;
    std::vector<Word> span{Word(length, 0)};
    std::unordered_set<std::uint64_t> in_span{0};
    for (const auto &w : words) {
        if (in_span.count(pack_word(w, n))) {
            continue;
        }
        gens.push_back(w);
        size_t base = span.size();
        for (size_t s = 0; s < base; s++) {
            Word cur = span[s];
            while (true) {
                cur = add_mod(cur, w, n);
                if (!in_span.insert(pack_word(cur, n)).second) {
                    break;
                }
                span.push_back(cur);
            }
        }
    }
    return gens;
}

LinearCodeZn::LinearCodeZn() : words_{Word{0}} {
    index_words();
}

LinearCodeZn::LinearCodeZn(std::uint32_t n, std::uint32_t length, std::vector<Word> generators, const Guards &guards)
    : n_(n), length_(length), generators_(std::move(generators)) {
    if (n < 2) {
        throw std::invalid_argument("LinearCodeZn: modulus must be at least 2");
    }
    if (length < 1) {
        throw std::invalid_argument("LinearCodeZn: length must be at least 1");
    }
    words_ = enumerate_span(n, length, generators_, guards);
    index_words();
}

LinearCodeZn LinearCodeZn::from_codewords(std::uint32_t n, std::uint32_t length, std::vector<Word> words) {
    LinearCodeZn c;
    c.n_ = n;
    c.length_ = length;
    for (const auto &w : words) {
        validate_word(w, n, length);
    }
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    if (words.empty() || hamming_weight(words.front()) != 0) {
        throw std::invalid_argument("LinearCodeZn::from_codewords: word list must contain zero");
    }
    c.words_ = std::move(words);
    c.generators_ = generating_set(n, length, c.words_);
    c.index_words();
    bool closed = true;
    try {
        closed = enumerate_span(n, length, c.generators_, Guards{c.words_.size()}).size() == c.words_.size();
    } catch (const GuardExceeded &) {
        closed = false;
    }
    if (!closed) {
        throw std::invalid_argument("LinearCodeZn::from_codewords: word list is not a subgroup");
    }
    return c;
}

void LinearCodeZn::index_words() {
    packed_.clear();
    packed_.reserve(words_.size());
    for (const auto &w : words_) {
        packed_.insert(pack_word(w, n_));
    }
}

bool LinearCodeZn::contains(std::span<const std::uint32_t> w) const {
    if (w.size() != length_) {
        return false;
    }
    return packed_.count(pack_word(w, n_)) != 0;
}

LinearCodeZn dual(const LinearCodeZn &code, const Guards &guards) {
    std::uint32_t n = code.modulus(), len = code.length();
    std::uint64_t total = ambient_size(n, len);
    if (total > guards.max_ambient) {
        throw GuardExceeded("max_ambient", total, guards.max_ambient);
    }
    std::vector<Word> result;
    Word v(len, 0);
    for (std::uint64_t k = 0; k < total; k++) {
        bool orthogonal = true;
        for (const auto &g : code.generators()) {
            if (dot_mod(v, g, n) != 0) {
                orthogonal = false;
                break;
            }
        }
        if (orthogonal) {
            result.push_back(v);
        }
        for (std::uint32_t i = len; i-- > 0;) {
            if (++v[i] < n) {
                break;
            }
            v[i] = 0;
        }
    }
    return LinearCodeZn::from_codewords(n, len, std::move(result));
}

LinearCodeZn dual_prime_fast(const LinearCodeZn &code, const Guards &guards) {
    std::uint32_t p = code.modulus(), len = code.length();
    if (!is_prime(p)) {
        throw std::invalid_argument("dual_prime_fast: modulus must be prime");
    }
    auto inverse = [p](std::uint32_t a) {
        std::uint64_t r = 1, base = a, e = p - 2;
        while (e > 0) {
            if (e & 1) {
                r = r * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        return static_cast<std::uint32_t>(r);
    };
    std::vector<Word> rows = code.generators();
    std::vector<std::uint32_t> pivots;
    size_t rank = 0;
    for (std::uint32_t col = 0; col < len && rank < rows.size(); col++) {
        size_t pr = rank;
        while (pr < rows.size() && rows[pr][col] == 0) {
            pr++;
        }
        if (pr == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[pr]);
        rows[rank] = scale_mod(rows[rank], inverse(rows[rank][col]), p);
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != rank && rows[r][col] != 0) {
                rows[r] = sub_mod(rows[r], scale_mod(rows[rank], rows[r][col], p), p);
            }
        }
        pivots.push_back(col);
        rank++;
    }
    std::vector<Word> kernel;
    for (std::uint32_t f = 0; f < len; f++) {
        if (std::find(pivots.begin(), pivots.end(), f) != pivots.end()) {
            continue;
        }
        Word v(len, 0);
        v[f] = 1;
        for (size_t r = 0; r < rank; r++) {
            v[pivots[r]] = (p - rows[r][f]) % p;
        }
        kernel.push_back(v);
    }
    return LinearCodeZn(p, len, std::move(kernel), guards);
}

LinearCodeZn puncture_last(const LinearCodeZn &code) {
    if (code.length() < 2) {
        throw std::invalid_argument("puncture_last: length must be at least 2");
    }
    std::vector<Word> words;
    words.reserve(code.size());
    for (const auto &w : code.codewords()) {
        words.emplace_back(w.begin(), w.end() - 1);
    }
    return LinearCodeZn::from_codewords(code.modulus(), code.length() - 1, std::move(words));
}

LinearCodeZn shorten_last(const LinearCodeZn &code) {
    if (code.length() < 2) {
        throw std::invalid_argument("shorten_last: length must be at least 2");
    }
    std::vector<Word> words;
    for (const auto &w : code.codewords()) {
        if (w.back() == 0) {
            words.emplace_back(w.begin(), w.end() - 1);
        }
    }
    return LinearCodeZn::from_codewords(code.modulus(), code.length() - 1, std::move(words));
}

bool last_coord_surjective(const LinearCodeZn &code) {
    std::set<std::uint32_t> seen;
    for (const auto &w : code.codewords()) {
        seen.insert(w.back());
    }
    return seen.size() == code.modulus();
}

Word find_e1(const LinearCodeZn &code) {
    for (const auto &w : code.codewords()) {
        if (w.back() == 1) {
            return w;
        }
    }
    throw NoUnitLastCoordinate();
}

size_t min_weight(const LinearCodeZn &code) {
    size_t best = kInfiniteWeight;
    for (const auto &w : code.codewords()) {
        size_t wt = hamming_weight(w);
        if (wt > 0 && wt < best) {
            best = wt;
        }
    }
    return best;
}

std::vector<Word> coset_leaders(const LinearCodeZn &code, const Guards &guards) {
    std::uint32_t n = code.modulus(), len = code.length();
    std::uint64_t total = ambient_size(n, len);
    if (total > guards.max_ambient) {
        throw GuardExceeded("max_ambient", total, guards.max_ambient);
    }
    // Bucket the ambient space by weight; within a bucket, packed order is
    // lexicographic order.
    std::vector<std::vector<std::uint64_t>> by_weight(len + 1);
    {
        Word v(len, 0);
        size_t wt = 0;
        for (std::uint64_t k = 0; k < total; k++) {
            by_weight[wt].push_back(k);
            for (std::uint32_t i = len; i-- > 0;) {
                if (v[i] == 0) {
                    wt++;
                }
                if (++v[i] < n) {
                    break;
                }
                v[i] = 0;
                wt--;
            }
        }
    }
    std::vector<bool> covered(total, false);
    std::vector<Word> leaders;
    for (const auto &bucket : by_weight) {
        for (std::uint64_t k : bucket) {
            if (covered[k]) {
                continue;
            }
            Word v = unpack_word(k, n, len);
            leaders.push_back(v);
            for (const auto &c : code.codewords()) {
                covered[pack_word(add_mod(v, c, n), n)] = true;
            }
        }
    }
    return leaders;
}

bool is_self_dual(const LinearCodeZn &code, const Guards &guards) {
    return dual(code, guards) == code;
}

}  // namespace nb
