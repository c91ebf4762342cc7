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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "test_util.h"

using namespace nb;

namespace {

// Every word of Z_n^L, lexicographic.
std::vector<Word> all_words(std::uint32_t n, std::uint32_t len) {
    std::vector<Word> out;
    Word w(len, 0);
    while (true) {
        out.push_back(w);
        std::uint32_t i = len;
        while (i > 0 && ++w[i - 1] == n) {
            w[--i] = 0;
        }
        if (i == 0) {
            return out;
        }
    }
}

std::uint32_t dot(const Word &a, const Word &b, std::uint32_t n) {
    std::uint64_t s = 0;
    for (size_t i = 0; i < a.size(); i++) {
        s += static_cast<std::uint64_t>(a[i]) * b[i];
    }
    return static_cast<std::uint32_t>(s % n);
}

// Span as the set of sums c_1 g_1 + ... + c_k g_k over all coefficient tuples.
std::set<Word> span_oracle(std::uint32_t n, std::uint32_t len, const std::vector<Word> &gens) {
    std::set<Word> out;
    for (const Word &coeffs : all_words(n, static_cast<std::uint32_t>(gens.size()))) {
        Word w(len, 0);
        for (size_t g = 0; g < gens.size(); g++) {
            for (std::uint32_t i = 0; i < len; i++) {
                w[i] = static_cast<std::uint32_t>((w[i] + static_cast<std::uint64_t>(coeffs[g]) * gens[g][i]) % n);
            }
        }
        out.insert(w);
    }
    return out;
}

std::set<Word> dual_oracle(std::uint32_t n, std::uint32_t len, const std::set<Word> &code) {
    std::set<Word> out;
    for (const Word &v : all_words(n, len)) {
        bool ok = true;
        for (const Word &c : code) {
            ok = ok && dot(v, c, n) == 0;
        }
        if (ok) {
            out.insert(v);
        }
    }
    return out;
}

std::set<Word> as_set(const LinearCodeZn &c) {
    return {c.codewords().begin(), c.codewords().end()};
}

size_t weight(const Word &w) {
    return static_cast<size_t>(std::count_if(w.begin(), w.end(), [](std::uint32_t x) { return x != 0; }));
}

LinearCodeZn random_code(std::mt19937 &rng, std::uint32_t n, std::uint32_t len) {
    std::uniform_int_distribution<std::uint32_t> entry(0, n - 1), count(0, 3);
    std::vector<Word> gens(count(rng), Word(len));
    for (auto &g : gens) {
        for (auto &x : g) {
            x = entry(rng);
        }
    }
    return LinearCodeZn(n, len, gens);
}

LinearCodeZn hamming7() {
    return LinearCodeZn(2, 7, {{1, 1, 1, 0, 0, 0, 0}, {1, 0, 0, 1, 1, 0, 0}, {0, 1, 0, 1, 0, 1, 0}, {1, 1, 0, 1, 0, 0, 1}});
}

}  // namespace

TEST(Span, examples) {
    LinearCodeZn zero(3, 4, {});
    EXPECT_EQ(zero.size(), 1u);
    EXPECT_EQ(zero.codewords()[0], Word(4, 0));
    EXPECT_EQ(hamming7().size(), 16u);
    LinearCodeZn sub(4, 1, {{2}});
    EXPECT_EQ(sub.codewords(), (std::vector<Word>{{0}, {2}}));
}

TEST(Span, random_matches_oracle) {
    std::mt19937 rng(71);
    for (std::uint32_t n : {2u, 3u, 4u, 6u}) {
        for (int trial = 0; trial < 15; trial++) {
            std::uint32_t len = 1 + static_cast<std::uint32_t>(trial % 4);
            LinearCodeZn c = random_code(rng, n, len);
            EXPECT_EQ(as_set(c), span_oracle(n, len, c.generators()));
            EXPECT_TRUE(std::is_sorted(c.codewords().begin(), c.codewords().end()));
            for (const auto &w : all_words(n, len)) {
                EXPECT_EQ(c.contains(w), as_set(c).count(w) == 1);
            }
            LinearCodeZn again = LinearCodeZn::from_codewords(n, len, c.codewords());
            EXPECT_EQ(again, c);
            EXPECT_EQ(LinearCodeZn(n, len, again.generators()), c);
        }
    }
}

TEST(Dual, examples) {
    LinearCodeZn zero(3, 3, {});
    EXPECT_EQ(dual(zero).size(), 27u);
    LinearCodeZn ext = nb_test::load_code("hamming8.gen");
    EXPECT_EQ(ext.size(), 16u);
    EXPECT_EQ(dual(ext), ext);
    EXPECT_TRUE(is_self_dual(ext));
}

TEST(Dual, random_matches_oracle_and_double_dual) {
    std::mt19937 rng(72);
    for (std::uint32_t n : {2u, 3u, 4u, 5u, 6u}) {
        for (int trial = 0; trial < 12; trial++) {
            std::uint32_t len = 1 + static_cast<std::uint32_t>(trial % (n <= 3 ? 6 : 4));
            LinearCodeZn c = random_code(rng, n, len);
            LinearCodeZn d = dual(c);
            EXPECT_EQ(as_set(d), dual_oracle(n, len, as_set(c)));
            EXPECT_EQ(dual(d), c);
            EXPECT_EQ(c.size() * d.size(), ambient_size(n, len));
            for (const auto &a : c.codewords()) {
                for (const auto &b : d.codewords()) {
                    EXPECT_EQ(dot(a, b, n), 0u);
                }
            }
            if (is_prime(n)) {
                EXPECT_EQ(dual_prime_fast(c), d);
            }
        }
    }
}

TEST(Dual, prime_fast_rejects_composite) {
    EXPECT_THROW(dual_prime_fast(LinearCodeZn(4, 2, {{1, 2}})), std::exception);
}

TEST(Puncture, extended_hamming) {
    LinearCodeZn ext = nb_test::load_code("hamming8.gen");
    LinearCodeZn p = puncture_last(ext);
    EXPECT_EQ(p.length(), 7u);
    EXPECT_EQ(p.size(), 16u);
    EXPECT_EQ(min_weight(p), 3u);
    LinearCodeZn s = shorten_last(ext);
    EXPECT_EQ(s.size(), 8u);
    for (const auto &w : s.codewords()) {
        EXPECT_EQ(weight(w) % 2, 0u);
        EXPECT_TRUE(p.contains(w));
    }
    LinearCodeZn zero(2, 3, {});
    EXPECT_EQ(puncture_last(zero).size(), 1u);
    EXPECT_EQ(shorten_last(zero).size(), 1u);
}

TEST(Puncture, random_matches_oracle) {
    std::mt19937 rng(73);
    for (std::uint32_t n : {2u, 3u, 4u, 6u}) {
        for (int trial = 0; trial < 10; trial++) {
            std::uint32_t len = 2 + static_cast<std::uint32_t>(trial % 3);
            LinearCodeZn c = random_code(rng, n, len);
            std::set<Word> punct, short_;
            bool collide = false;
            for (const auto &w : c.codewords()) {
                Word head(w.begin(), w.end() - 1);
                collide |= !punct.insert(head).second;
                if (w.back() == 0) {
                    short_.insert(head);
                }
            }
            LinearCodeZn p = puncture_last(c), s = shorten_last(c);
            EXPECT_EQ(as_set(p), punct);
            EXPECT_EQ(as_set(s), short_);
            EXPECT_EQ(p.size() == c.size(), !collide);
            std::set<std::uint32_t> lasts;
            for (const auto &w : c.codewords()) {
                lasts.insert(w.back());
            }
            EXPECT_EQ(last_coord_surjective(c), lasts.size() == n);
        }
    }
}

TEST(LastCoordinate, examples) {
    EXPECT_TRUE(last_coord_surjective(nb_test::load_code("hamming8.gen")));
    EXPECT_FALSE(last_coord_surjective(LinearCodeZn(4, 2, {{0, 2}})));
    EXPECT_FALSE(last_coord_surjective(LinearCodeZn(3, 2, {})));
    Word e1 = find_e1(nb_test::load_code("hamming8.gen"));
    EXPECT_EQ(e1.back(), 1u);
    EXPECT_EQ(weight(e1), 4u);
    EXPECT_EQ(find_e1(LinearCodeZn(5, 1, {{1}})), Word{1});
    EXPECT_THROW(find_e1(LinearCodeZn(4, 1, {{2}})), NoUnitLastCoordinate);
}

TEST(LastCoordinate, e1_is_lex_least) {
    LinearCodeZn c = nb_test::load_code("tetracode.gen");
    Word best;
    for (const auto &w : c.codewords()) {
        if (w.back() == 1 && (best.empty() || w < best)) {
            best = w;
        }
    }
    EXPECT_EQ(find_e1(c), best);
}

TEST(MinWeight, examples) {
    EXPECT_EQ(min_weight(hamming7()), 3u);
    EXPECT_EQ(min_weight(LinearCodeZn(2, 4, {})), kInfiniteWeight);
    LinearCodeZn tetra = nb_test::load_code("tetracode.gen");
    EXPECT_EQ(tetra.size(), 9u);
    EXPECT_EQ(min_weight(tetra), 3u);
}

TEST(MinWeight, golay_is_self_dual_12_6_6) {
    LinearCodeZn g = nb_test::load_code("golay12.gen");
    EXPECT_EQ(g.size(), 729u);
    EXPECT_EQ(min_weight(g), 6u);
    EXPECT_TRUE(is_self_dual(g));
    EXPECT_EQ(dual_prime_fast(g), g);
    LinearCodeZn p = puncture_last(g);
    EXPECT_EQ(min_weight(p), 5u);
}

TEST(CosetLeaders, examples) {
    LinearCodeZn full(3, 2, {{1, 0}, {0, 1}});
    EXPECT_EQ(coset_leaders(full), (std::vector<Word>{{0, 0}}));
    std::vector<Word> leaders = coset_leaders(hamming7());
    ASSERT_EQ(leaders.size(), 8u);
    EXPECT_EQ(leaders[0], Word(7, 0));
    for (size_t i = 1; i < 8; i++) {
        EXPECT_EQ(weight(leaders[i]), 1u);
    }
}

TEST(CosetLeaders, random_partition_and_minimality) {
    std::mt19937 rng(74);
    for (std::uint32_t n : {2u, 3u, 4u, 6u}) {
        for (int trial = 0; trial < 8; trial++) {
            std::uint32_t len = 1 + static_cast<std::uint32_t>(trial % 4);
            LinearCodeZn c = random_code(rng, n, len);
            std::vector<Word> leaders = coset_leaders(c);
            EXPECT_EQ(leaders.size() * c.size(), ambient_size(n, len));
            std::set<Word> covered;
            for (const auto &l : leaders) {
                for (const auto &w : c.codewords()) {
                    Word v = add_mod(l, w, n);
                    EXPECT_TRUE(covered.insert(v).second);
                    EXPECT_LE(weight(l), weight(v));
                    if (weight(l) == weight(v)) {
                        EXPECT_LE(l, v);
                    }
                }
            }
            EXPECT_EQ(covered.size(), ambient_size(n, len));
            for (size_t i = 1; i < leaders.size(); i++) {
                auto key = [](const Word &w) { return std::make_pair(weight(w), w); };
                EXPECT_LT(key(leaders[i - 1]), key(leaders[i]));
            }
        }
    }
}

TEST(Words, packing_roundtrip_and_order) {
    std::mt19937 rng(75);
    for (std::uint32_t n : {2u, 3u, 7u}) {
        std::vector<Word> words = all_words(n, 3);
        for (size_t i = 0; i < words.size(); i++) {
            EXPECT_EQ(pack_word(words[i], n), i);
            EXPECT_EQ(unpack_word(i, n, 3), words[i]);
        }
    }
    EXPECT_EQ(hamming_weight(Word{0, 3, 0, 1}), 2u);
    EXPECT_EQ(dot_mod(Word{1, 2}, Word{3, 4}, 5), 1u);
    EXPECT_EQ(sub_mod(Word{0, 1}, Word{1, 1}, 4), (Word{3, 0}));
    EXPECT_EQ(scale_mod(Word{1, 2}, 3, 4), (Word{3, 2}));
}

TEST(Guards, oversized_ambient_throws) {
    Guards g;
    g.max_ambient = 100;
    EXPECT_THROW(dual(LinearCodeZn(3, 6, {}), g), GuardExceeded);
    EXPECT_THROW(coset_leaders(LinearCodeZn(3, 6, {}), g), GuardExceeded);
}

TEST(Code, rejects_out_of_range_entries) {
    EXPECT_THROW(LinearCodeZn(3, 2, {{0, 3}}), std::exception);
    EXPECT_THROW(LinearCodeZn(3, 2, {{0}}), std::exception);
}
