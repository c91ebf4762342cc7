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

#ifndef NB_ZNCODES_H
#define NB_ZNCODES_H

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace nb {

/// A vector in Z_n^L.
using Word = std::vector<std::uint32_t>;

/// Resource caps for exhaustive scans.
struct Guards {
    /// Largest ambient space n^L (or index space) that may be scanned.
    std::uint64_t max_ambient = std::uint64_t{1} << 24;
    /// Largest dimension for dense matrix paths.
    std::uint64_t max_dense_dim = 256;
};

class GuardExceeded : public std::runtime_error {
   public:
    GuardExceeded(const std::string &guard, std::uint64_t requested, std::uint64_t limit);
    std::string guard;
};

class NoUnitLastCoordinate : public std::runtime_error {
   public:
    NoUnitLastCoordinate() : std::runtime_error("no codeword has last coordinate 1") {
    }
};

/// Sentinel minimum weight of the zero code.
inline constexpr size_t kInfiniteWeight = std::numeric_limits<size_t>::max();

size_t hamming_weight(std::span<const std::uint32_t> w);
std::uint32_t dot_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b, std::uint32_t n);
Word add_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b, std::uint32_t n);
Word sub_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b, std::uint32_t n);
Word scale_mod(std::span<const std::uint32_t> a, std::uint64_t k, std::uint32_t n);

/// Big-endian base-n packing; lexicographic order on words equals numeric
/// order on their packings.
std::uint64_t pack_word(std::span<const std::uint32_t> w, std::uint32_t n);
Word unpack_word(std::uint64_t packed, std::uint32_t n, std::uint32_t length);
/// n^length, or throws if it does not fit in 64 bits.
std::uint64_t ambient_size(std::uint32_t n, std::uint32_t length);

/// The Z_n-span of a set of generators in Z_n^L, with its codewords
/// enumerated at construction.
class LinearCodeZn {
   public:
    /// The zero code of length 1 over Z_2.
    LinearCodeZn();
    LinearCodeZn(std::uint32_t n, std::uint32_t length, std::vector<Word> generators, const Guards &guards = {});

    /// Wraps a codeword list already known to be a subgroup; the generators
    /// become an irredundant subset of it.
    static LinearCodeZn from_codewords(std::uint32_t n, std::uint32_t length, std::vector<Word> words);

    std::uint32_t modulus() const {
        return n_;
    }
    std::uint32_t length() const {
        return length_;
    }
    const std::vector<Word> &generators() const {
        return generators_;
    }
    /// Sorted lexicographically.
    const std::vector<Word> &codewords() const {
        return words_;
    }
    size_t size() const {
        return words_.size();
    }
    bool contains(std::span<const std::uint32_t> w) const;
    bool contains_packed(std::uint64_t packed) const {
        return packed_.count(packed) != 0;
    }

    friend bool operator==(const LinearCodeZn &a, const LinearCodeZn &b) {
        return a.n_ == b.n_ && a.length_ == b.length_ && a.words_ == b.words_;
    }

   private:
    void index_words();

    std::uint32_t n_ = 2;
    std::uint32_t length_ = 1;
    std::vector<Word> generators_;
    std::vector<Word> words_;
    std::unordered_set<std::uint64_t> packed_;
};

/// All distinct Z_n-combinations of the generators, sorted.
std::vector<Word> enumerate_span(
    std::uint32_t n, std::uint32_t length, std::span<const Word> generators, const Guards &guards = {});

/// Greedy irredundant generating subset of a subgroup, scanning in order.
std::vector<Word> generating_set(std::uint32_t n, std::uint32_t length, std::span<const Word> words);

/// {v : v.g = 0 mod n for all g}, by scanning Z_n^L.
LinearCodeZn dual(const LinearCodeZn &code, const Guards &guards = {});
/// Null space by row reduction; n must be prime.
LinearCodeZn dual_prime_fast(const LinearCodeZn &code, const Guards &guards = {});

/// C': drop the last coordinate of every codeword.
LinearCodeZn puncture_last(const LinearCodeZn &code);
/// C'_0: keep words ending in 0, then drop the last coordinate.
LinearCodeZn shorten_last(const LinearCodeZn &code);

bool last_coord_surjective(const LinearCodeZn &code);
/// Lexicographically least codeword whose last coordinate is exactly 1.
Word find_e1(const LinearCodeZn &code);

/// Minimum weight of a nonzero codeword, kInfiniteWeight for the zero code.
size_t min_weight(const LinearCodeZn &code);

/// One representative per coset of the code in Z_n^L: minimum weight, ties
/// broken lexicographically. Returned in (weight, lex) order; the zero word
/// comes first.
std::vector<Word> coset_leaders(const LinearCodeZn &code, const Guards &guards = {});

bool is_self_dual(const LinearCodeZn &code, const Guards &guards = {});

bool is_prime(std::uint32_t n);

}  // namespace nb

#endif
