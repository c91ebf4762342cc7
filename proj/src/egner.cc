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
#include <deque>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "nb/errorbasis.h"

namespace nb {

std::vector<MonomialMatrix> close_group(std::span<const MonomialMatrix> generators, size_t limit) {
    if (generators.empty()) {
        throw std::invalid_argument("close_group: need at least one generator");
    }
    std::vector<MonomialMatrix> elements{MonomialMatrix::identity(generators[0].dim())};
    std::unordered_set<std::string> seen{elements[0].key()};
    for (size_t next = 0; next < elements.size(); next++) {
        for (const auto &g : generators) {
            MonomialMatrix product = mono_compose(elements[next], g);
            if (seen.insert(product.key()).second) {
                elements.push_back(std::move(product));
                if (elements.size() > limit) {
                    throw std::runtime_error("close_group: group exceeds size limit");
                }
            }
        }
    }
    return elements;
}

namespace {

size_t identity_of(const CayleyTable &t) {
    for (size_t e = 0; e < t.size(); e++) {
        bool ok = true;
        for (size_t x = 0; x < t.size() && ok; x++) {
            ok = t[e][x] == x && t[x][e] == x;
        }
        if (ok) {
            return e;
        }
    }
    throw std::invalid_argument("Cayley table has no identity");
}

size_t element_order(const CayleyTable &t, size_t e, size_t g) {
    size_t k = 1;
    for (size_t x = g; x != e; x = t[x][g]) {
        k++;
        if (k > t.size()) {
            throw std::invalid_argument("Cayley table is not a group");
        }
    }
    return k;
}

// Subgroup generated by `seeds`, as a membership mask.
std::vector<bool> generated_subgroup(const CayleyTable &t, size_t e, const std::vector<size_t> &seeds) {
    std::vector<bool> in(t.size(), false);
    std::vector<size_t> members{e};
    in[e] = true;
    for (size_t next = 0; next < members.size(); next++) {
        for (size_t s : seeds) {
            size_t y = t[members[next]][s];
            if (!in[y]) {
                in[y] = true;
                members.push_back(y);
            }
        }
    }
    return in;
}

}  // namespace

GroupInvariants group_invariants(const CayleyTable &table) {
    GroupInvariants inv;
    size_t n = table.size();
    size_t e = identity_of(table);
    inv.order = n;
    std::vector<size_t> inverse(n);
    for (size_t g = 0; g < n; g++) {
        for (size_t h = 0; h < n; h++) {
            if (table[g][h] == e) {
                inverse[g] = h;
            }
        }
        inv.order_profile[element_order(table, e, g)]++;
    }
    for (size_t g = 0; g < n; g++) {
        bool central = true;
        for (size_t h = 0; h < n && central; h++) {
            central = table[g][h] == table[h][g];
        }
        inv.center_size += central;
    }
    std::vector<size_t> commutators;
    for (size_t a = 0; a < n; a++) {
        for (size_t b = 0; b < n; b++) {
            commutators.push_back(table[table[table[a][b]][inverse[a]]][inverse[b]]);
        }
    }
    std::vector<bool> derived = generated_subgroup(table, e, commutators);
    size_t derived_size = std::count(derived.begin(), derived.end(), true);
    inv.abelianization_size = n / derived_size;
    inv.abelianization_exponent = 1;
    for (size_t g = 0; g < n; g++) {
        size_t k = 1;
        for (size_t x = g; !derived[x]; x = table[x][g]) {
            k++;
        }
        inv.abelianization_exponent = std::lcm(inv.abelianization_exponent, k);
    }
    return inv;
}

CayleyTable z2_x_d4_table() {
    auto index = [](size_t a, size_t b, size_t c) { return a * 8 + c * 4 + b; };
    CayleyTable t(16, std::vector<size_t>(16));
    for (size_t a = 0; a < 2; a++) {
        for (size_t b = 0; b < 4; b++) {
            for (size_t c = 0; c < 2; c++) {
                for (size_t a2 = 0; a2 < 2; a2++) {
                    for (size_t b2 = 0; b2 < 4; b2++) {
                        for (size_t c2 = 0; c2 < 2; c2++) {
                            // (r^b s^c)(r^b2 s^c2) = r^(b + (-1)^c b2) s^(c + c2)
                            size_t rb = c == 0 ? (b + b2) % 4 : (b + 4 - b2) % 4;
                            t[index(a, b, c)][index(a2, b2, c2)] = index((a + a2) % 2, rb, (c + c2) % 2);
                        }
                    }
                }
            }
        }
    }
    return t;
}

std::vector<size_t> z2_x_d4_generators() {
    return {8, 1, 4};
}

std::optional<Isomorphism> find_isomorphism(
    const CayleyTable &source, std::span<const size_t> source_generators, const CayleyTable &target) {
    size_t n = source.size();
    if (target.size() != n || source_generators.empty()) {
        return std::nullopt;
    }
    size_t es = identity_of(source);
    size_t et = identity_of(target);
    size_t k = source_generators.size();
    std::vector<size_t> source_orders(k);
    for (size_t g = 0; g < k; g++) {
        source_orders[g] = element_order(source, es, source_generators[g]);
    }
    std::vector<size_t> images(k, 0);
    constexpr size_t kUnset = static_cast<size_t>(-1);
    while (true) {
        bool orders_ok = true;
        for (size_t g = 0; g < k && orders_ok; g++) {
            orders_ok = element_order(target, et, images[g]) == source_orders[g];
        }
        if (orders_ok) {
            std::vector<size_t> map(n, kUnset);
            map[es] = et;
            std::deque<size_t> queue{es};
            bool consistent = true;
            while (!queue.empty() && consistent) {
                size_t x = queue.front();
                queue.pop_front();
                for (size_t g = 0; g < k; g++) {
                    size_t y = source[x][source_generators[g]];
                    size_t image = target[map[x]][images[g]];
                    if (map[y] == kUnset) {
                        map[y] = image;
                        queue.push_back(y);
                    } else if (map[y] != image) {
                        consistent = false;
                        break;
                    }
                }
            }
            if (consistent && std::find(map.begin(), map.end(), kUnset) == map.end()) {
                std::vector<size_t> sorted = map;
                std::sort(sorted.begin(), sorted.end());
                bool bijective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
                bool homomorphic = bijective;
                for (size_t a = 0; a < n && homomorphic; a++) {
                    for (size_t b = 0; b < n && homomorphic; b++) {
                        homomorphic = map[source[a][b]] == target[map[a]][map[b]];
                    }
                }
                if (homomorphic) {
                    return Isomorphism{map, images};
                }
            }
        }
        size_t pos = 0;
        while (pos < k && ++images[pos] == n) {
            images[pos] = 0;
            pos++;
        }
        if (pos == k) {
            return std::nullopt;
        }
    }
}

MonomialMatrix egner_a() {
    return MonomialMatrix(4, {0, 1, 2, 3}, {0, 2, 0, 2});
}

MonomialMatrix egner_b() {
    // Column j -> row perm[j] with entry i^phase.
    return MonomialMatrix(4, {1, 0, 3, 2}, {0, 3, 0, 1});
}

MonomialMatrix egner_c() {
    return MonomialMatrix(4, {2, 3, 0, 1}, {0, 3, 0, 1});
}

EgnerResult build_egner() {
    EgnerResult r;
    MonomialMatrix a = egner_a(), b = egner_b(), c = egner_c();
    MonomialMatrix id = MonomialMatrix::identity(4);
    MonomialMatrix minus_id = id.scalar_mul(2, 1);
    std::vector<MonomialMatrix> gens{a, b, c};
    r.group = close_group(gens);

    r.relations = {
        {"A^2 = I", a.power(2) == id},
        {"C^2 = I", c.power(2) == id},
        {"AB = -BA", mono_compose(a, b) == mono_compose(b, a).scalar_mul(2, 1)},
        {"AC = CA", mono_compose(a, c) == mono_compose(c, a)},
        {"BC = CB^-1", mono_compose(b, c) == mono_compose(c, b.adjoint())},
        {"B^4 = -I", b.power(4) == minus_id},
    };
    for (const auto &[name, ok] : r.relations) {
        if (!ok) {
            throw std::runtime_error("build_egner: relation fails: " + name);
        }
    }
    for (const auto &g : r.group) {
        bool central = true;
        for (const auto &h : gens) {
            central = central && mono_compose(g, h) == mono_compose(h, g);
        }
        if (central) {
            r.center.push_back(g);
        }
    }
    if (r.group.size() != 32) {
        throw std::runtime_error("build_egner: group order is " + std::to_string(r.group.size()) + ", expected 32");
    }
    if (r.center.size() != 2 || !(r.center[0] == id || r.center[1] == id) ||
        !(r.center[0] == minus_id || r.center[1] == minus_id)) {
        throw std::runtime_error("build_egner: center is not {I, -I}");
    }

    // Encoding for the lexicographic rule: (perm, phases over the group order).
    std::uint32_t m = 1;
    for (const auto &g : r.group) {
        m = std::lcm(m, g.order());
    }
    auto encoding = [m](const MonomialMatrix &g) {
        MonomialMatrix l = g.lifted(m);
        return std::make_pair(l.perm(), l.phases());
    };
    std::unordered_map<std::string, size_t> index_of;
    for (size_t k = 0; k < r.group.size(); k++) {
        index_of.emplace(r.group[k].key(), k);
    }
    std::vector<bool> assigned(r.group.size(), false);
    std::vector<MonomialMatrix> reps;
    for (const auto &g : r.group) {
        if (assigned[index_of.at(g.key())]) {
            continue;
        }
        std::vector<MonomialMatrix> coset;
        for (const auto &z : r.center) {
            MonomialMatrix gz = mono_compose(g, z);
            assigned[index_of.at(gz.key())] = true;
            coset.push_back(gz);
        }
        bool has_identity = std::any_of(coset.begin(), coset.end(), [&](const auto &x) { return x == id; });
        if (has_identity) {
            continue;
        }
        reps.push_back(*std::min_element(coset.begin(), coset.end(), [&](const auto &x, const auto &y) {
            return encoding(x) < encoding(y);
        }));
    }
    std::sort(reps.begin(), reps.end(), [&](const auto &x, const auto &y) { return encoding(x) < encoding(y); });
    r.basis.dim = 4;
    r.basis.elements.emplace_back(id);
    r.basis.labels.push_back("I");
    for (size_t k = 0; k < reps.size(); k++) {
        r.basis.elements.emplace_back(reps[k].lifted(m).reduced());
        r.basis.labels.push_back("g" + std::to_string(k + 1));
    }
    return r;
}

}  // namespace nb
