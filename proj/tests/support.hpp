#pragma once

// Shared test apparatus: independent brute-force oracles (no pruning, no
// code shared with the search engine), a partition-count oracle, and the
// seeded graph corpora. Everything here is deliberately the dumb obvious
// computation.

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "gdm/abelian.hpp"
#include "gdm/graph.hpp"
#include "gdm/labeling.hpp"

namespace testsupport {

// Enumerates every bijection V -> group and checks constant weight by
// direct modular summation.
inline std::optional<gdm::GroupLabeling> naive_group_search(const gdm::Graph& g,
                                                            const gdm::AbelianGroup& grp) {
    int n = g.vertex_count();
    if (grp.order() != n) return std::nullopt;
    auto elems = gdm::enumerate_elements(grp);
    const auto& factors = grp.factors();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        std::vector<std::int64_t> ref;
        for (int v = 0; v < n && ok; ++v) {
            std::vector<std::int64_t> w(factors.size(), 0);
            for (int u : g.neighbors(v))
                for (std::size_t t = 0; t < factors.size(); ++t)
                    w[t] = (w[t] + elems[static_cast<std::size_t>(perm[u])].residues[t]) % factors[t];
            if (v == 0) ref = w;
            else if (w != ref) ok = false;
        }
        if (ok) {
            gdm::GroupLabeling lab{grp, {}};
            for (int v = 0; v < n; ++v) lab.values.push_back(elems[static_cast<std::size_t>(perm[v])]);
            return lab;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

inline std::optional<gdm::ClassicLabeling> naive_classic_search(const gdm::Graph& g) {
    int n = g.vertex_count();
    std::vector<std::int64_t> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    do {
        std::int64_t ref = -1;
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            std::int64_t w = 0;
            for (int u : g.neighbors(v)) w += perm[static_cast<std::size_t>(u)];
            if (v == 0) ref = w;
            else if (w != ref) ok = false;
        }
        if (ok && ref >= 1) return gdm::ClassicLabeling{perm};
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

// Number of integer partitions of each 0..n.
inline std::vector<long long> partition_table(int n) {
    std::vector<long long> ways(static_cast<std::size_t>(n) + 1, 0);
    ways[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int j = part; j <= n; ++j) ways[static_cast<std::size_t>(j)] += ways[static_cast<std::size_t>(j - part)];
    return ways;
}

// Independent count of abelian groups of a given order.
inline long long abelian_group_count(std::int64_t order) {
    static const auto table = partition_table(64);
    long long count = 1;
    for (std::int64_t p = 2; p * p <= order; ++p) {
        if (order % p) continue;
        int e = 0;
        while (order % p == 0) { order /= p; ++e; }
        count *= table[static_cast<std::size_t>(e)];
    }
    if (order > 1) count *= table[1];
    return count;
}

// Deterministic mixed corpus: sizes cycle 1..max_n, densities cycle through
// empty / sparse / medium / dense / complete, so non-regular and
// disconnected graphs are guaranteed to appear.
inline std::vector<gdm::Graph> seeded_corpus(int count, int max_n, std::uint32_t seed) {
    std::mt19937 rng(seed);
    const double probs[] = {0.0, 0.2, 0.4, 0.6, 0.8, 1.0};
    std::vector<gdm::Graph> out;
    for (int i = 0; static_cast<int>(out.size()) < count; ++i) {
        int n = 1 + i % max_n;
        out.push_back(gdm::random_graph(n, probs[(i / max_n) % 6], rng));
    }
    return out;
}

// All 7 graphs on at most 3 vertices, up to isomorphism.
inline std::vector<gdm::Graph> graphs_up_to_3() {
    using G = gdm::Graph;
    return {
        G(1),
        G(2),
        G(2, {{0, 1}}),
        G(3),
        G(3, {{0, 1}}),
        G(3, {{0, 1}, {1, 2}}),
        G(3, {{0, 1}, {1, 2}, {0, 2}}),
    };
}

inline gdm::Graph petersen() {
    return gdm::Graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                           {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                           {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

// sum_all oracle: fold the group operation over the full enumeration.
inline gdm::GroupElement brute_sum_all(const gdm::AbelianGroup& g) {
    gdm::GroupElement acc = gdm::identity(g);
    for (const auto& e : gdm::enumerate_elements(g)) acc = gdm::add(g, acc, e);
    return acc;
}

} // namespace testsupport
