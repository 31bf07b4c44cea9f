#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace gdm {

/// Simple undirected graph on vertices {0,...,n-1}. Immutable after
/// construction; stores both the sorted edge list and per-vertex sorted
/// neighbor lists so weight sums cost O(deg).
class Graph {
public:
    explicit Graph(int n);
    Graph(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    bool adjacent(int u, int v) const;

    /// Common degree of all vertices, or absent if not regular.
    std::optional<int> regular_degree() const;

    bool operator==(const Graph& other) const = default;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_; // normalized u < v, sorted
    std::vector<std::vector<int>> adj_;
};

// Named generators. Vertex numbering is documented and fixed.
Graph cycle(int n);                        // n >= 3, vertices in cycle order
Graph complete(int n);                     // n >= 1
Graph complete_bipartite(int m, int n);    // parts {0..m-1} and {m..m+n-1}
Graph empty_graph(int n);                  // n >= 0

/// t >= 2 copies of C_m sharing vertex 0. Copy i occupies vertices
/// (m-1)*i+1 ... (m-1)*i+(m-1) in cycle order starting and ending at 0;
/// for m = 4 that is the cycle 0, 3i+1, 3i+2, 3i+3, 0.
Graph dutch_windmill(int m, int t);

/// Circulant graph on Z_n with the given connection offsets.
Graph circulant(int n, const std::vector<int>& offsets);

/// Lexicographic product: one copy of `inner` per vertex of `outer`, copies
/// of adjacent outer vertices completely joined. Vertex (i, j) gets index
/// i*|inner| + j, so deg(i,j) = deg_inner(j) + |inner| * deg_outer(i).
Graph lexicographic_product(const Graph& outer, const Graph& inner);

/// The common residue c of all degrees mod `modulus`, or absent if degrees
/// fall in different classes.
std::optional<std::int64_t> degree_class(const Graph& g, std::int64_t modulus);

struct TwoAdic {
    int exponent;           // p in n = 2^p * odd
    std::int64_t odd_part;
};
TwoAdic two_adic_valuation(std::int64_t n); // n >= 1

/// G(n, p) with a fixed threshold rule on raw mt19937 draws, so corpora are
/// reproducible across platforms.
Graph random_graph(int n, double edge_probability, std::mt19937& rng);

} // namespace gdm
