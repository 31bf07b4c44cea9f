#include "gdm/graph.hpp"

#include <algorithm>

#include "gdm/errors.hpp"

namespace gdm {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
    if (n < 0) throw ArgumentError("graph: vertex count must be >= 0");
}

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : Graph(n) {
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw ArgumentError("graph: vertex out of range");
        if (u == v) throw ArgumentError("graph: loops are not allowed");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw ArgumentError("graph: duplicate edge");
    edges_ = std::move(edges);
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= n_) throw ArgumentError("graph: vertex out of range");
    return adj_[v];
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

bool Graph::adjacent(int u, int v) const {
    const auto& nb = neighbors(u);
    if (v < 0 || v >= n_) throw ArgumentError("graph: vertex out of range");
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<int> Graph::regular_degree() const {
    if (n_ == 0) return std::nullopt;
    int r = degree(0);
    for (int v = 1; v < n_; ++v)
        if (degree(v) != r) return std::nullopt;
    return r;
}

Graph cycle(int n) {
    if (n < 3) throw ArgumentError("cycle: need n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(e));
}

Graph complete(int n) {
    if (n < 1) throw ArgumentError("complete: need n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, std::move(e));
}

Graph complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) throw ArgumentError("complete_bipartite: need m, n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) e.emplace_back(i, m + j);
    return Graph(m + n, std::move(e));
}

Graph empty_graph(int n) { return Graph(n); }

Graph dutch_windmill(int m, int t) {
    if (m < 3) throw ArgumentError("dutch_windmill: need m >= 3");
    if (t < 2) throw ArgumentError("dutch_windmill: need t >= 2 copies");
    int per = m - 1;
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < t; ++i) {
        int first = per * i + 1;
        e.emplace_back(0, first);
        for (int j = 0; j + 1 < per; ++j) e.emplace_back(first + j, first + j + 1);
        e.emplace_back(first + per - 1, 0);
    }
    return Graph(1 + per * t, std::move(e));
}

Graph circulant(int n, const std::vector<int>& offsets) {
    if (n < 1) throw ArgumentError("circulant: need n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int d : offsets) {
        int r = ((d % n) + n) % n;
        if (r == 0) throw ArgumentError("circulant: offset divisible by n");
        for (int i = 0; i < n; ++i) {
            int j = (i + r) % n;
            if (i < j) e.emplace_back(i, j);
            else e.emplace_back(j, i);
        }
    }
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    return Graph(n, std::move(e));
}

Graph lexicographic_product(const Graph& outer, const Graph& inner) {
    int no = outer.vertex_count(), ni = inner.vertex_count();
    if (no == 0 || ni == 0) throw ArgumentError("lexicographic_product: both graphs must be nonempty");
    std::vector<std::pair<int, int>> e;
    e.reserve(static_cast<std::size_t>(no) * inner.edge_count() +
              static_cast<std::size_t>(outer.edge_count()) * ni * ni);
    for (int i = 0; i < no; ++i)
        for (auto [a, b] : inner.edges()) e.emplace_back(i * ni + a, i * ni + b);
    for (auto [u, v] : outer.edges())
        for (int a = 0; a < ni; ++a)
            for (int b = 0; b < ni; ++b) e.emplace_back(u * ni + a, v * ni + b);
    return Graph(no * ni, std::move(e));
}

std::optional<std::int64_t> degree_class(const Graph& g, std::int64_t modulus) {
    if (modulus < 1) throw ArgumentError("degree_class: modulus must be >= 1");
    if (g.vertex_count() == 0) return 0 % modulus;
    std::int64_t c = g.degree(0) % modulus;
    for (int v = 1; v < g.vertex_count(); ++v)
        if (g.degree(v) % modulus != c) return std::nullopt;
    return c;
}

TwoAdic two_adic_valuation(std::int64_t n) {
    if (n < 1) throw ArgumentError("two_adic_valuation: need n >= 1");
    int p = 0;
    while (n % 2 == 0) { n /= 2; ++p; }
    return {p, n};
}

Graph random_graph(int n, double edge_probability, std::mt19937& rng) {
    if (n < 0) throw ArgumentError("random_graph: need n >= 0");
    // Threshold on raw 32-bit draws keeps the corpus identical everywhere
    // (distribution adaptors are implementation-defined).
    auto threshold = static_cast<std::uint64_t>(edge_probability * 4294967296.0);
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (static_cast<std::uint64_t>(rng()) < threshold) e.emplace_back(i, j);
    return Graph(n, std::move(e));
}

} // namespace gdm
