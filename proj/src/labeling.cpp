#include "gdm/labeling.hpp"

#include <algorithm>
#include <unordered_map>

#include "gdm/errors.hpp"

namespace gdm {

const char* to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::Magic: return "magic";
        case VerdictStatus::NotInjective: return "not-injective";
        case VerdictStatus::NonConstantWeight: return "non-constant-weight";
    }
    return "?";
}

GroupElement weight(const Graph& g, const GroupLabeling& l, int v) {
    if (l.values.size() != static_cast<std::size_t>(g.vertex_count()))
        throw ArgumentError("weight: labeling length does not match vertex count");
    GroupElement w = identity(l.group);
    for (int u : g.neighbors(v)) w = add(l.group, w, l.values[u]);
    return w;
}

std::int64_t weight(const Graph& g, const ClassicLabeling& l, int v) {
    if (l.values.size() != static_cast<std::size_t>(g.vertex_count()))
        throw ArgumentError("weight: labeling length does not match vertex count");
    std::int64_t w = 0;
    for (int u : g.neighbors(v)) w += l.values[u];
    return w;
}

GroupVerdict verify_group(const Graph& g, const GroupLabeling& l) {
    int n = g.vertex_count();
    if (l.values.size() != static_cast<std::size_t>(n))
        throw ArgumentError("verify_group: labeling length does not match vertex count");
    if (l.group.order() != n)
        throw ArgumentError("verify_group: group order must equal vertex count");
    for (const auto& v : l.values)
        if (!element_valid(l.group, v)) throw ArgumentError("verify_group: invalid group element");

    // Injectivity first; report the earliest duplicated pair.
    std::unordered_map<std::int64_t, int> seen;
    for (int v = 0; v < n; ++v) {
        auto [it, fresh] = seen.try_emplace(element_index(l.group, l.values[v]), v);
        if (!fresh) return {VerdictStatus::NotInjective, std::nullopt, std::pair{it->second, v}, std::nullopt};
    }

    GroupElement mu = weight(g, l, 0);
    for (int v = 1; v < n; ++v)
        if (weight(g, l, v) != mu)
            return {VerdictStatus::NonConstantWeight, std::nullopt, std::nullopt, v};
    return {VerdictStatus::Magic, std::move(mu), std::nullopt, std::nullopt};
}

ClassicVerdict verify_classic(const Graph& g, const ClassicLabeling& l) {
    int n = g.vertex_count();
    if (n == 0) throw ArgumentError("verify_classic: empty graph");
    if (l.values.size() != static_cast<std::size_t>(n))
        throw ArgumentError("verify_classic: labeling length does not match vertex count");
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    for (std::int64_t x : l.values) {
        if (x < 1 || x > n) throw ArgumentError("verify_classic: label outside {1..n}");
        if (used[static_cast<std::size_t>(x)]) throw ArgumentError("verify_classic: repeated label");
        used[static_cast<std::size_t>(x)] = true;
    }

    std::int64_t k = weight(g, l, 0);
    for (int v = 1; v < n; ++v)
        if (weight(g, l, v) != k)
            return {VerdictStatus::NonConstantWeight, std::nullopt, v};
    if (auto r = g.regular_degree()) {
        // For regular graphs the magic constant is forced: summing all
        // weights counts each label deg times, so n*k = r * n(n+1)/2.
        if (2 * k != static_cast<std::int64_t>(*r) * (n + 1))
            throw InternalCheckError("verify_classic: magic constant violates k = r(n+1)/2");
    }
    return {VerdictStatus::Magic, k, std::nullopt};
}

GroupLabeling classic_as_zn(const ClassicLabeling& l) {
    auto n = static_cast<std::int64_t>(l.values.size());
    if (n == 0) throw ArgumentError("classic_as_zn: empty labeling");
    GroupLabeling out{n == 1 ? AbelianGroup{} : AbelianGroup({n}), {}};
    out.values.reserve(l.values.size());
    for (std::int64_t x : l.values)
        out.values.push_back(n == 1 ? identity(out.group) : GroupElement{{x % n}});
    return out;
}

} // namespace gdm
