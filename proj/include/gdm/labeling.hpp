#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gdm/abelian.hpp"
#include "gdm/graph.hpp"

namespace gdm {

/// Vertex -> group element assignment; values[v] labels vertex v.
/// A complete distance magic candidate has |V| = group order and the
/// verifier additionally enforces injectivity (then a bijection).
struct GroupLabeling {
    AbelianGroup group;
    std::vector<GroupElement> values;
};

/// Vertex -> {1..n} assignment; must be a bijection to be verifiable.
struct ClassicLabeling {
    std::vector<std::int64_t> values;
};

enum class VerdictStatus { Magic, NotInjective, NonConstantWeight };

const char* to_string(VerdictStatus s);

struct GroupVerdict {
    VerdictStatus status;
    std::optional<GroupElement> mu;                 // present iff Magic
    std::optional<std::pair<int, int>> duplicate;   // iff NotInjective: (i, j), i < j
    std::optional<int> unequal_vertex;              // iff NonConstantWeight: first v with w(v) != w(0)

    bool magic() const { return status == VerdictStatus::Magic; }
};

struct ClassicVerdict {
    VerdictStatus status; // Magic or NonConstantWeight; duplicates are structural errors
    std::optional<std::int64_t> k;
    std::optional<int> unequal_vertex;

    bool magic() const { return status == VerdictStatus::Magic; }
};

/// Open-neighborhood weight w(v) = sum of labels over N(v); the label of v
/// itself is excluded. Empty neighborhood gives the identity / 0.
GroupElement weight(const Graph& g, const GroupLabeling& l, int v);
std::int64_t weight(const Graph& g, const ClassicLabeling& l, int v);

/// Magic iff the values are pairwise distinct and every weight equals the
/// same mu. Reports the first violation in ascending vertex order.
/// Throws ArgumentError unless |V| = group order and all residues are valid.
GroupVerdict verify_group(const Graph& g, const GroupLabeling& l);

/// Classic counterpart over {1..n}. Values must form a bijection onto
/// {1..n}; anything else is an ArgumentError. On a magic verdict for an
/// r-regular graph, cross-checks k = r(n+1)/2 and throws InternalCheckError
/// on disagreement.
ClassicVerdict verify_classic(const Graph& g, const ClassicLabeling& l);

/// Reinterpret classic labels mod n (label n becomes 0) as a Z_n labeling.
GroupLabeling classic_as_zn(const ClassicLabeling& l);

} // namespace gdm
