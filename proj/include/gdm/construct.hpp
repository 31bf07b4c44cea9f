#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gdm/abelian.hpp"
#include "gdm/graph.hpp"
#include "gdm/labeling.hpp"

namespace gdm {

/// A constructed labeling together with the product graph it labels, the
/// closed-form magic constant the construction guarantees, and a tag naming
/// the construction ("cyclic", "klein", "kpq", "compose"). Every
/// constructor runs the verifier before returning and throws
/// InternalCheckError if the verdict or mu disagrees with the prediction.
struct ConstructionOutcome {
    Graph product;
    GroupLabeling labeling;
    GroupElement predicted_mu;
    std::string theorem_tag;
};

/// Labels G[C4] over Z_{2^p} x A, p >= 2. Requires 2^(p-2) | n,
/// |A| = n / 2^(p-2), and all degrees of G congruent to some c mod 2^(p-1).
/// The magic constant is ((-2c-1) mod 2^p, 0).
ConstructionOutcome label_c4_cyclic_two_part(const Graph& g, int p, const AbelianGroup& a);

/// Labels G[C4] over Z2 x Z2 x A for any graph G with |A| = |V(G)|; no
/// degree condition. The magic constant is (1, 1, 0).
ConstructionOutcome label_c4_klein(const Graph& g, const AbelianGroup& a);

/// Labels G[C4] over an arbitrary abelian group of order 4|V(G)|,
/// dispatching on the largest 2-exponent b1 of the group: b1 = 1 goes to
/// the Klein construction, b1 >= 2 to the cyclic one with p = b1 (which
/// then needs degrees constant mod 2^(b1-1)). Labels are expressed in the
/// caller's original factor coordinates.
ConstructionOutcome label_c4_any_group(const Graph& g, const AbelianGroup& ambient);

/// Labels K_{p,q}[C4], p even >= 2, q odd >= 1, over an abelian group of
/// order 4(p+q). The Sylow-2 subgroup is necessarily Z4 (two-family
/// labeling, mu = (3, 0)) or Z2 x Z2 (Klein path, mu = (1, 1, 0)).
ConstructionOutcome label_kpq_c4(int p, int q, const AbelianGroup& ambient);

/// Composition: given a magic labeling of H over some group with constant
/// mu', and G of order prime_p^alpha whose degrees share one parity b and
/// are divisible by prime_p, with prime_p also dividing every deg_H(v) and
/// |V(H)|, labels G[H] over group x Z_p^alpha; copy i gets the i-th element
/// of Z_p^alpha appended. mu = (b * sum_all(group) + mu', 0).
ConstructionOutcome label_composition(const Graph& g, const Graph& h,
                                      const GroupLabeling& base, std::int64_t prime_p);

/// For odd-order G with all degrees even: one outcome per abelian group of
/// order 4|V(G)|, in enumerate_groups order. All succeed.
std::vector<ConstructionOutcome> eulerian_odd_all_groups(const Graph& g);

/// True iff G is r-regular with r odd and |V(G)| = 2 (mod 4) -- a
/// sufficient condition for no abelian group of order |V(G)| to admit a
/// distance magic labeling of G. False means unknown, not existence.
bool no_group_exists(const Graph& g);

/// Degrees constant mod 2^(p+1) where |V(G)| = 2^p * odd: the blanket
/// hypothesis that guarantees label_c4_any_group succeeds for every group
/// of order 4|V(G)|. The per-group checks are strictly weaker.
std::optional<std::int64_t> blanket_degree_class(const Graph& g);

} // namespace gdm
