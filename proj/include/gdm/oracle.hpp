#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gdm/abelian.hpp"
#include "gdm/graph.hpp"
#include "gdm/labeling.hpp"

namespace gdm {

struct SearchBudget {
    std::chrono::milliseconds time_limit{60'000};
    std::uint64_t node_limit = UINT64_MAX;
};

enum class SearchOutcome { Found, ExhaustedNone, BudgetExceeded };

const char* to_string(SearchOutcome o);

/// ExhaustedNone is a proof of nonexistence; BudgetExceeded is never
/// reported as none. With `deterministic` set the found labeling is the
/// lexicographically least solution (values compared in vertex order).
struct GroupSearchReport {
    SearchOutcome outcome;
    std::optional<GroupLabeling> labeling; // iff Found; verifier-confirmed
    std::optional<GroupElement> mu;
    std::uint64_t nodes_explored = 0;
    std::chrono::duration<double> elapsed{0};
    bool deterministic = false;
};

struct ClassicSearchReport {
    SearchOutcome outcome;
    std::optional<ClassicLabeling> labeling;
    std::optional<std::int64_t> k;
    std::uint64_t nodes_explored = 0;
    std::chrono::duration<double> elapsed{0};
    bool deterministic = false;
};

/// Backtracking over injections V -> group in vertex order. Prunes when a
/// fully labeled neighborhood's weight differs from the weight fixed by the
/// first completed neighborhood, and orders labels within twin classes
/// (vertices with identical open neighborhoods are interchangeable).
/// Requires |V| = group order. Intended for |V| <= 12.
GroupSearchReport search_group_dm(const Graph& g, const AbelianGroup& group,
                                  SearchBudget budget = {}, bool deterministic = false);

/// Classic counterpart over bijections V -> {1..n}. For r-regular graphs
/// the magic constant is pinned to r(n+1)/2 up front, and odd r is refused
/// immediately (no such labeling exists).
ClassicSearchReport search_classic_dm(const Graph& g, SearchBudget budget = {},
                                      bool deterministic = false);

/// The exact reduction of classic distance magic on X[C4] to per-copy pair
/// sums: in any such labeling the two opposite pairs of copy i share one
/// sum s_i (adjacent in-copy vertices have identical external
/// neighborhoods, so comparing their weights forces it), each copy's label
/// total is 2*s_i, and every product weight is s_i + 2*sum_{k~i} s_k.
/// Conversely any positive integer solution s plus a partition of
/// {1..4N} into pairs, two of sum s_i per copy, realizes a labeling.
struct PairSumSystem {
    Graph base;

    int size() const { return base.vertex_count(); }
    /// sum_i s_i for any realizable s: half the total label mass.
    std::int64_t mass() const;
    /// Equation for copy v as coefficients over s_0..s_{N-1}:
    /// s_v + 2*sum_{u~v} s_u - mu = 0.
    std::vector<std::int64_t> equation_row(int v) const;
};

PairSumSystem reduce_c4_product(const Graph& base);

/// Decides the system exactly: the linear part has a unique rational
/// solution per mu (I + 2A is nonsingular for every graph), the mass
/// constraint pins mu, and integrality/positivity plus a pairing search
/// over {1..4N} (largest unpaired value first, branching only over the
/// distinct demanded sums) settle realizability. Found labelings are
/// emitted on X[C4] (vertex 4i+j) and re-verified.
ClassicSearchReport solve_pair_sum(const PairSumSystem& system, SearchBudget budget = {});

/// One derivation step: the stated equation is an exact integer combination
/// of system equations and earlier steps, optionally divided by `divisor`.
struct CertificateStep {
    std::string name;
    std::vector<std::int64_t> coeffs; // over s_0..s_{N-1}, then mu last
    struct Term {
        bool from_system;       // true: system equation of `index`-th vertex
        int index;              // vertex or earlier step index
        std::int64_t multiple;
    };
    std::vector<Term> derivation;
    std::int64_t divisor = 1;
    std::string note;
};

/// Machine-checkable infeasibility chain for D_4^t[C4], t >= 2: pair sums
/// within each blade coincide, the spoke sums are determined by the hub,
/// all blades share one value, and the final hub equation has strictly
/// positive coefficients on both sides' variables -- unsatisfiable since
/// every pair sum is a sum of two distinct labels, hence >= 3.
struct WindmillCertificate {
    int t;
    std::vector<CertificateStep> steps;
    bool infeasible;
    std::string reason; // "positivity"
};

WindmillCertificate windmill_certificate(int t);

/// Re-derives every step from reduce_c4_product(dutch_windmill(4, t)) and
/// re-checks the final sign argument. False means the certificate is wrong.
bool check_certificate(const WindmillCertificate& cert);

/// Human- and machine-readable rendering; the last line reads
/// "3*a_c = <7-4t>*a : infeasible (positivity)".
std::string format_certificate(const WindmillCertificate& cert);

struct ScanResult {
    int m, n;
    bool found;
    std::optional<ClassicLabeling> labeling; // on K_{m,n}[C4], verified
};

/// Decides classic distance magic of K_{m,n}[C4] for all 1 <= m < n <=
/// max_n via the pair-sum reduction. max_n is capped at kScanLimit.
inline constexpr int kScanLimit = 60;
std::vector<ScanResult> scan_kmn_c4(int max_n, SearchBudget per_pair_budget = {});

} // namespace gdm
