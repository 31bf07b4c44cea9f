#include "gdm/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "gdm/errors.hpp"

namespace gdm {

const char* to_string(SearchOutcome o) {
    switch (o) {
        case SearchOutcome::Found: return "found";
        case SearchOutcome::ExhaustedNone: return "none";
        case SearchOutcome::BudgetExceeded: return "budget-exceeded";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

// Shared backtracking engine for both label domains. A candidate value is a
// residue vector; moduli entry 0 means a plain integer coordinate (the
// classic case). Vertices are assigned in index order, candidates in value
// order, so the first solution is the lexicographically least one the
// constraints admit. Twin classes (equal open neighborhoods) are
// interchangeable in any solution, so values are required to increase along
// each class; the least solution satisfies that, hence stays reachable.
class SearchEngine {
public:
    SearchEngine(const Graph& g, std::vector<std::int64_t> moduli,
                 std::vector<std::vector<std::int64_t>> candidates, SearchBudget budget)
        : g_(g),
          n_(g.vertex_count()),
          rank_(moduli.size()),
          moduli_(std::move(moduli)),
          cand_(std::move(candidates)),
          node_limit_(budget.node_limit),
          deadline_(Clock::now() + budget.time_limit) {
        assign_.assign(n_, -1);
        used_.assign(cand_.size(), 0);
        partial_.assign(static_cast<std::size_t>(n_) * rank_, 0);
        rem_.resize(n_);
        for (int v = 0; v < n_; ++v) rem_[v] = g_.degree(v);
        twin_prev_.assign(n_, -1);
        for (int v = 0; v < n_; ++v)
            for (int u = v - 1; u >= 0; --u)
                if (g_.neighbors(u) == g_.neighbors(v)) {
                    twin_prev_[v] = u;
                    break;
                }
        mu_.assign(rank_, 0);
    }

    // Pin the magic constant before the search starts (isolated vertices,
    // or the forced r(n+1)/2 for regular graphs in the classic domain).
    void fix_mu(std::vector<std::int64_t> mu) {
        mu_ = std::move(mu);
        mu_fixed_ = true;
        mu_depth_ = -1;
    }

    bool has_isolated_vertex() const {
        for (int v = 0; v < n_; ++v)
            if (g_.degree(v) == 0) return true;
        return false;
    }

    // Returns Found / ExhaustedNone / BudgetExceeded; assignment() is valid
    // on Found.
    SearchOutcome run() {
        bool found = dfs(0);
        if (found) return SearchOutcome::Found;
        return out_of_budget_ ? SearchOutcome::BudgetExceeded : SearchOutcome::ExhaustedNone;
    }

    const std::vector<int>& assignment() const { return assign_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    bool budget_exhausted() {
        if (nodes_ > node_limit_) return true;
        if ((nodes_ & 0x1fff) == 0 && Clock::now() > deadline_) return true;
        return false;
    }

    void add_into(int w, const std::vector<std::int64_t>& val, std::int64_t sign) {
        std::int64_t* p = &partial_[static_cast<std::size_t>(w) * rank_];
        for (std::size_t t = 0; t < rank_; ++t) {
            p[t] += sign * val[t];
            if (moduli_[t]) p[t] = ((p[t] % moduli_[t]) + moduli_[t]) % moduli_[t];
        }
    }

    bool weight_equals_mu(int w) const {
        const std::int64_t* p = &partial_[static_cast<std::size_t>(w) * rank_];
        for (std::size_t t = 0; t < rank_; ++t)
            if (p[t] != mu_[t]) return false;
        return true;
    }

    // Applies the assignment and checks every neighborhood it completes;
    // undoes itself and returns false on a weight clash.
    bool apply(int v, int e, int depth) {
        assign_[v] = e;
        used_[e] = 1;
        for (int w : g_.neighbors(v)) {
            add_into(w, cand_[e], +1);
            --rem_[w];
        }
        for (int w : g_.neighbors(v)) {
            if (rem_[w] != 0) continue;
            if (!mu_fixed_) {
                const std::int64_t* p = &partial_[static_cast<std::size_t>(w) * rank_];
                mu_.assign(p, p + rank_);
                mu_fixed_ = true;
                mu_depth_ = depth;
            } else if (!weight_equals_mu(w)) {
                undo(v, e, depth);
                return false;
            }
        }
        return true;
    }

    void undo(int v, int e, int depth) {
        for (int w : g_.neighbors(v)) {
            add_into(w, cand_[e], -1);
            ++rem_[w];
        }
        if (mu_fixed_ && mu_depth_ == depth) {
            mu_fixed_ = false;
            mu_depth_ = -2;
        }
        used_[e] = 0;
        assign_[v] = -1;
    }

    bool dfs(int depth) {
        if (depth == n_) return true;
        int v = depth;
        int floor_index = twin_prev_[v] >= 0 ? assign_[twin_prev_[v]] : -1;
        for (int e = floor_index + 1; e < static_cast<int>(cand_.size()); ++e) {
            if (used_[e]) continue;
            ++nodes_;
            if (budget_exhausted()) {
                out_of_budget_ = true;
                return false;
            }
            if (!apply(v, e, depth)) continue;
            if (dfs(depth + 1)) return true;
            undo(v, e, depth);
            if (out_of_budget_) return false;
        }
        return false;
    }

    const Graph& g_;
    int n_;
    std::size_t rank_;
    std::vector<std::int64_t> moduli_;
    std::vector<std::vector<std::int64_t>> cand_;
    std::vector<int> assign_;
    std::vector<char> used_;
    std::vector<std::int64_t> partial_;
    std::vector<int> rem_;
    std::vector<int> twin_prev_;
    std::vector<std::int64_t> mu_;
    bool mu_fixed_ = false;
    int mu_depth_ = -2;
    std::uint64_t nodes_ = 0;
    std::uint64_t node_limit_;
    Clock::time_point deadline_;
    bool out_of_budget_ = false;
};

} // namespace

GroupSearchReport search_group_dm(const Graph& g, const AbelianGroup& group,
                                  SearchBudget budget, bool deterministic) {
    if (g.vertex_count() == 0) throw ArgumentError("search_group_dm: empty graph");
    if (group.order() != g.vertex_count())
        throw ArgumentError("search_group_dm: group order must equal vertex count");
    auto started = Clock::now();

    auto elems = enumerate_elements(group);
    std::vector<std::vector<std::int64_t>> cand;
    cand.reserve(elems.size());
    for (const auto& e : elems) cand.push_back(e.residues);
    std::vector<std::int64_t> moduli = group.factors();
    if (moduli.empty()) { // trivial group: one vertex, zero-rank elements
        moduli = {1};
        cand = {{0}};
    }

    SearchEngine engine(g, moduli, std::move(cand), budget);
    if (engine.has_isolated_vertex())
        engine.fix_mu(std::vector<std::int64_t>(moduli.size(), 0));

    GroupSearchReport rep;
    rep.deterministic = deterministic;
    rep.outcome = engine.run();
    rep.nodes_explored = engine.nodes();
    rep.elapsed = Clock::now() - started;
    if (rep.outcome == SearchOutcome::Found) {
        GroupLabeling lab{group, {}};
        lab.values.reserve(elems.size());
        for (int v = 0; v < g.vertex_count(); ++v)
            lab.values.push_back(elems[static_cast<std::size_t>(engine.assignment()[v])]);
        GroupVerdict verdict = verify_group(g, lab);
        if (!verdict.magic()) throw InternalCheckError("search_group_dm: found labeling fails verification");
        rep.mu = verdict.mu;
        rep.labeling = std::move(lab);
    }
    return rep;
}

ClassicSearchReport search_classic_dm(const Graph& g, SearchBudget budget, bool deterministic) {
    int n = g.vertex_count();
    if (n == 0) throw ArgumentError("search_classic_dm: empty graph");
    auto started = Clock::now();

    ClassicSearchReport rep;
    rep.deterministic = deterministic;

    if (auto r = g.regular_degree(); r && *r % 2 == 1) {
        // No odd-regular graph is distance magic: n*k = r*n(n+1)/2 would
        // force the non-integer k = r(n+1)/2 (r odd makes n even).
        rep.outcome = SearchOutcome::ExhaustedNone;
        rep.elapsed = Clock::now() - started;
        return rep;
    }

    std::vector<std::vector<std::int64_t>> cand;
    cand.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) cand.push_back({i});
    SearchEngine engine(g, {0}, std::move(cand), budget);

    bool impossible = false;
    if (engine.has_isolated_vertex()) {
        impossible = true; // empty weight 0 can never be a positive k
    } else if (auto r = g.regular_degree()) {
        engine.fix_mu({static_cast<std::int64_t>(*r) * (n + 1) / 2});
    }

    rep.outcome = impossible ? SearchOutcome::ExhaustedNone : engine.run();
    rep.nodes_explored = engine.nodes();
    rep.elapsed = Clock::now() - started;
    if (rep.outcome == SearchOutcome::Found) {
        ClassicLabeling lab;
        lab.values.reserve(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) lab.values.push_back(engine.assignment()[v] + 1);
        ClassicVerdict verdict = verify_classic(g, lab);
        if (!verdict.magic()) throw InternalCheckError("search_classic_dm: found labeling fails verification");
        rep.k = verdict.k;
        rep.labeling = std::move(lab);
    }
    return rep;
}

std::int64_t PairSumSystem::mass() const {
    std::int64_t n = size();
    return n * (4 * n + 1);
}

std::vector<std::int64_t> PairSumSystem::equation_row(int v) const {
    std::vector<std::int64_t> row(static_cast<std::size_t>(size()), 0);
    row[static_cast<std::size_t>(v)] += 1;
    for (int u : base.neighbors(v)) row[static_cast<std::size_t>(u)] += 2;
    return row;
}

PairSumSystem reduce_c4_product(const Graph& base) {
    if (base.vertex_count() == 0) throw ArgumentError("reduce_c4_product: empty base graph");
    return PairSumSystem{base};
}

namespace {

using boost::multiprecision::cpp_rational;

// Exact solve of (I + 2A) x = 1. The matrix is nonsingular for every
// graph: -1/2 is not an algebraic integer, so it cannot be an adjacency
// eigenvalue.
std::vector<cpp_rational> solve_unit_system(const PairSumSystem& sys) {
    int n = sys.size();
    std::vector<std::vector<cpp_rational>> m(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        auto row = sys.equation_row(v);
        m[v].assign(row.begin(), row.end());
        m[v].push_back(1); // rhs
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (m[r][col] != 0) { pivot = r; break; }
        if (pivot < 0) throw InternalCheckError("pair-sum system is singular");
        std::swap(m[col], m[pivot]);
        cpp_rational inv = m[col][col];
        for (int c = col; c <= n; ++c) m[col][c] /= inv;
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            cpp_rational f = m[r][col];
            for (int c = col; c <= n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    std::vector<cpp_rational> x(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) x[v] = m[v][n];
    return x;
}

bool to_int64(const cpp_rational& r, std::int64_t& out) {
    if (boost::multiprecision::denominator(r) != 1) return false;
    auto num = boost::multiprecision::numerator(r);
    if (num < std::numeric_limits<std::int64_t>::min() || num > std::numeric_limits<std::int64_t>::max())
        return false;
    out = num.convert_to<std::int64_t>();
    return true;
}

// Partition {1..total} into pairs matching the demanded sum multiset.
// The largest unpaired value has one admissible partner per distinct sum,
// so branching stays narrow; complete search with budget accounting.
class PairingSearch {
public:
    PairingSearch(int total, std::vector<std::pair<std::int64_t, int>> demands, SearchBudget budget)
        : total_(total),
          demands_(std::move(demands)),
          used_(static_cast<std::size_t>(total) + 1, 0),
          node_limit_(budget.node_limit),
          deadline_(Clock::now() + budget.time_limit) {
        buckets_.resize(demands_.size());
    }

    bool run() { return dfs(total_ / 2, total_); }

    bool out_of_budget() const { return out_of_budget_; }
    std::uint64_t nodes() const { return nodes_; }

    /// Pairs (lo, hi) collected per distinct demanded sum.
    const std::vector<std::vector<std::pair<int, int>>>& buckets() const { return buckets_; }
    const std::vector<std::pair<std::int64_t, int>>& demands() const { return demands_; }

private:
    bool dfs(int remaining, int scan_from) {
        if (remaining == 0) return true;
        int v = scan_from;
        while (used_[v]) --v;
        for (std::size_t d = 0; d < demands_.size(); ++d) {
            if (demands_[d].second == 0) continue;
            std::int64_t partner = demands_[d].first - v;
            if (partner < 1 || partner >= v || used_[static_cast<std::size_t>(partner)]) continue;
            ++nodes_;
            if (nodes_ > node_limit_ || ((nodes_ & 0xfff) == 0 && Clock::now() > deadline_)) {
                out_of_budget_ = true;
                return false;
            }
            int u = static_cast<int>(partner);
            used_[v] = used_[u] = 1;
            --demands_[d].second;
            buckets_[d].emplace_back(u, v);
            if (dfs(remaining - 1, v - 1)) return true;
            buckets_[d].pop_back();
            ++demands_[d].second;
            used_[v] = used_[u] = 0;
            if (out_of_budget_) return false;
        }
        return false;
    }

    int total_;
    std::vector<std::pair<std::int64_t, int>> demands_;
    std::vector<char> used_;
    std::vector<std::vector<std::pair<int, int>>> buckets_;
    std::uint64_t nodes_ = 0;
    std::uint64_t node_limit_;
    Clock::time_point deadline_;
    bool out_of_budget_ = false;
};

} // namespace

ClassicSearchReport solve_pair_sum(const PairSumSystem& system, SearchBudget budget) {
    auto started = Clock::now();
    int n = system.size();
    ClassicSearchReport rep;
    rep.deterministic = true;

    auto finish = [&](SearchOutcome outcome) {
        rep.outcome = outcome;
        rep.elapsed = Clock::now() - started;
        return rep;
    };

    auto x = solve_unit_system(system);
    cpp_rational sum_x = 0;
    for (const auto& xi : x) sum_x += xi;
    if (sum_x == 0) return finish(SearchOutcome::ExhaustedNone);

    cpp_rational mu_r = cpp_rational(system.mass()) / sum_x;
    std::int64_t mu;
    if (!to_int64(mu_r, mu) || mu <= 0) return finish(SearchOutcome::ExhaustedNone);

    std::vector<std::int64_t> s(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        if (!to_int64(mu_r * x[static_cast<std::size_t>(v)], s[static_cast<std::size_t>(v)]))
            return finish(SearchOutcome::ExhaustedNone);
        // a pair sum is two distinct labels from {1..4n}
        if (s[v] < 3 || s[v] > 8LL * n - 1) return finish(SearchOutcome::ExhaustedNone);
    }

    std::vector<std::pair<std::int64_t, int>> demands;
    for (std::int64_t sv : s) {
        auto it = std::find_if(demands.begin(), demands.end(),
                               [&](const auto& d) { return d.first == sv; });
        if (it == demands.end()) demands.emplace_back(sv, 2);
        else it->second += 2;
    }

    PairingSearch pairing(4 * n, std::move(demands), budget);
    bool realized = pairing.run();
    rep.nodes_explored = pairing.nodes();
    if (!realized)
        return finish(pairing.out_of_budget() ? SearchOutcome::BudgetExceeded
                                              : SearchOutcome::ExhaustedNone);

    // Distribute two pairs of sum s_v to copy v; (lo, hi) of the first pair
    // lands on the 0/2 opposite pair, the second on 1/3.
    std::vector<std::size_t> next(pairing.demands().size(), 0);
    ClassicLabeling lab;
    lab.values.assign(static_cast<std::size_t>(4 * n), 0);
    for (int v = 0; v < n; ++v) {
        std::size_t d = 0;
        while (pairing.demands()[d].first != s[static_cast<std::size_t>(v)]) ++d;
        auto p0 = pairing.buckets()[d][next[d]++];
        auto p1 = pairing.buckets()[d][next[d]++];
        lab.values[static_cast<std::size_t>(4 * v + 0)] = p0.first;
        lab.values[static_cast<std::size_t>(4 * v + 2)] = p0.second;
        lab.values[static_cast<std::size_t>(4 * v + 1)] = p1.first;
        lab.values[static_cast<std::size_t>(4 * v + 3)] = p1.second;
    }
    Graph product = lexicographic_product(system.base, cycle(4));
    ClassicVerdict verdict = verify_classic(product, lab);
    if (!verdict.magic() || *verdict.k != mu)
        throw InternalCheckError("solve_pair_sum: realized labeling fails verification");
    rep.k = mu;
    rep.labeling = std::move(lab);
    return finish(SearchOutcome::Found);
}

namespace {

std::vector<std::int64_t> system_form(const PairSumSystem& sys, int v) {
    auto row = sys.equation_row(v);
    row.push_back(-1); // mu coefficient
    return row;
}

std::vector<std::int64_t> combine(const PairSumSystem& sys,
                                  const std::vector<CertificateStep>& steps,
                                  const CertificateStep& step) {
    std::vector<std::int64_t> acc(static_cast<std::size_t>(sys.size()) + 1, 0);
    for (const auto& term : step.derivation) {
        const std::vector<std::int64_t> src =
            term.from_system ? system_form(sys, term.index) : steps[static_cast<std::size_t>(term.index)].coeffs;
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += term.multiple * src[i];
    }
    for (auto& c : acc) {
        if (c % step.divisor != 0) throw InternalCheckError("certificate: inexact division");
        c /= step.divisor;
    }
    return acc;
}

std::string windmill_var_name(int v) {
    if (v == 0) return "a_c";
    int i = (v - 1) / 3;
    const char* kind[] = {"s_y", "s_x", "s_z"};
    std::ostringstream os;
    os << kind[(v - 1) % 3] << '[' << i << ']';
    return os.str();
}

std::string render_form(const std::vector<std::int64_t>& coeffs) {
    std::ostringstream os;
    bool first = true;
    int n = static_cast<int>(coeffs.size()) - 1;
    for (int i = 0; i <= n; ++i) {
        if (coeffs[static_cast<std::size_t>(i)] == 0) continue;
        std::int64_t c = coeffs[static_cast<std::size_t>(i)];
        if (first) {
            if (c < 0) os << '-';
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::int64_t a = c < 0 ? -c : c;
        if (a != 1) os << a << '*';
        os << (i == n ? "mu" : windmill_var_name(i));
    }
    if (first) os << '0';
    os << " = 0";
    return os.str();
}

} // namespace

WindmillCertificate windmill_certificate(int t) {
    if (t < 2) throw ArgumentError("windmill_certificate: need t >= 2");
    Graph base = dutch_windmill(4, t);
    PairSumSystem sys = reduce_c4_product(base);
    auto y = [](int i) { return 3 * i + 1; };
    auto xv = [](int i) { return 3 * i + 2; };
    auto z = [](int i) { return 3 * i + 3; };

    WindmillCertificate cert{t, {}, true, "positivity"};
    auto push = [&](CertificateStep step) {
        step.coeffs = combine(sys, cert.steps, step);
        cert.steps.push_back(std::move(step));
        return static_cast<int>(cert.steps.size()) - 1;
    };
    auto sys_term = [](int v, std::int64_t m) { return CertificateStep::Term{true, v, m}; };
    auto step_term = [](int k, std::int64_t m) { return CertificateStep::Term{false, k, m}; };

    std::vector<int> pair_idx(t), spoke_idx(t), blade_idx(t);
    for (int i = 0; i < t; ++i) {
        std::ostringstream nm;
        nm << "pair[" << i << "]";
        pair_idx[i] = push({nm.str(), {}, {sys_term(y(i), 1), sys_term(z(i), -1)}, 1,
                            "equal weights at the two outer copies of blade " + std::to_string(i)});
    }
    for (int i = 0; i < t; ++i) {
        std::ostringstream nm;
        nm << "spoke[" << i << "]";
        spoke_idx[i] = push({nm.str(), {},
                             {sys_term(xv(i), -1), sys_term(y(i), 1), step_term(pair_idx[i], -2)},
                             1,
                             "middle copy weight against an outer one"});
    }
    for (int i = 0; i < t; ++i) {
        std::ostringstream nm;
        nm << "blade[" << i << "]";
        blade_idx[i] = push({nm.str(), {},
                             {sys_term(z(i), 1), step_term(pair_idx[i], 1), step_term(spoke_idx[i], -2)},
                             1,
                             "blade weight in hub terms: 7*s_y[i] - 2*a_c = mu"});
    }
    std::vector<int> equal_idx(t, -1);
    for (int i = 1; i < t; ++i) {
        std::ostringstream nm;
        nm << "equal[" << i << "]";
        equal_idx[i] = push({nm.str(), {},
                             {step_term(blade_idx[i], 1), step_term(blade_idx[0], -1)},
                             7,
                             "all blades share one pair sum a := s_y[0]"});
    }
    CertificateStep hub{"hub", {}, {sys_term(0, 1)}, 1, "hub weight: a_c + 4t*a = mu"};
    for (int i = 0; i < t; ++i) hub.derivation.push_back(step_term(pair_idx[i], 2));
    for (int i = 1; i < t; ++i) hub.derivation.push_back(step_term(equal_idx[i], -4));
    int hub_idx = push(std::move(hub));
    push({"final", {}, {step_term(hub_idx, 1), step_term(blade_idx[0], -1)}, 1,
          "3*a_c = (7-4t)*a, impossible for positive pair sums when t >= 2"});

    if (!check_certificate(cert)) throw InternalCheckError("windmill certificate failed its own check");
    return cert;
}

bool check_certificate(const WindmillCertificate& cert) {
    if (cert.t < 2) return false;
    PairSumSystem sys = reduce_c4_product(dutch_windmill(4, cert.t));
    std::vector<CertificateStep> checked;
    for (const auto& step : cert.steps) {
        for (const auto& term : step.derivation) {
            if (term.from_system) {
                if (term.index < 0 || term.index >= sys.size()) return false;
            } else if (term.index < 0 || term.index >= static_cast<int>(checked.size())) {
                return false;
            }
        }
        std::vector<std::int64_t> acc;
        try {
            acc = combine(sys, checked, step);
        } catch (const InternalCheckError&) {
            return false;
        }
        if (acc != step.coeffs) return false;
        checked.push_back(step);
    }
    if (checked.empty()) return false;
    // Final form: no mu, every present variable with a positive
    // coefficient, at least one variable. Pair sums are >= 3 > 0, so the
    // combination cannot vanish.
    const auto& last = checked.back().coeffs;
    if (last.back() != 0) return false;
    bool any = false;
    for (std::size_t i = 0; i + 1 < last.size(); ++i) {
        if (last[i] < 0) return false;
        if (last[i] > 0) any = true;
    }
    return any == cert.infeasible;
}

std::string format_certificate(const WindmillCertificate& cert) {
    std::ostringstream os;
    os << "infeasibility certificate: no distance magic labeling of D_4^" << cert.t << "[C_4]\n";
    os << "variables: one opposite-pair sum per C_4 copy (a_c at the hub, s_y/s_x/s_z per blade), all >= 3\n";
    os << "system: mu = s_v + 2*sum_{u ~ v} s_u for every base vertex v\n";
    for (const auto& step : cert.steps) {
        os << step.name << ": " << render_form(step.coeffs);
        if (!step.note.empty()) os << "   ; " << step.note;
        os << '\n';
    }
    os << "3*a_c = " << (7 - 4LL * cert.t) << "*a : infeasible (positivity)";
    return os.str();
}

std::vector<ScanResult> scan_kmn_c4(int max_n, SearchBudget per_pair_budget) {
    if (max_n < 2) throw ArgumentError("scan_kmn_c4: need max_n >= 2");
    if (max_n > kScanLimit) throw ArgumentError("scan_kmn_c4: max_n exceeds the desk-scale cap");
    std::vector<ScanResult> out;
    for (int m = 1; m < max_n; ++m) {
        for (int n = m + 1; n <= max_n; ++n) {
            auto report = solve_pair_sum(reduce_c4_product(complete_bipartite(m, n)), per_pair_budget);
            if (report.outcome == SearchOutcome::BudgetExceeded)
                throw PreconditionError("scan_kmn_c4: budget exceeded on K_{" + std::to_string(m) +
                                        "," + std::to_string(n) + "}; cannot certify the range");
            out.push_back({m, n, report.outcome == SearchOutcome::Found, std::move(report.labeling)});
        }
    }
    return out;
}

} // namespace gdm
