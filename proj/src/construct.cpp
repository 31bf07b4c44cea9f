#include "gdm/construct.hpp"

#include <algorithm>
#include <sstream>

#include "gdm/errors.hpp"

namespace gdm {

namespace {

std::int64_t pow2(int e) { return std::int64_t{1} << e; }

AbelianGroup prepend_factors(std::vector<std::int64_t> front, const AbelianGroup& back) {
    front.insert(front.end(), back.factors().begin(), back.factors().end());
    return AbelianGroup(std::move(front));
}

GroupElement concat(const GroupElement& front, const GroupElement& back) {
    GroupElement r = front;
    r.residues.insert(r.residues.end(), back.residues.begin(), back.residues.end());
    return r;
}

GroupElement with_prefix(std::vector<std::int64_t> prefix, const GroupElement& tail) {
    prefix.insert(prefix.end(), tail.residues.begin(), tail.residues.end());
    return GroupElement{std::move(prefix)};
}

void verify_outcome(ConstructionOutcome& out) {
    GroupVerdict v = verify_group(out.product, out.labeling);
    if (!v.magic())
        throw InternalCheckError("construction '" + out.theorem_tag +
                                 "' produced a non-magic labeling (" +
                                 std::string(to_string(v.status)) + ")");
    if (*v.mu != out.predicted_mu)
        throw InternalCheckError("construction '" + out.theorem_tag +
                                 "' magic constant differs from the closed form");
}

// View of an ambient group as front x A: `front_slots` picks primary
// 2-factors (indices into the sylow 2-part) to move in front; A is the
// remaining 2-part followed by the odd part. Construction coordinates are
// [front..., remaining 2-part..., odd...], mapped back through the CRT
// witness so emitted labelings use the caller's factor list.
struct FrontView {
    SylowSplit split;
    std::vector<std::size_t> front_slots;
    std::vector<std::size_t> back_slots;
    AbelianGroup construction_group;
    AbelianGroup a_part;

    FrontView(const AbelianGroup& ambient, std::vector<std::size_t> front)
        : split(ambient, 2), front_slots(std::move(front)) {
        const auto& tf = split.p_part().factors();
        std::vector<std::int64_t> front_factors, a_factors;
        for (std::size_t i : front_slots) front_factors.push_back(tf[i]);
        for (std::size_t i = 0; i < tf.size(); ++i)
            if (std::find(front_slots.begin(), front_slots.end(), i) == front_slots.end())
                back_slots.push_back(i);
        for (std::size_t i : back_slots) a_factors.push_back(tf[i]);
        a_factors.insert(a_factors.end(), split.rest().factors().begin(), split.rest().factors().end());
        a_part = AbelianGroup(a_factors);
        for (const auto& f : a_part.factors()) front_factors.push_back(f);
        std::vector<std::int64_t> cg(front_factors);
        construction_group = AbelianGroup(std::move(cg));
    }

    GroupElement to_ambient(const GroupElement& e) const {
        GroupElement p_elem = identity(split.p_part());
        std::size_t pos = 0;
        for (std::size_t i : front_slots) p_elem.residues[i] = e.residues[pos++];
        for (std::size_t i : back_slots) p_elem.residues[i] = e.residues[pos++];
        GroupElement rest_elem{{e.residues.begin() + static_cast<std::ptrdiff_t>(pos),
                                e.residues.end()}};
        return split.to_original(p_elem, rest_elem);
    }
};

ConstructionOutcome remap_to_ambient(const FrontView& view, ConstructionOutcome out) {
    out.labeling.group = view.split.original();
    for (auto& value : out.labeling.values) value = view.to_ambient(value);
    out.predicted_mu = view.to_ambient(out.predicted_mu);
    verify_outcome(out);
    return out;
}

} // namespace

ConstructionOutcome label_c4_cyclic_two_part(const Graph& g, int p, const AbelianGroup& a) {
    std::int64_t n = g.vertex_count();
    if (n < 1) throw PreconditionError("cyclic: graph must be nonempty");
    if (p < 2 || p > 40) throw PreconditionError("cyclic: need 2 <= p <= 40");
    std::int64_t block = pow2(p - 2);
    if (n % block != 0)
        throw PreconditionError("cyclic: 2^(p-2) must divide |V(G)|");
    if (a.order() != n / block)
        throw PreconditionError("cyclic: |A| must equal |V(G)| / 2^(p-2)");
    std::int64_t half = pow2(p - 1), full = pow2(p);
    auto c = degree_class(g, half);
    if (!c) {
        std::ostringstream os;
        os << "cyclic: degrees of G are not constant mod " << half;
        throw PreconditionError(os.str());
    }

    AbelianGroup big = prepend_factors({full}, a);
    auto a_elems = enumerate_elements(a);
    ConstructionOutcome out{lexicographic_product(g, cycle(4)), {big, {}}, {}, "cyclic"};
    out.labeling.values.resize(static_cast<std::size_t>(4 * n));
    GroupElement top = with_prefix({full - 1}, identity(a)); // (2^p - 1, 0)
    for (std::int64_t i = 0; i < n; ++i) {
        const GroupElement& ai = a_elems[static_cast<std::size_t>(i / block)];
        for (int j = 0; j < 2; ++j)
            out.labeling.values[static_cast<std::size_t>(4 * i + j)] =
                with_prefix({(2 * i + j) % half}, ai);
        for (int j = 2; j < 4; ++j)
            out.labeling.values[static_cast<std::size_t>(4 * i + j)] =
                sub(big, top, out.labeling.values[static_cast<std::size_t>(4 * i + j - 2)]);
    }
    std::int64_t mu0 = (((-2 * *c - 1) % full) + full) % full;
    out.predicted_mu = with_prefix({mu0}, identity(a));
    verify_outcome(out);
    return out;
}

ConstructionOutcome label_c4_klein(const Graph& g, const AbelianGroup& a) {
    std::int64_t n = g.vertex_count();
    if (n < 1) throw PreconditionError("klein: graph must be nonempty");
    if (a.order() != n) throw PreconditionError("klein: |A| must equal |V(G)|");

    AbelianGroup big = prepend_factors({2, 2}, a);
    auto a_elems = enumerate_elements(a);
    ConstructionOutcome out{lexicographic_product(g, cycle(4)), {big, {}}, {}, "klein"};
    out.labeling.values.reserve(static_cast<std::size_t>(4 * n));
    for (std::int64_t i = 0; i < n; ++i) {
        const GroupElement& ai = a_elems[static_cast<std::size_t>(i)];
        GroupElement nai = neg(a, ai);
        out.labeling.values.push_back(with_prefix({0, 0}, ai));
        out.labeling.values.push_back(with_prefix({1, 0}, ai));
        out.labeling.values.push_back(with_prefix({1, 1}, nai));
        out.labeling.values.push_back(with_prefix({0, 1}, nai));
    }
    out.predicted_mu = with_prefix({1, 1}, identity(a));
    verify_outcome(out);
    return out;
}

ConstructionOutcome label_c4_any_group(const Graph& g, const AbelianGroup& ambient) {
    std::int64_t n = g.vertex_count();
    if (n < 1) throw PreconditionError("any-group: graph must be nonempty");
    if (ambient.order() != 4 * n)
        throw PreconditionError("any-group: group order must equal 4|V(G)|");

    SylowSplit probe(ambient, 2);
    const auto& two = probe.p_part().factors(); // descending
    if (two.empty() || two[0] < 2) throw InternalCheckError("any-group: missing 2-part");
    if (two[0] == 2) {
        // Elementary abelian 2-part, at least Z2 x Z2: Klein construction
        // on the last two exponent-1 factors.
        if (two.size() < 2) throw InternalCheckError("any-group: 2-part of order 4|V| has rank 1 at exponent 1");
        FrontView view(ambient, {two.size() - 2, two.size() - 1});
        return remap_to_ambient(view, label_c4_klein(g, view.a_part));
    }
    int p = 0;
    while (pow2(p) < two[0]) ++p; // two[0] = 2^p, p >= 2
    FrontView view(ambient, {0});
    if (!degree_class(g, pow2(p - 1))) {
        std::ostringstream os;
        os << "any-group: degrees of G must be constant mod " << pow2(p - 1)
           << " (largest 2-power factor of the group is " << two[0] << ")";
        throw PreconditionError(os.str());
    }
    return remap_to_ambient(view, label_c4_cyclic_two_part(g, p, view.a_part));
}

ConstructionOutcome label_kpq_c4(int p, int q, const AbelianGroup& ambient) {
    if (p < 2 || p % 2 != 0) throw PreconditionError("kpq: p must be even and >= 2");
    if (q < 1 || q % 2 != 1) throw PreconditionError("kpq: q must be odd and >= 1");
    std::int64_t n = p + q;
    if (ambient.order() != 4 * n)
        throw PreconditionError("kpq: group order must equal 4(p+q)");

    Graph base = complete_bipartite(p, q);
    SylowSplit probe(ambient, 2);
    const auto& two = probe.p_part().factors();
    if (two.size() == 2 && two[0] == 2) {
        FrontView view(ambient, {0, 1});
        ConstructionOutcome out = remap_to_ambient(view, label_c4_klein(base, view.a_part));
        out.theorem_tag = "kpq";
        return out;
    }
    if (two.size() != 1 || two[0] != 4)
        throw InternalCheckError("kpq: 2-part of order 4 is neither Z4 nor Z2xZ2");

    // Z4 x A: the p-side copies get offset (1,0), the q-side (3,0).
    FrontView view(ambient, {0});
    const AbelianGroup& a = view.a_part;
    AbelianGroup big = view.construction_group;
    auto a_elems = enumerate_elements(a);
    ConstructionOutcome out{lexicographic_product(base, cycle(4)), {big, {}}, {}, "kpq"};
    out.labeling.values.resize(static_cast<std::size_t>(4 * n));
    for (std::int64_t i = 0; i < n; ++i) {
        const GroupElement& ai = a_elems[static_cast<std::size_t>(i)];
        std::int64_t offset = i < p ? 1 : 3;
        GroupElement pair_sum = with_prefix({offset}, identity(a));
        for (int j = 0; j < 2; ++j)
            out.labeling.values[static_cast<std::size_t>(4 * i + j)] = with_prefix({2 * j}, ai);
        for (int j = 2; j < 4; ++j)
            out.labeling.values[static_cast<std::size_t>(4 * i + j)] =
                sub(big, pair_sum, out.labeling.values[static_cast<std::size_t>(4 * i + j - 2)]);
    }
    out.predicted_mu = with_prefix({3}, identity(a));
    return remap_to_ambient(view, std::move(out));
}

ConstructionOutcome label_composition(const Graph& g, const Graph& h,
                                      const GroupLabeling& base, std::int64_t prime_p) {
    if (!is_prime(prime_p)) throw PreconditionError("compose: p must be prime");
    GroupVerdict bv = verify_group(h, base);
    if (!bv.magic()) throw PreconditionError("compose: base labeling of H is not magic");
    const GroupElement& mu_base = *bv.mu;

    std::int64_t ng = g.vertex_count();
    int alpha = 0;
    std::int64_t x = ng;
    while (x > 1 && x % prime_p == 0) { x /= prime_p; ++alpha; }
    if (x != 1 || alpha < 1)
        throw PreconditionError("compose: |V(G)| must be p^alpha with alpha >= 1");

    int b = g.degree(0) % 2;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) % 2 != b)
            throw PreconditionError("compose: degrees of G must share one parity");
        if (g.degree(v) % prime_p != 0)
            throw PreconditionError("compose: p must divide every degree of G");
    }
    for (int v = 0; v < h.vertex_count(); ++v)
        if (h.degree(v) % prime_p != 0)
            throw PreconditionError("compose: p must divide every degree of H");
    // Needed so the second-coordinate contribution of whole external copies
    // (|V(H)| times one element of Z_p^alpha each) vanishes.
    if (h.vertex_count() % prime_p != 0)
        throw PreconditionError("compose: p must divide |V(H)|");

    AbelianGroup zp_alpha(std::vector<std::int64_t>(static_cast<std::size_t>(alpha), prime_p));
    std::vector<std::int64_t> big_factors = base.group.factors();
    big_factors.insert(big_factors.end(), zp_alpha.factors().begin(), zp_alpha.factors().end());
    AbelianGroup big(std::move(big_factors));

    auto copies = enumerate_elements(zp_alpha);
    std::int64_t nh = h.vertex_count();
    ConstructionOutcome out{lexicographic_product(g, h), {big, {}}, {}, "compose"};
    out.labeling.values.reserve(static_cast<std::size_t>(ng * nh));
    for (std::int64_t i = 0; i < ng; ++i)
        for (std::int64_t j = 0; j < nh; ++j)
            out.labeling.values.push_back(
                concat(base.values[static_cast<std::size_t>(j)], copies[static_cast<std::size_t>(i)]));
    GroupElement mu_front = add(base.group, scalar_mul(base.group, b, sum_all(base.group)), mu_base);
    out.predicted_mu = concat(mu_front, identity(zp_alpha));
    verify_outcome(out);
    return out;
}

std::vector<ConstructionOutcome> eulerian_odd_all_groups(const Graph& g) {
    std::int64_t n = g.vertex_count();
    if (n < 1 || n % 2 == 0) throw PreconditionError("eulerian-odd: |V(G)| must be odd");
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) % 2 != 0)
            throw PreconditionError("eulerian-odd: all degrees must be even");
    std::vector<ConstructionOutcome> out;
    for (const auto& group : enumerate_groups(4 * n))
        out.push_back(label_c4_any_group(g, group));
    return out;
}

bool no_group_exists(const Graph& g) {
    auto r = g.regular_degree();
    return r && *r % 2 == 1 && g.vertex_count() % 4 == 2;
}

std::optional<std::int64_t> blanket_degree_class(const Graph& g) {
    if (g.vertex_count() == 0) return std::nullopt;
    auto [p, odd] = two_adic_valuation(g.vertex_count());
    return degree_class(g, pow2(p + 1));
}

} // namespace gdm
