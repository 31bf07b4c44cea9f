#include <doctest.h>

#include <set>

#include "gdm/construct.hpp"
#include "gdm/errors.hpp"
#include "gdm/oracle.hpp"
#include "support.hpp"

using namespace gdm;

namespace {

// Within copy i of G[C4] the opposite pairs must share one sum and the four
// labels a fixed total; both are group elements independent of i.
void check_copy_identities(const ConstructionOutcome& out, const GroupElement& pair_sum,
                           const GroupElement& copy_total) {
    const auto& g = out.labeling.group;
    const auto& v = out.labeling.values;
    for (std::size_t i = 0; i * 4 < v.size(); ++i) {
        CHECK(add(g, v[4 * i + 0], v[4 * i + 2]) == pair_sum);
        CHECK(add(g, v[4 * i + 1], v[4 * i + 3]) == pair_sum);
        GroupElement total = add(g, add(g, v[4 * i + 0], v[4 * i + 1]),
                                 add(g, v[4 * i + 2], v[4 * i + 3]));
        CHECK(total == copy_total);
    }
}

void check_injective(const ConstructionOutcome& out) {
    std::set<GroupElement> distinct(out.labeling.values.begin(), out.labeling.values.end());
    CHECK(static_cast<std::int64_t>(distinct.size()) == out.labeling.group.order());
}

} // namespace

TEST_CASE("cyclic two-part construction") {
    // C3, p=2, A=Z3: degrees are 2, so c = 0 and mu = (-1 mod 4, 0)
    auto out = label_c4_cyclic_two_part(cycle(3), 2, AbelianGroup::parse("Z3"));
    CHECK(out.predicted_mu == GroupElement{{3, 0}});
    CHECK(out.labeling.group.spec() == "Z4xZ3");
    CHECK(verify_group(out.product, out.labeling).magic());
    check_copy_identities(out, {{3, 0}}, {{2, 0}});
    check_injective(out);

    // K_{3,5}: degrees 3 and 5 agree mod 2, c = 1, mu = (-3 mod 4, 0)
    auto k35 = label_c4_cyclic_two_part(complete_bipartite(3, 5), 2, AbelianGroup::parse("Z8"));
    CHECK(k35.predicted_mu == GroupElement{{1, 0}});
    check_copy_identities(k35, {{3, 0}}, {{2, 0}});

    // p=4 with the trivial A: C4 over Z16, c = 2 mod 8, mu = -5 mod 16
    auto c4 = label_c4_cyclic_two_part(cycle(4), 4, AbelianGroup{});
    CHECK(c4.predicted_mu == GroupElement{{11}});
    check_copy_identities(c4, {{15}}, {{14}});
    check_injective(c4);

    CHECK_THROWS_AS(label_c4_cyclic_two_part(cycle(3), 2, AbelianGroup::parse("Z4")),
                    PreconditionError);
    CHECK_THROWS_AS(label_c4_cyclic_two_part(cycle(3), 3, AbelianGroup::parse("Z6")),
                    PreconditionError); // 2^(p-2) does not divide 3
    CHECK_THROWS_AS(label_c4_cyclic_two_part(complete_bipartite(2, 3), 2, AbelianGroup::parse("Z5")),
                    PreconditionError); // degrees 3 and 2 differ mod 2
    CHECK_THROWS_AS(label_c4_cyclic_two_part(cycle(4), 1, AbelianGroup::parse("Z8")),
                    PreconditionError);
}

TEST_CASE("klein construction") {
    // single copy over Z2xZ2: the labels are exactly the four elements
    auto k1 = label_c4_klein(complete(1), AbelianGroup{});
    CHECK(k1.predicted_mu == GroupElement{{1, 1}});
    CHECK(k1.labeling.group.spec() == "Z2xZ2");
    check_injective(k1);

    auto k23 = label_c4_klein(complete_bipartite(2, 3), AbelianGroup::parse("Z5"));
    CHECK(k23.predicted_mu == GroupElement{{1, 1, 0}});
    check_copy_identities(k23, {{1, 1, 0}}, {{0, 0, 0}});
    check_injective(k23);

    // arbitrary graphs, no degree condition at all
    for (const auto& g : testsupport::seeded_corpus(18, 6, 4242)) {
        for (const auto& a : enumerate_groups(g.vertex_count())) {
            auto out = label_c4_klein(g, a);
            GroupElement expect = identity(out.labeling.group);
            expect.residues[0] = expect.residues[1] = 1;
            CHECK(out.predicted_mu == expect);
        }
    }

    CHECK_THROWS_AS(label_c4_klein(cycle(3), AbelianGroup::parse("Z4")), PreconditionError);
}

TEST_CASE("any-group dispatch") {
    // C5 over Z20: cyclic path with p=2 after the CRT split; mu = (-1 mod 4, 0)
    // pulled back through Z20 coordinates: 15 = crt(3 mod 4, 0 mod 5)
    auto z20 = label_c4_any_group(cycle(5), AbelianGroup::parse("Z20"));
    CHECK(z20.theorem_tag == "cyclic");
    CHECK(z20.labeling.group.spec() == "Z20");
    CHECK(z20.predicted_mu == GroupElement{{15}});

    auto klein = label_c4_any_group(cycle(5), AbelianGroup::parse("Z2xZ2xZ5"));
    CHECK(klein.theorem_tag == "klein");
    CHECK(klein.predicted_mu == GroupElement{{1, 1, 0}});

    CHECK_THROWS_AS(label_c4_any_group(complete_bipartite(2, 3), AbelianGroup::parse("Z4xZ5")),
                    PreconditionError);

    // the caller's factor order is preserved in the output
    auto reordered = label_c4_any_group(cycle(5), AbelianGroup::parse("Z5xZ4"));
    CHECK(reordered.labeling.group.spec() == "Z5xZ4");

    // the per-group degree condition is strictly weaker than the blanket
    // one: the star K_{1,3} fails mod 8 but only needs mod 2 for Z4xZ4
    Graph star = complete_bipartite(1, 3);
    CHECK_FALSE(blanket_degree_class(star).has_value());
    CHECK(label_c4_any_group(star, AbelianGroup::parse("Z4xZ4")).theorem_tag == "cyclic");
    CHECK_THROWS_AS(label_c4_any_group(star, AbelianGroup::parse("Z8xZ2")), PreconditionError);
}

TEST_CASE("any-group order precondition") {
    CHECK_THROWS_AS(label_c4_any_group(cycle(5), AbelianGroup::parse("Z10")), PreconditionError);
}

TEST_CASE("kpq construction, both 2-part shapes") {
    auto z4 = label_kpq_c4(2, 3, AbelianGroup::parse("Z4xZ5"));
    CHECK(z4.predicted_mu == GroupElement{{3, 0}});
    CHECK(z4.theorem_tag == "kpq");
    check_injective(z4);

    auto klein = label_kpq_c4(2, 3, AbelianGroup::parse("Z2xZ2xZ5"));
    CHECK(klein.predicted_mu == GroupElement{{1, 1, 0}});

    // user-facing coordinates survive the CRT split, for both 2-part shapes
    auto z20 = label_kpq_c4(2, 3, AbelianGroup::parse("Z20"));
    CHECK(z20.labeling.group.spec() == "Z20");
    auto z10z2 = label_kpq_c4(2, 3, AbelianGroup::parse("Z10xZ2"));
    CHECK(z10z2.labeling.group.spec() == "Z10xZ2");

    // q = 1 is the smallest odd part
    auto q1 = label_kpq_c4(2, 1, AbelianGroup::parse("Z4xZ3"));
    CHECK(q1.predicted_mu == GroupElement{{3, 0}});

    CHECK_THROWS_AS(label_kpq_c4(3, 2, AbelianGroup::parse("Z4xZ5")), PreconditionError);
    CHECK_THROWS_AS(label_kpq_c4(2, 3, AbelianGroup::parse("Z4xZ4")), PreconditionError);
}

TEST_CASE("composition construction") {
    auto base_rep = search_group_dm(cycle(4), AbelianGroup::parse("Z4"));
    REQUIRE(base_rep.outcome == SearchOutcome::Found);
    const GroupLabeling& base = *base_rep.labeling;
    GroupElement mu_base = *base_rep.mu;

    // even degrees make b = 0, so mu = (mu', 0, 0)
    for (const Graph& g : {cycle(4), empty_graph(4), Graph(4, {{0, 1}, {1, 2}, {0, 2}})}) {
        auto out = label_composition(g, cycle(4), base, 2);
        GroupElement expect{{mu_base.residues[0], 0, 0}};
        CHECK(out.predicted_mu == expect);
        CHECK(out.labeling.group.spec() == "Z4xZ2xZ2");
        check_injective(out);
    }

    CHECK_THROWS_AS(label_composition(complete(1), cycle(4), base, 2), PreconditionError);
    CHECK_THROWS_AS(label_composition(cycle(3), cycle(4), base, 2), PreconditionError); // |V| = 3 != 2^a

    GroupLabeling bad{AbelianGroup::parse("Z4"), {{{0}}, {{1}}, {{2}}, {{3}}}};
    CHECK_THROWS_AS(label_composition(cycle(4), cycle(4), bad, 2), PreconditionError);

    // mixed parity: P4 has degrees 1,2,2,1
    Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK_THROWS_AS(label_composition(p4, cycle(4), base, 2), PreconditionError);

    // p must divide |V(H)|: K1 is trivially magic but has one vertex
    GroupLabeling k1_base{AbelianGroup{}, {GroupElement{}}};
    CHECK_THROWS_AS(label_composition(cycle(4), complete(1), k1_base, 2), PreconditionError);
}

TEST_CASE("eulerian odd order covers every group") {
    auto c5 = eulerian_odd_all_groups(cycle(5));
    REQUIRE(c5.size() == 2); // Z4xZ5 and Z2xZ2xZ5
    CHECK(c5[0].theorem_tag == "cyclic");
    CHECK(c5[1].theorem_tag == "klein");

    auto wind = eulerian_odd_all_groups(dutch_windmill(4, 2));
    REQUIRE(wind.size() == 2); // order 28
    for (const auto& out : wind) CHECK(verify_group(out.product, out.labeling).magic());

    CHECK_THROWS_AS(eulerian_odd_all_groups(cycle(4)), PreconditionError);
    CHECK_THROWS_AS(eulerian_odd_all_groups(complete_bipartite(1, 2)), PreconditionError);
}

TEST_CASE("nonexistence predicate") {
    CHECK(no_group_exists(complete_bipartite(3, 3)));
    CHECK_FALSE(no_group_exists(cycle(4)));
    CHECK(no_group_exists(testsupport::petersen()));
    CHECK_FALSE(no_group_exists(complete_bipartite(2, 3))); // not regular

    // exhaustive confirmation at order 6: the two cubic graphs on 6
    // vertices admit no labeling over any abelian group of that order
    Graph prism(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
    for (const Graph& g : {complete_bipartite(3, 3), prism}) {
        REQUIRE(no_group_exists(g));
        for (const auto& grp : enumerate_groups(6))
            CHECK(search_group_dm(g, grp).outcome == SearchOutcome::ExhaustedNone);
    }
}

TEST_CASE("blanket degree condition") {
    CHECK(blanket_degree_class(cycle(5)) == 0);       // odd order: mod 2
    CHECK(blanket_degree_class(cycle(4)) == 2);       // n = 4: mod 8 -> 2
    CHECK_FALSE(blanket_degree_class(complete_bipartite(2, 3)).has_value());
}

TEST_CASE("cross-validation against exhaustive search on tiny graphs") {
    for (const auto& g : testsupport::graphs_up_to_3()) {
        for (const auto& big : enumerate_groups(4 * g.vertex_count())) {
            ConstructionOutcome out = [&]() -> ConstructionOutcome {
                try {
                    return label_c4_any_group(g, big);
                } catch (const PreconditionError&) {
                    return ConstructionOutcome{Graph(0), {}, {}, "skip"};
                }
            }();
            if (out.theorem_tag == "skip") continue;
            auto rep = search_group_dm(out.product, big,
                                       {std::chrono::minutes(5), UINT64_MAX});
            CAPTURE(big.spec());
            CHECK(rep.outcome == SearchOutcome::Found);
        }
    }
}
