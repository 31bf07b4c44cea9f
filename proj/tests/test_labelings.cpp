#include <doctest.h>

#include "gdm/errors.hpp"
#include "gdm/labeling.hpp"
#include "gdm/oracle.hpp"
#include "support.hpp"

using namespace gdm;

namespace {
GroupLabeling z4_labels(std::vector<std::int64_t> v) {
    GroupLabeling l{AbelianGroup::parse("Z4"), {}};
    for (auto x : v) l.values.push_back({{x}});
    return l;
}
} // namespace

TEST_CASE("weight sums the open neighborhood") {
    Graph c4 = cycle(4);
    ClassicLabeling cl{{1, 2, 4, 3}};
    CHECK(weight(c4, cl, 0) == 5); // neighbors 1 and 3 carry 2 and 3

    Graph iso(3, {{0, 1}});
    ClassicLabeling cl2{{1, 2, 3}};
    CHECK(weight(iso, cl2, 2) == 0);
    GroupLabeling gl{AbelianGroup::parse("Z3"), {{{0}}, {{1}}, {{2}}}};
    CHECK(weight(iso, gl, 2) == identity(gl.group));

    CHECK(weight(c4, z4_labels({1, 2, 0, 3}), 1) == GroupElement{{1}});
    CHECK_THROWS_AS(weight(c4, cl, 7), ArgumentError);
}

TEST_CASE("verify_group verdicts") {
    Graph c4 = cycle(4);

    GroupVerdict magic = verify_group(c4, z4_labels({1, 2, 0, 3}));
    REQUIRE(magic.magic());
    CHECK(*magic.mu == GroupElement{{1}});

    GroupVerdict dup = verify_group(c4, z4_labels({0, 1, 2, 2}));
    CHECK(dup.status == VerdictStatus::NotInjective);
    CHECK(*dup.duplicate == std::pair{2, 3});

    Graph c3 = cycle(3);
    GroupLabeling l3{AbelianGroup::parse("Z3"), {{{0}}, {{1}}, {{2}}}};
    GroupVerdict nc = verify_group(c3, l3);
    CHECK(nc.status == VerdictStatus::NonConstantWeight);
    CHECK(*nc.unequal_vertex == 1); // w(0) = 0 while w(1) = 2

    CHECK_THROWS_AS(verify_group(c4, z4_labels({1, 2, 0})), ArgumentError);
    // group order must match the vertex count
    GroupLabeling wrong{AbelianGroup::parse("Z3"), {{{0}}, {{1}}, {{2}}, {{0}}}};
    CHECK_THROWS_AS(verify_group(c4, wrong), ArgumentError);
    // residues must lie under the factors
    CHECK_THROWS_AS(verify_group(c4, z4_labels({1, 2, 0, 4})), ArgumentError);
}

TEST_CASE("verify_classic verdicts and structural errors") {
    Graph c4 = cycle(4);

    ClassicVerdict magic = verify_classic(c4, {{1, 2, 4, 3}});
    REQUIRE(magic.magic());
    CHECK(*magic.k == 5); // r(n+1)/2 with r=2, n=4

    ClassicVerdict nc = verify_classic(c4, {{1, 2, 3, 4}});
    CHECK(nc.status == VerdictStatus::NonConstantWeight);
    CHECK(*nc.unequal_vertex == 1); // w(0) = 6, w(1) = 4

    CHECK_THROWS_AS(verify_classic(c4, {{1, 2, 2, 3}}), ArgumentError);
    CHECK_THROWS_AS(verify_classic(c4, {{0, 1, 2, 3}}), ArgumentError);
    CHECK_THROWS_AS(verify_classic(c4, {{1, 2, 5, 3}}), ArgumentError);
    CHECK_THROWS_AS(verify_classic(c4, {{1, 2, 3}}), ArgumentError);
}

TEST_CASE("magic verdicts survive an independent weight recomputation") {
    // accumulate over the edge list instead of neighbor lists
    Graph c4 = cycle(4);
    GroupLabeling l = z4_labels({1, 2, 0, 3});
    GroupVerdict v = verify_group(c4, l);
    REQUIRE(v.magic());
    std::vector<GroupElement> w(4, identity(l.group));
    for (auto [a, b] : c4.edges()) {
        w[a] = add(l.group, w[a], l.values[b]);
        w[b] = add(l.group, w[b], l.values[a]);
    }
    for (const auto& wv : w) CHECK(wv == *v.mu);
}

TEST_CASE("a classic magic labeling reduced mod n is Z_n-magic") {
    Graph c4 = cycle(4);
    ClassicLabeling cl{{1, 2, 4, 3}};
    REQUIRE(verify_classic(c4, cl).magic());
    GroupVerdict v = verify_group(c4, classic_as_zn(cl));
    REQUIRE(v.magic());
    CHECK(*v.mu == GroupElement{{1}}); // 5 mod 4

    // and for everything the classic searcher finds on a small corpus
    for (const auto& g : testsupport::seeded_corpus(24, 6, 99)) {
        auto rep = search_classic_dm(g);
        if (rep.outcome != SearchOutcome::Found) continue;
        CHECK(verify_group(g, classic_as_zn(*rep.labeling)).magic());
    }
}
