#include <doctest.h>

#include <set>

#include "gdm/abelian.hpp"
#include "gdm/errors.hpp"
#include "support.hpp"

using namespace gdm;

TEST_CASE("spec parsing and printing") {
    CHECK(AbelianGroup::parse("Z4xZ2xZ5").factors() == std::vector<std::int64_t>{4, 2, 5});
    CHECK(AbelianGroup::parse("z4Xz2").order() == 8);
    CHECK(AbelianGroup::parse("Z1").trivial());
    CHECK(AbelianGroup::parse("Z12").spec() == "Z12");
    CHECK(AbelianGroup::parse("Z4xZ2").spec() == "Z4xZ2");
    CHECK(AbelianGroup{}.spec() == "Z1");

    CHECK_THROWS_AS(AbelianGroup::parse("Z4xZ1"), ArgumentError);
    CHECK_THROWS_AS(AbelianGroup::parse("Z0"), ArgumentError);
    CHECK_THROWS_AS(AbelianGroup::parse("Z4x"), ArgumentError);
    CHECK_THROWS_AS(AbelianGroup::parse("4x2"), ArgumentError);
    CHECK_THROWS_AS(AbelianGroup::parse("Z4 x Z2"), ArgumentError);
    CHECK_THROWS_AS(AbelianGroup::parse(""), ArgumentError);
}

TEST_CASE("group equality is isomorphism of primary decompositions") {
    CHECK(AbelianGroup::parse("Z6") == AbelianGroup::parse("Z2xZ3"));
    CHECK(AbelianGroup::parse("Z12") == AbelianGroup::parse("Z3xZ4"));
    CHECK(AbelianGroup::parse("Z4") != AbelianGroup::parse("Z2xZ2"));
    CHECK(AbelianGroup::parse("Z6xZ6") == AbelianGroup::parse("Z2xZ2xZ3xZ3"));
}

TEST_CASE("element arithmetic") {
    AbelianGroup z4z2 = AbelianGroup::parse("Z4xZ2");
    CHECK(add(z4z2, {{3, 1}}, {{2, 1}}) == GroupElement{{1, 0}});

    AbelianGroup z4 = AbelianGroup::parse("Z4");
    for (const auto& g : enumerate_elements(z4)) CHECK(add(z4, identity(z4), g) == g);
    CHECK(neg(z4, {{1}}) == GroupElement{{3}});
    CHECK(scalar_mul(z4, 2, {{3}}) == GroupElement{{2}});

    AbelianGroup z2z2 = AbelianGroup::parse("Z2xZ2");
    for (const auto& g : enumerate_elements(z2z2)) {
        CHECK(add(z2z2, g, g) == identity(z2z2));
        CHECK(neg(z2z2, g) == g);
    }

    AbelianGroup z4z3 = AbelianGroup::parse("Z4xZ3");
    CHECK(neg(z4z3, {{1, 2}}) == GroupElement{{3, 1}});

    AbelianGroup z3z3 = AbelianGroup::parse("Z3xZ3");
    CHECK(scalar_mul(z3z3, 3, {{1, 2}}) == identity(z3z3));
    CHECK(scalar_mul(z3z3, 0, {{2, 1}}) == identity(z3z3));

    CHECK_THROWS_AS(add(z4, {{1}}, {{1, 0}}), ArgumentError);
}

TEST_CASE("sum_all matches the brute-force fold") {
    CHECK(sum_all(AbelianGroup::parse("Z4")) == GroupElement{{2}});
    CHECK(sum_all(AbelianGroup::parse("Z5")) == GroupElement{{0}});
    CHECK(sum_all(AbelianGroup::parse("Z2xZ2")) == GroupElement{{0, 0}});
    for (std::int64_t order = 1; order <= 64; ++order)
        for (const auto& g : enumerate_groups(order)) {
            CAPTURE(g.spec());
            CHECK(sum_all(g) == testsupport::brute_sum_all(g));
            CHECK(scalar_mul(g, 2, sum_all(g)) == identity(g));
        }
}

TEST_CASE("element enumeration order and distinctness") {
    auto z2z2 = enumerate_elements(AbelianGroup::parse("Z2xZ2"));
    CHECK(z2z2 == std::vector<GroupElement>{{{0, 0}}, {{0, 1}}, {{1, 0}}, {{1, 1}}});

    auto trivial = enumerate_elements(AbelianGroup{});
    REQUIRE(trivial.size() == 1);
    CHECK(trivial[0].residues.empty());

    auto z3 = enumerate_elements(AbelianGroup::parse("Z3"));
    CHECK(z3 == std::vector<GroupElement>{{{0}}, {{1}}, {{2}}});

    for (std::int64_t order = 1; order <= 64; ++order)
        for (const auto& g : enumerate_groups(order)) {
            auto elems = enumerate_elements(g);
            CHECK(static_cast<std::int64_t>(elems.size()) == g.order());
            CHECK(elems.front() == identity(g));
            std::set<GroupElement> distinct(elems.begin(), elems.end());
            CHECK(distinct.size() == elems.size());
            for (std::int64_t i = 0; i < g.order(); ++i) {
                CHECK(element_index(g, elems[static_cast<std::size_t>(i)]) == i);
                CHECK(element_at(g, i) == elems[static_cast<std::size_t>(i)]);
            }
        }
}

TEST_CASE("group axioms on random triples, every group of order <= 64") {
    std::mt19937 rng(20240811);
    for (std::int64_t order = 1; order <= 64; ++order)
        for (const auto& g : enumerate_groups(order)) {
            auto elems = enumerate_elements(g);
            for (int trial = 0; trial < 12; ++trial) {
                const auto& a = elems[rng() % elems.size()];
                const auto& b = elems[rng() % elems.size()];
                const auto& c = elems[rng() % elems.size()];
                CHECK(add(g, add(g, a, b), c) == add(g, a, add(g, b, c)));
                CHECK(add(g, a, b) == add(g, b, a));
                CHECK(add(g, a, identity(g)) == a);
                CHECK(add(g, a, neg(g, a)) == identity(g));
            }
        }
}

TEST_CASE("enumerate_groups representatives") {
    auto of8 = enumerate_groups(8);
    REQUIRE(of8.size() == 3);
    CHECK(of8[0].spec() == "Z8");
    CHECK(of8[1].spec() == "Z4xZ2");
    CHECK(of8[2].spec() == "Z2xZ2xZ2");

    auto of12 = enumerate_groups(12);
    REQUIRE(of12.size() == 2);
    CHECK(of12[0].spec() == "Z4xZ3");
    CHECK(of12[1].spec() == "Z2xZ2xZ3");

    auto of1 = enumerate_groups(1);
    REQUIRE(of1.size() == 1);
    CHECK(of1[0].trivial());
}

TEST_CASE("enumerate_groups count matches the partition product for n <= 200") {
    for (std::int64_t n = 1; n <= 200; ++n) {
        auto groups = enumerate_groups(n);
        CHECK(static_cast<long long>(groups.size()) == testsupport::abelian_group_count(n));
        std::set<std::string> distinct;
        for (const auto& g : groups) {
            CHECK(g.order() == n);
            distinct.insert(g.spec());
        }
        CHECK(distinct.size() == groups.size());
    }
}

TEST_CASE("sylow_split examples") {
    {
        SylowSplit s(AbelianGroup::parse("Z12"), 2);
        CHECK(s.p_part().spec() == "Z4");
        CHECK(s.rest().spec() == "Z3");
    }
    {
        SylowSplit s(AbelianGroup::parse("Z2xZ2xZ5"), 2);
        CHECK(s.p_part().spec() == "Z2xZ2");
        CHECK(s.rest().spec() == "Z5");
    }
    {
        SylowSplit s(AbelianGroup::parse("Z6xZ6"), 2);
        CHECK(s.p_part().spec() == "Z2xZ2");
        CHECK(s.rest().spec() == "Z3xZ3");
    }
    CHECK_THROWS_AS(sylow_split(AbelianGroup::parse("Z12"), 4), ArgumentError);
}

TEST_CASE("sylow_split round trip is a bijection for every group of order <= 64") {
    for (std::int64_t order = 1; order <= 64; ++order)
        for (const auto& g : enumerate_groups(order))
            for (std::int64_t p : {2, 3, 5}) {
                SylowSplit s(g, p);
                CHECK(s.p_part().order() * s.rest().order() == g.order());
                std::set<GroupElement> image;
                for (const auto& e : enumerate_elements(g)) {
                    auto [pe, re] = s.from_original(e);
                    GroupElement back = s.to_original(pe, re);
                    CHECK(back == e);
                    image.insert(back);
                }
                CHECK(static_cast<std::int64_t>(image.size()) == g.order());
            }
}
