#include <doctest.h>

#include <set>

#include "sumcont/census.hpp"
#include "sumcont/lowerbound.hpp"
#include "test_helpers.hpp"

using namespace sumcont;
using testutil::interval_ground;

TEST_SUITE_BEGIN("lowerbound");

TEST_CASE("seed families on small parameters") {
    SeedFamily t3 = build_seed_family(3, 3);
    REQUIRE(t3.members.size() == 2);
    CHECK(t3.members[0] == std::vector<std::int64_t>{0, 1, 3});
    CHECK(t3.members[1] == std::vector<std::int64_t>{0, 2, 3});

    SeedFamily t1 = build_seed_family(1, 2);
    REQUIRE(t1.members.size() == 1);
    CHECK(t1.members[0] == std::vector<std::int64_t>{0, 1});

    SeedFamily t2 = build_seed_family(2, 3);
    REQUIRE(t2.members.size() == 1);
    CHECK(t2.members[0] == std::vector<std::int64_t>{0, 1, 2});

    // the two-endpoint set {0, a} is kept only when gcd(a) = 1
    CHECK(build_seed_family(4, 2).members.empty());
    CHECK(build_seed_family(1, 2).members.size() == 1);
}

TEST_CASE("seed family sizes respect the interior bound") {
    for (std::int64_t a = 2; a <= 9; ++a)
        for (int s = 3; s <= 5; ++s)
            CHECK(BigInt(build_seed_family(a, s).members.size()) <= binomial(a - 1, s - 2));
}

TEST_CASE("dilate family counting identity") {
    DilateFamily d = build_dilate_family(3, 7, 3);
    CHECK(d.expected_count == 10); // 2 seeds, placements 2+1+1+1
    CHECK(BigInt(d.members.size()) == d.expected_count);
    CHECK(d.distinct);

    // tightest placement: n = a+1 admits exactly t = d = 1
    DilateFamily tight = build_dilate_family(3, 4, 3);
    CHECK(tight.expected_count == 2);
    CHECK(BigInt(tight.members.size()) == 2);
    DilateFamily none = build_dilate_family(3, 3, 3); // no (t, d) fits
    CHECK(none.members.empty());
    CHECK(none.expected_count == 0);
}

TEST_CASE("dilated images are injective in (t, d, seed)") {
    for (std::int64_t a : {3, 4, 5}) {
        DilateFamily fam = build_dilate_family(a, 16, 3);
        CHECK(fam.distinct);
        CHECK(BigInt(fam.members.size()) == fam.expected_count);
    }
}

TEST_CASE("full construction verifies inside the parameter window") {
    DilateVerification rep = verify_dilate_construction(16, 20, 3);
    CHECK(rep.strict_range);
    CHECK(rep.a_low == 5);
    CHECK(rep.a_high == 10);
    CHECK(rep.counts_match_formula);
    CHECK(rep.pairwise_disjoint);
    CHECK(rep.all_members_in_family);
    CHECK(rep.sound);
    CHECK(rep.total > 0);
    CHECK(rep.per_a_counts.size() == 6);
}

TEST_CASE("relaxed mode covers small instances") {
    CHECK_THROWS_AS(verify_dilate_construction(10, 11, 3), PreconditionError);
    DilateVerification rep = verify_dilate_construction(10, 11, 3, /*relaxed=*/true);
    CHECK(!rep.strict_range);
    CHECK(rep.total > 0);
    CHECK(rep.pairwise_disjoint);
    CHECK(rep.all_members_in_family);
    CHECK(rep.sound);
}

TEST_CASE("construction members really live in the census") {
    DilateVerification rep = verify_dilate_construction(14, 11, 3, true);
    GroundSet gs = interval_ground(1, 14);
    CensusOptions mat;
    mat.materialize = true;
    FamilyCensus census = census_symmetric(gs, 11, 3, mat);
    std::set<IndexSet> members(census.members.begin(), census.members.end());
    for (std::int64_t a = rep.a_low; a <= rep.a_high; ++a) {
        DilateFamily fam = build_dilate_family(a, 14, 3);
        for (const auto& image : fam.members)
            CHECK(members.count(testutil::by_values(gs, image)) == 1);
    }
}

TEST_CASE("threaded verification is identical to serial") {
    DilateVerification s1 = verify_dilate_construction(18, 22, 3, false, {}, 1);
    DilateVerification s8 = verify_dilate_construction(18, 22, 3, false, {}, 8);
    CHECK(s1.total == s8.total);
    CHECK(s1.per_a_counts == s8.per_a_counts);
    CHECK(s1.census_count == s8.census_count);
}

TEST_CASE("split lower bound values") {
    CHECK(asym_lower_bound(10, 4, 1, 1) == 4); // binom(2,1)^2
    CHECK(asym_lower_bound(10, 3, 1, 3) == 0); // x = 0 < s
    CHECK_THROWS_AS(asym_lower_bound(10, 4, 2, 1), PreconditionError);
    CHECK_THROWS_AS(asym_lower_bound(2, 40, 1, 1), PreconditionError);
}

TEST_CASE("split lower bound never exceeds the exact pair census") {
    for (int n : {8, 10, 12}) {
        GroundSet gs = interval_ground(1, n);
        for (std::int64_t m : {4, 6, 8}) {
            for (std::int64_t s = 1; s <= 2; ++s) {
                for (std::int64_t s2 = s; s2 <= 3; ++s2) {
                    const std::int64_t x = s * m / (s + s2);
                    if (x > n || m - x > n) continue;
                    BigInt lower = asym_lower_bound(n, m, s, s2);
                    BigInt exact = census_asymmetric(gs, m, static_cast<int>(s),
                                                     static_cast<int>(s2))
                                       .count;
                    CHECK(lower <= exact);
                }
            }
        }
    }
}

TEST_SUITE_END();
