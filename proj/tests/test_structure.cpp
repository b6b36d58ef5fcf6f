#include <doctest.h>

#include <algorithm>
#include <set>

#include "sumcont/rng.hpp"
#include "sumcont/structure.hpp"
#include "test_helpers.hpp"

using namespace sumcont;
using testutil::interval_ground;

namespace {

// Fully naive reference: every difference, every covered-endpoint window.
APCover naive_ap_cover(const std::vector<std::int64_t>& input, std::int64_t max_len) {
    std::vector<std::int64_t> a(input);
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    const auto total = static_cast<std::int64_t>(a.size());
    const std::int64_t range = a.back() - a.front();
    APCover best{a.front(), 1, 1, total - 1};
    for (std::int64_t d = 1; d <= std::max<std::int64_t>(1, range); ++d) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            for (std::size_t j = i; j < a.size(); ++j) {
                if ((a[j] - a[i]) % d != 0) continue;
                const std::int64_t len = (a[j] - a[i]) / d + 1;
                if (len > max_len) continue;
                std::int64_t covered = 0;
                for (std::int64_t v : a)
                    if (v >= a[i] && v <= a[j] && (v - a[i]) % d == 0) ++covered;
                const std::int64_t unc = total - covered;
                if (unc < best.uncovered ||
                    (unc == best.uncovered &&
                     (d < best.diff || (d == best.diff && a[i] < best.start)))) {
                    best = APCover{a[i], d, len, unc};
                }
            }
        }
    }
    return best;
}

} // namespace

TEST_SUITE_BEGIN("structure");

TEST_CASE("progressions cover themselves") {
    APCover c = ap_cover_search({2, 4, 6, 8}, 4);
    CHECK(c.uncovered == 0);
    CHECK(c.diff == 2);
    CHECK(c.start == 2);
    CHECK(c.length == 4);
}

TEST_CASE("spread sets stay partly uncovered") {
    APCover c = ap_cover_search({1, 2, 4, 8}, 3);
    CHECK(c.uncovered == 2);
}

TEST_CASE("singletons are a length-one progression") {
    APCover c = ap_cover_search({41}, 1);
    CHECK(c.uncovered == 0);
    CHECK(c.length == 1);
    CHECK(c.diff == 1);
    CHECK_THROWS_AS(ap_cover_search({}, 3), PreconditionError);
    CHECK_THROWS_AS(ap_cover_search({1}, 0), PreconditionError);
}

TEST_CASE("search matches the naive reference on random sets") {
    CounterRng rng(23);
    for (int trial = 0; trial < 1500; ++trial) {
        const int size = 1 + static_cast<int>(rng.next_below(10));
        std::set<std::int64_t> vals;
        while (static_cast<int>(vals.size()) < size)
            vals.insert(1 + static_cast<std::int64_t>(rng.next_below(20)));
        std::vector<std::int64_t> a(vals.begin(), vals.end());
        const std::int64_t max_len = 1 + static_cast<std::int64_t>(rng.next_below(12));
        APCover fast = ap_cover_search(a, max_len);
        APCover naive = naive_ap_cover(a, max_len);
        CHECK(fast.uncovered == naive.uncovered);
        CHECK(fast.diff == naive.diff);
        CHECK(fast.start == naive.start);
        CHECK(fast.length == naive.length);
    }
}

TEST_CASE("pair structure check on applicable pairs") {
    LevSmeResult r = lev_smeliansky_check({1, 2, 3, 4}, {1, 2, 3});
    CHECK(r.applicable); // |A+B| = 6 <= 4+3+3-4
    CHECK(r.conclusion_holds);
    REQUIRE(r.witnesses.has_value());
    CHECK(r.witnesses->first.diff == r.witnesses->second.diff);
    CHECK(r.witnesses->first.length <= r.sumset_size - 3 + 1);
    CHECK(r.witnesses->second.length <= r.sumset_size - 4 + 1);

    CHECK(!lev_smeliansky_check({1, 2, 3}, {1, 2}).applicable); // 4 > 3
    CHECK(!lev_smeliansky_check({5}, {5}).applicable);          // bound is negative
}

TEST_CASE("pair structure holds on every applicable pair in a box") {
    // every nonempty pair over [1..8]
    const int n = 8;
    for (unsigned am = 1; am < (1u << n); ++am) {
        for (unsigned bm = am; bm < (1u << n); ++bm) {
            std::vector<std::int64_t> a, b;
            for (int i = 0; i < n; ++i) {
                if (am >> i & 1) a.push_back(i + 1);
                if (bm >> i & 1) b.push_back(i + 1);
            }
            LevSmeResult r = lev_smeliansky_check(a, b);
            if (r.applicable) CHECK(r.conclusion_holds);
        }
    }
}

TEST_CASE("stability alternative b on progression-shaped data") {
    // D1 = D2 = [1..k], W = [2..2k]: everything sums into W.
    const std::int64_t k = 600;
    std::vector<std::int64_t> d, w;
    for (std::int64_t v = 1; v <= k; ++v) d.push_back(v);
    for (std::int64_t v = 2; v <= 2 * k; ++v) w.push_back(v);
    StabilityResult r = stability_check(d, d, w, 0.0008, 1, 1);
    CHECK(r.applicable);
    CHECK(r.out_pairs == 0);
    CHECK(!r.alternative_a);
    CHECK(r.alternative_b);
    REQUIRE(r.witnesses.has_value());
    CHECK(r.witnesses->first.diff == r.witnesses->second.diff);
}

TEST_CASE("stability alternative a on scattered data") {
    // Sums spill far outside a small W.
    std::vector<std::int64_t> d1, d2, w;
    CounterRng rng(5);
    std::set<std::int64_t> s1, s2;
    while (s1.size() < 200) s1.insert(1 + static_cast<std::int64_t>(rng.next_below(5000)));
    while (s2.size() < 200) s2.insert(1 + static_cast<std::int64_t>(rng.next_below(5000)));
    d1.assign(s1.begin(), s1.end());
    d2.assign(s2.begin(), s2.end());
    for (std::int64_t v = 2; v <= 400; ++v) w.push_back(v);
    StabilityResult r = stability_check(d1, d2, w, 0.0008, 1, 1);
    CHECK(r.applicable);
    CHECK(r.alternative_a);
}

TEST_CASE("stability hypotheses gate the verdict") {
    std::vector<std::int64_t> d{1, 2, 3};
    std::vector<std::int64_t> w{2, 3, 4, 5, 6};
    StabilityResult r = stability_check(d, d, w, 0.2, 1, 1); // epsilon too large
    CHECK(!r.applicable);
}

TEST_CASE("extremal families are progressions") {
    // m = 2s-1 forces every census member to be a progression; all covers
    // are exact at any allowed length.
    GroundSet gs = interval_ground(1, 14);
    StructureReport rep = sample_structure_experiment(gs, 5, 3, std::nullopt, 200, 42, 0.1);
    CHECK(rep.drawn == 200);
    REQUIRE(rep.histogram.size() == 1);
    CHECK(rep.histogram.begin()->first == 0);
    CHECK(rep.histogram.begin()->second == 200);
}

TEST_CASE("experiment reruns are identical and empty runs are empty") {
    GroundSet gs = interval_ground(1, 12);
    StructureReport a = sample_structure_experiment(gs, 8, 3, std::nullopt, 150, 9, 0.15);
    StructureReport b = sample_structure_experiment(gs, 8, 3, std::nullopt, 150, 9, 0.15);
    CHECK(a.histogram == b.histogram);
    StructureReport none = sample_structure_experiment(gs, 8, 3, std::nullopt, 0, 9, 0.15);
    CHECK(none.drawn == 0);
    CHECK(none.histogram.empty());
}

TEST_CASE("asymmetric experiment sums both defects") {
    GroundSet gs = interval_ground(1, 12);
    StructureReport rep = sample_structure_experiment(gs, 6, 2, 3, 100, 7, 0.2);
    CHECK(rep.drawn == 100);
    CHECK(rep.max_len_b > 0);
}

TEST_SUITE_END();
