#include <doctest.h>

#include <map>

#include "sumcont/bipartite.hpp"
#include "sumcont/census.hpp"
#include "test_helpers.hpp"

using namespace sumcont;
using testutil::by_values;
using testutil::interval_ground;
using testutil::sum_by_values;
using testutil::values_of;

TEST_SUITE_BEGIN("bipartite");

TEST_CASE("sigma picks the smallest index among equal degrees") {
    GroundSet gs = interval_ground(1, 4);
    IndexSet f = by_values(gs, {1, 2});
    BipartiteView view(gs, f, gs.full_set(Universe::Sum), gs.full_set(Universe::Ground));
    for (int a = 0; a < gs.size(); ++a) CHECK(view.degree(a) == 2);
    CHECK(gs.element(view.sigma_select())[0] == 1);
}

TEST_CASE("sigma on a singleton part returns it") {
    GroundSet gs = interval_ground(1, 8);
    IndexSet u1 = by_values(gs, {7});
    BipartiteView view(gs, by_values(gs, {1}), gs.full_set(Universe::Sum), u1);
    CHECK(gs.element(view.sigma_select())[0] == 7);
}

TEST_CASE("sigma with an empty shift set is pure tie-break") {
    GroundSet gs = interval_ground(1, 6);
    BipartiteView view(gs, gs.empty_set(Universe::Ground), gs.full_set(Universe::Sum),
                       gs.full_set(Universe::Ground));
    CHECK(view.sigma_select() == 0);
    BipartiteView empty(gs, by_values(gs, {1}), gs.full_set(Universe::Sum),
                        gs.empty_set(Universe::Ground));
    CHECK_THROWS_AS(empty.sigma_select(), PreconditionError);
}

TEST_CASE("single-step run removes the selected neighbourhood") {
    GroundSet gs = interval_ground(1, 4);
    IndexSet a = by_values(gs, {1, 2, 3});
    IndexSet f = by_values(gs, {1, 2});
    SumriseResult out = sumrise(gs, 1, a, f, gs.full_set(Universe::Sum),
                                gs.full_set(Universe::Ground));
    CHECK(values_of(gs, out.fingerprint) == std::vector<std::int64_t>{1});
    CHECK(values_of(gs, out.c0) == std::vector<std::int64_t>{4, 5, 6, 7, 8});
    CHECK(values_of(gs, out.c1) == std::vector<std::int64_t>{2, 3, 4});
    REQUIRE(out.trace.records.size() == 1);
    CHECK(out.trace.records[0].vertex == 0);
    CHECK(out.trace.records[0].member);
}

TEST_CASE("full-size fingerprint consumes the whole input set") {
    GroundSet gs = interval_ground(1, 5);
    IndexSet a = gs.full_set(Universe::Ground);
    IndexSet f = by_values(gs, {2});
    SumriseResult out = sumrise(gs, a.count(), a, f, gs.full_set(Universe::Sum), a);
    CHECK(out.fingerprint == a);
    CHECK(out.c1.empty());
}

TEST_CASE("repeat runs are bit-identical") {
    GroundSet gs = interval_ground(1, 9);
    IndexSet a = by_values(gs, {2, 3, 5, 8});
    IndexSet f = by_values(gs, {1, 2, 4});
    SumriseOptions opts;
    opts.check_complement = true;
    SumriseResult r1 = sumrise(gs, 2, a, f, gs.full_set(Universe::Sum),
                               gs.full_set(Universe::Ground), opts);
    SumriseResult r2 = sumrise(gs, 2, a, f, gs.full_set(Universe::Sum),
                               gs.full_set(Universe::Ground), opts);
    CHECK(r1.fingerprint == r2.fingerprint);
    CHECK(r1.c0 == r2.c0);
    CHECK(r1.c1 == r2.c1);
    CHECK(r1.trace.lines() == r2.trace.lines());
}

TEST_CASE("trace serializes one record per line and sizes never grow") {
    GroundSet gs = interval_ground(1, 6);
    IndexSet a = by_values(gs, {1, 4, 5});
    IndexSet f = by_values(gs, {1, 3});
    SumriseResult out = sumrise(gs, 2, a, f, gs.full_set(Universe::Sum),
                                gs.full_set(Universe::Ground));
    int prev0 = gs.sum_size(), prev1 = gs.size();
    for (const TraceRecord& r : out.trace.records) {
        CHECK(r.size0 <= prev0);
        CHECK(r.size1 == prev1 - 1); // exactly one ground vertex leaves per step
        prev0 = r.size0;
        prev1 = r.size1;
    }
    auto lines = out.trace.lines();
    REQUIRE(!lines.empty());
    CHECK(lines[0].find(' ') != std::string::npos);
}

TEST_CASE("preconditions are reported by clause") {
    GroundSet gs = interval_ground(1, 5);
    IndexSet a = by_values(gs, {1, 2});
    IndexSet f = by_values(gs, {1});
    IndexSet u1 = by_values(gs, {1, 3});
    CHECK_THROWS_WITH_AS(
        sumrise(gs, 1, a, f, gs.full_set(Universe::Sum), u1, {}),
        doctest::Contains("subset of U1"), PreconditionError);
    CHECK_THROWS_WITH_AS(
        sumrise(gs, 3, a, f, gs.full_set(Universe::Sum), gs.full_set(Universe::Ground), {}),
        doctest::Contains("below the fingerprint size"), PreconditionError);
    IndexSet small_u0 = sum_by_values(gs, {2});
    CHECK_THROWS_WITH_AS(sumrise(gs, 1, a, f, small_u0, gs.full_set(Universe::Ground), {}),
                         doctest::Contains("complement"), PreconditionError);
}

TEST_CASE("incremental degrees agree with recount") {
    GroundSet gs = interval_ground(1, 10);
    IndexSet f = by_values(gs, {1, 2, 5});
    BipartiteView view(gs, f, gs.full_set(Universe::Sum), gs.full_set(Universe::Ground));
    view.remove_vertex_and_neighbourhood(2);
    view.remove_vertex(0);
    view.remove_vertex_and_neighbourhood(7);
    view.u1().for_each([&](int v) { CHECK(view.degree(v) == view.degree_recount(v)); });
}

TEST_CASE("fingerprint size plus survivors stay below the guaranteed cap") {
    // delta * lambda * s >= (1 + delta) * m with delta = 1, s = 3, lambda = 4, m = 6.
    GroundSet gs = interval_ground(1, 14);
    const std::int64_t m = 6;
    const int s = 3, lambda = 4;
    int members = 0;
    for_each_bounded_pair(gs, m, s, lambda, [&](const IndexSet& a, const IndexSet& f) {
        SumriseOptions opts;
        opts.sumset_cap = m;
        SumriseResult out =
            sumrise(gs, s, a, f, gs.full_set(Universe::Sum), gs.full_set(Universe::Ground), opts);
        CHECK(out.fingerprint.count() + out.c1.count() <= 2 * m); // (1+delta)m
        CHECK(a.is_subset_of(out.fingerprint | out.c1));
        CHECK((out.fingerprint & out.c1).empty());
        ++members;
    });
    CHECK(members > 0);
}

TEST_CASE("dense runs shrink a universe") {
    // lambda * s >= m and |U1| >= m/4; full universes keep the graph dense.
    GroundSet gs = interval_ground(1, 10);
    const std::int64_t m = 6;
    const int s = 2, lambda = 3;
    for (auto delta : {std::pair<int, int>{1, 2}, {1, 1}}) {
        const std::int64_t dn = delta.first, dd = delta.second;
        int runs = 0;
        for_each_bounded_pair(gs, m, s, lambda, [&](const IndexSet& a, const IndexSet& f) {
            IndexSet u0 = gs.full_set(Universe::Sum);
            IndexSet u1 = gs.full_set(Universe::Ground);
            // e >= delta |F||U1| required by the dichotomy's hypotheses
            std::int64_t e = bipartite_edge_count(gs, f, u0, u1);
            if (!(BigInt(e) * dd >= BigInt(dn) * f.count() * u1.count())) return;
            SumriseOptions opts;
            opts.sumset_cap = m;
            SumriseResult out = sumrise(gs, s, a, f, u0, u1, opts);
            const std::int64_t lost0 = u0.count() - out.c0.count();
            const std::int64_t kept1 = out.fingerprint.count() + out.c1.count();
            const bool shrunk0 = BigInt(6 * lost0) * dd >= BigInt(dn) * m;
            const bool shrunk1 = BigInt(6 * kept1) * dd <= BigInt(6 * dd - dn) * u1.count();
            CHECK((shrunk0 || shrunk1));
            ++runs;
        });
        CHECK(runs > 0);
    }
}

TEST_CASE("equal fingerprints force equal containers") {
    GroundSet gs = interval_ground(1, 10);
    const std::int64_t m = 6;
    const int s = 2;
    for (int lambda : {1, 2}) {
        std::vector<int> size_choices{s, s + 1, s + 2};
        for (int asize : size_choices) {
            std::map<std::string, std::pair<IndexSet, IndexSet>> by_fingerprint;
            int collisions = 0;
            for_each_bounded_pair(gs, m, asize, lambda, [&](const IndexSet& a, const IndexSet& f) {
                SumriseOptions opts;
                opts.sumset_cap = m;
                SumriseResult out = sumrise(gs, s, a, f, gs.full_set(Universe::Sum),
                                            gs.full_set(Universe::Ground), opts);
                std::string key = f.hex_key() + "|" + out.fingerprint.hex_key();
                auto it = by_fingerprint.find(key);
                if (it == by_fingerprint.end()) {
                    by_fingerprint.emplace(key, std::make_pair(out.c0, out.c1));
                } else {
                    ++collisions;
                    CHECK(it->second.first == out.c0);
                    CHECK(it->second.second == out.c1);
                }
            });
            if (asize > s) CHECK(collisions > 0);
        }
    }
}

TEST_SUITE_END();
