#include <doctest.h>

#include <cmath>

#include "sumcont/bounds.hpp"
#include "sumcont/census.hpp"
#include "sumcont/pipeline.hpp"
#include "sumcont/subgroups.hpp"
#include "test_helpers.hpp"

using namespace sumcont;
using testutil::by_values;
using testutil::interval_ground;

TEST_SUITE_BEGIN("pipeline");

TEST_CASE("epsilon arithmetic is exact for rationals") {
    EpsilonSpec e = EpsilonSpec::rational(1, 5);
    CHECK(e.value() == doctest::Approx(0.2));
    CHECK(e.delta().at_least(1, 5, 5));  // 1 >= (1/25)*25
    CHECK(!e.delta().at_least(0, 5, 5)); // 0 < 1
    // ceil((1 + 25) sqrt(9)) = 78
    CHECK(e.scaled_sqrt_ceiling(9) == 78);
    CHECK(e.scaled_sqrt_ceiling(1) == 26);
    CHECK(EpsilonSpec::rational(1, 4).scaled_sqrt_ceiling(4) == 34);
    CHECK(e.le_one_minus_eps(8, 10));
    CHECK(!e.le_one_minus_eps(9, 10));
}

TEST_CASE("default accuracy choice") {
    // ((sqrt(m) log2 n) / s)^(1/3)
    CHECK(default_epsilon(9, 3000, 8) == doctest::Approx(std::cbrt(9.0 / 3000.0)));
    CHECK(default_epsilon(4, 4, 8) > 0.25); // desk-scale values land out of range
}

TEST_CASE("first container refuses when the parameter inequality fails") {
    GroundSet gs = interval_ground(1, 12);
    FamilySpec spec{8, 2, 4};
    IndexSet a = by_values(gs, {1, 2, 3});
    IndexSet f = by_values(gs, {1, 2, 3, 4});
    CHECK_THROWS_AS(first_container_for(gs, a, f, spec, Threshold::rational(1, 1)),
                    PreconditionError);
    // Outside the guaranteed regime the pass still yields a container for A
    // and the loose bound holds here.
    FirstContainer fc = first_container_for(gs, a, f, spec, Threshold::rational(1, 1),
                                            /*enforce_size_inequality=*/false);
    CHECK(a.is_subset_of(fc.container));
    CHECK(fc.container.count() <= 16);
}

TEST_CASE("first container inside the guaranteed regime") {
    // delta=1, s=3, lambda=4, m=6: delta*lambda*s = 12 >= (1+delta)m = 12.
    GroundSet gs = interval_ground(1, 14);
    FamilySpec spec{6, 3, 4};
    IndexSet a = by_values(gs, {1, 2, 3});
    IndexSet f = by_values(gs, {1, 2, 3, 4});
    FirstContainer fc = first_container_for(gs, a, f, spec, Threshold::rational(1, 1));
    CHECK(a.is_subset_of(fc.container));
    CHECK(fc.container.count() <= 12);
    CHECK(fc.fingerprint.count() == 3);
}

TEST_CASE("first collection covers its family and stays within the count bound") {
    GroundSet gs = interval_ground(1, 10);
    FamilySpec spec{6, 2, 2};
    std::vector<std::pair<IndexSet, IndexSet>> family;
    for_each_bounded_pair(gs, spec.m, spec.s, spec.lambda,
                          [&](const IndexSet& a, const IndexSet& f) { family.emplace_back(a, f); });
    REQUIRE(!family.empty());
    FirstCollection col = build_first_collection(gs, spec, Threshold::rational(2, 1), family);
    CHECK(!col.size_bound_asserted); // 2*2*2 = 8 < 3*6
    CHECK(BigInt(col.containers.size()) <= col.count_bound);
    CHECK(col.count_bound == BigInt(45) * 45);
    for (const auto& [a, f] : family) {
        bool covered = false;
        for (const IndexSet& c : col.containers)
            if (a.is_subset_of(c)) {
                covered = true;
                break;
            }
        CHECK(covered);
    }
}

TEST_CASE("first collection edge cases") {
    GroundSet gs = interval_ground(1, 10);
    FamilySpec spec{6, 2, 2};
    FirstCollection empty = build_first_collection(gs, spec, Threshold::rational(1, 1), {});
    CHECK(empty.containers.empty());
    std::vector<std::pair<IndexSet, IndexSet>> one{{by_values(gs, {1, 2}), by_values(gs, {1, 2})}};
    FirstCollection single = build_first_collection(gs, spec, Threshold::rational(1, 1), one);
    CHECK(single.containers.size() == 1);
}

TEST_CASE("shrink step on the dense worked example") {
    GroundSet gs = interval_ground(1, 4);
    IndexSet a = by_values(gs, {1, 2});
    ShrinkOutcome out = shrink_step(gs, a, a, gs.full_set(Universe::Sum),
                                    gs.full_set(Universe::Ground), gs.full_set(Universe::Ground),
                                    Threshold::real(0.9), 1, 1, 3);
    CHECK(testutil::values_of(gs, out.triple.c0) ==
          std::vector<std::int64_t>{3, 4, 5, 6, 7, 8});
    CHECK(out.triple.c1 == gs.full_set(Universe::Ground));
    CHECK(out.triple.c2 == gs.full_set(Universe::Ground));
    CHECK(!out.in_regime); // lambda*s = 1 < m = 3
    CHECK(out.label == ShrinkLabel::Shrunk0);
}

TEST_CASE("shrink step labels a sparse outcome") {
    GroundSet gs = interval_ground(1, 4);
    IndexSet a = by_values(gs, {1, 2});
    IndexSet u0 = testutil::sum_by_values(gs, {5, 6, 7, 8});
    ShrinkOutcome out =
        shrink_step(gs, a, a, u0, gs.full_set(Universe::Ground), gs.full_set(Universe::Ground),
                    Threshold::real(0.9), 1, 1, 3);
    CHECK(out.label == ShrinkLabel::Sparse);
    CHECK(out.triple.c0 == u0);
}

TEST_CASE("dense in-regime shrink steps always satisfy an alternative") {
    GroundSet gs = interval_ground(1, 9);
    const std::int64_t m = 6;
    const int s = 3, lambda = 2; // lambda*s = 6 >= m, |U1| = 9 >= m/4
    int runs = 0;
    for_each_bounded_pair(gs, m, s, lambda, [&](const IndexSet& a, const IndexSet& b) {
        ShrinkOutcome out = shrink_step(gs, a, b, gs.full_set(Universe::Sum),
                                        gs.full_set(Universe::Ground),
                                        gs.full_set(Universe::Ground),
                                        Threshold::rational(1, 2), s, lambda, m);
        CHECK(out.in_regime);
        CHECK(out.label != ShrinkLabel::OutOfRegime);
        ++runs;
    });
    CHECK(runs > 0);
}

TEST_CASE("strict sequences enforce the size preconditions") {
    GroundSet gs = interval_ground(1, 14);
    IndexSet a = by_values(gs, {1, 2, 3, 4});
    CHECK_THROWS_AS(
        build_container_sequence(gs, a, a, 9, EpsilonSpec::rational(1, 5), /*strict=*/true),
        PreconditionError);
    CHECK_THROWS_AS(
        build_container_sequence(gs, a, a, 9, EpsilonSpec::rational(1, 2), false),
        PreconditionError); // epsilon outside (0, 1/4)
    CHECK_THROWS_AS(
        build_container_sequence(gs, a, a, 5, EpsilonSpec::rational(1, 5), false),
        PreconditionError); // |A+A| = 7 > m
}

TEST_CASE("full sequence on a mid-size instance") {
    GroundSet gs = interval_ground(1, 14);
    const std::int64_t m = 9;
    IndexSet a = by_values(gs, {1, 2, 3, 4});
    EpsilonSpec eps = EpsilonSpec::rational(1, 5);
    ContainerSequence seq = build_container_sequence(gs, a, a, m, eps, false);

    IndexSet comp = gs.sumset_complement(a, a);
    CHECK(seq.initial.contains(comp, a, a));
    const ContainerTriple* prev = &seq.initial;
    for (const PipelineStep& st : seq.steps) {
        CHECK(st.triple.nested_in(*prev));
        CHECK(st.triple.contains(comp, a, a));
        prev = &st.triple;
    }
    CHECK((seq.final_sparse || seq.final_small));
    CHECK(seq.shrink_count <= 32 * 25); // 2^5 / delta with delta = 1/25
    CHECK(seq.s_first == 3);
    CHECK(seq.lambda_first == 4); // clamped to |B|
    CHECK(seq.first_stage_clamped);

    ContainerSequence again = build_container_sequence(gs, a, a, m, eps, false);
    CHECK(again.chain_key == seq.chain_key);
    CHECK(again.final_triple == seq.final_triple);
}

TEST_CASE("sequence final sparsity implies the supersaturation size bound") {
    GroundSet gs = interval_ground(1, 12);
    const std::int64_t m = 8;
    EpsilonSpec eps = EpsilonSpec::rational(1, 5);
    CensusOptions copts;
    copts.materialize = true;
    FamilyCensus census = census_symmetric(gs, m, 3, copts);
    for (const IndexSet& a : census.members) {
        ContainerSequence seq = build_container_sequence(gs, a, a, m, eps, false);
        if (!seq.final_sparse) continue;
        const ContainerTriple& t = seq.final_triple;
        IndexSet w = gs.full_set(Universe::Sum).and_not(t.c0);
        std::int64_t beta_w = beta(gs.spec(), std::max<std::int64_t>(
                                                  1, static_cast<std::int64_t>(std::floor(
                                                         (1.0 + 4.0 * eps.value()) * w.count()))));
        SupersatResult sup = supersaturation_check(gs, t.c1, t.c2, w, eps.value(), beta_w);
        CHECK(!(sup.hypothesis_holds && !sup.conclusion_holds));
        // sparse final triples stay below the (1+2eps)(m+beta) budget
        std::int64_t beta_m = beta(gs.spec(), static_cast<std::int64_t>(std::floor(
                                                  (1.0 + 4.0 * eps.value()) * m)));
        CHECK(eps.le_one_plus_two_eps(t.c1.count() + t.c2.count(), m + beta_m));
    }
}

TEST_CASE("classification thresholds") {
    GroundSet gs = interval_ground(1, 100);
    auto firstk = [&](int k) {
        IndexSet s = gs.empty_set(Universe::Ground);
        for (int i = 0; i < k; ++i) s.set(i);
        return s;
    };
    EpsilonSpec eps = EpsilonSpec::rational(1, 10);
    ContainerTriple t{gs.full_set(Universe::Sum), firstk(40), firstk(45)};
    CHECK(classify_container(gs, t, eps, 100).major == 'a');
    ContainerTriple big{gs.full_set(Universe::Sum), firstk(50), firstk(55)};
    CHECK(classify_container(gs, big, eps, 100).major == 'b');
    // boundary |C1|+|C2| = (1-eps)m exactly is inclusive
    ContainerTriple edge{gs.full_set(Universe::Sum), firstk(45), firstk(45)};
    CHECK(classify_container(gs, edge, eps, 100).major == 'a');

    Classification sub = classify_container(gs, big, eps, 100,
                                            std::pair<std::int64_t, std::int64_t>{1, 1}, true);
    REQUIRE(sub.b1.has_value());
    // cut = (1/2 + 2 sqrt(0.1)) * 100 = 113.2..., so neither side exceeds it
    CHECK(!*sub.b1);
}

TEST_CASE("collection build covers the census and dedups by chain") {
    GroundSet gs = interval_ground(1, 12);
    const std::int64_t m = 8;
    const int s = 3;
    CensusOptions copts;
    copts.materialize = true;
    FamilyCensus census = census_symmetric(gs, m, s, copts);
    REQUIRE(census.count > 0);
    auto family = census_pairs(census);
    CollectionResult col = build_collection(gs, family, m, EpsilonSpec::rational(1, 5),
                                            /*strict=*/false, /*threads=*/2);
    CHECK(col.family_size == static_cast<std::int64_t>(family.size()));
    CHECK(col.distinct_triples <= static_cast<std::int64_t>(col.entries.size()));

    std::vector<ContainerTriple> triples;
    for (const auto& e : col.entries) triples.push_back(e.triple);
    CoverageReport cover = verify_coverage(triples, census, gs);
    CHECK(cover.complete());
    CHECK(cover.total == static_cast<std::int64_t>(family.size()));

    CollectionResult serial = build_collection(gs, family, m, EpsilonSpec::rational(1, 5),
                                               false, 1);
    REQUIRE(serial.entries.size() == col.entries.size());
    for (std::size_t i = 0; i < serial.entries.size(); ++i) {
        CHECK(serial.entries[i].chain_key == col.entries[i].chain_key);
        CHECK(serial.entries[i].triple == col.entries[i].triple);
    }
}

TEST_SUITE_END();
