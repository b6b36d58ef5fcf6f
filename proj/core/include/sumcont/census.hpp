#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sumcont/combinatorics.hpp"
#include "sumcont/group.hpp"
#include "sumcont/pipeline.hpp"

namespace sumcont {

struct CensusOptions {
    std::uint64_t cost_cap = 100'000'000;  // refuse enumerations beyond this
    std::uint64_t member_cap = 10'000'000; // refuse materializing beyond this
    int threads = 1;                       // 0 = resolve from environment/hardware
    bool materialize = false;
};

/**
 * Exact enumeration result for one family. Counts are exact and
 * arbitrary-precision; members are kept only on request and below the
 * memory cap. Counts are identical for any thread count.
 */
struct FamilyCensus {
    std::string mode; // sym | unrefined | asym | asym-unrefined
    std::int64_t m = 0;
    int s = -1;
    int s2 = -1;
    int min_size = -1;
    BigInt count = 0;
    bool materialized = false;
    std::vector<IndexSet> members;                          // sym / unrefined
    std::vector<std::pair<IndexSet, IndexSet>> pair_members; // asym modes
};

/// Subsets A of Y with |A| = s and |A+A| <= m.
FamilyCensus census_symmetric(const GroundSet& gs, std::int64_t m, int s,
                              const CensusOptions& opts = {});

/// All subsets with |A+A| <= m (sizes above m cannot occur).
FamilyCensus census_unrefined(const GroundSet& gs, std::int64_t m,
                              const CensusOptions& opts = {});

/// Pairs (A, B) with |A| = s, |B| = s2 and |A+B| <= m.
FamilyCensus census_asymmetric(const GroundSet& gs, std::int64_t m, int s, int s2,
                               const CensusOptions& opts = {});

/// Pairs (A, B) of arbitrary subsets with |A+B| <= m and |A|, |B| >= min_size.
FamilyCensus census_asym_unrefined(const GroundSet& gs, std::int64_t m, int min_size,
                                   const CensusOptions& opts = {});

/**
 * Visits every pair (A, F) with |A| = s, |F| = lambda and |A+F| <= m, F
 * enumerated outer in colex order, A inner by pruned search (partial
 * sumsets only grow, so branches above the cap are cut). Deterministic.
 */
void for_each_bounded_pair(const GroundSet& gs, std::int64_t m, int s, int lambda,
                           const std::function<void(const IndexSet&, const IndexSet&)>& fn);

struct CoverageReport {
    std::int64_t total = 0;
    std::int64_t covered = 0;
    std::optional<std::int64_t> first_uncovered_index;
    std::optional<std::string> first_uncovered;

    bool complete() const { return covered == total; }
};

/// First-collection contract: each member (the A side for pair censuses)
/// must sit inside some container set.
CoverageReport verify_coverage(const std::vector<IndexSet>& containers,
                               const FamilyCensus& census, const GroundSet& gs);

/// Triple contract: the sumset complement inside C0 and the member set(s)
/// inside C1 and C2 (A in both for symmetric censuses).
CoverageReport verify_coverage(const std::vector<ContainerTriple>& triples,
                               const FamilyCensus& census, const GroundSet& gs);

/// Sum over triples of binomial(|C1 n C2|, s), or of
/// binomial(|C1|, s) * binomial(|C2|, s2) when s2 is given.
BigInt bound_from_collection(const std::vector<ContainerTriple>& triples, int s,
                             std::optional<int> s2 = std::nullopt);

/// Census members as (A, B) pairs for the refinement pipeline: (A, A) for
/// symmetric censuses, stored pairs otherwise. Requires materialization.
std::vector<std::pair<IndexSet, IndexSet>> census_pairs(const FamilyCensus& census);

} // namespace sumcont
