#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "sumcont/census.hpp"
#include "sumcont/common.hpp"

namespace sumcont {

/// The s-element integer sets with min 0, max a and gcd 1.
struct SeedFamily {
    std::int64_t a = 0;
    int s = 0;
    std::vector<std::vector<std::int64_t>> members;
};

SeedFamily build_seed_family(std::int64_t a, int s, std::uint64_t cost_cap = 100'000'000);

/// All affine images t + d*A inside [1..n] of the seed family, t, d >= 1.
struct DilateFamily {
    std::int64_t a = 0;
    std::int64_t n = 0;
    int s = 0;
    BigInt expected_count = 0; // |seeds| * sum_t floor((n-t)/a)
    bool distinct = false;     // images were pairwise distinct
    std::vector<std::vector<std::int64_t>> members;
};

DilateFamily build_dilate_family(std::int64_t a, std::int64_t n, int s,
                                 std::uint64_t cost_cap = 100'000'000);

struct DilateVerification {
    std::int64_t n = 0;
    std::int64_t m = 0;
    int s = 0;
    std::int64_t a_low = 0, a_high = 0;
    std::map<std::int64_t, BigInt> per_a_counts;
    BigInt total = 0;
    bool counts_match_formula = false;
    bool pairwise_disjoint = false;
    bool all_members_in_family = false; // every image has |A+A| <= min(2a-1, m)
    BigInt census_count = 0;
    bool sound = false; // total <= exact census
    bool strict_range = false;
};

/**
 * Builds the whole dilated construction for a between ceil(3s/2) and
 * floor((m+1)/2), verifies the per-a counting identity, exact pairwise
 * disjointness across different a, membership of every image in the
 * bounded-sumset family, and soundness against the exact census.
 * Outside relaxed mode, the parameter window 6s <= 0.99m and
 * (m+1)/2 <= 0.99n is enforced.
 */
DilateVerification verify_dilate_construction(std::int64_t n, std::int64_t m, int s,
                                              bool relaxed = false,
                                              const CensusOptions& census_opts = {},
                                              int threads = 1);

/// floor(s*m/(s+s2)) split product: binom(x, s) * binom(m-x, s2).
/// Requires s <= s2, x <= n and m-x <= n.
BigInt asym_lower_bound(std::int64_t n, std::int64_t m, std::int64_t s, std::int64_t s2);

} // namespace sumcont
