#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "sumcont/census.hpp"
#include "sumcont/group.hpp"

namespace sumcont {

/**
 * An arithmetic progression {start, start+diff, ..., start+(length-1)diff}
 * proposed as a cover of an integer set, with the count of elements it
 * leaves uncovered. diff >= 1 always; singletons use length 1.
 */
struct APCover {
    std::int64_t start = 0;
    std::int64_t diff = 1;
    std::int64_t length = 1;
    std::int64_t uncovered = 0;
};

/**
 * Exact best AP cover: over all differences in [1, max(A)-min(A)] and all
 * placements of length at most max_len, minimizes |A \ P|. Ties prefer the
 * smaller difference, then the smaller start. The returned progression is
 * trimmed so that its endpoints are covered elements.
 */
APCover ap_cover_search(const std::vector<std::int64_t>& a, std::int64_t max_len);

/// Best cover with a fixed difference (same canonical trimming and ties).
APCover ap_cover_for_diff(const std::vector<std::int64_t>& a, std::int64_t diff,
                          std::int64_t max_len);

struct LevSmeResult {
    bool applicable = false;
    bool conclusion_holds = false;
    std::int64_t sumset_size = 0;
    std::optional<std::pair<APCover, APCover>> witnesses;
};

/**
 * Small-sumset structure check for integer pairs: when |A+B| is at most
 * |A|+|B|+min(|A|,|B|)-4, searches for same-difference progressions fully
 * containing A and B with lengths at most |A+B|-|B|+1 and |A+B|-|A|+1.
 */
LevSmeResult lev_smeliansky_check(const std::vector<std::int64_t>& a,
                                  const std::vector<std::int64_t>& b);

struct StabilityResult {
    bool applicable = false;
    bool alternative_a = false; // many pairs sum outside W
    bool alternative_b = false; // both sets near same-difference progressions
    bool b_search_ran = false;  // the progression search only runs when needed
    std::int64_t out_pairs = 0;
    std::optional<std::pair<APCover, APCover>> witnesses;
};

/**
 * Stability dichotomy for integer sets: under the size hypotheses
 * (s1 <= s2; epsilon <= 2^-8 (s1/(s1+s2))^2; (1-eps)|W| <= |D1|+|D2|;
 * |Di| <= (si/(s1+s2) + 2 sqrt(eps))|W|), either at least eps^2 |D1||D2|
 * pairs sum outside W, or same-difference progressions of length at most
 * (si/(s1+s2) + 4 sqrt(eps))|W| cover all but eps|Di| of each side.
 * The outside-pair count is always exact; the progression search is
 * skipped when the first alternative already holds, unless force_b_search
 * is set. When the hypotheses hold and neither alternative does, that
 * falsifies the statement or this implementation: InvariantViolation.
 */
StabilityResult stability_check(const std::vector<std::int64_t>& d1,
                                const std::vector<std::int64_t>& d2,
                                const std::vector<std::int64_t>& w, double epsilon,
                                std::int64_t s1, std::int64_t s2,
                                bool force_b_search = false);

struct StructureReport {
    std::int64_t requested = 0;
    std::int64_t drawn = 0;
    std::uint64_t seed = 0;
    double slack = 0.0;
    std::int64_t max_len_a = 0;
    std::int64_t max_len_b = 0; // asymmetric runs only
    BigInt family_size = 0;
    std::map<std::int64_t, std::int64_t> histogram; // uncovered count -> samples
};

/**
 * Samples members of the exact census uniformly (counter-based PRNG, so
 * reruns with the same seed are identical) and reports the distribution of
 * AP-cover defects at progression length proportion/2 + slack * m. Purely
 * descriptive; there is no pass/fail. Integer-ambient ground sets only.
 */
StructureReport sample_structure_experiment(const GroundSet& gs, std::int64_t m, int s,
                                            std::optional<int> s2, std::int64_t samples,
                                            std::uint64_t seed, double slack,
                                            const CensusOptions& census_opts = {});

} // namespace sumcont
