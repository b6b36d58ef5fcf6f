#pragma once

#include <cstdint>
#include <string>

#include "sumcont/common.hpp"

namespace sumcont {

/**
 * Outcome of a pseudo-random hypothesis-region sweep of one inequality
 * checker. Points are generated from (seed, counter) alone, so sweeps
 * reproduce exactly. A nonzero violation count falsifies the inequality
 * or the implementation and is treated as build-stopping by callers.
 */
struct GridOutcome {
    std::int64_t points = 0;
    std::int64_t violations = 0;
    std::string first_violation;
};

GridOutcome lemma_grid_b1(std::int64_t points, std::uint64_t seed);
GridOutcome lemma_grid_b2(std::int64_t points, std::uint64_t seed);
GridOutcome lemma_grid_b3(std::int64_t points, std::uint64_t seed);
GridOutcome lemma_grid_b4(std::int64_t points, std::uint64_t seed);

/// Supersaturation sweep over integer intervals and cyclic groups of order
/// at most 64, with the size hypothesis enforced by construction.
GridOutcome supersaturation_grid(std::int64_t points, std::uint64_t seed);

/// Dispatch by id: B1 | B2 | B3 | B4 | supersaturation.
GridOutcome lemma_grid(const std::string& id, std::int64_t points, std::uint64_t seed);

} // namespace sumcont
