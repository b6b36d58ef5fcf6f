#pragma once

#include <cstdint>
#include <vector>

#include "sumcont/group.hpp"

namespace sumcont {

/// Default ceiling on the order of groups whose subgroup lattice we list.
constexpr std::int64_t kDefaultSubgroupOrderCap = 4096;

/**
 * All distinct subgroups of a finite spec, each as a closed element set
 * containing the identity, sorted by (size, elements) for determinism.
 * The integers yield only the trivial subgroup {0}.
 * Throws CapExceeded when the group order exceeds order_cap.
 */
std::vector<std::vector<Element>> enumerate_subgroups(
    const GroupSpec& spec, std::int64_t order_cap = kDefaultSubgroupOrderCap);

/// max{ |H| : H <= G, |H| <= m }. Always at least 1. Requires m >= 1.
std::int64_t beta(const GroupSpec& spec, std::int64_t m,
                  std::int64_t order_cap = kDefaultSubgroupOrderCap);

} // namespace sumcont
