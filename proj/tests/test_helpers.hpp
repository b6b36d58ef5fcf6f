#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "sumcont/group.hpp"

namespace testutil {

inline sumcont::GroundSet interval_ground(int lo, int hi) {
    std::vector<std::int64_t> vals(static_cast<std::size_t>(hi - lo + 1));
    std::iota(vals.begin(), vals.end(), lo);
    return sumcont::GroundSet::build(sumcont::GroupSpec::integers(), vals);
}

/// Set of the given element values (not indices).
inline sumcont::IndexSet by_values(const sumcont::GroundSet& gs,
                                   const std::vector<std::int64_t>& values) {
    sumcont::IndexSet s = gs.empty_set(sumcont::Universe::Ground);
    for (std::int64_t v : values) s.set(*gs.index_of(sumcont::Element{v}));
    return s;
}

inline sumcont::IndexSet sum_by_values(const sumcont::GroundSet& gs,
                                       const std::vector<std::int64_t>& values) {
    sumcont::IndexSet s = gs.empty_set(sumcont::Universe::Sum);
    for (std::int64_t v : values) s.set(*gs.sum_index_of(sumcont::Element{v}));
    return s;
}

inline std::vector<std::int64_t> values_of(const sumcont::GroundSet& gs,
                                           const sumcont::IndexSet& set) {
    std::vector<std::int64_t> vals;
    set.for_each([&](int i) {
        vals.push_back(set.tag() == sumcont::Universe::Ground ? gs.element(i)[0]
                                                              : gs.sum_element(i)[0]);
    });
    return vals;
}

} // namespace testutil
