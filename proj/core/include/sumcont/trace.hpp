#pragma once

#include <string>
#include <vector>

#include "sumcont/common.hpp"

namespace sumcont {

/**
 * One while-loop iteration of a container algorithm: which vertex was
 * queried, the membership answer, and the universe sizes after the update.
 */
struct TraceRecord {
    int iteration;
    int vertex;
    bool member;
    int size0; // |U0| after the step
    int size1; // |U1| (or |U2| for the fingerprint loop) after the step
};

/// Ordered per-run audit log. Serialized one record per line as
/// "iter vertex member size0 size1"; an optional branch marker line
/// "branch if|else" separates phases of a two-phase run.
struct RunTrace {
    std::vector<TraceRecord> records;
    std::string branch; // empty, "if" or "else"

    void add(int iteration, int vertex, bool member, int size0, int size1) {
        if (!records.empty() && records.back().iteration >= iteration)
            throw InvariantViolation("trace iterations must strictly increase");
        records.push_back(TraceRecord{iteration, vertex, member, size0, size1});
    }

    std::vector<std::string> lines() const {
        std::vector<std::string> out;
        out.reserve(records.size() + 1);
        for (const TraceRecord& r : records)
            out.push_back(std::to_string(r.iteration) + " " + std::to_string(r.vertex) + " " +
                          (r.member ? "1" : "0") + " " + std::to_string(r.size0) + " " +
                          std::to_string(r.size1));
        if (!branch.empty()) out.push_back("branch " + branch);
        return out;
    }
};

} // namespace sumcont
