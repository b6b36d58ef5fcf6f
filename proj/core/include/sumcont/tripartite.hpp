#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sumcont/bipartite.hpp"
#include "sumcont/group.hpp"
#include "sumcont/threshold.hpp"
#include "sumcont/trace.hpp"

namespace sumcont {

/**
 * The tripartite 3-uniform hypergraph on U0 (a subset of Y+Y) and U1, U2
 * (subsets of Y): {a, b, c} is an edge exactly when a is in U1, b in U2,
 * c in U0 and c = a+b. The degree of b in U2 counts pairs (a, a+b) with
 * a in U1 and a+b in U0; it does not depend on the rest of U2, so the
 * degree table stays valid while U2 shrinks.
 */
class TripartiteView {
public:
    TripartiteView(const GroundSet& gs, const IndexSet& u0, const IndexSet& u1, IndexSet u2);

    const IndexSet& u2() const { return u2_; }
    int degree(int b) const { return degree_[static_cast<std::size_t>(b)]; }

    /// Max-degree vertex of the current U2, ties by smallest index.
    int sigma_select() const;
    void remove_vertex(int b) { u2_.reset(b); }

    /// Edge count of the hypergraph restricted to the current U2.
    std::int64_t edge_count() const;

private:
    IndexSet u2_;
    std::vector<int> degree_;
};

/// |{(a, b) in U1 x U2 : a+b in U0}|.
std::int64_t hyper_edge_count(const GroundSet& gs, const IndexSet& u0, const IndexSet& u1,
                              const IndexSet& u2);

struct SunsetOptions {
    bool checked = true;
    std::optional<std::int64_t> sumset_cap; // m of the input family, when known
    bool record_trace = true;
};

struct SunsetResult {
    IndexSet fingerprint_s; // S; empty on the else branch
    IndexSet fingerprint_f; // F
    IndexSet c0;
    IndexSet c1;
    IndexSet c2;
    bool ran_dense_branch = false; // true when the inner bipartite pass ran
    int f_loop_iterations = 0;     // trace records before the branch decision
    RunTrace trace;
};

/**
 * Two-phase container pass. Phase one walks U2 by descending degree,
 * querying membership in B, until lambda vertices are collected into F;
 * the survivors form C2. If the hypergraph restricted to C2, or the
 * bipartite graph induced by F, is dense relative to delta, phase two runs
 * the bipartite pass on (A, F) over (U0, U1); otherwise S is empty and
 * (C0, C1) = (U0, U1).
 *
 * Checked preconditions: A inside U1 with |A| >= s, B inside U2 with
 * |B| >= lambda, the complement of A+B inside U0, and |A+B| <= sumset_cap
 * when given.
 *
 * Always verified on every run (violations are build-stopping):
 *  - when the C2-side density test fired, the F-induced bipartite graph is
 *    itself dense (>= delta * |F| * |U1| edges);
 *  - edges split along C2 and F: e(H(C0,C1,C2 u F)) = e(H(C0,C1,C2)) +
 *    e(bipartite(F, C0, C1)).
 */
SunsetResult sunset(const GroundSet& gs, const Threshold& delta, int s, int lambda,
                    const IndexSet& a, const IndexSet& b, const IndexSet& u0,
                    const IndexSet& u1, const IndexSet& u2, const SunsetOptions& opts = {});

} // namespace sumcont
