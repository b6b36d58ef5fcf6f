#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sumcont/group.hpp"
#include "sumcont/trace.hpp"

namespace sumcont {

/**
 * The auxiliary bipartite graph on parts U0 (a subset of Y+Y) and U1 (a
 * subset of Y) induced by a shift set F: a in U1 and b in U0 are adjacent
 * exactly when b - a lands in F, i.e. b is in a+F. Degrees of U1 vertices
 * are maintained incrementally as vertices and neighbourhoods are removed.
 */
class BipartiteView {
public:
    BipartiteView(const GroundSet& gs, const IndexSet& f, IndexSet u0, IndexSet u1);

    const IndexSet& u0() const { return u0_; }
    const IndexSet& u1() const { return u1_; }

    /// Neighbourhood a+F within the full sum universe.
    const IndexSet& row(int a) const { return rows_[static_cast<std::size_t>(a)]; }

    int degree(int a) const { return degree_[static_cast<std::size_t>(a)]; }
    /// Recount of a single degree from scratch; used to validate the
    /// incremental bookkeeping.
    int degree_recount(int a) const { return rows_[static_cast<std::size_t>(a)].intersection_count(u0_); }

    /// Number of edges between the current U0 and U1.
    std::int64_t edge_count() const;

    /// Max-degree vertex of U1, ties broken by smallest canonical index.
    /// Throws PreconditionError when U1 is empty.
    int sigma_select() const;

    /// Remove a U1 vertex, keeping U0 intact.
    void remove_vertex(int a);
    /// Remove a U1 vertex together with its neighbourhood in U0.
    void remove_vertex_and_neighbourhood(int a);

private:
    const GroundSet* gs_;
    IndexSet u0_;
    IndexSet u1_;
    std::vector<IndexSet> rows_;
    std::vector<int> degree_;
};

/// Edge count of the bipartite graph without building a mutable view.
std::int64_t bipartite_edge_count(const GroundSet& gs, const IndexSet& f,
                                  const IndexSet& u0, const IndexSet& u1);

struct SumriseOptions {
    bool checked = true;                   // enforce the input-family membership
    bool check_complement = true;          // include the (A+F)-complement clause
    std::optional<std::int64_t> sumset_cap; // when set, also require |A+F| <= cap
    bool record_trace = true;
};

struct SumriseResult {
    IndexSet fingerprint; // S
    IndexSet c0;
    IndexSet c1;
    RunTrace trace;
    bool exhausted = false; // unchecked runs only: U1 ran out before |S| = s
};

/**
 * Fingerprint-and-container pass over the bipartite view: repeatedly select
 * the max-degree U1 vertex, query membership in A, and either record it in
 * the fingerprint (removing its neighbourhood from U0) or discard it, until
 * the fingerprint has s vertices. Deterministic for fixed inputs.
 *
 * Checked preconditions: s >= 1, F nonempty, A a subset of U1 with at least
 * s elements, and the complement of A+F inside U0 (plus the optional sumset
 * cap). Violations raise PreconditionError naming the failed clause.
 */
SumriseResult sumrise(const GroundSet& gs, int s, const IndexSet& a, const IndexSet& f,
                      const IndexSet& u0, const IndexSet& u1,
                      const SumriseOptions& opts = {});

} // namespace sumcont
