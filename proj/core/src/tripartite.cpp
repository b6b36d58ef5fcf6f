#include "sumcont/tripartite.hpp"

namespace sumcont {

namespace {

int vertex_degree(const GroundSet& gs, const IndexSet& u0, const IndexSet& u1, int b) {
    // For fixed b the map a -> a+b is injective, so a popcount over the
    // shifted row counts pairs exactly.
    IndexSet row = gs.empty_set(Universe::Sum);
    u1.for_each([&](int a) { row.set(gs.sum_index(a, b)); });
    return row.intersection_count(u0);
}

} // namespace

TripartiteView::TripartiteView(const GroundSet& gs, const IndexSet& u0, const IndexSet& u1,
                               IndexSet u2)
    : u2_(std::move(u2)) {
    degree_.assign(static_cast<std::size_t>(gs.size()), 0);
    u2_.for_each([&](int b) { degree_[static_cast<std::size_t>(b)] = vertex_degree(gs, u0, u1, b); });
}

int TripartiteView::sigma_select() const {
    int best = -1, best_deg = -1;
    u2_.for_each([&](int b) {
        int d = degree_[static_cast<std::size_t>(b)];
        if (d > best_deg) {
            best_deg = d;
            best = b;
        }
    });
    if (best < 0) throw PreconditionError("sigma_select: U2 is empty");
    return best;
}

std::int64_t TripartiteView::edge_count() const {
    std::int64_t e = 0;
    u2_.for_each([&](int b) { e += degree_[static_cast<std::size_t>(b)]; });
    return e;
}

std::int64_t hyper_edge_count(const GroundSet& gs, const IndexSet& u0, const IndexSet& u1,
                              const IndexSet& u2) {
    std::int64_t e = 0;
    u2.for_each([&](int b) { e += vertex_degree(gs, u0, u1, b); });
    return e;
}

SunsetResult sunset(const GroundSet& gs, const Threshold& delta, int s, int lambda,
                    const IndexSet& a, const IndexSet& b, const IndexSet& u0,
                    const IndexSet& u1, const IndexSet& u2, const SunsetOptions& opts) {
    if (s < 1 || lambda < 1)
        throw PreconditionError("sunset: s and lambda must be >= 1");
    if (opts.checked) {
        if (!a.is_subset_of(u1)) throw PreconditionError("sunset: A is not a subset of U1");
        if (!b.is_subset_of(u2)) throw PreconditionError("sunset: B is not a subset of U2");
        if (a.count() < s)
            throw PreconditionError("sunset: |A| = " + std::to_string(a.count()) +
                                    " is below s = " + std::to_string(s));
        if (b.count() < lambda)
            throw PreconditionError("sunset: |B| = " + std::to_string(b.count()) +
                                    " is below lambda = " + std::to_string(lambda));
        IndexSet ab = gs.sumset(a, b);
        if (opts.sumset_cap && ab.count() > *opts.sumset_cap)
            throw PreconditionError("sunset: |A+B| = " + std::to_string(ab.count()) +
                                    " exceeds the cap m = " + std::to_string(*opts.sumset_cap));
        IndexSet comp = gs.full_set(Universe::Sum).and_not(ab);
        if (!comp.is_subset_of(u0))
            throw PreconditionError("sunset: complement of A+B is not inside U0");
    }

    SunsetResult out;
    out.fingerprint_f = gs.empty_set(Universe::Ground);

    TripartiteView view(gs, u0, u1, u2);
    int taken = 0;
    int iter = 0;
    while (taken < lambda) {
        if (view.u2().empty()) {
            if (opts.checked)
                throw InvariantViolation("sunset: U2 exhausted before F filled");
            break;
        }
        int u = view.sigma_select();
        bool member = b.test(u);
        if (member) {
            out.fingerprint_f.set(u);
            ++taken;
        }
        view.remove_vertex(u);
        if (opts.record_trace) out.trace.add(iter, u, member, u0.count(), view.u2().count());
        ++iter;
    }
    out.c2 = view.u2();
    out.f_loop_iterations = iter;

    const std::int64_t e_hyper = view.edge_count(); // e over (U0, U1, C2)
    const std::int64_t e_bip = bipartite_edge_count(gs, out.fingerprint_f, u0, u1);
    // An empty C2 never counts as dense: the zero threshold would fire
    // vacuously and the degree argument below needs a nonempty part.
    const bool hyper_dense =
        out.c2.count() >= 1 && delta.at_least(e_hyper, u1.count(), out.c2.count());
    const bool bip_dense = delta.at_least(e_bip, out.fingerprint_f.count(), u1.count());

    // Degrees never change while U2 shrinks and F collects the largest ones
    // first, so a dense C2 side forces the F-induced graph to be dense too.
    if (hyper_dense && !bip_dense)
        throw InvariantViolation("sunset: dense hypergraph did not force a dense F-graph");

    if (hyper_dense || bip_dense) {
        out.ran_dense_branch = true;
        SumriseOptions inner;
        inner.checked = opts.checked;
        // The complement clause is stated against A+B, not A+F; only the
        // membership and size clauses transfer to the inner pass.
        inner.check_complement = false;
        inner.record_trace = opts.record_trace;
        SumriseResult sr = sumrise(gs, s, a, out.fingerprint_f, u0, u1, inner);
        out.fingerprint_s = sr.fingerprint;
        out.c0 = sr.c0;
        out.c1 = sr.c1;
        out.trace.branch = "if";
        for (const TraceRecord& r : sr.trace.records)
            out.trace.add(iter + r.iteration, r.vertex, r.member, r.size0, r.size1);
    } else {
        out.fingerprint_s = gs.empty_set(Universe::Ground);
        out.c0 = u0;
        out.c1 = u1;
        out.trace.branch = "else";
    }

    // Edge decomposition across the disjoint parts C2 and F.
    const std::int64_t whole = hyper_edge_count(gs, out.c0, out.c1, out.c2 | out.fingerprint_f);
    const std::int64_t part = hyper_edge_count(gs, out.c0, out.c1, out.c2);
    const std::int64_t f_part = bipartite_edge_count(gs, out.fingerprint_f, out.c0, out.c1);
    if (whole != part + f_part)
        throw InvariantViolation("sunset: edge decomposition over C2 and F failed");

    return out;
}

} // namespace sumcont
