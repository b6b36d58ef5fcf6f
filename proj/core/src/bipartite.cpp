#include "sumcont/bipartite.hpp"

namespace sumcont {

BipartiteView::BipartiteView(const GroundSet& gs, const IndexSet& f, IndexSet u0, IndexSet u1)
    : gs_(&gs), u0_(std::move(u0)), u1_(std::move(u1)) {
    const int n = gs.size();
    rows_.reserve(static_cast<std::size_t>(n));
    degree_.assign(static_cast<std::size_t>(n), 0);
    for (int a = 0; a < n; ++a) {
        IndexSet row = gs.empty_set(Universe::Sum);
        f.for_each([&](int fi) { row.set(gs.sum_index(a, fi)); });
        degree_[static_cast<std::size_t>(a)] = row.intersection_count(u0_);
        rows_.push_back(std::move(row));
    }
}

std::int64_t BipartiteView::edge_count() const {
    std::int64_t e = 0;
    u1_.for_each([&](int a) { e += degree_[static_cast<std::size_t>(a)]; });
    return e;
}

int BipartiteView::sigma_select() const {
    int best = -1, best_deg = -1;
    u1_.for_each([&](int a) {
        int d = degree_[static_cast<std::size_t>(a)];
        if (d > best_deg) { // strict: keeps the smallest index among ties
            best_deg = d;
            best = a;
        }
    });
    if (best < 0) throw PreconditionError("sigma_select: U1 is empty");
    return best;
}

void BipartiteView::remove_vertex(int a) {
    u1_.reset(a);
}

void BipartiteView::remove_vertex_and_neighbourhood(int a) {
    u1_.reset(a);
    IndexSet removed = rows_[static_cast<std::size_t>(a)] & u0_;
    if (removed.empty()) return;
    u0_.subtract(removed);
    u1_.for_each([&](int b) {
        degree_[static_cast<std::size_t>(b)] -=
            rows_[static_cast<std::size_t>(b)].intersection_count(removed);
    });
}

std::int64_t bipartite_edge_count(const GroundSet& gs, const IndexSet& f,
                                  const IndexSet& u0, const IndexSet& u1) {
    std::int64_t e = 0;
    u1.for_each([&](int a) {
        IndexSet row = gs.empty_set(Universe::Sum);
        f.for_each([&](int fi) { row.set(gs.sum_index(a, fi)); });
        e += row.intersection_count(u0);
    });
    return e;
}

SumriseResult sumrise(const GroundSet& gs, int s, const IndexSet& a, const IndexSet& f,
                      const IndexSet& u0, const IndexSet& u1, const SumriseOptions& opts) {
    if (s < 1) throw PreconditionError("sumrise: fingerprint size s must be >= 1");
    if (opts.checked) {
        if (f.empty()) throw PreconditionError("sumrise: F must be nonempty");
        if (!a.is_subset_of(u1)) throw PreconditionError("sumrise: A is not a subset of U1");
        if (a.count() < s)
            throw PreconditionError("sumrise: |A| = " + std::to_string(a.count()) +
                                    " is below the fingerprint size s = " + std::to_string(s));
        if (opts.check_complement || opts.sumset_cap) {
            IndexSet af = gs.sumset(a, f);
            if (opts.sumset_cap && af.count() > *opts.sumset_cap)
                throw PreconditionError("sumrise: |A+F| = " + std::to_string(af.count()) +
                                        " exceeds the cap m = " + std::to_string(*opts.sumset_cap));
            if (opts.check_complement) {
                IndexSet comp = gs.full_set(Universe::Sum).and_not(af);
                if (!comp.is_subset_of(u0))
                    throw PreconditionError("sumrise: complement of A+F is not inside U0");
            }
        }
    }

    BipartiteView view(gs, f, u0, u1);
    SumriseResult out;
    out.fingerprint = gs.empty_set(Universe::Ground);
    int taken = 0;
    int iter = 0;
    while (taken < s) {
        if (view.u1().empty()) {
            if (opts.checked)
                throw InvariantViolation("sumrise: U1 exhausted before the fingerprint filled");
            out.exhausted = true;
            break;
        }
        int u = view.sigma_select();
        bool member = a.test(u);
        if (member) {
            out.fingerprint.set(u);
            ++taken;
            view.remove_vertex_and_neighbourhood(u);
        } else {
            view.remove_vertex(u);
        }
        if (opts.record_trace)
            out.trace.add(iter, u, member, view.u0().count(), view.u1().count());
        ++iter;
    }
    out.c0 = view.u0();
    out.c1 = view.u1();
    return out;
}

} // namespace sumcont
