#include "sumcont/census.hpp"

#include <algorithm>

#include "sumcont/parallel.hpp"

namespace sumcont {

namespace {

struct Partial {
    BigInt count = 0;
    std::vector<IndexSet> members;
    std::vector<std::pair<IndexSet, IndexSet>> pairs;
};

void check_cost(const BigInt& cost, const CensusOptions& opts, const std::string& what) {
    if (cost > BigInt(opts.cost_cap))
        throw CapExceeded(what + ": estimated cost " + cost.str() + " exceeds cap " +
                          std::to_string(opts.cost_cap));
}

// |A+A| <= m test with the integer-ambient lower bound asserted on the way.
bool symmetric_sumset_ok(const GroundSet& gs, const std::vector<int>& comb, std::int64_t m) {
    IndexSet sum = gs.empty_set(Universe::Sum);
    int cnt = 0;
    const int k = static_cast<int>(comb.size());
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) {
            int idx = gs.sum_index(comb[static_cast<std::size_t>(i)],
                                   comb[static_cast<std::size_t>(j)]);
            if (!sum.test(idx)) {
                sum.set(idx);
                ++cnt;
            }
        }
    if (gs.spec().integer_ambient() && k > 0 && cnt < 2 * k - 1)
        throw InvariantViolation("integer sumset below the 2|A|-1 floor");
    return cnt <= m;
}

void merge(FamilyCensus& census, std::vector<Partial> partials, const CensusOptions& opts) {
    for (Partial& p : partials) {
        census.count += p.count;
        if (census.materialized) {
            if (census.members.size() + p.members.size() > opts.member_cap ||
                census.pair_members.size() + p.pairs.size() > opts.member_cap)
                throw CapExceeded("census: member list exceeds the memory cap");
            std::move(p.members.begin(), p.members.end(), std::back_inserter(census.members));
            std::move(p.pairs.begin(), p.pairs.end(), std::back_inserter(census.pair_members));
        }
    }
}

} // namespace

FamilyCensus census_symmetric(const GroundSet& gs, std::int64_t m, int s,
                              const CensusOptions& opts) {
    const int n = gs.size();
    if (s < 0 || s > n)
        throw PreconditionError("census: s must lie in [0, n]");
    if (m < 0) throw PreconditionError("census: m must be nonnegative");

    FamilyCensus census;
    census.mode = "sym";
    census.m = m;
    census.s = s;
    census.materialized = opts.materialize;

    check_cost(binomial(n, s), opts, "census sym");
    const std::uint64_t total = binomial_u64(n, s);

    auto partials = parallel_chunks<Partial>(total, opts.threads, [&](std::uint64_t lo,
                                                                      std::uint64_t hi) {
        Partial part;
        if (lo >= hi) return part;
        std::vector<int> comb = colex_unrank(lo, n, s);
        for (std::uint64_t r = lo; r < hi; ++r) {
            if (symmetric_sumset_ok(gs, comb, m)) {
                ++part.count;
                if (opts.materialize) part.members.push_back(gs.make_set(Universe::Ground, comb));
            }
            if (r + 1 < hi) colex_next(comb, n);
        }
        return part;
    });
    merge(census, std::move(partials), opts);
    return census;
}

FamilyCensus census_unrefined(const GroundSet& gs, std::int64_t m, const CensusOptions& opts) {
    FamilyCensus census;
    census.mode = "unrefined";
    census.m = m;
    census.materialized = opts.materialize;

    // Sets larger than m cannot satisfy |A+A| <= m.
    const std::int64_t top = std::min<std::int64_t>(gs.size(), m);
    check_cost(binomial_sum(gs.size(), top), opts, "census unrefined");

    for (std::int64_t s = 0; s <= top; ++s) {
        FamilyCensus part = census_symmetric(gs, m, static_cast<int>(s), opts);
        census.count += part.count;
        if (opts.materialize) {
            if (census.members.size() + part.members.size() > opts.member_cap)
                throw CapExceeded("census: member list exceeds the memory cap");
            std::move(part.members.begin(), part.members.end(),
                      std::back_inserter(census.members));
        }
    }
    return census;
}

namespace {

// Pruned inner enumeration: all s-subsets A with |A + fixed| <= m, where
// row(a) is the sum-universe footprint of a against the fixed side.
template <class Emit>
void bounded_subsets(const GroundSet& gs, const std::vector<IndexSet>& rows, std::int64_t m,
                     int s, Emit&& emit) {
    const int n = gs.size();
    std::vector<int> chosen;
    chosen.reserve(static_cast<std::size_t>(s));
    IndexSet sum = gs.empty_set(Universe::Sum);

    auto rec = [&](auto&& self, int pos, int cnt) -> void {
        if (static_cast<int>(chosen.size()) == s) {
            emit(chosen);
            return;
        }
        if (n - pos < s - static_cast<int>(chosen.size())) return;
        // include pos
        IndexSet added = rows[static_cast<std::size_t>(pos)].and_not(sum);
        int grown = cnt + added.count();
        if (grown <= m) {
            sum |= added;
            chosen.push_back(pos);
            self(self, pos + 1, grown);
            chosen.pop_back();
            sum.subtract(added);
        }
        // exclude pos
        self(self, pos + 1, cnt);
    };
    if (s == 0) {
        emit(chosen);
        return;
    }
    rec(rec, 0, 0);
}

} // namespace

void for_each_bounded_pair(const GroundSet& gs, std::int64_t m, int s, int lambda,
                           const std::function<void(const IndexSet&, const IndexSet&)>& fn) {
    const int n = gs.size();
    if (s < 0 || s > n || lambda < 0 || lambda > n)
        throw PreconditionError("bounded pair enumeration: sizes out of range");
    std::vector<int> fcomb(static_cast<std::size_t>(lambda));
    for (int i = 0; i < lambda; ++i) fcomb[static_cast<std::size_t>(i)] = i;
    const std::uint64_t f_total = binomial_u64(n, lambda);
    std::vector<IndexSet> rows(static_cast<std::size_t>(n), gs.empty_set(Universe::Sum));
    for (std::uint64_t fr = 0; fr < f_total; ++fr) {
        IndexSet f = gs.make_set(Universe::Ground, fcomb);
        for (int a = 0; a < n; ++a) {
            IndexSet row = gs.empty_set(Universe::Sum);
            for (int fi : fcomb) row.set(gs.sum_index(a, fi));
            rows[static_cast<std::size_t>(a)] = std::move(row);
        }
        bounded_subsets(gs, rows, m, s, [&](const std::vector<int>& chosen) {
            fn(gs.make_set(Universe::Ground, chosen), f);
        });
        if (fr + 1 < f_total) colex_next(fcomb, n);
    }
}

FamilyCensus census_asymmetric(const GroundSet& gs, std::int64_t m, int s, int s2,
                               const CensusOptions& opts) {
    const int n = gs.size();
    if (s < 0 || s > n || s2 < 0 || s2 > n)
        throw PreconditionError("census: sizes must lie in [0, n]");
    FamilyCensus census;
    census.mode = "asym";
    census.m = m;
    census.s = s;
    census.s2 = s2;
    census.materialized = opts.materialize;

    check_cost(binomial(n, s) * binomial(n, s2), opts, "census asym");
    const std::uint64_t b_total = binomial_u64(n, s2);

    auto partials = parallel_chunks<Partial>(b_total, opts.threads, [&](std::uint64_t lo,
                                                                        std::uint64_t hi) {
        Partial part;
        if (lo >= hi) return part;
        std::vector<int> bcomb = colex_unrank(lo, n, s2);
        std::vector<IndexSet> rows(static_cast<std::size_t>(n), gs.empty_set(Universe::Sum));
        for (std::uint64_t r = lo; r < hi; ++r) {
            IndexSet b = gs.make_set(Universe::Ground, bcomb);
            for (int a = 0; a < n; ++a) {
                IndexSet row = gs.empty_set(Universe::Sum);
                for (int bi : bcomb) row.set(gs.sum_index(a, bi));
                rows[static_cast<std::size_t>(a)] = std::move(row);
            }
            bounded_subsets(gs, rows, m, s, [&](const std::vector<int>& chosen) {
                ++part.count;
                if (opts.materialize)
                    part.pairs.emplace_back(gs.make_set(Universe::Ground, chosen), b);
            });
            if (r + 1 < hi) colex_next(bcomb, n);
        }
        return part;
    });
    merge(census, std::move(partials), opts);
    return census;
}

FamilyCensus census_asym_unrefined(const GroundSet& gs, std::int64_t m, int min_size,
                                   const CensusOptions& opts) {
    const int n = gs.size();
    if (n > 30) throw CapExceeded("census asym-unrefined: ground set too large");
    FamilyCensus census;
    census.mode = "asym-unrefined";
    census.m = m;
    census.min_size = std::max(0, min_size);
    census.materialized = opts.materialize;

    check_cost(BigInt(1) << (2 * n), opts, "census asym-unrefined");
    const std::uint64_t a_total = std::uint64_t{1} << n;

    auto partials = parallel_chunks<Partial>(a_total, opts.threads, [&](std::uint64_t lo,
                                                                        std::uint64_t hi) {
        Partial part;
        std::vector<IndexSet> rows(static_cast<std::size_t>(n), gs.empty_set(Universe::Sum));
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            std::vector<int> avec;
            for (int i = 0; i < n; ++i)
                if (mask >> i & 1) avec.push_back(i);
            if (static_cast<int>(avec.size()) < census.min_size) continue;
            IndexSet a = gs.make_set(Universe::Ground, avec);
            for (int b = 0; b < n; ++b) {
                IndexSet row = gs.empty_set(Universe::Sum);
                for (int ai : avec) row.set(gs.sum_index(ai, b));
                rows[static_cast<std::size_t>(b)] = std::move(row);
            }
            // Walk all B by include/exclude; the partial sumset only grows,
            // so branches over the cap are cut. Empty A gives empty sums.
            std::vector<int> chosen;
            IndexSet sum = gs.empty_set(Universe::Sum);
            auto rec = [&](auto&& self, int pos, int cnt) -> void {
                if (pos == n) {
                    if (static_cast<int>(chosen.size()) >= census.min_size) {
                        ++part.count;
                        if (opts.materialize)
                            part.pairs.emplace_back(a, gs.make_set(Universe::Ground, chosen));
                    }
                    return;
                }
                IndexSet added = rows[static_cast<std::size_t>(pos)].and_not(sum);
                int grown = cnt + added.count();
                if (grown <= m) {
                    sum |= added;
                    chosen.push_back(pos);
                    self(self, pos + 1, grown);
                    chosen.pop_back();
                    sum.subtract(added);
                }
                self(self, pos + 1, cnt);
            };
            rec(rec, 0, 0);
        }
        return part;
    });
    merge(census, std::move(partials), opts);
    return census;
}

CoverageReport verify_coverage(const std::vector<IndexSet>& containers,
                               const FamilyCensus& census, const GroundSet& gs) {
    if (!census.materialized)
        throw PreconditionError("verify_coverage needs a materialized census");
    CoverageReport report;
    auto note_miss = [&](std::int64_t idx, const IndexSet& a) {
        if (!report.first_uncovered_index) {
            report.first_uncovered_index = idx;
            std::string desc = "A={";
            bool first = true;
            a.for_each([&](int i) {
                if (!first) desc += ",";
                desc += element_to_string(gs.element(i));
                first = false;
            });
            report.first_uncovered = desc + "}";
        }
    };
    auto check_one = [&](std::int64_t idx, const IndexSet& a) {
        ++report.total;
        for (const IndexSet& c : containers)
            if (a.is_subset_of(c)) {
                ++report.covered;
                return;
            }
        note_miss(idx, a);
    };
    std::int64_t idx = 0;
    for (const IndexSet& a : census.members) check_one(idx++, a);
    for (const auto& [a, b] : census.pair_members) check_one(idx++, a);
    return report;
}

CoverageReport verify_coverage(const std::vector<ContainerTriple>& triples,
                               const FamilyCensus& census, const GroundSet& gs) {
    if (!census.materialized)
        throw PreconditionError("verify_coverage needs a materialized census");
    CoverageReport report;
    auto check_pair = [&](std::int64_t idx, const IndexSet& a, const IndexSet& b) {
        ++report.total;
        IndexSet comp = gs.sumset_complement(a, b);
        for (const ContainerTriple& t : triples)
            if (t.contains(comp, a, b)) {
                ++report.covered;
                return;
            }
        if (!report.first_uncovered_index) {
            report.first_uncovered_index = idx;
            report.first_uncovered = "member rank " + std::to_string(idx);
        }
    };
    std::int64_t idx = 0;
    for (const IndexSet& a : census.members) check_pair(idx++, a, a);
    for (const auto& [a, b] : census.pair_members) check_pair(idx++, a, b);
    return report;
}

BigInt bound_from_collection(const std::vector<ContainerTriple>& triples, int s,
                             std::optional<int> s2) {
    BigInt total = 0;
    for (const ContainerTriple& t : triples) {
        if (s2)
            total += binomial(t.c1.count(), s) * binomial(t.c2.count(), *s2);
        else
            total += binomial(t.c1.intersection_count(t.c2), s);
    }
    return total;
}

std::vector<std::pair<IndexSet, IndexSet>> census_pairs(const FamilyCensus& census) {
    if (!census.materialized)
        throw PreconditionError("census_pairs needs a materialized census");
    std::vector<std::pair<IndexSet, IndexSet>> out;
    out.reserve(census.members.size() + census.pair_members.size());
    for (const IndexSet& a : census.members) out.emplace_back(a, a);
    for (const auto& p : census.pair_members) out.push_back(p);
    return out;
}

} // namespace sumcont
