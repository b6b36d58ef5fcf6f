#include "sumcont/structure.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "sumcont/rng.hpp"

namespace sumcont {

namespace {

std::vector<std::int64_t> sorted_unique(std::vector<std::int64_t> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

struct Window {
    std::int64_t covered = 0;
    std::int64_t start = 0;
    std::int64_t span = 0;
};

// Best window for one difference: slides over each residue class of the
// sorted values. Returns the max covered count, smallest start on ties.
Window best_window(const std::vector<std::int64_t>& a, std::int64_t d, std::int64_t max_len) {
    Window best;
    std::map<std::int64_t, std::vector<std::int64_t>> classes;
    for (std::int64_t v : a) {
        std::int64_t r = ((v % d) + d) % d;
        classes[r].push_back(v);
    }
    const std::int64_t max_span = (max_len - 1) * d;
    for (auto& [r, vals] : classes) {
        std::size_t i = 0;
        for (std::size_t j = 0; j < vals.size(); ++j) {
            while (vals[j] - vals[i] > max_span) ++i;
            auto covered = static_cast<std::int64_t>(j - i + 1);
            if (covered > best.covered ||
                (covered == best.covered && covered > 0 && vals[i] < best.start)) {
                best.covered = covered;
                best.start = vals[i];
                best.span = vals[j] - vals[i];
            }
        }
    }
    return best;
}

APCover window_to_cover(const Window& w, std::int64_t d, std::int64_t total) {
    APCover c;
    c.start = w.start;
    c.diff = d;
    c.length = w.span / d + 1;
    c.uncovered = total - w.covered;
    return c;
}

std::int64_t int_sumset_size(const std::vector<std::int64_t>& a,
                             const std::vector<std::int64_t>& b) {
    std::set<std::int64_t> sums;
    for (std::int64_t x : a)
        for (std::int64_t y : b) sums.insert(x + y);
    return static_cast<std::int64_t>(sums.size());
}

} // namespace

APCover ap_cover_for_diff(const std::vector<std::int64_t>& a, std::int64_t diff,
                          std::int64_t max_len) {
    if (a.empty()) throw PreconditionError("ap cover: set must be nonempty");
    if (diff < 1 || max_len < 1)
        throw PreconditionError("ap cover: difference and length must be >= 1");
    std::vector<std::int64_t> vals = sorted_unique(a);
    Window w = best_window(vals, diff, max_len);
    return window_to_cover(w, diff, static_cast<std::int64_t>(vals.size()));
}

APCover ap_cover_search(const std::vector<std::int64_t>& a, std::int64_t max_len) {
    if (a.empty()) throw PreconditionError("ap cover: set must be nonempty");
    if (max_len < 1) throw PreconditionError("ap cover: max length must be >= 1");
    std::vector<std::int64_t> vals = sorted_unique(a);
    const auto total = static_cast<std::int64_t>(vals.size());
    const std::int64_t range = vals.back() - vals.front();

    Window best;
    std::int64_t best_d = 1;
    for (std::int64_t d = 1; d <= std::max<std::int64_t>(1, range); ++d) {
        Window w = best_window(vals, d, max_len);
        if (w.covered > best.covered) { // ties keep the smaller difference
            best = w;
            best_d = d;
            if (best.covered == total) break;
        }
    }
    return window_to_cover(best, best_d, total);
}

LevSmeResult lev_smeliansky_check(const std::vector<std::int64_t>& a,
                                  const std::vector<std::int64_t>& b) {
    if (a.empty() || b.empty())
        throw PreconditionError("lev_smeliansky_check: sets must be nonempty");
    std::vector<std::int64_t> av = sorted_unique(a);
    std::vector<std::int64_t> bv = sorted_unique(b);

    LevSmeResult res;
    res.sumset_size = int_sumset_size(av, bv);
    const auto na = static_cast<std::int64_t>(av.size());
    const auto nb = static_cast<std::int64_t>(bv.size());
    res.applicable = res.sumset_size <= na + nb + std::min(na, nb) - 4;
    if (!res.applicable) return res;

    const std::int64_t len_a = res.sumset_size - nb + 1;
    const std::int64_t len_b = res.sumset_size - na + 1;
    const std::int64_t span_a = av.back() - av.front();
    const std::int64_t span_b = bv.back() - bv.front();
    std::int64_t ga = 0, gb = 0;
    for (std::int64_t v : av) ga = std::gcd(ga, v - av.front());
    for (std::int64_t v : bv) gb = std::gcd(gb, v - bv.front());

    auto fits = [](std::int64_t span, std::int64_t g, std::int64_t d, std::int64_t cap) {
        if (g == 0) return std::int64_t{1} <= cap; // singleton: any difference
        return g % d == 0 && span / d + 1 <= cap;
    };

    const std::int64_t g = std::gcd(ga, gb);
    std::vector<std::int64_t> candidates;
    if (g == 0) {
        candidates.push_back(1);
    } else {
        for (std::int64_t d = 1; d * d <= g; ++d)
            if (g % d == 0) {
                candidates.push_back(d);
                if (d != g / d) candidates.push_back(g / d);
            }
        std::sort(candidates.begin(), candidates.end());
    }
    for (std::int64_t d : candidates) {
        if (fits(span_a, ga, d, len_a) && fits(span_b, gb, d, len_b)) {
            res.conclusion_holds = true;
            APCover pa{av.front(), d, ga == 0 ? 1 : span_a / d + 1, 0};
            APCover pb{bv.front(), d, gb == 0 ? 1 : span_b / d + 1, 0};
            res.witnesses = {pa, pb};
            break;
        }
    }
    return res;
}

StabilityResult stability_check(const std::vector<std::int64_t>& d1,
                                const std::vector<std::int64_t>& d2,
                                const std::vector<std::int64_t>& w, double epsilon,
                                std::int64_t s1, std::int64_t s2, bool force_b_search) {
    if (d1.empty() || d2.empty())
        throw PreconditionError("stability_check: D1 and D2 must be nonempty");
    if (!(s1 >= 1 && s1 <= s2))
        throw PreconditionError("stability_check: need 1 <= s1 <= s2");
    if (!(epsilon > 0))
        throw PreconditionError("stability_check: epsilon must be positive");

    std::vector<std::int64_t> v1 = sorted_unique(d1);
    std::vector<std::int64_t> v2 = sorted_unique(d2);
    std::vector<std::int64_t> wv = sorted_unique(w);
    const auto n1 = static_cast<std::int64_t>(v1.size());
    const auto n2 = static_cast<std::int64_t>(v2.size());
    const auto nw = static_cast<std::int64_t>(wv.size());

    StabilityResult res;

    // Hypotheses; the sqrt(eps) cuts are decided in extended precision,
    // everything rational exactly.
    const BigRational eps = BigRational(epsilon);
    const bool eps_small =
        eps * BigRational(256) * (s1 + s2) * (s1 + s2) <= BigRational(s1) * s1;
    const bool sum_large = (BigRational(1) - eps) * nw <= BigRational(n1 + n2);
    const long double root = std::sqrt(static_cast<long double>(epsilon));
    auto size_ok = [&](std::int64_t ni, std::int64_t si) {
        return static_cast<long double>(ni) <=
               (static_cast<long double>(si) / static_cast<long double>(s1 + s2) + 2.0L * root) *
                   static_cast<long double>(nw);
    };
    res.applicable = eps_small && sum_large && size_ok(n1, s1) && size_ok(n2, s2);

    std::set<std::int64_t> wset(wv.begin(), wv.end());
    for (std::int64_t x : v1)
        for (std::int64_t y : v2)
            if (!wset.count(x + y)) ++res.out_pairs;
    res.alternative_a = BigRational(res.out_pairs) >= eps * eps * n1 * n2;

    if (!res.alternative_a || force_b_search) {
        res.b_search_ran = true;
        auto len_cap = [&](std::int64_t si) {
            long double cap =
                (static_cast<long double>(si) / static_cast<long double>(s1 + s2) + 4.0L * root) *
                static_cast<long double>(nw);
            return static_cast<std::int64_t>(std::floor(cap));
        };
        const std::int64_t cap1 = std::max<std::int64_t>(1, len_cap(s1));
        const std::int64_t cap2 = std::max<std::int64_t>(1, len_cap(s2));
        const std::int64_t span = std::max({std::int64_t{1}, v1.back() - v1.front(),
                                            v2.back() - v2.front()});
        for (std::int64_t d = 1; d <= span && !res.alternative_b; ++d) {
            APCover p1 = ap_cover_for_diff(v1, d, cap1);
            if (BigRational(p1.uncovered) > eps * n1) continue;
            APCover p2 = ap_cover_for_diff(v2, d, cap2);
            if (BigRational(p2.uncovered) > eps * n2) continue;
            res.alternative_b = true;
            res.witnesses = {p1, p2};
        }
    }

    if (res.applicable && !res.alternative_a && !res.alternative_b)
        throw InvariantViolation("stability dichotomy failed on a hypothesis-satisfying instance");
    return res;
}

StructureReport sample_structure_experiment(const GroundSet& gs, std::int64_t m, int s,
                                            std::optional<int> s2, std::int64_t samples,
                                            std::uint64_t seed, double slack,
                                            const CensusOptions& census_opts) {
    if (!gs.spec().integer_ambient())
        throw PreconditionError("structure sampling is defined over the integers only");
    if (samples < 0) throw PreconditionError("sample count must be nonnegative");

    StructureReport report;
    report.requested = samples;
    report.seed = seed;
    report.slack = slack;

    CensusOptions opts = census_opts;
    opts.materialize = true;
    FamilyCensus census = s2 ? census_asymmetric(gs, m, s, *s2, opts)
                             : census_symmetric(gs, m, s, opts);
    report.family_size = census.count;

    const long double md = static_cast<long double>(m);
    if (s2) {
        const long double total = static_cast<long double>(s + *s2);
        report.max_len_a = static_cast<std::int64_t>(
            std::ceil(s * md / total + static_cast<long double>(slack) * md));
        report.max_len_b = static_cast<std::int64_t>(
            std::ceil(*s2 * md / total + static_cast<long double>(slack) * md));
    } else {
        report.max_len_a = static_cast<std::int64_t>(
            std::ceil(md / 2.0L + static_cast<long double>(slack) * md));
    }
    report.max_len_a = std::max<std::int64_t>(1, report.max_len_a);
    report.max_len_b = std::max<std::int64_t>(1, report.max_len_b);

    const std::uint64_t pool = s2 ? census.pair_members.size() : census.members.size();
    if (pool == 0 || samples == 0) return report;

    auto values_of = [&](const IndexSet& set) {
        std::vector<std::int64_t> vals;
        set.for_each([&](int i) { vals.push_back(gs.element(i)[0]); });
        return vals;
    };

    CounterRng rng(seed);
    for (std::int64_t i = 0; i < samples; ++i) {
        const auto pick = rng.below(pool, static_cast<std::uint64_t>(i));
        std::int64_t uncovered;
        if (s2) {
            const auto& [a, b] = census.pair_members[static_cast<std::size_t>(pick)];
            uncovered = ap_cover_search(values_of(a), report.max_len_a).uncovered +
                        ap_cover_search(values_of(b), report.max_len_b).uncovered;
        } else {
            const IndexSet& a = census.members[static_cast<std::size_t>(pick)];
            uncovered = ap_cover_search(values_of(a), report.max_len_a).uncovered;
        }
        ++report.histogram[uncovered];
        ++report.drawn;
    }
    return report;
}

} // namespace sumcont
