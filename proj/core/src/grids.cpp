#include "sumcont/grids.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "sumcont/bounds.hpp"
#include "sumcont/rng.hpp"
#include "sumcont/subgroups.hpp"

namespace sumcont {

namespace {

void note(GridOutcome& out, const std::string& what) {
    if (out.violations == 0) out.first_violation = what;
    ++out.violations;
}

} // namespace

GridOutcome lemma_grid_b1(std::int64_t points, std::uint64_t seed) {
    GridOutcome out;
    CounterRng rng(seed);
    for (std::int64_t i = 0; i < points; ++i) {
        const std::int64_t s1 = 1 + static_cast<std::int64_t>(rng.next_below(8));
        const std::int64_t s2 = s1 + static_cast<std::int64_t>(rng.next_below(9));
        const std::int64_t m = s1 + s2 + static_cast<std::int64_t>(rng.next_below(140));
        SplitMaxResult r = lemma_b1_check(s1, s2, m);
        ++out.points;
        if (!r.inequality_holds || !r.monotone_holds)
            note(out, "s1=" + std::to_string(s1) + " s2=" + std::to_string(s2) +
                          " m=" + std::to_string(m));
    }
    return out;
}

GridOutcome lemma_grid_b2(std::int64_t points, std::uint64_t seed) {
    GridOutcome out;
    CounterRng rng(seed);
    for (std::int64_t i = 0; i < points; ++i) {
        const std::int64_t s = 1 + static_cast<std::int64_t>(rng.next_below(60));
        const double d = std::max<double>(static_cast<double>(s), 17.0) +
                         rng.next_uniform01() * 400.0;
        const double lo = 8.0 / d;
        const double eps = lo + (0.5 - lo) * (0.02 + 0.96 * rng.next_uniform01());
        const double delta = 0.05 + rng.next_uniform01() * 2.0;
        const double b = static_cast<double>(s) + rng.next_uniform01() * 80.0;
        const double a = b + rng.next_uniform01() * 80.0;
        BinomialApproxResult r = lemma_b2_check(a, b, d, eps, delta, s);
        ++out.points;
        if ((r.part1.applicable && !r.part1.holds) || (r.part2.applicable && !r.part2.holds) ||
            (r.part3.applicable && !r.part3.holds))
            note(out, "a=" + std::to_string(a) + " b=" + std::to_string(b) +
                          " d=" + std::to_string(d) + " eps=" + std::to_string(eps) +
                          " delta=" + std::to_string(delta) + " s=" + std::to_string(s));
    }
    return out;
}

GridOutcome lemma_grid_b3(std::int64_t points, std::uint64_t seed) {
    GridOutcome out;
    CounterRng rng(seed);
    while (out.points < points) {
        const double delta = 0.5 + rng.next_uniform01() * 0.45;
        const std::int64_t base = static_cast<std::int64_t>(std::ceil(32.0 / delta));
        const std::int64_t s1 = base + 1 + static_cast<std::int64_t>(rng.next_below(60));
        const std::int64_t s2 = s1 + static_cast<std::int64_t>(rng.next_below(40));
        const double sum = static_cast<double>(s1 + s2);
        // epsilon window must clear the 2 sqrt(eps) s1 >= 1 floor
        if (delta * static_cast<double>(s1) * static_cast<double>(s1) < 16.0 * sum) continue;
        const std::int64_t m_floor = static_cast<std::int64_t>(
            std::ceil(std::max((1.0 + delta) * sum, 1024.0 / delta)));
        const std::int64_t m = m_floor + static_cast<std::int64_t>(rng.next_below(2000));
        const double md = static_cast<double>(m);
        const double lo = std::max(1024.0 * s1 * s1 / (md * md * sum * sum),
                                   1.0 / (4.0 * s1 * s1));
        const double hi = delta * delta * s1 * s1 / (1024.0 * sum * sum);
        if (!(lo < hi)) continue;
        const double eps = lo + (hi - lo) * (0.02 + 0.96 * rng.next_uniform01());
        ShiftedSplitResult r = lemma_b3_check(s1, s2, m, delta, eps);
        ++out.points;
        if (!r.holds)
            note(out, "s1=" + std::to_string(s1) + " s2=" + std::to_string(s2) +
                          " m=" + std::to_string(m) + " delta=" + std::to_string(delta) +
                          " eps=" + std::to_string(eps));
    }
    return out;
}

GridOutcome lemma_grid_b4(std::int64_t points, std::uint64_t seed) {
    GridOutcome out;
    CounterRng rng(seed);
    while (out.points < points) {
        const double gamma = 32.0 + rng.next_uniform01() * 128.0;
        const std::int64_t s = 1 + static_cast<std::int64_t>(rng.next_below(1500));
        const double t = std::ceil(4.0 * static_cast<double>(s) / 3.0) +
                         rng.next_uniform01() * 4000.0 + 1.0;
        const double floor_delta =
            std::log2(std::max<double>(2.0, static_cast<double>(s))) /
            (gamma * static_cast<double>(s));
        // Half the points take small delta so the tail is genuinely nonempty.
        const double delta = rng.next() & 1
                                 ? floor_delta + rng.next_uniform01() / gamma
                                 : floor_delta + rng.next_uniform01() * 0.3;
        if (!(static_cast<double>(s) <= 0.75 * t)) continue;
        if (std::log2(static_cast<double>(s)) > gamma * delta * static_cast<double>(s)) continue;
        TailSumResult r = lemma_b4_check(delta, gamma, t, s);
        ++out.points;
        if (!r.holds)
            note(out, "delta=" + std::to_string(delta) + " gamma=" + std::to_string(gamma) +
                          " t=" + std::to_string(t) + " s=" + std::to_string(s));
    }
    return out;
}

GridOutcome supersaturation_grid(std::int64_t points, std::uint64_t seed) {
    GridOutcome out;
    CounterRng rng(seed);

    std::map<std::int64_t, GroundSet> integer_grounds; // n -> [1..n]
    std::map<std::int64_t, GroundSet> cyclic_grounds;  // q -> all of Z_q
    std::map<std::int64_t, std::vector<std::int64_t>> cyclic_subgroup_sizes;
    auto integer_ground = [&](std::int64_t n) -> const GroundSet& {
        auto it = integer_grounds.find(n);
        if (it == integer_grounds.end()) {
            std::vector<std::int64_t> vals(static_cast<std::size_t>(n));
            std::iota(vals.begin(), vals.end(), 1);
            it = integer_grounds
                     .emplace(n, GroundSet::build(GroupSpec::integers(), vals))
                     .first;
        }
        return it->second;
    };
    auto cyclic_ground = [&](std::int64_t q) -> const GroundSet& {
        auto it = cyclic_grounds.find(q);
        if (it == cyclic_grounds.end()) {
            std::vector<std::int64_t> vals(static_cast<std::size_t>(q));
            std::iota(vals.begin(), vals.end(), 0);
            it = cyclic_grounds.emplace(q, GroundSet::build(GroupSpec::cyclic(q), vals)).first;
            std::vector<std::int64_t> sizes;
            for (const auto& h : enumerate_subgroups(GroupSpec::cyclic(q)))
                sizes.push_back(static_cast<std::int64_t>(h.size()));
            cyclic_subgroup_sizes.emplace(q, std::move(sizes));
        }
        return it->second;
    };
    auto beta_of = [&](const GroupSpec& spec, std::int64_t arg) -> std::int64_t {
        if (spec.integer_ambient()) return 1;
        std::int64_t best = 1;
        for (std::int64_t sz : cyclic_subgroup_sizes.at(spec.moduli[0]))
            if (sz <= arg) best = std::max(best, sz);
        return best;
    };

    while (out.points < points) {
        const bool over_integers = (rng.next() & 1) != 0;
        const GroundSet& gs = over_integers
                                  ? integer_ground(8 + static_cast<std::int64_t>(rng.next_below(41)))
                                  : cyclic_ground(2 + static_cast<std::int64_t>(rng.next_below(63)));
        const double eps = 0.01 + rng.next_uniform01() * 0.23;

        IndexSet d1 = gs.empty_set(Universe::Ground);
        IndexSet d2 = gs.empty_set(Universe::Ground);
        const double density = 0.4 + rng.next_uniform01() * 0.55;
        for (int i = 0; i < gs.size(); ++i) {
            if (rng.next_uniform01() < density) d1.set(i);
            if (rng.next_uniform01() < density) d2.set(i);
        }
        if (d1.empty() || d2.empty()) continue;

        // Largest |W| whose hypothesis budget fits under |D1|+|D2|.
        const std::int64_t total = d1.count() + d2.count();
        std::int64_t w_max = 0;
        for (std::int64_t w = 1; w <= gs.sum_size(); ++w) {
            std::int64_t beta_w = beta_of(gs.spec(), std::max<std::int64_t>(
                                                         1, static_cast<std::int64_t>(std::floor(
                                                                (1.0 + 4.0 * eps) * w))));
            if ((1.0L + 2.0L * static_cast<long double>(eps)) * (w + beta_w) <=
                static_cast<long double>(total))
                w_max = w;
            else
                break;
        }
        if (w_max < 1) continue;
        const auto w_size = 1 + static_cast<std::int64_t>(rng.next_below(
                                    static_cast<std::uint64_t>(w_max)));
        IndexSet w = gs.empty_set(Universe::Sum);
        {
            // floyd-style distinct sampling of w_size sum positions
            std::int64_t placed = 0;
            while (placed < w_size) {
                int pos = static_cast<int>(rng.next_below(
                    static_cast<std::uint64_t>(gs.sum_size())));
                if (!w.test(pos)) {
                    w.set(pos);
                    ++placed;
                }
            }
        }
        std::int64_t beta_w = beta_of(gs.spec(), std::max<std::int64_t>(
                                                     1, static_cast<std::int64_t>(std::floor(
                                                            (1.0 + 4.0 * eps) * w.count()))));
        SupersatResult r = supersaturation_check(gs, d1, d2, w, eps, beta_w);
        if (!r.hypothesis_holds) continue; // construction kept it, but stay exact
        ++out.points;
        if (!r.conclusion_holds)
            note(out, std::string(over_integers ? "Z" : gs.spec().to_string().c_str()) +
                          " |D1|=" + std::to_string(d1.count()) +
                          " |D2|=" + std::to_string(d2.count()) +
                          " |W|=" + std::to_string(w.count()) + " eps=" + std::to_string(eps) +
                          " out_pairs=" + std::to_string(r.out_pairs));
    }
    return out;
}

GridOutcome lemma_grid(const std::string& id, std::int64_t points, std::uint64_t seed) {
    if (id == "B1") return lemma_grid_b1(points, seed);
    if (id == "B2") return lemma_grid_b2(points, seed);
    if (id == "B3") return lemma_grid_b3(points, seed);
    if (id == "B4") return lemma_grid_b4(points, seed);
    if (id == "supersaturation") return supersaturation_grid(points, seed);
    throw PreconditionError("unknown grid id '" + id + "'");
}

} // namespace sumcont
