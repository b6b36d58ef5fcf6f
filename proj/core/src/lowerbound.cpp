#include "sumcont/lowerbound.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "sumcont/parallel.hpp"

namespace sumcont {

namespace {

std::int64_t int_sumset_size(const std::vector<std::int64_t>& a) {
    std::set<std::int64_t> sums;
    for (std::int64_t x : a)
        for (std::int64_t y : a) sums.insert(x + y);
    return static_cast<std::int64_t>(sums.size());
}

} // namespace

SeedFamily build_seed_family(std::int64_t a, int s, std::uint64_t cost_cap) {
    if (a < 1 || s < 2) throw PreconditionError("seed family needs a >= 1 and s >= 2");
    SeedFamily fam;
    fam.a = a;
    fam.s = s;
    if (s > a + 1) return fam; // not enough room between 0 and a

    if (binomial(a - 1, s - 2) > BigInt(cost_cap))
        throw CapExceeded("seed family: enumeration cost exceeds cap");

    // Choose the s-2 interior elements; 0 and a are fixed.
    std::vector<int> comb(static_cast<std::size_t>(s - 2));
    for (int i = 0; i < s - 2; ++i) comb[static_cast<std::size_t>(i)] = i;
    const std::uint64_t total = binomial_u64(static_cast<int>(a - 1), s - 2);
    for (std::uint64_t r = 0; r < total; ++r) {
        std::vector<std::int64_t> member;
        member.reserve(static_cast<std::size_t>(s));
        member.push_back(0);
        for (int c : comb) member.push_back(c + 1); // interior values 1..a-1
        member.push_back(a);
        std::int64_t g = 0;
        for (std::int64_t v : member) g = std::gcd(g, v);
        if (g == 1) fam.members.push_back(std::move(member));
        if (r + 1 < total) colex_next(comb, static_cast<int>(a - 1));
    }
    return fam;
}

DilateFamily build_dilate_family(std::int64_t a, std::int64_t n, int s,
                                 std::uint64_t cost_cap) {
    SeedFamily seeds = build_seed_family(a, s, cost_cap);
    DilateFamily fam;
    fam.a = a;
    fam.n = n;
    fam.s = s;

    BigInt placements = 0;
    for (std::int64_t t = 1; t <= n; ++t) placements += (n - t) / a;
    fam.expected_count = BigInt(seeds.members.size()) * placements;
    if (fam.expected_count > BigInt(cost_cap))
        throw CapExceeded("dilate family: size exceeds cap");

    std::set<std::vector<std::int64_t>> distinct;
    for (const auto& seed : seeds.members) {
        for (std::int64_t d = 1; d * a <= n - 1; ++d) {
            for (std::int64_t t = 1; t + d * a <= n; ++t) {
                std::vector<std::int64_t> image;
                image.reserve(seed.size());
                for (std::int64_t v : seed) image.push_back(t + d * v);
                distinct.insert(image);
                fam.members.push_back(std::move(image));
            }
        }
    }
    fam.distinct = distinct.size() == fam.members.size();
    return fam;
}

DilateVerification verify_dilate_construction(std::int64_t n, std::int64_t m, int s,
                                              bool relaxed, const CensusOptions& census_opts,
                                              int threads) {
    if (n < 1 || m < 1 || s < 2)
        throw PreconditionError("dilate verification needs n, m >= 1 and s >= 2");
    DilateVerification rep;
    rep.n = n;
    rep.m = m;
    rep.s = s;
    rep.strict_range = 600 * static_cast<std::int64_t>(s) <= 99 * m && 50 * (m + 1) <= 99 * n;
    if (!relaxed && !rep.strict_range)
        throw PreconditionError(
            "dilate verification outside the parameter window (6s <= 0.99m and "
            "(m+1)/2 <= 0.99n); pass relaxed mode to proceed");

    rep.a_low = (3 * static_cast<std::int64_t>(s) + 1) / 2;
    rep.a_high = (m + 1) / 2;

    struct Part {
        std::vector<std::pair<std::int64_t, DilateFamily>> families;
        bool members_ok = true;
        bool counts_ok = true;
    };
    const std::uint64_t span =
        rep.a_high >= rep.a_low ? static_cast<std::uint64_t>(rep.a_high - rep.a_low + 1) : 0;
    auto parts = parallel_chunks<Part>(span, threads, [&](std::uint64_t lo, std::uint64_t hi) {
        Part part;
        for (std::uint64_t off = lo; off < hi; ++off) {
            const std::int64_t a = rep.a_low + static_cast<std::int64_t>(off);
            DilateFamily fam = build_dilate_family(a, n, s, census_opts.cost_cap);
            if (BigInt(fam.members.size()) != fam.expected_count || !fam.distinct)
                part.counts_ok = false;
            for (const auto& member : fam.members) {
                std::int64_t sz = int_sumset_size(member);
                if (sz > 2 * a - 1 || sz > m) part.members_ok = false;
            }
            part.families.emplace_back(a, std::move(fam));
        }
        return part;
    });

    rep.counts_match_formula = true;
    rep.all_members_in_family = true;
    std::set<std::vector<std::int64_t>> global;
    std::size_t raw = 0;
    for (Part& part : parts) {
        rep.counts_match_formula = rep.counts_match_formula && part.counts_ok;
        rep.all_members_in_family = rep.all_members_in_family && part.members_ok;
        for (auto& [a, fam] : part.families) {
            rep.per_a_counts[a] = BigInt(fam.members.size());
            rep.total += BigInt(fam.members.size());
            raw += fam.members.size();
            for (auto& member : fam.members) global.insert(std::move(member));
        }
    }
    rep.pairwise_disjoint = global.size() == raw;

    std::vector<std::int64_t> ground(static_cast<std::size_t>(n));
    std::iota(ground.begin(), ground.end(), 1);
    GroundSet gs = GroundSet::build(GroupSpec::integers(), ground);
    CensusOptions opts = census_opts;
    opts.threads = threads;
    rep.census_count = census_symmetric(gs, m, s, opts).count;
    rep.sound = rep.total <= rep.census_count;
    return rep;
}

BigInt asym_lower_bound(std::int64_t n, std::int64_t m, std::int64_t s, std::int64_t s2) {
    if (s < 1 || s2 < s) throw PreconditionError("asym lower bound needs 1 <= s <= s'");
    const std::int64_t x = s * m / (s + s2);
    if (x > n || m - x > n)
        throw PreconditionError("asym lower bound: split exceeds the ground interval");
    return binomial(x, s) * binomial(m - x, s2);
}

} // namespace sumcont
