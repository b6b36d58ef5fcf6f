#include "sumcont/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "sumcont/combinatorics.hpp"

namespace sumcont {

namespace {

using BigFloat = boost::multiprecision::cpp_bin_float_100;

constexpr long double kNegInf = -std::numeric_limits<long double>::infinity();
constexpr long double kLog2E = 1.4426950408889634074L;
// Relative slack absorbed by floating comparisons; anything closer is
// re-decided at 100-digit precision.
constexpr long double kRelSlack = 1e-9L;

long double lgamma2(long double x) { return std::lgamma(x) * kLog2E; }

BigFloat gen_binom_bf(const BigFloat& x, std::int64_t s) {
    if (x < BigFloat(s)) return 0;
    BigFloat r = 1;
    for (std::int64_t i = 0; i < s; ++i) r *= (x - i) / (i + 1);
    return r;
}

BigFloat log2_bf(const BigFloat& v) { return boost::multiprecision::log2(v); }

// holds: lhs <= rhs in log2 space; near: the gap is within the slack.
struct LogDecision {
    bool holds;
    bool near;
};

LogDecision log_le(long double lhs, long double rhs) {
    if (lhs == kNegInf) return {true, false};
    long double scale = std::max<long double>(1.0L, std::fabs(rhs));
    bool near = std::fabs(lhs - rhs) <= kRelSlack * scale;
    return {lhs <= rhs, near};
}

} // namespace

long double gen_binom(long double x, std::int64_t s) {
    if (s < 0) throw PreconditionError("gen_binom: s must be nonnegative");
    if (x < static_cast<long double>(s)) return 0.0L;
    long double r = 1.0L;
    for (std::int64_t i = 0; i < s; ++i) r *= (x - static_cast<long double>(i)) / (i + 1);
    return r;
}

long double log2_gen_binom(long double x, std::int64_t s) {
    if (s < 0) throw PreconditionError("gen_binom: s must be nonnegative");
    if (x < static_cast<long double>(s)) return kNegInf;
    if (s == 0) return 0.0L;
    // Gamma form is valid here since x >= s >= 1 keeps all arguments positive.
    return lgamma2(x + 1.0L) - lgamma2(x - static_cast<long double>(s) + 1.0L) -
           lgamma2(static_cast<long double>(s) + 1.0L);
}

BigRational gen_binom_exact(const BigRational& x, std::int64_t s) {
    if (s < 0) throw PreconditionError("gen_binom: s must be nonnegative");
    if (x < BigRational(s)) return 0;
    BigRational r = 1;
    for (std::int64_t i = 0; i < s; ++i) r *= (x - i) / BigRational(i + 1);
    return r;
}

BoundId bound_id_from_string(const std::string& id) {
    if (id == "1.1") return BoundId::RefinedSymmetric;
    if (id == "1.3") return BoundId::UnrefinedSymmetric;
    if (id == "1.4") return BoundId::RefinedAsymmetric;
    if (id == "1.7") return BoundId::UnrefinedAsymmetric;
    throw PreconditionError("unknown bound id '" + id + "' (expected 1.1, 1.3, 1.4 or 1.7)");
}

const char* bound_id_to_string(BoundId id) {
    switch (id) {
        case BoundId::RefinedSymmetric: return "1.1";
        case BoundId::UnrefinedSymmetric: return "1.3";
        case BoundId::RefinedAsymmetric: return "1.4";
        case BoundId::UnrefinedAsymmetric: return "1.7";
    }
    return "?";
}

namespace {

double alpha_of(const BoundParams& p) {
    return std::sqrt(std::sqrt(static_cast<double>(p.m)) / std::log2(static_cast<double>(p.n)));
}

double epsilon_of(const BoundParams& p, std::int64_t s) {
    if (p.epsilon > 0) return p.epsilon;
    double num = std::sqrt(static_cast<double>(p.m)) * std::log2(static_cast<double>(p.n));
    return std::cbrt(num / static_cast<double>(s));
}

void require(BoundResult& r, bool strict, bool ok, const std::string& clause) {
    if (ok) return;
    if (strict) throw PreconditionError("bound regime: " + clause);
    r.in_regime = false;
    r.warnings.push_back(clause);
}

} // namespace

std::int64_t beta_argument(BoundId id, const BoundParams& p) {
    switch (id) {
        case BoundId::RefinedSymmetric:
        case BoundId::RefinedAsymmetric: {
            double eps = epsilon_of(p, id == BoundId::RefinedAsymmetric
                                           ? std::min(p.s, p.s2 > 0 ? p.s2 : p.s)
                                           : p.s);
            return static_cast<std::int64_t>(
                std::floor((1.0 + 4.0 * eps) * static_cast<double>(p.m)));
        }
        case BoundId::UnrefinedSymmetric:
        case BoundId::UnrefinedAsymmetric: {
            double a = alpha_of(p);
            return static_cast<std::int64_t>(std::floor(
                static_cast<double>(p.m) * (1.0 + std::pow(a, -2.0 / 3.0))));
        }
    }
    return p.m;
}

BoundResult eval_bound(BoundId id, const BoundParams& p, bool strict) {
    if (p.n < 2 || p.m < 1) throw PreconditionError("bound eval needs n >= 2 and m >= 1");
    BoundResult r;
    const long double log2n = std::log2(static_cast<long double>(p.n));
    const long double sqrtm = std::sqrt(static_cast<long double>(p.m));

    switch (id) {
        case BoundId::RefinedSymmetric: {
            if (p.s < 1) throw PreconditionError("bound 1.1 needs s >= 1");
            const double eps = epsilon_of(p, p.s);
            r.epsilon_used = eps;
            r.label = "proof-explicit";
            require(r, strict, 2 * p.s <= p.m, "2s <= m");
            require(r, strict, eps > 0 && eps < 0.25, "epsilon inside (0, 1/4)");
            require(r, strict, 8.0 / static_cast<double>(p.s) < 2.0 * eps && 2.0 * eps < 0.5,
                    "8/s < 2*epsilon < 1/2");
            require(r, strict,
                    static_cast<double>(p.s) >=
                        (1.0 + 1.0 / (eps * eps)) * std::sqrt(static_cast<double>(p.m)),
                    "s >= (1+epsilon^-2) sqrt(m)");
            require(r, strict, 2 * p.s <= p.m + p.beta, "s <= (m+beta)/2");
            // Container count, inflation factor, then the balanced binomial.
            r.log2_value = 128.0L / (eps * eps) * sqrtm * log2n +
                           8.0L * p.s * std::sqrt(2.0L * eps) * kLog2E +
                           log2_gen_binom(static_cast<long double>(p.m + p.beta) / 2.0L, p.s);
            break;
        }
        case BoundId::UnrefinedSymmetric: {
            const double a = alpha_of(p);
            r.alpha = a;
            const long double logn2 = log2n * log2n;
            if (static_cast<long double>(p.m) <= logn2) {
                r.label = "small-m branch";
                r.log2_value = (2.0L + 3.0L * a) * sqrtm * log2n + static_cast<long double>(p.m);
            } else {
                r.label = "large-m branch";
                r.log2_value = static_cast<long double>(p.m + p.beta) / 2.0L +
                               8192.0L * std::pow(a, -2.0L / 3.0L) * p.m;
            }
            break;
        }
        case BoundId::RefinedAsymmetric: {
            if (p.s < 1 || p.s2 < 1) throw PreconditionError("bound 1.4 needs s, s' >= 1");
            const std::int64_t smin = std::min(p.s, p.s2);
            const double eps = epsilon_of(p, smin);
            r.epsilon_used = eps;
            r.label = "proof-explicit";
            require(r, strict, p.s + p.s2 <= p.m, "s + s' <= m");
            require(r, strict, eps > 0 && eps < 0.25, "epsilon inside (0, 1/4)");
            require(r, strict, 8.0 / static_cast<double>(smin) < 2.0 * eps && 2.0 * eps < 0.5,
                    "8/min(s,s') < 2*epsilon < 1/2");
            require(r, strict, p.s + p.s2 <= p.m + p.beta, "s + s' <= m + beta");
            const long double total = p.s + p.s2;
            const long double mb = p.m + p.beta;
            r.log2_value = std::log2(4.0L * p.m * p.m) +
                           128.0L / (eps * eps) * sqrtm * log2n +
                           8.0L * std::sqrt(2.0L * eps) * total * kLog2E +
                           log2_gen_binom(mb * p.s / total, p.s) +
                           log2_gen_binom(mb * p.s2 / total, p.s2);
            break;
        }
        case BoundId::UnrefinedAsymmetric: {
            if (p.s == 0) {
                r.label = "all pairs";
                require(r, strict, p.m <= p.n / 16, "m <= n/16");
                r.log2_value = 6.0L * sqrtm * log2n + log2_bigint(binomial_sum(p.n, p.m));
            } else {
                const double a = alpha_of(p);
                r.alpha = a;
                require(r, strict,
                        static_cast<double>(p.s) >= std::sqrt(static_cast<double>(p.m)),
                        "s >= sqrt(m)");
                const long double logn2 = log2n * log2n;
                if (static_cast<long double>(p.m) <= logn2) {
                    r.label = "size-floor, small-m branch";
                    r.log2_value = (4.0L + 6.0L * a) * sqrtm * log2n;
                } else {
                    r.label = "size-floor, large-m branch";
                    r.log2_value = (1.0L + 8192.0L * std::pow(a, -2.0L / 3.0L)) *
                                   static_cast<long double>(p.m + p.beta);
                }
            }
            break;
        }
    }
    return r;
}

SupersatResult supersaturation_check(const GroundSet& gs, const IndexSet& d1,
                                     const IndexSet& d2, const IndexSet& w, double epsilon,
                                     std::int64_t beta_value) {
    if (!(epsilon > 0.0 && epsilon < 0.25))
        throw PreconditionError("supersaturation: epsilon outside (0, 1/4)");
    if (w.tag() != Universe::Sum)
        throw PreconditionError("supersaturation: W must live in the sum universe");

    SupersatResult res;
    d1.for_each([&](int u) {
        d2.for_each([&](int v) {
            if (!w.test(gs.sum_index(u, v))) ++res.out_pairs;
        });
    });
    const long double lhs = d1.count() + d2.count();
    const long double rhs =
        (1.0L + 2.0L * static_cast<long double>(epsilon)) * (w.count() + beta_value);
    res.hypothesis_holds = lhs >= rhs;
    const long double need = static_cast<long double>(epsilon) * epsilon *
                             static_cast<long double>(d1.count()) * d2.count();
    res.conclusion_holds = static_cast<long double>(res.out_pairs) >= need;
    return res;
}

SplitMaxResult lemma_b1_check(std::int64_t s1, std::int64_t s2, std::int64_t m) {
    if (!(1 <= s1 && s1 <= s2 && s2 <= m && s1 + s2 <= m))
        throw PreconditionError("split-max domain: need 1 <= s1 <= s2 <= m and s1+s2 <= m");

    SplitMaxResult res;
    std::vector<BigInt> f(static_cast<std::size_t>(m) + 1);
    for (std::int64_t x = 0; x <= m; ++x) {
        f[static_cast<std::size_t>(x)] = binomial(x, s1) * binomial(m - x, s2);
        if (f[static_cast<std::size_t>(x)] > res.max_value) {
            res.max_value = f[static_cast<std::size_t>(x)];
            res.argmax = x;
        }
    }

    const std::int64_t peak = (s1 * m + s1) / (s1 + s2);
    res.monotone_holds = true;
    for (std::int64_t x = 1; x <= m; ++x) {
        const BigInt& prev = f[static_cast<std::size_t>(x - 1)];
        const BigInt& cur = f[static_cast<std::size_t>(x)];
        if (x <= peak ? prev > cur : prev < cur) {
            res.monotone_holds = false;
            break;
        }
    }

    const BigRational balanced =
        gen_binom_exact(BigRational(s1 * m, s1 + s2), s1) *
        gen_binom_exact(BigRational(s2 * m, s1 + s2), s2);
    res.inequality_holds = BigRational(res.max_value) <= BigRational(4 * m * m) * balanced;
    return res;
}

namespace {

BigRational rat(double v) { return BigRational(v); } // doubles are exact rationals

} // namespace

BinomialApproxResult lemma_b2_check(double a, double b, double d, double epsilon,
                                    double delta, std::int64_t s) {
    if (s < 1) throw PreconditionError("binomial inflation: s must be >= 1");
    BinomialApproxResult res;

    // Part 1, exact: a^s binom(b,s) <= b^s binom(a,s).
    if (a > 0 && b > 0 && static_cast<double>(s) <= b && b <= a) {
        res.part1.applicable = true;
        BigRational ra = rat(a), rb = rat(b);
        BigRational lhs = gen_binom_exact(rb, s);
        BigRational rhs = gen_binom_exact(ra, s);
        BigRational pa = 1, pb = 1;
        for (std::int64_t i = 0; i < s; ++i) {
            pa *= ra;
            pb *= rb;
        }
        res.part1.holds = pa * lhs <= pb * rhs;
    }

    // Part 2, log space: binom((1+e)d, s) <= exp(8 sqrt(e) s) binom(d, s).
    if (d >= static_cast<double>(s) && epsilon > 8.0 / d && epsilon < 0.5) {
        res.part2.applicable = true;
        long double lhs = log2_gen_binom((1.0L + static_cast<long double>(epsilon)) * d, s);
        long double rhs = 8.0L * std::sqrt(static_cast<long double>(epsilon)) * s * kLog2E +
                          log2_gen_binom(static_cast<long double>(d), s);
        auto dec = log_le(lhs, rhs);
        if (dec.near) {
            res.part2.near_boundary = true;
            BigFloat bd(d), be(epsilon);
            BigFloat blhs = gen_binom_bf((1 + be) * bd, s);
            BigFloat brhs =
                boost::multiprecision::exp(8 * boost::multiprecision::sqrt(be) * s) *
                gen_binom_bf(bd, s);
            res.part2.holds = blhs <= brhs;
        } else {
            res.part2.holds = dec.holds;
        }
    }

    // Part 3, exact: binom((1+e)d, s) <= (1+e+e/delta)^s binom(d, s).
    if (delta > 0 && epsilon > 0 && (1.0 + delta) * static_cast<double>(s) <= d) {
        res.part3.applicable = true;
        BigRational rd = rat(d), re = rat(epsilon), rdel = rat(delta);
        BigRational lhs = gen_binom_exact((1 + re) * rd, s);
        BigRational factor = 1 + re + re / rdel;
        BigRational rhs = gen_binom_exact(rd, s);
        for (std::int64_t i = 0; i < s; ++i) rhs *= factor;
        res.part3.holds = lhs <= rhs;
    }
    return res;
}

ShiftedSplitResult lemma_b3_check(std::int64_t s1, std::int64_t s2, std::int64_t m,
                                  double delta, double epsilon) {
    if (!(s1 >= 1 && s2 >= s1))
        throw PreconditionError("shifted split domain: need 1 <= s1 <= s2");
    if (!(delta > 0 && delta < 1 && epsilon > 0 && epsilon < 1))
        throw PreconditionError("shifted split domain: delta, epsilon must lie in (0, 1)");
    const double sum = static_cast<double>(s1 + s2);
    if (!((1.0 + delta) * sum <= static_cast<double>(m)))
        throw PreconditionError("shifted split domain: (1+delta)(s1+s2) <= m fails");
    if (!(sum >= 32.0 / delta))
        throw PreconditionError("shifted split domain: s1+s2 >= 2^5/delta fails");
    if (!(2.0 * std::sqrt(epsilon) * static_cast<double>(s1) >= 1.0))
        throw PreconditionError("shifted split domain: 2 sqrt(epsilon) s1 >= 1 fails");
    const double md = static_cast<double>(m);
    const double lo = 1024.0 * s1 * s1 / (md * md * sum * sum);
    const double hi = delta * delta * s1 * s1 / (1024.0 * sum * sum);
    if (!(lo <= epsilon && epsilon <= hi))
        throw PreconditionError("shifted split domain: epsilon outside its two-sided window");

    ShiftedSplitResult res;
    const long double t_hi = (1.0L + 2.0L * static_cast<long double>(epsilon)) * m;
    const std::int64_t t_max = static_cast<std::int64_t>(std::floor(t_hi));
    const std::int64_t x_min = static_cast<std::int64_t>(
        std::ceil(static_cast<long double>(s1) * m / (s1 + s2) +
                   2.0L * std::sqrt(static_cast<long double>(epsilon)) * m));

    res.bound_log2 = -static_cast<long double>(epsilon) * (s1 + s2) * kLog2E +
                     log2_gen_binom(static_cast<long double>(s1) * m / (s1 + s2), s1) +
                     log2_gen_binom(static_cast<long double>(s2) * m / (s1 + s2), s2);

    // Row maxima sit at x = x_min: the domain starts right of the peak of
    // x -> binom(x,s1) binom(t-x,s2) (the two-sided epsilon window forces
    // that). A full row scan is used for small m, and as a fallback should
    // the edge value ever fail to dominate its right neighbour.
    res.max_log2 = kNegInf;
    std::int64_t best_t = -1;
    bool any = false;
    bool small_scan = m <= 512;
    auto row_value = [&](std::int64_t t, std::int64_t x) {
        return log2_gen_binom(static_cast<long double>(x), s1) +
               log2_gen_binom(static_cast<long double>(t - x), s2);
    };
    auto scan = [&] {
        res.max_log2 = kNegInf;
        best_t = -1;
        any = false;
        for (std::int64_t t = s1 + s2; t <= t_max; ++t) {
            const std::int64_t x_top = t - s2;
            if (x_min > x_top) continue;
            any = true;
            std::int64_t x_last = small_scan ? x_top : x_min;
            for (std::int64_t x = x_min; x <= x_last; ++x) {
                long double v = row_value(t, x);
                if (v > res.max_log2) {
                    res.max_log2 = v;
                    best_t = t;
                }
            }
        }
    };
    scan();
    if (any && !small_scan && x_min + 1 <= best_t - s2 &&
        row_value(best_t, x_min + 1) > row_value(best_t, x_min)) {
        small_scan = true;
        scan();
    }
    if (!any) {
        res.domain_empty = true;
        res.holds = true;
        return res;
    }

    auto dec = log_le(res.max_log2, res.bound_log2);
    res.holds = dec.holds;
    if (dec.near) {
        // Exact integer numerator against a 100-digit bound.
        BigInt exact = binomial(x_min, s1) * binomial(best_t - x_min, s2);
        if (small_scan) {
            for (std::int64_t t = s1 + s2; t <= t_max; ++t)
                for (std::int64_t x = x_min; x <= t - s2; ++x)
                    exact = std::max(exact, binomial(x, s1) * binomial(t - x, s2));
        }
        BigFloat be(epsilon);
        BigFloat bound = boost::multiprecision::exp(-be * (s1 + s2)) *
                         gen_binom_bf(BigFloat(s1) * m / (s1 + s2), s1) *
                         gen_binom_bf(BigFloat(s2) * m / (s1 + s2), s2);
        res.holds = BigFloat(exact.str()) <= bound;
    }
    return res;
}

TailSumResult lemma_b4_check(double delta, double gamma, double t, std::int64_t s) {
    if (!(gamma >= 32.0))
        throw PreconditionError("tail sum domain: Gamma >= 2^5 fails");
    if (!(delta > 0 && t > 0 && s >= 1))
        throw PreconditionError("tail sum domain: delta, t positive and s >= 1");
    if (!(static_cast<double>(s) <= 0.75 * t))
        throw PreconditionError("tail sum domain: s <= 3t/4 fails");
    const double gds = gamma * delta * static_cast<double>(s);
    if (!(std::log2(static_cast<double>(s)) <= gds))
        throw PreconditionError("tail sum domain: s <= 2^(Gamma delta s) fails");

    TailSumResult res;
    const auto i_lo = static_cast<std::int64_t>(std::ceil(gds));
    res.bound_log2 =
        -static_cast<long double>(gds) + log2_gen_binom(static_cast<long double>(t), s);
    if (i_lo > s) {
        res.empty_sum = true;
        res.sum_log2 = kNegInf;
        res.holds = true;
        return res;
    }

    // log-sum-exp over the tail terms.
    std::vector<long double> terms;
    for (std::int64_t i = i_lo; i <= s; ++i) {
        long double v = log2_gen_binom(static_cast<long double>(t), s - i) +
                        log2_gen_binom(static_cast<long double>(delta) * t, i);
        if (v != kNegInf) terms.push_back(v);
    }
    if (terms.empty()) {
        res.empty_sum = true;
        res.sum_log2 = kNegInf;
        res.holds = true;
        return res;
    }
    long double peak = *std::max_element(terms.begin(), terms.end());
    long double acc = 0.0L;
    for (long double v : terms) acc += std::exp2(v - peak);
    res.sum_log2 = peak + std::log2(acc);

    auto dec = log_le(res.sum_log2, res.bound_log2);
    res.holds = dec.holds;
    if (dec.near) {
        BigFloat bt(t), bd(delta);
        BigFloat sum = 0;
        for (std::int64_t i = i_lo; i <= s; ++i)
            sum += gen_binom_bf(bt, s - i) * gen_binom_bf(bd * bt, i);
        BigFloat bound = boost::multiprecision::pow(BigFloat(2), BigFloat(-gds)) *
                         gen_binom_bf(bt, s);
        res.holds = sum <= bound;
    }
    return res;
}

} // namespace sumcont
