#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sumcont/group.hpp"

namespace sumcont {

/// x(x-1)...(x-s+1)/s! when x >= s, else 0. gen_binom(x, 0) = 1 for x >= 0.
long double gen_binom(long double x, std::int64_t s);

/// log2 of gen_binom; -infinity when the value is 0.
long double log2_gen_binom(long double x, std::int64_t s);

/// Exact rational version for boundary-grade comparisons.
BigRational gen_binom_exact(const BigRational& x, std::int64_t s);

/// Identifiers of the evaluable closed-form bounds. The short ids are the
/// CLI vocabulary: "1.1", "1.3", "1.4", "1.7".
enum class BoundId {
    RefinedSymmetric,   // 1.1: |F_Y(m,s)|
    UnrefinedSymmetric, // 1.3: |F_Y(m)|
    RefinedAsymmetric,  // 1.4: |F_Y(m,s,s')|
    UnrefinedAsymmetric // 1.7: pair families
};
BoundId bound_id_from_string(const std::string& id);
const char* bound_id_to_string(BoundId id);

struct BoundParams {
    std::int64_t n = 0;
    std::int64_t m = 0;
    std::int64_t s = 0;      // refined bounds; also the size floor of 1.7
    std::int64_t s2 = 0;     // 1.4 only
    double epsilon = 0.0;    // 0 selects the default accuracy choice
    std::int64_t beta = 1;   // largest-subgroup size at the bound's argument
};

struct BoundResult {
    long double log2_value = 0.0L;
    bool in_regime = true;
    std::vector<std::string> warnings;
    std::string label; // which formula branch was used
    double epsilon_used = 0.0;
    double alpha = 0.0;
};

/// The subgroup-size argument the bound's beta refers to, so callers can
/// query beta(spec, beta_argument(...)) before evaluating.
std::int64_t beta_argument(BoundId id, const BoundParams& params);

/**
 * Value of the bound in log2. The refined bounds replace their vanishing
 * error terms with the explicit factors visible in their derivations
 * (container count times the binomial inflation factor); the result label
 * marks them "proof-explicit". In strict mode, parameters outside the
 * bound's validity regime raise PreconditionError; otherwise the value is
 * still computed and the failed regime clauses are returned as warnings.
 */
BoundResult eval_bound(BoundId id, const BoundParams& params, bool strict = false);

struct SupersatResult {
    bool hypothesis_holds = false;
    std::int64_t out_pairs = 0;
    bool conclusion_holds = false;
};

/**
 * Exact count of pairs (u, v) in D1 x D2 whose sum lands outside W,
 * together with the two sides of the supersaturation statement: the
 * hypothesis |D1|+|D2| >= (1+2e)(|W|+beta) and the conclusion
 * out_pairs >= e^2 |D1||D2|.
 */
SupersatResult supersaturation_check(const GroundSet& gs, const IndexSet& d1,
                                     const IndexSet& d2, const IndexSet& w, double epsilon,
                                     std::int64_t beta_value);

struct SplitMaxResult {
    BigInt max_value = 0;
    std::int64_t argmax = 0;
    bool inequality_holds = false;
    bool monotone_holds = false;
};

/// Split-product maximum: f(x) = binom(x,s1) binom(m-x,s2) over x in
/// {0..m} is unimodal with peak at floor((s1 m + s1)/(s1+s2)) and its
/// maximum is at most 4 m^2 times the balanced-split product. Fully exact.
/// Domain: 1 <= s1 <= s2 <= m and s1+s2 <= m.
SplitMaxResult lemma_b1_check(std::int64_t s1, std::int64_t s2, std::int64_t m);

struct PartCheck {
    bool applicable = false;
    bool holds = false;
    bool near_boundary = false; // decided by the high-precision recheck
};

struct BinomialApproxResult {
    PartCheck part1; // binom(b,s) <= (b/a)^s binom(a,s)         [s <= b <= a]
    PartCheck part2; // binom((1+e)d,s) <= exp(8 sqrt(e) s) binom(d,s)
                     //                                  [s <= d, 8/d < e < 1/2]
    PartCheck part3; // binom((1+e)d,s) <= (1+e+e/delta)^s binom(d,s)
                     //                                  [(1+delta)s <= d]
};

/// Binomial inflation inequalities; parts 1 and 3 are decided in exact
/// rational arithmetic, part 2 in log space with a 100-digit recheck near
/// the boundary. Inapplicable parts are reported, not asserted.
BinomialApproxResult lemma_b2_check(double a, double b, double d, double epsilon,
                                    double delta, std::int64_t s);

struct ShiftedSplitResult {
    bool holds = false;
    bool domain_empty = false;
    long double max_log2 = 0.0L;
    long double bound_log2 = 0.0L;
};

/// Shifted split-product bound: over pairs (t, x) with s1+s2 <= t <=
/// (1+2e)m and x >= s1 m/(s1+s2) + 2 sqrt(e) m, the product
/// binom(x,s1) binom(t-x,s2) stays below exp(-e(s1+s2)) times the
/// balanced-split product. Hypotheses (checked, violation raises
/// PreconditionError naming the clause): s1 <= s2 positive; delta, epsilon
/// in (0,1); (1+delta)(s1+s2) <= m; s1+s2 >= 2^5/delta;
/// 2 sqrt(e) s1 >= 1; 2^10 s1^2/(m^2 (s1+s2)^2) <= e <=
/// delta^2 s1^2 / (2^10 (s1+s2)^2).
ShiftedSplitResult lemma_b3_check(std::int64_t s1, std::int64_t s2, std::int64_t m,
                                  double delta, double epsilon);

struct TailSumResult {
    bool holds = false;
    bool empty_sum = false;
    long double sum_log2 = 0.0L;   // -inf when empty
    long double bound_log2 = 0.0L;
};

/// Tail-sum bound: sum over i >= ceil(Gamma delta s) of
/// binom(t, s-i) binom(delta t, i) <= 2^(-Gamma delta s) binom(t, s).
/// Hypotheses (checked): Gamma >= 2^5, s <= 3t/4, s <= 2^(Gamma delta s).
TailSumResult lemma_b4_check(double delta, double gamma, double t, std::int64_t s);

} // namespace sumcont
