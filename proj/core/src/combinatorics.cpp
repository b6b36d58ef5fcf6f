#include "sumcont/combinatorics.hpp"

#include <cmath>

namespace sumcont {

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

std::uint64_t binomial_u64(int n, int k) {
    BigInt b = binomial(n, k);
    if (b > BigInt(UINT64_MAX))
        throw CapExceeded("binomial(" + std::to_string(n) + "," + std::to_string(k) +
                          ") exceeds 64 bits");
    return static_cast<std::uint64_t>(b);
}

BigInt binomial_sum(std::int64_t n, std::int64_t cap) {
    BigInt total = 0;
    for (std::int64_t k = 0; k <= cap && k <= n; ++k) total += binomial(n, k);
    return total;
}

std::int64_t isqrt64(std::int64_t x) {
    if (x < 0) throw PreconditionError("isqrt of negative value");
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

std::int64_t ceil_sqrt(std::int64_t m) {
    std::int64_t r = isqrt64(m);
    return r * r == m ? r : r + 1;
}

std::int64_t ceil_mul_sqrt(const BigInt& num, const BigInt& den, std::int64_t m) {
    if (num < 1 || den < 1 || m < 1)
        throw PreconditionError("ceil_mul_sqrt requires positive arguments");
    // k >= (num/den)*sqrt(m)  <=>  (k*den)^2 >= num^2 * m, for k >= 0.
    const BigInt target = num * num * m;
    std::int64_t lo = 0, hi = 1;
    auto ok = [&](std::int64_t k) { return BigInt(k) * k * den * den >= target; };
    while (!ok(hi)) hi *= 2;
    while (lo + 1 < hi) {
        std::int64_t mid = lo + (hi - lo) / 2;
        if (ok(mid)) hi = mid;
        else lo = mid;
    }
    return hi;
}

std::vector<int> colex_unrank(std::uint64_t rank, int n, int k) {
    std::vector<int> comb(static_cast<std::size_t>(k));
    std::uint64_t r = rank;
    for (int i = k; i >= 1; --i) {
        // Largest c with binomial(c, i) <= r.
        int c = i - 1;
        std::uint64_t last = 0;
        for (int cand = i - 1; cand < n; ++cand) {
            std::uint64_t b = binomial_u64(cand, i);
            if (b <= r) {
                c = cand;
                last = b;
            } else {
                break;
            }
        }
        comb[static_cast<std::size_t>(i - 1)] = c;
        r -= last;
    }
    return comb;
}

bool colex_next(std::vector<int>& comb, int n) {
    const int k = static_cast<int>(comb.size());
    if (k == 0) return false;
    for (int i = 0; i < k; ++i) {
        int limit = (i + 1 < k) ? comb[static_cast<std::size_t>(i + 1)] - 1 : n - 1;
        if (comb[static_cast<std::size_t>(i)] < limit) {
            ++comb[static_cast<std::size_t>(i)];
            for (int j = 0; j < i; ++j) comb[static_cast<std::size_t>(j)] = j;
            return true;
        }
    }
    return false;
}

long double log2_bigint(const BigInt& v) {
    if (v <= 0) throw PreconditionError("log2 of non-positive value");
    const std::size_t bits = boost::multiprecision::msb(v); // index of highest set bit
    if (bits <= 62) return std::log2(static_cast<long double>(static_cast<std::int64_t>(v)));
    // Take the top 63 bits as mantissa: v = mant * 2^shift * (1 + err).
    const auto shift = static_cast<unsigned>(bits - 62);
    BigInt mant = v >> shift;
    return std::log2(static_cast<long double>(static_cast<std::int64_t>(mant))) +
           static_cast<long double>(shift);
}

} // namespace sumcont
