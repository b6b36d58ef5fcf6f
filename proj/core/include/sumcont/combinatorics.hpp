#pragma once

#include <cstdint>
#include <vector>

#include "sumcont/common.hpp"

namespace sumcont {

/// Exact binomial coefficient. Zero when k < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

/// Binomial in uint64 for rank arithmetic; throws CapExceeded on overflow.
std::uint64_t binomial_u64(int n, int k);

/// Sum of binomial(n, k) for k = 0..cap.
BigInt binomial_sum(std::int64_t n, std::int64_t cap);

/// Floor of sqrt(x) for x >= 0.
std::int64_t isqrt64(std::int64_t x);

/// Smallest integer k with k >= sqrt(m). Exact integer arithmetic.
std::int64_t ceil_sqrt(std::int64_t m);

/// Smallest integer k with k >= (num/den) * sqrt(m), for num, den, m >= 1.
/// Exact: avoids floating point entirely.
std::int64_t ceil_mul_sqrt(const BigInt& num, const BigInt& den, std::int64_t m);

/**
 * Colexicographic enumeration of k-subsets of {0..n-1}. A combination is a
 * strictly increasing index vector; colex rank is sum of binomial(c[i], i+1).
 */
std::vector<int> colex_unrank(std::uint64_t rank, int n, int k);
/// Advance to the colex successor. Returns false past the last combination.
bool colex_next(std::vector<int>& comb, int n);

/// log2 of a positive BigInt, accurate to long double precision.
long double log2_bigint(const BigInt& v);

} // namespace sumcont
