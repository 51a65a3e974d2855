#pragma once

#include <cstdint>

#include "hklab/bigint.hpp"

namespace hklab {

/// Exact binomial coefficient; 0 when k < 0 or k > n.
BigInt binomial(int64_t n, int64_t k);

BigInt factorial(uint32_t n);

/// Stirling numbers of the second kind S(n, k) by the two-term recurrence
/// S(n,k) = k*S(n-1,k) + S(n-1,k-1), S(0,0) = 1, memoized row table.
BigInt stirling2(uint32_t n, uint32_t k);

/// Same numbers by the alternating explicit sum
/// S(n,k) = (1/k!) * sum_{i=0..k} (-1)^{k-i} C(k,i) i^n.
/// The division by k! is asserted exact.
BigInt stirling2_explicit(uint32_t n, uint32_t k);

/// Checks x^n = sum_{k=0..n} S(n,k) * x(x-1)...(x-k+1) exactly.
bool falling_factorial_identity_check(uint32_t n, uint32_t x);

}  // namespace hklab
