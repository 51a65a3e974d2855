#pragma once

#include <cstdint>
#include <vector>

#include "hklab/bigint.hpp"
#include "hklab/rational.hpp"

namespace hklab {

/// Segre product of polynomial rings in r and s variables, 2 <= r <= s;
/// the ring has dimension d = r + s - 1.
struct SegreParams {
    int r;
    int s;

    SegreParams(int r_, int s_);
    int d() const { return r + s - 1; }
};

/// Number of degree-n monomials in r variables: C(n+r-1, r-1).
BigInt alpha(int r, int64_t n);

/// Number of degree-n monomials in r variables with every exponent <= q-1,
/// by inclusion-exclusion over the violated bounds. Zero outside
/// 0 <= n <= r(q-1).
BigInt alpha_q(int r, int64_t n, int64_t q);

/// All alpha_q(r, n, q) for n = 0 .. r(q-1).
struct AlphaTable {
    int r;
    int64_t q;
    std::vector<BigInt> values;  // index n
};
AlphaTable build_alpha_table(int r, int64_t q);

BigRational segre_ehk_closed(const SegreParams& params);
BigRational segre_mhk_closed(const SegreParams& params);

/// Finite-q numerators of the limit expressions; dividing by q^d gives the
/// finite-q estimates. q is any positive integer (the counts are
/// characteristic-free).
struct SegreFiniteQ {
    int64_t q;
    BigInt ehk_numerator;
    BigInt mhk_numerator;
    BigRational ehk_ratio(const SegreParams& params) const;
    BigRational mhk_ratio(const SegreParams& params) const;
};
SegreFiniteQ segre_finite_q(const SegreParams& params, int64_t q);

/// Finite-q numerator of the mixed cross sum
/// sum_n alpha_q(r,n,q) * alpha(s,n), whose q-limit is r! S(d,r) / d!.
BigInt segre_cross_numerator(int r, int s, int64_t q);

struct SocleCountOptions {
    uint64_t raw_limit = 2'000'000;  // full tuple walk while q^{r+s} stays below
    uint64_t budget = 200'000'000;   // hard cap on enumeration work
};

/// Direct enumeration of tuples (a_1..a_r, b_1..b_s) in [0,q-1]^{r+s} with
/// equal coordinate sums. Small instances walk the full tuple space; larger
/// ones enumerate the two sides separately and convolve the per-sum tallies.
/// Degenerate r = s = 1 is allowed here (the count is q).
BigInt socle_annihilator_count(int r, int s, int64_t q, const SocleCountOptions& opts = {});

/// e_HK and m_HK closed forms at r = 2 (Rees-algebra case), s >= 2.
struct ReesValues {
    BigRational ehk;
    BigRational mhk;
};
ReesValues rees_formulas(int s);

/// e_HK + m_HK for the Gorenstein diagonal r = s.
BigRational gorenstein_sum(int r);

}  // namespace hklab
