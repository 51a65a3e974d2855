#include "hklab/segre.hpp"

#include <string>

#include "hklab/errors.hpp"
#include "hklab/stirling.hpp"

namespace hklab {

SegreParams::SegreParams(int r_, int s_) : r(r_), s(s_) {
    if (!(2 <= r && r <= s))
        fail(errc::invalid_argument, "Segre parameters need 2 <= r <= s, got r=" +
                                         std::to_string(r) + " s=" + std::to_string(s));
}

BigInt alpha(int r, int64_t n) {
    if (r < 1 || n < 0) return BigInt(0);
    return binomial(n + r - 1, r - 1);
}

BigInt alpha_q(int r, int64_t n, int64_t q) {
    if (r < 1 || q < 1) return BigInt(0);
    if (n < 0 || n > int64_t(r) * (q - 1)) return BigInt(0);
    BigInt out(0);
    for (int i = 0; i <= r; ++i) {
        int64_t shifted = n - int64_t(i) * q;
        if (shifted < 0) break;
        BigInt term = binomial(r, i) * binomial(shifted + r - 1, r - 1);
        out += (i % 2 == 0) ? term : -term;
    }
    return out;
}

AlphaTable build_alpha_table(int r, int64_t q) {
    AlphaTable table{r, q, {}};
    int64_t top = int64_t(r) * (q - 1);
    table.values.reserve(size_t(top + 1));
    for (int64_t n = 0; n <= top; ++n) table.values.push_back(alpha_q(r, n, q));
    return table;
}

namespace {

/// The double sum shared by the two closed forms:
/// sum_{k=1}^{r-1} sum_{j=1}^{r-k} C(r,k+j) C(s,j) (-1)^{r+k} k^d.
BigInt correction_sum(int r, int s, int d) {
    BigInt out(0);
    for (int k = 1; k <= r - 1; ++k) {
        for (int j = 1; j <= r - k; ++j) {
            BigInt term = binomial(r, k + j) * binomial(s, j) *
                          BigInt(int64_t(k)).pow(uint64_t(d));
            if ((r + k) % 2 == 1) term = -term;
            out += term;
        }
    }
    return out;
}

}  // namespace

BigRational segre_ehk_closed(const SegreParams& params) {
    const int d = params.d();
    BigInt dfact = factorial(uint32_t(d));
    BigRational main(factorial(uint32_t(params.s)) * stirling2(uint32_t(d), uint32_t(params.s)),
                     dfact);
    BigRational corr(correction_sum(params.r, params.s, d), dfact);
    return main - corr;
}

BigRational segre_mhk_closed(const SegreParams& params) {
    const int d = params.d();
    BigInt dfact = factorial(uint32_t(d));
    BigRational main(factorial(uint32_t(params.r)) * stirling2(uint32_t(d), uint32_t(params.r)),
                     dfact);
    BigRational corr(correction_sum(params.r, params.s, d), dfact);
    return main + corr;
}

SegreFiniteQ segre_finite_q(const SegreParams& params, int64_t q) {
    if (q < 1) fail(errc::invalid_argument, "q must be positive");
    AlphaTable ar = build_alpha_table(params.r, q);
    AlphaTable as = build_alpha_table(params.s, q);
    int64_t top = int64_t(params.s) * (q - 1);  // beyond this every term vanishes
    BigInt ehk_num(0), mhk_num(0);
    for (int64_t n = 0; n <= top; ++n) {
        BigInt aq_r = n < int64_t(ar.values.size()) ? ar.values[size_t(n)] : BigInt(0);
        BigInt aq_s = as.values[size_t(n)];
        BigInt a_r = alpha(params.r, n);
        BigInt a_s = alpha(params.s, n);
        ehk_num += a_r * aq_s + aq_r * a_s - aq_r * aq_s;
        mhk_num += aq_r * aq_s;
    }
    return SegreFiniteQ{q, std::move(ehk_num), std::move(mhk_num)};
}

BigRational SegreFiniteQ::ehk_ratio(const SegreParams& params) const {
    return BigRational(ehk_numerator, BigInt(q).pow(uint64_t(params.d())));
}

BigRational SegreFiniteQ::mhk_ratio(const SegreParams& params) const {
    return BigRational(mhk_numerator, BigInt(q).pow(uint64_t(params.d())));
}

BigInt segre_cross_numerator(int r, int s, int64_t q) {
    int64_t top = int64_t(r) * (q - 1);
    BigInt out(0);
    for (int64_t n = 0; n <= top; ++n) out += alpha_q(r, n, q) * alpha(s, n);
    return out;
}

namespace {

/// Tallies, per coordinate sum, the tuples in [0,q-1]^k by an odometer walk.
std::vector<uint64_t> sum_histogram(int k, int64_t q, uint64_t budget) {
    uint64_t cost = 1;
    for (int i = 0; i < k; ++i) {
        cost *= uint64_t(q);
        if (cost > budget)
            fail(errc::budget_exceeded, "tuple enumeration exceeds the work budget");
    }
    std::vector<uint64_t> hist(size_t(int64_t(k) * (q - 1) + 1), 0);
    std::vector<int64_t> tuple(size_t(k), 0);
    int64_t sum = 0;
    while (true) {
        ++hist[size_t(sum)];
        int i = 0;
        while (i < k) {
            if (++tuple[size_t(i)] < q) {
                ++sum;
                break;
            }
            sum -= q - 1;
            tuple[size_t(i)] = 0;
            ++i;
        }
        if (i == k) break;
    }
    return hist;
}

}  // namespace

BigInt socle_annihilator_count(int r, int s, int64_t q, const SocleCountOptions& opts) {
    if (r < 1 || s < 1 || q < 1) fail(errc::invalid_argument, "need r, s, q >= 1");
    long double raw_cost = 1;
    for (int i = 0; i < r + s; ++i) raw_cost *= static_cast<long double>(q);

    if (raw_cost <= static_cast<long double>(opts.raw_limit)) {
        // full walk over [0,q-1]^{r+s}, counting equal-sum tuples
        int k = r + s;
        std::vector<int64_t> tuple(size_t(k), 0);
        int64_t left = 0, right = 0;
        uint64_t count = 0;
        while (true) {
            if (left == right) ++count;
            int i = 0;
            while (i < k) {
                if (++tuple[size_t(i)] < q) {
                    (i < r ? left : right) += 1;
                    break;
                }
                (i < r ? left : right) -= q - 1;
                tuple[size_t(i)] = 0;
                ++i;
            }
            if (i == k) break;
        }
        return BigInt(int64_t(count));
    }

    // per-side walks plus convolution of the per-sum tallies
    std::vector<uint64_t> ha = sum_histogram(r, q, opts.budget);
    std::vector<uint64_t> hb = sum_histogram(s, q, opts.budget);
    BigInt out(0);
    size_t n_max = std::min(ha.size(), hb.size());
    for (size_t n = 0; n < n_max; ++n)
        out += BigInt(int64_t(ha[n])) * BigInt(int64_t(hb[n]));
    return out;
}

ReesValues rees_formulas(int s) {
    if (s < 2) fail(errc::invalid_argument, "Rees formulas need s >= 2");
    BigInt sp1_fact = factorial(uint32_t(s + 1));
    BigRational ehk = BigRational(int64_t(s)) *
                      (BigRational(1, 2) + BigRational(BigInt(1), sp1_fact));
    BigRational mhk(BigInt(2).pow(uint64_t(s + 1)) - BigInt(int64_t(s) + 2), sp1_fact);
    return ReesValues{ehk, mhk};
}

BigRational gorenstein_sum(int r) {
    if (r < 2) fail(errc::invalid_argument, "Gorenstein diagonal needs r >= 2");
    uint32_t d = uint32_t(2 * r - 1);
    return BigRational(BigInt(2) * factorial(uint32_t(r)) * stirling2(d, uint32_t(r)),
                       factorial(d));
}

}  // namespace hklab
