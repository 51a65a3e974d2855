#include "hklab/quotient.hpp"

#include <numeric>
#include <string>

#include "hklab/errors.hpp"

namespace hklab {

BigRational quotient_ehk(const QuotientParams& params) {
    if (params.group_order == 0 || params.mu == 0)
        fail(errc::invalid_argument, "group order and mu must be positive");
    if (params.p != 0 && std::gcd(uint64_t(params.p), params.group_order) != 1)
        fail(errc::hypothesis_violation,
             "characteristic " + std::to_string(params.p) + " divides the group order");
    return BigRational(BigInt(int64_t(params.mu)), BigInt(int64_t(params.group_order)));
}

BigRational quotient_mhk(uint64_t group_order) {
    if (group_order == 0) fail(errc::invalid_argument, "group order must be positive");
    return BigRational(BigInt(1), BigInt(int64_t(group_order)));
}

uint64_t veronese_mu(uint32_t e) {
    if (e == 0) fail(errc::invalid_argument, "Veronese degree must be positive");
    // For each congruence class i mod e, count monomials (a, b) with
    // a+b ≡ i (mod e) that are minimal under componentwise division by the
    // class, meaning no class element sits strictly below them. Scan a window;
    // generators only ever appear in the lowest degree of each class.
    uint64_t mu = 0;
    for (uint32_t i = 0; i < e; ++i) {
        for (uint32_t deg = i; deg <= i + 3 * e; deg += e) {
            for (uint32_t a = 0; a <= deg; ++a) {
                uint32_t b = deg - a;
                bool minimal = true;
                // any (c, d) <= (a, b) in the same class with lower degree?
                for (uint32_t lower = i; lower < deg && minimal; lower += e) {
                    // need c <= a, d = lower - c <= b
                    uint32_t c_min = lower > b ? lower - b : 0;
                    uint32_t c_max = std::min(a, lower);
                    if (c_min <= c_max) minimal = false;
                }
                if (minimal) ++mu;
            }
        }
    }
    return mu;
}

uint64_t veronese_semigroup_length(uint32_t e, uint64_t q, const VeroneseLengthOptions& opts) {
    if (e == 0 || q == 0) fail(errc::invalid_argument, "need e >= 1 and q >= 1");
    // Points outside every q-shifted generator cone satisfy a < qe (from the
    // generator (e,0)) and b < qe (from (0,e)), so the scan is a box walk.
    if (q > (uint64_t(1) << 31) / e)
        fail(errc::budget_exceeded, "Veronese lattice scan exceeds the work budget");
    uint64_t side = q * e;
    if (side * side > opts.budget)
        fail(errc::budget_exceeded, "Veronese lattice scan exceeds the work budget");
    uint64_t count = 0;
    for (uint64_t a = 0; a < side; ++a) {
        for (uint64_t b = (e - a % e) % e; b < side; b += e) {
            bool in_ideal = false;
            for (uint32_t i = 0; i <= e; ++i) {
                // generator i is (e-i, i) scaled by q
                if (a >= q * (e - i) && b >= q * i) {
                    in_ideal = true;
                    break;
                }
            }
            if (!in_ideal) ++count;
        }
    }
    return count;
}

CoverCheck canonical_cover_check(uint64_t group_order, uint64_t subgroup_order) {
    if (group_order == 0 || subgroup_order == 0)
        fail(errc::invalid_argument, "orders must be positive");
    if (group_order % subgroup_order != 0)
        fail(errc::invalid_subgroup, std::to_string(subgroup_order) + " does not divide " +
                                         std::to_string(group_order));
    uint64_t index = group_order / subgroup_order;
    BigRational base = quotient_mhk(group_order);
    BigRational cover = quotient_mhk(subgroup_order);
    bool pass = cover == BigRational(int64_t(index)) * base;
    return CoverCheck{group_order, subgroup_order, index, base, cover, pass};
}

}  // namespace hklab
