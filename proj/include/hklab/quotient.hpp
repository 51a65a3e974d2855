#pragma once

#include <cstdint>
#include <vector>

#include "hklab/bigint.hpp"
#include "hklab/rational.hpp"

namespace hklab {

/// Invariant-ring data: the formulas are parametrized by |G| and the minimal
/// generator count mu of the ambient polynomial ring as a module. The
/// characteristic must not divide |G|; p = 0 skips the coprimality check.
/// The no-pseudo-reflections hypothesis is recorded, not verified.
struct QuotientParams {
    uint64_t group_order;
    uint64_t mu;
    uint32_t p = 0;
    bool no_pseudo_reflections = true;
};

/// mu / |G| exactly. Throws HypothesisViolation when p divides |G|.
BigRational quotient_ehk(const QuotientParams& params);

/// 1 / |G| exactly.
BigRational quotient_mhk(uint64_t group_order);

/// Minimal module generators of the ambient k[x,y] over the e-th Veronese
/// subring, counted by enumerating each congruence-class piece.
uint64_t veronese_mu(uint32_t e);

struct VeroneseLengthOptions {
    uint64_t budget = 400'000'000;  // cap on lattice points scanned
};

/// Lattice points of the Veronese semigroup {(a,b) : e | a+b} outside the
/// ideal generated by the q-th powers of the degree-e generators; this is
/// the length of A/m^[q] for the e-th Veronese of k[x,y].
uint64_t veronese_semigroup_length(uint32_t e, uint64_t q,
                                   const VeroneseLengthOptions& opts = {});

/// Arithmetic of the cyclic-cover relation: m_HK of the cover equals
/// (G:H) times m_HK of the base when both sides are 1/|group|.
struct CoverCheck {
    uint64_t group_order;
    uint64_t subgroup_order;
    uint64_t index;  // r = |G| / |H|
    BigRational mhk_base;   // 1/|G|
    BigRational mhk_cover;  // 1/|H|
    bool pass;
};
CoverCheck canonical_cover_check(uint64_t group_order, uint64_t subgroup_order);

}  // namespace hklab
