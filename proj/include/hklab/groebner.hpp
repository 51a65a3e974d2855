#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hklab/polynomial.hpp"
#include "hklab/ring.hpp"

namespace hklab {

/// A generating set for an ideal; generators are nonzero and canonical.
struct IdealSpec {
    Ring ring;
    std::vector<Polynomial> gens;

    IdealSpec(Ring r, std::vector<Polynomial> g);

    bool all_monomial() const;
};

struct GroebnerBasis {
    Ring ring;  // carries the order the basis is reduced against
    std::vector<Polynomial> elems;
    bool reduced = false;

    const MonomialOrder& order() const { return ring->order; }
    std::vector<Monomial> leading_monomials() const;
};

/// Work limits and counters shared across one computation. The step budget
/// counts individual leading-term cancellations.
struct GBOptions {
    uint64_t step_budget = 10'000'000;
};

struct GBStats {
    uint64_t reduction_steps = 0;
    uint64_t pairs_considered = 0;
    uint64_t pairs_reduced_to_zero = 0;
    uint64_t basis_elements = 0;
    uint64_t lengths_computed = 0;

    void merge(const GBStats& other);
};

/// Remainder of f on division by G; no term of the result is divisible by
/// any leading monomial of G. Unique when G is a Gröbner basis.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G, const GBOptions& opts = {},
                       GBStats* stats = nullptr);

/// Buchberger with the Gebauer-Möller pair update. Pairs are processed by
/// minimal lcm degree, ties broken by the order on lcms, so runs are
/// reproducible. Returns the reduced basis for `order`.
GroebnerBasis buchberger(const IdealSpec& ideal, const MonomialOrder& order,
                         const GBOptions& opts = {}, GBStats* stats = nullptr);
GroebnerBasis buchberger(const IdealSpec& ideal, const GBOptions& opts = {},
                         GBStats* stats = nullptr);

bool ideal_contains(const GroebnerBasis& G, const Polynomial& f, const GBOptions& opts = {},
                    GBStats* stats = nullptr);

/// q = p^e with e >= 0; returns e. Throws InvalidFrobeniusPower otherwise.
uint32_t frobenius_exponent(uint64_t q, uint32_t p);

/// I^[q]: generators raised to the q-th power (q a power of the ambient
/// characteristic, which makes this a generating set of the bracket power).
IdealSpec bracket_power(const IdealSpec& ideal, uint64_t q);

/// I : f via the single-auxiliary-variable intersection; divides the
/// intersection's generators exactly by f.
IdealSpec colon_by_element(const IdealSpec& ideal, const Polynomial& f, const GBOptions& opts = {},
                           GBStats* stats = nullptr);

/// I ∩ J by eliminating t from t*I + (1-t)*J (lex with t first).
IdealSpec intersect_ideals(const IdealSpec& a, const IdealSpec& b, const GBOptions& opts = {},
                           GBStats* stats = nullptr);

/// I : m where m = (all variables), as the intersection of the elementwise
/// quotients. Requires an Artinian quotient; generators returned are the
/// reduced Gröbner basis of the result.
IdealSpec colon_maximal(const IdealSpec& ideal, const GBOptions& opts = {},
                        GBStats* stats = nullptr);

/// Monomials under the staircase of a set of leading monomials.
struct StandardMonomialSet {
    uint64_t count = 0;
    std::vector<Monomial> elements;  // filled only when collected
};

/// Counts standard monomials of the monomial ideal generated by `leads`.
/// Throws NotArtinian when the count is infinite.
StandardMonomialSet standard_monomials(const std::vector<Monomial>& leads, int nvars,
                                       bool collect = false);

/// Vector-space dimension of R/(I + relations): Gröbner basis (or the
/// monomial fast path) followed by staircase counting.
uint64_t artinian_length(const IdealSpec& ideal, const std::vector<Polynomial>& relations,
                         const GBOptions& opts = {}, GBStats* stats = nullptr);

}  // namespace hklab
