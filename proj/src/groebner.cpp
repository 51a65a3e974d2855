#include "hklab/groebner.hpp"

#include <algorithm>
#include <string>

#include "hklab/errors.hpp"
#include "hklab/prime_field.hpp"

namespace hklab {

IdealSpec::IdealSpec(Ring r, std::vector<Polynomial> g) : ring(std::move(r)) {
    gens.reserve(g.size());
    for (auto& f : g) {
        require_same_ring(ring, f.ring());
        if (!f.is_zero()) gens.push_back(std::move(f));
    }
}

bool IdealSpec::all_monomial() const {
    return std::all_of(gens.begin(), gens.end(),
                       [](const Polynomial& f) { return f.is_monomial(); });
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
    std::vector<Monomial> out;
    out.reserve(elems.size());
    for (const auto& f : elems) out.push_back(f.leading_monomial());
    return out;
}

void GBStats::merge(const GBStats& other) {
    reduction_steps += other.reduction_steps;
    pairs_considered += other.pairs_considered;
    pairs_reduced_to_zero += other.pairs_reduced_to_zero;
    basis_elements += other.basis_elements;
    lengths_computed += other.lengths_computed;
}

namespace {

void charge_step(uint64_t& used, const GBOptions& opts) {
    if (++used > opts.step_budget)
        fail(errc::budget_exceeded,
             "reduction step budget of " + std::to_string(opts.step_budget) + " exhausted");
}

Polynomial normal_form_impl(const Polynomial& f, const std::vector<Polynomial>& basis,
                            uint64_t& steps_used, const GBOptions& opts) {
    const Ring& ring = f.ring();
    const uint32_t p = ring->p;
    Polynomial h = f;
    std::vector<Term> remainder;
    while (!h.is_zero()) {
        const Term& lt = h.leading_term();
        const Polynomial* reducer = nullptr;
        for (const auto& g : basis) {
            if (g.leading_monomial().divides(lt.mono)) {
                reducer = &g;
                break;
            }
        }
        if (reducer == nullptr) {
            remainder.push_back(lt);
            // strip the leading term; the tail is already sorted
            std::vector<Term> tail(h.terms().begin() + 1, h.terms().end());
            h = Polynomial(ring, std::move(tail));
            continue;
        }
        charge_step(steps_used, opts);
        Monomial quot = lt.mono.divide_exact(reducer->leading_monomial());
        uint32_t c = mod_mul(lt.coeff, mod_inv(reducer->leading_coeff(), p), p);
        h = h.reduce_step(c, quot, *reducer);
    }
    return Polynomial(ring, std::move(remainder));
}

/// Minimal generators of a monomial ideal: drop anything divisible by another.
std::vector<Monomial> minimalize_monomials(std::vector<Monomial> monos) {
    std::sort(monos.begin(), monos.end(), [](const Monomial& a, const Monomial& b) {
        return a.degree() < b.degree();
    });
    std::vector<Monomial> out;
    for (const auto& m : monos) {
        bool redundant = false;
        for (const auto& kept : out) {
            if (kept.divides(m)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) out.push_back(m);
    }
    return out;
}

struct CriticalPair {
    uint32_t i, j;
    Monomial lcm;
};

/// Gebauer-Möller update: appends h to the basis, filters the pair queue.
void update_pairs(std::vector<Polynomial>& basis, std::vector<CriticalPair>& pairs,
                  const Polynomial& h) {
    const uint32_t nh = uint32_t(basis.size());
    const Monomial& lm_h = h.leading_monomial();

    std::vector<CriticalPair> fresh;
    fresh.reserve(basis.size());
    for (uint32_t k = 0; k < nh; ++k)
        fresh.push_back({k, nh, Monomial::lcm(basis[k].leading_monomial(), lm_h)});

    // drop old pairs strictly improved by h
    std::vector<CriticalPair> kept_old;
    kept_old.reserve(pairs.size());
    for (auto& cp : pairs) {
        if (lm_h.divides(cp.lcm) &&
            Monomial::lcm(basis[cp.i].leading_monomial(), lm_h) != cp.lcm &&
            Monomial::lcm(basis[cp.j].leading_monomial(), lm_h) != cp.lcm) {
            continue;
        }
        kept_old.push_back(std::move(cp));
    }
    pairs = std::move(kept_old);

    // among the fresh pairs keep only minimal lcms (one per equal class)
    std::sort(fresh.begin(), fresh.end(), [](const CriticalPair& a, const CriticalPair& b) {
        if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
        return a.i < b.i;
    });
    std::vector<CriticalPair> minimal;
    for (auto& cp : fresh) {
        bool dominated = false;
        for (const auto& kept : minimal) {
            if (kept.lcm.divides(cp.lcm)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) minimal.push_back(std::move(cp));
    }

    // product criterion
    std::vector<CriticalPair> final_new;
    for (auto& cp : minimal) {
        if (!Monomial::coprime(basis[cp.i].leading_monomial(), lm_h))
            final_new.push_back(std::move(cp));
    }

    basis.push_back(h);
    pairs.insert(pairs.end(), final_new.begin(), final_new.end());
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const Monomial& lcm) {
    const uint32_t p = f.ring()->p;
    Monomial mf = lcm.divide_exact(f.leading_monomial());
    Monomial mg = lcm.divide_exact(g.leading_monomial());
    Polynomial a = f.term_multiplied({mf, mod_inv(f.leading_coeff(), p)});
    Polynomial b = g.term_multiplied({mg, mod_inv(g.leading_coeff(), p)});
    return a - b;
}

/// Full autoreduction: every element reduced against the others, made monic,
/// sorted by leading monomial. Produces the reduced basis from a minimal one.
void interreduce(std::vector<Polynomial>& basis, const MonomialOrder& ord, uint64_t& steps_used,
                 const GBOptions& opts) {
    // minimalize by leading-term divisibility
    std::vector<Polynomial> minimal;
    std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.less(a.leading_monomial(), b.leading_monomial());
    });
    for (auto& f : basis) {
        bool redundant = false;
        for (const auto& kept : minimal) {
            if (kept.leading_monomial().divides(f.leading_monomial())) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(std::move(f));
    }
    // tail-reduce each element against the rest
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        others.reserve(minimal.size() - 1);
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        minimal[i] = normal_form_impl(minimal[i], others, steps_used, opts).monic();
    }
    std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.less(a.leading_monomial(), b.leading_monomial());
    });
    basis = std::move(minimal);
}

}  // namespace

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G, const GBOptions& opts,
                       GBStats* stats) {
    require_same_ring(f.ring(), G.ring);
    uint64_t steps = 0;
    Polynomial r = normal_form_impl(f, G.elems, steps, opts);
    if (stats) stats->reduction_steps += steps;
    return r;
}

GroebnerBasis buchberger(const IdealSpec& ideal, const GBOptions& opts, GBStats* stats) {
    return buchberger(ideal, ideal.ring->order, opts, stats);
}

GroebnerBasis buchberger(const IdealSpec& ideal, const MonomialOrder& order, const GBOptions& opts,
                         GBStats* stats) {
    Ring ring = ideal.ring->order == order ? ideal.ring : ring_with_order(ideal.ring, order);
    GroebnerBasis out{ring, {}, true};
    GBStats local;

    if (ideal.gens.empty()) {
        if (stats) stats->merge(local);
        return out;
    }

    // monomial ideals are their own Gröbner basis
    if (ideal.all_monomial()) {
        std::vector<Monomial> monos;
        monos.reserve(ideal.gens.size());
        for (const auto& f : ideal.gens) monos.push_back(f.leading_monomial());
        for (const auto& m : minimalize_monomials(monos))
            out.elems.push_back(Polynomial::from_monomial(ring, m, 1));
        std::sort(out.elems.begin(), out.elems.end(),
                  [&](const Polynomial& a, const Polynomial& b) {
                      return order.less(a.leading_monomial(), b.leading_monomial());
                  });
        local.basis_elements = out.elems.size();
        if (stats) stats->merge(local);
        return out;
    }

    uint64_t steps = 0;
    std::vector<Polynomial> basis;
    std::vector<CriticalPair> pairs;
    for (const auto& g : ideal.gens) {
        Polynomial f = g.converted_to(ring);
        Polynomial r = normal_form_impl(f, basis, steps, opts);
        if (!r.is_zero()) update_pairs(basis, pairs, r.monic());
    }

    while (!pairs.empty()) {
        // normal strategy: minimal lcm degree, tie-break by the order on lcms
        size_t best = 0;
        for (size_t k = 1; k < pairs.size(); ++k) {
            const Monomial &a = pairs[k].lcm, &b = pairs[best].lcm;
            if (a.degree() < b.degree() ||
                (a.degree() == b.degree() && order.less(a, b))) {
                best = k;
            }
        }
        CriticalPair cp = pairs[best];
        pairs.erase(pairs.begin() + long(best));
        ++local.pairs_considered;

        Polynomial s = s_polynomial(basis[cp.i], basis[cp.j], cp.lcm);
        Polynomial r = normal_form_impl(s, basis, steps, opts);
        if (r.is_zero()) {
            ++local.pairs_reduced_to_zero;
        } else {
            update_pairs(basis, pairs, r.monic());
        }
    }

    interreduce(basis, order, steps, opts);
    out.elems = std::move(basis);
    local.reduction_steps = steps;
    local.basis_elements = out.elems.size();
    if (stats) stats->merge(local);
    return out;
}

bool ideal_contains(const GroebnerBasis& G, const Polynomial& f, const GBOptions& opts,
                    GBStats* stats) {
    return normal_form(f, G, opts, stats).is_zero();
}

uint32_t frobenius_exponent(uint64_t q, uint32_t p) {
    if (q == 0) fail(errc::invalid_frobenius_power, "q = 0 is not a power of p");
    uint32_t e = 0;
    uint64_t v = q;
    while (v % p == 0) {
        v /= p;
        ++e;
    }
    if (v != 1)
        fail(errc::invalid_frobenius_power,
             std::to_string(q) + " is not a power of the characteristic " + std::to_string(p));
    return e;
}

IdealSpec bracket_power(const IdealSpec& ideal, uint64_t q) {
    frobenius_exponent(q, ideal.ring->p);
    std::vector<Polynomial> powered;
    powered.reserve(ideal.gens.size());
    for (const auto& f : ideal.gens) powered.push_back(f.pow(q));
    return IdealSpec(ideal.ring, std::move(powered));
}

namespace {

constexpr const char* kAuxVar = "t#";

/// Base ring extended by one elimination variable placed first under lex.
Ring elimination_ring(const Ring& base) {
    std::vector<std::string> vars;
    vars.reserve(base->vars.size() + 1);
    vars.push_back(kAuxVar);
    vars.insert(vars.end(), base->vars.begin(), base->vars.end());
    return make_ring(base->p, std::move(vars), MonomialOrder::lex(int(vars.size())));
}

Polynomial lift_to_elim(const Polynomial& f, const Ring& elim) {
    std::vector<Term> terms;
    terms.reserve(f.term_count());
    for (const auto& t : f.terms()) terms.push_back({t.mono.with_variable_inserted(0), t.coeff});
    return Polynomial(elim, std::move(terms));
}

Polynomial project_from_elim(const Polynomial& f, const Ring& base) {
    std::vector<Term> terms;
    terms.reserve(f.term_count());
    for (const auto& t : f.terms()) terms.push_back({t.mono.without_variable(0), t.coeff});
    return Polynomial(base, std::move(terms));
}

bool involves_aux(const Polynomial& f) {
    for (const auto& t : f.terms())
        if (t.mono.exponent(0) > 0) return true;
    return false;
}

/// Exact division h / f; the divisor is known to divide.
Polynomial divide_exact_poly(const Polynomial& h, const Polynomial& f) {
    const uint32_t p = h.ring()->p;
    Polynomial rem = h;
    std::vector<Term> quot;
    uint32_t lc_inv = mod_inv(f.leading_coeff(), p);
    while (!rem.is_zero()) {
        const Term& lt = rem.leading_term();
        if (!f.leading_monomial().divides(lt.mono))
            fail(errc::arithmetic_bug, "inexact polynomial division in ideal quotient");
        Monomial m = lt.mono.divide_exact(f.leading_monomial());
        uint32_t c = mod_mul(lt.coeff, lc_inv, p);
        quot.push_back({m, c});
        rem = rem.reduce_step(c, m, f);
    }
    return Polynomial(h.ring(), std::move(quot));
}

}  // namespace

IdealSpec intersect_ideals(const IdealSpec& a, const IdealSpec& b, const GBOptions& opts,
                           GBStats* stats) {
    require_same_ring(a.ring, b.ring);
    Ring elim = elimination_ring(a.ring);
    Polynomial t = Polynomial::variable(elim, 0);
    Polynomial one_minus_t = Polynomial::constant(elim, 1) - t;

    std::vector<Polynomial> gens;
    gens.reserve(a.gens.size() + b.gens.size());
    for (const auto& f : a.gens) gens.push_back(t * lift_to_elim(f, elim));
    for (const auto& g : b.gens) gens.push_back(one_minus_t * lift_to_elim(g, elim));

    GroebnerBasis G = buchberger(IdealSpec(elim, std::move(gens)), opts, stats);
    std::vector<Polynomial> result;
    for (const auto& g : G.elems) {
        if (!involves_aux(g)) result.push_back(project_from_elim(g, a.ring));
    }
    return IdealSpec(a.ring, std::move(result));
}

IdealSpec colon_by_element(const IdealSpec& ideal, const Polynomial& f, const GBOptions& opts,
                           GBStats* stats) {
    require_same_ring(ideal.ring, f.ring());
    if (f.is_zero()) fail(errc::invalid_argument, "colon by zero");
    IdealSpec principal(ideal.ring, {f});
    IdealSpec meet = intersect_ideals(ideal, principal, opts, stats);
    std::vector<Polynomial> quot;
    quot.reserve(meet.gens.size());
    for (const auto& g : meet.gens) quot.push_back(divide_exact_poly(g, f));
    return IdealSpec(ideal.ring, std::move(quot));
}

IdealSpec colon_maximal(const IdealSpec& ideal, const GBOptions& opts, GBStats* stats) {
    const Ring& ring = ideal.ring;
    if (ideal.gens.empty()) fail(errc::invalid_argument, "colon of the zero ideal");
    // Artinian gate: the staircase must be finite
    artinian_length(ideal, {}, opts, stats);

    std::optional<IdealSpec> acc;
    for (int i = 0; i < ring->nvars(); ++i) {
        IdealSpec qi = colon_by_element(ideal, Polynomial::variable(ring, i), opts, stats);
        if (!acc) {
            acc = std::move(qi);
        } else {
            acc = intersect_ideals(*acc, qi, opts, stats);
        }
    }
    // canonical generators: the reduced basis of the result
    GroebnerBasis G = buchberger(*acc, opts, stats);
    return IdealSpec(ring, G.elems);
}

StandardMonomialSet standard_monomials(const std::vector<Monomial>& leads, int nvars,
                                       bool collect) {
    std::vector<Monomial> gens = minimalize_monomials(leads);
    StandardMonomialSet out;

    // unit ideal: empty staircase
    for (const auto& m : gens) {
        if (m.is_one()) return out;
    }

    // finite iff every variable has a pure power among the generators
    std::vector<uint32_t> box(size_t(nvars), 0);
    for (int v = 0; v < nvars; ++v) {
        uint32_t bound = 0;
        for (const auto& m : gens) {
            if (m.exponent(v) > 0 && m.degree() == m.exponent(v)) {
                uint32_t e = m.exponent(v);
                if (bound == 0 || e < bound) bound = e;
            }
        }
        if (bound == 0)
            fail(errc::not_artinian, "no pure power of variable " + std::to_string(v) +
                                         " in the leading-term ideal");
        box[size_t(v)] = bound;
    }

    // walk the box, counting points under the staircase
    std::vector<uint32_t> point(size_t(nvars), 0);
    while (true) {
        bool divisible = false;
        for (const auto& m : gens) {
            bool div = true;
            for (int v = 0; v < nvars; ++v) {
                if (m.exponent(v) > point[size_t(v)]) {
                    div = false;
                    break;
                }
            }
            if (div) {
                divisible = true;
                break;
            }
        }
        if (!divisible) {
            ++out.count;
            if (collect) out.elements.push_back(Monomial::from_exponents(point));
        }
        int v = 0;
        while (v < nvars) {
            if (++point[size_t(v)] < box[size_t(v)]) break;
            point[size_t(v)] = 0;
            ++v;
        }
        if (v == nvars) break;
    }
    return out;
}

uint64_t artinian_length(const IdealSpec& ideal, const std::vector<Polynomial>& relations,
                         const GBOptions& opts, GBStats* stats) {
    std::vector<Polynomial> gens = ideal.gens;
    for (const auto& r : relations) {
        require_same_ring(ideal.ring, r.ring());
        if (!r.is_zero()) gens.push_back(r);
    }
    IdealSpec full(ideal.ring, std::move(gens));
    GroebnerBasis G = buchberger(full, opts, stats);
    StandardMonomialSet sm = standard_monomials(G.leading_monomials(), ideal.ring->nvars());
    if (stats) ++stats->lengths_computed;
    return sm.count;
}

}  // namespace hklab
