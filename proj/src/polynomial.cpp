#include "hklab/polynomial.hpp"

#include <algorithm>

#include "hklab/errors.hpp"
#include "hklab/prime_field.hpp"

namespace hklab {

Polynomial::Polynomial(Ring ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
    normalize();
}

void Polynomial::normalize() {
    const MonomialOrder& ord = ring_->order;
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
        uint32_t c = t.coeff % ring_->p;
        if (!merged.empty() && merged.back().mono == t.mono) {
            merged.back().coeff = mod_add(merged.back().coeff, c, ring_->p);
        } else {
            merged.push_back({t.mono, c});
        }
        if (!merged.empty() && merged.back().coeff == 0) merged.pop_back();
    }
    terms_ = std::move(merged);
}

Polynomial Polynomial::constant(Ring ring, int64_t c) {
    int64_t v = c % int64_t(ring->p);
    if (v < 0) v += ring->p;
    Polynomial out(ring);
    if (v != 0) out.terms_.push_back({Monomial(ring->nvars()), uint32_t(v)});
    return out;
}

Polynomial Polynomial::variable(Ring ring, int index) {
    Polynomial out(ring);
    out.terms_.push_back({Monomial::variable(ring->nvars(), index), 1});
    return out;
}

Polynomial Polynomial::from_monomial(Ring ring, const Monomial& m, int64_t c) {
    if (m.nvars() != ring->nvars()) fail(errc::ring_mismatch, "monomial/ring ambient mismatch");
    int64_t v = c % int64_t(ring->p);
    if (v < 0) v += ring->p;
    Polynomial out(ring);
    if (v != 0) out.terms_.push_back({m, uint32_t(v)});
    return out;
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) fail(errc::arithmetic_bug, "leading term of zero polynomial");
    return terms_.front();
}

const Monomial& Polynomial::leading_monomial() const { return leading_term().mono; }

uint32_t Polynomial::leading_coeff() const { return leading_term().coeff; }

uint32_t Polynomial::total_degree() const {
    uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    require_same_ring(ring_, rhs.ring_);
    const MonomialOrder& ord = ring_->order;
    Polynomial out(ring_);
    out.terms_.reserve(terms_.size() + rhs.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < rhs.terms_.size()) {
        int c = ord.compare(terms_[i].mono, rhs.terms_[j].mono);
        if (c > 0) {
            out.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            out.terms_.push_back(rhs.terms_[j++]);
        } else {
            uint32_t s = mod_add(terms_[i].coeff, rhs.terms_[j].coeff, ring_->p);
            if (s != 0) out.terms_.push_back({terms_[i].mono, s});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
    for (; j < rhs.terms_.size(); ++j) out.terms_.push_back(rhs.terms_[j]);
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(ring_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.mono, mod_neg(t.coeff, ring_->p)});
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const { return *this + (-rhs); }

Polynomial Polynomial::scaled(uint32_t c) const {
    c %= ring_->p;
    Polynomial out(ring_);
    if (c == 0) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.mono, mod_mul(t.coeff, c, ring_->p)});
    return out;
}

Polynomial Polynomial::term_multiplied(const Term& t) const {
    Polynomial out(ring_);
    if (t.coeff % ring_->p == 0) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& s : terms_)
        out.terms_.push_back({s.mono * t.mono, mod_mul(s.coeff, t.coeff, ring_->p)});
    return out;  // multiplying by a fixed monomial preserves the sort
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    require_same_ring(ring_, rhs.ring_);
    if (is_zero() || rhs.is_zero()) return Polynomial(ring_);
    if (rhs.is_monomial()) return term_multiplied(rhs.terms_.front());
    if (is_monomial()) return rhs.term_multiplied(terms_.front());
    std::vector<Term> acc;
    acc.reserve(terms_.size() * rhs.terms_.size());
    for (const auto& a : terms_) {
        for (const auto& b : rhs.terms_) {
            acc.push_back({a.mono * b.mono, mod_mul(a.coeff, b.coeff, ring_->p)});
        }
    }
    return Polynomial(ring_, std::move(acc));
}

bool Polynomial::operator==(const Polynomial& rhs) const {
    return same_ring(ring_, rhs.ring_) && terms_ == rhs.terms_;
}

Polynomial Polynomial::pow(uint64_t k) const {
    if (k == 0) return constant(ring_, 1);
    if (is_monomial()) {
        // fast path: monomial powers never expand
        const Term& t = terms_.front();
        return from_monomial(ring_, t.mono.pow(k), int64_t(mod_pow(t.coeff, k, ring_->p)));
    }
    Polynomial base = *this;
    Polynomial out = constant(ring_, 1);
    while (k) {
        if (k & 1) out = out * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return out;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    uint32_t inv = mod_inv(leading_coeff(), ring_->p);
    return scaled(inv);
}

Polynomial Polynomial::reduce_step(uint32_t c, const Monomial& m, const Polynomial& g) const {
    // this - c*m*g with a single linear merge; both inputs are sorted
    const MonomialOrder& ord = ring_->order;
    const uint32_t p = ring_->p;
    Polynomial out(ring_);
    out.terms_.reserve(terms_.size() + g.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < g.terms_.size()) {
        Monomial gm = g.terms_[j].mono * m;
        int cmp = ord.compare(terms_[i].mono, gm);
        if (cmp > 0) {
            out.terms_.push_back(terms_[i++]);
        } else if (cmp < 0) {
            uint32_t v = mod_neg(mod_mul(c, g.terms_[j].coeff, p), p);
            out.terms_.push_back({gm, v});
            ++j;
        } else {
            uint32_t v = mod_sub(terms_[i].coeff, mod_mul(c, g.terms_[j].coeff, p), p);
            if (v != 0) out.terms_.push_back({terms_[i].mono, v});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
    for (; j < g.terms_.size(); ++j) {
        uint32_t v = mod_neg(mod_mul(c, g.terms_[j].coeff, p), p);
        out.terms_.push_back({g.terms_[j].mono * m, v});
    }
    return out;
}

Polynomial Polynomial::converted_to(const Ring& target) const {
    if (target->p != ring_->p || target->vars != ring_->vars)
        fail(errc::ring_mismatch, "conversion only changes the monomial order");
    Polynomial out(target, terms_);
    return out;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (size_t k = 0; k < terms_.size(); ++k) {
        if (k) out += " + ";
        const Term& t = terms_[k];
        bool printed = false;
        if (t.coeff != 1 || t.mono.is_one()) {
            out += std::to_string(t.coeff);
            printed = true;
        }
        for (int i = 0; i < t.mono.nvars(); ++i) {
            uint32_t e = t.mono.exponent(i);
            if (e == 0) continue;
            if (printed) out += "*";
            out += ring_->vars[size_t(i)];
            if (e > 1) out += "^" + std::to_string(e);
            printed = true;
        }
    }
    return out;
}

}  // namespace hklab
