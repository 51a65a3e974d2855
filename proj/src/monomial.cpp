#include "hklab/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hklab/errors.hpp"

namespace hklab {

namespace {
void check_nvars(int nvars) {
    if (nvars < 0 || nvars > kMaxVars)
        fail(errc::invalid_argument,
             "variable count " + std::to_string(nvars) + " outside [0, " +
                 std::to_string(kMaxVars) + "]");
}
}  // namespace

Monomial::Monomial(int nvars) : nvars_(nvars) { check_nvars(nvars); }

Monomial::Monomial(int nvars, std::initializer_list<uint32_t> exps) : nvars_(nvars) {
    check_nvars(nvars);
    if (int(exps.size()) != nvars)
        fail(errc::invalid_argument, "exponent list length does not match variable count");
    int i = 0;
    for (uint32_t e : exps) exp_[size_t(i++)] = e;
    check_width();
    recompute_degree();
}

Monomial Monomial::from_exponents(const std::vector<uint32_t>& exps) {
    Monomial m(int(exps.size()));
    for (size_t i = 0; i < exps.size(); ++i) m.exp_[i] = exps[i];
    m.check_width();
    m.recompute_degree();
    return m;
}

Monomial Monomial::variable(int nvars, int index, uint32_t power) {
    Monomial m(nvars);
    if (index < 0 || index >= nvars) fail(errc::invalid_argument, "variable index out of range");
    m.exp_[size_t(index)] = power;
    m.check_width();
    m.recompute_degree();
    return m;
}

void Monomial::recompute_degree() {
    uint64_t d = 0;
    for (int i = 0; i < nvars_; ++i) d += exp_[size_t(i)];
    degree_ = uint32_t(d);
}

void Monomial::check_width() const {
    for (int i = 0; i < nvars_; ++i) {
        if (exp_[size_t(i)] >= kMaxExponent)
            fail(errc::exponent_overflow, "monomial exponent exceeds width limit");
    }
}

Monomial Monomial::operator*(const Monomial& rhs) const {
    if (nvars_ != rhs.nvars_) fail(errc::ring_mismatch, "monomials from different ambients");
    Monomial out(nvars_);
    for (int i = 0; i < nvars_; ++i) {
        uint64_t e = uint64_t(exp_[size_t(i)]) + rhs.exp_[size_t(i)];
        if (e >= kMaxExponent) fail(errc::exponent_overflow, "exponent overflow in product");
        out.exp_[size_t(i)] = uint32_t(e);
    }
    out.recompute_degree();
    return out;
}

bool Monomial::divides(const Monomial& divisor_of) const {
    if (nvars_ != divisor_of.nvars_) fail(errc::ring_mismatch, "monomials from different ambients");
    if (degree_ > divisor_of.degree_) return false;
    for (int i = 0; i < nvars_; ++i) {
        if (exp_[size_t(i)] > divisor_of.exp_[size_t(i)]) return false;
    }
    return true;
}

Monomial Monomial::divide_exact(const Monomial& divisor) const {
    if (!divisor.divides(*this)) fail(errc::arithmetic_bug, "inexact monomial division");
    Monomial out(nvars_);
    for (int i = 0; i < nvars_; ++i) out.exp_[size_t(i)] = exp_[size_t(i)] - divisor.exp_[size_t(i)];
    out.recompute_degree();
    return out;
}

Monomial Monomial::pow(uint64_t k) const {
    Monomial out(nvars_);
    for (int i = 0; i < nvars_; ++i) {
        uint64_t e = uint64_t(exp_[size_t(i)]) * k;
        if (e >= kMaxExponent) fail(errc::exponent_overflow, "exponent overflow in power");
        out.exp_[size_t(i)] = uint32_t(e);
    }
    out.recompute_degree();
    return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    if (a.nvars_ != b.nvars_) fail(errc::ring_mismatch, "monomials from different ambients");
    Monomial out(a.nvars_);
    for (int i = 0; i < a.nvars_; ++i)
        out.exp_[size_t(i)] = std::max(a.exp_[size_t(i)], b.exp_[size_t(i)]);
    out.recompute_degree();
    return out;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    if (a.nvars_ != b.nvars_) fail(errc::ring_mismatch, "monomials from different ambients");
    Monomial out(a.nvars_);
    for (int i = 0; i < a.nvars_; ++i)
        out.exp_[size_t(i)] = std::min(a.exp_[size_t(i)], b.exp_[size_t(i)]);
    out.recompute_degree();
    return out;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
    if (a.nvars_ != b.nvars_) fail(errc::ring_mismatch, "monomials from different ambients");
    for (int i = 0; i < a.nvars_; ++i) {
        if (a.exp_[size_t(i)] > 0 && b.exp_[size_t(i)] > 0) return false;
    }
    return true;
}

Monomial Monomial::without_variable(int index) const {
    if (exp_[size_t(index)] != 0)
        fail(errc::arithmetic_bug, "dropping a variable with nonzero exponent");
    Monomial out(nvars_ - 1);
    int j = 0;
    for (int i = 0; i < nvars_; ++i) {
        if (i != index) out.exp_[size_t(j++)] = exp_[size_t(i)];
    }
    out.recompute_degree();
    return out;
}

Monomial Monomial::with_variable_inserted(int index) const {
    Monomial out(nvars_ + 1);
    int j = 0;
    for (int i = 0; i < nvars_ + 1; ++i) {
        out.exp_[size_t(i)] = (i == index) ? 0 : exp_[size_t(j++)];
    }
    out.recompute_degree();
    return out;
}

const char* order_kind_name(OrderKind kind) {
    switch (kind) {
        case OrderKind::lex: return "lex";
        case OrderKind::deglex: return "deglex";
        case OrderKind::degrevlex: return "degrevlex";
    }
    return "?";
}

MonomialOrder::MonomialOrder(OrderKind kind, int nvars) : kind_(kind) {
    check_nvars(nvars);
    precedence_.resize(size_t(nvars));
    std::iota(precedence_.begin(), precedence_.end(), uint8_t(0));
}

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<uint8_t> precedence)
    : kind_(kind), precedence_(std::move(precedence)) {
    check_nvars(int(precedence_.size()));
    std::vector<bool> seen(precedence_.size(), false);
    for (uint8_t v : precedence_) {
        if (v >= precedence_.size() || seen[v])
            fail(errc::invalid_argument, "precedence is not a permutation");
        seen[v] = true;
    }
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.nvars() != int(precedence_.size()) || b.nvars() != int(precedence_.size()))
        fail(errc::ring_mismatch, "monomial/order ambient mismatch");
    const int n = int(precedence_.size());
    if (kind_ == OrderKind::deglex || kind_ == OrderKind::degrevlex) {
        if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    }
    if (kind_ == OrderKind::degrevlex) {
        // tie on degree: the last differing variable decides, smaller exponent wins
        for (int j = n; j-- > 0;) {
            uint32_t ea = a.exponent(precedence_[size_t(j)]);
            uint32_t eb = b.exponent(precedence_[size_t(j)]);
            if (ea != eb) return ea > eb ? -1 : 1;
        }
        return 0;
    }
    for (int j = 0; j < n; ++j) {
        uint32_t ea = a.exponent(precedence_[size_t(j)]);
        uint32_t eb = b.exponent(precedence_[size_t(j)]);
        if (ea != eb) return ea < eb ? -1 : 1;
    }
    return 0;
}

}  // namespace hklab
