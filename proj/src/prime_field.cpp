#include "hklab/prime_field.hpp"

#include "hklab/errors.hpp"

namespace hklab {

bool is_prime_u32(uint32_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (uint64_t d = 3; d * d <= p; d += 2) {
        if (p % d == 0) return false;
    }
    return true;
}

void require_prime(uint32_t p) {
    if (!is_prime_u32(p))
        fail(errc::invalid_characteristic, "characteristic " + std::to_string(p) + " is not prime");
    // products of residues must fit in int64
    if (p >= (uint32_t(1) << 31))
        fail(errc::invalid_characteristic, "characteristic must stay below 2^31");
}

uint32_t mod_add(uint32_t a, uint32_t b, uint32_t p) {
    uint64_t s = uint64_t(a) + b;
    return s >= p ? uint32_t(s - p) : uint32_t(s);
}

uint32_t mod_sub(uint32_t a, uint32_t b, uint32_t p) {
    return a >= b ? a - b : a + p - b;
}

uint32_t mod_mul(uint32_t a, uint32_t b, uint32_t p) {
    return uint32_t(uint64_t(a) * b % p);
}

uint32_t mod_neg(uint32_t a, uint32_t p) { return a == 0 ? 0 : p - a; }

uint32_t mod_pow(uint32_t a, uint64_t e, uint32_t p) {
    uint64_t base = a % p, out = 1 % p;
    while (e) {
        if (e & 1) out = out * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return uint32_t(out);
}

uint32_t mod_inv(uint32_t a, uint32_t p) {
    if (a % p == 0) fail(errc::division_by_zero, "inverse of zero in F_" + std::to_string(p));
    int64_t r0 = p, r1 = a % p, t0 = 0, t1 = 1;
    while (r1 != 0) {
        int64_t q = r0 / r1;
        int64_t r2 = r0 - q * r1;
        int64_t t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    return uint32_t(t0 < 0 ? t0 + p : t0);
}

PrimeFieldElement::PrimeFieldElement(int64_t value, uint32_t p) : p_(p) {
    require_prime(p);
    int64_t v = value % int64_t(p);
    if (v < 0) v += p;
    value_ = uint32_t(v);
}

void PrimeFieldElement::require_same_field(const PrimeFieldElement& rhs) const {
    if (p_ != rhs.p_)
        fail(errc::ring_mismatch, "field elements with moduli " + std::to_string(p_) + " and " +
                                      std::to_string(rhs.p_));
}

PrimeFieldElement PrimeFieldElement::operator+(const PrimeFieldElement& rhs) const {
    require_same_field(rhs);
    return PrimeFieldElement(mod_add(value_, rhs.value_, p_), p_);
}

PrimeFieldElement PrimeFieldElement::operator-(const PrimeFieldElement& rhs) const {
    require_same_field(rhs);
    return PrimeFieldElement(mod_sub(value_, rhs.value_, p_), p_);
}

PrimeFieldElement PrimeFieldElement::operator*(const PrimeFieldElement& rhs) const {
    require_same_field(rhs);
    return PrimeFieldElement(mod_mul(value_, rhs.value_, p_), p_);
}

PrimeFieldElement PrimeFieldElement::operator-() const {
    return PrimeFieldElement(mod_neg(value_, p_), p_);
}

PrimeFieldElement PrimeFieldElement::inverse() const {
    return PrimeFieldElement(mod_inv(value_, p_), p_);
}

PrimeFieldElement PrimeFieldElement::pow(uint64_t e) const {
    return PrimeFieldElement(mod_pow(value_, e, p_), p_);
}

std::string PrimeFieldElement::to_string() const { return std::to_string(value_); }

PrimeFieldElement field_arith(uint32_t p, FieldOp op, int64_t a, std::optional<int64_t> b) {
    PrimeFieldElement x(a, p);
    switch (op) {
        case FieldOp::add:
            if (!b) fail(errc::invalid_argument, "add needs two operands");
            return x + PrimeFieldElement(*b, p);
        case FieldOp::mul:
            if (!b) fail(errc::invalid_argument, "mul needs two operands");
            return x * PrimeFieldElement(*b, p);
        case FieldOp::neg:
            return -x;
        case FieldOp::inv:
            return x.inverse();
    }
    fail(errc::invalid_argument, "unknown field operation");
}

}  // namespace hklab
