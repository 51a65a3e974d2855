#include "hklab/bigint.hpp"

#include <algorithm>
#include <cmath>

#include "hklab/errors.hpp"

namespace hklab {

namespace {
constexpr uint64_t kBase = uint64_t(1) << 32;
}

BigInt::BigInt(int64_t v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // careful with INT64_MIN: negate in unsigned space
    uint64_t u = v < 0 ? ~static_cast<uint64_t>(v) + 1 : static_cast<uint64_t>(v);
    mag_.push_back(static_cast<uint32_t>(u & 0xffffffffu));
    if (u >> 32) mag_.push_back(static_cast<uint32_t>(u >> 32));
}

BigInt BigInt::from_string(const std::string& decimal) {
    BigInt out;
    size_t i = 0;
    bool neg = false;
    if (i < decimal.size() && (decimal[i] == '-' || decimal[i] == '+')) {
        neg = decimal[i] == '-';
        ++i;
    }
    if (i == decimal.size()) fail(errc::invalid_argument, "empty integer literal");
    for (; i < decimal.size(); ++i) {
        char c = decimal[i];
        if (c < '0' || c > '9') fail(errc::invalid_argument, "bad digit in integer literal");
        out = out * BigInt(10) + BigInt(c - '0');
    }
    if (neg) out = -out;
    return out;
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<uint32_t> out(big.size() + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < big.size(); ++i) {
        uint64_t s = carry + big[i] + (i < small.size() ? small[i] : 0);
        out[i] = static_cast<uint32_t>(s & 0xffffffffu);
        carry = s >> 32;
    }
    out[big.size()] = static_cast<uint32_t>(carry);
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
    std::vector<uint32_t> out(a.size(), 0);
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t s = int64_t(a[i]) - borrow - (i < b.size() ? int64_t(b[i]) : 0);
        if (s < 0) {
            s += int64_t(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out[i] = static_cast<uint32_t>(s);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> out(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < b.size(); ++j) {
            uint64_t s = uint64_t(a[i]) * b[j] + out[i + j] + carry;
            out[i + j] = static_cast<uint32_t>(s & 0xffffffffu);
            carry = s >> 32;
        }
        out[i + b.size()] += static_cast<uint32_t>(carry);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// Knuth algorithm D with base 2^32 limbs.
void BigInt::divmod_mag(const std::vector<uint32_t>& num, const std::vector<uint32_t>& den,
                        std::vector<uint32_t>& quot, std::vector<uint32_t>& rem) {
    quot.clear();
    rem.clear();
    if (den.empty()) fail(errc::division_by_zero, "bigint division by zero");
    if (cmp_mag(num, den) < 0) {
        rem = num;
        return;
    }
    if (den.size() == 1) {
        uint64_t d = den[0];
        quot.assign(num.size(), 0);
        uint64_t r = 0;
        for (size_t i = num.size(); i-- > 0;) {
            uint64_t cur = (r << 32) | num[i];
            quot[i] = static_cast<uint32_t>(cur / d);
            r = cur % d;
        }
        while (!quot.empty() && quot.back() == 0) quot.pop_back();
        if (r) rem.push_back(static_cast<uint32_t>(r));
        return;
    }

    // Normalize so the top limb of the divisor has its high bit set.
    int shift = 0;
    for (uint32_t top = den.back(); !(top & 0x80000000u); top <<= 1) ++shift;
    size_t n = den.size();
    size_t m = num.size() - n;

    std::vector<uint32_t> d(n), u(num.size() + 1, 0);
    for (size_t i = 0; i < n; ++i) {
        uint64_t lo = uint64_t(den[i]) << shift;
        if (i > 0 && shift) lo |= uint64_t(den[i - 1]) >> (32 - shift);
        d[i] = static_cast<uint32_t>(lo & 0xffffffffu);
    }
    for (size_t i = 0; i < num.size(); ++i) {
        uint64_t lo = uint64_t(num[i]) << shift;
        if (i > 0 && shift) lo |= uint64_t(num[i - 1]) >> (32 - shift);
        u[i] = static_cast<uint32_t>(lo & 0xffffffffu);
    }
    if (shift) u[num.size()] = static_cast<uint32_t>(uint64_t(num.back()) >> (32 - shift));

    quot.assign(m + 1, 0);
    for (size_t j = m + 1; j-- > 0;) {
        uint64_t top2 = (uint64_t(u[j + n]) << 32) | u[j + n - 1];
        uint64_t qhat = top2 / d[n - 1];
        uint64_t rhat = top2 % d[n - 1];
        while (qhat >= kBase ||
               qhat * d[n - 2] > ((rhat << 32) | u[j + n - 2])) {
            --qhat;
            rhat += d[n - 1];
            if (rhat >= kBase) break;
        }
        // multiply-subtract qhat * d from u[j .. j+n]
        int64_t borrow = 0;
        uint64_t carry = 0;
        for (size_t i = 0; i < n; ++i) {
            uint64_t p = qhat * d[i] + carry;
            carry = p >> 32;
            int64_t t = int64_t(u[i + j]) - int64_t(p & 0xffffffffu) - borrow;
            if (t < 0) {
                t += int64_t(kBase);
                borrow = 1;
            } else {
                borrow = 0;
            }
            u[i + j] = static_cast<uint32_t>(t);
        }
        int64_t t = int64_t(u[j + n]) - int64_t(carry) - borrow;
        if (t < 0) {
            // qhat was one too large: add the divisor back
            t += int64_t(kBase);
            --qhat;
            uint64_t c = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t s = uint64_t(u[i + j]) + d[i] + c;
                u[i + j] = static_cast<uint32_t>(s & 0xffffffffu);
                c = s >> 32;
            }
            t += int64_t(c);
            t &= int64_t(kBase) - 1;
        }
        u[j + n] = static_cast<uint32_t>(t);
        quot[j] = static_cast<uint32_t>(qhat);
    }
    while (!quot.empty() && quot.back() == 0) quot.pop_back();

    rem.assign(n, 0);
    for (size_t i = 0; i < n; ++i) {
        uint64_t lo = uint64_t(u[i]) >> shift;
        if (shift && i + 1 < u.size()) lo |= (uint64_t(u[i + 1]) << (32 - shift)) & 0xffffffffu;
        rem[i] = static_cast<uint32_t>(lo);
    }
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    out.sign_ = -out.sign_;
    return out;
}

BigInt BigInt::abs() const {
    BigInt out = *this;
    if (out.sign_ < 0) out.sign_ = 1;
    return out;
}

BigInt BigInt::operator+(const BigInt& rhs) const {
    if (sign_ == 0) return rhs;
    if (rhs.sign_ == 0) return *this;
    BigInt out;
    if (sign_ == rhs.sign_) {
        out.sign_ = sign_;
        out.mag_ = add_mag(mag_, rhs.mag_);
    } else {
        int c = cmp_mag(mag_, rhs.mag_);
        if (c == 0) return BigInt();
        if (c > 0) {
            out.sign_ = sign_;
            out.mag_ = sub_mag(mag_, rhs.mag_);
        } else {
            out.sign_ = rhs.sign_;
            out.mag_ = sub_mag(rhs.mag_, mag_);
        }
    }
    out.trim();
    return out;
}

BigInt BigInt::operator-(const BigInt& rhs) const { return *this + (-rhs); }

BigInt BigInt::operator*(const BigInt& rhs) const {
    BigInt out;
    if (sign_ == 0 || rhs.sign_ == 0) return out;
    out.sign_ = sign_ * rhs.sign_;
    out.mag_ = mul_mag(mag_, rhs.mag_);
    out.trim();
    return out;
}

void BigInt::divmod(const BigInt& lhs, const BigInt& rhs, BigInt& quot, BigInt& rem) {
    std::vector<uint32_t> q, r;
    divmod_mag(lhs.mag_, rhs.mag_, q, r);
    quot.mag_ = std::move(q);
    quot.sign_ = quot.mag_.empty() ? 0 : lhs.sign_ * rhs.sign_;
    rem.mag_ = std::move(r);
    rem.sign_ = rem.mag_.empty() ? 0 : lhs.sign_;
}

BigInt BigInt::operator/(const BigInt& rhs) const {
    BigInt q, r;
    divmod(*this, rhs, q, r);
    return q;
}

BigInt BigInt::operator%(const BigInt& rhs) const {
    BigInt q, r;
    divmod(*this, rhs, q, r);
    return r;
}

BigInt BigInt::pow(uint64_t exponent) const {
    BigInt base = *this;
    BigInt out(1);
    while (exponent) {
        if (exponent & 1) out *= base;
        exponent >>= 1;
        if (exponent) base *= base;
    }
    return out;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
    BigInt x = a.abs(), y = b.abs();
    while (!y.is_zero()) {
        BigInt q, r;
        divmod(x, y, q, r);
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

BigInt BigInt::factorial(uint32_t n) {
    BigInt out(1);
    for (uint32_t i = 2; i <= n; ++i) out *= BigInt(int64_t(i));
    return out;
}

std::strong_ordering BigInt::operator<=>(const BigInt& rhs) const {
    if (sign_ != rhs.sign_) return sign_ <=> rhs.sign_;
    int c = cmp_mag(mag_, rhs.mag_) * sign_;
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

bool BigInt::operator==(const BigInt& rhs) const {
    return sign_ == rhs.sign_ && mag_ == rhs.mag_;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    std::vector<uint32_t> work = mag_;
    std::string digits;
    // peel 9 decimal digits at a time
    while (!work.empty()) {
        uint64_t r = 0;
        for (size_t i = work.size(); i-- > 0;) {
            uint64_t cur = (r << 32) | work[i];
            work[i] = static_cast<uint32_t>(cur / 1000000000u);
            r = cur % 1000000000u;
        }
        while (!work.empty() && work.back() == 0) work.pop_back();
        for (int k = 0; k < 9; ++k) {
            digits.push_back(char('0' + r % 10));
            r /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

std::optional<int64_t> BigInt::to_int64() const {
    if (mag_.size() > 2) return std::nullopt;
    uint64_t u = 0;
    if (mag_.size() >= 1) u = mag_[0];
    if (mag_.size() == 2) u |= uint64_t(mag_[1]) << 32;
    if (sign_ >= 0) {
        if (u > uint64_t(INT64_MAX)) return std::nullopt;
        return int64_t(u);
    }
    if (u > uint64_t(INT64_MAX) + 1) return std::nullopt;
    return -int64_t(u - 1) - 1;
}

double BigInt::to_double() const {
    double v = 0;
    for (size_t i = mag_.size(); i-- > 0;) v = v * 4294967296.0 + mag_[i];
    return sign_ < 0 ? -v : v;
}

}  // namespace hklab
