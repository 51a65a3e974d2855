#include "hklab/rational.hpp"

#include "hklab/errors.hpp"

namespace hklab {

BigRational::BigRational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) fail(errc::division_by_zero, "rational with zero denominator");
    normalize();
}

void BigRational::normalize() {
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (g != BigInt(1)) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

BigRational BigRational::from_string(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return BigRational(BigInt::from_string(text));
    return BigRational(BigInt::from_string(text.substr(0, slash)),
                       BigInt::from_string(text.substr(slash + 1)));
}

BigRational BigRational::operator-() const {
    BigRational out = *this;
    out.num_ = -out.num_;
    return out;
}

BigRational BigRational::operator+(const BigRational& rhs) const {
    return BigRational(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

BigRational BigRational::operator-(const BigRational& rhs) const { return *this + (-rhs); }

BigRational BigRational::operator*(const BigRational& rhs) const {
    return BigRational(num_ * rhs.num_, den_ * rhs.den_);
}

BigRational BigRational::operator/(const BigRational& rhs) const {
    if (rhs.is_zero()) fail(errc::division_by_zero, "rational division by zero");
    return BigRational(num_ * rhs.den_, den_ * rhs.num_);
}

BigRational BigRational::abs() const {
    BigRational out = *this;
    out.num_ = out.num_.abs();
    return out;
}

std::strong_ordering BigRational::operator<=>(const BigRational& rhs) const {
    return num_ * rhs.den_ <=> rhs.num_ * den_;
}

std::string BigRational::to_fraction_string() const {
    if (is_integer()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

std::string BigRational::to_decimal_string(int places) const {
    BigInt scale = BigInt(10).pow(static_cast<uint64_t>(places));
    BigInt scaled = num_.abs() * scale;
    BigInt q, r;
    BigInt::divmod(scaled, den_, q, r);
    BigInt twice = r * BigInt(2);
    if (twice > den_) {
        q += BigInt(1);
    } else if (twice == den_) {
        // half: round to even
        BigInt half = q % BigInt(2);
        if (half == BigInt(1)) q += BigInt(1);
    }
    std::string digits = q.to_string();
    if (static_cast<int>(digits.size()) <= places)
        digits.insert(digits.begin(), places + 1 - digits.size(), '0');
    std::string out;
    if (num_.is_negative() && !q.is_zero()) out.push_back('-');
    out += digits.substr(0, digits.size() - places);
    if (places > 0) {
        out.push_back('.');
        out += digits.substr(digits.size() - places);
    }
    return out;
}

double BigRational::to_double() const { return num_.to_double() / den_.to_double(); }

}  // namespace hklab
