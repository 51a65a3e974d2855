#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "hklab/bigint.hpp"

namespace hklab {

/// Exact rational number, always normalized: gcd(num, den) = 1, den > 0.
class BigRational {
  public:
    BigRational() : num_(0), den_(1) {}
    BigRational(int64_t v) : num_(v), den_(1) {}  // NOLINT: deliberately implicit
    BigRational(BigInt num) : num_(std::move(num)), den_(1) {}
    BigRational(BigInt num, BigInt den);
    BigRational(int64_t num, int64_t den) : BigRational(BigInt(num), BigInt(den)) {}

    /// Parses "a/b" or "a" (decimal integers, optional sign).
    static BigRational from_string(const std::string& text);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == BigInt(1); }

    BigRational operator-() const;
    BigRational operator+(const BigRational& rhs) const;
    BigRational operator-(const BigRational& rhs) const;
    BigRational operator*(const BigRational& rhs) const;
    BigRational operator/(const BigRational& rhs) const;

    BigRational& operator+=(const BigRational& rhs) { return *this = *this + rhs; }
    BigRational& operator-=(const BigRational& rhs) { return *this = *this - rhs; }
    BigRational& operator*=(const BigRational& rhs) { return *this = *this * rhs; }

    BigRational abs() const;

    std::strong_ordering operator<=>(const BigRational& rhs) const;
    bool operator==(const BigRational& rhs) const = default;

    /// "num/den", or just "num" when the denominator is 1.
    std::string to_fraction_string() const;
    /// Fixed-point decimal with `places` fractional digits, round half to even.
    std::string to_decimal_string(int places = 12) const;
    double to_double() const;

  private:
    BigInt num_;
    BigInt den_;

    void normalize();
};

}  // namespace hklab
