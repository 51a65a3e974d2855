#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hklab {

/// Arbitrary-precision signed integer, sign-magnitude over 32-bit limbs.
/// Sizes in this project stay small (a few dozen limbs), so all algorithms
/// are the schoolbook ones.
class BigInt {
  public:
    BigInt() = default;
    BigInt(int64_t v);  // NOLINT: deliberately implicit, mirrors integer literals

    static BigInt from_string(const std::string& decimal);

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    int sign() const { return sign_; }

    BigInt operator-() const;
    BigInt abs() const;

    BigInt operator+(const BigInt& rhs) const;
    BigInt operator-(const BigInt& rhs) const;
    BigInt operator*(const BigInt& rhs) const;
    BigInt operator/(const BigInt& rhs) const;  // truncated toward zero
    BigInt operator%(const BigInt& rhs) const;  // sign follows dividend

    BigInt& operator+=(const BigInt& rhs) { return *this = *this + rhs; }
    BigInt& operator-=(const BigInt& rhs) { return *this = *this - rhs; }
    BigInt& operator*=(const BigInt& rhs) { return *this = *this * rhs; }

    /// Quotient and remainder in one pass; |rem| < |rhs|, quotient truncated
    /// toward zero, remainder carries the dividend's sign.
    static void divmod(const BigInt& lhs, const BigInt& rhs, BigInt& quot, BigInt& rem);

    BigInt pow(uint64_t exponent) const;

    static BigInt gcd(const BigInt& a, const BigInt& b);  // always >= 0
    static BigInt factorial(uint32_t n);

    std::strong_ordering operator<=>(const BigInt& rhs) const;
    bool operator==(const BigInt& rhs) const;

    std::string to_string() const;
    /// Exact conversion when the value fits in int64, nullopt otherwise.
    std::optional<int64_t> to_int64() const;
    double to_double() const;

  private:
    int sign_ = 0;                 // -1, 0, +1
    std::vector<uint32_t> mag_;    // little-endian limbs, no trailing zeros

    void trim();
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b);
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b);  // requires a >= b
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b);
    static void divmod_mag(const std::vector<uint32_t>& num, const std::vector<uint32_t>& den,
                           std::vector<uint32_t>& quot, std::vector<uint32_t>& rem);
};

}  // namespace hklab
