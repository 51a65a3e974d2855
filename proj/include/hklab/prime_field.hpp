#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace hklab {

/// Primality by trial division up to sqrt(p); p fits a machine word.
bool is_prime_u32(uint32_t p);

/// Throws InvalidCharacteristic unless p is prime.
void require_prime(uint32_t p);

// Modular arithmetic helpers on residues in [0, p). Callers guarantee the
// range; p < 2^31 so products fit in int64.
uint32_t mod_add(uint32_t a, uint32_t b, uint32_t p);
uint32_t mod_sub(uint32_t a, uint32_t b, uint32_t p);
uint32_t mod_mul(uint32_t a, uint32_t b, uint32_t p);
uint32_t mod_neg(uint32_t a, uint32_t p);
uint32_t mod_pow(uint32_t a, uint64_t e, uint32_t p);
/// Inverse via extended Euclid; throws DivisionByZero on a = 0.
uint32_t mod_inv(uint32_t a, uint32_t p);

/// A residue in F_p together with its modulus. Construction validates the
/// characteristic; mixed-modulus arithmetic throws RingMismatch.
class PrimeFieldElement {
  public:
    PrimeFieldElement(int64_t value, uint32_t p);

    uint32_t value() const { return value_; }
    uint32_t modulus() const { return p_; }
    bool is_zero() const { return value_ == 0; }

    PrimeFieldElement operator+(const PrimeFieldElement& rhs) const;
    PrimeFieldElement operator-(const PrimeFieldElement& rhs) const;
    PrimeFieldElement operator*(const PrimeFieldElement& rhs) const;
    PrimeFieldElement operator-() const;
    PrimeFieldElement inverse() const;
    PrimeFieldElement pow(uint64_t e) const;

    bool operator==(const PrimeFieldElement& rhs) const = default;

    std::string to_string() const;

  private:
    uint32_t value_;
    uint32_t p_;

    void require_same_field(const PrimeFieldElement& rhs) const;
};

enum class FieldOp { add, mul, neg, inv };

/// Dispatch form used by the arithmetic test surface: neg/inv ignore b.
PrimeFieldElement field_arith(uint32_t p, FieldOp op, int64_t a,
                              std::optional<int64_t> b = std::nullopt);

}  // namespace hklab
