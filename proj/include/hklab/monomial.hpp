#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace hklab {

/// Hard cap on ambient variables; the largest instance this toolkit handles
/// is five ring variables plus one elimination variable.
constexpr int kMaxVars = 8;

/// Exponents stay below this bound so that sums of kMaxVars of them fit a
/// 32-bit degree. Frobenius powers need roughly d*q, far below the cap.
constexpr uint32_t kMaxExponent = uint32_t(1) << 28;

/// A power product x_0^{e_0} ... x_{n-1}^{e_{n-1}} with its total degree
/// cached. Immutable after construction.
class Monomial {
  public:
    explicit Monomial(int nvars);
    Monomial(int nvars, std::initializer_list<uint32_t> exps);
    static Monomial from_exponents(const std::vector<uint32_t>& exps);
    static Monomial variable(int nvars, int index, uint32_t power = 1);

    int nvars() const { return nvars_; }
    uint32_t exponent(int i) const { return exp_[size_t(i)]; }
    uint32_t degree() const { return degree_; }
    bool is_one() const { return degree_ == 0; }

    Monomial operator*(const Monomial& rhs) const;
    bool divides(const Monomial& divisor_of) const;  // this | divisor_of
    Monomial divide_exact(const Monomial& divisor) const;  // this / divisor
    Monomial pow(uint64_t k) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);
    static Monomial gcd(const Monomial& a, const Monomial& b);
    static bool coprime(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& rhs) const = default;

    /// Drops variable `index`, shrinking the ambient by one. The exponent at
    /// that position must be zero.
    Monomial without_variable(int index) const;
    /// Inserts a zero exponent at position `index`.
    Monomial with_variable_inserted(int index) const;

  private:
    std::array<uint32_t, kMaxVars> exp_{};
    int nvars_ = 0;
    uint32_t degree_ = 0;

    void recompute_degree();
    void check_width() const;
};

enum class OrderKind { lex, deglex, degrevlex };

const char* order_kind_name(OrderKind kind);

/// A monomial order: one of the three standard kinds plus a variable
/// precedence (precedence[0] is the most significant variable).
class MonomialOrder {
  public:
    MonomialOrder(OrderKind kind, int nvars);
    MonomialOrder(OrderKind kind, std::vector<uint8_t> precedence);

    static MonomialOrder lex(int nvars) { return {OrderKind::lex, nvars}; }
    static MonomialOrder deglex(int nvars) { return {OrderKind::deglex, nvars}; }
    static MonomialOrder degrevlex(int nvars) { return {OrderKind::degrevlex, nvars}; }

    OrderKind kind() const { return kind_; }
    int nvars() const { return int(precedence_.size()); }
    const std::vector<uint8_t>& precedence() const { return precedence_; }

    /// -1, 0, +1 for a < b, a = b, a > b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    bool operator==(const MonomialOrder& rhs) const = default;

  private:
    OrderKind kind_;
    std::vector<uint8_t> precedence_;
};

}  // namespace hklab
