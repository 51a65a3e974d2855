#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hklab/monomial.hpp"
#include "hklab/ring.hpp"

namespace hklab {

struct Term {
    Monomial mono;
    uint32_t coeff;  // residue in [1, p); zero coefficients are never stored

    bool operator==(const Term&) const = default;
};

/// A multivariate polynomial over F_p in canonical form: terms strictly
/// decreasing under the ring's monomial order, no zero coefficients.
class Polynomial {
  public:
    explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}
    /// Normalizes an arbitrary term list (sorts, merges, drops zeros).
    Polynomial(Ring ring, std::vector<Term> terms);

    static Polynomial zero(Ring ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(Ring ring, int64_t c);
    static Polynomial variable(Ring ring, int index);
    static Polynomial from_monomial(Ring ring, const Monomial& m, int64_t c = 1);

    const Ring& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    size_t term_count() const { return terms_.size(); }

    const Term& leading_term() const;
    const Monomial& leading_monomial() const;
    uint32_t leading_coeff() const;
    uint32_t total_degree() const;  // 0 for the zero polynomial

    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator-() const;
    bool operator==(const Polynomial& rhs) const;

    Polynomial scaled(uint32_t c) const;                     // c * this
    Polynomial term_multiplied(const Term& t) const;         // t * this
    Polynomial pow(uint64_t k) const;
    Polynomial monic() const;

    /// this - c * m * g, the Gröbner reduction step, as one sorted merge.
    Polynomial reduce_step(uint32_t c, const Monomial& m, const Polynomial& g) const;

    /// Re-sorts the terms into another ring's order (same p and variables).
    Polynomial converted_to(const Ring& target) const;

    std::string to_string() const;

  private:
    Ring ring_;
    std::vector<Term> terms_;

    void normalize();
};

}  // namespace hklab
