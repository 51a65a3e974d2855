#pragma once

// Exhaustive linear-algebra length oracle, independent of the Gröbner path:
// for generators homogeneous under a (possibly weighted) grading the
// quotient is graded, and the dimension of each graded piece is
// (#monomials of that degree) minus the rank of the
// multiplication-by-generators matrix, row-reduced over F_p. Monomial
// generators contribute unit rows, so their multiples drop out as columns
// up front. Summation stops once a full window of max(weight) consecutive
// pieces is empty: every higher monomial is then a variable times an
// already-vanished piece.

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "hklab/errors.hpp"
#include "hklab/polynomial.hpp"
#include "hklab/prime_field.hpp"
#include "hklab/ring.hpp"

namespace hklab::testsupport {

inline uint64_t weighted_degree(const Monomial& m, const std::vector<uint32_t>& weights) {
    uint64_t d = 0;
    for (int i = 0; i < m.nvars(); ++i) d += uint64_t(m.exponent(i)) * weights[size_t(i)];
    return d;
}

inline bool is_homogeneous(const Polynomial& f, const std::vector<uint32_t>& weights) {
    if (f.is_zero()) return true;
    uint64_t d = weighted_degree(f.terms().front().mono, weights);
    for (const auto& t : f.terms()) {
        if (weighted_degree(t.mono, weights) != d) return false;
    }
    return true;
}

namespace detail {

inline void enumerate_weighted(int nvars, uint64_t degree, const std::vector<uint32_t>& weights,
                               std::vector<uint32_t>& point, int position,
                               std::vector<Monomial>& out) {
    if (position == nvars - 1) {
        uint32_t w = weights[size_t(position)];
        if (degree % w == 0) {
            point[size_t(position)] = uint32_t(degree / w);
            out.push_back(Monomial::from_exponents(point));
        }
        return;
    }
    uint32_t w = weights[size_t(position)];
    for (uint64_t e = 0; e * w <= degree; ++e) {
        point[size_t(position)] = uint32_t(e);
        enumerate_weighted(nvars, degree - e * w, weights, point, position + 1, out);
    }
}

inline std::vector<Monomial> monomials_of_degree(int nvars, uint64_t degree,
                                                 const std::vector<uint32_t>& weights) {
    std::vector<Monomial> out;
    if (nvars == 0) {
        if (degree == 0) out.push_back(Monomial(0));
        return out;
    }
    std::vector<uint32_t> point(static_cast<size_t>(nvars), 0u);
    enumerate_weighted(nvars, degree, weights, point, 0, out);
    return out;
}

inline std::vector<Monomial> monomials_of_degree(int nvars, uint64_t degree) {
    return monomials_of_degree(nvars, degree,
                               std::vector<uint32_t>(static_cast<size_t>(nvars), 1u));
}

struct Eliminator {
    uint32_t p;
    int cols;
    std::vector<std::vector<uint32_t>> pivot_rows;  // normalized, leading 1
    std::vector<int> pivot_col;

    explicit Eliminator(uint32_t p_, int cols_) : p(p_), cols(cols_) {}

    // reduces the row in place; returns true when it became a new pivot
    bool insert(std::vector<uint32_t>& row) {
        for (size_t k = 0; k < pivot_rows.size(); ++k) {
            uint32_t c = row[size_t(pivot_col[k])];
            if (c == 0) continue;
            const auto& pivot = pivot_rows[k];
            for (int j = pivot_col[k]; j < cols; ++j) {
                if (pivot[size_t(j)])
                    row[size_t(j)] = mod_sub(row[size_t(j)], mod_mul(c, pivot[size_t(j)], p), p);
            }
        }
        int lead = -1;
        for (int j = 0; j < cols; ++j) {
            if (row[size_t(j)]) {
                lead = j;
                break;
            }
        }
        if (lead < 0) return false;
        uint32_t inv = mod_inv(row[size_t(lead)], p);
        for (int j = lead; j < cols; ++j) row[size_t(j)] = mod_mul(row[size_t(j)], inv, p);
        pivot_rows.push_back(row);
        pivot_col.push_back(lead);
        return true;
    }
};

}  // namespace detail

/// dim_k R/(gens) for generators homogeneous under the given weights (all
/// weights 1 when omitted); throws NotArtinian when the graded pieces fail
/// to vanish within a generous degree window.
inline uint64_t oracle_quotient_length(const Ring& ring, const std::vector<Polynomial>& gens,
                                       std::vector<uint32_t> weights = {}) {
    const int nvars = ring->nvars();
    if (weights.empty()) weights.assign(static_cast<size_t>(nvars), 1u);
    if (int(weights.size()) != nvars)
        fail(errc::invalid_argument, "one weight per variable required");
    uint32_t max_weight = *std::max_element(weights.begin(), weights.end());

    std::vector<Monomial> monomial_gens;
    std::vector<Polynomial> poly_gens;
    uint64_t max_gen_degree = 0;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (!is_homogeneous(g, weights))
            fail(errc::invalid_argument, "length oracle needs homogeneous generators");
        max_gen_degree =
            std::max(max_gen_degree, weighted_degree(g.leading_monomial(), weights));
        if (g.is_monomial()) {
            monomial_gens.push_back(g.leading_monomial());
        } else {
            poly_gens.push_back(g);
        }
    }

    const uint32_t p = ring->p;
    const uint64_t degree_cap = 65536;
    uint64_t total = 0;
    uint32_t empty_run = 0;

    for (uint64_t d = 0;; ++d) {
        if (d > degree_cap)
            fail(errc::not_artinian, "oracle found no empty graded window within the degree cap");
        std::vector<Monomial> all = detail::monomials_of_degree(nvars, d, weights);

        // columns: monomials outside the monomial-generated part
        std::map<std::vector<uint32_t>, int> column_of;
        std::vector<Monomial> columns;
        for (const auto& m : all) {
            bool covered = false;
            for (const auto& g : monomial_gens) {
                if (g.divides(m)) {
                    covered = true;
                    break;
                }
            }
            if (!covered) {
                std::vector<uint32_t> key(static_cast<size_t>(nvars), 0u);
                for (int i = 0; i < nvars; ++i) key[size_t(i)] = m.exponent(i);
                column_of[key] = int(columns.size());
                columns.push_back(m);
            }
        }

        uint64_t dim = 0;
        if (!columns.empty()) {
            detail::Eliminator elim(p, int(columns.size()));
            uint64_t rank = 0;
            for (const auto& f : poly_gens) {
                uint64_t fd = weighted_degree(f.leading_monomial(), weights);
                if (fd > d) continue;
                for (const auto& m : detail::monomials_of_degree(nvars, d - fd, weights)) {
                    std::vector<uint32_t> row(columns.size(), 0);
                    bool nonzero = false;
                    for (const auto& t : f.terms()) {
                        Monomial prod = t.mono * m;
                        std::vector<uint32_t> key(static_cast<size_t>(nvars), 0u);
                        for (int i = 0; i < nvars; ++i) key[size_t(i)] = prod.exponent(i);
                        auto it = column_of.find(key);
                        if (it == column_of.end()) continue;  // covered column
                        row[size_t(it->second)] = mod_add(row[size_t(it->second)], t.coeff, p);
                        nonzero = true;
                    }
                    if (nonzero && elim.insert(row)) {
                        if (++rank == columns.size()) break;
                    }
                }
                if (rank == columns.size()) break;
            }
            dim = columns.size() - rank;
        }

        total += dim;
        empty_run = dim == 0 ? empty_run + 1 : 0;
        if (empty_run >= max_weight && d >= max_gen_degree) break;
    }
    return total;
}

}  // namespace hklab::testsupport
