#include "hklab/stirling.hpp"

#include <algorithm>
#include <vector>

#include "hklab/errors.hpp"

namespace hklab {

BigInt binomial(int64_t n, int64_t k) {
    if (k < 0 || k > n || n < 0) return BigInt(0);
    if (k > n - k) k = n - k;
    BigInt out(1);
    for (int64_t i = 1; i <= k; ++i) {
        out *= BigInt(n - k + i);
        out = out / BigInt(i);  // exact: product of i consecutive integers
    }
    return out;
}

BigInt factorial(uint32_t n) { return BigInt::factorial(n); }

namespace {

constexpr uint32_t kTableRows = 64;

/// Triangular memo table built on first use; rows 0..kTableRows.
class StirlingTable {
  public:
    const BigInt& at(uint32_t n, uint32_t k) const { return rows_[n][k]; }

    static const StirlingTable& instance() {
        static StirlingTable table;
        return table;
    }

  private:
    StirlingTable() {
        rows_.resize(kTableRows + 1);
        rows_[0] = {BigInt(1)};
        for (uint32_t n = 1; n <= kTableRows; ++n) {
            rows_[n].resize(n + 1);
            rows_[n][0] = BigInt(0);
            for (uint32_t k = 1; k <= n; ++k) {
                BigInt carry = rows_[n - 1][k - 1];
                if (k <= n - 1) carry += BigInt(int64_t(k)) * rows_[n - 1][k];
                rows_[n][k] = carry;
            }
        }
    }

    std::vector<std::vector<BigInt>> rows_;
};

/// Row-by-row recurrence for arguments past the memo table.
BigInt stirling2_large(uint32_t n, uint32_t k) {
    std::vector<BigInt> row(k + 1, BigInt(0));
    row[0] = BigInt(1);  // row for n = 0
    for (uint32_t m = 1; m <= n; ++m) {
        for (uint32_t j = std::min(k, m); j >= 1; --j) {
            row[j] = BigInt(int64_t(j)) * row[j] + row[j - 1];
        }
        row[0] = BigInt(0);
    }
    return row[k];
}

}  // namespace

BigInt stirling2(uint32_t n, uint32_t k) {
    if (k > n) return BigInt(0);
    if (n <= kTableRows) return StirlingTable::instance().at(n, k);
    return stirling2_large(n, k);
}

BigInt stirling2_explicit(uint32_t n, uint32_t k) {
    if (k > n) return BigInt(0);
    if (n == 0 && k == 0) return BigInt(1);
    if (k == 0) return BigInt(0);
    BigInt sum(0);
    for (uint32_t i = 0; i <= k; ++i) {
        BigInt term = binomial(k, i) * BigInt(int64_t(i)).pow(n);
        if ((k - i) % 2 == 1) term = -term;
        sum += term;
    }
    BigInt kfact = factorial(k), q, r;
    BigInt::divmod(sum, kfact, q, r);
    if (!r.is_zero())
        fail(errc::arithmetic_bug, "explicit Stirling sum not divisible by k!");
    return q;
}

bool falling_factorial_identity_check(uint32_t n, uint32_t x) {
    BigInt lhs = BigInt(int64_t(x)).pow(n);
    BigInt rhs(0);
    for (uint32_t k = 0; k <= n; ++k) {
        BigInt falling(1);
        for (uint32_t i = 0; i < k; ++i) falling *= BigInt(int64_t(x) - int64_t(i));
        rhs += stirling2(n, k) * falling;
    }
    return lhs == rhs;
}

}  // namespace hklab
