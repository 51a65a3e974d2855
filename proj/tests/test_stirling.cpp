#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hklab/stirling.hpp"
#include "support/set_partitions.hpp"

using namespace hklab;

TEST_CASE("binomial anchors") {
    CHECK(binomial(4, 2) == BigInt(6));
    CHECK(binomial(10, 0) == BigInt(1));
    CHECK(binomial(0, 0) == BigInt(1));
    CHECK(binomial(5, 7) == BigInt(0));
    CHECK(binomial(5, -1) == BigInt(0));
    CHECK(binomial(52, 26).to_string() == "495918532948104");
    // S(s+1, s) = C(s+1, 2) at s = 3
    CHECK(binomial(4, 2) == stirling2(4, 3));
}

TEST_CASE("stirling2 anchors") {
    CHECK(stirling2(0, 0) == BigInt(1));
    CHECK(stirling2(3, 2) == BigInt(3));
    CHECK(stirling2(4, 3) == BigInt(6));
    CHECK(stirling2(5, 3) == BigInt(25));
    CHECK(stirling2(7, 7) == BigInt(1));
    CHECK(stirling2(6, 0) == BigInt(0));
    CHECK(stirling2(2, 5) == BigInt(0));
    for (uint32_t n = 1; n <= 12; ++n) CHECK(stirling2(n, 1) == BigInt(1));
}

TEST_CASE("explicit sum equals the recurrence for n <= 30") {
    for (uint32_t n = 0; n <= 30; ++n) {
        for (uint32_t k = 0; k <= n; ++k) {
            CHECK(stirling2_explicit(n, k) == stirling2(n, k));
        }
    }
}

TEST_CASE("explicit sum anchors") {
    CHECK(stirling2_explicit(3, 2) == BigInt(3));
    CHECK(stirling2_explicit(5, 3) == BigInt(25));
    for (uint32_t n = 1; n <= 10; ++n) CHECK(stirling2_explicit(n, 1) == BigInt(1));
}

TEST_CASE("recurrence matches brute-force partition counting for n <= 10") {
    for (uint32_t n = 0; n <= 10; ++n) {
        for (uint32_t k = 0; k <= n; ++k) {
            CHECK(stirling2(n, k) ==
                  BigInt(int64_t(testsupport::count_partitions_brute_force(n, k))));
        }
    }
}

TEST_CASE("falling factorial identity for n <= 15, x <= 10") {
    for (uint32_t n = 0; n <= 15; ++n) {
        for (uint32_t x = 0; x <= 10; ++x) {
            CHECK(falling_factorial_identity_check(n, x));
        }
    }
}

TEST_CASE("row sums are Bell numbers for n <= 15") {
    auto bells = testsupport::bell_numbers(15);
    for (uint32_t n = 0; n <= 15; ++n) {
        BigInt row_sum(0);
        for (uint32_t k = 0; k <= n; ++k) row_sum += stirling2(n, k);
        CHECK(row_sum == bells[n]);
    }
}

TEST_CASE("values beyond the memo table stay consistent") {
    // S(65,2) = 2^64 - 1
    CHECK(stirling2(65, 2).to_string() == "18446744073709551615");
    CHECK(stirling2(70, 70) == BigInt(1));
    CHECK(stirling2(66, 1) == BigInt(1));
}
