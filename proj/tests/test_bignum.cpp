#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bilform/bignum.hpp"

using bilform::BigUint;
using bilform::gaussian_binomial;

TEST_CASE("small values behave like machine integers") {
    for (std::uint64_t a : {0ull, 1ull, 7ull, 255ull, 1ull << 40}) {
        for (std::uint64_t b : {0ull, 1ull, 9ull, 1000003ull}) {
            CHECK((BigUint(a) + BigUint(b)).to_u64() == a + b);
            CHECK((BigUint(a) * BigUint(b)).to_u64() == a * b);
            if (a >= b) CHECK((BigUint(a) - BigUint(b)).to_u64() == a - b);
            if (b != 0) {
                std::uint64_t rem = 0;
                CHECK(BigUint(a).divmod(b, rem).to_u64() == a / b);
                CHECK(rem == a % b);
            }
        }
    }
}

TEST_CASE("decimal rendering past 64 bits") {
    CHECK(BigUint::pow(2, 100).to_string() == "1267650600228229401496703205376");
    CHECK(BigUint(0).to_string() == "0");
    CHECK(BigUint::pow(10, 18).to_string() == "1000000000000000000");
}

TEST_CASE("comparisons and arithmetic round trips") {
    BigUint big = BigUint::pow(3, 50);
    CHECK(big > BigUint::pow(3, 49));
    CHECK(big - big == BigUint(0));
    CHECK((big * BigUint(7)).div_exact(7) == big);
    CHECK_THROWS(big.div_exact(11));  // 3^50 is not divisible by 11
    CHECK(big.to_double() == doctest::Approx(7.178979876918526e23).epsilon(1e-12));
}

TEST_CASE("gaussian binomial basics") {
    CHECK(gaussian_binomial(5, 0, 2).to_u64() == 1);
    CHECK(gaussian_binomial(2, 1, 2).to_u64() == 3);       // the 3 lines of F_2^2
    CHECK(gaussian_binomial(3, 1, 3).to_u64() == 13);      // (27-1)/(3-1)
    CHECK_THROWS_AS(gaussian_binomial(2, 3, 2), std::invalid_argument);
}

TEST_CASE("gaussian binomial symmetry, a <= 12, q in {2,3,4}") {
    for (std::uint64_t q : {2ull, 3ull, 4ull})
        for (std::uint32_t a = 0; a <= 12; ++a)
            for (std::uint32_t b = 0; b <= a; ++b)
                CHECK(gaussian_binomial(a, b, q) == gaussian_binomial(a, a - b, q));
}

TEST_CASE("gaussian binomial recurrence") {
    // [a b]_q = [a-1 b-1]_q + q^b [a-1 b]_q
    for (std::uint64_t q : {2ull, 3ull})
        for (std::uint32_t a = 1; a <= 10; ++a)
            for (std::uint32_t b = 1; b < a; ++b)
                CHECK(gaussian_binomial(a, b, q) ==
                      gaussian_binomial(a - 1, b - 1, q) +
                          BigUint::pow(q, b) * gaussian_binomial(a - 1, b, q));
}
