#include "doctest.h"

#include <random>

#include "expsum/errors.hpp"
#include "expsum/prime_field.hpp"

using namespace expsum;

TEST_CASE("pow_mod basics") {
    CHECK(pow_mod(2, 10, 1000003) == 1024);
    CHECK(pow_mod(3, 6, 7) == 1); // Fermat
    CHECK(pow_mod(0, 0, 7) == 1); // empty-product convention
    CHECK(pow_mod(5, 0, 7) == 1);
    CHECK(pow_mod(0, 5, 7) == 0);
    // big-operand path
    CHECK(pow_mod(2, 1000003 - 1, 1000003) == 1);
}

TEST_CASE("is_prime_u64") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(3));
    CHECK(is_prime_u64(5));
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(6));
    CHECK_FALSE(is_prime_u64(1000001)); // 101 * 9901
    CHECK(is_prime_u64(1000003));
    CHECK(is_prime_u64((u64{1} << 61) - 1)); // Mersenne
    CHECK_FALSE(is_prime_u64(~u64{0}));
    CHECK_FALSE(is_prime_u64(3215031751ull)); // strong pseudoprime to bases 2,3,5,7
}

TEST_CASE("factorize and divisors") {
    CHECK(factorize(420) ==
          std::vector<std::pair<u64, unsigned>>{{2, 2}, {3, 1}, {5, 1}, {7, 1}});
    CHECK(factorize(1).empty());
    CHECK(factorize(1024) == std::vector<std::pair<u64, unsigned>>{{2, 10}});
    CHECK(divisors(20) == std::vector<u64>{1, 2, 4, 5, 10, 20});
    CHECK(divisors(1) == std::vector<u64>{1});
}

TEST_CASE("is_prime_power") {
    CHECK(is_prime_power(8));
    CHECK_FALSE(is_prime_power(12));
    CHECK_FALSE(is_prime_power(1)); // unit convention
    CHECK(is_prime_power(7));
    CHECK(is_prime_power(49));
}

TEST_CASE("primes_in_range") {
    CHECK(primes_in_range(5, 13) == std::vector<u64>{5, 7, 11, 13});
    CHECK(primes_in_range(14, 16).empty());
}

TEST_CASE("field context p=5") {
    FieldContext ctx = build_field_context(5);
    CHECK(ctx.p == 5);
    CHECK(ctx.g == 2);
    CHECK(ctx.factors == std::vector<std::pair<u64, unsigned>>{{2, 2}});
    // powers of 2 mod 5: 1, 2, 4, 3
    CHECK(ctx.index_table[0] == FieldContext::kNoIndex);
    CHECK(ctx.index_table[1] == 0);
    CHECK(ctx.index_table[2] == 1);
    CHECK(ctx.index_table[3] == 3);
    CHECK(ctx.index_table[4] == 2);
}

TEST_CASE("field context p=7 least primitive root") {
    // 2 has order 3 mod 7; 3 is the least primitive root
    FieldContext ctx = build_field_context(7);
    CHECK(ctx.g == 3);
}

TEST_CASE("field context rejects bad input") {
    CHECK_THROWS_AS(build_field_context(6), Error);
    CHECK_THROWS_WITH_AS(build_field_context(6), doctest::Contains("NotPrime"), Error);
    CHECK_THROWS_WITH_AS(build_field_context(3), doctest::Contains("TooSmall"), Error);
    CHECK_THROWS_WITH_AS(build_field_context(2), doctest::Contains("TooSmall"), Error);
    CHECK_THROWS_WITH_AS(build_field_context(65537, 1000), doctest::Contains("TooLarge"), Error);
    try {
        build_field_context(6);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::not_prime);
    }
}

TEST_CASE("primitive root has exact order p-1 for every p <= 10^4") {
    for (u64 p : primes_in_range(5, 10000)) {
        FieldContext ctx = build_field_context(p);
        u64 cur = ctx.g;
        u64 order = 1;
        while (cur != 1) {
            cur = cur * ctx.g % p;
            ++order;
        }
        CHECK(order == p - 1);
    }
}

TEST_CASE("index table invariants") {
    for (u64 p : {61ull, 257ull}) {
        FieldContext ctx = build_field_context(p);
        for (u64 x = 1; x < p; ++x) {
            CHECK(pow_mod(ctx.g, ctx.index_table[x], p) == x);
            CHECK(ctx.power_table[ctx.index_table[x]] == x);
        }
        CHECK(ctx.index_table[1] == 0);
        CHECK(ctx.index_table[ctx.g] == 1);
    }
}

TEST_CASE("index homomorphism property") {
    FieldContext ctx = build_field_context(241);
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<u64> dist(1, 240);
    for (int trial = 0; trial < 500; ++trial) {
        u64 x = dist(rng), y = dist(rng);
        u64 lhs = ctx.index_table[x * y % 241];
        u64 rhs = (static_cast<u64>(ctx.index_table[x]) + ctx.index_table[y]) % 240;
        CHECK(lhs == rhs);
    }
}
