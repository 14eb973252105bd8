#include "doctest.h"

#include <cmath>
#include <random>

#include "expsum/errors.hpp"
#include "expsum/expsums.hpp"
#include "oracles.hpp"

using namespace expsum;

static FieldContext ctx5 = build_field_context(5);
static FieldContext ctx7 = build_field_context(7);
static FieldContext ctx11 = build_field_context(11);
static FieldContext ctx13 = build_field_context(13);
static FieldContext ctx61 = build_field_context(61);
static FieldContext ctx97 = build_field_context(97);

TEST_CASE("eval_S agrees with the literal oracle") {
    for (const FieldContext* ctx : {&ctx5, &ctx7, &ctx13, &ctx61}) {
        for (u64 k : {1ull, 2ull, 3ull, 6ull, 12ull, 100ull}) {
            for (u64 s : {0ull, 1ull, 2ull, 3ull}) {
                if (s >= ctx->p) continue;
                cplx got = eval_S(*ctx, k, s).value();
                cplx want = oracles::naive_S(ctx->p, k, s);
                CHECK(std::abs(got - want) < 1e-9 * static_cast<double>(ctx->p));
            }
        }
    }
}

TEST_CASE("eval_S frozen values") {
    // quadratic Gauss sum mod 5: 1 + 4 cos(2 pi / 5) = sqrt(5)
    SumValue v = eval_S(ctx5, 2, 1);
    CHECK(v.re == doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));
    CHECK(std::abs(v.im) < 1e-12);
    CHECK(v.magnitude() == doctest::Approx(2.2360680).epsilon(1e-7));
    CHECK(v.terms == 5);

    SumValue zero = eval_S(ctx5, 2, 0);
    CHECK(zero.re == doctest::Approx(5.0));
    CHECK(std::abs(zero.im) < 1e-12);

    SumValue lin = eval_S(ctx7, 1, 3);
    CHECK(std::abs(lin.value()) < 1e-12);
}

TEST_CASE("eval_T basics") {
    // principal character: T_d(chi^0, s) = S_d(s)
    CharacterSpec principal = character(ctx13, 4, 0);
    for (u64 s = 0; s < 13; ++s) {
        CHECK(std::abs(eval_T(ctx13, 3, principal, s).value() - eval_S(ctx13, 3, s).value()) <
              1e-12 * 13);
    }
    // quadratic Gauss sum mod 5
    CharacterSpec chi = character(ctx5, 2, 1);
    CHECK(std::abs(eval_T(ctx5, 1, chi, 1).value()) == doctest::Approx(std::sqrt(5.0)));
    // orthogonality at s = 0
    CHECK(std::abs(eval_T(ctx5, 1, chi, 0).value()) < 1e-12);
}

TEST_CASE("eval_T agrees with the literal oracle") {
    for (u64 d : {1ull, 2ull, 3ull}) {
        for (u64 n : {2ull, 3ull, 4ull}) {
            if (12 % (d * n) != 0) continue;
            for (u64 e = 0; e < n; ++e) {
                CharacterSpec chi = character(ctx13, n, e);
                for (u64 s : {0ull, 1ull, 5ull}) {
                    cplx got = eval_T(ctx13, d, chi, s).value();
                    cplx want = oracles::naive_T(13, ctx13.g, d, n, e, s);
                    CHECK(std::abs(got - want) < 1e-9 * 13);
                }
            }
        }
    }
}

TEST_CASE("gauss_sum") {
    CharacterSpec chi3 = character(ctx13, 3, 1);
    CHECK(std::abs(gauss_sum(ctx13, chi3, 1).value()) == doctest::Approx(std::sqrt(13.0)));
    // principal chi with d = 1 degenerates to the complete additive sum
    CharacterSpec principal = character(ctx13, 3, 0);
    CHECK(std::abs(gauss_sum(ctx13, principal, 2).value()) < 1e-9);
    // non-principal at s = 0 vanishes by orthogonality
    CHECK(std::abs(gauss_sum(ctx13, chi3, 0).value()) < 1e-9);
}

TEST_CASE("reduce_exponent") {
    CHECK(reduce_exponent(ctx7, 10) == 2);
    CHECK(reduce_exponent(ctx7, 6) == 6);
    CHECK(reduce_exponent(ctx11, 7) == 1);
    // gcd(7, 10) = 1 makes S_7 degenerate
    for (u64 s = 1; s < 11; ++s) CHECK(std::abs(eval_S(ctx11, 7, s).value()) < 1e-9);
}

TEST_CASE("gcd invariance of eval_S") {
    for (u64 s = 0; s < 61; ++s) {
        CHECK(std::abs(eval_S(ctx61, 10, s).value() - eval_S(ctx61, 70, s).value()) < 1e-9 * 61);
    }
}

TEST_CASE("spectrum recombines to S_k") {
    SpectrumDecomposition dec = spectrum(ctx13, 3, 4, 1);
    CHECK(dec.components.size() == 4);
    cplx direct = oracles::naive_S(13, 12, 1);
    CHECK(std::abs(dec.recombined.value() - direct) < 1e-6);
    CHECK(std::abs(dec.recombined.value() - eval_S(ctx13, 12, 1).value()) < 1e-6);

    SpectrumDecomposition dec2 = spectrum(ctx13, 2, 3, 1);
    CHECK(std::abs(dec2.recombined.value() - eval_S(ctx13, 6, 1).value()) < 1e-6);

    // n = 1: the single component is S_d itself
    SpectrumDecomposition triv = spectrum(ctx13, 3, 1, 5);
    CHECK(triv.components.size() == 1);
    CHECK(std::abs(triv.recombined.value() - eval_S(ctx13, 3, 5).value()) < 1e-12 * 13);

    CHECK_THROWS_WITH_AS(spectrum(ctx13, 3, 5, 1), doctest::Contains("OrderDoesNotDivide"), Error);
}

TEST_CASE("power histogram invariants") {
    for (u64 k : {1ull, 2ull, 3ull, 4ull, 6ull, 12ull, 96ull}) {
        PowerHistogram h = power_histogram(ctx97, k);
        u64 total = 0, nonzero = 0;
        for (u64 y = 0; y < 97; ++y) {
            total += h.counts[y];
            if (y > 0 && h.counts[y] != 0) ++nonzero;
        }
        CHECK(total == 97);
        CHECK(h.counts[0] == 1);
        u64 kr = gcd_u64(k, 96);
        if (96 % k == 0) {
            CHECK(nonzero == 96 / k);
            for (u64 y = 1; y < 97; ++y) CHECK((h.counts[y] == 0 || h.counts[y] == k));
        }
        CHECK(nonzero == 96 / kr);
    }
}

TEST_CASE("batch paths agree with each other and the direct evaluator") {
    for (u64 k : {1ull, 2ull, 3ull, 6ull, 96ull}) {
        std::vector<SumValue> fast = batch_S_all_s(ctx97, k);
        std::vector<SumValue> naive = batch_S_all_s_naive(ctx97, k);
        REQUIRE(fast.size() == 97);
        REQUIRE(naive.size() == 97);
        for (u64 s = 0; s < 97; ++s) {
            CHECK(std::abs(fast[s].value() - naive[s].value()) < 1e-6);
        }
        for (u64 s : {0ull, 1ull, 17ull, 96ull}) {
            CHECK(std::abs(naive[s].value() - eval_S(ctx97, k, s).value()) < 1e-9 * 97);
        }
    }
}

TEST_CASE("batch magnitudes for p=5 k=2") {
    std::vector<SumValue> all = batch_S_all_s(ctx5, 2);
    CHECK(all[0].magnitude() == doctest::Approx(5.0));
    for (u64 s = 1; s < 5; ++s) CHECK(all[s].magnitude() == doctest::Approx(std::sqrt(5.0)));
}

TEST_CASE("batch Parseval self-check") {
    for (u64 k : {2ull, 4ull}) {
        PowerHistogram h = power_histogram(ctx61, k);
        std::vector<SumValue> all = batch_S_all_s(ctx61, k);
        double lhs = 0, rhs = 0;
        for (u64 s = 0; s < 61; ++s) lhs += all[s].re * all[s].re + all[s].im * all[s].im;
        for (u64 y = 0; y < 61; ++y)
            rhs += static_cast<double>(h.counts[y]) * static_cast<double>(h.counts[y]);
        rhs *= 61.0;
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
}

TEST_CASE("max_abs_S") {
    auto [m5, s5] = max_abs_S(ctx5, 2);
    CHECK(m5 == doctest::Approx(std::sqrt(5.0)).epsilon(1e-9));
    CHECK(s5 == 1);

    auto [m7, s7] = max_abs_S(ctx7, 1);
    CHECK(m7 < 1e-9);
    CHECK(s7 == 1);

    auto [m13, s13] = max_abs_S(ctx13, 3);
    CHECK(m13 <= 2.0 * std::sqrt(13.0) + 1e-6);
    CHECK(s13 >= 1);
}

TEST_CASE("conjugate symmetry") {
    for (u64 k : {2ull, 4ull, 5ull}) {
        for (u64 s = 1; s < 61; ++s) {
            cplx a = eval_S(ctx61, k, s).value();
            cplx b = eval_S(ctx61, k, 61 - s).value();
            CHECK(std::abs(std::conj(a) - b) < 1e-9 * 61);
        }
    }
}

TEST_CASE("realness for odd k") {
    for (u64 k : {3ull, 5ull, 15ull}) {
        for (u64 s = 0; s < 61; ++s) CHECK(std::abs(eval_S(ctx61, k, s).im) < 1e-6);
    }
}

TEST_CASE("dilation invariance on cosets") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<u64> dist(1, 60);
    for (int trial = 0; trial < 100; ++trial) {
        u64 t = dist(rng), s = dist(rng);
        u64 tk = pow_mod(t, 4, 61);
        double lhs = std::abs(eval_S(ctx61, 4, tk * s % 61).value());
        double rhs = std::abs(eval_S(ctx61, 4, s).value());
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
    }
}

TEST_CASE("second moments, frozen oracle cases") {
    // p=5, k=2: |S|^2 values are 25, 5, 5, 5, 5 -> 45 = p(1 + k(p-1))
    double total = 0;
    for (u64 s = 0; s < 5; ++s) total += std::norm(eval_S(ctx5, 2, s).value());
    CHECK(total == doctest::Approx(45.0).epsilon(1e-10));

    // p=5, d=1, n=2: four Gauss sums of squared magnitude 5 -> 20 = d p (p-1)
    CharacterSpec chi = character(ctx5, 2, 1);
    double tmoment = 0;
    for (u64 s = 0; s < 5; ++s) tmoment += std::norm(eval_T(ctx5, 1, chi, s).value());
    CHECK(tmoment == doctest::Approx(20.0).epsilon(1e-10));
}

TEST_CASE("sum value magnitude never exceeds term count") {
    for (u64 k : {1ull, 2ull, 7ull}) {
        for (u64 s = 0; s < 13; ++s) {
            SumValue v = eval_S(ctx13, k, s);
            CHECK(v.magnitude() <= static_cast<double>(v.terms) + 1e-9);
        }
    }
}
