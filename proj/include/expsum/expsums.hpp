#pragma once

#include <vector>

#include "expsum/characters.hpp"
#include "expsum/dft.hpp"
#include "expsum/prime_field.hpp"

namespace expsum {

// One complete-sum value. terms = number of summands accumulated; each
// summand has modulus <= 1, so magnitude() <= terms up to rounding.
struct SumValue {
    double re = 0.0;
    double im = 0.0;
    u64 terms = 0;

    cplx value() const { return {re, im}; }
    double magnitude() const;
};

// counts[y] = #{x in [0,p) : x^k = y (mod p)}; counts[0] = 1 and the
// nonzero fibers have size gcd(k, p-1).
struct PowerHistogram {
    u64 k = 1;
    std::vector<u64> counts;
};

// S_{dn}(s) split into the n twisted components T_d(chi^e, s).
struct SpectrumDecomposition {
    u64 d = 1;
    u64 n = 1;
    u64 s = 0;
    std::vector<SumValue> components; // components[e] = T_d(chi^e, s)
    SumValue recombined;              // sum of components
};

// S_k(s) = sum_{x=0}^{p-1} exp(2*pi*i*s*x^k/p). Compensated summation in
// ascending x order.
SumValue eval_S(const FieldContext& ctx, u64 k, u64 s);

// T_d(chi^e, s) = sum_{x=0}^{p-1} chi^e(x) exp(2*pi*i*s*x^d/p) under the
// character zero conventions. Requires d | p-1.
SumValue eval_T(const FieldContext& ctx, u64 d, const CharacterSpec& chi, u64 s);

// Gauss sum: T_1(chi, s).
SumValue gauss_sum(const FieldContext& ctx, const CharacterSpec& chi, u64 s);

// gcd(k, p-1); S_k(s) = S_{reduce_exponent(k)}(s) for every s.
u64 reduce_exponent(const FieldContext& ctx, u64 k);

// Requires d*n | p-1. components[e] = eval_T with the canonical order-n
// character to power e.
SpectrumDecomposition spectrum(const FieldContext& ctx, u64 d, u64 n, u64 s);

PowerHistogram power_histogram(const FieldContext& ctx, u64 k);

// All of S_k(0..p-1) as the transform of the fiber counts. The fast path is
// the arbitrary-length chirp-z transform; the naive path is the literal
// O(p^2) evaluation kept as its oracle.
std::vector<SumValue> batch_S_all_s(const FieldContext& ctx, u64 k);
std::vector<SumValue> batch_S_all_s_naive(const FieldContext& ctx, u64 k);

// Fast path with a caller-held plan (shared across exponents of one field).
std::vector<SumValue> batch_S_all_s(const FieldContext& ctx, u64 k, const ChirpZ& plan);

// (max over s in [1, p-1] of |S_k(s)|, argmax). Computed over the batch
// evaluator; the argmax is the smallest s within 1e-9 of the maximum, so
// mathematically tied frequencies resolve to the smallest one.
std::pair<double, u64> max_abs_S(const FieldContext& ctx, u64 k);

} // namespace expsum
