#pragma once

#include <vector>

#include "expsum/prime_field.hpp"

namespace expsum {

// Multiplicative character chi^e where chi is the canonical character of
// order n on F_p*: chi(g^a) = exp(2*pi*i*a/n), g the least primitive root.
//
// Evaluation: chi^e(x) = root_table[(e * index_table[x]) mod n] for x != 0.
// At zero: chi^0(0) = 1 (principal), chi^e(0) = 0 for 0 < e < n.
struct CharacterSpec {
    const FieldContext* ctx = nullptr;
    u64 n = 1; // order of the canonical base character, n | p-1
    u64 e = 0; // power, 0 <= e < n
    std::vector<cplx> root_table; // root_table[j] = exp(2*pi*i*j/n)

    bool principal() const { return e == 0; }
};

// Throws Error{order_does_not_divide, power_out_of_range}.
CharacterSpec character(const FieldContext& ctx, u64 n, u64 e);

cplx chi_eval(const CharacterSpec& chi, u64 x);

// Division parameters for the incomplete sum over {z : z^d != 0, 1}:
// N = (p-1)/d and N-1 = a*n + b with 0 <= b < n.
struct IncompleteSumParams {
    u64 d = 1;
    u64 N = 0;
    u64 a = 0;
    u64 b = 0;
};

IncompleteSumParams incomplete_sum_params(const FieldContext& ctx, u64 d, u64 n);

// sum over {z in F_p* : z^d != 1} of chi^e(z^{-1}), by literal enumeration.
// This is the ground truth the closed form is compared against.
// Throws Error{principal_character} for e = 0.
cplx incomplete_sum_direct(const FieldContext& ctx, u64 d, const CharacterSpec& chi);

// Closed form d * sum_{s=1}^{b} conj(chi^e)(g^s), with N-1 = a*n + b.
// Throws Error{principal_character, gcd_violation}.
cplx incomplete_sum_closed_form(const FieldContext& ctx, u64 d, const CharacterSpec& chi);

} // namespace expsum
