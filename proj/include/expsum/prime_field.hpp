#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "expsum/numeric.hpp"

namespace expsum {

// All arithmetic context for one prime field F_p:
//   p       odd prime >= 5
//   factors prime factorization of p-1, primes ascending
//   g       least primitive root modulo p
//   index_table[x] = a with g^a = x (mod p) for 1 <= x < p; index_table[0] = kNoIndex
//   power_table[a] = g^a mod p for 0 <= a < p-1 (inverse permutation of index_table)
//   unit_roots[j]  = exp(2*pi*i*j/p), built once per field
//
// Immutable after construction; safe to share across threads.
struct FieldContext {
    static constexpr u32 kNoIndex = 0xFFFFFFFFu;

    u64 p = 0;
    std::vector<std::pair<u64, unsigned>> factors;
    u64 g = 0;
    std::vector<u32> index_table;
    std::vector<u32> power_table;
    std::vector<cplx> unit_roots;

    u64 order() const { return p - 1; }
    // exp(2*pi*i*j/p) with 0 <= j < p
    cplx root(u64 j) const { return unit_roots[j]; }
};

inline constexpr u64 kDefaultFieldCap = u64{1} << 24;

// Deterministic construction: least primitive root, trial-division factorization,
// index table built in one pass g^0, g^1, ...
// Throws Error{not_prime, too_small, too_large}.
FieldContext build_field_context(u64 p, u64 cap = kDefaultFieldCap);

// base^exp mod m by square-and-multiply; pow_mod(x, 0, m) = 1 for all x (0^0 = 1).
u64 pow_mod(u64 base, u64 exp, u64 m);

// Deterministic Miller-Rabin, valid for every 64-bit input.
bool is_prime_u64(u64 n);

// Trial division, primes ascending, product reconstructs m. factorize(1) = {}.
std::vector<std::pair<u64, unsigned>> factorize(u64 m);

// All divisors of m, ascending.
std::vector<u64> divisors(u64 m);

// m = q^j for a single prime q, j >= 1. 1 is not a prime power.
bool is_prime_power(u64 m);

// Primes in [lo, hi], ascending. Plain scan; meant for desk-scale ranges.
std::vector<u64> primes_in_range(u64 lo, u64 hi);

u64 gcd_u64(u64 a, u64 b);

} // namespace expsum
