// Test-only oracles: literal evaluations with their own arithmetic, kept
// independent of the library's index-table/transform paths.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace oracles {

using u64 = std::uint64_t;

inline u64 opow_mod(u64 b, u64 e, u64 m) {
    unsigned __int128 acc = 1, cur = b % m;
    while (e) {
        if (e & 1) acc = acc * cur % m;
        cur = cur * cur % m;
        e >>= 1;
    }
    return static_cast<u64>(acc);
}

// S_k(s) by the definition, long-double accumulation.
inline std::complex<double> naive_S(u64 p, u64 k, u64 s) {
    long double re = 0, im = 0;
    const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
    for (u64 x = 0; x < p; ++x) {
        u64 t = s * opow_mod(x, k, p) % p;
        long double ang = two_pi * static_cast<long double>(t) / static_cast<long double>(p);
        re += std::cos(ang);
        im += std::sin(ang);
    }
    return {static_cast<double>(re), static_cast<double>(im)};
}

// Discrete log by linear search from a given generator.
inline u64 naive_index(u64 p, u64 g, u64 x) {
    u64 cur = 1;
    for (u64 a = 0; a < p - 1; ++a) {
        if (cur == x) return a;
        cur = cur * g % p;
    }
    return ~u64{0};
}

// T_d(chi^e, s) with chi(g^a) = exp(2*pi*i*a/n), chi^e(0) = 0 for e != 0.
inline std::complex<double> naive_T(u64 p, u64 g, u64 d, u64 n, u64 e, u64 s) {
    long double re = 0, im = 0;
    const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
    if (e % n == 0) {
        re += 1.0L; // chi^0(0) * exp(0)
    }
    for (u64 x = 1; x < p; ++x) {
        u64 a = naive_index(p, g, x);
        long double chi_ang = two_pi * static_cast<long double>((e * a) % n) / static_cast<long double>(n);
        u64 t = s * opow_mod(x, d, p) % p;
        long double add_ang = two_pi * static_cast<long double>(t) / static_cast<long double>(p);
        re += std::cos(chi_ang + add_ang);
        im += std::sin(chi_ang + add_ang);
    }
    return {static_cast<double>(re), static_cast<double>(im)};
}

} // namespace oracles
