#include "expsum/prime_field.hpp"

#include <algorithm>
#include <cmath>

#include "expsum/errors.hpp"

namespace expsum {

u64 gcd_u64(u64 a, u64 b) {
    while (b != 0) {
        u64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

static u64 mul_mod(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m) {
    if (m == 1) return 0;
    u64 result = 1;
    u64 cur = base % m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, cur, m);
        cur = mul_mod(cur, cur, m);
        exp >>= 1;
    }
    return result;
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set is deterministic for all n < 2^64.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::pair<u64, unsigned>> factorize(u64 m) {
    std::vector<std::pair<u64, unsigned>> out;
    for (u64 q = 2; q * q <= m; q += (q == 2) ? 1 : 2) {
        if (m % q == 0) {
            unsigned mult = 0;
            while (m % q == 0) {
                m /= q;
                ++mult;
            }
            out.emplace_back(q, mult);
        }
    }
    if (m > 1) out.emplace_back(m, 1);
    return out;
}

std::vector<u64> divisors(u64 m) {
    std::vector<u64> ds{1};
    for (const auto& [q, mult] : factorize(m)) {
        std::size_t base = ds.size();
        u64 qp = 1;
        for (unsigned j = 1; j <= mult; ++j) {
            qp *= q;
            for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * qp);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

bool is_prime_power(u64 m) {
    if (m < 2) return false;
    return factorize(m).size() == 1;
}

std::vector<u64> primes_in_range(u64 lo, u64 hi) {
    std::vector<u64> out;
    for (u64 n = std::max<u64>(lo, 2); n <= hi; ++n) {
        if (is_prime_u64(n)) out.push_back(n);
    }
    return out;
}

static u64 least_primitive_root(u64 p, const std::vector<std::pair<u64, unsigned>>& factors) {
    for (u64 g = 2; g < p; ++g) {
        bool ok = true;
        for (const auto& [q, mult] : factors) {
            (void)mult;
            if (pow_mod(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    return 0; // unreachable for prime p >= 3
}

FieldContext build_field_context(u64 p, u64 cap) {
    if (p < 5) throw Error(errc::too_small, "p must be at least 5, got " + std::to_string(p));
    if (p > cap || p > 0x7FFFFFFFull)
        throw Error(errc::too_large,
                    "p=" + std::to_string(p) + " exceeds the index-table cap " + std::to_string(cap));
    if (!is_prime_u64(p)) throw Error(errc::not_prime, "p=" + std::to_string(p) + " is composite");

    FieldContext ctx;
    ctx.p = p;
    ctx.factors = factorize(p - 1);
    ctx.g = least_primitive_root(p, ctx.factors);

    ctx.index_table.assign(p, FieldContext::kNoIndex);
    ctx.power_table.assign(p - 1, 0);
    u64 cur = 1;
    for (u64 a = 0; a < p - 1; ++a) {
        ctx.power_table[a] = static_cast<u32>(cur);
        ctx.index_table[cur] = static_cast<u32>(a);
        cur = cur * ctx.g % p;
    }

    ctx.unit_roots.resize(p);
    for (u64 j = 0; j < p; ++j) {
        double ang = kTwoPi * static_cast<double>(j) / static_cast<double>(p);
        ctx.unit_roots[j] = {std::cos(ang), std::sin(ang)};
    }
    return ctx;
}

} // namespace expsum
