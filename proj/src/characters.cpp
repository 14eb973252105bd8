#include "expsum/characters.hpp"

#include <cmath>

#include "expsum/errors.hpp"
#include "expsum/numeric.hpp"

namespace expsum {

CharacterSpec character(const FieldContext& ctx, u64 n, u64 e) {
    if (n == 0 || (ctx.p - 1) % n != 0)
        throw Error(errc::order_does_not_divide,
                    "order n=" + std::to_string(n) + " does not divide p-1=" + std::to_string(ctx.p - 1));
    if (e >= n)
        throw Error(errc::power_out_of_range,
                    "power e=" + std::to_string(e) + " not in [0, " + std::to_string(n) + ")");
    CharacterSpec chi;
    chi.ctx = &ctx;
    chi.n = n;
    chi.e = e;
    chi.root_table.resize(n);
    for (u64 j = 0; j < n; ++j) {
        double ang = kTwoPi * static_cast<double>(j) / static_cast<double>(n);
        chi.root_table[j] = {std::cos(ang), std::sin(ang)};
    }
    return chi;
}

cplx chi_eval(const CharacterSpec& chi, u64 x) {
    if (x == 0) return chi.e == 0 ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
    u64 a = chi.ctx->index_table[x];
    return chi.root_table[(chi.e * a) % chi.n];
}

IncompleteSumParams incomplete_sum_params(const FieldContext& ctx, u64 d, u64 n) {
    if (d == 0 || (ctx.p - 1) % d != 0)
        throw Error(errc::domain_error, "d=" + std::to_string(d) + " does not divide p-1");
    IncompleteSumParams ps;
    ps.d = d;
    ps.N = (ctx.p - 1) / d;
    ps.a = (ps.N - 1) / n;
    ps.b = (ps.N - 1) % n;
    return ps;
}

cplx incomplete_sum_direct(const FieldContext& ctx, u64 d, const CharacterSpec& chi) {
    if (chi.principal())
        throw Error(errc::principal_character, "incomplete sum requires e >= 1");
    if (d == 0 || (ctx.p - 1) % d != 0)
        throw Error(errc::domain_error, "d=" + std::to_string(d) + " does not divide p-1");
    const u64 p = ctx.p;
    const u64 ord = p - 1;
    KahanComplex acc;
    for (u64 z = 1; z < p; ++z) {
        u64 a = ctx.index_table[z];
        u64 zd = ctx.power_table[(a * d) % ord]; // z^d
        if (zd == 1) continue;
        u64 zinv = ctx.power_table[(ord - a) % ord];
        acc.add(chi_eval(chi, zinv));
    }
    return acc.value();
}

cplx incomplete_sum_closed_form(const FieldContext& ctx, u64 d, const CharacterSpec& chi) {
    if (chi.principal())
        throw Error(errc::principal_character, "closed form requires e >= 1");
    if (gcd_u64(d, chi.n) != 1)
        throw Error(errc::gcd_violation,
                    "gcd(d=" + std::to_string(d) + ", n=" + std::to_string(chi.n) + ") != 1");
    IncompleteSumParams ps = incomplete_sum_params(ctx, d, chi.n);
    KahanComplex acc;
    for (u64 s = 1; s <= ps.b; ++s) {
        // conj(chi^e)(g^s) = exp(-2*pi*i*e*s/n)
        acc.add(std::conj(chi.root_table[(chi.e * s) % chi.n]));
    }
    cplx inner = acc.value();
    return {static_cast<double>(d) * inner.real(), static_cast<double>(d) * inner.imag()};
}

} // namespace expsum
