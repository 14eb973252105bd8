#include "expsum/expsums.hpp"

#include <cmath>

#include "expsum/dft.hpp"
#include "expsum/errors.hpp"

namespace expsum {

double SumValue::magnitude() const { return std::hypot(re, im); }

static SumValue from_cplx(cplx v, u64 terms) {
    return SumValue{v.real(), v.imag(), terms};
}

SumValue eval_S(const FieldContext& ctx, u64 k, u64 s) {
    const u64 p = ctx.p;
    const u64 ord = p - 1;
    const u64 kr = k % ord;
    KahanComplex acc;
    acc.add(ctx.root(0)); // x = 0: 0^k = 0 for k >= 1
    for (u64 x = 1; x < p; ++x) {
        u64 xk = kr == 0 ? 1 : ctx.power_table[(static_cast<u64>(ctx.index_table[x]) * kr) % ord];
        acc.add(ctx.root(s * xk % p));
    }
    return from_cplx(acc.value(), p);
}

SumValue eval_T(const FieldContext& ctx, u64 d, const CharacterSpec& chi, u64 s) {
    if (d == 0 || (ctx.p - 1) % d != 0)
        throw Error(errc::domain_error, "d=" + std::to_string(d) + " does not divide p-1");
    const u64 p = ctx.p;
    const u64 ord = p - 1;
    KahanComplex acc;
    if (chi.e == 0) acc.add(ctx.root(0)); // chi^0(0) = 1; otherwise the x = 0 term vanishes
    for (u64 x = 1; x < p; ++x) {
        u64 a = ctx.index_table[x];
        u64 xd = ctx.power_table[(a * d) % ord];
        acc.add(chi.root_table[(chi.e * a) % chi.n] * ctx.root(s * xd % p));
    }
    return from_cplx(acc.value(), p);
}

SumValue gauss_sum(const FieldContext& ctx, const CharacterSpec& chi, u64 s) {
    return eval_T(ctx, 1, chi, s);
}

u64 reduce_exponent(const FieldContext& ctx, u64 k) {
    return gcd_u64(k, ctx.p - 1);
}

SpectrumDecomposition spectrum(const FieldContext& ctx, u64 d, u64 n, u64 s) {
    if (d == 0 || n == 0 || (ctx.p - 1) % (d * n) != 0)
        throw Error(errc::order_does_not_divide,
                    "d*n=" + std::to_string(d * n) + " does not divide p-1=" + std::to_string(ctx.p - 1));
    SpectrumDecomposition dec;
    dec.d = d;
    dec.n = n;
    dec.s = s;
    dec.components.reserve(n);
    KahanComplex acc;
    for (u64 e = 0; e < n; ++e) {
        CharacterSpec chi = character(ctx, n, e);
        SumValue t = eval_T(ctx, d, chi, s);
        acc.add(t.value());
        dec.components.push_back(t);
    }
    dec.recombined = from_cplx(acc.value(), ctx.p);
    return dec;
}

PowerHistogram power_histogram(const FieldContext& ctx, u64 k) {
    const u64 p = ctx.p;
    const u64 ord = p - 1;
    const u64 kr = k % ord;
    PowerHistogram h;
    h.k = k;
    h.counts.assign(p, 0);
    h.counts[0] = 1;
    if (kr == 0) {
        h.counts[1] = ord;
        return h;
    }
    for (u64 x = 1; x < p; ++x) {
        u64 y = ctx.power_table[(static_cast<u64>(ctx.index_table[x]) * kr) % ord];
        ++h.counts[y];
    }
    return h;
}

std::vector<SumValue> batch_S_all_s_naive(const FieldContext& ctx, u64 k) {
    const u64 p = ctx.p;
    PowerHistogram h = power_histogram(ctx, k);
    std::vector<u64> support;
    support.reserve(p);
    for (u64 y = 0; y < p; ++y) {
        if (h.counts[y] != 0) support.push_back(y);
    }
    std::vector<SumValue> out(p);
    for (u64 s = 0; s < p; ++s) {
        KahanComplex acc;
        for (u64 y : support) {
            cplx w = ctx.root(s * y % p);
            double c = static_cast<double>(h.counts[y]);
            acc.add({c * w.real(), c * w.imag()});
        }
        out[s] = from_cplx(acc.value(), p);
    }
    return out;
}

static std::vector<SumValue> batch_fast(const FieldContext& ctx, u64 k, const ChirpZ& plan) {
    const u64 p = ctx.p;
    PowerHistogram h = power_histogram(ctx, k);
    std::vector<cplx> a(p);
    for (u64 y = 0; y < p; ++y) a[y] = {static_cast<double>(h.counts[y]), 0.0};
    std::vector<cplx> x = plan.transform(a);
    std::vector<SumValue> out(p);
    for (u64 s = 0; s < p; ++s) out[s] = from_cplx(x[s], p);
    return out;
}

std::vector<SumValue> batch_S_all_s(const FieldContext& ctx, u64 k) {
    ChirpZ plan(ctx.p);
    return batch_fast(ctx, k, plan);
}

std::vector<SumValue> batch_S_all_s(const FieldContext& ctx, u64 k, const ChirpZ& plan) {
    return batch_fast(ctx, k, plan);
}

std::pair<double, u64> max_abs_S(const FieldContext& ctx, u64 k) {
    std::vector<SumValue> all = batch_S_all_s(ctx, k);
    double best = -1.0;
    for (u64 s = 1; s < ctx.p; ++s) best = std::max(best, all[s].magnitude());
    // Frequencies in one power-residue class have equal magnitude up to
    // transform noise; resolve "ties toward smallest s" with a 1e-9 margin.
    u64 argmax = 1;
    for (u64 s = 1; s < ctx.p; ++s) {
        if (all[s].magnitude() >= best - 1e-9) {
            argmax = s;
            break;
        }
    }
    return {best, argmax};
}

} // namespace expsum
