#include "expsum/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "expsum/errors.hpp"
#include "expsum/prime_field.hpp"

namespace expsum {

const char* bound_name(BoundName n) noexcept {
    switch (n) {
        case BoundName::classical: return "classical";
        case BoundName::mvw: return "mvw";
        case BoundName::hbk: return "hbk";
        case BoundName::thm4_i: return "thm4_i";
        case BoundName::thm4_ii: return "thm4_ii";
        case BoundName::thm4_iii: return "thm4_iii";
        case BoundName::thm9_1: return "thm9_1";
        case BoundName::thm9_2: return "thm9_2";
        case BoundName::thm9_3: return "thm9_3";
        case BoundName::thm10: return "thm10";
        case BoundName::conjecture: return "conjecture";
    }
    return "unknown";
}

static bool all_hold(const std::vector<Precondition>& pre) {
    for (const auto& c : pre) {
        if (!c.holds) return false;
    }
    return true;
}

static BoundEvaluation finish(BoundEvaluation ev, double trivial_ceiling) {
    ev.applicable = all_hold(ev.preconditions);
    ev.nontrivial = ev.value < trivial_ceiling;
    return ev;
}

BoundEvaluation bound_classical(u64 k, u64 p) {
    BoundEvaluation ev;
    ev.name = BoundName::classical;
    ev.p = p;
    ev.k = k;
    ev.value = static_cast<double>(k - 1) * std::sqrt(static_cast<double>(p));
    return finish(std::move(ev), static_cast<double>(p));
}

BoundEvaluation bound_mvw(u64 k, u64 p) {
    BoundEvaluation ev;
    ev.name = BoundName::mvw;
    ev.p = p;
    ev.k = k;
    bool even = k % 2 == 0;
    bool divides = k >= 1 && (p - 1) % k == 0;
    bool m_odd = divides && ((p - 1) / k) % 2 == 1; // p = km+1 with m odd, i.e. 2k does not divide p-1
    ev.preconditions = {{"k even", even}, {"p = 1 mod k", divides}, {"(p-1)/k odd", m_odd}};
    double kk = static_cast<double>(k);
    ev.value = std::sqrt(0.5 * (kk * kk - 2.0 * kk + 2.0)) * std::sqrt(static_cast<double>(p));
    return finish(std::move(ev), static_cast<double>(p));
}

BoundEvaluation bound_hbk(u64 k, u64 p) {
    BoundEvaluation ev;
    ev.name = BoundName::hbk;
    ev.p = p;
    ev.k = k;
    double kk = static_cast<double>(k);
    double pp = static_cast<double>(p);
    double sp = std::sqrt(pp);
    double p13 = std::cbrt(pp);
    double p12 = sp;
    double p23 = std::pow(pp, 2.0 / 3.0);
    double best = std::numeric_limits<double>::infinity();
    if (kk <= p13) best = std::min(best, kk * sp);
    if (p13 <= kk && kk <= p12) best = std::min(best, std::pow(kk, 0.625) * std::pow(pp, 0.625));
    if (p12 <= kk && kk <= p23) best = std::min(best, std::pow(kk, 0.375) * std::pow(pp, 0.75));
    if (p23 <= kk && kk <= pp) best = std::min(best, pp);
    if (!std::isfinite(best)) best = pp; // k > p: the trivial ceiling is still a bound
    ev.value = best;
    return finish(std::move(ev), pp + 1.0);
}

double coefficient_cd(u64 d, u64 n, u64 p) {
    double dd = static_cast<double>(d);
    double nn = static_cast<double>(n);
    double k = dd * nn;
    double sp = std::sqrt(static_cast<double>(p));
    return dd - 1.0 + (nn - 1.0) * std::sqrt(dd * (1.0 + k / sp));
}

BoundEvaluation bound_thm4(u64 p, u64 k, u64 d, Thm4Case which) {
    BoundEvaluation ev;
    ev.p = p;
    ev.k = k;
    ev.d = d;
    double sp = std::sqrt(static_cast<double>(p));
    double dd = static_cast<double>(d);
    bool k_div = k >= 1 && (p - 1) % k == 0;
    switch (which) {
        case Thm4Case::i: {
            ev.name = BoundName::thm4_i;
            bool splits = d >= 1 && k % d == 0;
            u64 n = splits ? k / d : 0;
            ev.n = n;
            bool coprime = splits && gcd_u64(d, n) == 1;
            ev.preconditions = {{"k | p-1", k_div}, {"d | k", splits}, {"gcd(d, k/d) = 1", coprime}};
            if (splits) ev.value = coefficient_cd(d, n, p) * sp;
            break;
        }
        case Thm4Case::ii: {
            ev.name = BoundName::thm4_ii;
            bool matches = k == 2 * d;
            bool odd = d % 2 == 1;
            ev.n = 2;
            ev.preconditions = {{"k | p-1", k_div}, {"k = 2d", matches}, {"d odd", odd}};
            ev.value = (dd - 1.0 + std::sqrt(dd * (1.0 + dd / sp))) * sp;
            break;
        }
        case Thm4Case::iii: {
            ev.name = BoundName::thm4_iii;
            bool matches = k == 4 * d;
            bool coprime4 = gcd_u64(d, 4) == 1;
            ev.n = 4;
            ev.preconditions = {{"k | p-1", k_div}, {"k = 4d", matches}, {"gcd(d, 4) = 1", coprime4}};
            ev.value = (dd - 1.0 + 3.0 * std::sqrt(dd * (1.0 + std::sqrt(2.0) / sp))) * sp;
            break;
        }
    }
    return finish(std::move(ev), static_cast<double>(p));
}

BoundEvaluation bound_thm9(u64 p, u64 d, u64 n, int case_id) {
    BoundEvaluation ev;
    ev.p = p;
    ev.d = d;
    ev.n = n;
    ev.k = d * n;
    double pp = static_cast<double>(p);
    double sp = std::sqrt(pp);
    double dd = static_cast<double>(d);
    double nn = static_cast<double>(n);
    bool d_div = d >= 1 && (p - 1) % d == 0;
    bool n_div = n >= 2 && (p - 1) % n == 0; // chi != 1 of order n must exist
    switch (case_id) {
        case 1:
            ev.name = BoundName::thm9_1;
            ev.preconditions = {{"d | p-1", d_div},
                                {"order n valid", n_div},
                                {"gcd(d, n) = 1", gcd_u64(d, n) == 1}};
            ev.value = dd * (1.0 + dd * nn / sp) * pp;
            break;
        case 2:
            ev.name = BoundName::thm9_2;
            ev.preconditions = {{"d | p-1", d_div}, {"n = 2", n == 2}, {"d odd", d % 2 == 1}};
            ev.value = dd * (1.0 + dd / sp) * pp;
            break;
        case 3:
            ev.name = BoundName::thm9_3;
            ev.preconditions = {{"d | p-1", d_div}, {"n = 4", n == 4}, {"gcd(d, 4) = 1", gcd_u64(d, 4) == 1}};
            ev.value = dd * (1.0 + std::sqrt(2.0) / sp) * pp;
            break;
        default:
            throw Error(errc::domain_error, "thm9 case_id must be 1, 2 or 3");
    }
    return finish(std::move(ev), pp * pp);
}

double f_k(double x, u64 k) {
    if (x <= 0.0) throw Error(errc::domain_error, "f_k requires x > 0");
    double sx = std::sqrt(x);
    return x - 1.0 + static_cast<double>(k) / sx - sx;
}

std::pair<double, double> minimize_fk(u64 k) {
    if (k < 2) throw Error(errc::domain_error, "minimize_fk requires k >= 2");
    double lo = std::sqrt(static_cast<double>(k));
    double hi = std::pow(static_cast<double>(k), 0.75);
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f_k(c, k), fd = f_k(d, k);
    while ((b - a) > 1e-9 * std::max(1.0, std::abs(a))) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f_k(c, k);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f_k(d, k);
        }
    }
    double x0 = 0.5 * (a + b);
    return {x0, f_k(x0, k)};
}

DivisorSearchResult optimal_divisor(u64 p, u64 k) {
    if (k == 0 || (p - 1) % k != 0)
        throw Error(errc::domain_error, "optimal_divisor requires k | p-1");
    DivisorSearchResult res;
    res.k = k;
    res.x0_bracket = {std::sqrt(static_cast<double>(k)), std::pow(static_cast<double>(k), 0.75)};
    double best = std::numeric_limits<double>::infinity();
    for (u64 d : divisors(k)) {
        if (d <= 1 || d >= k) continue;
        u64 n = k / d;
        u64 g = gcd_u64(d, n);
        if (g != 1) continue;
        double val = bound_thm4(p, k, d, Thm4Case::i).value;
        res.candidates.push_back({d, n, g, val});
        if (val < best) { // strict: ties resolve to the smaller (earlier) d
            best = val;
            res.best_d = d;
        }
    }
    return res;
}

BoundEvaluation bound_thm10(u64 p, u64 k) {
    BoundEvaluation ev;
    ev.name = BoundName::thm10;
    ev.p = p;
    ev.k = k;
    using u128 = unsigned __int128;
    bool k_range = k > 17 && u128(k) * k < p; // k in (17, sqrt(p)), open as printed
    bool not_pp = !is_prime_power(k);
    bool has_d = false;
    if (k >= 2) {
        for (u64 d : divisors(k)) {
            // d in (k^{1/2}, k^{3/4}) strictly: d^2 > k and d^4 < k^3
            u128 d2 = u128(d) * d;
            if (d2 > k && d2 * d2 < u128(k) * k * k && gcd_u64(d, k / d) == 1) {
                has_d = true;
                ev.d = d;
                ev.n = k / d;
                break;
            }
        }
    }
    ev.preconditions = {{"17 < k < sqrt(p)", k_range},
                        {"k not a prime power", not_pp},
                        {"coprime factor d in (k^1/2, k^3/4)", has_d}};
    ev.value = 2.0 * std::pow(static_cast<double>(k), 0.75) * std::sqrt(static_cast<double>(p));
    return finish(std::move(ev), static_cast<double>(p));
}

double conjecture_line(u64 p, u64 k, double epsilon) {
    if (epsilon < 0.0) throw Error(errc::domain_error, "epsilon must be nonnegative");
    return std::pow(static_cast<double>(k) * static_cast<double>(p), 0.5 + epsilon);
}

ImprovementRatio improvement_ratio(u64 d, u64 n, u64 p) {
    if (d < 2 || n < 2) throw Error(errc::domain_error, "improvement_ratio requires d, n >= 2");
    ImprovementRatio r;
    double c0 = static_cast<double>(d) * static_cast<double>(n) - 1.0;
    r.exact = c0 / coefficient_cd(d, n, p);
    double sd = std::sqrt(static_cast<double>(d));
    r.approx = (sd * static_cast<double>(n)) / (sd + static_cast<double>(n));
    r.difference = r.exact - r.approx;
    return r;
}

} // namespace expsum
