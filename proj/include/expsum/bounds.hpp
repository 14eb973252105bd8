#pragma once

#include <optional>
#include <string>
#include <vector>

#include "expsum/numeric.hpp"

namespace expsum {

enum class BoundName {
    classical,
    mvw,
    hbk,
    thm4_i,
    thm4_ii,
    thm4_iii,
    thm9_1,
    thm9_2,
    thm9_3,
    thm10,
    conjecture,
};

const char* bound_name(BoundName n) noexcept;

struct Precondition {
    std::string name;
    bool holds;
};

// One evaluated bound. For thm9_* the value bounds |T_d(chi^e, s)|^2;
// for everything else it bounds |S_k(s)|. applicable is the conjunction
// of the recorded preconditions. nontrivial marks a value below the
// trivial ceiling (p for |S| bounds, p^2 for the squared T bounds).
struct BoundEvaluation {
    BoundName name = BoundName::classical;
    bool applicable = false;
    std::vector<Precondition> preconditions;
    double value = 0.0;
    bool nontrivial = false;
    u64 p = 0;
    u64 k = 0;
    u64 d = 0;
    u64 n = 0;
    double epsilon = 0.0;
};

// Classical bound (k-1)*sqrt(p), always applicable.
BoundEvaluation bound_classical(u64 k, u64 p);

// Even-exponent refinement 2^{-1/2}(k^2-2k+2)^{1/2} sqrt(p); needs k even
// and p = km+1 with m odd.
BoundEvaluation bound_mvw(u64 k, u64 p);

// Piecewise exponent-range bound; branch boundaries overlap, the minimum of all
// branches containing k is taken. Always applicable (k > p falls back to p).
BoundEvaluation bound_hbk(u64 k, u64 p);

// Split coefficient c_d(k) = d - 1 + (n-1)*sqrt(d*(1 + k/sqrt(p))) with k = d*n.
double coefficient_cd(u64 d, u64 n, u64 p);

enum class Thm4Case { i, ii, iii };

// Divisor-split bounds on |S_k(s)| with explicit d; applicability per case:
//   (i)   k | p-1, k = d*n, gcd(d, n) = 1
//   (ii)  k | p-1, k = 2d, d odd
//   (iii) k | p-1, k = 4d, gcd(d, 4) = 1
BoundEvaluation bound_thm4(u64 p, u64 k, u64 d, Thm4Case which);

// Bounds on the squared twisted-sum magnitude |T_d(chi^e, s)|^2,
// case_id in {1, 2, 3}.
BoundEvaluation bound_thm9(u64 p, u64 d, u64 n, int case_id);

// f_k(x) = x - 1 + k*x^{-1/2} - x^{1/2}; throws Error{domain_error} for x <= 0.
double f_k(double x, u64 k);

// Golden-section minimum of f_k over (k^{1/2}, k^{3/4}) to 1e-9 relative.
std::pair<double, double> minimize_fk(u64 k);

struct DivisorCandidate {
    u64 d = 0;
    u64 n = 0;
    u64 gcd_dn = 0;
    double thm4_i_value = 0.0;
};

struct DivisorSearchResult {
    u64 k = 0;
    std::vector<DivisorCandidate> candidates; // d ascending, 1 < d < k, gcd(d, k/d) = 1
    std::optional<u64> best_d;                // minimizer of thm4_i; ties -> smaller d
    std::pair<double, double> x0_bracket;     // (k^{1/2}, k^{3/4})
};

// Requires k | p-1. Empty candidate list when k is a prime power.
DivisorSearchResult optimal_divisor(u64 p, u64 k);

// Nonprimelike-exponent bound 2*k^{3/4}*sqrt(p); applicable iff
// 17 < k < sqrt(p) (strict),
// k not a prime power, and some d | k has k^{1/2} < d < k^{3/4} (strict)
// with gcd(d, k/d) = 1. Interval tests are exact integer comparisons.
BoundEvaluation bound_thm10(u64 p, u64 k);

// Conjectured reference line (k*p)^{1/2+eps}; never asserted as a bound.
// Throws Error{domain_error} for eps < 0.
double conjecture_line(u64 p, u64 k, double epsilon);

struct ImprovementRatio {
    double exact = 0.0;  // c_0(k)/c_d(k) with k = d*n
    double approx = 0.0; // (sqrt(d)*n)/(sqrt(d)+n)
    double difference = 0.0;
};

// Requires d, n >= 2 (throws Error{domain_error} otherwise).
ImprovementRatio improvement_ratio(u64 d, u64 n, u64 p);

} // namespace expsum
