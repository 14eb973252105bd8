#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "expsum/bounds.hpp"
#include "expsum/prime_field.hpp"

namespace expsum {

// How a CheckResult's observed/expected pair is compared. Fixed per check_id.
enum class CheckKind {
    equality,    // passed <=> |observed - expected| <= tolerance
    upper_bound, // passed <=> Re(observed) <= Re(expected) + tolerance
    record,      // informational row, always passes
};

// One verification check. `finding` marks rows that record a deviation from
// a printed statement while matching the brute-force oracle; findings never
// count as failures and never affect exit codes.
struct CheckResult {
    std::string check_id;
    u64 p = 0;
    std::optional<u64> k, d, n, e, s;
    CheckKind kind = CheckKind::equality;
    cplx observed{0.0, 0.0};
    cplx expected{0.0, 0.0};
    double tolerance = 0.0;
    bool passed = true;
    bool finding = false;
    std::string note;
};

// Second moments: the exact identity for S_k, the commonly quoted value as
// a finding, and the twisted-sum identity d*p*(p-1) for every split d*n = k
// and every character of exact order n. Requires k | p-1.
std::vector<CheckResult> suite_moments(const FieldContext& ctx, u64 k);

// Spectrum identity for every split d*n | p-1 with n >= 2 and every s.
std::vector<CheckResult> suite_spectrum(const FieldContext& ctx);

// Incomplete-sum checks: |direct| <= dn, closed form vs direct (mismatch =>
// finding), and the exact/sharp special cases.
std::vector<CheckResult> suite_lemma7(const FieldContext& ctx);

// |T_d(chi,s)| constancy on the power-residue classes, the d = 1 Gauss
// baseline, and the thm9 bound comparisons.
std::vector<CheckResult> suite_cosets(const FieldContext& ctx);

// max|S_k| against every applicable bound, realness for odd k, gcd-reduction
// consistency, split-coefficient consistency, f_k minimizer. Requires k | p-1.
std::vector<CheckResult> suite_bounds(const FieldContext& ctx, u64 k);

enum class SuiteId { moments, spectrum, lemma7, cosets, bounds };

struct VerifyConfig {
    u64 p_min = 5;
    u64 p_max = 257;
    std::vector<SuiteId> suites; // empty = all
    unsigned threads = 1;
    u64 field_cap = kDefaultFieldCap;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    std::size_t total() const { return checks.size(); }
    std::size_t failures() const;
    std::size_t findings() const;
};

// Runs the selected suites over every prime in [p_min, p_max]; rows are in
// deterministic (p, suite, emission) order regardless of thread count.
VerifyReport run_suites(const VerifyConfig& cfg);

// One scan row per (p, k).
struct ScanRecord {
    u64 p = 0;
    u64 k = 0;
    std::optional<u64> best_d;
    std::optional<u64> n;
    double max_abs = 0.0;
    u64 argmax_s = 0;
    std::optional<double> classical, mvw, hbk, thm4_i, thm4_ii, thm4_iii, thm10;
    double sqrt_kp = 0.0;
    double ratio_max_over_sqrt_kp = 0.0;
    std::string tightest_bound;
    bool sound = true; // max_abs <= every applicable bound + 1e-6*sqrt(p)
};

struct ScanConfig {
    u64 p_min = 5;
    u64 p_max = 257;
    std::vector<u64> k_list;     // empty = all k | p-1 with k >= 2
    std::optional<u64> k_max;    // optional ceiling on k
    double epsilon = 0.0;
    unsigned threads = 1;
    u64 field_cap = kDefaultFieldCap;
};

// Throws Error{config_error} when the range contains no prime.
std::vector<ScanRecord> scan(const ScanConfig& cfg);

// Pinned CSV schema:
// p,k,best_d,n,max_abs,argmax_s,classical,mvw,hbk,thm4_i,thm4_ii,thm4_iii,
// thm10,sqrt_kp,ratio_max_over_sqrt_kp,tightest_bound
// Inapplicable bounds are emitted as empty fields.
std::string scan_csv(const std::vector<ScanRecord>& rows);

// Line-delimited JSON mirror of the CSV fields.
std::string scan_records(const std::vector<ScanRecord>& rows);

std::string checks_csv(const std::vector<CheckResult>& checks);
std::string checks_records(const std::vector<CheckResult>& checks);

// For each k in the scan, the smallest prime in range where thm4_i at the
// optimal divisor beats the classical bound (empty if never).
std::string scan_threshold_notes(const std::vector<ScanRecord>& rows);

} // namespace expsum
