// expsum: evaluate complete exponential sums S_k(s) and twisted sums
// T_d(chi^e, s) over prime fields, compute the named bound families, and run
// the identity/inequality verification suites.
//
// Subcommands: eval, bounds, spectrum, scan, verify. Exit codes: 0 success
// (findings allowed), 1 verification failure, 2 usage or domain error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "expsum/bounds.hpp"
#include "expsum/characters.hpp"
#include "expsum/errors.hpp"
#include "expsum/expsums.hpp"
#include "expsum/prime_field.hpp"
#include "expsum/verify.hpp"

namespace {

using namespace expsum;

std::string f12(double v) { return fmt_sig_full(v, 12); }

void write_out(const std::string& path, const std::string& data) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw Error(errc::io_error, "cannot open " + path + " for writing");
    os << data;
    if (!os) throw Error(errc::io_error, "write failed for " + path);
}

int cmd_eval(u64 p, u64 k, u64 s, const std::string& format) {
    FieldContext ctx = build_field_context(p);
    if (s >= p) throw Error(errc::domain_error, "s must lie in [0, p)");
    SumValue v = eval_S(ctx, k, s);
    if (format == "csv") {
        std::printf("p,k,s,re,im,magnitude\n");
        std::printf("%llu,%llu,%llu,%s,%s,%s\n", (unsigned long long)p, (unsigned long long)k,
                    (unsigned long long)s, f12(v.re).c_str(), f12(v.im).c_str(),
                    f12(v.magnitude()).c_str());
    } else if (format == "records") {
        nlohmann::json j{{"p", p}, {"k", k}, {"s", s},
                         {"re", v.re}, {"im", v.im}, {"magnitude", v.magnitude()}};
        std::printf("%s\n", j.dump().c_str());
    } else {
        std::printf("p = %llu\nk = %llu\ns = %llu\n", (unsigned long long)p, (unsigned long long)k,
                    (unsigned long long)s);
        std::printf("re = %s\nim = %s\nmagnitude = %s\n", f12(v.re).c_str(), f12(v.im).c_str(),
                    f12(v.magnitude()).c_str());
    }
    return 0;
}

struct BoundRow {
    std::string name;
    bool applicable;
    double value;
    std::string params;
};

int cmd_bounds(u64 p, u64 k_in, double epsilon, const std::string& format) {
    FieldContext ctx = build_field_context(p);
    if (k_in < 1) throw Error(errc::domain_error, "k must be >= 1");
    u64 k = reduce_exponent(ctx, k_in);
    bool reduced = k != k_in;

    std::vector<BoundRow> rows;
    auto add = [&](const BoundEvaluation& ev, std::string params) {
        rows.push_back({bound_name(ev.name), ev.applicable, ev.value, std::move(params)});
    };

    add(bound_classical(k, p), "");
    add(bound_mvw(k, p), "");
    add(bound_hbk(k, p), "");
    DivisorSearchResult ds = optimal_divisor(p, k);
    if (ds.candidates.empty()) {
        rows.push_back({"thm4_i", false, 0.0, "no coprime split"});
    } else {
        for (const auto& c : ds.candidates)
            add(bound_thm4(p, k, c.d, Thm4Case::i),
                "d=" + std::to_string(c.d) + " n=" + std::to_string(c.n));
    }
    if (k % 2 == 0)
        add(bound_thm4(p, k, k / 2, Thm4Case::ii), "d=" + std::to_string(k / 2));
    else
        rows.push_back({"thm4_ii", false, 0.0, "k odd"});
    if (k % 4 == 0)
        add(bound_thm4(p, k, k / 4, Thm4Case::iii), "d=" + std::to_string(k / 4));
    else
        rows.push_back({"thm4_iii", false, 0.0, "4 does not divide k"});
    {
        BoundEvaluation ev = bound_thm10(p, k);
        add(ev, ev.applicable ? "d=" + std::to_string(ev.d) + " n=" + std::to_string(ev.n) : "");
    }
    rows.push_back({"conjecture", true, conjecture_line(p, k, epsilon),
                    "epsilon=" + fmt_sig(epsilon, 7)});
    // The thm9 family targets |T_d(chi,s)|^2 rather than |S_k(s)|.
    std::vector<BoundRow> trows;
    for (u64 n : divisors(k)) {
        if (n < 2) continue;
        u64 d = k / n;
        for (int c = 1; c <= 3; ++c) {
            BoundEvaluation ev = bound_thm9(p, d, n, c);
            if (ev.applicable)
                trows.push_back({bound_name(ev.name), true, ev.value,
                                 "d=" + std::to_string(d) + " n=" + std::to_string(n)});
        }
    }

    if (format == "csv" || format == "records") {
        if (format == "csv") std::printf("bound,applicable,value,params\n");
        for (const auto& lists : {&rows, &trows}) {
            for (const auto& r : *lists) {
                if (format == "csv") {
                    std::printf("%s,%s,%s,%s\n", r.name.c_str(), r.applicable ? "true" : "false",
                                r.applicable ? fmt_sig(r.value, 7).c_str() : "", r.params.c_str());
                } else {
                    nlohmann::json j{{"bound", r.name}, {"applicable", r.applicable}, {"params", r.params}};
                    if (r.applicable) j["value"] = r.value; else j["value"] = nullptr;
                    std::printf("%s\n", j.dump().c_str());
                }
            }
        }
    } else {
        std::printf("p = %llu  k = %llu", (unsigned long long)p, (unsigned long long)k);
        if (reduced)
            std::printf("  (reduced from k = %llu via gcd with p-1)", (unsigned long long)k_in);
        std::printf("\n%-11s %-11s %-14s %s\n", "bound", "applicable", "value", "params");
        for (const auto& r : rows)
            std::printf("%-11s %-11s %-14s %s\n", r.name.c_str(), r.applicable ? "yes" : "no",
                        r.applicable ? fmt_sig(r.value, 7).c_str() : "-", r.params.c_str());
        if (!trows.empty()) {
            std::printf("\nbounds on |T_d(chi,s)|^2\n");
            for (const auto& r : trows)
                std::printf("%-11s %-11s %-14s %s\n", r.name.c_str(), "yes",
                            fmt_sig(r.value, 7).c_str(), r.params.c_str());
        }
    }
    return 0;
}

int cmd_spectrum(u64 p, u64 d, u64 n, u64 s, const std::string& format) {
    FieldContext ctx = build_field_context(p);
    if (s >= p) throw Error(errc::domain_error, "s must lie in [0, p)");
    SpectrumDecomposition dec = spectrum(ctx, d, n, s);
    SumValue direct = eval_S(ctx, d * n, s);
    double dev = std::abs(dec.recombined.value() - direct.value());
    if (format == "csv") {
        std::printf("e,re,im,magnitude\n");
        for (u64 e = 0; e < n; ++e) {
            const SumValue& c = dec.components[e];
            std::printf("%llu,%s,%s,%s\n", (unsigned long long)e, f12(c.re).c_str(),
                        f12(c.im).c_str(), f12(c.magnitude()).c_str());
        }
        std::printf("recombined,%s,%s,%s\n", f12(dec.recombined.re).c_str(),
                    f12(dec.recombined.im).c_str(), f12(dec.recombined.magnitude()).c_str());
        std::printf("direct,%s,%s,%s\n", f12(direct.re).c_str(), f12(direct.im).c_str(),
                    f12(direct.magnitude()).c_str());
    } else if (format == "records") {
        for (u64 e = 0; e < n; ++e) {
            const SumValue& c = dec.components[e];
            nlohmann::json j{{"p", p}, {"d", d}, {"n", n}, {"s", s}, {"e", e},
                             {"re", c.re}, {"im", c.im}, {"magnitude", c.magnitude()}};
            std::printf("%s\n", j.dump().c_str());
        }
        nlohmann::json j{{"p", p}, {"d", d}, {"n", n}, {"s", s},
                         {"recombined_re", dec.recombined.re}, {"recombined_im", dec.recombined.im},
                         {"direct_re", direct.re}, {"direct_im", direct.im}, {"deviation", dev}};
        std::printf("%s\n", j.dump().c_str());
    } else {
        std::printf("p = %llu  d = %llu  n = %llu  s = %llu\n", (unsigned long long)p,
                    (unsigned long long)d, (unsigned long long)n, (unsigned long long)s);
        for (u64 e = 0; e < n; ++e) {
            const SumValue& c = dec.components[e];
            std::printf("T_d(chi^%llu): re = %s  im = %s  magnitude = %s\n", (unsigned long long)e,
                        f12(c.re).c_str(), f12(c.im).c_str(), f12(c.magnitude()).c_str());
        }
        std::printf("recombined:  re = %s  im = %s  magnitude = %s\n", f12(dec.recombined.re).c_str(),
                    f12(dec.recombined.im).c_str(), f12(dec.recombined.magnitude()).c_str());
        std::printf("direct S_k:  re = %s  im = %s  magnitude = %s\n", f12(direct.re).c_str(),
                    f12(direct.im).c_str(), f12(direct.magnitude()).c_str());
        std::printf("deviation = %s\n", fmt_sig(dev, 7).c_str());
    }
    return 0;
}

int cmd_scan(ScanConfig cfg, const std::string& out_path, const std::string& format) {
    std::vector<ScanRecord> rows = scan(cfg);
    std::string payload = format == "records" ? scan_records(rows) : scan_csv(rows);
    if (!out_path.empty()) {
        write_out(out_path, payload);
    } else {
        std::fputs(payload.c_str(), stdout);
    }
    for (const auto& r : rows) {
        if (!r.sound)
            std::fprintf(stderr, "finding: p=%llu k=%llu max_abs=%s exceeds a printed bound\n",
                         (unsigned long long)r.p, (unsigned long long)r.k,
                         fmt_sig(r.max_abs, 7).c_str());
    }
    std::fputs(scan_threshold_notes(rows).c_str(), stderr);
    std::fprintf(stderr, "%zu rows\n", rows.size());
    return 0;
}

std::string param_suffix(const CheckResult& r) {
    std::string s = " p=" + std::to_string(r.p);
    auto put = [&](const char* name, const std::optional<u64>& v) {
        if (v) s += std::string(" ") + name + "=" + std::to_string(*v);
    };
    put("k", r.k);
    put("d", r.d);
    put("n", r.n);
    put("e", r.e);
    put("s", r.s);
    return s;
}

int cmd_verify(VerifyConfig cfg, const std::string& out_path, const std::string& format) {
    VerifyReport report = run_suites(cfg);
    std::string summary = std::to_string(report.total()) + " checks, " +
                          std::to_string(report.failures()) + " failures, " +
                          std::to_string(report.findings()) + " findings";
    if (format == "csv" || format == "records") {
        std::string payload =
            format == "csv" ? checks_csv(report.checks) : checks_records(report.checks);
        if (!out_path.empty())
            write_out(out_path, payload);
        else
            std::fputs(payload.c_str(), stdout);
        std::fprintf(stderr, "%s\n", summary.c_str());
    } else {
        for (const auto& r : report.checks) {
            if (r.passed && !r.finding) continue;
            const char* label = r.finding ? "FINDING" : "FAIL";
            std::printf("%s %s%s: observed=%s expected=%s tol=%s%s%s\n", label, r.check_id.c_str(),
                        param_suffix(r).c_str(), fmt_sig(std::abs(r.observed), 12).c_str(),
                        fmt_sig(std::abs(r.expected), 12).c_str(), fmt_sig(r.tolerance, 7).c_str(),
                        r.note.empty() ? "" : " note=", r.note.c_str());
        }
        std::printf("%s\n", summary.c_str());
        if (!out_path.empty()) write_out(out_path, checks_csv(report.checks));
    }
    return report.failures() > 0 ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"complete exponential sums over prime fields: evaluation, bounds, verification"};
    app.require_subcommand(1);

    unsigned threads = 1;
    app.add_option("--threads", threads, "worker count")
        ->envname("EXPSUM_THREADS")
        ->check(CLI::Range(1u, 1024u));

    std::string format = "table";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "csv", "records"}));

    u64 p = 0, k = 1, s = 0, d = 1, n = 1;
    u64 p_min = 5, p_max = 257;
    double epsilon = 0.0;
    std::string out_path;
    std::vector<u64> k_list;
    u64 k_max = 0;
    std::vector<std::string> suite_names;

    CLI::App* eval = app.add_subcommand("eval", "evaluate S_k(s)");
    eval->fallthrough();
    eval->add_option("--p", p, "prime modulus")->required();
    eval->add_option("--k", k, "exponent")->required()->check(CLI::PositiveNumber);
    eval->add_option("--s", s, "frequency")->required();

    CLI::App* bounds = app.add_subcommand("bounds", "bound table for |S_k(s)|");
    bounds->fallthrough();
    bounds->add_option("--p", p, "prime modulus")->required();
    bounds->add_option("--k", k, "exponent")->required()->check(CLI::PositiveNumber);
    bounds->add_option("--epsilon", epsilon, "conjecture-line epsilon")->check(CLI::NonNegativeNumber);

    CLI::App* spectrumc = app.add_subcommand("spectrum", "character spectrum of S_{dn}(s)");
    spectrumc->fallthrough();
    spectrumc->add_option("--p", p, "prime modulus")->required();
    spectrumc->add_option("--d", d, "inner exponent")->required()->check(CLI::PositiveNumber);
    spectrumc->add_option("--n", n, "character order")->required()->check(CLI::PositiveNumber);
    spectrumc->add_option("--s", s, "frequency")->required();

    CLI::App* scanc = app.add_subcommand("scan", "sharpness scan over a prime range");
    scanc->fallthrough();
    scanc->add_option("--p-min", p_min, "lowest prime");
    scanc->add_option("--p-max", p_max, "highest prime");
    scanc->add_option("--k", k_list, "explicit exponent list (default: all k | p-1)");
    scanc->add_option("--k-max", k_max, "ceiling on k");
    scanc->add_option("--epsilon", epsilon, "conjecture-line epsilon")->check(CLI::NonNegativeNumber);
    scanc->add_option("--out", out_path, "output file");

    CLI::App* verifyc = app.add_subcommand("verify", "run verification suites");
    verifyc->fallthrough();
    verifyc->add_option("--p-min", p_min, "lowest prime");
    verifyc->add_option("--p-max", p_max, "highest prime");
    verifyc->add_option("--suite", suite_names, "suites: all moments spectrum lemma7 cosets bounds")
        ->check(CLI::IsMember({"all", "moments", "spectrum", "lemma7", "cosets", "bounds"}));
    verifyc->add_option("--out", out_path, "report file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (eval->parsed()) return cmd_eval(p, k, s, format);
        if (bounds->parsed()) return cmd_bounds(p, k, epsilon, format);
        if (spectrumc->parsed()) return cmd_spectrum(p, d, n, s, format);
        if (scanc->parsed()) {
            if (p_min < 5 || p_min > p_max)
                throw expsum::Error(expsum::errc::config_error, "need 5 <= p-min <= p-max");
            ScanConfig cfg;
            cfg.p_min = p_min;
            cfg.p_max = p_max;
            cfg.k_list = k_list;
            if (k_max > 0) cfg.k_max = k_max;
            cfg.epsilon = epsilon;
            cfg.threads = threads;
            return cmd_scan(cfg, out_path, format);
        }
        if (verifyc->parsed()) {
            if (p_min < 5 || p_min > p_max)
                throw expsum::Error(expsum::errc::config_error, "need 5 <= p-min <= p-max");
            VerifyConfig cfg;
            cfg.p_min = p_min;
            cfg.p_max = p_max;
            cfg.threads = threads;
            for (const auto& name : suite_names) {
                if (name == "all") {
                    cfg.suites.clear();
                    break;
                }
                if (name == "moments") cfg.suites.push_back(SuiteId::moments);
                if (name == "spectrum") cfg.suites.push_back(SuiteId::spectrum);
                if (name == "lemma7") cfg.suites.push_back(SuiteId::lemma7);
                if (name == "cosets") cfg.suites.push_back(SuiteId::cosets);
                if (name == "bounds") cfg.suites.push_back(SuiteId::bounds);
            }
            return cmd_verify(cfg, out_path, format);
        }
    } catch (const expsum::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
