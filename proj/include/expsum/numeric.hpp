#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <string>

namespace expsum {

using u64 = std::uint64_t;
using u32 = std::uint32_t;
using cplx = std::complex<double>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi_v<double>;

// Kahan-compensated accumulator for one real component.
class KahanSum {
public:
    void add(double x) {
        double y = x - comp_;
        double t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// Complex accumulator: independent compensation per component, fixed
// accumulation order is the caller's responsibility.
class KahanComplex {
public:
    void add(cplx z) {
        re_.add(z.real());
        im_.add(z.imag());
    }
    cplx value() const { return {re_.value(), im_.value()}; }

private:
    KahanSum re_, im_;
};

// "%.{sig}g" — trailing zeros stripped. Used for CSV fields.
std::string fmt_sig(double v, int sig);

// "%#.{sig}g" — trailing zeros kept, fixed significant-digit width.
// Used for the 12-digit CLI value output.
std::string fmt_sig_full(double v, int sig);

} // namespace expsum
