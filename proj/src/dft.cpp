#include "expsum/dft.hpp"

#include <cmath>
#include <utility>

#include "expsum/errors.hpp"

namespace expsum {

void fft_pow2(std::vector<cplx>& a, int sign) {
    const std::size_t m = a.size();
    for (std::size_t i = 1, j = 0; i < m; ++i) {
        std::size_t bit = m >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= m; len <<= 1) {
        double ang = sign * kTwoPi / static_cast<double>(len);
        cplx wlen{std::cos(ang), std::sin(ang)};
        for (std::size_t i = 0; i < m; i += len) {
            cplx w{1.0, 0.0};
            for (std::size_t j = 0; j < len / 2; ++j) {
                cplx u = a[i + j];
                cplx v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

ChirpZ::ChirpZ(std::size_t n) : n_(n) {
    if (n == 0) throw Error(errc::domain_error, "transform length must be positive");
    m_ = 1;
    while (m_ < 2 * n - 1) m_ <<= 1;

    const double pi_over_n = kTwoPi / (2.0 * static_cast<double>(n));
    chirp_.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        // j^2 reduced mod 2n keeps the phase argument small and exact.
        u64 t = (static_cast<u64>(j) * j) % (2 * static_cast<u64>(n));
        double ang = pi_over_n * static_cast<double>(t);
        chirp_[j] = {std::cos(ang), std::sin(ang)};
    }

    bhat_.assign(m_, cplx{0.0, 0.0});
    bhat_[0] = std::conj(chirp_[0]);
    for (std::size_t j = 1; j < n; ++j) {
        bhat_[j] = std::conj(chirp_[j]);
        bhat_[m_ - j] = std::conj(chirp_[j]);
    }
    fft_pow2(bhat_, -1);
}

std::vector<cplx> ChirpZ::transform(const std::vector<cplx>& a) const {
    if (a.size() != n_) throw Error(errc::domain_error, "input length does not match plan");
    std::vector<cplx> work(m_, cplx{0.0, 0.0});
    for (std::size_t j = 0; j < n_; ++j) work[j] = a[j] * chirp_[j];
    fft_pow2(work, -1);
    for (std::size_t j = 0; j < m_; ++j) work[j] *= bhat_[j];
    fft_pow2(work, +1);
    const double scale = 1.0 / static_cast<double>(m_);
    std::vector<cplx> out(n_);
    for (std::size_t s = 0; s < n_; ++s) out[s] = work[s] * scale * chirp_[s];
    return out;
}

} // namespace expsum
