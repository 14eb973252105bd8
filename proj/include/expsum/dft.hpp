#pragma once

#include <vector>

#include "expsum/numeric.hpp"

namespace expsum {

// Arbitrary-length discrete transform with the +i sign convention:
//   X[s] = sum_{y=0}^{N-1} a[y] * exp(+2*pi*i*s*y/N).
//
// Implemented as Bluestein's chirp-z factorization sy = (s^2 + y^2 - (s-y)^2)/2,
// reducing the length-N transform to a cyclic convolution carried by a
// power-of-two radix-2 FFT of size M >= 2N-1. Quadratic phases are indexed by
// j^2 mod 2N in integer arithmetic, so the chirp stays exact for any N.
class ChirpZ {
public:
    explicit ChirpZ(std::size_t n);

    std::size_t length() const { return n_; }

    // One forward transform; input size must equal length().
    std::vector<cplx> transform(const std::vector<cplx>& a) const;

private:
    std::size_t n_;
    std::size_t m_; // power-of-two FFT size
    std::vector<cplx> chirp_;   // exp(+i*pi*j^2/N), j in [0, N)
    std::vector<cplx> bhat_;    // FFT of the conjugate-chirp kernel
};

// In-place radix-2 FFT, size must be a power of two. sign = -1 forward
// (exp(-2*pi*i*jk/M)), sign = +1 inverse without the 1/M scaling.
void fft_pow2(std::vector<cplx>& a, int sign);

} // namespace expsum
