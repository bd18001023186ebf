#include "detboot/fft.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace detboot::fft {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// In-place iterative radix-2 Cooley-Tukey. sign = +1 gives the inverse
// transform's exponent, -1 the forward one. Unnormalized.
void fft_pow2(std::vector<cplx>& a, int sign) {
    const std::size_t n = a.size();
    if (n < 2) return;
    // bit-reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * kTwoPi / static_cast<double>(len);
        const cplx wlen(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            cplx w(1.0, 0.0);
            for (std::size_t j = 0; j < len / 2; ++j) {
                const cplx u = a[i + j];
                const cplx v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

// Chirp factor exp(sign*i*pi*j^2/n) with j^2 reduced mod 2n in integer
// arithmetic first; naive pi*j^2/n loses ~j^2/n ulps of angle otherwise.
cplx chirp(std::uint64_t j, std::uint64_t n, int sign) {
    const std::uint64_t r = (j * j) % (2 * n);
    const double ang = sign * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n);
    return {std::cos(ang), std::sin(ang)};
}

// Bluestein: re-expresses the length-n DFT with ik = (i^2 + k^2 - (i-k)^2)/2
// as a circular convolution of length m = next_pow2(2n-1).
std::vector<cplx> bluestein(const std::vector<cplx>& in, int sign) {
    const std::size_t n = in.size();
    const std::size_t m = std::bit_ceil(2 * n - 1);
    std::vector<cplx> a(m, cplx(0.0, 0.0));
    std::vector<cplx> b(m, cplx(0.0, 0.0));
    for (std::size_t j = 0; j < n; ++j) {
        a[j] = in[j] * chirp(j, n, sign);
        const cplx c = chirp(j, n, -sign);
        b[j] = c;
        if (j != 0) b[m - j] = c;
    }
    fft_pow2(a, -1);
    fft_pow2(b, -1);
    for (std::size_t j = 0; j < m; ++j) a[j] *= b[j];
    fft_pow2(a, +1);
    const double scale = 1.0 / static_cast<double>(m);
    std::vector<cplx> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * scale * chirp(i, n, sign);
    return out;
}

std::vector<cplx> dft_direct(const std::vector<cplx>& in, int sign) {
    const std::uint64_t n = in.size();
    std::vector<cplx> out(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        cplx acc(0.0, 0.0);
        for (std::uint64_t k = 0; k < n; ++k) {
            const std::uint64_t r = (i * k) % n;
            const double ang = sign * kTwoPi * static_cast<double>(r) / static_cast<double>(n);
            acc += in[k] * cplx(std::cos(ang), std::sin(ang));
        }
        out[i] = acc;
    }
    return out;
}

std::vector<cplx> dispatch(const std::vector<cplx>& in, int sign) {
    const std::size_t n = in.size();
    if (n < 64) return dft_direct(in, sign);
    if (is_pow2(n)) {
        std::vector<cplx> a = in;
        fft_pow2(a, sign);
        return a;
    }
    return bluestein(in, sign);
}

}  // namespace

std::vector<cplx> inverse_dft(const std::vector<cplx>& in) { return dispatch(in, +1); }

std::vector<cplx> forward_dft(const std::vector<cplx>& in) { return dispatch(in, -1); }

std::vector<cplx> inverse_dft_direct(const std::vector<cplx>& in) {
    return dft_direct(in, +1);
}

}  // namespace detboot::fft
