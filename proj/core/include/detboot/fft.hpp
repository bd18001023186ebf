#pragma once

#include <complex>
#include <vector>

namespace detboot::fft {

using cplx = std::complex<double>;

/// Unnormalized inverse DFT of arbitrary length:
///   out[i] = sum_k in[k] * exp(+2*pi*i*ik/N).
/// Power-of-two lengths use iterative radix-2, lengths below 64 use the
/// direct O(N^2) sum, everything else goes through Bluestein's chirp-z.
/// Deterministic: identical input gives bitwise-identical output.
std::vector<cplx> inverse_dft(const std::vector<cplx>& in);

/// Forward counterpart (exponent sign -), same dispatch. Unnormalized.
std::vector<cplx> forward_dft(const std::vector<cplx>& in);

/// Direct O(N^2) inverse DFT with per-element exact angle reduction.
/// Reference oracle for inverse_dft; also the sub-64 fallback.
std::vector<cplx> inverse_dft_direct(const std::vector<cplx>& in);

}  // namespace detboot::fft
