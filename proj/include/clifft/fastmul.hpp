#pragma once

#include <complex>

#include "clifft/multivector.hpp"
#include "clifft/rep_matrix.hpp"
#include "clifft/transform.hpp"

namespace clifft {

// Geometric product through the representation: transform both factors,
// multiply the matrices (classical cubic), transform back.  O(N^1.5)
// overall versus N^2 for the dense kernel.
template <Scalar S>
Multivector<S> fast_mul(const Multivector<S>& a, const Multivector<S>& b, bool parallel = false) {
    Multivector<S>::check_compatible(a, b);
    if constexpr (scalar_traits<S>::is_complex) {
        if (a.kind() == AlgebraKind::complex_full) {
            const auto fa = clifft(a, parallel);
            const auto fb = clifft(b, parallel);
            return iclifft(matmul(fa, fb), parallel);
        }
    }
    const auto fa = fft_right(a, parallel);
    const auto fb = fft_right(b, parallel);
    return ifft_right(matmul(fa, fb), parallel);
}

}  // namespace clifft
