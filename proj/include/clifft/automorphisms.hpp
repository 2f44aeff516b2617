#pragma once

#include <bit>
#include <cstddef>

#include "clifft/rep_matrix.hpp"

namespace clifft {

// Representation-side images of the coefficient involutions, defined on
// right-basis matrices: parity_flip(F(a)) == F(alpha(a)),
// imaginary_flip(F(a)) == F(beta(a)), rep_reversal(F(a)) == F(reverse(a)).

// Grade involution on the representation: entry (i,j) changes sign when
// popcount(i^j) is odd.  Single O(N) sweep.
template <Scalar S>
void parity_flip_inplace(RepMatrix<S>& m) {
    const std::size_t d = m.dim();
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c)
            if (std::popcount(r ^ c) & 1) m(r, c) = -m(r, c);
}

template <Scalar S>
RepMatrix<S> parity_flip(const RepMatrix<S>& m) {
    RepMatrix<S> out = m;
    parity_flip_inplace(out);
    return out;
}

// Tilde-generator flip on the representation.  One pass per block level:
// exchange the quadrants diagonally, then grade-flip inside each quadrant.
// Both (i,j) and its partner (i^h, j^h) share i^j, so the pair swaps with a
// common sign.  n passes over N entries: O(N log N).
template <Scalar S>
void imaginary_flip_inplace(RepMatrix<S>& m) {
    const std::size_t d = m.dim();
    for (std::size_t h = d / 2; h >= 1; h /= 2) {
        for (std::size_t r = 0; r < d; ++r) {
            if (r & h) continue;
            for (std::size_t c = 0; c < d; ++c) {
                const bool neg = std::popcount((r ^ c) & (h - 1)) & 1;
                S& top = m(r, c);
                S& bot = m(r ^ h, c ^ h);
                const S t = top;
                top = neg ? -bot : bot;
                bot = neg ? -t : t;
            }
        }
    }
}

template <Scalar S>
RepMatrix<S> imaginary_flip(const RepMatrix<S>& m) {
    RepMatrix<S> out = m;
    imaginary_flip_inplace(out);
    return out;
}

// Reversal on the representation: transpose, then the tilde flip.
template <Scalar S>
RepMatrix<S> rep_reversal(const RepMatrix<S>& m) {
    RepMatrix<S> out = transpose(m);
    imaginary_flip_inplace(out);
    return out;
}

}  // namespace clifft
