#pragma once

#include <bit>
#include <cstdint>

namespace clifft {

// Basis blades of Cl(n,n) are encoded as bitmasks over 2n generator slots:
// bit 2k is the generator e_k (squares to +1) and bit 2k+1 is its partner
// te_k (squares to -1).  The canonical blade for a mask is the product of
// its generators taken in descending bit position, so te_k precedes e_k and
// higher pairs precede lower ones.  For the complexified algebra the same
// masks are used but every generator squares to +1.
using BladeMask = std::uint64_t;

struct SignedBlade {
    int sign;  // +1 or -1
    BladeMask mask;
};

inline constexpr BladeMask kTildeBits = 0xAAAAAAAAAAAAAAAAull;

// Generators that square to -1 in the split algebra Cl(n,n).
inline constexpr BladeMask split_negative_mask(int n) {
    return n == 0 ? 0 : kTildeBits >> (64 - 2 * n);
}

inline constexpr int grade_of(BladeMask m) { return std::popcount(m); }

inline constexpr int tilde_count(BladeMask m) { return std::popcount(m & kTildeBits); }

inline constexpr int alpha_sign(BladeMask m) { return (grade_of(m) & 1) ? -1 : 1; }

inline constexpr int beta_sign(BladeMask m) { return (tilde_count(m) & 1) ? -1 : 1; }

inline constexpr int reversal_sign(BladeMask m) {
    const int g = grade_of(m);
    return ((g * (g - 1) / 2) & 1) ? -1 : 1;
}

// Mask M such that the sign of (canonical blade p) * (canonical blade q) is
// (-1)^popcount(q & M).  Folds the anticommutation swaps (prefix parity of p
// below each slot) with the squares of repeated generators (p & negative).
inline constexpr BladeMask product_sign_mask(BladeMask p, BladeMask negative) {
    BladeMask swaps = 0;
    int parity = 0;
    for (int j = 0; p >> j; ++j) {
        if (parity) swaps |= BladeMask{1} << j;
        parity ^= static_cast<int>((p >> j) & 1);
    }
    // Bits of q at or above the highest bit of p see the full parity of p,
    // which the loop above stopped tracking.
    if (parity) {
        const int top = std::bit_width(p);
        if (top < 64) swaps |= ~BladeMask{0} << top;
    }
    return swaps ^ (p & negative);
}

// Product of two canonical blades in the algebra whose negative-squaring
// generators are flagged by `negative` (split_negative_mask(n) for Cl(n,n),
// zero for the complexified algebra).
inline constexpr SignedBlade blade_mul(BladeMask a, BladeMask b, BladeMask negative) {
    const BladeMask m = product_sign_mask(a, negative);
    const int sign = (std::popcount(b & m) & 1) ? -1 : 1;
    return {sign, a ^ b};
}

}  // namespace clifft
