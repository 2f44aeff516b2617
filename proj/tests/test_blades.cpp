#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "clifft/blades.hpp"

using namespace clifft;

namespace {

// Literal transposition-count oracle.  A blade is the product of its set
// generators in canonical (descending bit position) order; multiplying two
// blades concatenates the sequences and re-sorts one adjacent swap at a
// time, flipping the sign per swap and resolving repeated generators by
// their squares.  Deliberately slow and obvious.
SignedBlade oracle_blade_mul(BladeMask a, BladeMask b, BladeMask negative) {
    std::vector<int> seq;
    for (int i = 63; i >= 0; --i)
        if ((a >> i) & 1) seq.push_back(i);
    for (int i = 63; i >= 0; --i)
        if ((b >> i) & 1) seq.push_back(i);

    int sign = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
            if (seq[i] == seq[i + 1]) {
                if ((negative >> seq[i]) & 1) sign = -sign;
                seq.erase(seq.begin() + i, seq.begin() + i + 2);
                changed = true;
                break;
            }
            if (seq[i] < seq[i + 1]) {
                std::swap(seq[i], seq[i + 1]);
                sign = -sign;
                changed = true;
                break;
            }
        }
    }

    BladeMask mask = 0;
    for (int g : seq) mask |= BladeMask{1} << g;
    return {sign, mask};
}

}  // namespace

TEST_CASE("split negative mask marks the odd bit positions") {
    CHECK(split_negative_mask(0) == 0);
    CHECK(split_negative_mask(1) == 0b10);
    CHECK(split_negative_mask(2) == 0b1010);
    CHECK(split_negative_mask(3) == 0b101010);
}

TEST_CASE("grade and tilde count") {
    CHECK(grade_of(0) == 0);
    CHECK(grade_of(0b1011) == 3);
    CHECK(tilde_count(0) == 0);
    CHECK(tilde_count(0b1011) == 2);
    CHECK(tilde_count(0b0101) == 0);
}

TEST_CASE("involution signs on frozen masks") {
    CHECK(alpha_sign(0) == 1);
    CHECK(alpha_sign(0b01) == -1);   // e0
    CHECK(alpha_sign(0b11) == 1);    // te0 e0
    CHECK(beta_sign(0b01) == 1);     // e0
    CHECK(beta_sign(0b10) == -1);    // te0
    CHECK(beta_sign(0b11) == -1);    // one tilde factor
    CHECK(reversal_sign(0b01) == 1);  // grade 1
    CHECK(reversal_sign(0b11) == -1); // grade 2
    CHECK(reversal_sign(0) == 1);
}

TEST_CASE("frozen blade products") {
    const BladeMask neg1 = split_negative_mask(1);

    SECTION("identity blade") {
        for (BladeMask m = 0; m < 4; ++m) {
            const auto r = blade_mul(0, m, neg1);
            CHECK(r.sign == 1);
            CHECK(r.mask == m);
        }
    }
    SECTION("e0 * te0 needs one transposition to reach te0 e0") {
        const auto r = blade_mul(0b01, 0b10, neg1);
        CHECK(r.sign == -1);
        CHECK(r.mask == 0b11);
    }
    SECTION("te0 squares to -1") {
        const auto r = blade_mul(0b10, 0b10, neg1);
        CHECK(r.sign == -1);
        CHECK(r.mask == 0);
    }
    SECTION("e0 squares to +1") {
        const auto r = blade_mul(0b01, 0b01, neg1);
        CHECK(r.sign == 1);
        CHECK(r.mask == 0);
    }
    SECTION("in the complexified algebra every generator squares to +1") {
        const auto r = blade_mul(0b10, 0b10, 0);
        CHECK(r.sign == 1);
        CHECK(r.mask == 0);
    }
}

TEST_CASE("blade_mul matches the transposition-count oracle exhaustively") {
    for (int n = 0; n <= 3; ++n) {
        const BladeMask size = BladeMask{1} << (2 * n);
        for (BladeMask negative : {split_negative_mask(n), BladeMask{0}}) {
            for (BladeMask a = 0; a < size; ++a) {
                for (BladeMask b = 0; b < size; ++b) {
                    const auto fast = blade_mul(a, b, negative);
                    const auto slow = oracle_blade_mul(a, b, negative);
                    REQUIRE(fast.sign == slow.sign);
                    REQUIRE(fast.mask == slow.mask);
                }
            }
        }
    }
}

TEST_CASE("blade products associate") {
    const int n = 2;
    const BladeMask size = BladeMask{1} << (2 * n);
    const BladeMask neg = split_negative_mask(n);
    for (BladeMask a = 0; a < size; ++a) {
        for (BladeMask b = 0; b < size; ++b) {
            for (BladeMask c = 0; c < size; c += 3) {
                const auto ab = blade_mul(a, b, neg);
                const auto bc = blade_mul(b, c, neg);
                const auto left = blade_mul(ab.mask, c, neg);
                const auto right = blade_mul(a, bc.mask, neg);
                REQUIRE(left.mask == right.mask);
                REQUIRE(ab.sign * left.sign == bc.sign * right.sign);
            }
        }
    }
}
