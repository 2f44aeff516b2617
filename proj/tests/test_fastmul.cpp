#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "clifft/fastmul.hpp"

using namespace clifft;
using C = std::complex<double>;

namespace {

constexpr double kTol = 1e-10;

Multivector<double> random_mv(int n, std::mt19937_64& rng) {
    Multivector<double> mv(n);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (std::size_t i = 0; i < mv.size(); ++i) mv[i] = dist(rng);
    return mv;
}

double rel_deviation(const Multivector<double>& got, const Multivector<double>& want) {
    double worst = 0.0, ref = 0.0;
    for (std::size_t i = 0; i < want.size(); ++i) {
        worst = std::max(worst, std::abs(got[i] - want[i]));
        ref = std::max(ref, std::abs(want[i]));
    }
    return worst / std::max(ref, 1.0);
}

}  // namespace

TEST_CASE("frozen fast products") {
    const auto one = Multivector<double>::scalar(2, 1.0);
    std::mt19937_64 rng(51);
    const auto a = random_mv(2, rng);
    CHECK(rel_deviation(fast_mul(one, a), a) <= kTol);

    const auto e0 = Multivector<double>::basis_blade(1, 0b01);
    const auto te0 = Multivector<double>::basis_blade(1, 0b10);
    CHECK(fast_mul(e0, te0) == Multivector<double>::basis_blade(1, 0b11, -1.0));
    CHECK(fast_mul(e0, e0) == Multivector<double>::scalar(1, 1.0));
}

TEST_CASE("fast_mul matches the naive oracle on random pairs") {
    std::mt19937_64 rng(52);
    for (int n = 1; n <= 5; ++n) {
        for (int trial = 0; trial < 100; ++trial) {
            const auto a = random_mv(n, rng);
            const auto b = random_mv(n, rng);
            REQUIRE(rel_deviation(fast_mul(a, b), geometric_product_naive(a, b)) <= kTol);
        }
    }
}

TEST_CASE("fast_mul is exact on basis-blade pairs") {
    for (int n = 0; n <= 3; ++n) {
        const std::size_t N = std::size_t{1} << (2 * n);
        for (std::size_t p = 0; p < N; ++p) {
            const auto bp = Multivector<double>::basis_blade(n, p);
            for (std::size_t q = 0; q < N; ++q) {
                const auto bq = Multivector<double>::basis_blade(n, q);
                REQUIRE(fast_mul(bp, bq) == geometric_product_naive(bp, bq));
            }
        }
    }
}

TEST_CASE("fast_mul distributes exactly and associates within tolerance") {
    std::mt19937_64 rng(53);
    const int n = 3;
    Multivector<double> a(n), b(n), c(n);
    std::uniform_int_distribution<int> dist(-3, 3);
    for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] = dist(rng);
        b[i] = dist(rng);
        c[i] = dist(rng);
    }
    CHECK(fast_mul(a, b + c) == fast_mul(a, b) + fast_mul(a, c));

    const auto ra = random_mv(n, rng);
    const auto rb = random_mv(n, rng);
    const auto rc = random_mv(n, rng);
    CHECK(rel_deviation(fast_mul(fast_mul(ra, rb), rc), fast_mul(ra, fast_mul(rb, rc))) <= kTol);
}

TEST_CASE("complexified multivectors multiply through their own transform") {
    std::mt19937_64 rng(54);
    for (int n = 1; n <= 4; ++n) {
        Multivector<C> a(n, AlgebraKind::complex_full), b(n, AlgebraKind::complex_full);
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            a[i] = {dist(rng), dist(rng)};
            b[i] = {dist(rng), dist(rng)};
        }
        const auto want = geometric_product_naive(a, b);
        const auto got = fast_mul(a, b);
        double worst = 0.0, ref = 0.0;
        for (std::size_t i = 0; i < want.size(); ++i) {
            worst = std::max(worst, std::abs(got[i] - want[i]));
            ref = std::max(ref, std::abs(want[i]));
        }
        REQUIRE(worst / std::max(ref, 1.0) <= kTol);
    }
}

TEST_CASE("parallel fast_mul is bitwise identical") {
    std::mt19937_64 rng(55);
    const auto a = random_mv(4, rng);
    const auto b = random_mv(4, rng);
    CHECK(fast_mul(a, b, true) == fast_mul(a, b, false));
}

TEST_CASE("fast_mul rejects mismatched operands") {
    const Multivector<double> a(2), b(3);
    CHECK_THROWS_AS(fast_mul(a, b), std::invalid_argument);
}
