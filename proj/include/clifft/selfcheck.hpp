#pragma once

#include <algorithm>
#include <complex>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "clifft/automorphisms.hpp"
#include "clifft/fastmul.hpp"
#include "clifft/io.hpp"
#include "clifft/structure.hpp"
#include "clifft/transform.hpp"

namespace clifft {

// Executable form of the library's contract: each check returns its verdict
// plus a serialized counterexample on failure.  The CLI selfcheck command
// and the acceptance suite both run these.

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;
};

namespace checks {

inline std::mt19937_64 seeded_rng(std::uint64_t a, std::uint64_t b) {
    return std::mt19937_64(0x9e3779b97f4a7c15ull ^ (a << 32) ^ b);
}

template <Scalar S>
Multivector<S> random_mv(int n, std::mt19937_64& rng) {
    Multivector<S> mv(n);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (std::size_t i = 0; i < mv.size(); ++i) mv[i] = S(dist(rng));
    return mv;
}

template <Scalar S>
Multivector<S> random_int_mv(int n, std::mt19937_64& rng, AlgebraKind kind = AlgebraKind::split) {
    Multivector<S> mv(n, kind);
    std::uniform_int_distribution<int> dist(-4, 4);
    for (std::size_t i = 0; i < mv.size(); ++i) mv[i] = S(double(dist(rng)));
    return mv;
}

inline Multivector<std::complex<double>> random_complex_full(int n, std::mt19937_64& rng) {
    Multivector<std::complex<double>> mv(n, AlgebraKind::complex_full);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (std::size_t i = 0; i < mv.size(); ++i) mv[i] = {dist(rng), dist(rng)};
    return mv;
}

template <Scalar S>
double relative_error(const RepMatrix<S>& got, const RepMatrix<S>& want) {
    const double ref = frobenius_norm(want);
    return frobenius_norm(got - want) / (ref > 0 ? ref : 1.0);
}

template <Scalar S>
std::string describe_pair(const Multivector<S>& a, const Multivector<S>& b) {
    std::ostringstream os;
    os << "counterexample A:\n";
    emit_multivector(os, a);
    os << "counterexample B:\n";
    emit_multivector(os, b);
    return os.str();
}

template <Scalar S>
RepMatrix<S> transform_in(const Multivector<S>& a, SpinorBasis basis) {
    return basis == SpinorBasis::right ? fft_right(a) : fft_left(a);
}

// F(ab) == F(a) F(b) on random real multivectors, both spinor bases.
inline CheckResult check_homomorphism(int n_lo, int n_hi, int pairs, double tol) {
    CheckResult result{"homomorphism", true, {}};
    for (SpinorBasis basis : {SpinorBasis::right, SpinorBasis::left}) {
        for (int n = n_lo; n <= n_hi; ++n) {
            auto rng = seeded_rng(1, (std::uint64_t(n) << 1) | (basis == SpinorBasis::left));
            for (int i = 0; i < pairs; ++i) {
                const auto a = random_mv<double>(n, rng);
                const auto b = random_mv<double>(n, rng);
                const auto want = transform_in(geometric_product_naive(a, b), basis);
                const auto got = matmul(transform_in(a, basis), transform_in(b, basis));
                const double err = relative_error(got, want);
                if (err > tol) {
                    result.pass = false;
                    std::ostringstream os;
                    os << "basis " << (basis == SpinorBasis::right ? "right" : "left") << " n=" << n
                       << " relative error " << err << "\n"
                       << describe_pair(a, b);
                    result.detail = os.str();
                    return result;
                }
            }
        }
    }
    return result;
}

// Same identity over every pair of basis blades with integer coefficients:
// must hold exactly.
inline CheckResult check_homomorphism_exact(int n_hi) {
    CheckResult result{"homomorphism_exact_blades", true, {}};
    for (SpinorBasis basis : {SpinorBasis::right, SpinorBasis::left}) {
        for (int n = 1; n <= n_hi; ++n) {
            const std::size_t N = std::size_t{1} << (2 * n);
            std::vector<RepMatrix<double>> images;
            images.reserve(N);
            for (std::size_t m = 0; m < N; ++m)
                images.push_back(transform_in(Multivector<double>::basis_blade(n, m), basis));
            for (std::size_t p = 0; p < N; ++p) {
                for (std::size_t q = 0; q < N; ++q) {
                    const auto prod =
                        geometric_product_naive(Multivector<double>::basis_blade(n, p),
                                                Multivector<double>::basis_blade(n, q));
                    if (!(matmul(images[p], images[q]) == transform_in(prod, basis))) {
                        result.pass = false;
                        std::ostringstream os;
                        os << "basis " << (basis == SpinorBasis::right ? "right" : "left") << " n=" << n
                           << " blades " << iodetail::format_mask(p, n) << " * " << iodetail::format_mask(q, n);
                        result.detail = os.str();
                        return result;
                    }
                }
            }
        }
    }
    return result;
}

inline CheckResult check_fast_mul(int n_lo, int n_hi, int pairs, double tol) {
    CheckResult result{"fast_mul_matches_naive", true, {}};
    for (int n = n_lo; n <= n_hi; ++n) {
        auto rng = seeded_rng(2, std::uint64_t(n));
        for (int i = 0; i < pairs; ++i) {
            const auto a = random_mv<double>(n, rng);
            const auto b = random_mv<double>(n, rng);
            const auto want = geometric_product_naive(a, b);
            const auto got = fast_mul(a, b);
            double worst = 0.0, ref = 0.0;
            for (std::size_t m = 0; m < want.size(); ++m) {
                worst = std::max(worst, std::abs(got[m] - want[m]));
                ref = std::max(ref, std::abs(want[m]));
            }
            if (worst > tol * std::max(ref, 1.0)) {
                result.pass = false;
                std::ostringstream os;
                os << "n=" << n << " max deviation " << worst << "\n" << describe_pair(a, b);
                result.detail = os.str();
                return result;
            }
        }
    }
    return result;
}

// Exhaustive blade pairs again, through the transform route; integer grid
// so equality is exact.
inline CheckResult check_fast_mul_exact(int n_hi) {
    CheckResult result{"fast_mul_exact_blades", true, {}};
    for (int n = 1; n <= n_hi; ++n) {
        const std::size_t N = std::size_t{1} << (2 * n);
        for (std::size_t p = 0; p < N; ++p) {
            const auto bp = Multivector<double>::basis_blade(n, p);
            for (std::size_t q = 0; q < N; ++q) {
                const auto bq = Multivector<double>::basis_blade(n, q);
                if (!(fast_mul(bp, bq) == geometric_product_naive(bp, bq))) {
                    result.pass = false;
                    result.detail = "n=" + std::to_string(n) + " blades " + iodetail::format_mask(p, n) +
                                    " * " + iodetail::format_mask(q, n);
                    return result;
                }
            }
        }
    }
    return result;
}

inline CheckResult check_roundtrip(int n_hi, double tol) {
    CheckResult result{"transform_roundtrip", true, {}};
    for (int n = 0; n <= n_hi; ++n) {
        auto rng = seeded_rng(3, std::uint64_t(n));
        const auto a = random_mv<double>(n, rng);
        const auto cf = random_complex_full(n, rng);

        auto report = [&](const char* which, double err) {
            result.pass = false;
            std::ostringstream os;
            os << which << " n=" << n << " relative error " << err << "\ncounterexample:\n";
            emit_multivector(os, a);
            result.detail = os.str();
        };

        double norm = 0.0;
        for (std::size_t m = 0; m < a.size(); ++m) norm = std::max(norm, std::abs(a[m]));

        const auto rt_right = ifft_right(fft_right(a));
        double err = 0.0;
        for (std::size_t m = 0; m < a.size(); ++m) err = std::max(err, std::abs(rt_right[m] - a[m]));
        if (err > tol * std::max(norm, 1.0)) {
            report("right roundtrip", err);
            return result;
        }

        const auto rt_left = ifft_left(fft_left(a));
        err = 0.0;
        for (std::size_t m = 0; m < a.size(); ++m) err = std::max(err, std::abs(rt_left[m] - a[m]));
        if (err > tol * std::max(norm, 1.0)) {
            report("left roundtrip", err);
            return result;
        }

        const auto rt_complex = iclifft(clifft(cf));
        err = 0.0;
        for (std::size_t m = 0; m < cf.size(); ++m) err = std::max(err, std::abs(rt_complex[m] - cf[m]));
        if (err > tol) {
            report("complex roundtrip", err);
            return result;
        }

        // Integer coefficients must survive the halving cascade untouched.
        auto rng2 = seeded_rng(4, std::uint64_t(n));
        const auto ia = random_int_mv<double>(n, rng2);
        const auto icf = random_int_mv<std::complex<double>>(n, rng2, AlgebraKind::complex_full);
        if (!(ifft_right(fft_right(ia)) == ia) || !(ifft_left(fft_left(ia)) == ia) ||
            !(iclifft(clifft(icf)) == icf)) {
            result.pass = false;
            std::ostringstream os;
            os << "integer roundtrip n=" << n << " not exact\ncounterexample:\n";
            emit_multivector(os, ia);
            result.detail = os.str();
            return result;
        }
    }
    return result;
}

// Generator images: F(e_k) symmetric, F(te_k) antisymmetric, exactly.
inline CheckResult check_generator_symmetry(int n_hi) {
    CheckResult result{"generator_symmetry", true, {}};
    for (int n = 1; n <= n_hi; ++n) {
        for (int k = 0; k < n; ++k) {
            const auto fe = fft_right(Multivector<double>::basis_blade(n, BladeMask{1} << (2 * k)));
            const auto fte = fft_right(Multivector<double>::basis_blade(n, BladeMask{1} << (2 * k + 1)));
            if (!is_symmetric(fe)) {
                result.pass = false;
                result.detail = "F(e_" + std::to_string(k) + ") not symmetric at n=" + std::to_string(n);
                return result;
            }
            if (!is_antisymmetric(fte)) {
                result.pass = false;
                result.detail = "F(te_" + std::to_string(k) + ") not antisymmetric at n=" + std::to_string(n);
                return result;
            }
        }
    }
    return result;
}

// Complexified generator images are Hermitian, exactly.
inline CheckResult check_complex_hermitian(int n_hi) {
    CheckResult result{"complex_generator_hermitian", true, {}};
    for (int n = 1; n <= n_hi; ++n) {
        for (int j = 0; j < 2 * n; ++j) {
            Multivector<std::complex<double>> e(n, AlgebraKind::complex_full);
            e.at(BladeMask{1} << j) = {1.0, 0.0};
            const auto f = clifft(e);
            if (!is_hermitian(f)) {
                result.pass = false;
                result.detail = "clifft(e'_" + std::to_string(j) + ") not Hermitian at n=" + std::to_string(n);
                return result;
            }
        }
    }
    return result;
}

// Representation automorphisms against the coefficient involutions, and the
// transpose identities tying the two sides together.  Integer grid: exact.
inline CheckResult check_conjugacy(int n_hi) {
    CheckResult result{"automorphism_conjugacy", true, {}};
    for (int n = 0; n <= n_hi; ++n) {
        auto rng = seeded_rng(5, std::uint64_t(n));
        const auto a = random_int_mv<double>(n, rng);
        const auto f = fft_right(a);

        auto fail = [&](const char* which) {
            result.pass = false;
            std::ostringstream os;
            os << which << " failed at n=" << n << "\ncounterexample:\n";
            emit_multivector(os, a);
            result.detail = os.str();
        };

        if (!(parity_flip(f) == fft_right(alpha_coeffs(a)))) {
            fail("parity_flip conjugacy");
            return result;
        }
        if (!(imaginary_flip(f) == fft_right(beta_coeffs(a)))) {
            fail("imaginary_flip conjugacy");
            return result;
        }
        if (!(rep_reversal(f) == fft_right(reverse_coeffs(a)))) {
            fail("rep_reversal conjugacy");
            return result;
        }
        if (!(transpose(f) == fft_right(beta_coeffs(reverse_coeffs(a))))) {
            fail("transpose identity");
            return result;
        }
        if (!(rep_reversal(f) == imaginary_flip(transpose(f)))) {
            fail("reversal decomposition");
            return result;
        }
        if (!(parity_flip(parity_flip(f)) == f) || !(imaginary_flip(imaginary_flip(f)) == f) ||
            !(rep_reversal(rep_reversal(f)) == f)) {
            fail("involution");
            return result;
        }
    }
    return result;
}

// Structure tables: every unit ideal element lands on its located entry
// with the tabulated sign, and the parity mask matches parity_flip.
inline CheckResult check_structure(int n_hi) {
    CheckResult result{"structure_tables", true, {}};
    for (int n = 0; n <= std::min(n_hi, 3); ++n) {
        const auto right = build_structure_table(n, SpinorBasis::right);
        const auto left = build_structure_table(n, SpinorBasis::left);
        const std::size_t d = std::size_t{1} << n;
        for (std::size_t sigma = 0; sigma < d; ++sigma) {
            const auto proj = make_projector<double>(n, sigma);
            for (std::size_t rho = 0; rho < d; ++rho) {
                const auto blade = detail::ascending_plain_blade<double>(n, rho);
                const auto f_right = fft_right(geometric_product_naive(proj, blade));
                const auto f_left = fft_right(geometric_product_naive(blade, proj));
                const auto loc_r = locate_entry(right, sigma, rho);
                const auto loc_l = locate_entry(left, sigma, rho);
                for (std::size_t i = 0; i < d; ++i) {
                    for (std::size_t j = 0; j < d; ++j) {
                        const double want_r = (i == loc_r.row && j == loc_r.col) ? loc_r.sign : 0.0;
                        const double want_l = (i == loc_l.row && j == loc_l.col) ? loc_l.sign : 0.0;
                        if (f_right(i, j) != want_r || f_left(i, j) != want_l) {
                            result.pass = false;
                            result.detail = "ideal element image mismatch at n=" + std::to_string(n) +
                                            " sigma=" + std::to_string(sigma) + " rho=" + std::to_string(rho);
                            return result;
                        }
                    }
                }
            }
        }
    }
    for (int n = 0; n <= n_hi; ++n) {
        auto rng = seeded_rng(6, std::uint64_t(n));
        const auto a = random_int_mv<double>(n, rng);
        const auto f = fft_right(a);
        const auto flipped = parity_flip(f);
        const auto mask = grade_parity_mask(n);
        for (std::size_t i = 0; i < f.dim(); ++i) {
            for (std::size_t j = 0; j < f.dim(); ++j) {
                const double want = mask.is_odd(i, j) ? -f(i, j) : f(i, j);
                if (flipped(i, j) != want) {
                    result.pass = false;
                    result.detail = "grade parity mask mismatch at n=" + std::to_string(n);
                    return result;
                }
            }
        }
    }
    return result;
}

}  // namespace checks

// The property suite behind `selfcheck`: sizes are capped by n_max (and by
// each property's own natural limit).
inline std::vector<CheckResult> run_property_suite(int n_max) {
    using namespace checks;
    const int five = std::min(n_max, 5);
    const int three = std::min(n_max, 3);
    std::vector<CheckResult> results;
    results.push_back(check_homomorphism(1, five, 100, 1e-10));
    results.push_back(check_homomorphism_exact(three));
    results.push_back(check_fast_mul(1, five, 100, 1e-10));
    results.push_back(check_fast_mul_exact(three));
    results.push_back(check_roundtrip(five, 1e-12));
    results.push_back(check_generator_symmetry(std::min(n_max, 6)));
    results.push_back(check_complex_hermitian(five));
    results.push_back(check_conjugacy(five));
    results.push_back(check_structure(std::min(n_max, 6)));
    return results;
}

}  // namespace clifft
