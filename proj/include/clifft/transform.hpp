#pragma once

#include <bit>
#include <complex>
#include <cstddef>
#include <future>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "clifft/multivector.hpp"
#include "clifft/rep_matrix.hpp"

namespace clifft {

namespace detail {

// With the mask layout of blades.hpp the two top generator slots select the
// quadrant, so the four sub-multivectors A00, A01, A10, A11 of the block
// decomposition a = A00 + e A01 + te A10 + te e A11 are the four contiguous
// quarters of the coefficient array.  Each butterfly level below combines
// quarters elementwise; the grade involution on a quarter is a sign flip at
// odd-popcount offsets.

template <Scalar S>
void forward_level(std::span<S> block, SpinorBasis basis) {
    const std::size_t q = block.size() / 4;
    S* x0 = block.data();
    S* x1 = x0 + q;
    S* x2 = x1 + q;
    S* x3 = x2 + q;
    if (basis == SpinorBasis::right) {
        for (std::size_t j = 0; j < q; ++j) {
            const S a = x0[j], b = x1[j], c = x2[j], d = x3[j];
            const bool neg = std::popcount(j) & 1;
            x0[j] = a + d;
            x1[j] = neg ? -(b + c) : b + c;
            x2[j] = b - c;
            x3[j] = neg ? -(a - d) : a - d;
        }
    } else {
        for (std::size_t j = 0; j < q; ++j) {
            const S a = x0[j], b = x1[j], c = x2[j], d = x3[j];
            const bool neg = std::popcount(j) & 1;
            x0[j] = a - d;
            x1[j] = neg ? -(b - c) : b - c;
            x2[j] = b + c;
            x3[j] = neg ? -(a + d) : a + d;
        }
    }
}

template <Scalar S>
void inverse_level(std::span<S> block, SpinorBasis basis) {
    const std::size_t q = block.size() / 4;
    S* y0 = block.data();
    S* y1 = y0 + q;
    S* y2 = y1 + q;
    S* y3 = y2 + q;
    for (std::size_t j = 0; j < q; ++j) {
        const bool neg = std::popcount(j) & 1;
        const S a = y0[j];
        const S b = neg ? -y1[j] : y1[j];
        const S c = y2[j];
        const S d = neg ? -y3[j] : y3[j];
        if (basis == SpinorBasis::right) {
            y0[j] = scalar_traits<S>::half(a + d);
            y1[j] = scalar_traits<S>::half(b + c);
            y2[j] = scalar_traits<S>::half(b - c);
            y3[j] = scalar_traits<S>::half(a - d);
        } else {
            y0[j] = scalar_traits<S>::half(a + d);
            y1[j] = scalar_traits<S>::half(c + b);
            y2[j] = scalar_traits<S>::half(c - b);
            y3[j] = scalar_traits<S>::half(d - a);
        }
    }
}

// Quarter recursions are data independent; par_depth > 0 fans them out on
// std::async.  The per-element arithmetic is identical either way, so the
// results match the sequential path bit for bit.
template <Scalar S>
void forward_pass(std::span<S> block, int levels, SpinorBasis basis, int par_depth) {
    if (levels == 0) return;
    forward_level(block, basis);
    const std::size_t q = block.size() / 4;
    if (levels == 1) return;
    if (par_depth > 0) {
        std::vector<std::future<void>> tasks;
        tasks.reserve(4);
        for (int i = 0; i < 4; ++i)
            tasks.push_back(std::async(std::launch::async, [=] {
                forward_pass(block.subspan(std::size_t(i) * q, q), levels - 1, basis, par_depth - 1);
            }));
        for (auto& t : tasks) t.get();
    } else {
        for (int i = 0; i < 4; ++i) forward_pass(block.subspan(std::size_t(i) * q, q), levels - 1, basis, 0);
    }
}

template <Scalar S>
void inverse_pass(std::span<S> block, int levels, SpinorBasis basis, int par_depth) {
    if (levels == 0) return;
    const std::size_t q = block.size() / 4;
    if (levels > 1) {
        if (par_depth > 0) {
            std::vector<std::future<void>> tasks;
            tasks.reserve(4);
            for (int i = 0; i < 4; ++i)
                tasks.push_back(std::async(std::launch::async, [=] {
                    inverse_pass(block.subspan(std::size_t(i) * q, q), levels - 1, basis, par_depth - 1);
                }));
            for (auto& t : tasks) t.get();
        } else {
            for (int i = 0; i < 4; ++i) inverse_pass(block.subspan(std::size_t(i) * q, q), levels - 1, basis, 0);
        }
    }
    inverse_level(block, basis);
}

// The fully butterflied buffer stores matrix entries in quadrant (Morton)
// order: odd bits of the position give the row, even bits the column.
inline std::pair<std::size_t, std::size_t> morton_row_col(std::size_t p, int n) {
    std::size_t r = 0, c = 0;
    for (int k = 0; k < n; ++k) {
        r |= ((p >> (2 * k + 1)) & 1u) << k;
        c |= ((p >> (2 * k)) & 1u) << k;
    }
    return {r, c};
}

template <Scalar S>
RepMatrix<S> scatter_to_matrix(const std::vector<S>& buf, int n, SpinorBasis basis) {
    RepMatrix<S> m(std::size_t{1} << n, basis);
    for (std::size_t p = 0; p < buf.size(); ++p) {
        const auto [r, c] = morton_row_col(p, n);
        m(r, c) = buf[p];
    }
    return m;
}

template <Scalar S>
std::vector<S> gather_from_matrix(const RepMatrix<S>& m, int n) {
    std::vector<S> buf(std::size_t{1} << (2 * n));
    for (std::size_t p = 0; p < buf.size(); ++p) {
        const auto [r, c] = morton_row_col(p, n);
        buf[p] = m(r, c);
    }
    return buf;
}

inline int levels_for_dim(std::size_t dim) {
    if (dim == 0 || (dim & (dim - 1)) != 0) throw std::invalid_argument("matrix dim must be a power of two");
    return std::bit_width(dim) - 1;
}

}  // namespace detail

// Right-spinor representation of a Cl(n,n) multivector as a 2^n x 2^n
// matrix.  This map is an algebra homomorphism.
template <Scalar S>
RepMatrix<S> fft_right(const Multivector<S>& a, bool parallel = false) {
    if (a.kind() != AlgebraKind::split) throw std::invalid_argument("fft_right expects a Cl(n,n) multivector");
    std::vector<S> buf = a.coeffs();
    detail::forward_pass(std::span<S>(buf), a.n(), SpinorBasis::right, parallel ? 2 : 0);
    return detail::scatter_to_matrix(buf, a.n(), SpinorBasis::right);
}

template <Scalar S>
Multivector<S> ifft_right(const RepMatrix<S>& m, bool parallel = false) {
    if (m.basis() != SpinorBasis::right) throw std::invalid_argument("ifft_right expects a right-basis matrix");
    const int n = detail::levels_for_dim(m.dim());
    std::vector<S> buf = detail::gather_from_matrix(m, n);
    detail::inverse_pass(std::span<S>(buf), n, SpinorBasis::right, parallel ? 2 : 0);
    Multivector<S> a(n);
    a.coeffs() = std::move(buf);
    return a;
}

// Left-spinor representation: the companion homomorphism that indexes
// coefficients by the left ideal decomposition.  Its image differs from the
// right basis by the tilde-generator flip: fft_left(a) == fft_right(beta(a)).
template <Scalar S>
RepMatrix<S> fft_left(const Multivector<S>& a, bool parallel = false) {
    if (a.kind() != AlgebraKind::split) throw std::invalid_argument("fft_left expects a Cl(n,n) multivector");
    std::vector<S> buf = a.coeffs();
    detail::forward_pass(std::span<S>(buf), a.n(), SpinorBasis::left, parallel ? 2 : 0);
    return detail::scatter_to_matrix(buf, a.n(), SpinorBasis::left);
}

template <Scalar S>
Multivector<S> ifft_left(const RepMatrix<S>& m, bool parallel = false) {
    if (m.basis() != SpinorBasis::left) throw std::invalid_argument("ifft_left expects a left-basis matrix");
    const int n = detail::levels_for_dim(m.dim());
    std::vector<S> buf = detail::gather_from_matrix(m, n);
    detail::inverse_pass(std::span<S>(buf), n, SpinorBasis::left, parallel ? 2 : 0);
    Multivector<S> a(n);
    a.coeffs() = std::move(buf);
    return a;
}

namespace detail {

// (-i)^t for t = tilde_count(mask) mod 4; maps the complexified generators
// onto the split signature: c(e'_{2k}) = e_k and c(e'_{2k+1}) = -i te_k.
inline std::complex<double> complex_iso_factor(int t) {
    switch (t & 3) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, -1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, 1.0};
    }
}

}  // namespace detail

// Representation of the complexified algebra on 2n all-positive generators,
// via the isomorphism onto Cl(n,n) followed by the right-spinor transform.
inline RepMatrix<std::complex<double>> clifft(const Multivector<std::complex<double>>& a,
                                              bool parallel = false) {
    if (a.kind() != AlgebraKind::complex_full)
        throw std::invalid_argument("clifft expects a complexified-algebra multivector");
    Multivector<std::complex<double>> mapped(a.n(), AlgebraKind::split);
    for (std::size_t m = 0; m < a.size(); ++m)
        mapped[m] = a[m] * detail::complex_iso_factor(tilde_count(m));
    return fft_right(mapped, parallel);
}

inline Multivector<std::complex<double>> iclifft(const RepMatrix<std::complex<double>>& m,
                                                 bool parallel = false) {
    Multivector<std::complex<double>> split = ifft_right(m, parallel);
    Multivector<std::complex<double>> out(split.n(), AlgebraKind::complex_full);
    for (std::size_t mask = 0; mask < split.size(); ++mask) {
        // i^t undoes the (-i)^t factor of the forward map.
        const std::complex<double> inv = std::conj(detail::complex_iso_factor(tilde_count(mask)));
        out[mask] = split[mask] * inv;
    }
    return out;
}

}  // namespace clifft
