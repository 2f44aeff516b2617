#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "clifft/blades.hpp"
#include "clifft/scalar.hpp"

namespace clifft {

// Which algebra the coefficient array lives in.  `split` is Cl(n,n) with n
// plus/minus generator pairs; `complex_full` is the complexified algebra on
// 2n generators that all square to +1.  Both use 4^n coefficients addressed
// by the same blade masks.
enum class AlgebraKind : std::uint8_t { split, complex_full };

template <Scalar S>
class Multivector {
  public:
    using scalar_type = S;

    Multivector() = default;
    Multivector(int n, AlgebraKind kind = AlgebraKind::split)
        : n_(check_n(n)), kind_(kind), coeffs_(std::size_t{1} << (2 * n), scalar_traits<S>::zero()) {}

    static Multivector scalar(int n, S value, AlgebraKind kind = AlgebraKind::split) {
        Multivector mv(n, kind);
        mv.coeffs_[0] = value;
        return mv;
    }

    static Multivector basis_blade(int n, BladeMask mask, S value = scalar_traits<S>::one(),
                                   AlgebraKind kind = AlgebraKind::split) {
        Multivector mv(n, kind);
        mv.at(mask) = value;
        return mv;
    }

    int n() const { return n_; }
    AlgebraKind kind() const { return kind_; }
    std::size_t size() const { return coeffs_.size(); }

    S& at(BladeMask mask) {
        if (mask >= coeffs_.size()) throw std::out_of_range("blade mask out of range for this n");
        return coeffs_[mask];
    }
    const S& at(BladeMask mask) const {
        if (mask >= coeffs_.size()) throw std::out_of_range("blade mask out of range for this n");
        return coeffs_[mask];
    }
    S& operator[](std::size_t i) { return coeffs_[i]; }
    const S& operator[](std::size_t i) const { return coeffs_[i]; }

    std::vector<S>& coeffs() { return coeffs_; }
    const std::vector<S>& coeffs() const { return coeffs_; }

    BladeMask negative_mask() const {
        return kind_ == AlgebraKind::split ? split_negative_mask(n_) : BladeMask{0};
    }

    friend Multivector operator+(const Multivector& a, const Multivector& b) {
        check_compatible(a, b);
        Multivector out = a;
        for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] = out.coeffs_[i] + b.coeffs_[i];
        return out;
    }
    friend Multivector operator-(const Multivector& a, const Multivector& b) {
        check_compatible(a, b);
        Multivector out = a;
        for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] = out.coeffs_[i] - b.coeffs_[i];
        return out;
    }
    friend Multivector operator*(S s, const Multivector& a) {
        Multivector out = a;
        for (auto& c : out.coeffs_) c = s * c;
        return out;
    }
    friend bool operator==(const Multivector& a, const Multivector& b) {
        return a.n_ == b.n_ && a.kind_ == b.kind_ && a.coeffs_ == b.coeffs_;
    }

    static void check_compatible(const Multivector& a, const Multivector& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("multivector dimension mismatch");
        if (a.kind_ != b.kind_) throw std::invalid_argument("multivector algebra mismatch");
    }

  private:
    static int check_n(int n) {
        if (n < 0 || n > 15) throw std::invalid_argument("generator pair count out of range");
        return n;
    }

    int n_ = 0;
    AlgebraKind kind_ = AlgebraKind::split;
    std::vector<S> coeffs_{scalar_traits<S>::zero()};
};

// Grade involution: negates odd-grade coefficients.
template <Scalar S>
Multivector<S> alpha_coeffs(const Multivector<S>& a) {
    Multivector<S> out = a;
    for (std::size_t m = 0; m < out.size(); ++m)
        if (alpha_sign(m) < 0) out[m] = -out[m];
    return out;
}

// Negative-generator flip: negates coefficients with an odd number of
// tilde factors.
template <Scalar S>
Multivector<S> beta_coeffs(const Multivector<S>& a) {
    Multivector<S> out = a;
    for (std::size_t m = 0; m < out.size(); ++m)
        if (beta_sign(m) < 0) out[m] = -out[m];
    return out;
}

// Reversal: multiplies each grade-g coefficient by (-1)^(g(g-1)/2).
template <Scalar S>
Multivector<S> reverse_coeffs(const Multivector<S>& a) {
    Multivector<S> out = a;
    for (std::size_t m = 0; m < out.size(); ++m)
        if (reversal_sign(m) < 0) out[m] = -out[m];
    return out;
}

// Dense geometric product, the N^2 reference kernel every fast path is
// checked against.  Performs exactly N^2 scalar multiplications.
template <Scalar S>
Multivector<S> geometric_product_naive(const Multivector<S>& a, const Multivector<S>& b) {
    Multivector<S>::check_compatible(a, b);
    const std::size_t N = a.size();
    const BladeMask negative = a.negative_mask();
    Multivector<S> c(a.n(), a.kind());
    for (std::size_t p = 0; p < N; ++p) {
        const S ap = a[p];
        const BladeMask sign_mask = product_sign_mask(p, negative);
        S* out = c.coeffs().data();
        const S* bq = b.coeffs().data();
        for (std::size_t q = 0; q < N; ++q) {
            const S term = ap * bq[q];
            out[p ^ q] = (std::popcount(q & sign_mask) & 1) ? out[p ^ q] - term : out[p ^ q] + term;
        }
    }
    return c;
}

// Primitive idempotent P_sigma = prod_k (1 + (-1)^sigma_k te_k e_k) / 2.
// Bit k of sigma picks the minus sign for pair k.
template <Scalar S>
Multivector<S> make_projector(int n, std::uint64_t sigma) {
    if (n < 0 || (n < 64 && sigma >> n)) throw std::invalid_argument("sigma has more bits than pairs");
    Multivector<S> p = Multivector<S>::scalar(n, scalar_traits<S>::one());
    for (int k = 0; k < n; ++k) {
        Multivector<S> factor = Multivector<S>::scalar(n, scalar_traits<S>::one());
        const BladeMask pair = BladeMask{0b11} << (2 * k);
        factor.at(pair) = ((sigma >> k) & 1) ? -scalar_traits<S>::one() : scalar_traits<S>::one();
        factor = scalar_traits<S>::half(scalar_traits<S>::one()) * factor;
        p = geometric_product_naive(p, factor);
    }
    return p;
}

}  // namespace clifft
