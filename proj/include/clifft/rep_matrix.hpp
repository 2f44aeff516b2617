#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "clifft/scalar.hpp"

namespace clifft {

// Which spinor basis produced a representation matrix.  Matrices do not mix:
// inverse transforms and representation automorphisms require the basis they
// were written for.
enum class SpinorBasis : std::uint8_t { right, left };

// Dense row-major square matrix of a multivector representation.
template <Scalar S>
class RepMatrix {
  public:
    using scalar_type = S;

    RepMatrix() = default;
    RepMatrix(std::size_t dim, SpinorBasis basis)
        : dim_(dim), basis_(basis), entries_(dim * dim, scalar_traits<S>::zero()) {
        if (dim == 0 || (dim & (dim - 1)) != 0) throw std::invalid_argument("matrix dim must be a power of two");
    }

    static RepMatrix identity(std::size_t dim, SpinorBasis basis) {
        RepMatrix m(dim, basis);
        for (std::size_t i = 0; i < dim; ++i) m(i, i) = scalar_traits<S>::one();
        return m;
    }

    std::size_t dim() const { return dim_; }
    SpinorBasis basis() const { return basis_; }
    void set_basis(SpinorBasis b) { basis_ = b; }

    S& operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }
    const S& operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }

    std::vector<S>& entries() { return entries_; }
    const std::vector<S>& entries() const { return entries_; }

    friend RepMatrix operator+(const RepMatrix& a, const RepMatrix& b) {
        check_same(a, b);
        RepMatrix out = a;
        for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] = out.entries_[i] + b.entries_[i];
        return out;
    }
    friend RepMatrix operator-(const RepMatrix& a, const RepMatrix& b) {
        check_same(a, b);
        RepMatrix out = a;
        for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] = out.entries_[i] - b.entries_[i];
        return out;
    }
    friend RepMatrix operator*(S s, const RepMatrix& a) {
        RepMatrix out = a;
        for (auto& e : out.entries_) e = s * e;
        return out;
    }
    friend bool operator==(const RepMatrix& a, const RepMatrix& b) {
        return a.dim_ == b.dim_ && a.basis_ == b.basis_ && a.entries_ == b.entries_;
    }

    static void check_same(const RepMatrix& a, const RepMatrix& b) {
        if (a.dim_ != b.dim_) throw std::invalid_argument("matrix dimension mismatch");
        if (a.basis_ != b.basis_) throw std::invalid_argument("matrix basis mismatch");
    }

  private:
    std::size_t dim_ = 1;
    SpinorBasis basis_ = SpinorBasis::right;
    std::vector<S> entries_{scalar_traits<S>::zero()};
};

// Classical cubic product; deliberately the only matrix multiplication in
// the library so timing comparisons stay interpretable.
template <Scalar S>
RepMatrix<S> matmul(const RepMatrix<S>& a, const RepMatrix<S>& b) {
    RepMatrix<S>::check_same(a, b);
    const std::size_t d = a.dim();
    RepMatrix<S> c(d, a.basis());
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t k = 0; k < d; ++k) {
            const S aik = a(i, k);
            const S* brow = &b(k, 0);
            S* crow = &c(i, 0);
            for (std::size_t j = 0; j < d; ++j) crow[j] = crow[j] + aik * brow[j];
        }
    }
    return c;
}

template <Scalar S>
RepMatrix<S> transpose(const RepMatrix<S>& a) {
    RepMatrix<S> out(a.dim(), a.basis());
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < a.dim(); ++c) out(c, r) = a(r, c);
    return out;
}

template <Scalar S>
RepMatrix<S> conj_transpose(const RepMatrix<S>& a) {
    RepMatrix<S> out(a.dim(), a.basis());
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < a.dim(); ++c) out(c, r) = scalar_traits<S>::conj(a(r, c));
    return out;
}

template <Scalar S>
bool is_symmetric(const RepMatrix<S>& a) {
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = r + 1; c < a.dim(); ++c)
            if (a(r, c) != a(c, r)) return false;
    return true;
}

template <Scalar S>
bool is_antisymmetric(const RepMatrix<S>& a) {
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = r; c < a.dim(); ++c)
            if (a(r, c) != -a(c, r)) return false;
    return true;
}

template <Scalar S>
bool is_hermitian(const RepMatrix<S>& a) {
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = r; c < a.dim(); ++c)
            if (a(r, c) != scalar_traits<S>::conj(a(c, r))) return false;
    return true;
}

template <Scalar S>
double frobenius_norm(const RepMatrix<S>& a) {
    double sum = 0.0;
    for (const auto& e : a.entries()) {
        const double v = scalar_traits<S>::abs(e);
        sum += v * v;
    }
    return std::sqrt(sum);
}

template <Scalar S>
double max_abs(const RepMatrix<S>& a) {
    double best = 0.0;
    for (const auto& e : a.entries()) best = std::max(best, scalar_traits<S>::abs(e));
    return best;
}

}  // namespace clifft
