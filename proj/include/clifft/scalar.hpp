#pragma once

#include <cmath>
#include <complex>
#include <concepts>
#include <type_traits>

namespace clifft {

// The algorithms need a commutative ring with exact halving plus a
// conjugation and an absolute value for error reporting.  double and
// std::complex<double> are the supported domains; an exact scalar type can
// be dropped in by specialising scalar_traits.
template <typename S>
struct scalar_traits;

template <>
struct scalar_traits<double> {
    using real_type = double;
    static constexpr bool is_complex = false;
    static constexpr double zero() { return 0.0; }
    static constexpr double one() { return 1.0; }
    static constexpr double half(double x) { return x * 0.5; }
    static constexpr double conj(double x) { return x; }
    static double abs(double x) { return std::fabs(x); }
};

template <>
struct scalar_traits<std::complex<double>> {
    using real_type = double;
    static constexpr bool is_complex = true;
    static std::complex<double> zero() { return {0.0, 0.0}; }
    static std::complex<double> one() { return {1.0, 0.0}; }
    static std::complex<double> half(std::complex<double> x) { return x * 0.5; }
    static std::complex<double> conj(std::complex<double> x) { return std::conj(x); }
    static double abs(std::complex<double> x) { return std::abs(x); }
};

template <typename S>
concept Scalar = requires(S a, S b) {
    { a + b } -> std::convertible_to<S>;
    { a - b } -> std::convertible_to<S>;
    { a * b } -> std::convertible_to<S>;
    { -a } -> std::convertible_to<S>;
    scalar_traits<S>::zero();
    scalar_traits<S>::one();
    scalar_traits<S>::half(a);
};

}  // namespace clifft
