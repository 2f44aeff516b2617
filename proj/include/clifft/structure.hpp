#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "clifft/multivector.hpp"
#include "clifft/transform.hpp"

namespace clifft {

// Where the ideal-decomposition coefficient a^sigma_rho of a multivector
// lands inside the representation matrix.  In the right basis sigma selects
// the row and rho^sigma the column; in the left basis sigma selects the
// column and rho^sigma the row.  The residual signs depend on the blade
// ordering convention, so they are materialised once per (n, basis) by
// transforming the unit ideal elements themselves.

struct EntryLocator {
    std::size_t row;
    std::size_t col;
    int sign;
};

inline int entry_grade(std::size_t i, std::size_t j) { return std::popcount(i ^ j); }

inline bool entry_parity_odd(std::size_t i, std::size_t j) { return entry_grade(i, j) & 1; }

struct GradeParityMask {
    std::size_t dim = 0;
    std::vector<std::uint8_t> odd;  // row-major, 1 = odd grade

    bool is_odd(std::size_t i, std::size_t j) const { return odd[i * dim + j] != 0; }
};

inline GradeParityMask grade_parity_mask(int n) {
    GradeParityMask mask;
    mask.dim = std::size_t{1} << n;
    mask.odd.resize(mask.dim * mask.dim);
    for (std::size_t i = 0; i < mask.dim; ++i)
        for (std::size_t j = 0; j < mask.dim; ++j) mask.odd[i * mask.dim + j] = entry_parity_odd(i, j) ? 1 : 0;
    return mask;
}

struct StructureTable {
    int n = 0;
    SpinorBasis basis = SpinorBasis::right;
    std::vector<std::int8_t> signs;  // indexed sigma * 2^n + rho

    int sign(std::size_t sigma, std::size_t rho) const { return signs[(sigma << n) | rho]; }
};

namespace detail {

// Blade e^rho: the plain generators e_k with bit k of rho set, multiplied in
// ascending k.  Relative to the canonical (descending) order that is a full
// reversal of g distinct anticommuting factors.
template <Scalar S>
Multivector<S> ascending_plain_blade(int n, std::size_t rho) {
    BladeMask mask = 0;
    for (int k = 0; k < n; ++k)
        if ((rho >> k) & 1) mask |= BladeMask{1} << (2 * k);
    const int g = std::popcount(rho);
    const S value = ((g * (g - 1) / 2) & 1) ? -scalar_traits<S>::one() : scalar_traits<S>::one();
    return Multivector<S>::basis_blade(n, mask, value);
}

}  // namespace detail

// One right-spinor transform per rho; the row (left basis: column) picked
// by sigma then reads off every sign of that rho slice.
inline StructureTable build_structure_table(int n, SpinorBasis basis) {
    if (n < 0 || n > 12) throw std::invalid_argument("structure table n out of range");
    StructureTable table;
    table.n = n;
    table.basis = basis;
    const std::size_t d = std::size_t{1} << n;
    table.signs.assign(d * d, 0);
    for (std::size_t rho = 0; rho < d; ++rho) {
        const RepMatrix<double> f = fft_right(detail::ascending_plain_blade<double>(n, rho));
        for (std::size_t sigma = 0; sigma < d; ++sigma) {
            const double v = basis == SpinorBasis::right ? f(sigma, sigma ^ rho) : f(sigma ^ rho, sigma);
            if (v != 1.0 && v != -1.0) throw std::logic_error("ideal element image is not a unit entry");
            table.signs[(sigma << n) | rho] = v > 0 ? 1 : -1;
        }
    }
    return table;
}

inline EntryLocator locate_entry(const StructureTable& table, std::size_t sigma, std::size_t rho) {
    const std::size_t d = std::size_t{1} << table.n;
    if (sigma >= d || rho >= d) throw std::invalid_argument("sigma or rho out of range");
    if (table.basis == SpinorBasis::right) return {sigma, sigma ^ rho, table.sign(sigma, rho)};
    return {sigma ^ rho, sigma, table.sign(sigma, rho)};
}

}  // namespace clifft
