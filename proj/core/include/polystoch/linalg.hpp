#ifndef POLYSTOCH_LINALG_HPP
#define POLYSTOCH_LINALG_HPP

#include "polystoch/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace polystoch {

/// Dense row-major matrix of exact rationals.
struct RationalMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Rational> data;

    RationalMatrix() = default;
    RationalMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

    Rational& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// Rank over the rationals. Rows are scaled to integers, then reduced by
/// fraction-free Bareiss elimination with partial pivoting by first
/// nonzero, so 0/1 inputs never leave the integers.
std::size_t rank_exact(const RationalMatrix& m);

/// The kernel basis vector attached to the first free column in column
/// order: x[first free] = 1, the other free coordinates 0, pivot
/// coordinates solved exactly. Empty when the matrix has full column rank.
std::optional<std::vector<Rational>> first_kernel_vector(const RationalMatrix& m);

/// Indices of a maximal set of linearly independent rows, greedy from the
/// top (the first row of every newly independent direction is kept).
std::vector<std::size_t> independent_rows(const RationalMatrix& m);

namespace detail {

/// Fraction-free row echelon form of an integer matrix, in place.
/// Returns the pivot columns in order; after the call, pivot i sits at
/// row i and rows below the last pivot are zero.
std::vector<std::size_t> bareiss_echelon(std::vector<BigInt>& m, std::size_t rows,
                                         std::size_t cols);

} // namespace detail

} // namespace polystoch

#endif
