#ifndef POLYSTOCH_MULTI_MATRIX_HPP
#define POLYSTOCH_MULTI_MATRIX_HPP

#include "polystoch/rational.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace polystoch {

/// Cell address: d coordinates, each in [0, n). Indexing is 0-based
/// throughout the library.
using Index = std::vector<int>;

/// A line fixes all axes but one. `fixed` holds the coordinates of the
/// other d-1 axes in ascending axis order; the free axis runs over n cells.
struct Line {
    int axis = 0;
    std::vector<int> fixed;

    bool operator==(const Line&) const = default;
};

/// Dense d-dimensional matrix of order n with exact rational entries.
/// Storage is row-major with the last axis fastest. Immutable after
/// construction, so values can be shared freely across threads.
class MultiMatrix {
public:
    /// Throws ShapeError unless n >= 1, d >= 0 and entries.size() == n^d.
    MultiMatrix(int n, int d, std::vector<Rational> entries);

    static MultiMatrix zeros(int n, int d);

    int order() const { return n_; }
    int dim() const { return d_; }
    std::size_t cell_count() const { return entries_.size(); }

    const std::vector<Rational>& entries() const { return entries_; }
    const Rational& entry(std::size_t flat) const { return entries_[flat]; }
    const Rational& at(const Index& idx) const { return entries_[flat_index(idx)]; }

    /// Row-major flattening; validates coordinates (throws ShapeError).
    std::size_t flat_index(const Index& idx) const;
    Index unflatten(std::size_t flat) const;

    bool operator==(const MultiMatrix&) const = default;

private:
    int n_;
    int d_;
    std::vector<Rational> entries_;
};

/// n^d as size_t; throws CapacityError if it does not fit.
std::size_t cells_of(int n, int d);

/// All d*n^(d-1) lines in deterministic order: axis-major, fixed
/// coordinates lexicographic.
std::vector<Line> line_ids(int n, int d);

/// Flat offsets of the n cells addressed by `l` in a matrix of shape (n, d).
std::vector<std::size_t> line_cells(const Line& l, int n, int d);

/// Exact sum of the n entries on the line.
Rational line_sum(const MultiMatrix& a, const Line& l);

/// True iff every entry is >= 0 and every line sums to exactly 1.
bool is_polystochastic(const MultiMatrix& a);

/// Nonzero cells in lexicographic (= flat) order.
std::vector<Index> support(const MultiMatrix& a);

/// N(A): number of nonzero cells.
std::size_t support_size(const MultiMatrix& a);

/// Submatrix with the given axes pinned; remaining axes keep their
/// relative order. `fixed` pairs are (axis, coordinate); duplicate axes
/// or out-of-range values throw ShapeError. Fixing all d axes yields a
/// 0-dimensional matrix holding one entry.
MultiMatrix plane(const MultiMatrix& a, const std::vector<std::pair<int, int>>& fixed);

} // namespace polystoch

#endif
