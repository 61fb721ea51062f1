#include "polystoch/multi_matrix.hpp"
#include "polystoch/errors.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace polystoch {

std::size_t cells_of(int n, int d) {
    if (n < 1)
        throw ShapeError("order must be >= 1, got " + std::to_string(n));
    if (d < 0)
        throw ShapeError("dimension must be >= 0, got " + std::to_string(d));
    std::size_t count = 1;
    for (int i = 0; i < d; ++i) {
        if (count > std::numeric_limits<std::size_t>::max() / static_cast<std::size_t>(n))
            throw CapacityError("n^d overflows size_t");
        count *= static_cast<std::size_t>(n);
    }
    return count;
}

MultiMatrix::MultiMatrix(int n, int d, std::vector<Rational> entries)
    : n_(n), d_(d), entries_(std::move(entries)) {
    std::size_t expect = cells_of(n, d);
    if (entries_.size() != expect)
        throw ShapeError("entry count " + std::to_string(entries_.size()) +
                         " does not match n^d = " + std::to_string(expect));
}

MultiMatrix MultiMatrix::zeros(int n, int d) {
    return MultiMatrix(n, d, std::vector<Rational>(cells_of(n, d)));
}

std::size_t MultiMatrix::flat_index(const Index& idx) const {
    if (static_cast<int>(idx.size()) != d_)
        throw ShapeError("index has " + std::to_string(idx.size()) + " coordinates, expected " +
                         std::to_string(d_));
    std::size_t flat = 0;
    for (int i = 0; i < d_; ++i) {
        if (idx[i] < 0 || idx[i] >= n_)
            throw ShapeError("coordinate " + std::to_string(idx[i]) + " out of range [0, " +
                             std::to_string(n_) + ")");
        flat = flat * static_cast<std::size_t>(n_) + static_cast<std::size_t>(idx[i]);
    }
    return flat;
}

Index MultiMatrix::unflatten(std::size_t flat) const {
    Index idx(static_cast<std::size_t>(d_));
    for (int i = d_ - 1; i >= 0; --i) {
        idx[static_cast<std::size_t>(i)] = static_cast<int>(flat % static_cast<std::size_t>(n_));
        flat /= static_cast<std::size_t>(n_);
    }
    return idx;
}

std::vector<Line> line_ids(int n, int d) {
    if (n < 1 || d < 1)
        throw ShapeError("line_ids requires n >= 1 and d >= 1");
    std::size_t per_axis = cells_of(n, d - 1);
    std::vector<Line> lines;
    lines.reserve(static_cast<std::size_t>(d) * per_axis);
    for (int axis = 0; axis < d; ++axis) {
        std::vector<int> fixed(static_cast<std::size_t>(d - 1), 0);
        for (std::size_t k = 0; k < per_axis; ++k) {
            // decode k as d-1 base-n digits, most significant first
            std::size_t rem = k;
            for (int i = d - 2; i >= 0; --i) {
                fixed[static_cast<std::size_t>(i)] =
                    static_cast<int>(rem % static_cast<std::size_t>(n));
                rem /= static_cast<std::size_t>(n);
            }
            lines.push_back(Line{axis, fixed});
        }
    }
    return lines;
}

std::vector<std::size_t> line_cells(const Line& l, int n, int d) {
    if (l.axis < 0 || l.axis >= d)
        throw ShapeError("line axis " + std::to_string(l.axis) + " out of range");
    if (static_cast<int>(l.fixed.size()) != d - 1)
        throw ShapeError("line has " + std::to_string(l.fixed.size()) +
                         " fixed coordinates, expected " + std::to_string(d - 1));

    // strides for row-major, last axis fastest
    std::vector<std::size_t> stride(static_cast<std::size_t>(d));
    std::size_t s = 1;
    for (int i = d - 1; i >= 0; --i) {
        stride[static_cast<std::size_t>(i)] = s;
        s *= static_cast<std::size_t>(n);
    }

    std::size_t base = 0;
    int fi = 0;
    for (int axis = 0; axis < d; ++axis) {
        if (axis == l.axis)
            continue;
        int c = l.fixed[static_cast<std::size_t>(fi++)];
        if (c < 0 || c >= n)
            throw ShapeError("line coordinate " + std::to_string(c) + " out of range");
        base += static_cast<std::size_t>(c) * stride[static_cast<std::size_t>(axis)];
    }

    std::vector<std::size_t> cells(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        cells[static_cast<std::size_t>(v)] =
            base + static_cast<std::size_t>(v) * stride[static_cast<std::size_t>(l.axis)];
    return cells;
}

Rational line_sum(const MultiMatrix& a, const Line& l) {
    Rational sum;
    for (std::size_t cell : line_cells(l, a.order(), a.dim()))
        sum += a.entry(cell);
    return sum;
}

bool is_polystochastic(const MultiMatrix& a) {
    if (a.dim() < 1)
        return false;
    for (const Rational& v : a.entries())
        if (v < 0)
            return false;
    for (const Line& l : line_ids(a.order(), a.dim()))
        if (line_sum(a, l) != 1)
            return false;
    return true;
}

std::vector<Index> support(const MultiMatrix& a) {
    std::vector<Index> cells;
    for (std::size_t flat = 0; flat < a.cell_count(); ++flat)
        if (a.entry(flat) != 0)
            cells.push_back(a.unflatten(flat));
    return cells;
}

std::size_t support_size(const MultiMatrix& a) {
    std::size_t count = 0;
    for (const Rational& v : a.entries())
        if (v != 0)
            ++count;
    return count;
}

MultiMatrix plane(const MultiMatrix& a, const std::vector<std::pair<int, int>>& fixed) {
    const int d = a.dim();
    const int n = a.order();
    std::vector<int> pin(static_cast<std::size_t>(d), -1);
    for (auto [axis, coord] : fixed) {
        if (axis < 0 || axis >= d)
            throw ShapeError("plane: axis " + std::to_string(axis) + " out of range");
        if (coord < 0 || coord >= n)
            throw ShapeError("plane: coordinate " + std::to_string(coord) + " out of range");
        if (pin[static_cast<std::size_t>(axis)] != -1)
            throw ShapeError("plane: duplicate axis " + std::to_string(axis));
        pin[static_cast<std::size_t>(axis)] = coord;
    }

    std::vector<int> free_axes;
    for (int axis = 0; axis < d; ++axis)
        if (pin[static_cast<std::size_t>(axis)] == -1)
            free_axes.push_back(axis);

    const int dd = static_cast<int>(free_axes.size());
    std::vector<Rational> out;
    out.reserve(cells_of(n, dd));

    Index src(static_cast<std::size_t>(d));
    for (int axis = 0; axis < d; ++axis)
        if (pin[static_cast<std::size_t>(axis)] != -1)
            src[static_cast<std::size_t>(axis)] = pin[static_cast<std::size_t>(axis)];

    std::size_t total = cells_of(n, dd);
    for (std::size_t flat = 0; flat < total; ++flat) {
        std::size_t rem = flat;
        for (int i = dd - 1; i >= 0; --i) {
            src[static_cast<std::size_t>(free_axes[static_cast<std::size_t>(i)])] =
                static_cast<int>(rem % static_cast<std::size_t>(n));
            rem /= static_cast<std::size_t>(n);
        }
        out.push_back(a.at(src));
    }
    return MultiMatrix(n, dd, std::move(out));
}

} // namespace polystoch
