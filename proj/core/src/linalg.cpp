#include "polystoch/linalg.hpp"

#include <algorithm>
#include <utility>

namespace polystoch {

namespace detail {

std::vector<std::size_t> bareiss_echelon(std::vector<BigInt>& m, std::size_t rows,
                                         std::size_t cols) {
    std::vector<std::size_t> pivots;
    BigInt prev = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pr = row;
        while (pr < rows && m[pr * cols + col] == 0)
            ++pr;
        if (pr == rows)
            continue; // free column
        if (pr != row)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(m[row * cols + j], m[pr * cols + j]);

        // Every row below is rescaled, zero head or not; skipping would
        // break the exactness of later divisions.
        const BigInt pivot = m[row * cols + col];
        for (std::size_t i = row + 1; i < rows; ++i) {
            const BigInt head = m[i * cols + col];
            for (std::size_t j = col + 1; j < cols; ++j) {
                BigInt v = pivot * m[i * cols + j] - head * m[row * cols + j];
                m[i * cols + j] = v / prev; // exact by Sylvester's identity
            }
            m[i * cols + col] = 0;
        }
        prev = pivot;
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace detail

namespace {

// Scale each row by the lcm of its denominators; preserves rank and kernel.
std::vector<BigInt> to_integer_rows(const RationalMatrix& m) {
    std::vector<BigInt> out(m.rows * m.cols);
    for (std::size_t r = 0; r < m.rows; ++r) {
        BigInt scale = 1;
        for (std::size_t c = 0; c < m.cols; ++c)
            scale = lcm(scale, denominator(m.at(r, c)));
        for (std::size_t c = 0; c < m.cols; ++c) {
            const Rational& v = m.at(r, c);
            out[r * m.cols + c] = numerator(v) * (scale / denominator(v));
        }
    }
    return out;
}

} // namespace

std::size_t rank_exact(const RationalMatrix& m) {
    if (m.rows == 0 || m.cols == 0)
        return 0;
    std::vector<BigInt> work = to_integer_rows(m);
    return detail::bareiss_echelon(work, m.rows, m.cols).size();
}

std::optional<std::vector<Rational>> first_kernel_vector(const RationalMatrix& m) {
    if (m.cols == 0)
        return std::nullopt;
    std::vector<BigInt> e = to_integer_rows(m);
    std::vector<std::size_t> pivots = detail::bareiss_echelon(e, m.rows, m.cols);
    if (pivots.size() == m.cols)
        return std::nullopt;

    std::size_t free_col = 0;
    while (free_col < pivots.size() && pivots[free_col] == free_col)
        ++free_col; // pivots are increasing, so this finds the first gap

    std::vector<Rational> x(m.cols);
    x[free_col] = 1;
    for (std::size_t i = pivots.size(); i-- > 0;) {
        const std::size_t pc = pivots[i];
        if (pc > free_col)
            continue; // forced to zero
        Rational acc;
        for (std::size_t j = pc + 1; j <= free_col; ++j)
            if (e[i * m.cols + j] != 0 && x[j] != 0)
                acc += Rational(e[i * m.cols + j]) * x[j];
        x[pc] = -acc / Rational(e[i * m.cols + pc]);
    }
    return x;
}

std::vector<std::size_t> independent_rows(const RationalMatrix& m) {
    // Pivot columns of the transpose are exactly the greedily kept rows.
    RationalMatrix t(m.cols, m.rows);
    for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t c = 0; c < m.cols; ++c)
            t.at(c, r) = m.at(r, c);
    std::vector<BigInt> work = to_integer_rows(t);
    return detail::bareiss_echelon(work, t.rows, t.cols);
}

} // namespace polystoch
