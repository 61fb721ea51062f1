#include "polystoch/products.hpp"
#include "polystoch/errors.hpp"
#include "polystoch/symmetry.hpp"

#include <string>

namespace polystoch {

MultiMatrix kronecker(const MultiMatrix& a, const MultiMatrix& b) {
    if (a.dim() != b.dim())
        throw ShapeError("kronecker: dimensions differ (" + std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()) + ")");
    const int d = a.dim();
    const int n1 = a.order();
    const int n2 = b.order();
    const int n = n1 * n2;

    std::vector<Rational> out(cells_of(n, d));
    Index gamma(static_cast<std::size_t>(d), 0);
    Index alpha(static_cast<std::size_t>(d), 0);
    Index beta(static_cast<std::size_t>(d), 0);
    for (std::size_t flat = 0; flat < out.size(); ++flat) {
        std::size_t rem = flat;
        for (int i = d - 1; i >= 0; --i) {
            gamma[static_cast<std::size_t>(i)] = static_cast<int>(rem % static_cast<std::size_t>(n));
            rem /= static_cast<std::size_t>(n);
        }
        for (int i = 0; i < d; ++i) {
            alpha[static_cast<std::size_t>(i)] = gamma[static_cast<std::size_t>(i)] / n2;
            beta[static_cast<std::size_t>(i)] = gamma[static_cast<std::size_t>(i)] % n2;
        }
        const Rational& av = a.at(alpha);
        if (av != 0)
            out[flat] = av * b.at(beta);
    }
    return MultiMatrix(n, d, std::move(out));
}

MultiMatrix dot(const MultiMatrix& a, const MultiMatrix& b) {
    if (a.order() != b.order())
        throw ShapeError("dot: orders differ (" + std::to_string(a.order()) + " vs " +
                         std::to_string(b.order()) + ")");
    if (a.dim() < 2 || b.dim() < 2)
        throw ShapeError("dot: both operands need dimension >= 2");

    const int n = a.order();
    const std::size_t nn = static_cast<std::size_t>(n);
    const int d_out = a.dim() + b.dim() - 2;
    const std::size_t a_base_count = cells_of(n, a.dim() - 1);
    const std::size_t b_base_count = cells_of(n, b.dim() - 1);

    // Flat layout: a cell of the product is alpha||beta, so its offset is
    // alpha_base * n^(d2-1) + beta_base; in `a` the contracted axis is
    // fastest, in `b` it is slowest.
    std::vector<Rational> out(cells_of(n, d_out));
    for (std::size_t ab = 0; ab < a_base_count; ++ab) {
        for (std::size_t m = 0; m < nn; ++m) {
            const Rational& av = a.entry(ab * nn + m);
            if (av == 0)
                continue;
            for (std::size_t bb = 0; bb < b_base_count; ++bb) {
                const Rational& bv = b.entry(m * b_base_count + bb);
                if (bv != 0)
                    out[ab * b_base_count + bb] += av * bv;
            }
        }
    }
    return MultiMatrix(n, d_out, std::move(out));
}

bool dot_plane_equivalence_check(const MultiMatrix& a, const MultiMatrix& b) {
    for (const Rational& v : a.entries())
        if (v != 0 && v != 1)
            throw DomainError("plane equivalence check needs a (0,1) matrix on the left");
    if (!is_polystochastic(a))
        throw DomainError("plane equivalence check needs a polystochastic matrix on the left");

    MultiMatrix c = dot(a, b);
    const int lead = a.dim() - 2;
    const std::size_t tuples = cells_of(a.order(), lead);

    std::vector<std::pair<int, int>> fixed(static_cast<std::size_t>(lead));
    for (std::size_t t = 0; t < tuples; ++t) {
        std::size_t rem = t;
        for (int i = lead - 1; i >= 0; --i) {
            fixed[static_cast<std::size_t>(i)] = {i, static_cast<int>(rem % a.order())};
            rem /= static_cast<std::size_t>(a.order());
        }
        if (!are_equivalent(plane(c, fixed), b))
            return false;
    }
    return true;
}

} // namespace polystoch
