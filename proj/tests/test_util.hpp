#ifndef POLYSTOCH_TEST_UTIL_HPP
#define POLYSTOCH_TEST_UTIL_HPP

#include "polystoch/linalg.hpp"
#include "polystoch/multi_matrix.hpp"
#include "polystoch/rng.hpp"
#include "polystoch/serialize.hpp"
#include "polystoch/symmetry.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

namespace polystoch::testutil {

// Independent rank oracle: textbook Gauss-Jordan over plain rationals,
// deliberately sharing nothing with the Bareiss implementation.
inline std::size_t rref_rank(RationalMatrix m) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows && m.at(pivot, col) == 0)
            ++pivot;
        if (pivot == m.rows)
            continue;
        for (std::size_t j = 0; j < m.cols; ++j)
            std::swap(m.at(rank, j), m.at(pivot, j));
        Rational p = m.at(rank, col);
        for (std::size_t j = 0; j < m.cols; ++j)
            m.at(rank, j) /= p;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == rank || m.at(i, col) == 0)
                continue;
            Rational f = m.at(i, col);
            for (std::size_t j = 0; j < m.cols; ++j)
                m.at(i, j) -= f * m.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

// Every (0,1) polystochastic matrix of shape (n, d), by exhausting all
// 2^(n^d) cell subsets. Only sensible for tiny shapes.
inline std::vector<MultiMatrix> brute_force_01_polystochastic(int n, int d) {
    const std::size_t cells = cells_of(n, d);
    std::vector<MultiMatrix> found;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << cells); ++mask) {
        std::vector<Rational> entries(cells);
        for (std::size_t c = 0; c < cells; ++c)
            if (mask >> c & 1)
                entries[c] = 1;
        MultiMatrix m(n, d, std::move(entries));
        if (is_polystochastic(m))
            found.push_back(std::move(m));
    }
    return found;
}

// Random polystochastic matrix: a convex combination of up to `terms`
// seeded random permutations with random positive weights.
inline MultiMatrix random_polystochastic(int n, int d, std::uint64_t seed, int terms = 3) {
    SplitMix64 rng(seed);
    std::vector<MultiMatrix> parts;
    std::vector<Rational> weights;
    Rational total;
    for (int t = 0; t < terms; ++t) {
        parts.push_back(random_multidim_permutation(n, d, rng.next()));
        Rational w(rng.range(1, 20));
        weights.push_back(w);
        total += w;
    }
    std::vector<Rational> entries(cells_of(n, d));
    for (std::size_t c = 0; c < entries.size(); ++c)
        for (int t = 0; t < terms; ++t)
            entries[c] += weights[static_cast<std::size_t>(t)] / total *
                          parts[static_cast<std::size_t>(t)].entry(c);
    return MultiMatrix(n, d, std::move(entries));
}

// 2-dimensional permutation matrix with 1 at (i, perm[i]).
inline MultiMatrix perm_matrix_2d(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    std::vector<Rational> entries(cells_of(n, 2));
    for (int i = 0; i < n; ++i)
        entries[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(perm[i])] = 1;
    return MultiMatrix(n, 2, std::move(entries));
}

inline std::set<std::string> serialized_set(const std::vector<MultiMatrix>& ms) {
    std::set<std::string> out;
    for (const MultiMatrix& m : ms)
        out.insert(serialize_matrix(m));
    return out;
}

// Every element of the equivalence group of shape (n, d), for exhaustive
// orbit checks on small shapes.
inline std::vector<EquivalenceTransform> full_group(int n, int d) {
    std::vector<std::vector<int>> perms_n;
    {
        std::vector<int> p(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            p[static_cast<std::size_t>(i)] = i;
        do
            perms_n.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
    }
    std::vector<int> axis(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i)
        axis[static_cast<std::size_t>(i)] = i;

    std::vector<EquivalenceTransform> group;
    do {
        std::vector<std::size_t> pick(static_cast<std::size_t>(d), 0);
        for (;;) {
            EquivalenceTransform g;
            g.axis_perm = axis;
            for (int i = 0; i < d; ++i)
                g.hyperplane_perms.push_back(perms_n[pick[static_cast<std::size_t>(i)]]);
            group.push_back(std::move(g));

            int i = d - 1;
            while (i >= 0 && ++pick[static_cast<std::size_t>(i)] == perms_n.size()) {
                pick[static_cast<std::size_t>(i)] = 0;
                --i;
            }
            if (i < 0)
                break;
        }
    } while (std::next_permutation(axis.begin(), axis.end()));
    return group;
}

} // namespace polystoch::testutil

#endif
