#ifndef POLYSTOCH_SEARCH_HPP
#define POLYSTOCH_SEARCH_HPP

#include "polystoch/multi_matrix.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace polystoch {

/// H-description of the polytope: L x = 1, x >= 0, with one 0/1 row per
/// line (in line_ids order) and one column per cell (row-major). L has
/// rank n^d - (n-1)^d.
struct LineSystem {
    int n = 0;
    int d = 0;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint8_t> bits; // row-major

    bool bit(std::size_t r, std::size_t c) const { return bits[r * cols + c] != 0; }

    static LineSystem build(int n, int d);

    /// n^d - (n-1)^d, the rank of L and the number of basic columns.
    std::size_t design_rank() const;
};

/// A basic solution of {Lx = 1}: nonzeros confined to a set of linearly
/// independent columns. Nonnegative basic solutions are the vertices.
struct BasicSolution {
    std::vector<std::size_t> basis;
    std::vector<Rational> values;
};

/// All vertices of the polytope of shape (n, d), each exactly once, sorted
/// by serialized form. Works by scanning every zero-set of (n-1)^d cells,
/// solving the line system restricted to the complement exactly, and
/// keeping the nonnegative unique solutions. Guarded by a candidate
/// budget of binomial(n^d, (n-1)^d) <= 10^7 (throws CapacityError).
/// The result is byte-identical for every thread count.
std::vector<MultiMatrix> enumerate_vertices(int n, int d, int threads = 1);

/// Exact primal simplex (two phases, Bland's rule) maximizing
/// objective . x over {Lx = 1, x >= 0}. The polytope is nonempty and
/// bounded, so an optimal basic solution always exists.
BasicSolution simplex_solve(const LineSystem& sys, std::span<const Rational> objective);

/// Vertex found by maximizing a seeded random integer objective with
/// entries uniform in [-1000, 1000] (SplitMix64 stream, one draw per cell
/// in row-major order). Deterministic per seed.
MultiMatrix sample_vertex(int n, int d, std::uint64_t seed);

struct SurveyClass {
    MultiMatrix representative;
    std::size_t support_size = 0;
    std::size_t count = 0;                       // samples landing in this class
    std::optional<std::string> matches_catalog;  // catalog name, if equivalent
};

struct SurveyReport {
    int n = 0;
    int d = 0;
    std::vector<SurveyClass> classes;
};

/// Samples seed_count vertices (seeds seed0, seed0+1, ...) and partitions
/// them into equivalence classes, tagging classes that match a catalog
/// matrix of the same shape.
SurveyReport sample_survey(int n, int d, std::size_t seed_count, std::uint64_t seed0,
                           int threads = 1);

/// Survey report as canonical JSON:
/// {"classes":[{"representative":..., "support_size":..., "count":...,
///              "matches_catalog":...}, ...]}
std::string serialize_survey(const SurveyReport& report);

} // namespace polystoch

#endif
