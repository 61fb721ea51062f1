#ifndef POLYSTOCH_SYMMETRY_HPP
#define POLYSTOCH_SYMMETRY_HPP

#include "polystoch/multi_matrix.hpp"
#include "polystoch/rng.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace polystoch {

/// One element of the equivalence group of shape (n, d): an axis
/// permutation followed by one hyperplane permutation per axis.
/// `axis_perm[j]` is the destination of source axis j; hyperplane_perms[i]
/// relabels coordinates of axis i of the transformed matrix. The group
/// has (n!)^d * d! elements.
struct EquivalenceTransform {
    std::vector<int> axis_perm;
    std::vector<std::vector<int>> hyperplane_perms;

    static EquivalenceTransform identity(int n, int d);
};

/// Index map of g: coordinate i of the image is pi_i applied to the source
/// coordinate at axis axis_perm^-1(i).
Index transform_index(const EquivalenceTransform& g, const Index& idx);

/// Group action on matrices: apply(A, g)[g(alpha)] = A[alpha].
/// Satisfies apply(A, compose(g, h)) == apply(apply(A, h), g).
MultiMatrix apply_transform(const MultiMatrix& a, const EquivalenceTransform& g);

EquivalenceTransform compose(const EquivalenceTransform& g, const EquivalenceTransform& h);
EquivalenceTransform inverse(const EquivalenceTransform& g);

/// Uniformly random group element from the given generator.
EquivalenceTransform random_transform(int n, int d, SplitMix64& rng);

/// Orbit minimum: the matrix in the equivalence class of `a` whose
/// serialized entry sequence is lexicographically least. Idempotent.
/// Guarded: throws CapacityError when (n!)^d * d! > 10^7.
MultiMatrix canonical_form(const MultiMatrix& a);

/// True iff the canonical forms coincide. Requires equal shapes.
bool are_equivalent(const MultiMatrix& a, const MultiMatrix& b);

struct EquivalenceClass {
    MultiMatrix representative;        // minimal member by serialized form
    std::size_t size = 0;              // number of input items in the class
    std::vector<std::size_t> members;  // indices into the input sequence
};

/// Partition into equivalence classes, keyed by canonical form. Classes
/// are ordered by (size, serialized representative).
std::vector<EquivalenceClass> classify(std::span<const MultiMatrix> ms);

/// Seed-deterministic d-dimensional permutation of order n: the cyclic
/// permutation (1 at alpha iff sum of coordinates = 0 mod n) moved by a
/// random group element. For order 3 this reaches every permutation class.
MultiMatrix random_multidim_permutation(int n, int d, std::uint64_t seed);

} // namespace polystoch

#endif
