#ifndef POLYSTOCH_CATALOG_HPP
#define POLYSTOCH_CATALOG_HPP

#include "polystoch/multi_matrix.hpp"

#include <string>
#include <vector>

namespace polystoch {

/// Built-in reference matrices:
///   V3_3         order 3, dim 3 vertex with half-integer entries
///   M3_3         order 3, dim 3 cyclic permutation (a_ijk = 1 iff i+j+k = 0 mod 3)
///   M3_4         order 3, dim 4 permutation
///   A1..A4       order 3, dim 4 vertices
///   M33_dot_V33  order 3, dim 4 vertex (a dot product of the two above, up to
///                relabeling)
/// Throws LookupError for unknown names.
MultiMatrix catalog(const std::string& name);

/// Names accepted by catalog(), in a fixed order.
const std::vector<std::string>& catalog_names();

} // namespace polystoch

#endif
