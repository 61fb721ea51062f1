#ifndef POLYSTOCH_PRODUCTS_HPP
#define POLYSTOCH_PRODUCTS_HPP

#include "polystoch/multi_matrix.hpp"

namespace polystoch {

/// Kronecker product of two matrices of equal dimension d: the result has
/// order n1*n2 and entries c_gamma = a_alpha * b_beta, where coordinate i
/// of gamma is alpha_i * n2 + beta_i. Preserves polystochasticity.
MultiMatrix kronecker(const MultiMatrix& a, const MultiMatrix& b);

/// Dot product: contracts the last axis of `a` against the first axis of
/// `b`, giving a (d1 + d2 - 2)-dimensional matrix of the common order.
/// Requires equal orders and d1, d2 >= 2. Preserves polystochasticity.
MultiMatrix dot(const MultiMatrix& a, const MultiMatrix& b);

/// For a (0,1) polystochastic `a`: fixes the leading d1-2 axes of a.b at
/// every coordinate tuple and checks that each resulting d2-dimensional
/// plane is equivalent to `b`. This is the plane family along which the
/// dot product inherits vertexhood.
bool dot_plane_equivalence_check(const MultiMatrix& a, const MultiMatrix& b);

} // namespace polystoch

#endif
