#ifndef POLYSTOCH_SERIALIZE_HPP
#define POLYSTOCH_SERIALIZE_HPP

#include "polystoch/multi_matrix.hpp"

#include <string>
#include <string_view>

namespace polystoch {

/// Matrix file format, bit-exact:
///   {"n": 3, "d": 3, "entries": ["1", "0", "1/2", ...]}
/// with entries row-major (last axis fastest), each token "p" or "p/q"
/// in lowest terms with q > 0. serialize_matrix emits the single
/// canonical form: no whitespace, fields in the order n, d, entries.
std::string serialize_matrix(const MultiMatrix& a);

/// Parses the format above. Accepts any JSON whitespace and reduces
/// non-canonical fraction tokens; throws ParseError (with the document
/// location when the JSON itself is malformed) or ShapeError.
MultiMatrix parse_matrix(std::string_view text);

} // namespace polystoch

#endif
