#ifndef POLYSTOCH_ERRORS_HPP
#define POLYSTOCH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polystoch {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed dimensions, entry counts, or incompatible operand shapes.
class ShapeError : public Error {
public:
    explicit ShapeError(const std::string& what) : Error(what) {}
};

/// Malformed input document or token; carries a location when known.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

/// A precondition on the mathematical domain was violated
/// (e.g. a vertex test on a matrix that is not polystochastic).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

/// Unknown name in a fixed lookup table.
class LookupError : public Error {
public:
    explicit LookupError(const std::string& what) : Error(what) {}
};

/// A computation refuses to run because a size guard was exceeded.
class CapacityError : public Error {
public:
    explicit CapacityError(const std::string& what) : Error(what) {}
};

} // namespace polystoch

#endif
