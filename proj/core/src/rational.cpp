#include "polystoch/rational.hpp"
#include "polystoch/errors.hpp"

#include <cctype>

namespace polystoch {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view token) {
    std::string_view num = token;
    std::string_view den;
    if (auto slash = token.find('/'); slash != std::string_view::npos) {
        num = token.substr(0, slash);
        den = token.substr(slash + 1);
        if (!all_digits(den))
            throw ParseError("bad rational token '" + std::string(token) +
                             "': denominator must be a positive decimal integer");
    }
    bool negative = !num.empty() && num.front() == '-';
    if (negative)
        num.remove_prefix(1);
    if (!all_digits(num))
        throw ParseError("bad rational token '" + std::string(token) + "'");

    BigInt p{std::string(num)};
    if (negative)
        p = -p;
    if (den.empty())
        return Rational(p);

    BigInt q{std::string(den)};
    if (q == 0)
        throw ParseError("bad rational token '" + std::string(token) + "': zero denominator");
    return Rational(p, q); // canonicalized by GMP
}

std::string to_token(const Rational& value) {
    return value.str();
}

} // namespace polystoch
