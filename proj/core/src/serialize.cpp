#include "polystoch/serialize.hpp"
#include "polystoch/errors.hpp"

#include <json.hpp>

namespace polystoch {

std::string serialize_matrix(const MultiMatrix& a) {
    std::string out = "{\"n\":" + std::to_string(a.order()) +
                      ",\"d\":" + std::to_string(a.dim()) + ",\"entries\":[";
    bool first = true;
    for (const Rational& v : a.entries()) {
        if (!first)
            out += ',';
        first = false;
        out += '"';
        out += to_token(v);
        out += '"';
    }
    out += "]}";
    return out;
}

MultiMatrix parse_matrix(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("matrix document: ") + e.what());
    }
    if (!doc.is_object())
        throw ParseError("matrix document: expected a JSON object");
    for (const char* key : {"n", "d", "entries"})
        if (!doc.contains(key))
            throw ParseError(std::string("matrix document: missing field \"") + key + "\"");
    if (!doc["n"].is_number_integer() || !doc["d"].is_number_integer())
        throw ParseError("matrix document: \"n\" and \"d\" must be integers");
    if (!doc["entries"].is_array())
        throw ParseError("matrix document: \"entries\" must be an array");

    int n = doc["n"].get<int>();
    int d = doc["d"].get<int>();
    if (n < 1 || d < 0)
        throw ShapeError("matrix document: need n >= 1 and d >= 0");

    std::vector<Rational> entries;
    entries.reserve(doc["entries"].size());
    std::size_t pos = 0;
    for (const auto& token : doc["entries"]) {
        if (!token.is_string())
            throw ParseError("matrix document: entry " + std::to_string(pos) +
                             " is not a string token");
        try {
            entries.push_back(parse_rational(token.get<std::string>()));
        } catch (const ParseError& e) {
            throw ParseError("matrix document: entry " + std::to_string(pos) + ": " + e.what());
        }
        ++pos;
    }
    return MultiMatrix(n, d, std::move(entries));
}

} // namespace polystoch
