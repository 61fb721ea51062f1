#include "polystoch/catalog.hpp"
#include "polystoch/errors.hpp"

#include <array>
#include <sstream>

namespace polystoch {

namespace {

std::vector<Rational> tokenize(const std::vector<const char*>& rows) {
    std::vector<Rational> values;
    for (const char* row : rows) {
        std::istringstream in(row);
        std::string token;
        while (in >> token)
            values.push_back(parse_rational(token));
    }
    return values;
}

// Order-3 grids are written as 3x9 (d=3) or 9x9 (d=4) tables. A d=3 table
// maps as a[row][col_block][col], which coincides with the row-major token
// stream. A d=4 table is a 3x3 block matrix of 3x3 blocks:
// a[row_block][col_block][row_in_block][col_in_block].
MultiMatrix from_table3(const std::vector<const char*>& rows) {
    return MultiMatrix(3, 3, tokenize(rows));
}

MultiMatrix from_table4(const std::vector<const char*>& rows) {
    std::vector<Rational> tokens = tokenize(rows);
    if (tokens.size() != 81)
        throw ShapeError("catalog table must have 81 entries");
    std::vector<Rational> entries(81);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l)
                    entries[27 * i + 9 * j + 3 * k + l] = tokens[27 * i + 9 * k + 3 * j + l];
    return MultiMatrix(3, 4, std::move(entries));
}

MultiMatrix cyclic_m33() {
    std::vector<Rational> entries(27);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                if ((i + j + k) % 3 == 0)
                    entries[9 * i + 3 * j + k] = 1;
    return MultiMatrix(3, 3, std::move(entries));
}

MultiMatrix build(const std::string& name) {
    if (name == "V3_3")
        return from_table3({
            "1 0 0 0 1/2 1/2 0 1/2 1/2",
            "0 1/2 1/2 1/2 1/2 0 1/2 0 1/2",
            "0 1/2 1/2 1/2 0 1/2 1/2 1/2 0",
        });
    if (name == "M3_3")
        return cyclic_m33();
    if (name == "M3_4")
        return from_table4({
            "1 0 0 0 1 0 0 0 1",
            "0 1 0 0 0 1 1 0 0",
            "0 0 1 1 0 0 0 1 0",
            "0 1 0 0 0 1 1 0 0",
            "0 0 1 1 0 0 0 1 0",
            "1 0 0 0 1 0 0 0 1",
            "0 0 1 1 0 0 0 1 0",
            "1 0 0 0 1 0 0 0 1",
            "0 1 0 0 0 1 1 0 0",
        });
    if (name == "A1")
        return from_table4({
            "1 0 0 0 1 0 0 0 1",
            "0 1/2 1/2 1/2 0 1/2 1/2 1/2 0",
            "0 1/2 1/2 1/2 0 1/2 1/2 1/2 0",
            "0 1/2 1/2 1/2 0 1/2 1/2 1/2 0",
            "1 0 0 0 1/2 1/2 0 1/2 1/2",
            "0 1/2 1/2 1/2 1/2 0 1/2 0 1/2",
            "0 1/2 1/2 1/2 0 1/2 1/2 1/2 0",
            "0 1/2 1/2 1/2 1/2 0 1/2 0 1/2",
            "1 0 0 0 1/2 1/2 0 1/2 1/2",
        });
    if (name == "M33_dot_V33")
        return from_table4({
            "1 0 0 0 1/2 1/2 0 1/2 1/2",
            "0 1/2 1/2 1/2 0 1/2 1/2 1/2 0",
            "0 1/2 1/2 1/2 1/2 0 1/2 0 1/2",
            "0 1/2 1/2 1 0 0 0 1/2 1/2",
            "1/2 1/2 0 0 1/2 1/2 1/2 0 1/2",
            "1/2 0 1/2 0 1/2 1/2 1/2 1/2 0",
            "0 1/2 1/2 0 1/2 1/2 1 0 0",
            "1/2 0 1/2 1/2 1/2 0 0 1/2 1/2",
            "1/2 1/2 0 1/2 0 1/2 0 1/2 1/2",
        });
    if (name == "A2")
        return from_table4({
            "1 0 0 0 1/2 1/2 0 1/2 1/2",
            "0 1/2 1/2 1/2 0 1/2 1/2 1/2 0",
            "0 1/2 1/2 1/2 1/2 0 1/2 0 1/2",
            "0 1/2 1/2 1/2 0 1/2 1/2 1/2 0",
            "1/2 0 1/2 0 1 0 1/2 0 1/2",
            "1/2 1/2 0 1/2 0 1/2 0 1/2 1/2",
            "0 1/2 1/2 1/2 1/2 0 1/2 0 1/2",
            "1/2 1/2 0 1/2 0 1/2 0 1/2 1/2",
            "1/2 0 1/2 0 1/2 1/2 1/2 1/2 0",
        });
    if (name == "A3")
        // The fourth entry of the last row is 2/3: the 1/3 printed in some
        // copies fails all four line sums through that cell.
        return from_table4({
            "1 0 0 0 1/3 2/3 0 2/3 1/3",
            "0 2/3 1/3 2/3 1/3 0 1/3 0 2/3",
            "0 1/3 2/3 1/3 1/3 1/3 2/3 1/3 0",
            "0 2/3 1/3 2/3 1/3 0 1/3 0 2/3",
            "1/3 1/3 1/3 1/3 0 2/3 1/3 2/3 0",
            "2/3 0 1/3 0 2/3 1/3 1/3 1/3 1/3",
            "0 1/3 2/3 1/3 1/3 1/3 2/3 1/3 0",
            "2/3 0 1/3 0 2/3 1/3 1/3 1/3 1/3",
            "1/3 2/3 0 2/3 0 1/3 0 1/3 2/3",
        });
    if (name == "A4")
        return from_table4({
            "1/3 1/3 1/3 1/3 0 2/3 1/3 2/3 0",
            "1/3 1/3 1/3 2/3 1/3 0 0 1/3 2/3",
            "1/3 1/3 1/3 0 2/3 1/3 2/3 0 1/3",
            "2/3 0 1/3 1/3 2/3 0 0 1/3 2/3",
            "0 1/3 2/3 1/3 1/3 1/3 2/3 1/3 0",
            "1/3 2/3 0 1/3 0 2/3 1/3 1/3 1/3",
            "0 2/3 1/3 1/3 1/3 1/3 2/3 0 1/3",
            "2/3 1/3 0 0 1/3 2/3 1/3 1/3 1/3",
            "1/3 0 2/3 2/3 1/3 0 0 2/3 1/3",
        });
    throw LookupError("unknown catalog name '" + name + "'");
}

} // namespace

MultiMatrix catalog(const std::string& name) {
    return build(name);
}

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = {"V3_3", "M3_3",        "M3_4", "A1",
                                                   "A2",   "A3",          "A4",   "M33_dot_V33"};
    return names;
}

} // namespace polystoch
