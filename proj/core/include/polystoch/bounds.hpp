#ifndef POLYSTOCH_BOUNDS_HPP
#define POLYSTOCH_BOUNDS_HPP

#include "polystoch/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace polystoch {

/// Exact binomial coefficient; zero when k < 0 or k > m.
BigInt binomial(const BigInt& m, const BigInt& k);

/// n^d - (n-1)^d: the largest support a vertex of shape (n, d) can have.
BigInt support_cardinality_bound(int n, int d);

/// McMullen-type cap on the vertex count of shape (n, d): with k = n^d
/// facets and m = (n-1)^d dimensions,
///   C(k - floor((m+1)/2), k - m) + C(k - floor((m+2)/2), k - m).
/// Requires n >= 2.
BigInt mcmullen_upper_bound(int n, int d);

/// Closed-form lower bounds for log2 of the vertex count at fixed order.
struct Log2Lower {
    enum class Case { n4_leading, n5, even_n, odd_n };
    Case kind;
    double value = 0;                // rounded from a 50-digit evaluation
    std::optional<BigInt> exact;     // set when the closed form is an integer
    bool tail_dropped = false;       // n=4 keeps leading terms only
};

/// Case split on the order:
///   n = 4       2^(d-1) + d*log2(3) + 1      (leading terms, o(1) dropped)
///   n = 5       3^((d-1)/3) - 0.072
///   even n >= 6 (n/2)^(d-1)                  (exact integer)
///   odd n >= 7  ((n-3)/2)^((d-1)/2) * ((n-1)/2)^((d-1)/2)
/// None for n <= 3.
std::optional<Log2Lower> log2_lower_bound(int n, int d);

/// Leading terms of the fixed-n upper bound on log2 of the vertex count:
///   d(n-1)^d/2 * (log2 n - log2(n-1)) + (n-1)^d/2 * (1 + log2 e),
/// with the o((n-1)^d) tail dropped. Requires n >= 2.
double log2_upper_bound_leading(int n, int d);

struct BoundReport {
    int n = 0;
    int d = 0;
    BigInt support_bound;
    BigInt mcmullen_upper;
    std::optional<Log2Lower> log2_lower;
    double log2_upper_leading = 0;
    std::vector<std::string> notes; // which values carry dropped tails
};

/// All four bounds plus caveat notes. Requires n >= 2, d >= 1.
BoundReport bound_report(int n, int d);

/// Canonical JSON with big integers as decimal strings and reals fixed to
/// ten decimal places (values are reproducible to 1e-9).
std::string serialize_bound_report(const BoundReport& report);

const char* log2_lower_case_name(Log2Lower::Case kind);

} // namespace polystoch

#endif
