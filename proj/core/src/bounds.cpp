#include "polystoch/bounds.hpp"
#include "polystoch/errors.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <cstdio>

namespace polystoch {

namespace {

using Real = boost::multiprecision::mpfr_float_50;

BigInt int_pow(const BigInt& base, int exp) {
    return pow(base, static_cast<unsigned>(exp));
}

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10f", v);
    return buf;
}

} // namespace

BigInt binomial(const BigInt& m, const BigInt& k) {
    if (k < 0 || k > m)
        return 0;
    BigInt kk = k;
    if (m - k < kk)
        kk = m - k;
    BigInt result = 1;
    for (BigInt i = 1; i <= kk; ++i) {
        result *= m - kk + i;
        result /= i; // exact: result is a binomial at every step
    }
    return result;
}

BigInt support_cardinality_bound(int n, int d) {
    if (n < 1 || d < 1)
        throw DomainError("support bound requires n >= 1 and d >= 1");
    return int_pow(BigInt(n), d) - int_pow(BigInt(n - 1), d);
}

BigInt mcmullen_upper_bound(int n, int d) {
    if (n < 2 || d < 1)
        throw DomainError("vertex-count bound requires n >= 2 and d >= 1");
    BigInt facets = int_pow(BigInt(n), d);        // k
    BigInt dims = int_pow(BigInt(n - 1), d);      // m
    BigInt basic = facets - dims;                 // k - m
    return binomial(facets - (dims + 1) / 2, basic) + binomial(facets - (dims + 2) / 2, basic);
}

std::optional<Log2Lower> log2_lower_bound(int n, int d) {
    if (n < 4)
        return std::nullopt;
    if (d < 1)
        throw DomainError("log2 lower bound requires d >= 1");

    Log2Lower out;
    if (n == 4) {
        out.kind = Log2Lower::Case::n4_leading;
        out.tail_dropped = true;
        Real v = Real(int_pow(BigInt(2), d - 1).str()) + Real(d) * log2(Real(3)) + 1;
        out.value = v.convert_to<double>();
    } else if (n == 5) {
        out.kind = Log2Lower::Case::n5;
        Real v = pow(Real(3), Real(d - 1) / 3) - Real("0.072");
        out.value = v.convert_to<double>();
    } else if (n % 2 == 0) {
        out.kind = Log2Lower::Case::even_n;
        out.exact = int_pow(BigInt(n / 2), d - 1);
        out.value = Real(out.exact->str()).convert_to<double>();
    } else {
        out.kind = Log2Lower::Case::odd_n;
        if ((d - 1) % 2 == 0) {
            out.exact = int_pow(BigInt((n - 3) / 2) * BigInt((n - 1) / 2), (d - 1) / 2);
            out.value = Real(out.exact->str()).convert_to<double>();
        } else {
            Real prod = Real((n - 3) / 2) * Real((n - 1) / 2);
            out.value = pow(prod, Real(d - 1) / 2).convert_to<double>();
        }
    }
    return out;
}

double log2_upper_bound_leading(int n, int d) {
    if (n < 2 || d < 1)
        throw DomainError("log2 upper bound requires n >= 2 and d >= 1");
    Real shrunk(int_pow(BigInt(n - 1), d).str());
    Real facet_gap = log2(Real(n)) - log2(Real(n - 1));
    Real v = Real(d) * shrunk / 2 * facet_gap + shrunk / 2 * (1 + log2(exp(Real(1))));
    return v.convert_to<double>();
}

BoundReport bound_report(int n, int d) {
    if (n < 2 || d < 1)
        throw DomainError("bound report requires n >= 2 and d >= 1");
    BoundReport report;
    report.n = n;
    report.d = d;
    report.support_bound = support_cardinality_bound(n, d);
    report.mcmullen_upper = mcmullen_upper_bound(n, d);
    report.log2_lower = log2_lower_bound(n, d);
    report.log2_upper_leading = log2_upper_bound_leading(n, d);

    if (report.log2_lower && report.log2_lower->tail_dropped)
        report.notes.push_back("log2_lower (n=4): leading terms only, o(1) dropped");
    if (!report.log2_lower)
        report.notes.push_back("log2_lower: no closed form for n <= 3");
    report.notes.push_back("log2_upper_leading: o((n-1)^d) tail dropped");
    report.notes.push_back("real values carry 1e-9 precision");
    return report;
}

const char* log2_lower_case_name(Log2Lower::Case kind) {
    switch (kind) {
    case Log2Lower::Case::n4_leading:
        return "n=4 (leading terms)";
    case Log2Lower::Case::n5:
        return "n=5";
    case Log2Lower::Case::even_n:
        return "even n";
    case Log2Lower::Case::odd_n:
        return "odd n";
    }
    return "?";
}

std::string serialize_bound_report(const BoundReport& report) {
    std::string out = "{\"n\":" + std::to_string(report.n) + ",\"d\":" + std::to_string(report.d);
    out += ",\"support_bound\":\"" + report.support_bound.str() + "\"";
    out += ",\"mcmullen_upper\":\"" + report.mcmullen_upper.str() + "\"";
    out += ",\"log2_lower\":";
    if (report.log2_lower) {
        const Log2Lower& lb = *report.log2_lower;
        out += std::string("{\"case\":\"") + log2_lower_case_name(lb.kind) + "\"";
        out += ",\"value\":" + format_real(lb.value);
        out += ",\"exact\":";
        out += lb.exact ? "\"" + lb.exact->str() + "\"" : std::string("null");
        out += ",\"tail_dropped\":";
        out += lb.tail_dropped ? "true" : "false";
        out += "}";
    } else {
        out += "null";
    }
    out += ",\"log2_upper_leading\":" + format_real(report.log2_upper_leading);
    out += ",\"notes\":[";
    bool first = true;
    for (const std::string& note : report.notes) {
        if (!first)
            out += ',';
        first = false;
        out += "\"" + note + "\"";
    }
    out += "]}";
    return out;
}

} // namespace polystoch
