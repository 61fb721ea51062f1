#include "polystoch/vertex_test.hpp"
#include "polystoch/errors.hpp"
#include "polystoch/serialize.hpp"

#include <json.hpp>

#include <algorithm>

namespace polystoch {

RationalMatrix IncidenceMatrix::to_rational() const {
    RationalMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (bits[r * cols + c])
                m.at(r, c) = 1;
    return m;
}

IncidenceMatrix incidence_matrix(const MultiMatrix& a) {
    const int n = a.order();
    const int d = a.dim();
    if (d < 1)
        throw DomainError("incidence matrix needs dimension >= 1");

    IncidenceMatrix inc;
    for (std::size_t flat = 0; flat < a.cell_count(); ++flat)
        if (a.entry(flat) != 0)
            inc.support_flat.push_back(flat);
    if (inc.support_flat.empty())
        throw DomainError("incidence matrix of the zero matrix: empty support");

    std::vector<Line> lines = line_ids(n, d);
    inc.rows = lines.size();
    inc.cols = inc.support_flat.size();
    inc.bits.assign(inc.rows * inc.cols, 0);

    for (std::size_t r = 0; r < lines.size(); ++r) {
        for (std::size_t cell : line_cells(lines[r], n, d)) {
            auto it = std::lower_bound(inc.support_flat.begin(), inc.support_flat.end(), cell);
            if (it != inc.support_flat.end() && *it == cell) {
                std::size_t c = static_cast<std::size_t>(it - inc.support_flat.begin());
                inc.bits[r * inc.cols + c] = 1;
            }
        }
    }
    return inc;
}

std::size_t rank_exact(const IncidenceMatrix& m) {
    std::vector<BigInt> work(m.bits.begin(), m.bits.end());
    return detail::bareiss_echelon(work, m.rows, m.cols).size();
}

bool is_vertex(const MultiMatrix& a) {
    if (!is_polystochastic(a))
        throw DomainError("vertex test requires a polystochastic matrix");
    IncidenceMatrix inc = incidence_matrix(a);
    return rank_exact(inc) == inc.cols;
}

std::optional<NonVertexCertificate> non_vertex_certificate(const MultiMatrix& a) {
    if (!is_polystochastic(a))
        throw DomainError("certificate search requires a polystochastic matrix");

    IncidenceMatrix inc = incidence_matrix(a);
    auto kernel_coeffs = first_kernel_vector(inc.to_rational());
    if (!kernel_coeffs)
        return std::nullopt;

    std::vector<Rational> b_entries(a.cell_count());
    for (std::size_t c = 0; c < inc.cols; ++c)
        b_entries[inc.support_flat[c]] = (*kernel_coeffs)[c];
    MultiMatrix b(a.order(), a.dim(), std::move(b_entries));

    // Largest step keeping both endpoints nonnegative: one entry of d2
    // (or d1) lands exactly on zero.
    Rational eps;
    bool first = true;
    for (std::size_t flat = 0; flat < a.cell_count(); ++flat) {
        const Rational& bv = b.entry(flat);
        if (bv == 0)
            continue;
        Rational ratio = a.entry(flat) / abs(bv);
        if (first || ratio < eps) {
            eps = ratio;
            first = false;
        }
    }

    std::vector<Rational> d1_entries(a.cell_count());
    std::vector<Rational> d2_entries(a.cell_count());
    for (std::size_t flat = 0; flat < a.cell_count(); ++flat) {
        d1_entries[flat] = a.entry(flat) + eps * b.entry(flat);
        d2_entries[flat] = a.entry(flat) - eps * b.entry(flat);
    }
    return NonVertexCertificate{std::move(b),
                                MultiMatrix(a.order(), a.dim(), std::move(d1_entries)),
                                MultiMatrix(a.order(), a.dim(), std::move(d2_entries)),
                                Rational(1, 2)};
}

bool is_valid_certificate(const MultiMatrix& a, const NonVertexCertificate& cert) {
    const auto& b = cert.kernel;
    if (b.order() != a.order() || b.dim() != a.dim())
        return false;
    if (cert.d1.order() != a.order() || cert.d1.dim() != a.dim())
        return false;
    if (cert.d2.order() != a.order() || cert.d2.dim() != a.dim())
        return false;

    bool nonzero = false;
    for (std::size_t flat = 0; flat < b.cell_count(); ++flat) {
        if (b.entry(flat) != 0) {
            nonzero = true;
            if (a.entry(flat) == 0)
                return false; // supp(B) must sit inside supp(A)
        }
    }
    if (!nonzero)
        return false;
    for (const Line& l : line_ids(b.order(), b.dim()))
        if (line_sum(b, l) != 0)
            return false;

    if (!is_polystochastic(cert.d1) || !is_polystochastic(cert.d2))
        return false;
    if (cert.d1 == cert.d2)
        return false;
    if (cert.lambda <= 0 || cert.lambda >= 1)
        return false;
    for (std::size_t flat = 0; flat < a.cell_count(); ++flat) {
        Rational mix = cert.lambda * cert.d1.entry(flat) +
                       (Rational(1) - cert.lambda) * cert.d2.entry(flat);
        if (mix != a.entry(flat))
            return false;
    }
    return true;
}

bool check_support_bound(const MultiMatrix& a) {
    BigInt n(a.order());
    BigInt bound = pow(n, static_cast<unsigned>(a.dim())) -
                   pow(n - 1, static_cast<unsigned>(a.dim()));
    return BigInt(support_size(a)) <= bound;
}

std::string serialize_certificate(const NonVertexCertificate& cert) {
    std::string out = "{\"kernel\":" + serialize_matrix(cert.kernel);
    out += ",\"d1\":" + serialize_matrix(cert.d1);
    out += ",\"d2\":" + serialize_matrix(cert.d2);
    out += ",\"lambda\":\"" + to_token(cert.lambda) + "\"}";
    return out;
}

NonVertexCertificate parse_certificate(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("certificate document: ") + e.what());
    }
    for (const char* key : {"kernel", "d1", "d2", "lambda"})
        if (!doc.contains(key))
            throw ParseError(std::string("certificate document: missing field \"") + key + "\"");
    return NonVertexCertificate{parse_matrix(doc["kernel"].dump()),
                                parse_matrix(doc["d1"].dump()),
                                parse_matrix(doc["d2"].dump()),
                                parse_rational(doc["lambda"].get<std::string>())};
}

} // namespace polystoch
