#include "polystoch/symmetry.hpp"
#include "polystoch/errors.hpp"
#include "polystoch/serialize.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace polystoch {

namespace {

std::vector<int> identity_perm(int k) {
    std::vector<int> p(static_cast<std::size_t>(k));
    std::iota(p.begin(), p.end(), 0);
    return p;
}

std::vector<int> invert_perm(const std::vector<int>& p) {
    std::vector<int> inv(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        inv[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
    return inv;
}

// Fisher-Yates, top down; part of the seeded-reproducibility contract.
std::vector<int> random_perm(int k, SplitMix64& rng) {
    std::vector<int> p = identity_perm(k);
    for (int i = k - 1; i >= 1; --i) {
        auto j = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(i) + 1));
        std::swap(p[static_cast<std::size_t>(i)], p[j]);
    }
    return p;
}

void validate_transform(const EquivalenceTransform& g, int n, int d) {
    auto is_perm = [](const std::vector<int>& p, int k) {
        if (static_cast<int>(p.size()) != k)
            return false;
        std::vector<bool> seen(static_cast<std::size_t>(k), false);
        for (int v : p) {
            if (v < 0 || v >= k || seen[static_cast<std::size_t>(v)])
                return false;
            seen[static_cast<std::size_t>(v)] = true;
        }
        return true;
    };
    if (!is_perm(g.axis_perm, d))
        throw ShapeError("transform: axis permutation does not match dimension " +
                         std::to_string(d));
    if (static_cast<int>(g.hyperplane_perms.size()) != d)
        throw ShapeError("transform: expected one hyperplane permutation per axis");
    for (const auto& p : g.hyperplane_perms)
        if (!is_perm(p, n))
            throw ShapeError("transform: hyperplane permutation does not match order " +
                             std::to_string(n));
}

BigInt factorial(int k) {
    BigInt f = 1;
    for (int i = 2; i <= k; ++i)
        f *= i;
    return f;
}

constexpr long kCanonicalGroupGuard = 10'000'000;

void check_group_guard(int n, int d) {
    BigInt size = pow(factorial(n), static_cast<unsigned>(d)) * factorial(d);
    if (size > kCanonicalGroupGuard)
        throw CapacityError("equivalence group has " + size.str() +
                            " elements, above the canonicalization guard of " +
                            std::to_string(kCanonicalGroupGuard));
}

std::vector<std::size_t> strides_of(int n, int d) {
    std::vector<std::size_t> stride(static_cast<std::size_t>(d));
    std::size_t s = 1;
    for (int i = d - 1; i >= 0; --i) {
        stride[static_cast<std::size_t>(i)] = s;
        s *= static_cast<std::size_t>(n);
    }
    return stride;
}

} // namespace

EquivalenceTransform EquivalenceTransform::identity(int n, int d) {
    EquivalenceTransform g;
    g.axis_perm = identity_perm(d);
    g.hyperplane_perms.assign(static_cast<std::size_t>(d), identity_perm(n));
    return g;
}

Index transform_index(const EquivalenceTransform& g, const Index& idx) {
    const int d = static_cast<int>(g.axis_perm.size());
    Index out(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
        int i = g.axis_perm[static_cast<std::size_t>(j)];
        out[static_cast<std::size_t>(i)] =
            g.hyperplane_perms[static_cast<std::size_t>(i)][static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])];
    }
    return out;
}

MultiMatrix apply_transform(const MultiMatrix& a, const EquivalenceTransform& g) {
    const int n = a.order();
    const int d = a.dim();
    validate_transform(g, n, d);

    // Gather form: image[beta] = A[alpha], alpha_j = pi_{sigma(j)}^-1(beta_{sigma(j)}),
    // folded into per-axis offset tables.
    std::vector<std::size_t> stride = strides_of(n, d);
    std::vector<int> inv_axis = invert_perm(g.axis_perm);
    std::vector<std::vector<std::size_t>> contrib(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        std::vector<int> inv_pi = invert_perm(g.hyperplane_perms[static_cast<std::size_t>(i)]);
        auto& row = contrib[static_cast<std::size_t>(i)];
        row.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            row[static_cast<std::size_t>(v)] =
                static_cast<std::size_t>(inv_pi[static_cast<std::size_t>(v)]) *
                stride[static_cast<std::size_t>(inv_axis[static_cast<std::size_t>(i)])];
    }

    std::vector<Rational> out(a.cell_count());
    Index beta(static_cast<std::size_t>(d), 0);
    for (std::size_t flat = 0; flat < out.size(); ++flat) {
        std::size_t src = 0;
        for (int i = 0; i < d; ++i)
            src += contrib[static_cast<std::size_t>(i)]
                          [static_cast<std::size_t>(beta[static_cast<std::size_t>(i)])];
        out[flat] = a.entry(src);
        for (int i = d - 1; i >= 0; --i) { // advance odometer
            if (++beta[static_cast<std::size_t>(i)] < n)
                break;
            beta[static_cast<std::size_t>(i)] = 0;
        }
    }
    return MultiMatrix(n, d, std::move(out));
}

EquivalenceTransform compose(const EquivalenceTransform& g, const EquivalenceTransform& h) {
    const int d = static_cast<int>(g.axis_perm.size());
    const int n = static_cast<int>(g.hyperplane_perms.empty() ? 0 : g.hyperplane_perms[0].size());
    EquivalenceTransform out;
    out.axis_perm.resize(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j)
        out.axis_perm[static_cast<std::size_t>(j)] =
            g.axis_perm[static_cast<std::size_t>(h.axis_perm[static_cast<std::size_t>(j)])];

    std::vector<int> inv_g_axis = invert_perm(g.axis_perm);
    out.hyperplane_perms.resize(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        const auto& pg = g.hyperplane_perms[static_cast<std::size_t>(i)];
        const auto& ph =
            h.hyperplane_perms[static_cast<std::size_t>(inv_g_axis[static_cast<std::size_t>(i)])];
        auto& po = out.hyperplane_perms[static_cast<std::size_t>(i)];
        po.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            po[static_cast<std::size_t>(v)] =
                pg[static_cast<std::size_t>(ph[static_cast<std::size_t>(v)])];
    }
    return out;
}

EquivalenceTransform inverse(const EquivalenceTransform& g) {
    const int d = static_cast<int>(g.axis_perm.size());
    EquivalenceTransform out;
    out.axis_perm = invert_perm(g.axis_perm);
    out.hyperplane_perms.resize(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i)
        out.hyperplane_perms[static_cast<std::size_t>(i)] = invert_perm(
            g.hyperplane_perms[static_cast<std::size_t>(g.axis_perm[static_cast<std::size_t>(i)])]);
    return out;
}

EquivalenceTransform random_transform(int n, int d, SplitMix64& rng) {
    EquivalenceTransform g;
    g.axis_perm = random_perm(d, rng);
    g.hyperplane_perms.reserve(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i)
        g.hyperplane_perms.push_back(random_perm(n, rng));
    return g;
}

MultiMatrix canonical_form(const MultiMatrix& a) {
    const int n = a.order();
    const int d = a.dim();
    if (d == 0)
        return a;
    check_group_guard(n, d);

    // Entry values as small codes ordered by serialized token, so that
    // minimizing code sequences minimizes the serialized entry sequence.
    std::map<std::string, std::uint16_t> token_code;
    for (const Rational& v : a.entries())
        token_code.emplace(to_token(v), 0);
    std::vector<Rational> code_value;
    code_value.reserve(token_code.size());
    for (auto& [token, code] : token_code) {
        code = static_cast<std::uint16_t>(code_value.size());
        code_value.push_back(parse_rational(token));
    }
    std::vector<std::uint16_t> codes(a.cell_count());
    for (std::size_t flat = 0; flat < a.cell_count(); ++flat)
        codes[flat] = token_code.at(to_token(a.entry(flat)));

    // All hyperplane permutations with inverses, lexicographic order.
    std::vector<std::vector<int>> perms;
    {
        std::vector<int> p = identity_perm(n);
        do
            perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
    }
    std::vector<std::vector<int>> inv_perms(perms.size());
    for (std::size_t i = 0; i < perms.size(); ++i)
        inv_perms[i] = invert_perm(perms[i]);

    const std::vector<std::size_t> stride = strides_of(n, d);
    std::vector<std::uint16_t> best = codes; // identity is in the group

    std::vector<int> axis_perm = identity_perm(d);
    std::vector<std::size_t> perm_pick(static_cast<std::size_t>(d), 0);
    std::vector<std::size_t> contrib(static_cast<std::size_t>(d) * static_cast<std::size_t>(n));
    Index beta(static_cast<std::size_t>(d), 0);

    do {
        std::vector<int> inv_axis = invert_perm(axis_perm);
        std::fill(perm_pick.begin(), perm_pick.end(), 0);
        for (;;) {
            for (int i = 0; i < d; ++i) {
                const auto& inv_pi = inv_perms[perm_pick[static_cast<std::size_t>(i)]];
                const std::size_t axis_stride =
                    stride[static_cast<std::size_t>(inv_axis[static_cast<std::size_t>(i)])];
                for (int v = 0; v < n; ++v)
                    contrib[static_cast<std::size_t>(i * n + v)] =
                        static_cast<std::size_t>(inv_pi[static_cast<std::size_t>(v)]) * axis_stride;
            }

            std::fill(beta.begin(), beta.end(), 0);
            int cmp = 0;
            for (std::size_t flat = 0; flat < codes.size(); ++flat) {
                std::size_t src = 0;
                for (int i = 0; i < d; ++i)
                    src += contrib[static_cast<std::size_t>(
                        i * n + beta[static_cast<std::size_t>(i)])];
                std::uint16_t code = codes[src];
                if (cmp == 0) {
                    if (code < best[flat]) {
                        cmp = -1;       // strictly smaller; prefix is equal,
                        best[flat] = code; // so overwrite in place from here
                    } else if (code > best[flat]) {
                        cmp = 1;
                        break;
                    }
                } else {
                    best[flat] = code;
                }
                for (int i = d - 1; i >= 0; --i) {
                    if (++beta[static_cast<std::size_t>(i)] < n)
                        break;
                    beta[static_cast<std::size_t>(i)] = 0;
                }
            }

            int axis = d - 1;
            while (axis >= 0 && ++perm_pick[static_cast<std::size_t>(axis)] == perms.size()) {
                perm_pick[static_cast<std::size_t>(axis)] = 0;
                --axis;
            }
            if (axis < 0)
                break;
        }
    } while (std::next_permutation(axis_perm.begin(), axis_perm.end()));

    std::vector<Rational> out(best.size());
    for (std::size_t flat = 0; flat < best.size(); ++flat)
        out[flat] = code_value[best[flat]];
    return MultiMatrix(n, d, std::move(out));
}

bool are_equivalent(const MultiMatrix& a, const MultiMatrix& b) {
    if (a.order() != b.order() || a.dim() != b.dim())
        throw ShapeError("equivalence test requires equal shapes");
    if (a.cell_count() != b.cell_count())
        return false;

    // Equivalence permutes cells, so the entry multiset is an invariant.
    std::vector<Rational> av = a.entries();
    std::vector<Rational> bv = b.entries();
    std::sort(av.begin(), av.end());
    std::sort(bv.begin(), bv.end());
    if (av != bv)
        return false;

    return canonical_form(a) == canonical_form(b);
}

std::vector<EquivalenceClass> classify(std::span<const MultiMatrix> ms) {
    std::map<std::string, EquivalenceClass> buckets;
    for (std::size_t i = 0; i < ms.size(); ++i) {
        std::string key = serialize_matrix(canonical_form(ms[i]));
        auto [it, inserted] = buckets.try_emplace(key, EquivalenceClass{ms[i], 0, {}});
        it->second.members.push_back(i);
        it->second.size += 1;
        if (!inserted && serialize_matrix(ms[i]) < serialize_matrix(it->second.representative))
            it->second.representative = ms[i];
    }

    std::vector<EquivalenceClass> classes;
    classes.reserve(buckets.size());
    for (auto& [key, cls] : buckets)
        classes.push_back(std::move(cls));
    std::sort(classes.begin(), classes.end(), [](const EquivalenceClass& x, const EquivalenceClass& y) {
        if (x.size != y.size)
            return x.size < y.size;
        return serialize_matrix(x.representative) < serialize_matrix(y.representative);
    });
    return classes;
}

MultiMatrix random_multidim_permutation(int n, int d, std::uint64_t seed) {
    std::vector<Rational> entries(cells_of(n, d));
    Index idx(static_cast<std::size_t>(d), 0);
    for (std::size_t flat = 0; flat < entries.size(); ++flat) {
        int sum = 0;
        for (int c : idx)
            sum += c;
        if (sum % n == 0)
            entries[flat] = 1;
        for (int i = d - 1; i >= 0; --i) {
            if (++idx[static_cast<std::size_t>(i)] < n)
                break;
            idx[static_cast<std::size_t>(i)] = 0;
        }
    }
    MultiMatrix cyclic(n, d, std::move(entries));

    SplitMix64 rng(seed);
    return apply_transform(cyclic, random_transform(n, d, rng));
}

} // namespace polystoch
