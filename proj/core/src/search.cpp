#include "polystoch/search.hpp"
#include "polystoch/catalog.hpp"
#include "polystoch/errors.hpp"
#include "polystoch/linalg.hpp"
#include "polystoch/rng.hpp"
#include "polystoch/serialize.hpp"
#include "polystoch/symmetry.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <thread>

namespace polystoch {

namespace {

constexpr std::uint64_t kEnumerationBudget = 10'000'000;

std::uint64_t binom_u64(std::uint64_t m, std::uint64_t k) {
    if (k > m)
        return 0;
    k = std::min(k, m - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i)
        r = r * (m - k + i) / i; // exact at each step
    return r;
}

// Candidate budget with overflow saturation, for the guard check.
std::uint64_t binom_saturating(std::uint64_t m, std::uint64_t k) {
    if (k > m)
        return 0;
    k = std::min(k, m - k);
    long double estimate = 1.0L;
    for (std::uint64_t i = 1; i <= k; ++i) {
        estimate = estimate * static_cast<long double>(m - k + i) / static_cast<long double>(i);
        if (estimate > 1e18L)
            return UINT64_MAX;
    }
    return binom_u64(m, k);
}

// rank -> k-combination of [0, cells) in lexicographic order.
std::vector<int> unrank_combination(std::uint64_t rank, int cells, int k) {
    std::vector<int> comb(static_cast<std::size_t>(k));
    int x = 0;
    for (int i = 0; i < k; ++i) {
        for (;;) {
            std::uint64_t below = binom_u64(static_cast<std::uint64_t>(cells - 1 - x),
                                            static_cast<std::uint64_t>(k - 1 - i));
            if (below > rank)
                break;
            rank -= below;
            ++x;
        }
        comb[static_cast<std::size_t>(i)] = x++;
    }
    return comb;
}

bool next_combination(std::vector<int>& comb, int cells) {
    const int k = static_cast<int>(comb.size());
    int i = k - 1;
    while (i >= 0 && comb[static_cast<std::size_t>(i)] == cells - k + i)
        --i;
    if (i < 0)
        return false;
    int v = ++comb[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
        comb[static_cast<std::size_t>(j)] = ++v;
    return true;
}

// Exact solver for one zero-set candidate: Bareiss-reduce [L_S | 1] and
// back-substitute. Returns the entry vector when the restricted system has
// a unique nonnegative solution. Templated so small shapes run on int64
// (0/1 minors stay far below the overflow line) and large ones on BigInt.
template <typename Int>
class CandidateSolver {
public:
    CandidateSolver(const LineSystem& sys) : sys_(sys), rows_(sys.rows) {}

    std::optional<std::vector<Rational>> solve(const std::vector<int>& basis_cols) {
        const std::size_t r = basis_cols.size();
        const std::size_t width = r + 1;
        work_.assign(rows_ * width, Int(0));
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < r; ++j)
                work_[i * width + j] =
                    Int(sys_.bit(i, static_cast<std::size_t>(basis_cols[j])) ? 1 : 0);
            work_[i * width + r] = Int(1);
        }

        // Fraction-free echelon; every data column must pivot and the
        // augmented column must not.
        Int prev(1);
        std::size_t row = 0;
        for (std::size_t col = 0; col < r; ++col) {
            std::size_t pr = row;
            while (pr < rows_ && work_[pr * width + col] == 0)
                ++pr;
            if (pr == rows_)
                return std::nullopt; // dependent columns
            if (pr != row)
                for (std::size_t j = col; j < width; ++j)
                    std::swap(work_[row * width + j], work_[pr * width + j]);
            const Int pivot = work_[row * width + col];
            for (std::size_t i = row + 1; i < rows_; ++i) {
                const Int head = work_[i * width + col];
                for (std::size_t j = col + 1; j < width; ++j)
                    work_[i * width + j] =
                        (pivot * work_[i * width + j] - head * work_[row * width + j]) / prev;
                work_[i * width + col] = Int(0);
            }
            prev = pivot;
            ++row;
        }
        for (std::size_t i = row; i < rows_; ++i)
            if (work_[i * width + r] != 0)
                return std::nullopt; // inconsistent

        // Back-substitution; reject on the first negative value.
        std::vector<Rational> x(r);
        for (std::size_t i = r; i-- > 0;) {
            Rational acc = make_rational(work_[i * width + r]);
            for (std::size_t j = i + 1; j < r; ++j)
                if (work_[i * width + j] != 0 && x[j] != 0)
                    acc -= make_rational(work_[i * width + j]) * x[j];
            x[i] = acc / make_rational(work_[i * width + i]);
            if (x[i] < 0)
                return std::nullopt;
        }

        std::vector<Rational> entries(sys_.cols);
        for (std::size_t j = 0; j < r; ++j)
            entries[static_cast<std::size_t>(basis_cols[j])] = x[j];
        return entries;
    }

private:
    static Rational make_rational(const Int& v) { return Rational(v); }

    const LineSystem& sys_;
    std::size_t rows_;
    std::vector<Int> work_;
};

struct LineMasks {
    std::size_t words = 0;
    std::vector<std::uint64_t> masks; // one block of `words` per line

    static LineMasks build(const LineSystem& sys) {
        LineMasks lm;
        lm.words = (sys.cols + 63) / 64;
        lm.masks.assign(sys.rows * lm.words, 0);
        for (std::size_t r = 0; r < sys.rows; ++r)
            for (std::size_t c = 0; c < sys.cols; ++c)
                if (sys.bit(r, c))
                    lm.masks[r * lm.words + c / 64] |= std::uint64_t(1) << (c % 64);
        return lm;
    }

    bool line_inside(const std::vector<std::uint64_t>& zero_mask, std::size_t line) const {
        const std::uint64_t* m = &masks[line * words];
        for (std::size_t w = 0; w < words; ++w)
            if ((zero_mask[w] & m[w]) != m[w])
                return false;
        return true;
    }
};

template <typename Int>
void enumerate_range(const LineSystem& sys, const LineMasks& lm, std::uint64_t lo,
                     std::uint64_t hi, int zero_size, std::vector<std::string>& out) {
    const int cells = static_cast<int>(sys.cols);
    const std::size_t r = sys.design_rank();
    CandidateSolver<Int> solver(sys);

    std::vector<int> zero_set;
    if (zero_size > 0)
        zero_set = unrank_combination(lo, cells, zero_size);
    std::vector<std::uint64_t> zero_mask(lm.words);
    std::vector<int> basis_cols(r);
    std::vector<std::uint8_t> in_zero(static_cast<std::size_t>(cells));

    for (std::uint64_t rank = lo; rank < hi; ++rank) {
        std::fill(zero_mask.begin(), zero_mask.end(), 0);
        std::fill(in_zero.begin(), in_zero.end(), 0);
        for (int c : zero_set) {
            zero_mask[static_cast<std::size_t>(c) / 64] |= std::uint64_t(1) << (c % 64);
            in_zero[static_cast<std::size_t>(c)] = 1;
        }

        bool pruned = false;
        for (std::size_t line = 0; line < sys.rows && !pruned; ++line)
            pruned = lm.line_inside(zero_mask, line); // a fully zero line can never sum to 1
        if (!pruned) {
            std::size_t k = 0;
            for (int c = 0; c < cells; ++c)
                if (!in_zero[static_cast<std::size_t>(c)])
                    basis_cols[k++] = c;
            if (auto entries = solver.solve(basis_cols)) {
                MultiMatrix m(sys.n, sys.d, std::move(*entries));
                out.push_back(serialize_matrix(m));
            }
        }
        if (zero_size > 0 && !next_combination(zero_set, cells))
            break;
    }
}

} // namespace

LineSystem LineSystem::build(int n, int d) {
    if (n < 1 || d < 1)
        throw ShapeError("line system requires n >= 1 and d >= 1");
    LineSystem sys;
    sys.n = n;
    sys.d = d;
    sys.cols = cells_of(n, d);
    std::vector<Line> lines = line_ids(n, d);
    sys.rows = lines.size();
    sys.bits.assign(sys.rows * sys.cols, 0);
    for (std::size_t r = 0; r < lines.size(); ++r)
        for (std::size_t cell : line_cells(lines[r], n, d))
            sys.bits[r * sys.cols + cell] = 1;
    return sys;
}

std::size_t LineSystem::design_rank() const {
    return cells_of(n, d) - (n == 1 ? 0 : cells_of(n - 1, d));
}

std::vector<MultiMatrix> enumerate_vertices(int n, int d, int threads) {
    LineSystem sys = LineSystem::build(n, d);
    const int cells = static_cast<int>(sys.cols);
    const int zero_size = cells - static_cast<int>(sys.design_rank());

    std::uint64_t total = binom_saturating(static_cast<std::uint64_t>(cells),
                                           static_cast<std::uint64_t>(zero_size));
    if (total > kEnumerationBudget)
        throw CapacityError("enumeration would scan " +
                            (total == UINT64_MAX ? std::string(">10^18")
                                                 : std::to_string(total)) +
                            " zero-sets, above the budget of " +
                            std::to_string(kEnumerationBudget));

    LineMasks lm = LineMasks::build(sys);

    // int64 is exact while Bareiss intermediates (squares of 0/1 minors of
    // the augmented system) stay below 2^63; that holds up to width 22.
    const bool use_int64 = sys.design_rank() + 1 <= 22;

    if (threads < 1)
        threads = 1;
    std::uint64_t nthreads = std::min<std::uint64_t>(static_cast<std::uint64_t>(threads), total);
    if (nthreads == 0)
        nthreads = 1;

    std::vector<std::vector<std::string>> results(nthreads);
    auto run_chunk = [&](std::size_t t, std::uint64_t lo, std::uint64_t hi) {
        if (use_int64)
            enumerate_range<std::int64_t>(sys, lm, lo, hi, zero_size, results[t]);
        else
            enumerate_range<BigInt>(sys, lm, lo, hi, zero_size, results[t]);
    };

    if (nthreads == 1) {
        run_chunk(0, 0, total);
    } else {
        std::vector<std::thread> pool;
        std::uint64_t chunk = total / nthreads;
        for (std::uint64_t t = 0; t < nthreads; ++t) {
            std::uint64_t lo = t * chunk;
            std::uint64_t hi = (t + 1 == nthreads) ? total : lo + chunk;
            pool.emplace_back(run_chunk, static_cast<std::size_t>(t), lo, hi);
        }
        for (auto& th : pool)
            th.join();
    }

    // Degenerate vertices are found once per extending basis; the merge
    // deduplicates, and the set order makes the output independent of the
    // thread count.
    std::set<std::string> unique;
    for (auto& chunk : results)
        for (auto& s : chunk)
            unique.insert(std::move(s));

    std::vector<MultiMatrix> vertices;
    vertices.reserve(unique.size());
    for (const std::string& s : unique)
        vertices.push_back(parse_matrix(s));
    return vertices;
}

BasicSolution simplex_solve(const LineSystem& sys, std::span<const Rational> objective) {
    if (objective.size() != sys.cols)
        throw ShapeError("objective length " + std::to_string(objective.size()) +
                         " does not match cell count " + std::to_string(sys.cols));

    // Keep one row per independent line; the system is consistent, so the
    // dropped rows are implied.
    RationalMatrix full(sys.rows, sys.cols);
    for (std::size_t r = 0; r < sys.rows; ++r)
        for (std::size_t c = 0; c < sys.cols; ++c)
            if (sys.bit(r, c))
                full.at(r, c) = 1;
    std::vector<std::size_t> kept = independent_rows(full);

    const std::size_t m = kept.size();
    const std::size_t n_struct = sys.cols;
    const std::size_t n_all = n_struct + m; // structurals then artificials
    const std::size_t width = n_all + 1;    // plus RHS

    std::vector<Rational> tab(m * width);
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t c = 0; c < n_struct; ++c)
            if (sys.bit(kept[i], c))
                tab[i * width + c] = 1;
        tab[i * width + n_struct + i] = 1;
        tab[i * width + n_all] = 1;
        basis[i] = n_struct + i;
    }

    std::vector<Rational> cost(width); // reduced-cost row, same layout
    auto rebuild_cost = [&](auto&& var_cost) {
        std::fill(cost.begin(), cost.end(), Rational(0));
        for (std::size_t j = 0; j < n_all; ++j)
            cost[j] = var_cost(j);
        for (std::size_t i = 0; i < m; ++i) {
            Rational cb = var_cost(basis[i]);
            if (cb == 0)
                continue;
            for (std::size_t j = 0; j < width; ++j)
                if (tab[i * width + j] != 0)
                    cost[j] -= cb * tab[i * width + j];
        }
    };

    auto pivot = [&](std::size_t row, std::size_t col) {
        const Rational p = tab[row * width + col];
        for (std::size_t j = 0; j < width; ++j)
            tab[row * width + j] /= p;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row)
                continue;
            const Rational f = tab[i * width + col];
            if (f == 0)
                continue;
            for (std::size_t j = 0; j < width; ++j)
                if (tab[row * width + j] != 0)
                    tab[i * width + j] -= f * tab[row * width + j];
        }
        const Rational f = cost[col];
        if (f != 0)
            for (std::size_t j = 0; j < width; ++j)
                if (tab[row * width + j] != 0)
                    cost[j] -= f * tab[row * width + j];
        basis[row] = col;
    };

    // Bland's rule: entering = lowest-index improving column, leaving =
    // lowest basic index among the minimum ratios. Guarantees termination.
    auto bland_loop = [&](std::size_t active_cols) {
        for (;;) {
            std::size_t enter = active_cols;
            for (std::size_t j = 0; j < active_cols; ++j)
                if (cost[j] > 0) {
                    enter = j;
                    break;
                }
            if (enter == active_cols)
                return;
            std::size_t leave = m;
            Rational best_ratio;
            for (std::size_t i = 0; i < m; ++i) {
                const Rational& coef = tab[i * width + enter];
                if (coef <= 0)
                    continue;
                Rational ratio = tab[i * width + n_all] / coef;
                if (leave == m || ratio < best_ratio ||
                    (ratio == best_ratio && basis[i] < basis[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == m)
                throw Error("simplex: unbounded direction in a bounded polytope");
            pivot(leave, enter);
        }
    };

    // Phase 1: drive the artificials to zero.
    rebuild_cost([&](std::size_t j) { return j >= n_struct ? Rational(-1) : Rational(0); });
    bland_loop(n_all);
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < n_struct)
            continue;
        if (tab[i * width + n_all] != 0)
            throw Error("simplex: line system unexpectedly infeasible");
        for (std::size_t j = 0; j < n_struct; ++j)
            if (tab[i * width + j] != 0) { // always exists: kept rows are independent
                pivot(i, j);
                break;
            }
    }

    // Phase 2 on the structural columns only.
    rebuild_cost([&](std::size_t j) { return j < n_struct ? objective[j] : Rational(0); });
    bland_loop(n_struct);

    BasicSolution sol;
    sol.values.assign(n_struct, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
        sol.basis.push_back(basis[i]);
        sol.values[basis[i]] = tab[i * width + n_all];
    }
    std::sort(sol.basis.begin(), sol.basis.end());
    return sol;
}

MultiMatrix sample_vertex(int n, int d, std::uint64_t seed) {
    LineSystem sys = LineSystem::build(n, d);
    SplitMix64 rng(seed);
    std::vector<Rational> objective(sys.cols);
    for (std::size_t j = 0; j < sys.cols; ++j)
        objective[j] = Rational(rng.range(-1000, 1000));
    BasicSolution sol = simplex_solve(sys, objective);
    return MultiMatrix(n, d, std::move(sol.values));
}

SurveyReport sample_survey(int n, int d, std::size_t seed_count, std::uint64_t seed0,
                           int threads) {
    std::vector<MultiMatrix> samples;
    samples.reserve(seed_count);
    if (threads < 1)
        threads = 1;
    if (threads == 1 || seed_count < 2) {
        for (std::size_t k = 0; k < seed_count; ++k)
            samples.push_back(sample_vertex(n, d, seed0 + k));
    } else {
        std::vector<std::optional<MultiMatrix>> slots(seed_count);
        std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(threads), seed_count);
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < nthreads; ++t)
            pool.emplace_back([&, t] {
                for (std::size_t k = t; k < seed_count; k += nthreads)
                    slots[k] = sample_vertex(n, d, seed0 + k);
            });
        for (auto& th : pool)
            th.join();
        for (auto& s : slots)
            samples.push_back(std::move(*s));
    }

    SurveyReport report;
    report.n = n;
    report.d = d;

    std::vector<std::pair<std::string, std::string>> catalog_keys; // name, canonical
    for (const std::string& name : catalog_names()) {
        MultiMatrix m = catalog(name);
        if (m.order() == n && m.dim() == d)
            catalog_keys.emplace_back(name, serialize_matrix(canonical_form(m)));
    }

    for (const EquivalenceClass& cls : classify(samples)) {
        SurveyClass sc{cls.representative, support_size(cls.representative), cls.size,
                       std::nullopt};
        std::string key = serialize_matrix(canonical_form(cls.representative));
        for (const auto& [name, canon] : catalog_keys)
            if (canon == key) {
                sc.matches_catalog = name;
                break;
            }
        report.classes.push_back(std::move(sc));
    }
    return report;
}

std::string serialize_survey(const SurveyReport& report) {
    std::string out = "{\"classes\":[";
    bool first = true;
    for (const SurveyClass& cls : report.classes) {
        if (!first)
            out += ',';
        first = false;
        out += "{\"representative\":" + serialize_matrix(cls.representative);
        out += ",\"support_size\":" + std::to_string(cls.support_size);
        out += ",\"count\":" + std::to_string(cls.count);
        out += ",\"matches_catalog\":";
        out += cls.matches_catalog ? "\"" + *cls.matches_catalog + "\"" : std::string("null");
        out += '}';
    }
    out += "]}";
    return out;
}

} // namespace polystoch
