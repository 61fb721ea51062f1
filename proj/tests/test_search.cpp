#include "polystoch/catalog.hpp"
#include "polystoch/errors.hpp"
#include "polystoch/search.hpp"
#include "polystoch/serialize.hpp"
#include "polystoch/symmetry.hpp"
#include "polystoch/vertex_test.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <set>

using namespace polystoch;

TEST_CASE("line system matches its designed rank") {
    for (auto [n, d] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
        LineSystem sys = LineSystem::build(n, d);
        RationalMatrix m(sys.rows, sys.cols);
        for (std::size_t r = 0; r < sys.rows; ++r)
            for (std::size_t c = 0; c < sys.cols; ++c)
                if (sys.bit(r, c))
                    m.at(r, c) = 1;
        CHECK(rank_exact(m) == sys.design_rank());
    }
}

TEST_CASE("tiny polytopes enumerate to exactly the 0/1 permutation sets") {
    for (auto [n, d] : {std::pair{2, 2}, {2, 3}, {3, 2}}) {
        std::vector<MultiMatrix> vertices = enumerate_vertices(n, d);
        auto brute = testutil::brute_force_01_polystochastic(n, d);
        CHECK(testutil::serialized_set(vertices) == testutil::serialized_set(brute));
        for (const MultiMatrix& v : vertices) {
            CHECK(is_vertex(v));
            CHECK(check_support_bound(v));
        }
    }
    CHECK(enumerate_vertices(2, 2).size() == 2);
    CHECK(enumerate_vertices(3, 2).size() == 6);
}

TEST_CASE("enumeration budget guard") {
    CHECK_THROWS_AS(enumerate_vertices(3, 4), CapacityError);
}

TEST_CASE("enumeration is independent of the thread count") {
    std::vector<MultiMatrix> one = enumerate_vertices(3, 2, 1);
    std::vector<MultiMatrix> three = enumerate_vertices(3, 2, 3);
    REQUIRE(one.size() == three.size());
    for (std::size_t i = 0; i < one.size(); ++i)
        CHECK(one[i] == three[i]);
}

TEST_CASE("simplex finds vertices") {
    LineSystem sys = LineSystem::build(3, 2);

    // zero objective: any basic feasible solution, still a vertex
    BasicSolution sol = simplex_solve(sys, std::vector<Rational>(sys.cols));
    MultiMatrix m(3, 2, sol.values);
    CHECK(is_polystochastic(m));
    CHECK(is_vertex(m));

    // maximizing one cell reaches 1 at a permutation matrix
    std::vector<Rational> indicator(sys.cols);
    indicator[0] = 1;
    BasicSolution opt = simplex_solve(sys, indicator);
    CHECK(opt.values[0] == 1);

    CHECK_THROWS_AS(simplex_solve(sys, std::vector<Rational>(5)), ShapeError);
}

TEST_CASE("simplex optima lie in the enumerated vertex set and dominate it") {
    LineSystem sys = LineSystem::build(3, 2);
    auto vertex_set = testutil::serialized_set(enumerate_vertices(3, 2));
    SplitMix64 rng(1234);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Rational> objective(sys.cols);
        for (Rational& c : objective)
            c = Rational(rng.range(-50, 50));
        BasicSolution sol = simplex_solve(sys, objective);
        MultiMatrix m(3, 2, sol.values);
        CHECK(vertex_set.count(serialize_matrix(m)) == 1);

        Rational value;
        for (std::size_t j = 0; j < sys.cols; ++j)
            value += objective[j] * sol.values[j];
        for (const std::string& doc : vertex_set) {
            MultiMatrix v = parse_matrix(doc);
            Rational at_vertex;
            for (std::size_t j = 0; j < sys.cols; ++j)
                at_vertex += objective[j] * v.entry(j);
            CHECK(value >= at_vertex);
        }
    }
}

TEST_CASE("sampled vertices are vertices and deterministic per seed") {
    for (std::uint64_t seed : {1ULL, 7ULL, 42ULL}) {
        MultiMatrix a = sample_vertex(3, 3, seed);
        CHECK(is_vertex(a));
        CHECK(check_support_bound(a));
        CHECK(a == sample_vertex(3, 3, seed));
    }

    // order 2: every vertex is a permutation, so samples are 0/1
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        MultiMatrix a = sample_vertex(2, 3, seed);
        for (const Rational& v : a.entries())
            CHECK((v == 0 || v == 1));
    }
}

TEST_CASE("order-3 cube samples land in the two known classes") {
    MultiMatrix m_class = canonical_form(catalog("M3_3"));
    MultiMatrix v_class = canonical_form(catalog("V3_3"));
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        MultiMatrix canon = canonical_form(sample_vertex(3, 3, seed));
        CHECK((canon == m_class || canon == v_class));
    }
}

TEST_CASE("survey reports catalog matches") {
    SurveyReport report = sample_survey(3, 3, 12, 1);
    CHECK(report.classes.size() <= 2);
    std::size_t total = 0;
    for (const SurveyClass& cls : report.classes) {
        total += cls.count;
        REQUIRE(cls.matches_catalog.has_value());
        CHECK((*cls.matches_catalog == "M3_3" || *cls.matches_catalog == "V3_3"));
        CHECK(support_size(cls.representative) == cls.support_size);
    }
    CHECK(total == 12);

    // thread count changes nothing
    SurveyReport threaded = sample_survey(3, 3, 12, 1, 4);
    CHECK(serialize_survey(threaded) == serialize_survey(report));

    SurveyReport empty = sample_survey(3, 3, 0, 1);
    CHECK(empty.classes.empty());
    CHECK(serialize_survey(empty) == R"({"classes":[]})");
}
