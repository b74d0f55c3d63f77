#include "nb/arrangement.hpp"

#include "nb/errors.hpp"
#include "support/triangle_oracle.hpp"

#include "doctest.h"

#include <random>

using namespace nb;

namespace {

std::vector<Line> three_generic() {
    return {make_line(Rat(0), Rat(1), Rat(0)), make_line(Rat(1), Rat(0), Rat(0)),
            make_line(Rat(1), Rat(1), Rat(2))};
}

std::vector<Line> random_simple_lines(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> coeff(-12, 12);
    while (true) {
        std::vector<Line> lines;
        while (static_cast<int>(lines.size()) < n) {
            Rat a(coeff(rng)), b(coeff(rng)), c(coeff(rng));
            if (a == 0 && b == 0)
                continue;
            lines.push_back(make_line(a, b, c));
        }
        if (verify_simple(lines).ok)
            return lines;
    }
}

} // namespace

TEST_CASE("verify_simple flags duplicates, parallels, concurrencies") {
    auto base = three_generic();

    SUBCASE("generic triple is simple") {
        auto rep = verify_simple(base);
        CHECK(rep.ok);
    }
    SUBCASE("duplicate line (different scaling)") {
        auto lines = base;
        lines.push_back(make_line(Rat(2), Rat(2), Rat(4)));
        auto rep = verify_simple(lines);
        CHECK_FALSE(rep.ok);
        REQUIRE(rep.duplicate_pairs.size() == 1);
        CHECK(rep.duplicate_pairs[0] == std::pair<int, int>{2, 3});
    }
    SUBCASE("parallel pair") {
        auto lines = base;
        lines.push_back(make_line(Rat(1), Rat(1), Rat(5)));
        auto rep = verify_simple(lines);
        CHECK_FALSE(rep.ok);
        REQUIRE(rep.parallel_pairs.size() == 1);
        CHECK(rep.parallel_pairs[0] == std::pair<int, int>{2, 3});
    }
    SUBCASE("three concurrent lines") {
        auto lines = base;
        lines.push_back(make_line(Rat(1), Rat(-1), Rat(0))); // also through the origin
        auto rep = verify_simple(lines);
        CHECK_FALSE(rep.ok);
        REQUIRE(rep.concurrencies.size() == 1);
        CHECK(rep.concurrencies[0].at == Point{Rat(0), Rat(0)});
        CHECK(rep.concurrencies[0].lines == std::vector<int>{0, 1, 3});
    }
    SUBCASE("single line is out of range") {
        CHECK_THROWS_AS(verify_simple({base[0]}), ParameterRange);
    }
}

TEST_CASE("two crossing lines: framed DCEL shape") {
    std::vector<Line> lines = {make_line(Rat(1), Rat(0), Rat(0)),
                               make_line(Rat(0), Rat(1), Rat(0))};
    auto arr = build_arrangement(lines);
    CHECK(arr.crossing_count() == 1);
    CHECK(arr.vertices.size() == 9);   // crossing + 4 clips + 4 corners
    CHECK(arr.half.size() / 2 == 12);  // 4 line segments + 8 frame segments
    CHECK(arr.faces.size() == 5);      // 4 wedges + outer
    CHECK(bounded_triangle_count(arr) == 0);

    auto census = projective_census(arr);
    CHECK(census.faces == 2);
    CHECK(census.triangles == 0);
}

TEST_CASE("three generic lines: one bounded, four projective triangles") {
    auto arr = build_arrangement(three_generic());
    CHECK(bounded_triangle_count(arr) == 1);

    auto census = projective_census(arr);
    CHECK(census.faces == 4);
    CHECK(census.triangles == 4);
    // every projective triangle here uses all three lines
    CHECK(census.per_line_triangles == std::vector<long long>{4, 4, 4});

    auto oracle = nbtest::triangle_oracle(three_generic());
    CHECK(oracle.bounded == 1);
    CHECK(oracle.projective == 4);
    CHECK(oracle.per_line == census.per_line_triangles);
}

TEST_CASE("build_arrangement rejects non-simple input") {
    auto lines = three_generic();
    lines.push_back(make_line(Rat(1), Rat(1), Rat(7)));
    CHECK_THROWS_AS(build_arrangement(lines), NotSimple);
}

TEST_CASE("random simple arrangements agree with the independent oracle") {
    std::mt19937_64 rng(2026);
    for (int n : {4, 5, 6}) {
        for (int rep = 0; rep < 4; ++rep) {
            auto lines = random_simple_lines(rng, n);
            CAPTURE(n);
            auto arr = build_arrangement(lines);
            auto census = projective_census(arr);
            auto oracle = nbtest::triangle_oracle(lines);
            CHECK(bounded_triangle_count(arr) == oracle.bounded);
            CHECK(census.triangles == oracle.projective);
            CHECK(census.per_line_triangles == oracle.per_line);
            CHECK(census.faces == static_cast<long long>(n) * (n - 1) / 2 + 1);
        }
    }
}

TEST_CASE("triangle-rich generator bounds and frozen counts") {
    // projective triangle counts of the deltoid-tangent family
    const std::vector<std::pair<int, long long>> expected = {
        {5, 5}, {6, 6}, {7, 11}, {8, 16}};
    for (auto [n, count] : expected) {
        auto lines = furedi_palasti_lines(n);
        REQUIRE(static_cast<int>(lines.size()) == n);
        REQUIRE(verify_simple(lines).ok);
        auto arr = build_arrangement(lines);
        auto census = projective_census(arr);
        CAPTURE(n);
        CHECK(census.triangles == count);
        CHECK(Int(census.triangles) >= triangle_rich_lower_bound(n));
        CHECK(Int(census.triangles) <= triangle_count_cap(n));

        auto oracle = nbtest::triangle_oracle(lines);
        CHECK(oracle.projective == census.triangles);
        CHECK(oracle.per_line == census.per_line_triangles);
    }
    CHECK_THROWS_AS(furedi_palasti_lines(4), ParameterRange);
}

TEST_CASE("generator bound helpers") {
    CHECK(triangle_rich_lower_bound(5) == 4);
    CHECK(triangle_rich_lower_bound(6) == 6);
    CHECK(triangle_rich_lower_bound(7) == 10);
    CHECK(triangle_count_cap(4) == 4);
    CHECK(triangle_count_cap(9) == 24);
    CHECK_THROWS_AS(triangle_count_cap(3), ParameterRange);
}

TEST_CASE("infinity-line selection and the remainder triangle identity") {
    for (int n : {5, 6, 7}) {
        auto lines = furedi_palasti_lines(n);
        auto arr = build_arrangement(lines);
        auto census = projective_census(arr);

        Line ell = select_infinity_line(arr);
        long long inc = -1;
        for (size_t i = 0; i < lines.size(); ++i)
            if (lines[i] == ell)
                inc = census.per_line_triangles[i];
        REQUIRE(inc >= 0);
        // the average incidence is 3T/n <= n-1, so the minimum is too
        CHECK(inc <= n - 1);

        auto remainder = map_line_to_infinity(lines, ell);
        REQUIRE(static_cast<int>(remainder.size()) == n - 1);
        REQUIRE(verify_simple(remainder).ok);
        auto rem_arr = build_arrangement(remainder);
        // bounded triangles after the swap = projective triangles avoiding ell
        CHECK(bounded_triangle_count(rem_arr) == census.triangles - inc);
        CHECK(nbtest::triangle_oracle(remainder).bounded == census.triangles - inc);
    }
}
