#include "nb/cell_complex.hpp"
#include "nb/errors.hpp"

#include "doctest.h"
#include "json.hpp"

#include <algorithm>

using namespace nb;

namespace {

std::vector<Line> three_generic() {
    // chosen so no line meets the auto-chosen frame at a corner
    return {make_line(Rat(0), Rat(1), Rat(0)), make_line(Rat(1), Rat(0), Rat(0)),
            make_line(Rat(1), Rat(2), Rat(2))};
}

CellComplex fp6_remainder_complex() {
    const auto lines = furedi_palasti_lines(6);
    const auto arr = build_arrangement(lines);
    const auto ell = select_infinity_line(arr);
    const auto remainder = map_line_to_infinity(lines, ell);
    return stellar_subdivide(build_arrangement(remainder));
}

} // namespace

TEST_CASE("complex of a framed 3-line arrangement") {
    const auto arr = build_arrangement(three_generic());
    const auto cx = complex_from_arrangement(arr);
    cx.validate();

    // 3 crossings + 6 clip points + 4 corners; per line 3 segments, frame
    // split into 10 arcs; every face except the outer one
    CHECK(cx.count_dim(0) == 13);
    CHECK(cx.count_dim(1) == 19);
    CHECK(cx.count_dim(2) == 7);
    CHECK(cx.euler() == 1); // a disk

    // crossings carry two lines each, clip points one
    int two_lines = 0, one_line = 0;
    for (const auto& cell : cx.cells)
        if (cell.dim == 0) {
            if (cell.lines.size() == 2)
                ++two_lines;
            if (cell.lines.size() == 1)
                ++one_line;
        }
    CHECK(two_lines == 3);
    CHECK(one_line == 6);
}

TEST_CASE("closure and component helpers") {
    const auto arr = build_arrangement(three_generic());
    const auto cx = complex_from_arrangement(arr);

    // closure of a face is closed and contains the face
    int face_id = -1;
    for (int id = 0; id < cx.size(); ++id)
        if (cx.cells[id].dim == 2)
            face_id = id;
    REQUIRE(face_id >= 0);
    const auto closed = cx.closure({face_id});
    CHECK(cx.is_closed_set(closed));
    CHECK(std::binary_search(closed.begin(), closed.end(), face_id));
    CHECK(cx.component_count(closed) == 1);

    // two far-apart vertices: two components
    std::vector<int> pair = {0, 1};
    CHECK(cx.component_count(pair) == 2);
    const auto labels = cx.component_labels(pair);
    CHECK(labels == std::vector<int>{0, 1});
    CHECK(cx.component_count({}) == 0);
    CHECK(cx.is_single_vertex({0}));
    CHECK_FALSE(cx.is_single_vertex(pair));
}

TEST_CASE("complex validation rejects malformed cells") {
    CellComplex cx;
    Cell v0, v1;
    v0.dim = 0;
    v1.dim = 0;
    cx.cells = {v0, v1};

    SUBCASE("edge with repeated endpoint") {
        Cell e;
        e.dim = 1;
        e.boundary = {0, 0};
        cx.cells.push_back(e);
        CHECK_THROWS_AS(cx.validate(), MalformedComplex);
    }
    SUBCASE("vertex with boundary") {
        cx.cells[0].boundary = {1};
        CHECK_THROWS_AS(cx.validate(), MalformedComplex);
    }
    SUBCASE("face cycle too short") {
        Cell e;
        e.dim = 1;
        e.boundary = {0, 1};
        cx.cells.push_back(e);
        Cell f;
        f.dim = 2;
        f.boundary = {2, 2};
        cx.cells.push_back(f);
        CHECK_THROWS_AS(cx.validate(), MalformedComplex);
    }
    SUBCASE("boundary pointing at wrong dimension") {
        Cell e;
        e.dim = 1;
        e.boundary = {0, 1};
        cx.cells.push_back(e);
        Cell f;
        f.dim = 2;
        f.boundary = {0, 1, 2}; // vertices, not edges
        cx.cells.push_back(f);
        CHECK_THROWS_AS(cx.validate(), MalformedComplex);
    }
}

TEST_CASE("stellar subdivision of the 6-line remainder") {
    const auto cx = fp6_remainder_complex();
    cx.validate();
    CHECK(cx.euler() == 1); // subdivision preserves the disk

    // the remainder has 3 triangles: 3 barycenters, 9 spokes, 9 thirds
    int barycenters = 0, thirds = 0, spokes = 0;
    std::vector<int> triangles;
    for (const auto& cell : cx.cells) {
        if (cell.dim == 0 && cell.triangle >= 0) {
            ++barycenters;
            CHECK(cell.pos.has_value());
        }
        if (cell.dim == 1 && cell.triangle >= 0)
            ++spokes;
        if (cell.dim == 2 && cell.triangle >= 0) {
            ++thirds;
            CHECK(cell.base_line >= 0);
            CHECK(cell.boundary.size() == 3);
            triangles.push_back(cell.triangle);
        }
    }
    CHECK(barycenters == 3);
    CHECK(spokes == 9);
    CHECK(thirds == 9);
    std::sort(triangles.begin(), triangles.end());
    CHECK(triangles == std::vector<int>{0, 0, 0, 1, 1, 1, 2, 2, 2});
}

TEST_CASE("line-triangle family over the subdivided remainder") {
    auto shared = std::make_shared<CellComplex>(fp6_remainder_complex());
    const auto family = build_line_triangle_family(shared, 5);
    family.validate();
    CHECK(family.n() == 6);
    CHECK(family.names[0] == "A1");
    CHECK(family.names[5] == "A6");
    for (const auto& set : family.sets) {
        CHECK_FALSE(set.empty());
        CHECK(shared->is_closed_set(set));
    }
    // A1 carries every on-line cell, so it meets every other set
    for (int i = 1; i < family.n(); ++i) {
        std::vector<int> common;
        std::set_intersection(family.sets[0].begin(), family.sets[0].end(),
                              family.sets[i].begin(), family.sets[i].end(),
                              std::back_inserter(common));
        CHECK_FALSE(common.empty());
    }

    CHECK_THROWS_AS(build_line_triangle_family(shared, 6), MalformedComplex);
    CHECK_THROWS_AS(build_line_triangle_family(shared, 0), ParameterRange);
}

TEST_CASE("four-set example structure") {
    const auto family = build_four_set_example();
    family.validate();
    CHECK(family.n() == 4);
    CHECK(family.names == std::vector<std::string>{"A1", "A2", "A3", "A4"});
    CHECK(family.sets[0].size() == 7);
    CHECK(family.sets[1].size() == 7);
    CHECK(family.sets[2].size() == 7);
    CHECK(family.sets[3].size() == 6);
    CHECK(family.complex->euler() == 1);
    // each pair of thirds meets (shared spoke or corner), A4 meets each third
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            std::vector<int> common;
            std::set_intersection(family.sets[i].begin(), family.sets[i].end(),
                                  family.sets[j].begin(), family.sets[j].end(),
                                  std::back_inserter(common));
            CHECK_FALSE(common.empty());
        }
}

TEST_CASE("family JSON round trip") {
    const auto family = build_four_set_example();
    const auto text = family_to_json(family);
    const auto back = family_from_json(text);
    CHECK(back.names == family.names);
    CHECK(back.sets == family.sets);
    CHECK(back.complex->size() == family.complex->size());
    for (int id = 0; id < family.complex->size(); ++id) {
        CHECK(back.complex->cells[id].dim == family.complex->cells[id].dim);
        CHECK(back.complex->cells[id].boundary == family.complex->cells[id].boundary);
    }
    // a second trip is byte-identical (used by the CLI determinism gate)
    CHECK(family_to_json(back) == text);
}

TEST_CASE("family JSON rejects corrupt input") {
    CHECK_THROWS_AS(family_from_json("not json"), ParseError);
    CHECK_THROWS_AS(family_from_json("{}"), ParseError);
    CHECK_THROWS_AS(family_from_json(R"({"schema":"other/1","kind":"family"})"), ParseError);

    // open set: a face without its boundary
    auto text = family_to_json(build_four_set_example());
    auto broken = nlohmann::ordered_json::parse(text);
    broken["sets"][0]["cells"] = {9};
    CHECK_THROWS_AS(family_from_json(broken.dump()), ParseError);
}

TEST_CASE("arrangement without triangles passes subdivision unchanged") {
    // two crossing lines: no bounded triangle anywhere
    const std::vector<Line> two = {make_line(Rat(0), Rat(1), Rat(0)),
                                   make_line(Rat(1), Rat(0), Rat(0))};
    const auto arr = build_arrangement(two);
    const auto plain = complex_from_arrangement(arr);
    const auto subdivided = stellar_subdivide(arr);
    CHECK(plain.size() == subdivided.size());
    CHECK(subdivided.euler() == 1);
}
