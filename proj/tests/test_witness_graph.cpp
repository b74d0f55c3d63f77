#include "nb/witness_graph.hpp"
#include "nb/errors.hpp"

#include "doctest.h"

#include <algorithm>
#include <set>

using namespace nb;

namespace {

RegionFamily point_family(int points, std::vector<std::vector<int>> sets) {
    auto cx = std::make_shared<CellComplex>();
    for (int p = 0; p < points; ++p) {
        Cell c;
        c.dim = 0;
        cx->cells.push_back(std::move(c));
    }
    cx->validate();
    RegionFamily fam;
    fam.complex = cx;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        fam.names.push_back("P" + std::to_string(i));
        std::sort(sets[i].begin(), sets[i].end());
        fam.sets.push_back(sets[i]);
    }
    fam.validate();
    return fam;
}

RegionFamily line_triangle_family_for(int n_generator) {
    const auto lines = furedi_palasti_lines(n_generator);
    const auto arr = build_arrangement(lines);
    const auto remainder = map_line_to_infinity(lines, select_infinity_line(arr));
    auto cx = std::make_shared<CellComplex>(stellar_subdivide(build_arrangement(remainder)));
    return build_line_triangle_family(cx, static_cast<int>(remainder.size()));
}

} // namespace

TEST_CASE("four-set witnesses form K_4 with every proof identity") {
    const auto family = build_four_set_example();
    const auto nerve = compute_nerve(family, 4);
    const auto witnesses = choose_witnesses(family, nerve, 2, 1);
    REQUIRE(witnesses.list.size() == 4);
    for (const auto& w : witnesses.list) {
        CHECK(w.copy == 0);
        CHECK(w.cell >= 0);
        CHECK(family.complex->cells[w.cell].dim == 0); // single-point intersections
    }
    // ordered like the nerve level
    CHECK(witnesses.list[0].sigma == std::vector<int>{0, 1, 2});
    CHECK(witnesses.list[3].sigma == std::vector<int>{1, 2, 3});

    const auto graph = build_union_graph(family, witnesses, nerve, TreeStrategy::Path);
    CHECK(graph.edges.size() == 6); // K_4
    CHECK(graph.gamma.size() == 6);
    std::set<std::pair<int, int>> pairs;
    for (const auto& e : graph.edges) {
        CHECK(e.u < e.v);
        CHECK(e.tau.size() == 2);
        pairs.insert({e.u, e.v});
    }
    CHECK(pairs.size() == 6);

    const auto identity = edge_count_identity(graph, nerve);
    CHECK(identity.edges == 6);
    CHECK(identity.witnesses == 4);
    CHECK(identity.f_ind == 6);
    CHECK(identity.expected == 6); // 3*4 - 6
    CHECK(identity.exact);
    CHECK(identity.holds);
    CHECK(identity.tree_membership_ok);

    const auto labels = triangle_label_analysis(graph);
    CHECK(labels.triangle_count == 4);
    CHECK(labels.labels_ok);
    CHECK(labels.pass);
    REQUIRE(labels.classes.size() == 1); // all four triangles share one label
    CHECK(labels.classes[0].label == std::vector<int>{0, 1, 2, 3});
    CHECK(labels.classes[0].vertices == 4); // = k+2
    CHECK(labels.classes[0].edges == 6);    // = 3k
    CHECK(labels.classes[0].triangles == 4);

    const auto multi = multiedge_analysis(graph);
    CHECK(multi.max_multiplicity == 1);
    CHECK(multi.skeleton_planar);
    CHECK(multi.skeleton_bound_ok);
    CHECK(multi.full_cap == 12);
    CHECK(multi.full_cap_ok);

    const auto search = search_planar_tree_choice(family, witnesses, nerve, 1000);
    CHECK(search.found);
    CHECK(search.combinations == 1); // every group has two witnesses
    CHECK(search.tested == 1);
    CHECK(search.graph.edges.size() == 6);
}

TEST_CASE("line-triangle family: identities under both tree strategies") {
    const auto family = line_triangle_family_for(6);
    const auto nerve = compute_nerve(family, 4);
    const auto witnesses = choose_witnesses(family, nerve, 2, 1);
    CHECK(static_cast<long long>(witnesses.list.size()) == nerve.f(2));

    for (auto strategy : {TreeStrategy::Path, TreeStrategy::Star}) {
        const auto graph = build_union_graph(family, witnesses, nerve, strategy);
        const auto identity = edge_count_identity(graph, nerve);
        CHECK(identity.exact);
        CHECK(identity.tree_membership_ok);

        const auto labels = triangle_label_analysis(graph);
        CHECK(labels.labels_ok);
        CHECK(labels.shared_edges_ok);
        CHECK(labels.subgraphs_ok);
        CHECK(labels.edge_disjoint_ok);

        const auto multi = multiedge_analysis(graph);
        CHECK(multi.max_multiplicity == 1); // b = 1 graphs are simple
        CHECK(multi.full_cap_ok);
    }
}

TEST_CASE("b = 2 split components: exact lower bound with no edges") {
    // six sets over two isolated points: one 6-face, two components
    const auto fam = point_family(2, std::vector<std::vector<int>>(6, {0, 1}));
    const auto nerve = compute_nerve(fam, 7);
    CHECK(nerve.f(5) == 1);
    CHECK(check_intersection_hypotheses(fam, 5, 2).pass);

    const auto witnesses = choose_witnesses(fam, nerve, 5, 2);
    REQUIRE(witnesses.list.size() == 2);
    CHECK(witnesses.list[0].copy == 0);
    CHECK(witnesses.list[0].cell == 0); // component order by smallest cell
    CHECK(witnesses.list[1].copy == 1);
    CHECK(witnesses.list[1].cell == 1);

    const auto graph = build_union_graph(fam, witnesses, nerve, TreeStrategy::Path);
    CHECK(graph.edges.empty()); // each component group is a single witness
    const auto identity = edge_count_identity(graph, nerve);
    CHECK(identity.expected == 0); // 6*2 - 2*6
    CHECK(identity.exact);
    CHECK(identity.holds);
    CHECK(identity.tree_membership_ok);

    CHECK_THROWS_AS(triangle_label_analysis(graph), ParameterRange);
}

TEST_CASE("b = 2 surplus copies bundle into parallel edges") {
    // six sets sharing a single point: one component, two copies each
    const auto fam = point_family(1, std::vector<std::vector<int>>(6, {0}));
    const auto nerve = compute_nerve(fam, 7);
    const auto witnesses = choose_witnesses(fam, nerve, 5, 2);
    REQUIRE(witnesses.list.size() == 2);
    CHECK(witnesses.list[0].cell == witnesses.list[1].cell);

    const auto graph = build_union_graph(fam, witnesses, nerve, TreeStrategy::Path);
    CHECK(graph.edges.size() == 6); // one edge per tau, all parallel

    const auto identity = edge_count_identity(graph, nerve);
    CHECK(identity.expected == 0);
    CHECK_FALSE(identity.exact); // strict inequality this time
    CHECK(identity.holds);

    const auto multi = multiedge_analysis(graph);
    CHECK(multi.edges == 6);
    CHECK(multi.skeleton_edges == 1);
    CHECK(multi.max_multiplicity == 6); // = k+1, the cap, met exactly
    CHECK(multi.multiplicity_ok);
    CHECK(multi.bundles_within_face);
    CHECK(multi.skeleton_planar);
    CHECK(multi.full_cap == 3 * 2 + 5 * 1 * 1);
    CHECK(multi.full_cap_ok);
}

TEST_CASE("b = 2 with two faces: exact equality with real trees") {
    // seven sets over two points: every 6-subset is a face
    const auto fam = point_family(2, std::vector<std::vector<int>>(7, {0, 1}));
    const auto nerve = compute_nerve(fam, 8);
    CHECK(nerve.f(5) == 7);
    const auto witnesses = choose_witnesses(fam, nerve, 5, 2);
    REQUIRE(witnesses.list.size() == 14);

    const auto graph = build_union_graph(fam, witnesses, nerve, TreeStrategy::Path);
    const auto identity = edge_count_identity(graph, nerve);
    CHECK(identity.f_ind == 21);
    CHECK(identity.expected == 6 * 14 - 2 * 21);
    CHECK(identity.exact);
    CHECK(identity.tree_membership_ok);

    const auto multi = multiedge_analysis(graph);
    CHECK(multi.max_multiplicity == 1);
    CHECK(multi.bundles_within_face);
}

TEST_CASE("component budget enforcement") {
    const auto fam = point_family(3, std::vector<std::vector<int>>(6, {0, 1, 2}));
    const auto nerve = compute_nerve(fam, 7);
    CHECK_THROWS_AS(choose_witnesses(fam, nerve, 5, 2), TooManyComponents);
    CHECK_NOTHROW(choose_witnesses(fam, nerve, 5, 3));
}

TEST_CASE("tree-choice search guards") {
    const auto family = line_triangle_family_for(6);
    const auto nerve = compute_nerve(family, 4);
    const auto witnesses = choose_witnesses(family, nerve, 2, 1);
    CHECK_THROWS_AS(search_planar_tree_choice(family, witnesses, nerve, 1000),
                    SearchSpaceExceeded);

    const auto fam2 = point_family(1, std::vector<std::vector<int>>(6, {0}));
    const auto nerve2 = compute_nerve(fam2, 7);
    const auto wit2 = choose_witnesses(fam2, nerve2, 5, 2);
    CHECK_THROWS_AS(search_planar_tree_choice(fam2, wit2, nerve2, 1000), ParameterRange);
}

TEST_CASE("witness cap handling when the nerve is truncated") {
    const auto family = build_four_set_example();
    const auto low = compute_nerve(family, 2);
    CHECK_THROWS_AS(choose_witnesses(family, low, 2, 1), CapTooLow);
}
