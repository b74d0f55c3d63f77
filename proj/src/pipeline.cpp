#include "nb/pipeline.hpp"

#include "nb/errors.hpp"

#include <algorithm>

namespace nb {

ConstructResult run_construct(int n, long long tree_cap) {
    ConstructResult r;
    r.n = n;
    r.lines = furedi_palasti_lines(n);
    r.arrangement = build_arrangement(r.lines);
    r.census = projective_census(r.arrangement);
    r.bounded_triangles = bounded_triangle_count(r.arrangement);

    r.removed = select_infinity_line(r.arrangement);
    const auto it = std::find(r.lines.begin(), r.lines.end(), r.removed);
    if (it == r.lines.end())
        throw Error("internal: selected line missing from input");
    r.removed_incidence = r.census.per_line_triangles[it - r.lines.begin()];

    r.remainder = map_line_to_infinity(r.lines, r.removed);
    r.remainder_arrangement = build_arrangement(r.remainder);
    r.remainder_triangles = bounded_triangle_count(r.remainder_arrangement);
    if (r.remainder_triangles != r.census.triangles - r.removed_incidence)
        throw Error("internal: remainder triangle identity violated");

    auto complex = std::make_shared<CellComplex>(stellar_subdivide(r.remainder_arrangement));
    r.family = build_line_triangle_family(complex, static_cast<int>(r.remainder.size()));

    r.nerve = compute_nerve(r.family, 4);
    r.hypotheses = check_intersection_hypotheses(r.family, 2, 1);
    r.bound = check_bound(r.nerve, 2, 1, std::nullopt);

    r.witnesses = choose_witnesses(r.family, r.nerve, 2, 1);
    r.graph = build_union_graph(r.family, r.witnesses, r.nerve, TreeStrategy::Path);
    r.edge_identity = edge_count_identity(r.graph, r.nerve);
    r.labels = triangle_label_analysis(r.graph);
    r.multiedges = multiedge_analysis(r.graph);
    try {
        r.planar_choice = search_planar_tree_choice(r.family, r.witnesses, r.nerve, tree_cap);
    } catch (const SearchSpaceExceeded&) {
        r.planar_choice.reset();
    }
    return r;
}

Json construct_json(const ConstructResult& r) {
    Json doc = report_skeleton("construct");
    doc["n"] = r.n;

    Json gen;
    Json lines = Json::array();
    for (const auto& line : r.lines)
        lines.push_back(format_line(line));
    gen["lines"] = std::move(lines);
    gen["crossings"] = r.arrangement.crossing_count();
    gen["bounded_triangles"] = r.bounded_triangles;
    gen["projective_triangles"] = r.census.triangles;
    gen["lower_bound"] = static_cast<long long>(triangle_rich_lower_bound(r.n));
    gen["cap"] = static_cast<long long>(triangle_count_cap(r.n));
    gen["per_line_incidence"] = r.census.per_line_triangles;
    doc["generator"] = std::move(gen);

    doc["removed_line"] = format_line(r.removed);
    doc["removed_incidence"] = r.removed_incidence;

    Json rem;
    Json rem_lines = Json::array();
    for (const auto& line : r.remainder)
        rem_lines.push_back(format_line(line));
    rem["lines"] = std::move(rem_lines);
    rem["bounded_triangles"] = r.remainder_triangles;
    doc["remainder"] = std::move(rem);

    Json fam;
    fam["sets"] = r.family.names;
    Json sizes = Json::array();
    for (const auto& set : r.family.sets)
        sizes.push_back(set.size());
    fam["set_sizes"] = std::move(sizes);
    fam["complex_cells"] = r.family.complex->cells.size();
    doc["family"] = std::move(fam);

    Json nerve;
    nerve["f_vector"] = r.nerve.f_vector();
    nerve["truncated"] = r.nerve.truncated;
    doc["nerve"] = std::move(nerve);

    doc["hypotheses"] = hypothesis_json(r.hypotheses);
    doc["bound"] = bound_json(r.bound);

    Json wit;
    wit["vertices"] = r.graph.vertices.size();
    wit["edges"] = r.graph.edges.size();
    wit["gamma_size"] = r.graph.gamma.size();
    doc["witness_graph"] = std::move(wit);
    doc["edge_identity"] = edge_identity_json(r.edge_identity);
    doc["triangle_labels"] = triangle_label_json(r.labels);
    doc["multiedge"] = multiedge_json(r.multiedges);
    doc["tree_search"] = r.planar_choice ? tree_search_json(*r.planar_choice)
                                         : Json{{"skipped", "search space over cap"}};
    return doc;
}

VerifyResult run_verify(const RegionFamily& family, int k, int b, std::optional<int> chi) {
    VerifyResult r;
    r.hypotheses = check_intersection_hypotheses(family, k, b);
    const Nerve nerve = compute_nerve(family, k + 2);
    r.bound = check_bound(nerve, k, b, chi);
    const WitnessSet witnesses = choose_witnesses(family, nerve, k, b);
    const WitnessGraph graph = build_union_graph(family, witnesses, nerve, TreeStrategy::Path);
    r.edge_identity = edge_count_identity(graph, nerve);
    if (b == 1)
        r.labels = triangle_label_analysis(graph);
    r.multiedges = multiedge_analysis(graph);
    r.pass = r.hypotheses.pass && r.bound.satisfied && r.edge_identity.holds &&
             r.edge_identity.tree_membership_ok && (!r.labels || r.labels->pass) &&
             r.multiedges.multiplicity_ok && r.multiedges.bundles_within_face &&
             r.multiedges.full_cap_ok;
    return r;
}

Json verify_json(const VerifyResult& r) {
    Json doc = report_skeleton("verify");
    doc["hypotheses"] = hypothesis_json(r.hypotheses);
    doc["bound"] = bound_json(r.bound);
    doc["edge_identity"] = edge_identity_json(r.edge_identity);
    if (r.labels)
        doc["triangle_labels"] = triangle_label_json(*r.labels);
    doc["multiedge"] = multiedge_json(r.multiedges);
    doc["pass"] = r.pass;
    return doc;
}

} // namespace nb
