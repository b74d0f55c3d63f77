#include "nb/report.hpp"

#include "nb/errors.hpp"

#include <fstream>
#include <iostream>

namespace nb {

namespace {

Json rat_json(const Rat& r) { return format_rational(r); }

Json point_json(const Point& p) {
    return Json::array({format_rational(p.x), format_rational(p.y)});
}

} // namespace

Json report_skeleton(const std::string& kind) {
    Json doc;
    doc["schema"] = kSchema;
    doc["kind"] = kind;
    return doc;
}

Json simplicity_json(const SimplicityReport& r) {
    Json j;
    j["simple"] = r.ok;
    auto pairs = [](const std::vector<std::pair<int, int>>& ps) {
        Json arr = Json::array();
        for (auto [a, b] : ps)
            arr.push_back(Json::array({a, b}));
        return arr;
    };
    j["duplicate_pairs"] = pairs(r.duplicate_pairs);
    j["parallel_pairs"] = pairs(r.parallel_pairs);
    Json conc = Json::array();
    for (const auto& c : r.concurrencies) {
        Json jc;
        jc["at"] = point_json(c.at);
        jc["lines"] = c.lines;
        conc.push_back(std::move(jc));
    }
    j["concurrencies"] = std::move(conc);
    return j;
}

Json arrangement_json(const Arrangement& arr, bool projective) {
    Json j;
    j["n_lines"] = arr.lines.size();
    Json lines = Json::array();
    for (const auto& line : arr.lines)
        lines.push_back(format_line(line));
    j["lines"] = std::move(lines);
    j["crossings"] = arr.crossing_count();
    long long bounded = 0;
    for (const auto& f : arr.faces)
        if (!f.outer && !f.touches_frame)
            ++bounded;
    j["bounded_faces"] = bounded;
    j["bounded_triangles"] = bounded_triangle_count(arr);
    if (projective) {
        const auto census = projective_census(arr);
        j["projective_faces"] = census.faces;
        j["projective_triangles"] = census.triangles;
        j["per_line_incidence"] = census.per_line_triangles;
        if (arr.lines.size() >= 4)
            j["grunbaum_cap"] = static_cast<long long>(triangle_count_cap(arr.lines.size()));
        else
            j["grunbaum_cap"] = nullptr; // undefined below four lines
    }
    return j;
}

Json hypothesis_json(const HypothesisReport& r) {
    Json j;
    j["k"] = r.k;
    j["b"] = r.b;
    j["level_k_plus_1_empty"] = r.level_k_plus_1_empty;
    j["components_ok"] = r.components_ok;
    j["cardinality_violations"] = r.cardinality_violations;
    Json comp = Json::array();
    for (const auto& v : r.component_violations) {
        Json jc;
        jc["sigma"] = v.sigma;
        jc["components"] = v.components;
        comp.push_back(std::move(jc));
    }
    j["component_violations"] = std::move(comp);
    j["single_point_count"] = r.single_point_count;
    j["pass"] = r.pass;
    return j;
}

Json bound_json(const BoundReport& r) {
    Json j;
    j["k"] = r.k;
    j["b"] = r.b;
    if (r.chi)
        j["chi"] = *r.chi;
    else
        j["chi"] = nullptr;
    j["f_vector"] = r.f;
    j["f_k"] = r.f_k;
    j["f_ind"] = r.f_ind_k_minus_1;
    j["constant"] = rat_json(r.constant);
    j["additive"] = rat_json(r.additive);
    j["rhs"] = rat_json(r.rhs);
    if (r.alt_rhs)
        j["alt_rhs"] = rat_json(*r.alt_rhs);
    j["constant_kind"] = r.constant_kind;
    j["satisfied"] = r.satisfied;
    j["margin"] = rat_json(r.margin);
    return j;
}

Json witness_graph_json(const WitnessGraph& g) {
    Json j;
    j["k"] = g.k;
    j["b"] = g.b;
    Json verts = Json::array();
    for (const auto& w : g.vertices) {
        Json jw;
        jw["sigma"] = w.sigma;
        jw["copy"] = w.copy;
        jw["cell"] = w.cell;
        verts.push_back(std::move(jw));
    }
    j["vertices"] = std::move(verts);
    Json edges = Json::array();
    for (const auto& e : g.edges) {
        Json je;
        je["u"] = e.u;
        je["v"] = e.v;
        je["tau"] = e.tau;
        edges.push_back(std::move(je));
    }
    j["edges"] = std::move(edges);
    j["gamma_size"] = g.gamma.size();
    return j;
}

Json edge_identity_json(const EdgeIdentityReport& r) {
    Json j;
    j["edges"] = r.edges;
    j["witnesses"] = r.witnesses;
    j["f_ind"] = r.f_ind;
    j["expected"] = r.expected;
    j["exact"] = r.exact;
    j["holds"] = r.holds;
    j["tree_membership_ok"] = r.tree_membership_ok;
    return j;
}

Json triangle_label_json(const TriangleLabelReport& r) {
    Json j;
    j["triangle_count"] = r.triangle_count;
    j["labels_ok"] = r.labels_ok;
    j["shared_edges_ok"] = r.shared_edges_ok;
    j["subgraphs_ok"] = r.subgraphs_ok;
    j["edge_disjoint_ok"] = r.edge_disjoint_ok;
    Json classes = Json::array();
    for (const auto& c : r.classes) {
        Json jc;
        jc["label"] = c.label;
        jc["vertices"] = c.vertices;
        jc["edges"] = c.edges;
        jc["triangles"] = c.triangles;
        classes.push_back(std::move(jc));
    }
    j["classes"] = std::move(classes);
    Json viol = Json::array();
    for (const auto& t : r.label_violations)
        viol.push_back(Json::array({t[0], t[1], t[2]}));
    j["label_violations"] = std::move(viol);
    j["pass"] = r.pass;
    return j;
}

Json multiedge_json(const MultiedgeReport& r) {
    Json j;
    j["edges"] = r.edges;
    j["skeleton_edges"] = r.skeleton_edges;
    j["max_multiplicity"] = r.max_multiplicity;
    j["multiplicity_ok"] = r.multiplicity_ok;
    j["bundles_within_face"] = r.bundles_within_face;
    j["skeleton_planar"] = r.skeleton_planar;
    j["skeleton_bound_ok"] = r.skeleton_bound_ok;
    j["full_cap"] = r.full_cap;
    j["full_cap_ok"] = r.full_cap_ok;
    return j;
}

Json tree_search_json(const TreeSearchResult& r) {
    Json j;
    j["found"] = r.found;
    j["combinations"] = r.combinations;
    j["tested"] = r.tested;
    if (r.found)
        j["graph"] = witness_graph_json(r.graph);
    return j;
}

Json face_census_json(const FaceCensus& c) {
    Json j;
    j["vertices"] = c.vertices;
    j["edges"] = c.edges;
    j["faces"] = c.faces;
    j["components"] = c.components;
    j["face_sizes"] = c.face_sizes;
    j["triangle_faces"] = c.triangle_faces;
    return j;
}

Json decomposition_bound_json(const DecompositionBound& r) {
    Json j;
    j["v"] = r.v;
    j["e"] = r.e;
    j["t"] = r.t;
    j["t3"] = r.t3;
    j["applicable"] = r.applicable;
    j["t3_cap"] = rat_json(r.t3_cap);
    j["t3_ok"] = r.t3_ok;
    j["edge_cap"] = rat_json(r.edge_cap);
    j["edge_ok"] = r.edge_ok;
    j["pass"] = r.pass;
    return j;
}

void write_json(const Json& doc, const std::string& path) {
    write_text_file(doc.dump(2) + "\n", path);
}

void write_text_file(const std::string& text, const std::string& path) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw Error("cannot open " + path + " for writing");
    out << text;
    if (!out)
        throw Error("failed writing " + path);
}

} // namespace nb
