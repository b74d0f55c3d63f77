#include "nb/errors.hpp"
#include "nb/pipeline.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitError = 3;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw nb::Error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int thread_count() {
    if (const char* env = std::getenv("NERVE_BOUNDS_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1)
            return n;
    }
    return 1;
}

int cmd_construct(int n, long long tree_cap, const std::string& out,
                  const std::string& family_out, const std::string& svg,
                  const std::string& family_svg_path) {
    const auto result = nb::run_construct(n, tree_cap);
    nb::write_json(nb::construct_json(result), out);
    if (!family_out.empty())
        nb::write_text_file(nb::family_to_json(result.family), family_out);
    if (!svg.empty())
        nb::write_text_file(nb::arrangement_svg(result.arrangement), svg);
    if (!family_svg_path.empty())
        nb::write_text_file(nb::family_svg(result.family), family_svg_path);

    const bool pass = result.hypotheses.pass && result.bound.satisfied &&
                      result.edge_identity.holds && result.labels.pass &&
                      result.multiedges.multiplicity_ok && result.multiedges.full_cap_ok;
    return pass ? 0 : kExitCheckFailed;
}

int cmd_verify(const std::string& family_path, int k, int b, std::optional<int> chi,
               const std::string& out) {
    const auto family = nb::family_from_json(slurp(family_path));
    const auto result = nb::run_verify(family, k, b, chi);
    nb::write_json(nb::verify_json(result), out);
    return result.pass ? 0 : kExitCheckFailed;
}

struct LemmaTally {
    long long graphs = 0;
    long long obs_checked = 0;
    long long obs_failures = 0;
    long long decomp_checked = 0;
    long long decomp_failures = 0;
    std::string ndjson;
};

void lemma_check_graph(unsigned long long mask, const nb::EmbeddedGraph& g,
                       long long budget, bool want_ndjson, LemmaTally& tally) {
    ++tally.graphs;
    const auto census = nb::face_census(g);
    bool obs_holds = true;
    if (census.edges >= 2) {
        ++tally.obs_checked;
        obs_holds = nb::planar_edge_bound_with_triangles(census.vertices, census.edges,
                                                         census.triangle_faces)
                        .holds;
        if (!obs_holds)
            ++tally.obs_failures;
    }
    long long decomps = 0;
    long long decomp_bad = 0;
    for (const auto& d : nb::enumerate_decompositions(g, budget)) {
        const auto bound = nb::decomposition_edge_bound(g, d);
        ++decomps;
        ++tally.decomp_checked;
        if (!bound.pass) {
            ++decomp_bad;
            ++tally.decomp_failures;
        }
    }
    if (want_ndjson) {
        nb::Json line;
        line["v"] = g.v;
        line["mask"] = mask;
        line["e"] = census.edges;
        line["faces"] = census.faces;
        line["t3"] = census.triangle_faces;
        line["obs_holds"] = obs_holds;
        line["decompositions"] = decomps;
        line["decomp_failures"] = decomp_bad;
        tally.ndjson += line.dump() + "\n";
    }
}

int cmd_lemmas(int vmax, long long budget, const std::string& out,
               const std::string& corpus) {
    const bool want_ndjson = !corpus.empty();
    const int threads = thread_count();
    LemmaTally total;

    for (int v = 1; v <= vmax; ++v) {
        int pair_bits = v * (v - 1) / 2;
        const unsigned long long space = 1ULL << pair_bits;
        const int workers = static_cast<int>(
            std::min<unsigned long long>(space, static_cast<unsigned long long>(threads)));
        std::vector<LemmaTally> parts(workers);
        std::vector<std::thread> pool;
        const unsigned long long chunk = (space + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const unsigned long long lo = chunk * w;
            const unsigned long long hi = std::min(space, lo + chunk);
            pool.emplace_back([&, w, lo, hi] {
                nb::scan_planar_graphs(v, lo, hi,
                                       [&](unsigned long long mask, const nb::EmbeddedGraph& g) {
                                           lemma_check_graph(mask, g, budget, want_ndjson,
                                                             parts[w]);
                                       });
            });
        }
        for (auto& t : pool)
            t.join();
        for (const auto& part : parts) {
            total.graphs += part.graphs;
            total.obs_checked += part.obs_checked;
            total.obs_failures += part.obs_failures;
            total.decomp_checked += part.decomp_checked;
            total.decomp_failures += part.decomp_failures;
            total.ndjson += part.ndjson;
        }
    }

    if (want_ndjson)
        nb::write_text_file(total.ndjson, corpus);
    nb::Json doc = nb::report_skeleton("lemmas");
    doc["v_max"] = vmax;
    doc["graphs"] = total.graphs;
    doc["observation_checked"] = total.obs_checked;
    doc["observation_failures"] = total.obs_failures;
    doc["decompositions_checked"] = total.decomp_checked;
    doc["decomposition_failures"] = total.decomp_failures;
    const bool pass = total.obs_failures == 0 && total.decomp_failures == 0;
    doc["pass"] = pass;
    nb::write_json(doc, out);
    return pass ? 0 : kExitCheckFailed;
}

int cmd_arrangement(const std::string& lines_path, bool projective, const std::string& svg,
                    const std::string& out) {
    std::ifstream in(lines_path);
    if (!in)
        throw nb::Error("cannot open " + lines_path);
    const auto lines = nb::parse_lines(in);

    const auto simplicity = nb::verify_simple(lines);
    if (!simplicity.ok) {
        nb::Json doc = nb::report_skeleton("arrangement");
        doc["simplicity"] = nb::simplicity_json(simplicity);
        nb::write_json(doc, out);
        return kExitCheckFailed;
    }
    const auto arr = nb::build_arrangement(lines);
    nb::Json doc = nb::report_skeleton("arrangement");
    doc["simplicity"] = nb::simplicity_json(simplicity);
    doc.update(nb::arrangement_json(arr, projective));
    nb::write_json(doc, out);
    if (!svg.empty())
        nb::write_text_file(nb::arrangement_svg(arr), svg);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact nerve bounds for planar region families"};
    app.require_subcommand(1);

    auto* construct = app.add_subcommand("construct", "build a triangle-rich family");
    int n = 6;
    long long tree_cap = 200000;
    std::string out = "-";
    std::string family_out, svg_path, family_svg_path;
    construct->add_option("--n", n, "number of generator lines (>= 5)")->required();
    construct->add_option("--tree-cap", tree_cap, "tree-choice search cap");
    construct->add_option("--out", out, "report path or -");
    construct->add_option("--family-out", family_out, "write the family file");
    construct->add_option("--svg", svg_path, "draw the generator arrangement");
    construct->add_option("--family-svg", family_svg_path, "draw the family");

    auto* verify = app.add_subcommand("verify", "check a stored family");
    std::string family_path;
    int k = 2;
    int b = 1;
    int chi_value = 2;
    std::string verify_out = "-";
    verify->add_option("--family", family_path, "family file")->required();
    verify->add_option("--k", k, "nerve level")->required();
    verify->add_option("--b", b, "component budget");
    auto* chi_opt = verify->add_option("--chi", chi_value, "surface Euler characteristic");
    verify->add_option("--out", verify_out, "report path or -");

    auto* lemmas = app.add_subcommand("lemmas", "graph-bound corpus checks");
    int vmax = 6;
    long long budget = 100000;
    std::string lemmas_out = "-";
    std::string corpus_path;
    lemmas->add_option("--vmax", vmax, "largest vertex count (<= 9)");
    lemmas->add_option("--budget", budget, "decomposition partitions per graph");
    lemmas->add_option("--out", lemmas_out, "summary path or -");
    lemmas->add_option("--corpus", corpus_path, "per-graph NDJSON path");

    auto* arrangement = app.add_subcommand("arrangement", "census of a line file");
    std::string lines_path;
    bool projective = false;
    std::string arr_svg, arr_out = "-";
    arrangement->add_option("--lines", lines_path, "line file (a b c rows)")->required();
    arrangement->add_flag("--projective", projective, "antipodal gluing census");
    arrangement->add_option("--svg", arr_svg, "draw the clipped arrangement");
    arrangement->add_option("--out", arr_out, "report path or -");

    CLI11_PARSE(app, argc, argv);

    try {
        if (construct->parsed())
            return cmd_construct(n, tree_cap, out, family_out, svg_path, family_svg_path);
        if (verify->parsed())
            return cmd_verify(family_path, k, b,
                              chi_opt->count() ? std::optional<int>(chi_value) : std::nullopt,
                              verify_out);
        if (lemmas->parsed())
            return cmd_lemmas(vmax, budget, lemmas_out, corpus_path);
        if (arrangement->parsed())
            return cmd_arrangement(lines_path, projective, arr_svg, arr_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return 0;
}
