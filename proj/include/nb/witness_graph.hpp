#pragma once

#include "nb/nerve.hpp"
#include "nb/planarity.hpp"

#include <array>
#include <optional>

namespace nb {

// One witness point: a (k+1)-wise intersection it certifies, the copy slot
// (always 0 when b = 1) and a representative cell of the component it marks.
struct Witness {
    std::vector<int> sigma;
    int copy = 0;
    int cell = -1;
};

struct WitnessSet {
    int k = 0;
    int b = 1;
    std::vector<Witness> list; // ordered by (sigma, copy)
};

// b witnesses per k-face of the nerve, at least one in every component of
// the intersection (components ordered by smallest cell id; surplus copies
// land in the first one). Throws TooManyComponents when an intersection has
// more than b components.
WitnessSet choose_witnesses(const RegionFamily& family, const Nerve& nerve, int k, int b);

enum class TreeStrategy { Path, Star };

struct WitnessEdge {
    int u = 0;
    int v = 0;
    std::vector<int> tau; // the k-face whose group tree contributed the edge
};

struct WitnessGraph {
    int k = 0;
    int b = 1;
    std::vector<Witness> vertices;
    std::vector<WitnessEdge> edges;
    std::vector<std::vector<int>> gamma; // k-faces with at least one witness
};

// Union over tau in Gamma of spanning trees on the witnesses of tau (one
// tree per component group when b >= 2).
WitnessGraph build_union_graph(const RegionFamily& family, const WitnessSet& witnesses,
                               const Nerve& nerve, TreeStrategy strategy);

struct EdgeIdentityReport {
    long long edges = 0;
    long long witnesses = 0;
    long long f_ind = 0; // f^ind_{k-1} of the nerve
    long long expected = 0; // (k+1)|W| - b f^ind
    bool exact = false;    // b = 1: edges == expected
    bool holds = false;    // b = 1: exact; b >= 2: edges >= expected
    bool tree_membership_ok = false; // every vertex lies in exactly k+1 groups
};

EdgeIdentityReport edge_count_identity(const WitnessGraph& graph, const Nerve& nerve);

struct TriangleLabelReport {
    long long triangle_count = 0;
    bool labels_ok = true;        // every triangle label has cardinality k+2
    bool shared_edges_ok = true;  // triangles sharing an edge share the label
    bool subgraphs_ok = true;     // each H_nu has <= k+2 vertices, <= 3k edges
    bool edge_disjoint_ok = true; // the H_nu are pairwise edge-disjoint
    struct LabelClass {
        std::vector<int> label;
        long long vertices = 0;
        long long edges = 0;
        long long triangles = 0;
    };
    std::vector<LabelClass> classes;
    std::vector<std::array<int, 3>> label_violations;
    bool pass = false;
};

// Triangle bookkeeping for b = 1 union graphs (ParameterRange when b != 1).
TriangleLabelReport triangle_label_analysis(const WitnessGraph& graph);

struct MultiedgeReport {
    long long edges = 0;
    long long skeleton_edges = 0;
    long long max_multiplicity = 0;
    bool multiplicity_ok = true;   // every multiplicity <= k+1
    bool bundles_within_face = true; // parallel edges only between same-sigma copies
    bool skeleton_planar = false;
    bool skeleton_bound_ok = true; // skeleton_edges <= 3|W| (when planar)
    long long full_cap = 0;        // 3|W| + k(b-1) f_k
    bool full_cap_ok = false;
};

MultiedgeReport multiedge_analysis(const WitnessGraph& graph);

struct TreeSearchResult {
    bool found = false;
    long long combinations = 0; // size of the searched product space
    long long tested = 0;
    WitnessGraph graph;         // the first planar choice, when found
};

// Exhaustive search over independent spanning-tree choices per tau (b = 1
// only), capped by `cap` total combinations (SearchSpaceExceeded).
TreeSearchResult search_planar_tree_choice(const RegionFamily& family,
                                           const WitnessSet& witnesses, const Nerve& nerve,
                                           long long cap);

} // namespace nb
