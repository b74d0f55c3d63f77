#pragma once

#include "nb/report.hpp"
#include "nb/svg.hpp"

#include <optional>

namespace nb {

// End-to-end construction at level k = 2, b = 1: triangle-rich lines, the
// projective census, removal of a least-loaded line, stellar subdivision of
// the remainder, the line-triangle family and its nerve, the planar bound,
// and the full witness-graph battery.
struct ConstructResult {
    int n = 0;
    std::vector<Line> lines;
    ProjectiveCensus census;
    long long bounded_triangles = 0;
    Line removed;
    long long removed_incidence = 0;
    std::vector<Line> remainder;
    long long remainder_triangles = 0;
    RegionFamily family;
    Nerve nerve;
    HypothesisReport hypotheses;
    BoundReport bound;
    WitnessSet witnesses;
    WitnessGraph graph;
    EdgeIdentityReport edge_identity;
    TriangleLabelReport labels;
    MultiedgeReport multiedges;
    std::optional<TreeSearchResult> planar_choice; // absent when over tree_cap

    // kept for drawing
    Arrangement arrangement;
    Arrangement remainder_arrangement;
};

ConstructResult run_construct(int n, long long tree_cap = 200000);

Json construct_json(const ConstructResult& r);

// The verify battery on a stored family: hypotheses, bound, witness checks.
struct VerifyResult {
    HypothesisReport hypotheses;
    BoundReport bound;
    EdgeIdentityReport edge_identity;
    std::optional<TriangleLabelReport> labels; // b = 1 only
    MultiedgeReport multiedges;
    bool pass = false;
};

VerifyResult run_verify(const RegionFamily& family, int k, int b, std::optional<int> chi);

Json verify_json(const VerifyResult& r);

} // namespace nb
