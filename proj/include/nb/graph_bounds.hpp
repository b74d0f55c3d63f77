#pragma once

#include "nb/rational.hpp"

#include <array>
#include <functional>
#include <utility>
#include <vector>

namespace nb {

// A graph with a rotation system: for each vertex, the cyclic order of its
// incident edge ids. Loop-free; parallel edges are allowed (distinct ids).
struct EmbeddedGraph {
    int v = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> rotation;
};

struct FaceCensus {
    long long vertices = 0;
    long long edges = 0;
    long long faces = 0; // plane faces: dart orbits merged across components
    long long components = 0;
    std::vector<long long> face_sizes; // dart-orbit sizes, ascending
    long long triangle_faces = 0;      // orbits of size 3
};

// Face walk census of a rotation system. Throws NonPlanarRotation when the
// orbit count violates Euler's relation for a plane embedding, and
// ParameterRange for malformed input (bad ids, loops, rotation not a
// permutation of the incident edges).
FaceCensus face_census(const EmbeddedGraph& g);

struct TriangleFaceBound {
    long long v = 0;
    long long e = 0;
    long long T = 0; // triangular faces, outer included
    Rat rhs;         // 2v - 4 + T/2
    bool holds = false;
};

// Edge bound for a connected plane graph, all faces of size >= 3.
// ParameterRange when e < 2 (the face-size hypothesis needs it).
TriangleFaceBound planar_edge_bound_with_triangles(long long v, long long e, long long T);

// All 3-cycles u < v < w of a simple graph.
std::vector<std::array<int, 3>> graph_triangles(int v,
                                                const std::vector<std::pair<int, int>>& edges);

// Edge decomposition: disjoint parts of edge ids, each of size within
// [3, t], jointly covering every 3-cycle (one part per triangle).
struct Decomposition {
    long long t = 3;
    std::vector<std::vector<int>> parts;
};

// Throws InvalidDecomposition when the structure above is violated.
void validate_decomposition(const EmbeddedGraph& g, const Decomposition& d);

struct DecompositionBound {
    long long v = 0;
    long long e = 0;
    long long t = 0;
    long long t3 = 0;    // triangular faces of the embedding
    bool applicable = false; // hypothesis e >= t + 1
    Rat t3_cap;          // (2t - 3)/(3t) * e
    bool t3_ok = false;
    Rat edge_cap;        // 12t/(4t + 3) * (v - 2)
    bool edge_ok = false;
    bool pass = false;   // not falsified: inapplicable, or both bounds hold
};

// Checks the decomposition lemma on a concrete embedded graph.
DecompositionBound decomposition_edge_bound(const EmbeddedGraph& g, const Decomposition& d);

// Edge cap 3(f0 - chi) for a graph with f0 >= 3 vertices embedded in a
// closed surface of Euler characteristic chi (ParameterRange when f0 < 3).
long long surface_edge_cap(long long f0, long long chi);

struct SurfaceParams {
    long long t = 0; // part-size cap 3(k + 2 - chi)
    Rat constant;    // 12t/(4t + 3)
};

// Decomposition parameters used at nerve level (k, chi <= 2), k >= 2.
SurfaceParams surface_decomposition_params(int k, int chi);

// Labeled connected planar graphs on 1..v_max vertices (v_max <= 9, else
// CapExceeded), each with a planar rotation. Callback gets the edge-subset
// mask (bit order (0,1),(0,2),...,(v-2,v-1)) and the graph. Returns the
// number of graphs emitted.
long long enumerate_small_planar_graphs(
    int v_max, const std::function<void(unsigned long long, const EmbeddedGraph&)>& fn);

// Same scan restricted to masks in [lo, hi) for a fixed v; the pieces can
// run in parallel and merge deterministically by mask order.
long long scan_planar_graphs(
    int v, unsigned long long lo, unsigned long long hi,
    const std::function<void(unsigned long long, const EmbeddedGraph&)>& fn);

// All decompositions obtained by partitioning the triangle-connected edge
// blocks (edges sharing a 3-cycle must stay together), with the minimal
// admissible t per partition. Partition count capped by node_budget
// (CapExceeded).
std::vector<Decomposition> enumerate_decompositions(const EmbeddedGraph& g,
                                                    long long node_budget);

} // namespace nb
