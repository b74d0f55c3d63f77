#pragma once

#include "nb/geometry.hpp"

#include <vector>

namespace nb {

struct SimplicityReport {
    bool ok = true;
    std::vector<std::pair<int, int>> duplicate_pairs;
    std::vector<std::pair<int, int>> parallel_pairs;
    struct Concurrency {
        Point at;
        std::vector<int> lines;
    };
    std::vector<Concurrency> concurrencies;
};

// Pairwise scan for duplicates, parallels and >= 3 concurrent lines.
// Requires at least two lines (ParameterRange).
SimplicityReport verify_simple(const std::vector<Line>& lines);

struct HalfEdge {
    int origin = -1; // vertex id
    int twin = -1;
    int next = -1;
    int prev = -1;
    int face = -1;
    int line = -1; // input line index; -1 on the frame
};

struct FaceRec {
    std::vector<int> edges; // half-edge orbit in boundary order
    bool outer = false;
    bool touches_frame = false;
};

// Doubly connected edge list of a simple arrangement clipped to a bounding
// frame chosen 1 unit beyond every crossing, so bounded faces of the true
// arrangement appear verbatim and unbounded ones keep a frame run.
struct Arrangement {
    std::vector<Line> lines;
    std::vector<Point> vertices;
    std::vector<std::vector<int>> vertex_lines; // input lines through each vertex
    std::vector<HalfEdge> half;
    std::vector<FaceRec> faces;
    int outer_face = -1;
    Rat frame_lo_x, frame_lo_y, frame_hi_x, frame_hi_y;

    int head(int he) const { return half[half[he].twin].origin; }
    bool bounded_face(int f) const { return !faces[f].outer && !faces[f].touches_frame; }
    long long crossing_count() const;
};

// Throws NotSimple (with a description of the first violation found).
Arrangement build_arrangement(const std::vector<Line>& lines);

long long bounded_triangle_count(const Arrangement& arr);

struct ProjectiveCensus {
    long long faces = 0;     // bounded faces + antipodally glued unbounded pairs
    long long triangles = 0; // projective triangles (bounded ones included)
    std::vector<long long> per_line_triangles;
};

// Glues unbounded faces along antipodal ray-direction pairs. Self-checks the
// face-count identity C(m,2)+1 and (for m >= 4) the classical cap
// floor(m(m-1)/3) on every run; a violation of either is an internal defect.
ProjectiveCensus projective_census(const Arrangement& arr);

long long projective_triangle_count(const Arrangement& arr);
std::vector<long long> line_triangle_incidence(const Arrangement& arr);

// Line with the fewest incident projective triangles; ties broken by the
// canonical coefficient order.
Line select_infinity_line(const Arrangement& arr);
Line select_infinity_line(const std::vector<Line>& lines);

// floor(n(n-1)/3), valid for n >= 4
Int triangle_count_cap(int n);
// ceil(n(n-3)/3), the guaranteed projective triangle count of the generator
Int triangle_rich_lower_bound(int n);

// n rational lines (n >= 5, else ParameterRange), pairwise crossing, no three
// concurrent, whose projective arrangement has at least ceil(n(n-3)/3)
// triangles. Deterministic; exact self-verification with precision retries
// (GenerationFailed after the ladder is exhausted).
std::vector<Line> furedi_palasti_lines(int n);

} // namespace nb
