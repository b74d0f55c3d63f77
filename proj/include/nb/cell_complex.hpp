#pragma once

#include "nb/arrangement.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace nb {

// One cell of a regular 2-complex. Boundary lists the (dim-1)-cells: two
// distinct vertices for an edge, a closed edge cycle (in boundary order) for
// a face. The provenance fields record how arrangement-derived cells arose.
struct Cell {
    int dim = 0;
    std::vector<int> boundary;
    std::vector<int> lines;  // input lines supporting the cell (dims 0 and 1)
    int triangle = -1;       // index of the subdivided triangle, if any
    int base_line = -1;      // for a subdivision face: the line of its base edge
    std::optional<Point> pos; // 0-cells only; used for rendering
};

struct CellComplex {
    std::vector<Cell> cells;

    int size() const { return static_cast<int>(cells.size()); }
    long long count_dim(int d) const;
    // Euler characteristic of the complex (vertices - edges + faces).
    long long euler() const;

    // Structural validation; throws MalformedComplex.
    void validate() const;

    // True when every boundary cell of every member is itself a member.
    // `cells` must be sorted.
    bool is_closed_set(const std::vector<int>& cell_set) const;
    // Sorted closure of an arbitrary cell set.
    std::vector<int> closure(std::vector<int> cell_set) const;

    // Connected components of a closed, sorted cell set under the
    // face-incidence relation. Empty set has zero components.
    int component_count(const std::vector<int>& cell_set) const;
    // Component label per position of the sorted set, numbered 0..c-1 in
    // order of each component's smallest cell id.
    std::vector<int> component_labels(const std::vector<int>& cell_set) const;
    // True when the set is one nonempty cell of dimension 0.
    bool is_single_vertex(const std::vector<int>& cell_set) const;
};

// The framed arrangement as a cell complex: every vertex, segment and face
// inside the frame (the outer face is not a disk and is omitted).
CellComplex complex_from_arrangement(const Arrangement& arr);

// Adds the barycenter of every bounded triangle face and replaces the face
// by three subdivision cells, tagged with (triangle index, base line).
// An arrangement without triangles passes through unchanged.
CellComplex stellar_subdivide(const Arrangement& arr);

struct RegionFamily {
    std::shared_ptr<const CellComplex> complex;
    std::vector<std::string> names;
    std::vector<std::vector<int>> sets; // sorted, closed cell sets

    int n() const { return static_cast<int>(sets.size()); }
    void validate() const; // MalformedComplex on open or out-of-range sets
};

// The line-union family over a subdivided arrangement: set 0 is the union of
// all lines; set i+1 is line i together with the closed subdivision thirds
// resting on it. Throws MalformedComplex when the complex carries no line
// provenance for some line in [0, num_lines).
RegionFamily build_line_triangle_family(std::shared_ptr<const CellComplex> complex,
                                        int num_lines);

// Fixed 4-set example: the three closed thirds of a subdivided triangle plus
// the triangle's boundary. Nerve f-vector (4, 6, 4, 0).
RegionFamily build_four_set_example();

// Family file round-trip (schema nerve-bounds/1). The reader validates
// structure and closedness (ParseError).
std::string family_to_json(const RegionFamily& family);
RegionFamily family_from_json(const std::string& text);

} // namespace nb
