#pragma once

#include <utility>
#include <vector>

namespace nb {

struct PlanarEmbedding {
    bool planar = false;
    // When planar: per-vertex cyclic order of incident edge indices.
    std::vector<std::vector<int>> rotation;
};

// Boyer-Myrvold test plus embedding extraction. Input must be simple and
// loop-free (ParameterRange otherwise); isolated vertices are fine.
PlanarEmbedding planar_embedding(int num_vertices,
                                 const std::vector<std::pair<int, int>>& edges);

} // namespace nb
