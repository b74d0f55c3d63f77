#include "nb/planarity.hpp"

#include "nb/errors.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/properties.hpp>

#include <set>

namespace nb {

PlanarEmbedding planar_embedding(int num_vertices,
                                 const std::vector<std::pair<int, int>>& edges) {
    using Graph =
        boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                              boost::no_property,
                              boost::property<boost::edge_index_t, int>>;
    if (num_vertices < 0)
        throw ParameterRange("negative vertex count");
    std::set<std::pair<int, int>> seen;
    Graph g(num_vertices);
    for (size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices)
            throw ParameterRange("edge endpoint out of range");
        if (u == v)
            throw ParameterRange("self-loops are not supported");
        if (!seen.insert(std::minmax(u, v)).second)
            throw ParameterRange("parallel edges are not supported");
        boost::add_edge(u, v, static_cast<int>(i), g);
    }

    using Edge = boost::graph_traits<Graph>::edge_descriptor;
    std::vector<std::vector<Edge>> storage(boost::num_vertices(g));
    auto embedding = boost::make_iterator_property_map(storage.begin(),
                                                       boost::get(boost::vertex_index, g));
    PlanarEmbedding out;
    out.planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = g,
        boost::boyer_myrvold_params::embedding = embedding);
    if (!out.planar)
        return out;

    auto index = boost::get(boost::edge_index, g);
    out.rotation.resize(num_vertices);
    for (int v = 0; v < num_vertices; ++v)
        for (const Edge& e : storage[v])
            out.rotation[v].push_back(boost::get(index, e));
    return out;
}

} // namespace nb
