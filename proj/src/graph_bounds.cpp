#include "nb/graph_bounds.hpp"

#include "nb/errors.hpp"
#include "nb/planarity.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace nb {

namespace {

struct EdgeDsu {
    std::vector<int> parent;
    explicit EdgeDsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

void check_edges(int v, const std::vector<std::pair<int, int>>& edges) {
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= v || b >= v)
            throw ParameterRange("edge endpoint out of range");
        if (a == b)
            throw ParameterRange("loops are not supported");
    }
}

} // namespace

FaceCensus face_census(const EmbeddedGraph& g) {
    check_edges(g.v, g.edges);
    if (static_cast<int>(g.rotation.size()) != g.v)
        throw ParameterRange("rotation must list every vertex");
    const int e = static_cast<int>(g.edges.size());

    std::vector<std::vector<int>> incident(g.v);
    for (int i = 0; i < e; ++i) {
        incident[g.edges[i].first].push_back(i);
        incident[g.edges[i].second].push_back(i);
    }
    std::vector<int> rot_pos(e, -1); // position of edge i in rotation[tail]
    for (int u = 0; u < g.v; ++u) {
        auto sorted = g.rotation[u];
        std::sort(sorted.begin(), sorted.end());
        auto want = incident[u];
        std::sort(want.begin(), want.end());
        if (sorted != want)
            throw ParameterRange("rotation at vertex " + std::to_string(u) +
                                 " is not a permutation of its incident edges");
    }
    // dart 2i runs first->second, dart 2i+1 runs second->first
    auto head = [&](int d) {
        auto [a, b] = g.edges[d >> 1];
        return (d & 1) ? a : b;
    };
    std::vector<std::vector<int>> pos_of(g.v); // edge id -> index in rotation[u]
    for (int u = 0; u < g.v; ++u) {
        pos_of[u].assign(e, -1);
        for (int i = 0; i < static_cast<int>(g.rotation[u].size()); ++i)
            pos_of[u][g.rotation[u][i]] = i;
    }
    auto next_dart = [&](int d) {
        const int h = head(d);
        const auto& rot = g.rotation[h];
        const int deg = static_cast<int>(rot.size());
        const int nid = rot[(pos_of[h][d >> 1] + 1) % deg];
        return g.edges[nid].first == h ? 2 * nid : 2 * nid + 1;
    };

    FaceCensus census;
    census.vertices = g.v;
    census.edges = e;
    std::vector<char> seen(2 * e, 0);
    for (int d0 = 0; d0 < 2 * e; ++d0) {
        if (seen[d0])
            continue;
        long long size = 0;
        for (int d = d0; !seen[d]; d = next_dart(d)) {
            seen[d] = 1;
            ++size;
        }
        census.face_sizes.push_back(size);
        if (size == 3)
            ++census.triangle_faces;
    }
    std::sort(census.face_sizes.begin(), census.face_sizes.end());

    EdgeDsu dsu(g.v);
    for (auto [a, b] : g.edges)
        dsu.unite(a, b);
    std::set<int> roots;
    long long isolated = 0;
    for (int u = 0; u < g.v; ++u) {
        roots.insert(dsu.find(u));
        if (incident[u].empty())
            ++isolated;
    }
    census.components = static_cast<long long>(roots.size());

    const long long orbits = static_cast<long long>(census.face_sizes.size()) + isolated;
    if (census.vertices - census.edges + orbits != 2 * census.components)
        throw NonPlanarRotation("rotation system has genus > 0 (v - e + f = " +
                                std::to_string(census.vertices - census.edges + orbits) +
                                ", expected " + std::to_string(2 * census.components) + ")");
    census.faces = orbits - census.components + 1;
    return census;
}

TriangleFaceBound planar_edge_bound_with_triangles(long long v, long long e, long long T) {
    if (e < 2)
        throw ParameterRange("face-size hypothesis needs e >= 2");
    TriangleFaceBound r;
    r.v = v;
    r.e = e;
    r.T = T;
    r.rhs = Rat(2 * v - 4) + Rat(T, 2);
    r.holds = Rat(e) <= r.rhs;
    return r;
}

std::vector<std::array<int, 3>> graph_triangles(int v,
                                                const std::vector<std::pair<int, int>>& edges) {
    check_edges(v, edges);
    std::vector<std::vector<char>> adj(v, std::vector<char>(v, 0));
    for (auto [a, b] : edges)
        adj[a][b] = adj[b][a] = 1;
    std::vector<std::array<int, 3>> out;
    for (int a = 0; a < v; ++a)
        for (int b = a + 1; b < v; ++b) {
            if (!adj[a][b])
                continue;
            for (int c = b + 1; c < v; ++c)
                if (adj[a][c] && adj[b][c])
                    out.push_back({a, b, c});
        }
    return out;
}

void validate_decomposition(const EmbeddedGraph& g, const Decomposition& d) {
    if (d.t < 3)
        throw InvalidDecomposition("part-size cap t must be >= 3");
    const int e = static_cast<int>(g.edges.size());
    std::vector<int> part_of(e, -1);
    for (std::size_t p = 0; p < d.parts.size(); ++p) {
        const auto& part = d.parts[p];
        if (part.size() < 3 || static_cast<long long>(part.size()) > d.t)
            throw InvalidDecomposition("part size outside [3, t]");
        for (int id : part) {
            if (id < 0 || id >= e)
                throw InvalidDecomposition("edge id out of range");
            if (part_of[id] != -1)
                throw InvalidDecomposition("parts are not disjoint");
            part_of[id] = static_cast<int>(p);
        }
    }
    // map edges to ids for the triangle coverage check
    std::map<std::pair<int, int>, int> id_of;
    for (int i = 0; i < e; ++i) {
        auto key = std::minmax(g.edges[i].first, g.edges[i].second);
        id_of[{key.first, key.second}] = i;
    }
    for (auto [a, b, c] : graph_triangles(g.v, g.edges)) {
        const int ab = part_of[id_of[{a, b}]];
        const int ac = part_of[id_of[{a, c}]];
        const int bc = part_of[id_of[{b, c}]];
        if (ab < 0 || ab != ac || ab != bc)
            throw InvalidDecomposition("triangle not covered by a single part");
    }
}

DecompositionBound decomposition_edge_bound(const EmbeddedGraph& g, const Decomposition& d) {
    validate_decomposition(g, d);
    const auto census = face_census(g);
    DecompositionBound r;
    r.v = census.vertices;
    r.e = census.edges;
    r.t = d.t;
    r.t3 = census.triangle_faces;
    r.applicable = r.e >= r.t + 1;
    r.t3_cap = Rat(2 * r.t - 3, 3 * r.t) * Rat(r.e);
    r.t3_ok = Rat(r.t3) <= r.t3_cap;
    r.edge_cap = Rat(12 * r.t, 4 * r.t + 3) * Rat(r.v - 2);
    r.edge_ok = Rat(r.e) <= r.edge_cap;
    r.pass = !r.applicable || (r.t3_ok && r.edge_ok);
    return r;
}

long long surface_edge_cap(long long f0, long long chi) {
    if (f0 < 3)
        throw ParameterRange("surface edge cap needs at least 3 vertices");
    return 3 * (f0 - chi);
}

SurfaceParams surface_decomposition_params(int k, int chi) {
    if (k < 2 || chi > 2)
        throw ParameterRange("surface parameters need k >= 2, chi <= 2");
    SurfaceParams p;
    p.t = 3LL * (k + 2 - chi);
    p.constant = Rat(12 * p.t, 4 * p.t + 3);
    return p;
}

long long scan_planar_graphs(
    int v, unsigned long long lo, unsigned long long hi,
    const std::function<void(unsigned long long, const EmbeddedGraph&)>& fn) {
    if (v < 1 || v > 9)
        throw CapExceeded("vertex count must be in [1, 9]");
    std::vector<std::pair<int, int>> all_pairs;
    for (int a = 0; a < v; ++a)
        for (int b = a + 1; b < v; ++b)
            all_pairs.emplace_back(a, b);
    const unsigned long long space = 1ULL << all_pairs.size();
    hi = std::min(hi, space);

    long long emitted = 0;
    std::vector<std::pair<int, int>> edges;
    for (unsigned long long mask = lo; mask < hi; ++mask) {
        const int e = __builtin_popcountll(mask);
        if (e < v - 1 || (v >= 3 && e > 3 * v - 6))
            continue;
        edges.clear();
        for (std::size_t i = 0; i < all_pairs.size(); ++i)
            if (mask >> i & 1)
                edges.push_back(all_pairs[i]);
        EdgeDsu dsu(v);
        for (auto [a, b] : edges)
            dsu.unite(a, b);
        bool connected = true;
        for (int u = 1; u < v && connected; ++u)
            connected = dsu.find(u) == dsu.find(0);
        if (!connected)
            continue;
        auto embedding = planar_embedding(v, edges);
        if (!embedding.planar)
            continue;
        EmbeddedGraph g;
        g.v = v;
        g.edges = edges;
        g.rotation = std::move(embedding.rotation);
        fn(mask, g);
        ++emitted;
    }
    return emitted;
}

long long enumerate_small_planar_graphs(
    int v_max, const std::function<void(unsigned long long, const EmbeddedGraph&)>& fn) {
    if (v_max < 1 || v_max > 9)
        throw CapExceeded("labeled enumeration is capped at 9 vertices");
    long long total = 0;
    for (int v = 1; v <= v_max; ++v)
        total += scan_planar_graphs(v, 0, ~0ULL, fn);
    return total;
}

std::vector<Decomposition> enumerate_decompositions(const EmbeddedGraph& g,
                                                    long long node_budget) {
    const int e = static_cast<int>(g.edges.size());
    std::map<std::pair<int, int>, int> id_of;
    for (int i = 0; i < e; ++i) {
        auto key = std::minmax(g.edges[i].first, g.edges[i].second);
        id_of[{key.first, key.second}] = i;
    }
    EdgeDsu dsu(e);
    std::vector<char> in_triangle(e, 0);
    for (auto [a, b, c] : graph_triangles(g.v, g.edges)) {
        const int ab = id_of[{a, b}];
        const int ac = id_of[{a, c}];
        const int bc = id_of[{b, c}];
        in_triangle[ab] = in_triangle[ac] = in_triangle[bc] = 1;
        dsu.unite(ab, ac);
        dsu.unite(ab, bc);
    }
    std::map<int, std::vector<int>> block_map;
    for (int i = 0; i < e; ++i)
        if (in_triangle[i])
            block_map[dsu.find(i)].push_back(i);
    std::vector<std::vector<int>> blocks;
    for (auto& [root, ids] : block_map)
        blocks.push_back(ids);

    std::vector<Decomposition> out;
    if (blocks.empty()) {
        out.push_back(Decomposition{3, {}});
        return out;
    }
    // restricted-growth strings over the blocks
    const int n = static_cast<int>(blocks.size());
    std::vector<int> assign(n, 0);
    long long nodes = 0;
    while (true) {
        if (++nodes > node_budget)
            throw CapExceeded("decomposition partitions exceed budget " +
                              std::to_string(node_budget));
        const int groups = *std::max_element(assign.begin(), assign.end()) + 1;
        Decomposition d;
        d.parts.assign(groups, {});
        for (int i = 0; i < n; ++i)
            d.parts[assign[i]].insert(d.parts[assign[i]].end(), blocks[i].begin(),
                                      blocks[i].end());
        long long largest = 0;
        for (auto& part : d.parts) {
            std::sort(part.begin(), part.end());
            largest = std::max(largest, static_cast<long long>(part.size()));
        }
        d.t = std::max<long long>(3, largest);
        out.push_back(std::move(d));

        int i = n - 1;
        for (; i > 0; --i) {
            const int cap = 1 + *std::max_element(assign.begin(), assign.begin() + i);
            if (assign[i] < cap) {
                ++assign[i];
                std::fill(assign.begin() + i + 1, assign.end(), 0);
                break;
            }
            assign[i] = 0;
        }
        if (i == 0)
            break;
    }
    return out;
}

} // namespace nb
