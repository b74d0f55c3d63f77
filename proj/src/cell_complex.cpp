#include "nb/cell_complex.hpp"

#include "nb/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace nb {

long long CellComplex::count_dim(int d) const {
    long long n = 0;
    for (const auto& c : cells)
        if (c.dim == d)
            ++n;
    return n;
}

long long CellComplex::euler() const {
    return count_dim(0) - count_dim(1) + count_dim(2);
}

void CellComplex::validate() const {
    const int n = size();
    for (int i = 0; i < n; ++i) {
        const Cell& c = cells[i];
        if (c.dim < 0 || c.dim > 2)
            throw MalformedComplex("cell " + std::to_string(i) + ": dimension out of range");
        for (int b : c.boundary) {
            if (b < 0 || b >= n)
                throw MalformedComplex("cell " + std::to_string(i) + ": boundary id out of range");
            if (cells[b].dim != c.dim - 1)
                throw MalformedComplex("cell " + std::to_string(i) +
                                       ": boundary cell of wrong dimension");
        }
        if (c.dim == 0 && !c.boundary.empty())
            throw MalformedComplex("cell " + std::to_string(i) + ": vertex with boundary");
        if (c.dim == 1) {
            if (c.boundary.size() != 2 || c.boundary[0] == c.boundary[1])
                throw MalformedComplex("cell " + std::to_string(i) +
                                       ": edge needs two distinct endpoints");
        }
        if (c.dim == 2) {
            const auto& cyc = c.boundary;
            if (cyc.size() < 3)
                throw MalformedComplex("cell " + std::to_string(i) + ": face cycle too short");
            std::set<int> seen(cyc.begin(), cyc.end());
            if (seen.size() != cyc.size())
                throw MalformedComplex("cell " + std::to_string(i) + ": repeated edge in face");
            for (size_t e = 0; e < cyc.size(); ++e) {
                const auto& cur = cells[cyc[e]].boundary;
                const auto& nxt = cells[cyc[(e + 1) % cyc.size()]].boundary;
                bool share = cur[0] == nxt[0] || cur[0] == nxt[1] || cur[1] == nxt[0] ||
                             cur[1] == nxt[1];
                if (!share)
                    throw MalformedComplex("cell " + std::to_string(i) +
                                           ": face boundary is not a closed cycle");
            }
        }
    }
}

bool CellComplex::is_closed_set(const std::vector<int>& cell_set) const {
    auto has = [&](int id) {
        return std::binary_search(cell_set.begin(), cell_set.end(), id);
    };
    for (int id : cell_set)
        for (int b : cells[id].boundary)
            if (!has(b))
                return false;
    return true;
}

std::vector<int> CellComplex::closure(std::vector<int> cell_set) const {
    std::set<int> acc(cell_set.begin(), cell_set.end());
    std::vector<int> work(cell_set.begin(), cell_set.end());
    while (!work.empty()) {
        int id = work.back();
        work.pop_back();
        for (int b : cells[id].boundary)
            if (acc.insert(b).second)
                work.push_back(b);
    }
    return {acc.begin(), acc.end()};
}

namespace {

struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

int CellComplex::component_count(const std::vector<int>& cell_set) const {
    if (cell_set.empty())
        return 0;
    const int n = static_cast<int>(cell_set.size());
    auto pos = [&](int id) {
        auto it = std::lower_bound(cell_set.begin(), cell_set.end(), id);
        return (it != cell_set.end() && *it == id)
                   ? static_cast<int>(it - cell_set.begin())
                   : -1;
    };
    DisjointSet dsu(n);
    for (int i = 0; i < n; ++i)
        for (int b : cells[cell_set[i]].boundary)
            if (int j = pos(b); j >= 0)
                dsu.unite(i, j);
    std::set<int> roots;
    for (int i = 0; i < n; ++i)
        roots.insert(dsu.find(i));
    return static_cast<int>(roots.size());
}

std::vector<int> CellComplex::component_labels(const std::vector<int>& cell_set) const {
    const int n = static_cast<int>(cell_set.size());
    auto pos = [&](int id) {
        auto it = std::lower_bound(cell_set.begin(), cell_set.end(), id);
        return (it != cell_set.end() && *it == id)
                   ? static_cast<int>(it - cell_set.begin())
                   : -1;
    };
    DisjointSet dsu(n);
    for (int i = 0; i < n; ++i)
        for (int b : cells[cell_set[i]].boundary)
            if (int j = pos(b); j >= 0)
                dsu.unite(i, j);
    std::vector<int> label(n, -1);
    int next = 0;
    for (int i = 0; i < n; ++i) {
        int r = dsu.find(i);
        if (label[r] < 0)
            label[r] = next++;
    }
    std::vector<int> out(n);
    for (int i = 0; i < n; ++i)
        out[i] = label[dsu.find(i)];
    return out;
}

bool CellComplex::is_single_vertex(const std::vector<int>& cell_set) const {
    return cell_set.size() == 1 && cells[cell_set[0]].dim == 0;
}

CellComplex complex_from_arrangement(const Arrangement& arr) {
    CellComplex cx;
    const int V = static_cast<int>(arr.vertices.size());
    const int E = static_cast<int>(arr.half.size() / 2);
    cx.cells.reserve(V + E + arr.faces.size());

    for (int v = 0; v < V; ++v) {
        Cell c;
        c.dim = 0;
        c.lines = arr.vertex_lines[v];
        c.pos = arr.vertices[v];
        cx.cells.push_back(std::move(c));
    }
    for (int e = 0; e < E; ++e) {
        Cell c;
        c.dim = 1;
        c.boundary = {arr.half[2 * e].origin, arr.half[2 * e + 1].origin};
        if (arr.half[2 * e].line >= 0)
            c.lines = {arr.half[2 * e].line};
        cx.cells.push_back(std::move(c));
    }
    for (size_t f = 0; f < arr.faces.size(); ++f) {
        if (arr.faces[f].outer)
            continue;
        Cell c;
        c.dim = 2;
        for (int h : arr.faces[f].edges)
            c.boundary.push_back(V + h / 2);
        cx.cells.push_back(std::move(c));
    }
    return cx;
}

CellComplex stellar_subdivide(const Arrangement& arr) {
    CellComplex cx;
    const int V = static_cast<int>(arr.vertices.size());
    const int E = static_cast<int>(arr.half.size() / 2);

    for (int v = 0; v < V; ++v) {
        Cell c;
        c.dim = 0;
        c.lines = arr.vertex_lines[v];
        c.pos = arr.vertices[v];
        cx.cells.push_back(std::move(c));
    }
    for (int e = 0; e < E; ++e) {
        Cell c;
        c.dim = 1;
        c.boundary = {arr.half[2 * e].origin, arr.half[2 * e + 1].origin};
        if (arr.half[2 * e].line >= 0)
            c.lines = {arr.half[2 * e].line};
        cx.cells.push_back(std::move(c));
    }

    int triangle_index = 0;
    for (size_t f = 0; f < arr.faces.size(); ++f) {
        const auto& face = arr.faces[f];
        if (face.outer)
            continue;
        bool is_triangle = arr.bounded_face(static_cast<int>(f)) && face.edges.size() == 3;
        if (!is_triangle) {
            Cell c;
            c.dim = 2;
            for (int h : face.edges)
                c.boundary.push_back(V + h / 2);
            cx.cells.push_back(std::move(c));
            continue;
        }

        const int t = triangle_index++;
        std::array<int, 3> corner{};
        for (int i = 0; i < 3; ++i)
            corner[i] = arr.half[face.edges[i]].origin;

        Cell bary;
        bary.dim = 0;
        bary.triangle = t;
        bary.pos = Point{(arr.vertices[corner[0]].x + arr.vertices[corner[1]].x +
                          arr.vertices[corner[2]].x) / 3,
                         (arr.vertices[corner[0]].y + arr.vertices[corner[1]].y +
                          arr.vertices[corner[2]].y) / 3};
        const int bary_id = cx.size();
        cx.cells.push_back(std::move(bary));

        std::array<int, 3> spoke_of{}; // spoke cell id per corner slot
        for (int i = 0; i < 3; ++i) {
            Cell s;
            s.dim = 1;
            s.boundary = {corner[i], bary_id};
            s.triangle = t;
            spoke_of[i] = cx.size();
            cx.cells.push_back(std::move(s));
        }
        for (int i = 0; i < 3; ++i) {
            int h = face.edges[i];
            // base edge runs corner[i] -> corner[(i+1)%3] along the orbit
            Cell third;
            third.dim = 2;
            third.boundary = {V + h / 2, spoke_of[(i + 1) % 3], spoke_of[i]};
            third.triangle = t;
            third.base_line = arr.half[h].line;
            cx.cells.push_back(std::move(third));
        }
    }
    return cx;
}

void RegionFamily::validate() const {
    if (!complex)
        throw MalformedComplex("region family without a complex");
    if (names.size() != sets.size())
        throw MalformedComplex("region family name/set count mismatch");
    for (size_t i = 0; i < sets.size(); ++i) {
        const auto& s = sets[i];
        if (!std::is_sorted(s.begin(), s.end()) ||
            std::adjacent_find(s.begin(), s.end()) != s.end())
            throw MalformedComplex("set '" + names[i] + "' is not sorted-unique");
        for (int id : s)
            if (id < 0 || id >= complex->size())
                throw MalformedComplex("set '" + names[i] + "' references a missing cell");
        if (!complex->is_closed_set(s))
            throw MalformedComplex("set '" + names[i] + "' is not closed");
    }
}

RegionFamily build_line_triangle_family(std::shared_ptr<const CellComplex> complex,
                                        int num_lines) {
    if (num_lines < 1)
        throw ParameterRange("family requires at least one line");
    const CellComplex& cx = *complex;

    std::vector<std::vector<int>> on_line(num_lines);
    std::vector<std::vector<int>> thirds_on(num_lines);
    for (int id = 0; id < cx.size(); ++id) {
        const Cell& c = cx.cells[id];
        for (int l : c.lines) {
            if (l < 0 || l >= num_lines)
                throw MalformedComplex("cell tagged with unknown line " + std::to_string(l));
            on_line[l].push_back(id);
        }
        if (c.dim == 2 && c.triangle >= 0) {
            if (c.base_line < 0 || c.base_line >= num_lines)
                throw MalformedComplex("subdivision face without a valid base line");
            thirds_on[c.base_line].push_back(id);
        }
    }
    for (int l = 0; l < num_lines; ++l)
        if (on_line[l].empty())
            throw MalformedComplex("complex has no cells on line " + std::to_string(l) +
                                   " (missing provenance?)");

    RegionFamily family;
    family.complex = complex;
    family.names.push_back("A1");
    std::vector<int> all;
    for (const auto& v : on_line)
        all.insert(all.end(), v.begin(), v.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    family.sets.push_back(std::move(all));

    for (int l = 0; l < num_lines; ++l) {
        std::vector<int> s = on_line[l];
        s.insert(s.end(), thirds_on[l].begin(), thirds_on[l].end());
        s = cx.closure(std::move(s));
        family.names.push_back("A" + std::to_string(l + 2));
        family.sets.push_back(std::move(s));
    }
    family.validate();
    return family;
}

RegionFamily build_four_set_example() {
    auto cx = std::make_shared<CellComplex>();
    auto add = [&](Cell c) {
        cx->cells.push_back(std::move(c));
        return cx->size() - 1;
    };
    auto vertex = [&](Rat x, Rat y, int tri) {
        Cell c;
        c.dim = 0;
        c.triangle = tri;
        c.pos = Point{std::move(x), std::move(y)};
        return add(std::move(c));
    };
    auto edge = [&](int u, int v, int tri) {
        Cell c;
        c.dim = 1;
        c.boundary = {u, v};
        c.triangle = tri;
        return add(std::move(c));
    };
    auto face = [&](std::vector<int> cyc) {
        Cell c;
        c.dim = 2;
        c.boundary = std::move(cyc);
        c.triangle = 0;
        return add(std::move(c));
    };

    int a = vertex(Rat(0), Rat(0), -1);
    int b = vertex(Rat(1), Rat(0), -1);
    int c = vertex(Rat(0), Rat(1), -1);
    int z = vertex(Rat(1, 3), Rat(1, 3), 0);
    int ab = edge(a, b, -1);
    int bc = edge(b, c, -1);
    int ca = edge(c, a, -1);
    int az = edge(a, z, 0);
    int bz = edge(b, z, 0);
    int cz = edge(c, z, 0);
    int t_ab = face({ab, bz, az});
    int t_bc = face({bc, cz, bz});
    int t_ca = face({ca, az, cz});

    RegionFamily family;
    family.complex = cx;
    family.names = {"A1", "A2", "A3", "A4"};
    family.sets.push_back(cx->closure({t_ab}));
    family.sets.push_back(cx->closure({t_bc}));
    family.sets.push_back(cx->closure({t_ca}));
    family.sets.push_back(std::vector<int>{a, b, c, ab, bc, ca});
    family.validate();
    cx->validate();
    return family;
}

std::string family_to_json(const RegionFamily& family) {
    nlohmann::ordered_json root;
    root["schema"] = "nerve-bounds/1";
    root["kind"] = "region-family";
    root["n"] = family.n();
    nlohmann::ordered_json cells = nlohmann::ordered_json::array();
    for (int id = 0; id < family.complex->size(); ++id) {
        const Cell& c = family.complex->cells[id];
        nlohmann::ordered_json jc;
        jc["id"] = id;
        jc["dim"] = c.dim;
        jc["boundary"] = c.boundary;
        if (c.pos)
            jc["pos"] = {format_rational(c.pos->x), format_rational(c.pos->y)};
        cells.push_back(std::move(jc));
    }
    root["complex"]["cells"] = std::move(cells);
    nlohmann::ordered_json sets = nlohmann::ordered_json::array();
    for (int i = 0; i < family.n(); ++i) {
        nlohmann::ordered_json js;
        js["name"] = family.names[i];
        js["cells"] = family.sets[i];
        sets.push_back(std::move(js));
    }
    root["sets"] = std::move(sets);
    return root.dump(2);
}

RegionFamily family_from_json(const std::string& text) {
    nlohmann::json root;
    try {
        root = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("family file is not valid JSON: ") + e.what());
    }
    try {
        if (root.value("kind", "") != "region-family")
            throw ParseError("family file kind must be 'region-family'");
        auto cx = std::make_shared<CellComplex>();
        const auto& cells = root.at("complex").at("cells");
        cx->cells.reserve(cells.size());
        for (size_t i = 0; i < cells.size(); ++i) {
            const auto& jc = cells[i];
            if (jc.at("id").get<long long>() != static_cast<long long>(i))
                throw ParseError("complex cells must be listed by id, 0..N-1");
            Cell c;
            c.dim = jc.at("dim").get<int>();
            c.boundary = jc.at("boundary").get<std::vector<int>>();
            if (jc.contains("pos")) {
                const auto& p = jc.at("pos");
                c.pos = Point{parse_rational(p.at(0).get<std::string>()),
                              parse_rational(p.at(1).get<std::string>())};
            }
            cx->cells.push_back(std::move(c));
        }
        try {
            cx->validate();
        } catch (const MalformedComplex& e) {
            throw ParseError(std::string("malformed complex: ") + e.what());
        }

        RegionFamily family;
        family.complex = cx;
        for (const auto& js : root.at("sets")) {
            family.names.push_back(js.at("name").get<std::string>());
            auto ids = js.at("cells").get<std::vector<int>>();
            std::sort(ids.begin(), ids.end());
            ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
            family.sets.push_back(std::move(ids));
        }
        try {
            family.validate();
        } catch (const MalformedComplex& e) {
            throw ParseError(std::string("invalid region family: ") + e.what());
        }
        return family;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("family file structure: ") + e.what());
    }
}

} // namespace nb
