#include "nb/witness_graph.hpp"

#include "nb/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace nb {

namespace {

const std::vector<std::vector<int>>& faces_of_card(const Nerve& nerve, int card) {
    static const std::vector<std::vector<int>> none;
    if (card >= 0 && card < static_cast<int>(nerve.faces_by_card.size()))
        return nerve.faces_by_card[card];
    if (nerve.truncated)
        throw CapTooLow("nerve cap " + std::to_string(nerve.max_card) +
                        " too low for cardinality " + std::to_string(card));
    return none;
}

// k-subsets of a (k+1)-set, i.e. drop one element; emitted in lex order.
std::vector<std::vector<int>> facets(const std::vector<int>& sigma) {
    std::vector<std::vector<int>> out;
    for (std::size_t skip = 0; skip < sigma.size(); ++skip) {
        std::vector<int> tau;
        tau.reserve(sigma.size() - 1);
        for (std::size_t i = 0; i < sigma.size(); ++i)
            if (i != skip)
                tau.push_back(sigma[i]);
        out.push_back(std::move(tau));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Witness indices per k-face tau, split into one group per component of
// A_tau when b >= 2 (a spanning tree may not jump components).
struct TauGroups {
    std::vector<int> tau;
    std::vector<std::vector<int>> groups;
};

std::vector<TauGroups> group_by_tau(const RegionFamily& family,
                                    const WitnessSet& witnesses) {
    std::map<std::vector<int>, std::vector<int>> members;
    for (std::size_t i = 0; i < witnesses.list.size(); ++i)
        for (auto& tau : facets(witnesses.list[i].sigma))
            members[tau].push_back(static_cast<int>(i));

    std::vector<TauGroups> out;
    out.reserve(members.size());
    for (auto& [tau, ids] : members) {
        TauGroups tg;
        tg.tau = tau;
        if (witnesses.b == 1) {
            tg.groups.push_back(ids);
        } else {
            auto cells = intersection_cells(family, tau);
            auto labels = family.complex->component_labels(cells);
            std::map<int, std::vector<int>> by_label;
            for (int id : ids) {
                auto it = std::lower_bound(cells.begin(), cells.end(),
                                           witnesses.list[id].cell);
                if (it == cells.end() || *it != witnesses.list[id].cell)
                    throw MalformedComplex("witness cell not in its tau intersection");
                by_label[labels[it - cells.begin()]].push_back(id);
            }
            for (auto& [label, group] : by_label)
                tg.groups.push_back(std::move(group));
        }
        out.push_back(std::move(tg));
    }
    return out;
}

std::vector<std::pair<int, int>> tree_from_prufer(const std::vector<int>& seq, int s) {
    std::vector<int> degree(s, 1);
    for (int x : seq)
        ++degree[x];
    std::set<int> leaves;
    for (int i = 0; i < s; ++i)
        if (degree[i] == 1)
            leaves.insert(i);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(s - 1);
    for (int x : seq) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(leaf, x);
        if (--degree[x] == 1)
            leaves.insert(x);
    }
    auto it = leaves.begin();
    int a = *it++;
    edges.emplace_back(a, *it);
    return edges;
}

void append_tree(WitnessGraph& g, const std::vector<int>& group,
                 const std::vector<int>& tau, TreeStrategy strategy) {
    if (group.size() < 2)
        return;
    for (std::size_t i = 1; i < group.size(); ++i) {
        WitnessEdge e;
        e.u = strategy == TreeStrategy::Path ? group[i - 1] : group[0];
        e.v = group[i];
        e.tau = tau;
        g.edges.push_back(std::move(e));
    }
}

long long saturating_mul(long long a, long long b, long long cap) {
    if (a > cap / b)
        return cap + 1;
    return a * b;
}

} // namespace

WitnessSet choose_witnesses(const RegionFamily& family, const Nerve& nerve, int k, int b) {
    if (k < 1 || b < 1)
        throw ParameterRange("choose_witnesses needs k >= 1, b >= 1");
    WitnessSet ws;
    ws.k = k;
    ws.b = b;
    for (auto& sigma : faces_of_card(nerve, k + 1)) {
        auto cells = intersection_cells(family, sigma);
        auto labels = family.complex->component_labels(cells);
        int comps = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
        if (comps > b)
            throw TooManyComponents("intersection has " + std::to_string(comps) +
                                    " components at level b = " + std::to_string(b));
        // Representative cell per component, in label order (= order of the
        // component's smallest cell id since cells are sorted).
        std::vector<int> rep(comps, -1);
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (rep[labels[i]] < 0)
                rep[labels[i]] = cells[i];
        for (int copy = 0; copy < b; ++copy) {
            Witness w;
            w.sigma = sigma;
            w.copy = copy;
            w.cell = rep[copy < comps ? copy : 0];
            ws.list.push_back(std::move(w));
        }
    }
    return ws;
}

WitnessGraph build_union_graph(const RegionFamily& family, const WitnessSet& witnesses,
                               const Nerve& nerve, TreeStrategy strategy) {
    if (nerve.n != static_cast<int>(family.sets.size()))
        throw ParameterRange("nerve does not match family");
    WitnessGraph g;
    g.k = witnesses.k;
    g.b = witnesses.b;
    g.vertices = witnesses.list;
    for (auto& tg : group_by_tau(family, witnesses)) {
        g.gamma.push_back(tg.tau);
        for (auto& group : tg.groups)
            append_tree(g, group, tg.tau, strategy);
    }
    return g;
}

EdgeIdentityReport edge_count_identity(const WitnessGraph& graph, const Nerve& nerve) {
    EdgeIdentityReport r;
    r.edges = static_cast<long long>(graph.edges.size());
    r.witnesses = static_cast<long long>(graph.vertices.size());
    r.f_ind = f_ind(nerve, graph.k - 1);
    r.expected = static_cast<long long>(graph.k + 1) * r.witnesses - graph.b * r.f_ind;
    r.exact = r.edges == r.expected;
    r.holds = graph.b == 1 ? r.exact : r.edges >= r.expected;
    r.tree_membership_ok = true;
    for (auto& w : graph.vertices) {
        int count = 0;
        for (auto& tau : graph.gamma)
            if (std::includes(w.sigma.begin(), w.sigma.end(), tau.begin(), tau.end()))
                ++count;
        if (count != graph.k + 1)
            r.tree_membership_ok = false;
    }
    return r;
}

TriangleLabelReport triangle_label_analysis(const WitnessGraph& graph) {
    if (graph.b != 1)
        throw ParameterRange("triangle labels are defined for b = 1 graphs");
    TriangleLabelReport r;
    const int n = static_cast<int>(graph.vertices.size());
    std::vector<std::set<int>> adj(n);
    for (auto& e : graph.edges) {
        adj[e.u].insert(e.v);
        adj[e.v].insert(e.u);
    }

    struct ClassData {
        std::set<int> vertices;
        std::set<std::pair<int, int>> edges;
        long long triangles = 0;
    };
    std::map<std::vector<int>, ClassData> classes;
    std::map<std::pair<int, int>, std::set<std::vector<int>>> edge_labels;

    for (int u = 0; u < n; ++u)
        for (int v : adj[u]) {
            if (v <= u)
                continue;
            for (int w : adj[u]) {
                if (w <= v || !adj[v].count(w))
                    continue;
                ++r.triangle_count;
                std::vector<int> label;
                std::set_union(graph.vertices[u].sigma.begin(), graph.vertices[u].sigma.end(),
                               graph.vertices[v].sigma.begin(), graph.vertices[v].sigma.end(),
                               std::back_inserter(label));
                std::vector<int> merged;
                std::set_union(label.begin(), label.end(),
                               graph.vertices[w].sigma.begin(), graph.vertices[w].sigma.end(),
                               std::back_inserter(merged));
                if (static_cast<int>(merged.size()) != graph.k + 2) {
                    r.labels_ok = false;
                    r.label_violations.push_back({u, v, w});
                }
                auto& cls = classes[merged];
                ++cls.triangles;
                for (int x : {u, v, w})
                    cls.vertices.insert(x);
                for (auto [a, bb] : {std::pair{u, v}, std::pair{u, w}, std::pair{v, w}}) {
                    cls.edges.insert({a, bb});
                    edge_labels[{a, bb}].insert(merged);
                }
            }
        }

    for (auto& [label, data] : classes) {
        TriangleLabelReport::LabelClass lc;
        lc.label = label;
        lc.vertices = static_cast<long long>(data.vertices.size());
        lc.edges = static_cast<long long>(data.edges.size());
        lc.triangles = data.triangles;
        if (lc.vertices > graph.k + 2 || lc.edges > 3LL * graph.k)
            r.subgraphs_ok = false;
        r.classes.push_back(std::move(lc));
    }
    for (auto& [edge, labels] : edge_labels)
        if (labels.size() > 1) {
            r.shared_edges_ok = false;
            r.edge_disjoint_ok = false;
        }
    r.pass = r.labels_ok && r.shared_edges_ok && r.subgraphs_ok && r.edge_disjoint_ok;
    return r;
}

MultiedgeReport multiedge_analysis(const WitnessGraph& graph) {
    MultiedgeReport r;
    r.edges = static_cast<long long>(graph.edges.size());
    std::map<std::pair<int, int>, long long> mult;
    for (auto& e : graph.edges) {
        auto key = std::minmax(e.u, e.v);
        ++mult[{key.first, key.second}];
    }
    r.skeleton_edges = static_cast<long long>(mult.size());
    std::vector<std::pair<int, int>> skeleton;
    skeleton.reserve(mult.size());
    for (auto& [pair, count] : mult) {
        skeleton.push_back(pair);
        r.max_multiplicity = std::max(r.max_multiplicity, count);
        if (count > graph.k + 1)
            r.multiplicity_ok = false;
        if (count >= 2 &&
            graph.vertices[pair.first].sigma != graph.vertices[pair.second].sigma)
            r.bundles_within_face = false;
    }

    const long long W = static_cast<long long>(graph.vertices.size());
    auto embedding = planar_embedding(static_cast<int>(W), skeleton);
    r.skeleton_planar = embedding.planar;
    if (r.skeleton_planar)
        r.skeleton_bound_ok = r.skeleton_edges <= 3 * W;

    std::set<std::vector<int>> distinct_sigma;
    for (auto& w : graph.vertices)
        distinct_sigma.insert(w.sigma);
    const long long f_k = static_cast<long long>(distinct_sigma.size());
    r.full_cap = 3 * W + static_cast<long long>(graph.k) * (graph.b - 1) * f_k;
    r.full_cap_ok = r.edges <= r.full_cap;
    return r;
}

TreeSearchResult search_planar_tree_choice(const RegionFamily& family,
                                           const WitnessSet& witnesses, const Nerve& nerve,
                                           long long cap) {
    if (witnesses.b != 1)
        throw ParameterRange("tree-choice search handles b = 1 only");
    if (nerve.n != static_cast<int>(family.sets.size()))
        throw ParameterRange("nerve does not match family");
    auto taus = group_by_tau(family, witnesses);

    TreeSearchResult result;
    result.combinations = 1;
    std::vector<long long> space(taus.size(), 1);
    for (std::size_t t = 0; t < taus.size(); ++t) {
        const long long s = static_cast<long long>(taus[t].groups[0].size());
        if (s >= 3) {
            space[t] = 1;
            for (long long i = 0; i < s - 2; ++i)
                space[t] = saturating_mul(space[t], s, cap);
        }
        result.combinations = saturating_mul(result.combinations, space[t], cap);
        if (result.combinations > cap)
            throw SearchSpaceExceeded("tree choice space exceeds cap " + std::to_string(cap));
    }

    std::vector<long long> choice(taus.size(), 0);
    while (true) {
        WitnessGraph g;
        g.k = witnesses.k;
        g.b = 1;
        g.vertices = witnesses.list;
        std::vector<std::pair<int, int>> edges;
        for (std::size_t t = 0; t < taus.size(); ++t) {
            g.gamma.push_back(taus[t].tau);
            const auto& group = taus[t].groups[0];
            const int s = static_cast<int>(group.size());
            if (s < 2)
                continue;
            std::vector<std::pair<int, int>> tree;
            if (s == 2) {
                tree.emplace_back(0, 1);
            } else {
                std::vector<int> seq(s - 2);
                long long code = choice[t];
                for (int i = 0; i < s - 2; ++i) {
                    seq[i] = static_cast<int>(code % s);
                    code /= s;
                }
                tree = tree_from_prufer(seq, s);
            }
            for (auto [a, b] : tree) {
                WitnessEdge e;
                e.u = std::min(group[a], group[b]);
                e.v = std::max(group[a], group[b]);
                e.tau = taus[t].tau;
                g.edges.push_back(e);
                edges.emplace_back(e.u, e.v);
            }
        }
        ++result.tested;
        if (planar_embedding(static_cast<int>(g.vertices.size()), edges).planar) {
            result.found = true;
            result.graph = std::move(g);
            return result;
        }
        // odometer: advance the last tau with room
        std::size_t t = taus.size();
        while (t > 0) {
            --t;
            if (++choice[t] < space[t])
                break;
            choice[t] = 0;
            if (t == 0)
                return result;
        }
        if (taus.empty())
            return result;
    }
}

} // namespace nb
