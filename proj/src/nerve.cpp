#include "nb/nerve.hpp"

#include "nb/errors.hpp"

#include <algorithm>
#include <set>

namespace nb {

long long Nerve::f(int k) const {
    if (k < 0)
        throw ParameterRange("f_k needs k >= 0");
    if (k + 1 > max_card) {
        if (truncated)
            throw CapTooLow("nerve truncated below cardinality " + std::to_string(k + 1));
        return 0;
    }
    return static_cast<long long>(faces_by_card[k + 1].size());
}

std::vector<long long> Nerve::f_vector() const {
    std::vector<long long> out;
    for (int k = 0; k + 1 <= max_card; ++k)
        out.push_back(f(k));
    return out;
}

bool Nerve::has_face(const std::vector<int>& sigma) const {
    int c = static_cast<int>(sigma.size());
    if (c < 1 || c > max_card)
        return false;
    const auto& level = faces_by_card[c];
    return std::binary_search(level.begin(), level.end(), sigma);
}

Nerve compute_nerve(const RegionFamily& family, int max_card) {
    if (max_card < 1)
        throw ParameterRange("compute_nerve needs max_card >= 1");
    Nerve nerve;
    nerve.n = family.n();
    nerve.max_card = std::min(max_card, nerve.n);
    nerve.faces_by_card.assign(nerve.max_card + 1, {});

    struct Entry {
        std::vector<int> sigma;
        std::vector<int> cells;
    };
    std::vector<Entry> level;
    for (int i = 0; i < family.n(); ++i)
        if (!family.sets[i].empty())
            level.push_back({{i}, family.sets[i]});

    for (int card = 1; card <= nerve.max_card; ++card) {
        for (const auto& e : level)
            nerve.faces_by_card[card].push_back(e.sigma);
        bool last = card == nerve.max_card;
        std::vector<Entry> next;
        for (const auto& e : level) {
            for (int j = e.sigma.back() + 1; j < family.n(); ++j) {
                std::vector<int> cells;
                std::set_intersection(e.cells.begin(), e.cells.end(),
                                      family.sets[j].begin(), family.sets[j].end(),
                                      std::back_inserter(cells));
                if (cells.empty())
                    continue;
                if (last) {
                    nerve.truncated = true;
                    break;
                }
                auto sigma = e.sigma;
                sigma.push_back(j);
                next.push_back({std::move(sigma), std::move(cells)});
            }
            if (last && nerve.truncated)
                break;
        }
        level = std::move(next);
    }
    return nerve;
}

long long f_ind(const Nerve& nerve, int k) {
    if (k < 0)
        throw ParameterRange("f_ind needs k >= 0");
    if (k + 2 > nerve.max_card) {
        if (nerve.truncated)
            throw CapTooLow("nerve truncated below cardinality " + std::to_string(k + 2));
        return 0;
    }
    std::set<std::vector<int>> covered;
    for (const auto& sigma : nerve.faces_by_card[k + 2]) {
        for (size_t drop = 0; drop < sigma.size(); ++drop) {
            std::vector<int> tau;
            tau.reserve(sigma.size() - 1);
            for (size_t i = 0; i < sigma.size(); ++i)
                if (i != drop)
                    tau.push_back(sigma[i]);
            covered.insert(std::move(tau));
        }
    }
    return static_cast<long long>(covered.size());
}

std::vector<int> intersection_cells(const RegionFamily& family,
                                    const std::vector<int>& sigma) {
    if (sigma.empty())
        throw ParameterRange("intersection over an empty index set");
    for (int i : sigma)
        if (i < 0 || i >= family.n())
            throw ParameterRange("set index out of range");
    std::vector<int> acc = family.sets[sigma[0]];
    for (size_t t = 1; t < sigma.size() && !acc.empty(); ++t) {
        std::vector<int> next;
        std::set_intersection(acc.begin(), acc.end(), family.sets[sigma[t]].begin(),
                              family.sets[sigma[t]].end(), std::back_inserter(next));
        acc = std::move(next);
    }
    return acc;
}

int component_count(const RegionFamily& family, const std::vector<int>& sigma) {
    return family.complex->component_count(intersection_cells(family, sigma));
}

namespace {

void require_level_params(int k, int b) {
    if (b < 1)
        throw ParameterRange("b must be at least 1");
    if (b == 1 && k < 2)
        throw ParameterRange("k must be at least 2 when b = 1");
    if (b >= 2 && k <= 2 * b)
        throw ParameterRange("k must exceed 2b when b >= 2");
}

} // namespace

HypothesisReport check_intersection_hypotheses(const RegionFamily& family, int k, int b) {
    require_level_params(k, b);
    HypothesisReport rep;
    rep.k = k;
    rep.b = b;

    Nerve nerve = compute_nerve(family, k + 2);
    if (nerve.max_card >= k + 2)
        rep.cardinality_violations = nerve.faces_by_card[k + 2];
    if (nerve.truncated && nerve.max_card < k + 2)
        throw CapTooLow("hypothesis check could not reach cardinality k+2");
    rep.level_k_plus_1_empty = rep.cardinality_violations.empty();

    for (int card : {k, k + 1}) {
        if (card > nerve.max_card)
            continue;
        for (const auto& sigma : nerve.faces_by_card[card]) {
            auto cells = intersection_cells(family, sigma);
            int comps = family.complex->component_count(cells);
            if (comps > b)
                rep.component_violations.push_back({sigma, comps});
            if (b == 1 && family.complex->is_single_vertex(cells))
                ++rep.single_point_count;
        }
    }
    rep.components_ok = rep.component_violations.empty();
    rep.pass = rep.level_k_plus_1_empty && rep.components_ok;
    return rep;
}

namespace {

Int binomial(long long a, long long b) {
    if (b < 0 || a < 0 || b > a)
        return 0;
    b = std::min(b, a - b);
    Int num = 1;
    for (long long i = 0; i < b; ++i) {
        num *= Int(a - i);
        num /= Int(i + 1); // exact at each step: product of j consecutive ints
    }
    return num;
}

} // namespace

Int kalai_eckhoff_bound(int n, int d, int r, int k) {
    if (d < 1 || r < 1 || n < 1)
        throw ParameterRange("kalai_eckhoff_bound needs n, d, r >= 1");
    if (k < d || k > d + r - 1)
        throw ParameterRange("kalai_eckhoff_bound needs d <= k <= d+r-1");
    Int total = 0;
    for (int j = k; j <= d + r - 1; ++j)
        total += binomial(j - d, k - d) * binomial(n - j + d - 1, d);
    return total;
}

Rat planar_bound_constant(int k, int b) {
    require_level_params(k, b);
    if (b == 1)
        return Rat(4 * k + 1, 4 * k * k - 7 * k + 1);
    return Rat(b, k - 2 * b);
}

BoundReport check_bound(const Nerve& nerve, int k, int b, std::optional<int> chi) {
    require_level_params(k, b);
    if (chi && *chi > 2)
        throw ParameterRange("Euler characteristic of a surface is at most 2");
    if (nerve.max_card < k + 1 && nerve.truncated)
        throw CapTooLow("nerve truncated below cardinality k+1");

    BoundReport rep;
    rep.k = k;
    rep.b = b;
    rep.chi = chi;
    rep.f = nerve.f_vector();
    rep.f_k = nerve.f(k);
    rep.f_ind_k_minus_1 = f_ind(nerve, k - 1);
    const Rat find(rep.f_ind_k_minus_1);

    if (!chi) {
        rep.constant = planar_bound_constant(k, b);
        rep.additive = 0;
        rep.rhs = rep.constant * find;
        rep.constant_kind = "paper";
    } else if (b == 1) {
        // two proof branches; the graph satisfies at least one, so the
        // certified bound is their maximum
        const Rat t(3 * (k + 2 - *chi));
        const Rat ct = Rat(12) * t / (Rat(4) * t + 3);
        Rat rhs1 = (find - ct * (*chi)) / (Rat(k + 1) - ct);
        Rat rhs2 = (find + t) / Rat(k + 1);
        rep.constant_kind = "paper";
        if (rhs1 >= rhs2) {
            rep.constant = 1 / (Rat(k + 1) - ct);
            rep.additive = -ct * (*chi) / (Rat(k + 1) - ct);
            rep.rhs = rhs1;
            rep.alt_rhs = rhs2;
        } else {
            rep.constant = Rat(1, k + 1);
            rep.additive = t / Rat(k + 1);
            rep.rhs = rhs2;
            rep.alt_rhs = rhs1;
        }
    } else {
        rep.constant = Rat(b, k - 2 * b);
        rep.additive = Rat(-3 * (*chi), k - 2 * b);
        rep.rhs = rep.constant * find + rep.additive;
        rep.constant_kind = "proof-derived";
    }
    rep.margin = rep.rhs - Rat(rep.f_k);
    rep.satisfied = rep.margin >= 0;
    return rep;
}

} // namespace nb
