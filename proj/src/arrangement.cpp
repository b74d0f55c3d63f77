#include "nb/arrangement.hpp"

#include "nb/errors.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace nb {

long long Arrangement::crossing_count() const {
    long long n = 0;
    for (const auto& vl : vertex_lines)
        if (vl.size() >= 2) ++n;
    return n;
}

SimplicityReport verify_simple(const std::vector<Line>& lines) {
    if (lines.size() < 2)
        throw ParameterRange("verify_simple requires at least 2 lines");
    SimplicityReport rep;
    const int m = static_cast<int>(lines.size());
    std::map<Point, std::vector<int>> through;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            if (lines[i] == lines[j]) {
                rep.duplicate_pairs.emplace_back(i, j);
                continue;
            }
            if (parallel(lines[i], lines[j])) {
                rep.parallel_pairs.emplace_back(i, j);
                continue;
            }
            Point p = *intersect_lines(lines[i], lines[j]);
            auto& v = through[p];
            for (int idx : {i, j})
                if (std::find(v.begin(), v.end(), idx) == v.end())
                    v.push_back(idx);
        }
    }
    for (auto& [p, ls] : through)
        if (ls.size() >= 3)
            rep.concurrencies.push_back({p, ls});
    rep.ok = rep.duplicate_pairs.empty() && rep.parallel_pairs.empty() &&
             rep.concurrencies.empty();
    return rep;
}

namespace {

struct VertexRegistry {
    std::vector<Point>& verts;
    std::vector<std::vector<int>>& vlines;
    std::map<Point, int> index;

    int add(const Point& p) {
        auto [it, inserted] = index.try_emplace(p, static_cast<int>(verts.size()));
        if (inserted) {
            verts.push_back(p);
            vlines.emplace_back();
        }
        return it->second;
    }
    void tag(int v, int line) {
        auto& t = vlines[v];
        if (std::find(t.begin(), t.end(), line) == t.end())
            t.push_back(line);
    }
};

} // namespace

Arrangement build_arrangement(const std::vector<Line>& lines) {
    auto rep = verify_simple(lines);
    if (!rep.ok) {
        std::ostringstream msg;
        msg << "arrangement input is not simple:";
        if (!rep.duplicate_pairs.empty())
            msg << " duplicates=" << rep.duplicate_pairs.size();
        if (!rep.parallel_pairs.empty())
            msg << " parallels=" << rep.parallel_pairs.size();
        if (!rep.concurrencies.empty())
            msg << " concurrencies=" << rep.concurrencies.size();
        throw NotSimple(msg.str());
    }

    const int m = static_cast<int>(lines.size());
    Arrangement arr;
    arr.lines = lines;
    VertexRegistry reg{arr.vertices, arr.vertex_lines, {}};
    std::vector<std::vector<int>> on_line(m);

    bool first = true;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            Point p = *intersect_lines(lines[i], lines[j]);
            int v = reg.add(p);
            reg.tag(v, i);
            reg.tag(v, j);
            on_line[i].push_back(v);
            on_line[j].push_back(v);
            if (first) {
                arr.frame_lo_x = arr.frame_hi_x = p.x;
                arr.frame_lo_y = arr.frame_hi_y = p.y;
                first = false;
            } else {
                arr.frame_lo_x = std::min(arr.frame_lo_x, p.x);
                arr.frame_hi_x = std::max(arr.frame_hi_x, p.x);
                arr.frame_lo_y = std::min(arr.frame_lo_y, p.y);
                arr.frame_hi_y = std::max(arr.frame_hi_y, p.y);
            }
        }
    }
    arr.frame_lo_x -= 1;
    arr.frame_lo_y -= 1;
    arr.frame_hi_x += 1;
    arr.frame_hi_y += 1;

    const Line frame_sides[4] = {
        make_line(Rat(1), Rat(0), arr.frame_lo_x), make_line(Rat(1), Rat(0), arr.frame_hi_x),
        make_line(Rat(0), Rat(1), arr.frame_lo_y), make_line(Rat(0), Rat(1), arr.frame_hi_y)};
    auto in_frame = [&](const Point& p) {
        return p.x >= arr.frame_lo_x && p.x <= arr.frame_hi_x && p.y >= arr.frame_lo_y &&
               p.y <= arr.frame_hi_y;
    };

    for (int i = 0; i < m; ++i) {
        std::vector<Point> hits;
        for (const auto& side : frame_sides) {
            if (parallel(lines[i], side))
                continue;
            Point p = *intersect_lines(lines[i], side);
            if (in_frame(p))
                hits.push_back(p);
        }
        std::sort(hits.begin(), hits.end());
        hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
        if (hits.size() != 2)
            throw Error("internal: line does not meet the frame in exactly 2 points");
        for (const auto& p : hits) {
            int v = reg.add(p);
            reg.tag(v, i);
            on_line[i].push_back(v);
        }
    }

    reg.add(Point{arr.frame_lo_x, arr.frame_lo_y});
    reg.add(Point{arr.frame_hi_x, arr.frame_lo_y});
    reg.add(Point{arr.frame_hi_x, arr.frame_hi_y});
    reg.add(Point{arr.frame_lo_x, arr.frame_hi_y});

    struct Seg {
        int u, v, line;
    };
    std::vector<Seg> segs;

    for (int i = 0; i < m; ++i) {
        // order along the line by the exact parameter <p, (-b, a)>
        auto key = [&](int v) { return arr.lines[i].a * arr.vertices[v].y - arr.lines[i].b * arr.vertices[v].x; };
        auto& vs = on_line[i];
        std::sort(vs.begin(), vs.end(), [&](int u, int v) { return key(u) < key(v); });
        for (size_t t = 0; t + 1 < vs.size(); ++t)
            segs.push_back({vs[t], vs[t + 1], i});
    }

    const int V = static_cast<int>(arr.vertices.size());
    struct SideSpec {
        bool vertical;
        Rat coord;
    };
    const SideSpec sides[4] = {{true, arr.frame_lo_x},
                               {true, arr.frame_hi_x},
                               {false, arr.frame_lo_y},
                               {false, arr.frame_hi_y}};
    for (const auto& side : sides) {
        std::vector<int> vs;
        for (int v = 0; v < V; ++v) {
            const Point& p = arr.vertices[v];
            if ((side.vertical ? p.x : p.y) == side.coord)
                vs.push_back(v);
        }
        std::sort(vs.begin(), vs.end(), [&](int u, int v) {
            const Rat& a = side.vertical ? arr.vertices[u].y : arr.vertices[u].x;
            const Rat& b = side.vertical ? arr.vertices[v].y : arr.vertices[v].x;
            return a < b;
        });
        for (size_t t = 0; t + 1 < vs.size(); ++t)
            segs.push_back({vs[t], vs[t + 1], -1});
    }

    arr.half.resize(2 * segs.size());
    for (size_t s = 0; s < segs.size(); ++s) {
        int h1 = static_cast<int>(2 * s), h2 = h1 + 1;
        arr.half[h1] = HalfEdge{segs[s].u, h2, -1, -1, -1, segs[s].line};
        arr.half[h2] = HalfEdge{segs[s].v, h1, -1, -1, -1, segs[s].line};
    }

    // rotation system: outgoing half-edges sorted counterclockwise
    std::vector<std::vector<int>> out(V);
    for (size_t h = 0; h < arr.half.size(); ++h)
        out[arr.half[h].origin].push_back(static_cast<int>(h));
    std::vector<Direction> hdir(arr.half.size(), Direction{0, 0});
    for (size_t h = 0; h < arr.half.size(); ++h) {
        const Point& o = arr.vertices[arr.half[h].origin];
        const Point& e = arr.vertices[arr.head(static_cast<int>(h))];
        hdir[h] = Direction::of(e.x - o.x, e.y - o.y);
    }
    std::vector<int> rot_pos(arr.half.size(), -1);
    for (int v = 0; v < V; ++v) {
        auto& o = out[v];
        std::sort(o.begin(), o.end(), [&](int a, int b) { return angle_less(hdir[a], hdir[b]); });
        for (size_t idx = 0; idx < o.size(); ++idx)
            rot_pos[o[idx]] = static_cast<int>(idx);
    }
    for (size_t h = 0; h < arr.half.size(); ++h) {
        int t = arr.half[h].twin;
        int v = arr.half[t].origin;
        const auto& o = out[v];
        int deg = static_cast<int>(o.size());
        int nxt = o[(rot_pos[t] + deg - 1) % deg];
        arr.half[h].next = nxt;
        arr.half[nxt].prev = static_cast<int>(h);
    }

    // face extraction with exact signed area to spot the single outer face
    int outer_count = 0;
    for (size_t h0 = 0; h0 < arr.half.size(); ++h0) {
        if (arr.half[h0].face != -1)
            continue;
        FaceRec face;
        int f = static_cast<int>(arr.faces.size());
        Rat area2 = 0;
        int h = static_cast<int>(h0);
        do {
            arr.half[h].face = f;
            face.edges.push_back(h);
            if (arr.half[h].line == -1)
                face.touches_frame = true;
            const Point& o = arr.vertices[arr.half[h].origin];
            const Point& e = arr.vertices[arr.head(h)];
            area2 += o.x * e.y - e.x * o.y;
            h = arr.half[h].next;
        } while (h != static_cast<int>(h0));
        if (area2 < 0) {
            face.outer = true;
            arr.outer_face = f;
            ++outer_count;
        }
        arr.faces.push_back(std::move(face));
    }
    if (outer_count != 1)
        throw Error("internal: expected exactly one outer face");

    // exact Euler and crossing-count identities for the framed complex
    long long v_cnt = V;
    long long e_cnt = static_cast<long long>(segs.size());
    long long f_cnt = static_cast<long long>(arr.faces.size());
    if (v_cnt - e_cnt + f_cnt != 2)
        throw Error("internal: framed Euler identity violated");
    if (arr.crossing_count() != static_cast<long long>(m) * (m - 1) / 2)
        throw Error("internal: crossing count identity violated");

    return arr;
}

long long bounded_triangle_count(const Arrangement& arr) {
    long long t = 0;
    for (size_t f = 0; f < arr.faces.size(); ++f)
        if (arr.bounded_face(static_cast<int>(f)) && arr.faces[f].edges.size() == 3)
            ++t;
    return t;
}

namespace {

struct FrameFaceInfo {
    int face = -1;
    long long finite_edges = 0;
    // outward ray directions with the supporting input line of each
    std::array<std::pair<Direction, int>, 2> rays{
        std::pair<Direction, int>{Direction{0, 0}, -1},
        std::pair<Direction, int>{Direction{0, 0}, -1}};
    int finite_line = -1; // line of the unique finite edge when finite_edges == 1
};

} // namespace

ProjectiveCensus projective_census(const Arrangement& arr) {
    const int m = static_cast<int>(arr.lines.size());
    ProjectiveCensus census;
    census.per_line_triangles.assign(m, 0);

    long long bounded_faces = 0;
    for (size_t f = 0; f < arr.faces.size(); ++f) {
        if (!arr.bounded_face(static_cast<int>(f)))
            continue;
        ++bounded_faces;
        if (arr.faces[f].edges.size() == 3) {
            ++census.triangles;
            for (int h : arr.faces[f].edges)
                ++census.per_line_triangles[arr.half[h].line];
        }
    }

    std::map<std::pair<Direction, Direction>, FrameFaceInfo> by_rays;
    long long frame_faces = 0;
    for (size_t f = 0; f < arr.faces.size(); ++f) {
        const auto& face = arr.faces[f];
        if (face.outer || !face.touches_frame)
            continue;
        ++frame_faces;
        const auto& orbit = face.edges;
        const int n = static_cast<int>(orbit.size());
        FrameFaceInfo info;
        info.face = static_cast<int>(f);
        int ray_in = -1, ray_out = -1;
        long long line_edges = 0;
        for (int i = 0; i < n; ++i) {
            int h = orbit[i];
            if (arr.half[h].line == -1)
                continue;
            ++line_edges;
            if (arr.half[orbit[(i + 1) % n]].line == -1)
                ray_in = h;
            if (arr.half[orbit[(i + n - 1) % n]].line == -1)
                ray_out = h;
        }
        if (ray_in == -1 || ray_out == -1)
            throw Error("internal: frame face without ray edges");
        info.finite_edges = line_edges - 2;
        auto dir_of = [&](int h, bool flip) {
            const Point& o = arr.vertices[arr.half[h].origin];
            const Point& e = arr.vertices[arr.head(h)];
            Direction d = Direction::of(e.x - o.x, e.y - o.y);
            return flip ? d.negated() : d;
        };
        info.rays[0] = {dir_of(ray_in, false), arr.half[ray_in].line};
        info.rays[1] = {dir_of(ray_out, true), arr.half[ray_out].line};
        if (info.finite_edges == 1) {
            for (int i = 0; i < n; ++i) {
                int h = orbit[i];
                if (arr.half[h].line != -1 && h != ray_in && h != ray_out)
                    info.finite_line = arr.half[h].line;
            }
        }
        if (info.rays[1].first < info.rays[0].first)
            std::swap(info.rays[0], info.rays[1]);
        auto key = std::make_pair(info.rays[0].first, info.rays[1].first);
        if (!by_rays.emplace(key, info).second)
            throw Error("internal: duplicate unbounded face ray signature");
    }

    long long glued = 0;
    for (const auto& [key, info] : by_rays) {
        Direction na = key.first.negated(), nb = key.second.negated();
        auto negkey = na < nb ? std::make_pair(na, nb) : std::make_pair(nb, na);
        auto it = by_rays.find(negkey);
        if (it == by_rays.end())
            throw Error("internal: unmatched unbounded face in antipodal gluing");
        const auto& other = it->second;
        if (other.face == info.face)
            throw Error("internal: unbounded face glued to itself");
        if (other.face < info.face)
            continue; // each pair once
        // antipodal rays must continue along the same input lines
        for (const auto& [d, line] : info.rays) {
            bool matched = false;
            for (const auto& [d2, line2] : other.rays)
                if (d2 == d.negated()) {
                    if (line2 != line)
                        throw Error("internal: antipodal rays on different lines");
                    matched = true;
                }
            if (!matched)
                throw Error("internal: ray direction missing in antipodal face");
        }
        ++glued;
        long long size = info.finite_edges + other.finite_edges + 2;
        if (size == 3) {
            ++census.triangles;
            int fin = info.finite_edges == 1 ? info.finite_line : other.finite_line;
            ++census.per_line_triangles[fin];
            ++census.per_line_triangles[info.rays[0].second];
            ++census.per_line_triangles[info.rays[1].second];
        }
    }
    if (glued * 2 != frame_faces)
        throw Error("internal: antipodal gluing did not pair all unbounded faces");

    census.faces = bounded_faces + glued;
    long long expected = static_cast<long long>(m) * (m - 1) / 2 + 1;
    if (census.faces != expected)
        throw Error("internal: projective face-count identity violated");
    if (m >= 4 && Int(census.triangles) > triangle_count_cap(m))
        throw Error("internal: projective triangle count exceeds the classical cap");

    long long inc_total = 0;
    for (long long c : census.per_line_triangles)
        inc_total += c;
    if (inc_total != 3 * census.triangles)
        throw Error("internal: triangle incidence sum mismatch");

    return census;
}

long long projective_triangle_count(const Arrangement& arr) {
    return projective_census(arr).triangles;
}

std::vector<long long> line_triangle_incidence(const Arrangement& arr) {
    return projective_census(arr).per_line_triangles;
}

Line select_infinity_line(const Arrangement& arr) {
    auto census = projective_census(arr);
    int best = 0;
    for (int i = 1; i < static_cast<int>(arr.lines.size()); ++i) {
        if (census.per_line_triangles[i] < census.per_line_triangles[best] ||
            (census.per_line_triangles[i] == census.per_line_triangles[best] &&
             arr.lines[i] < arr.lines[best]))
            best = i;
    }
    return arr.lines[best];
}

Line select_infinity_line(const std::vector<Line>& lines) {
    return select_infinity_line(build_arrangement(lines));
}

Int triangle_count_cap(int n) {
    if (n < 4)
        throw ParameterRange("triangle_count_cap is valid for n >= 4");
    return Int(n) * (n - 1) / 3;
}

Int triangle_rich_lower_bound(int n) {
    Int num = Int(n) * (n - 3);
    return (num + 2) / 3;
}

namespace {

using BigFloat = boost::multiprecision::cpp_bin_float_100;

// Last continued-fraction convergent of x >= 0 with denominator <= max_den.
Rat rational_approx(const BigFloat& x0, const Int& max_den) {
    BigFloat x = x0;
    Int h_prev = 1, h_prev2 = 0; // numerators
    Int k_prev = 0, k_prev2 = 1; // denominators
    Int best_h = 0, best_k = 1;
    const BigFloat tiny("1e-80");
    for (int iter = 0; iter < 200; ++iter) {
        Int a = boost::multiprecision::floor(x).convert_to<Int>();
        Int h = a * h_prev + h_prev2;
        Int k = a * k_prev + k_prev2;
        if (k > max_den)
            break;
        best_h = h;
        best_k = k;
        BigFloat frac = x - BigFloat(a.str());
        if (frac < tiny)
            break;
        x = 1 / frac;
        h_prev2 = h_prev;
        h_prev = h;
        k_prev2 = k_prev;
        k_prev = k;
    }
    return Rat(best_h, best_k);
}

} // namespace

std::vector<Line> furedi_palasti_lines(int n) {
    if (n < 5)
        throw ParameterRange("furedi_palasti_lines requires n >= 5");
    const long long target = triangle_rich_lower_bound(n).convert_to<long long>();
    const BigFloat pi = boost::math::constants::pi<BigFloat>();
    // Half-step offset for even n dodges the concurrency criterion
    // theta_i + theta_j + theta_k = pi/2 (mod pi).
    const BigFloat offset = (n % 2 == 0) ? BigFloat(1) / 2 : BigFloat(0);

    Int max_den = Int(1) << 16;
    for (int attempt = 0; attempt < 5; ++attempt, max_den <<= 8) {
        std::vector<Line> lines;
        lines.reserve(n);
        for (int k = 0; k < n; ++k) {
            BigFloat theta = (BigFloat(k) + offset) * pi / n;
            Rat t = rational_approx(tan(theta / 2), max_den);
            Rat den = 1 + t * t;
            Rat c = (1 - t * t) / den;
            Rat s = (2 * t) / den;
            // exact tangent of the deltoid: x cos(phi) - y sin(phi) = cos(3 phi)
            lines.push_back(make_line(c, -s, 4 * c * c * c - 3 * c));
        }
        if (!verify_simple(lines).ok)
            continue;
        auto arr = build_arrangement(lines);
        if (projective_census(arr).triangles >= target)
            return lines;
    }
    throw GenerationFailed("triangle-rich generation failed for n = " + std::to_string(n));
}

} // namespace nb
