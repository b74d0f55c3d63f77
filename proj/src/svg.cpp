#include "nb/svg.hpp"

#include "nb/errors.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace nb {

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#17becf", "#e377c2"};
constexpr int kPaletteSize = 8;

struct Viewport {
    double lo_x, lo_y, hi_x, hi_y;
    int size;

    double sx(const Rat& x) const {
        const double span = std::max(hi_x - lo_x, 1e-9);
        return (static_cast<double>(x) - lo_x) / span * (size - 40) + 20;
    }
    double sy(const Rat& y) const {
        const double span = std::max(hi_y - lo_y, 1e-9);
        // flip: SVG y grows downward
        return (hi_y - static_cast<double>(y)) / span * (size - 40) + 20;
    }
};

std::string num(double x) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(2) << x;
    return os.str();
}

void open_svg(std::ostringstream& os, int size) {
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\""
       << size << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

void polygon(std::ostringstream& os, const std::vector<std::pair<double, double>>& pts,
             const std::string& fill, double opacity, const std::string& stroke) {
    os << "<polygon points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i)
            os << ' ';
        os << num(pts[i].first) << ',' << num(pts[i].second);
    }
    os << "\" fill=\"" << fill << "\" fill-opacity=\"" << num(opacity) << "\" stroke=\""
       << stroke << "\"/>\n";
}

void segment(std::ostringstream& os, double x1, double y1, double x2, double y2,
             const std::string& stroke, double width) {
    os << "<line x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\"" << num(x2)
       << "\" y2=\"" << num(y2) << "\" stroke=\"" << stroke << "\" stroke-width=\""
       << num(width) << "\"/>\n";
}

void dot(std::ostringstream& os, double x, double y, const std::string& fill, double r) {
    os << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"" << num(r)
       << "\" fill=\"" << fill << "\"/>\n";
}

} // namespace

std::string arrangement_svg(const Arrangement& arr, const SvgOptions& opt) {
    Viewport vp{static_cast<double>(arr.frame_lo_x), static_cast<double>(arr.frame_lo_y),
                static_cast<double>(arr.frame_hi_x), static_cast<double>(arr.frame_hi_y),
                opt.size};
    std::ostringstream os;
    open_svg(os, opt.size);

    if (opt.shade_triangles) {
        for (std::size_t f = 0; f < arr.faces.size(); ++f) {
            if (!arr.bounded_face(static_cast<int>(f)) || arr.faces[f].edges.size() != 3)
                continue;
            std::vector<std::pair<double, double>> pts;
            for (int he : arr.faces[f].edges) {
                const Point& p = arr.vertices[arr.half[he].origin];
                pts.emplace_back(vp.sx(p.x), vp.sy(p.y));
            }
            polygon(os, pts, "#ffd166", 0.85, "none");
        }
    }

    // frame
    os << "<rect x=\"20\" y=\"20\" width=\"" << opt.size - 40 << "\" height=\""
       << opt.size - 40 << "\" fill=\"none\" stroke=\"#bbbbbb\"/>\n";

    // each line between its extreme clip vertices
    for (std::size_t i = 0; i < arr.lines.size(); ++i) {
        const Point* lo = nullptr;
        const Point* hi = nullptr;
        Rat lo_key, hi_key;
        for (std::size_t vtx = 0; vtx < arr.vertices.size(); ++vtx) {
            const auto& on = arr.vertex_lines[vtx];
            if (!std::binary_search(on.begin(), on.end(), static_cast<int>(i)))
                continue;
            const Point& p = arr.vertices[vtx];
            const Rat key = arr.lines[i].a * p.y - arr.lines[i].b * p.x;
            if (!lo || key < lo_key) {
                lo = &p;
                lo_key = key;
            }
            if (!hi || hi_key < key) {
                hi = &p;
                hi_key = key;
            }
        }
        if (lo && hi)
            segment(os, vp.sx(lo->x), vp.sy(lo->y), vp.sx(hi->x), vp.sy(hi->y), "#333333",
                    1.2);
    }

    for (std::size_t vtx = 0; vtx < arr.vertices.size(); ++vtx)
        if (arr.vertex_lines[vtx].size() >= 2)
            dot(os, vp.sx(arr.vertices[vtx].x), vp.sy(arr.vertices[vtx].y), "#222222", 2.0);

    os << "</svg>\n";
    return os.str();
}

std::string family_svg(const RegionFamily& family, const SvgOptions& opt) {
    const CellComplex& cx = *family.complex;
    bool any = false;
    Rat lo_x, lo_y, hi_x, hi_y;
    for (const auto& cell : cx.cells) {
        if (cell.dim != 0)
            continue;
        if (!cell.pos)
            throw MalformedComplex("family drawing needs vertex coordinates");
        if (!any) {
            lo_x = hi_x = cell.pos->x;
            lo_y = hi_y = cell.pos->y;
            any = true;
        } else {
            lo_x = std::min(lo_x, cell.pos->x);
            hi_x = std::max(hi_x, cell.pos->x);
            lo_y = std::min(lo_y, cell.pos->y);
            hi_y = std::max(hi_y, cell.pos->y);
        }
    }
    if (!any)
        throw MalformedComplex("family drawing needs at least one vertex");
    Viewport vp{static_cast<double>(lo_x), static_cast<double>(lo_y),
                static_cast<double>(hi_x), static_cast<double>(hi_y), opt.size};

    auto vertex_xy = [&](int id) {
        const Point& p = *cx.cells[id].pos;
        return std::pair<double, double>{vp.sx(p.x), vp.sy(p.y)};
    };
    // corner cycle of a 2-cell: shared vertices of consecutive boundary edges
    auto face_corners = [&](const Cell& face) {
        std::vector<std::pair<double, double>> pts;
        const auto& edges = face.boundary;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const auto& cur = cx.cells[edges[i]].boundary;
            const auto& nxt = cx.cells[edges[(i + 1) % edges.size()]].boundary;
            for (int a : cur)
                if (std::find(nxt.begin(), nxt.end(), a) != nxt.end())
                    pts.push_back(vertex_xy(a));
        }
        return pts;
    };

    std::ostringstream os;
    open_svg(os, opt.size);

    // skeleton in light gray
    for (const auto& cell : cx.cells)
        if (cell.dim == 1) {
            auto [x1, y1] = vertex_xy(cell.boundary[0]);
            auto [x2, y2] = vertex_xy(cell.boundary[1]);
            segment(os, x1, y1, x2, y2, "#cccccc", 0.8);
        }

    for (std::size_t s = 0; s < family.sets.size(); ++s) {
        const std::string color = kPalette[s % kPaletteSize];
        for (int id : family.sets[s]) {
            const Cell& cell = cx.cells[id];
            if (cell.dim == 2) {
                polygon(os, face_corners(cell), color, 0.25, "none");
            } else if (cell.dim == 1) {
                auto [x1, y1] = vertex_xy(cell.boundary[0]);
                auto [x2, y2] = vertex_xy(cell.boundary[1]);
                segment(os, x1, y1, x2, y2, color, 2.0);
            } else {
                auto [x, y] = vertex_xy(id);
                dot(os, x, y, color, 2.5);
            }
        }
    }

    os << "</svg>\n";
    return os.str();
}

} // namespace nb
