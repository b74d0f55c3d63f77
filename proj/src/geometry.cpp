#include "nb/geometry.hpp"

#include "nb/errors.hpp"

#include <array>
#include <istream>
#include <sstream>

namespace nb {

Orientation orientation(const Point& p, const Point& q, const Point& r) {
    Rat det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    int s = sign_of(det);
    if (s > 0) return Orientation::CCW;
    if (s < 0) return Orientation::CW;
    return Orientation::Collinear;
}

Line make_line(const Rat& a, const Rat& b, const Rat& c) {
    if (a == 0 && b == 0)
        throw ParameterRange("line requires (a, b) != (0, 0)");
    Rat lead = (a != 0) ? a : b;
    return Line{a / lead, b / lead, c / lead};
}

Line line_through(const Point& p, const Point& q) {
    if (p == q)
        throw ParameterRange("line_through requires distinct points");
    Rat dx = q.x - p.x, dy = q.y - p.y;
    // Normal (dy, -dx); offset fixes the line through p.
    return make_line(dy, -dx, dy * p.x - dx * p.y);
}

bool parallel(const Line& l, const Line& m) {
    return l.a * m.b - m.a * l.b == 0;
}

std::optional<Point> intersect_lines(const Line& l, const Line& m) {
    Rat det = l.a * m.b - m.a * l.b;
    if (det == 0) {
        if (l == m)
            throw IdenticalLines("intersect_lines called on identical lines");
        return std::nullopt;
    }
    Rat x = (l.c * m.b - m.c * l.b) / det;
    Rat y = (l.a * m.c - m.a * l.c) / det;
    return Point{x, y};
}

Direction Direction::of(const Rat& dx, const Rat& dy) {
    if (dx == 0 && dy == 0)
        throw ParameterRange("zero direction vector");
    // Clear denominators (both positive in canonical form), then reduce.
    Int x = rat_num(dx) * rat_den(dy);
    Int y = rat_num(dy) * rat_den(dx);
    Int g = boost::multiprecision::gcd(abs(x), abs(y));
    return Direction{x / g, y / g};
}

bool angle_less(const Direction& u, const Direction& v) {
    auto half = [](const Direction& d) {
        return (d.y > 0 || (d.y == 0 && d.x > 0)) ? 0 : 1;
    };
    int hu = half(u), hv = half(v);
    if (hu != hv) return hu < hv;
    Int cross = u.x * v.y - u.y * v.x;
    return cross > 0;
}

namespace {

using Row = std::array<Rat, 3>;
using Mat3 = std::array<Row, 3>;

Rat det3(const Mat3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
         - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
         + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Mat3 inverse3(const Mat3& m, const Rat& det) {
    auto cof = [&](int r, int c) {
        int r1 = (r + 1) % 3, r2 = (r + 2) % 3;
        int c1 = (c + 1) % 3, c2 = (c + 2) % 3;
        return m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1];
    };
    Mat3 inv;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            inv[r][c] = cof(c, r) / det; // adjugate transposes
    return inv;
}

} // namespace

std::vector<Line> map_line_to_infinity(const std::vector<Line>& lines, const Line& ell) {
    std::vector<Line> rest;
    rest.reserve(lines.size());
    bool found = false;
    for (const auto& l : lines) {
        if (l == ell) { found = true; continue; }
        rest.push_back(l);
    }
    if (!found)
        throw ParameterRange("map_line_to_infinity: ell must be one of the input lines");

    Row r3{ell.a, ell.b, -ell.c};
    const Row e1{Rat(1), Rat(0), Rat(0)};
    const Row e2{Rat(0), Rat(1), Rat(0)};
    const Row e3{Rat(0), Rat(0), Rat(1)};
    const std::array<std::pair<Row, Row>, 3> completions{{{e1, e2}, {e1, e3}, {e2, e3}}};

    Mat3 m;
    Rat det;
    bool invertible = false;
    for (const auto& [ra, rb] : completions) {
        m = Mat3{ra, rb, r3};
        det = det3(m);
        if (det != 0) { invertible = true; break; }
    }
    if (!invertible)
        throw DegenerateTransform("no invertible completion for the projective map");

    Mat3 inv = inverse3(m, det);
    std::vector<Line> images;
    images.reserve(rest.size());
    for (const auto& l : rest) {
        Row rho{l.a, l.b, -l.c};
        Row img{};
        for (int c = 0; c < 3; ++c)
            img[c] = rho[0] * inv[0][c] + rho[1] * inv[1][c] + rho[2] * inv[2][c];
        if (img[0] == 0 && img[1] == 0)
            throw DegenerateTransform("input line mapped to the line at infinity");
        images.push_back(make_line(img[0], img[1], -img[2]));
    }
    return images;
}

std::vector<Line> parse_lines(std::istream& in) {
    std::vector<Line> out;
    std::string row;
    int lineno = 0;
    while (std::getline(in, row)) {
        ++lineno;
        if (auto hash = row.find('#'); hash != std::string::npos)
            row.erase(hash);
        std::istringstream tokens(row);
        std::vector<std::string> parts;
        std::string tok;
        while (tokens >> tok)
            parts.push_back(tok);
        if (parts.empty())
            continue;
        if (parts.size() != 3)
            throw ParseError("line " + std::to_string(lineno) +
                             ": expected 3 fields 'a b c', got " + std::to_string(parts.size()));
        try {
            out.push_back(make_line(parse_rational(parts[0]), parse_rational(parts[1]),
                                    parse_rational(parts[2])));
        } catch (const ParameterRange&) {
            throw ParseError("line " + std::to_string(lineno) + ": degenerate coefficients (a = b = 0)");
        }
    }
    return out;
}

std::vector<Line> parse_lines_text(const std::string& text) {
    std::istringstream in(text);
    return parse_lines(in);
}

std::string format_line(const Line& l) {
    return format_rational(l.a) + " " + format_rational(l.b) + " " + format_rational(l.c);
}

} // namespace nb
