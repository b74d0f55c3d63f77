#pragma once

#include "nb/rational.hpp"

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace nb {

struct Point {
    Rat x;
    Rat y;

    friend bool operator==(const Point& p, const Point& q) { return p.x == q.x && p.y == q.y; }
    friend bool operator<(const Point& p, const Point& q) {
        if (p.x != q.x) return p.x < q.x;
        return p.y < q.y;
    }
};

enum class Orientation { CW = -1, Collinear = 0, CCW = 1 };

// Sign of det(q - p, r - p): positive for a counterclockwise turn.
Orientation orientation(const Point& p, const Point& q, const Point& r);

// The line a*x + b*y = c with (a, b) != (0, 0), stored so that the first
// nonzero coefficient among (a, b) equals 1. All comparisons are exact.
struct Line {
    Rat a;
    Rat b;
    Rat c;

    Rat eval(const Point& p) const { return a * p.x + b * p.y - c; }

    friend bool operator==(const Line& l, const Line& m) {
        return l.a == m.a && l.b == m.b && l.c == m.c;
    }
    friend bool operator<(const Line& l, const Line& m) {
        if (l.a != m.a) return l.a < m.a;
        if (l.b != m.b) return l.b < m.b;
        return l.c < m.c;
    }
};

// Normalizes; throws ParameterRange when a = b = 0.
Line make_line(const Rat& a, const Rat& b, const Rat& c);

// Line through two distinct points (throws ParameterRange when p == q).
Line line_through(const Point& p, const Point& q);

bool parallel(const Line& l, const Line& m);

// Unique crossing point; nullopt for (distinct) parallels; throws
// IdenticalLines when both describe the same locus.
std::optional<Point> intersect_lines(const Line& l, const Line& m);

// Primitive integer direction vector: both components integral, gcd 1,
// canonical for exact comparisons. Preserves orientation (sign matters).
struct Direction {
    Int x;
    Int y;

    static Direction of(const Rat& dx, const Rat& dy);
    Direction negated() const { return Direction{-x, -y}; }

    friend bool operator==(const Direction&, const Direction&) = default;
    friend bool operator<(const Direction& u, const Direction& v) {
        if (u.x != v.x) return u.x < v.x;
        return u.y < v.y;
    }
};

// Strict weak order on directions by angle in [0, 2*pi), exact.
bool angle_less(const Direction& u, const Direction& v);

// Projective change of coordinates sending `ell` (which must occur among
// `lines`) to the line at infinity. Returns the images of the other lines.
// Throws ParameterRange if ell is absent, DegenerateTransform if no
// invertible completion exists (cannot happen for valid input).
std::vector<Line> map_line_to_infinity(const std::vector<Line>& lines, const Line& ell);

// Text format: one line per row, "a b c" whitespace-separated, each token an
// integer or p/q fraction; '#' starts a comment. Throws ParseError.
std::vector<Line> parse_lines(std::istream& in);
std::vector<Line> parse_lines_text(const std::string& text);
std::string format_line(const Line& l);

} // namespace nb
