#pragma once
// 2-D vector and segment primitives shared by the metrics, construction and
// force code. All functions are pure.

#include <cmath>
#include <optional>

#include "resdraw/errors.hpp"

namespace resdraw {

struct Vec2 {
    double x{0.0};
    double y{0.0};

    constexpr Vec2() = default;
    constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

    constexpr Vec2 operator+(Vec2 r) const { return {x + r.x, y + r.y}; }
    constexpr Vec2 operator-(Vec2 r) const { return {x - r.x, y - r.y}; }
    constexpr Vec2 operator-() const { return {-x, -y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    friend constexpr Vec2 operator*(double s, Vec2 v) { return {v.x * s, v.y * s}; }

    Vec2& operator+=(Vec2 r) {
        x += r.x;
        y += r.y;
        return *this;
    }
    Vec2& operator-=(Vec2 r) {
        x -= r.x;
        y -= r.y;
        return *this;
    }

    constexpr double dot(Vec2 r) const { return x * r.x + y * r.y; }
    constexpr double cross(Vec2 r) const { return x * r.y - y * r.x; }
    double norm() const { return std::sqrt(x * x + y * y); }
};

struct Point2 {
    double x{0.0};
    double y{0.0};

    constexpr Point2() = default;
    constexpr Point2(double x_, double y_) : x(x_), y(y_) {}

    constexpr Vec2 operator-(Point2 r) const { return {x - r.x, y - r.y}; }
    constexpr Point2 operator+(Vec2 v) const { return {x + v.x, y + v.y}; }
};

inline double distance(Point2 a, Point2 b) { return (b - a).norm(); }

/// Unit vector pointing from a to b. Throws DegenerateGeometryError when the
/// points coincide.
Vec2 unit_from_to(Point2 a, Point2 b);

/// Unit bisector of the angle between a and c: the normalized sum of their
/// unit vectors. Throws on zero input or exactly opposite directions.
Vec2 bisector(Vec2 a, Vec2 c);

/// Unit vector perpendicular to b, oriented +90 degrees counter-clockwise.
Vec2 perp(Vec2 b);

/// Proper interior intersection of the open segments a0-a1 and b0-b1.
/// Shared endpoints, touching and collinear overlap all yield empty.
/// Orientation tests use the exact sign of cross products; no snapping.
std::optional<Point2> segment_intersection(Point2 a0, Point2 a1, Point2 b0, Point2 b1);

/// Counter-clockwise angle in [0, 2*pi) rotating `from` onto `to`.
double ccw_angle(Vec2 from, Vec2 to);

/// Acute angle in [0, pi/2] between the undirected lines spanned by a and b.
/// Parallel vectors give 0; callers treat 0-angle crossings as degenerate.
double acute_between_lines(Vec2 a, Vec2 b);

} // namespace resdraw
