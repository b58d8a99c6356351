#include "resdraw/geometry.hpp"

#include <cmath>

namespace resdraw {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kOppositeEps = 1e-12;
} // namespace

Vec2 unit_from_to(Point2 a, Point2 b) {
    const Vec2 d = b - a;
    const double n = d.norm();
    if (n == 0.0) {
        throw DegenerateGeometryError("unit vector between coincident points");
    }
    return {d.x / n, d.y / n};
}

Vec2 bisector(Vec2 a, Vec2 c) {
    const double na = a.norm();
    const double nc = c.norm();
    if (na == 0.0 || nc == 0.0) {
        throw DegenerateGeometryError("bisector of zero vector");
    }
    const Vec2 s{a.x / na + c.x / nc, a.y / na + c.y / nc};
    const double ns = s.norm();
    if (ns < kOppositeEps) {
        throw DegenerateGeometryError("bisector of opposite directions is undefined");
    }
    return {s.x / ns, s.y / ns};
}

Vec2 perp(Vec2 b) {
    const double n = b.norm();
    if (n == 0.0) {
        throw DegenerateGeometryError("perpendicular of zero vector");
    }
    return {-b.y / n, b.x / n};
}

std::optional<Point2> segment_intersection(Point2 a0, Point2 a1, Point2 b0, Point2 b1) {
    const Vec2 r = a1 - a0;
    const Vec2 s = b1 - b0;

    const double d1 = r.cross(b0 - a0);
    const double d2 = r.cross(b1 - a0);
    const double d3 = s.cross(a0 - b0);
    const double d4 = s.cross(a1 - b0);

    const bool b_straddles = (d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0);
    const bool a_straddles = (d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0);
    if (!b_straddles || !a_straddles) {
        return std::nullopt;
    }

    // Strict straddling implies the segments are not parallel.
    const double denom = r.cross(s);
    const double t = (b0 - a0).cross(s) / denom;
    return a0 + t * r;
}

double ccw_angle(Vec2 from, Vec2 to) {
    if (from.norm() == 0.0 || to.norm() == 0.0) {
        throw DegenerateGeometryError("angle of zero vector");
    }
    double a = std::atan2(from.cross(to), from.dot(to));
    if (a < 0.0) {
        a += 2.0 * kPi;
    }
    if (a >= 2.0 * kPi) {
        a -= 2.0 * kPi;
    }
    return a;
}

double acute_between_lines(Vec2 a, Vec2 b) {
    if (a.norm() == 0.0 || b.norm() == 0.0) {
        throw DegenerateGeometryError("angle of zero vector");
    }
    return std::atan2(std::fabs(a.cross(b)), std::fabs(a.dot(b)));
}

} // namespace resdraw
