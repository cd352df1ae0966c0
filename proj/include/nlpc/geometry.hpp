#pragma once

#include <cmath>

namespace nlpc {

/// A point (or vector) in layout or viewport pixel space.
struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2&, const Point2&) = default;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double length(Point2 v) { return std::hypot(v.x, v.y); }
inline double distance(Point2 a, Point2 b) { return length(b - a); }

// (1-t)*a + t*b reproduces a at t=0 and b at t=1 bit-exactly.
inline double lerp(double a, double b, double t) { return (1.0 - t) * a + t * b; }
inline Point2 lerp(Point2 a, Point2 b, double t) { return {lerp(a.x, b.x, t), lerp(a.y, b.y, t)}; }

inline Point2 midpoint(Point2 a, Point2 b) { return {0.5 * (a.x + b.x), 0.5 * (a.y + b.y)}; }

inline bool is_finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// Closest point to `p` on the segment [a, b].
inline Point2 project_onto_segment(Point2 p, Point2 a, Point2 b)
{
    const Point2 ab = b - a;
    const double len2 = dot(ab, ab);
    if (len2 == 0.0) return a;
    double t = dot(p - a, ab) / len2;
    t = t < 0.0 ? 0.0 : (t > 1.0 ? 1.0 : t);
    return lerp(a, b, t);
}

/// Perpendicular distance from `p` to the infinite line through a and b.
inline double distance_to_line(Point2 p, Point2 a, Point2 b)
{
    const double len = distance(a, b);
    if (len == 0.0) return distance(p, a);
    return std::abs(cross(b - a, p - a)) / len;
}

} // namespace nlpc
