#pragma once

#include <array>
#include <cmath>

namespace pkpm {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }

/// Twice the signed area is the cross product of the two edge vectors;
/// positive for counterclockwise (a, b, c).
inline double signed_area(Vec2 a, Vec2 b, Vec2 c) {
    return 0.5 * ((b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y));
}

inline std::array<double, 3> edge_lengths(Vec2 a, Vec2 b, Vec2 c) {
    return {norm(b - a), norm(c - b), norm(a - c)};
}

inline double longest_edge(Vec2 a, Vec2 b, Vec2 c) {
    auto e = edge_lengths(a, b, c);
    return std::max({e[0], e[1], e[2]});
}

/// Smallest interior angle in degrees. Degenerate triangles report 0.
inline double min_angle_deg(Vec2 a, Vec2 b, Vec2 c) {
    if (signed_area(a, b, c) == 0.0) return 0.0;
    double worst = 180.0;
    const Vec2 v[3] = {a, b, c};
    for (int i = 0; i < 3; ++i) {
        const Vec2 u = v[(i + 1) % 3] - v[i];
        const Vec2 w = v[(i + 2) % 3] - v[i];
        const double ang = std::atan2(std::fabs(u.x * w.y - u.y * w.x), dot(u, w));
        worst = std::min(worst, ang * 180.0 / M_PI);
    }
    return worst;
}

} // namespace pkpm
