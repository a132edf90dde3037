#pragma once

#include <cmath>

namespace redwalk {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// 2D point/vector, double precision. The world frame is right-handed with
// the origin at the room center; headings are radians in (-pi, pi],
// counterclockwise positive, 0 along +x.
struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2() = default;
    constexpr Vec2(double px, double py) : x(px), y(py) {}

    constexpr Vec2 operator+(const Vec2& r) const { return {x + r.x, y + r.y}; }
    constexpr Vec2 operator-(const Vec2& r) const { return {x - r.x, y - r.y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    friend constexpr Vec2 operator*(double s, const Vec2& v) { return {v.x * s, v.y * s}; }

    Vec2& operator+=(const Vec2& r) {
        x += r.x;
        y += r.y;
        return *this;
    }

    constexpr double dot(const Vec2& r) const { return x * r.x + y * r.y; }
    double norm() const { return std::hypot(x, y); }
    double squared_norm() const { return x * x + y * y; }
};

inline double distance(const Vec2& a, const Vec2& b) { return (b - a).norm(); }

// Unit vector for a heading angle.
inline Vec2 heading_vector(double heading) { return {std::cos(heading), std::sin(heading)}; }

// Normalizes an angle into (-pi, pi].
inline double wrap_angle(double a) {
    a = std::remainder(a, kTwoPi);
    if (a <= -kPi) a += kTwoPi;
    return a;
}

// Bearing of `to` as seen from `from`, in (-pi, pi].
inline double bearing(const Vec2& from, const Vec2& to) {
    return wrap_angle(std::atan2(to.y - from.y, to.x - from.x));
}

}  // namespace redwalk
