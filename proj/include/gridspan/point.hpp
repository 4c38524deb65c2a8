#pragma once

// Euclidean points with exact rational coordinates, shared by the
// arrangement and intersection-graph layers.

#include <gridspan/numeric.hpp>

#include <utility>

namespace gridspan {

struct QPoint {
    Rat x{};
    Rat y{};
};

inline bool operator==(const QPoint& a, const QPoint& b) { return a.x == b.x && a.y == b.y; }
inline bool operator!=(const QPoint& a, const QPoint& b) { return !(a == b); }
inline bool operator<(const QPoint& a, const QPoint& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

inline QPoint operator+(const QPoint& a, const QPoint& b) { return {a.x + b.x, a.y + b.y}; }
inline QPoint operator-(const QPoint& a, const QPoint& b) { return {a.x - b.x, a.y - b.y}; }
inline QPoint operator*(const Rat& s, const QPoint& p) { return {s * p.x, s * p.y}; }

inline Rat dot(const QPoint& a, const QPoint& b) { return a.x * b.x + a.y * b.y; }
inline Rat cross(const QPoint& a, const QPoint& b) { return a.x * b.y - a.y * b.x; }

inline Rat dist_squared(const QPoint& a, const QPoint& b) {
    Rat dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

// Sign of the signed area of the triangle (a, b, c): +1 for a left turn,
// -1 for a right turn, 0 for collinear.
inline int orient(const QPoint& a, const QPoint& b, const QPoint& c) {
    return sign(cross(b - a, c - a));
}

inline std::string to_string(const QPoint& p) {
    return "(" + to_string(p.x) + ", " + to_string(p.y) + ")";
}

}  // namespace gridspan
