#pragma once

#include <cmath>

namespace topo {

/// A position on the 2D deployment plane, in abstract grid units.
struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

/// Euclidean distance between two points.
///
/// Every distance in the library is computed with this exact operation
/// order (two squares, one add, one sqrt, no FMA), so distances between
/// the same pair of points compare bit-equal no matter where they were
/// computed. Radii are drawn from this candidate set, which is why range
/// comparisons use plain <= without an epsilon.
inline double distance(const Point& a, const Point& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return std::sqrt(dx * dx + dy * dy);
}

}  // namespace topo
