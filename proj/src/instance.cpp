#include "topo/instance.hpp"

#include <cmath>
#include <cstring>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace topo {

namespace {

// Hash of the raw coordinate bits, for duplicate detection. Exact bit
// equality is the right notion here: two points collide iff distance() would
// return exactly zero.
struct PointKey {
    std::uint64_t xbits;
    std::uint64_t ybits;
    bool operator==(const PointKey&) const = default;
};

struct PointKeyHash {
    std::size_t operator()(const PointKey& k) const {
        std::uint64_t h = k.xbits * 0x9e3779b97f4a7c15ULL;
        h ^= k.ybits + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

PointKey key_of(double x, double y) {
    PointKey k;
    std::memcpy(&k.xbits, &x, sizeof(double));
    std::memcpy(&k.ybits, &y, sizeof(double));
    return k;
}

}  // namespace

Instance::Instance(const std::vector<Point>& points, std::optional<NodeId> source) {
    if (points.empty()) {
        throw std::invalid_argument("instance must contain at least one node");
    }
    if (source && *source >= points.size()) {
        throw std::invalid_argument("source node id " + std::to_string(*source) +
                                    " out of range for " + std::to_string(points.size()) +
                                    " nodes");
    }
    xs_.reserve(points.size());
    ys_.reserve(points.size());
    std::unordered_set<PointKey, PointKeyHash> seen;
    seen.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        const Point& p = points[i];
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
            throw std::invalid_argument("node " + std::to_string(i) +
                                        " has a non-finite coordinate");
        }
        if (!seen.insert(key_of(p.x, p.y)).second) {
            throw std::invalid_argument("node " + std::to_string(i) +
                                        " duplicates another node's position");
        }
        xs_.push_back(p.x);
        ys_.push_back(p.y);
    }
    source_ = source;
}

std::vector<Point> Instance::points() const {
    std::vector<Point> out(size());
    for (std::size_t i = 0; i < size(); ++i) out[i] = {xs_[i], ys_[i]};
    return out;
}

RangeAssignment::RangeAssignment(std::vector<double> radii) : radii_(std::move(radii)) {
    for (std::size_t i = 0; i < radii_.size(); ++i) {
        if (!std::isfinite(radii_[i]) || radii_[i] < 0.0) {
            throw std::invalid_argument("radius of node " + std::to_string(i) +
                                        " must be finite and non-negative");
        }
    }
}

RangeAssignment RangeAssignment::zeros(std::size_t n) {
    return RangeAssignment(std::vector<double>(n, 0.0));
}

Instance generate_instance(std::size_t n, double grid, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("node count must be at least 1");
    if (!(grid > 0.0) || !std::isfinite(grid)) {
        throw std::invalid_argument("grid side length must be positive and finite");
    }
    std::mt19937_64 rng(seed);
    auto draw = [&rng, grid]() {
        // 53-bit mantissa in [0,1); not uniform_real_distribution, whose
        // output is unspecified across standard library implementations.
        return static_cast<double>(rng() >> 11) * 0x1.0p-53 * grid;
    };
    std::vector<Point> points;
    points.reserve(n);
    std::unordered_set<PointKey, PointKeyHash> seen;
    seen.reserve(n);
    while (points.size() < n) {
        const double x = draw();
        const double y = draw();
        if (!seen.insert(key_of(x, y)).second) continue;  // redraw duplicates
        points.push_back({x, y});
    }
    return Instance(points);
}

}  // namespace topo
