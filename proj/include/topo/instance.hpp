#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "topo/geometry.hpp"

namespace topo {

using NodeId = std::uint32_t;

/// A problem instance: n sensor positions and an optional broadcast source.
///
/// Construction enforces the instance invariants: at least one node, finite
/// coordinates, pairwise distinct positions (a zero distance would make the
/// interference counts degenerate), and an in-range source. Positions are
/// stored as parallel x/y arrays so the geometric kernels can stream them.
class Instance {
public:
    explicit Instance(const std::vector<Point>& points,
                      std::optional<NodeId> source = std::nullopt);

    std::size_t size() const { return xs_.size(); }
    Point point(NodeId i) const { return {xs_[i], ys_[i]}; }
    std::span<const double> xs() const { return xs_; }
    std::span<const double> ys() const { return ys_; }
    std::optional<NodeId> source() const { return source_; }

    std::vector<Point> points() const;

private:
    std::vector<double> xs_;
    std::vector<double> ys_;
    std::optional<NodeId> source_;
};

/// One transmission radius per node. Entries are validated to be finite and
/// non-negative; length checks against an instance happen at the operations
/// that pair the two.
class RangeAssignment {
public:
    RangeAssignment() = default;
    explicit RangeAssignment(std::vector<double> radii);
    RangeAssignment(std::initializer_list<double> radii)
        : RangeAssignment(std::vector<double>(radii)) {}

    static RangeAssignment zeros(std::size_t n);

    std::size_t size() const { return radii_.size(); }
    double operator[](std::size_t i) const { return radii_[i]; }
    const std::vector<double>& values() const { return radii_; }

private:
    std::vector<double> radii_;
};

/// n points drawn uniformly from [0, grid)^2 with a fixed, portable stream:
/// std::mt19937_64 seeded with `seed`, each coordinate mapped from one draw
/// as (word >> 11) * 2^-53 * grid. Duplicate positions are redrawn. The
/// mapping is part of the file-format-level contract: the same (n, grid,
/// seed) triple produces bit-identical instances on every platform.
Instance generate_instance(std::size_t n, double grid, std::uint64_t seed);

}  // namespace topo
