#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "support/reference_impls.hpp"
#include "topo/neighbor_table.hpp"

using topo::Instance;
using topo::NodeId;
using topo::SortedNeighborTable;

namespace {

Instance line3() { return Instance({{0, 0}, {1, 0}, {3, 0}}); }

}  // namespace

TEST_CASE("table rows for three collinear nodes") {
    const auto t = SortedNeighborTable::build(line3());
    REQUIRE(t.size() == 3);

    CHECK(t.row_dists(0)[0] == 1.0);
    CHECK(t.row_ids(0)[0] == 1);
    CHECK(t.row_dists(0)[1] == 3.0);
    CHECK(t.row_ids(0)[1] == 2);

    CHECK(t.row_dists(1)[0] == 1.0);
    CHECK(t.row_ids(1)[0] == 0);
    CHECK(t.row_dists(1)[1] == 2.0);
    CHECK(t.row_ids(1)[1] == 2);

    CHECK(t.row_dists(2)[0] == 2.0);
    CHECK(t.row_ids(2)[0] == 1);
    CHECK(t.row_dists(2)[1] == 3.0);
    CHECK(t.row_ids(2)[1] == 0);

    CHECK(t.coverage(0, 1) == 1);
    CHECK(t.coverage(0, 2) == 2);
    CHECK(t.coverage(1, 0) == 1);
    CHECK(t.coverage(1, 2) == 2);
    CHECK(t.coverage(2, 1) == 1);
    CHECK(t.coverage(2, 0) == 2);
}

TEST_CASE("table for two nodes") {
    const auto t = SortedNeighborTable::build(Instance({{0, 0}, {5, 0}}));
    CHECK(t.row_dists(0).size() == 1);
    CHECK(t.row_ids(0)[0] == 1);
    CHECK(t.row_dists(1)[0] == 5.0);
}

TEST_CASE("table rejects single node") {
    CHECK_THROWS_AS(SortedNeighborTable::build(Instance({{0, 0}})), std::invalid_argument);
}

TEST_CASE("table matches naive all-pairs sort") {
    const Instance inst = topo::generate_instance(8, 1000.0, 123);
    const auto t = SortedNeighborTable::build(inst);
    for (NodeId i = 0; i < 8; ++i) {
        std::vector<std::pair<double, NodeId>> expected;
        for (NodeId j = 0; j < 8; ++j) {
            if (j != i) expected.push_back({topo::distance(inst.point(i), inst.point(j)), j});
        }
        std::sort(expected.begin(), expected.end());
        const auto dists = t.row_dists(i);
        const auto ids = t.row_ids(i);
        std::vector<bool> seen(8, false);
        for (std::size_t k = 0; k < 7; ++k) {
            CHECK(dists[k] == expected[k].first);
            CHECK(ids[k] == expected[k].second);
            if (k > 0) CHECK(dists[k] >= dists[k - 1]);
            CHECK(!seen[ids[k]]);
            seen[ids[k]] = true;
        }
        CHECK(!seen[i]);
    }
}

TEST_CASE("range_for_level hand cases") {
    const auto t = SortedNeighborTable::build(line3());
    CHECK(t.range_for_level(1, 1) == 1.0);
    CHECK(t.range_for_level(0, 0) == 0.0);
    CHECK(t.range_for_level(1, 0) == 0.0);
    CHECK(t.range_for_level(2, 0) == 0.0);
    CHECK(t.range_for_level(0, 1) == 1.0);
    CHECK(t.range_for_level(0, 2) == 3.0);
    CHECK(t.range_for_level(2, 1) == 2.0);
    CHECK_THROWS_AS(t.range_for_level(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(t.range_for_level(0, -1), std::invalid_argument);
}

TEST_CASE("range_for_level backs off below tied distances") {
    // Two nodes equidistant from node 0: an exact count of 1 is unattainable.
    const Instance two_tied({{0, 0}, {1, 0}, {-1, 0}, {5, 0}});
    const auto t = SortedNeighborTable::build(two_tied);
    CHECK(t.range_for_level(0, 1) == 0.0);
    CHECK(t.range_for_level(0, 2) == 1.0);
    CHECK(refimpl::count_at(two_tied, 0, t.range_for_level(0, 1)) <= 1);

    // Four corners equidistant from the center.
    const Instance square({{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 1}});
    const auto ts = SortedNeighborTable::build(square);
    CHECK(ts.range_for_level(4, 1) == 0.0);
    CHECK(ts.range_for_level(4, 3) == 0.0);
    CHECK(ts.range_for_level(4, 4) == topo::distance({1, 1}, {0, 0}));
}

TEST_CASE("range_for_level is monotone and never overshoots") {
    // Integer lattice coordinates force plenty of distance ties.
    std::vector<topo::Point> pts;
    for (int x = 0; x < 4; ++x) {
        for (int y = 0; y < 4; ++y) pts.push_back({double(x), double(y)});
    }
    const Instance inst(pts);
    const auto t = SortedNeighborTable::build(inst);
    const auto n = static_cast<std::int32_t>(inst.size());
    for (NodeId i = 0; i < inst.size(); ++i) {
        double prev = 0.0;
        for (std::int32_t k = 0; k < n; ++k) {
            const double r = t.range_for_level(i, k);
            CHECK(r >= prev);
            CHECK(refimpl::count_at(inst, i, r) <= k);
            prev = r;
        }
        CHECK(t.range_for_level(i, n - 1) == t.row_dists(i).back());
    }
}

TEST_CASE("level_assignment collects per-node ranges") {
    const auto t = SortedNeighborTable::build(line3());
    const topo::RangeAssignment rho = topo::level_assignment(t, 1);
    CHECK(rho.values() == std::vector<double>{1.0, 1.0, 2.0});
}
