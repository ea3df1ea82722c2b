#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "support.hpp"
#include "zdown/algorithms.hpp"

using namespace zdown;
using support::near;

namespace {

std::vector<NodeId> ids(std::size_t n)
{
    std::vector<NodeId> out;
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back("c" + std::to_string(i));
    }
    return out;
}

// Square grid sized by the smallest k with k*k >= n, trailing empty rows
// dropped, the last row's cells sharing its full width.
std::vector<Rect> packing_oracle(std::size_t n, Size parent, double gap)
{
    std::size_t cols = 1;
    while (cols * cols < n) {
        ++cols;
    }
    std::size_t rows = 0;
    while (rows * cols < n) {
        ++rows;
    }
    const double h = (parent.height - gap * static_cast<double>(rows - 1)) / static_cast<double>(rows);
    std::vector<Rect> out;
    for (std::size_t r = 0; r < rows; ++r) {
        const std::size_t in_row = std::min(cols, n - r * cols);
        const double w = (parent.width - gap * static_cast<double>(in_row - 1)) / static_cast<double>(in_row);
        for (std::size_t c = 0; c < in_row; ++c) {
            out.push_back({static_cast<double>(c) * (w + gap), static_cast<double>(r) * (h + gap), w, h});
        }
    }
    return out;
}

std::vector<SizedNode> sized(const std::vector<Size>& sizes)
{
    std::vector<SizedNode> out;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        out.push_back({"c" + std::to_string(i), sizes[i]});
    }
    return out;
}

void expect_disjoint_and_inside(const LocalLayout& l)
{
    std::vector<Rect> rects;
    for (const auto& [id, r] : l.node_rects) {
        EXPECT_GE(r.x, -1e-9) << id;
        EXPECT_GE(r.y, -1e-9) << id;
        EXPECT_LE(r.right(), l.size.width + 1e-9) << id;
        EXPECT_LE(r.bottom(), l.size.height + 1e-9) << id;
        rects.push_back(r);
    }
    for (std::size_t i = 0; i < rects.size(); ++i) {
        for (std::size_t j = i + 1; j < rects.size(); ++j) {
            EXPECT_FALSE(interiors_overlap(rects[i], rects[j], 1e-9)) << i << " vs " << j;
        }
    }
}

}  // namespace

TEST(Packing, NineFillTheGrid)
{
    const auto children = ids(9);
    const LocalLayout l = topdownpacking_layout(children, {90, 60}, 0);
    for (std::size_t i = 0; i < 9; ++i) {
        const Rect expected{30.0 * static_cast<double>(i % 3), 20.0 * static_cast<double>(i / 3), 30, 20};
        EXPECT_TRUE(near(l.node_rects.at(children[i]), expected, 1e-9)) << i;
    }
    EXPECT_EQ(l.size, (Size{90, 60}));
}

TEST(Packing, SixDropTheLastRow)
{
    const auto children = ids(6);
    const LocalLayout l = topdownpacking_layout(children, {90, 60}, 0);
    for (std::size_t i = 0; i < 6; ++i) {
        const Rect expected{30.0 * static_cast<double>(i % 3), 30.0 * static_cast<double>(i / 3), 30, 30};
        EXPECT_TRUE(near(l.node_rects.at(children[i]), expected, 1e-9)) << i;
    }
}

TEST(Packing, FiveWidenTheIncompleteRow)
{
    const auto children = ids(5);
    const LocalLayout l = topdownpacking_layout(children, {90, 60}, 0);
    const std::vector<Rect> expected{{0, 0, 30, 30}, {30, 0, 30, 30}, {60, 0, 30, 30}, {0, 30, 45, 30}, {45, 30, 45, 30}};
    for (std::size_t i = 0; i < 5; ++i) {
        EXPECT_TRUE(near(l.node_rects.at(children[i]), expected[i], 1e-9)) << i;
    }
}

TEST(Packing, EmptyKeepsParentSize)
{
    const LocalLayout l = topdownpacking_layout({}, {90, 60}, 5);
    EXPECT_TRUE(l.node_rects.empty());
    EXPECT_EQ(l.size, (Size{90, 60}));
}

TEST(Packing, MatchesOracleAndTilesParent)
{
    for (double gap : {0.0, 3.0}) {
        for (std::size_t n = 1; n <= 100; ++n) {
            const Size parent{400.0 + static_cast<double>(n), 250.0};
            const auto children = ids(n);
            const LocalLayout l = topdownpacking_layout(children, parent, gap);
            const auto oracle = packing_oracle(n, parent, gap);
            double area = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                const Rect& r = l.node_rects.at(children[i]);
                ASSERT_TRUE(near(r, oracle[i], 1e-9)) << "n=" << n << " i=" << i;
                area += r.width * r.height;
            }
            // Gap area: vertical strips inside each row plus horizontal strips between rows.
            const GridShape g = packing_grid(n);
            double gap_area = gap * parent.width * static_cast<double>(g.rows - 1);
            const double row_h = (parent.height - gap * static_cast<double>(g.rows - 1)) / g.rows;
            for (int r = 0; r < g.rows; ++r) {
                const auto in_row = std::min<std::size_t>(static_cast<std::size_t>(g.columns),
                                                          n - static_cast<std::size_t>(r * g.columns));
                gap_area += gap * row_h * static_cast<double>(in_row - 1);
            }
            EXPECT_NEAR(area + gap_area, parent.width * parent.height, 1e-6) << n;
            expect_disjoint_and_inside(l);
        }
    }
}

TEST(Packing, VerticalFillExtendsCellsAboveGaps)
{
    const auto children = ids(5);
    const LocalLayout l = topdownpacking_layout(children, {90, 60}, 0, true);
    EXPECT_TRUE(near(l.node_rects.at("c0"), {0, 0, 30, 30}, 1e-9));
    EXPECT_TRUE(near(l.node_rects.at("c2"), {60, 0, 30, 60}, 1e-9));
    EXPECT_TRUE(near(l.node_rects.at("c3"), {0, 30, 30, 30}, 1e-9));
    EXPECT_TRUE(near(l.node_rects.at("c4"), {30, 30, 30, 30}, 1e-9));
    expect_disjoint_and_inside(l);
}

TEST(PackingPredict, Examples)
{
    EXPECT_EQ(topdownpacking_predict(9, {100, 60}, 0), (Size{300, 180}));
    EXPECT_EQ(topdownpacking_predict(6, {100, 60}, 0), (Size{300, 120}));
    EXPECT_EQ(topdownpacking_predict(1, {100, 60}, 5), (Size{100, 60}));
    EXPECT_EQ(topdownpacking_predict(0, {100, 60}, 5), (Size{0, 0}));
}

TEST(PackingPredict, NeverShrinksCells)
{
    const Size base{37, 23};
    for (double gap : {0.0, 10.0}) {
        for (std::size_t n = 1; n <= 100; ++n) {
            const Size predicted = topdownpacking_predict(n, base, gap);
            const auto children = ids(n);
            const LocalLayout l = topdownpacking_layout(children, predicted, gap);
            for (const auto& [id, r] : l.node_rects) {
                EXPECT_GE(r.width, base.width - 1e-9) << n;
                EXPECT_GE(r.height, base.height - 1e-9) << n;
            }
        }
    }
}

// ---------------------------------------------------------------------------

TEST(Shelf, SingleChildAtOrigin)
{
    for (double aspect : {0.1, 1.0, 7.0}) {
        const LocalLayout l = shelf_pack(sized({{100, 60}}), aspect, 10);
        EXPECT_EQ(l.node_rects.at("c0"), (Rect{0, 0, 100, 60}));
        EXPECT_EQ(l.size, (Size{100, 60}));
    }
}

TEST(Shelf, FourEqualChildrenFormTwoShelves)
{
    // total area 24000; any aspect in [5/3, 3.75) gives a row limit in [200, 300).
    for (double aspect : {5.0 / 3.0, 2.0, 3.0}) {
        const LocalLayout l = shelf_pack(sized({{100, 60}, {100, 60}, {100, 60}, {100, 60}}), aspect, 0);
        EXPECT_EQ(l.size, (Size{200, 120})) << aspect;
        EXPECT_EQ(l.node_rects.at("c0"), (Rect{0, 0, 100, 60}));
        EXPECT_EQ(l.node_rects.at("c1"), (Rect{100, 0, 100, 60}));
        EXPECT_EQ(l.node_rects.at("c2"), (Rect{0, 60, 100, 60}));
        EXPECT_EQ(l.node_rects.at("c3"), (Rect{100, 60, 100, 60}));
    }
}

TEST(Shelf, EqualItemsLandNearTargetAspect)
{
    // Holds on the domain where the rule is not dominated by rounding to whole
    // items: at least 25 items and targets within a factor 2 of the item aspect.
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> count(25, 200);
    std::uniform_real_distribution<double> side(10.0, 200.0);
    std::uniform_real_distribution<double> ratio(0.5, 2.0);
    for (int trial = 0; trial < 500; ++trial) {
        const Size item{side(rng), side(rng)};
        const double target = item.width / item.height * ratio(rng);
        const LocalLayout l = shelf_pack(sized(std::vector<Size>(static_cast<std::size_t>(count(rng)), item)), target, 0);
        const double aspect = l.size.width / l.size.height;
        EXPECT_LE(std::max(aspect / target, target / aspect), 2.0) << trial;
    }
}

TEST(Shelf, MixedSizesDoNotOverlapAndAreDeterministic)
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> side(5.0, 150.0);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Size> sizes(1 + trial % 17);
        for (Size& s : sizes) {
            s = {side(rng), side(rng)};
        }
        const LocalLayout l = shelf_pack(sized(sizes), 1.5, 10);
        expect_disjoint_and_inside(l);
        EXPECT_EQ(l, shelf_pack(sized(sizes), 1.5, 10));
    }
}

// ---------------------------------------------------------------------------

TEST(Layered, EdgeGoesLeftToRight)
{
    const auto nodes = sized({{40, 20}, {40, 20}});
    const std::vector<Edge> edges{{"e", "c0", "c1"}};
    const LocalLayout l = layered_layout(nodes, edges, 20);
    const Rect& a = l.node_rects.at("c0");
    const Rect& b = l.node_rects.at("c1");
    EXPECT_LE(a.right(), b.x);
    const Polyline& route = l.edge_routes.at("e");
    ASSERT_EQ(route.size(), 2u);
    EXPECT_NEAR(route[0].x, a.right(), 1e-9);
    EXPECT_NEAR(route[1].x, b.x, 1e-9);
    EXPECT_NEAR(route[0].y, route[1].y, 1e-9);
}

TEST(Layered, ChainGivesThreeRanks)
{
    const auto nodes = sized({{40, 20}, {40, 20}, {40, 20}});
    const std::vector<Edge> edges{{"e0", "c0", "c1"}, {"e1", "c1", "c2"}};
    const auto ranks = layered_ranks(nodes, edges);
    EXPECT_EQ(ranks.at("c0"), 0);
    EXPECT_EQ(ranks.at("c1"), 1);
    EXPECT_EQ(ranks.at("c2"), 2);
    const LocalLayout l = layered_layout(nodes, edges, 20);
    EXPECT_LT(l.node_rects.at("c0").x, l.node_rects.at("c1").x);
    EXPECT_LT(l.node_rects.at("c1").x, l.node_rects.at("c2").x);
}

TEST(Layered, DiamondRanks)
{
    const std::vector<SizedNode> nodes{{"a", {40, 20}}, {"b", {40, 20}}, {"c", {40, 20}}, {"d", {40, 20}}};
    const std::vector<Edge> edges{{"1", "a", "b"}, {"2", "a", "c"}, {"3", "b", "d"}, {"4", "c", "d"}};
    const auto ranks = layered_ranks(nodes, edges);
    EXPECT_EQ(ranks.at("a"), 0);
    EXPECT_EQ(ranks.at("b"), 1);
    EXPECT_EQ(ranks.at("c"), 1);
    EXPECT_EQ(ranks.at("d"), 2);
    const LocalLayout l = layered_layout(nodes, edges, 20);
    EXPECT_LT(l.node_rects.at("b").y, l.node_rects.at("c").y);
    expect_disjoint_and_inside(l);
}

TEST(Layered, CycleBreaksOnBackEdge)
{
    const std::vector<SizedNode> nodes{{"a", {40, 20}}, {"b", {40, 20}}, {"c", {40, 20}}};
    const std::vector<Edge> edges{{"1", "a", "b"}, {"2", "b", "c"}, {"3", "c", "a"}};
    const auto ranks = layered_ranks(nodes, edges);
    EXPECT_EQ(ranks.at("a"), 0);
    EXPECT_EQ(ranks.at("b"), 1);
    EXPECT_EQ(ranks.at("c"), 2);
}

TEST(Layered, RandomDagsKeepForwardEdgesForward)
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 12);
        std::vector<Size> sizes(n);
        std::uniform_real_distribution<double> side(10.0, 80.0);
        for (Size& s : sizes) {
            s = {side(rng), side(rng)};
        }
        const auto nodes = sized(sizes);
        std::vector<Edge> edges;
        std::bernoulli_distribution coin(0.3);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (coin(rng)) {
                    edges.push_back({std::to_string(edges.size()), nodes[i].id, nodes[j].id});
                }
            }
        }
        const auto ranks = layered_ranks(nodes, edges);
        for (const Edge& e : edges) {
            EXPECT_LT(ranks.at(e.source), ranks.at(e.target));
        }
        const LocalLayout l = layered_layout(nodes, edges, 15);
        expect_disjoint_and_inside(l);
        EXPECT_EQ(l, layered_layout(nodes, edges, 15));
    }
}

// ---------------------------------------------------------------------------

TEST(Radial, CoreOnly)
{
    const LocalLayout l = radial_layout({"core", {50, 30}}, {}, 20);
    EXPECT_EQ(l.node_rects.at("core"), (Rect{0, 0, 50, 30}));
    EXPECT_EQ(l.size, (Size{50, 30}));
}

TEST(Radial, FourSatellitesOnCompassPoints)
{
    const auto sats = sized({{20, 20}, {20, 20}, {20, 20}, {20, 20}});
    const LocalLayout l = radial_layout({"core", {20, 20}}, sats, 10);
    const Point c = l.node_rects.at("core").center();
    const double expected_angles[] = {0.0, 90.0, 180.0, 270.0};
    for (std::size_t i = 0; i < 4; ++i) {
        const Point p = l.node_rects.at(sats[i].id).center();
        double angle = std::atan2(p.y - c.y, p.x - c.x) * 180.0 / M_PI;
        if (angle < -1e-9) {
            angle += 360.0;
        }
        EXPECT_NEAR(angle, expected_angles[i], 1e-9) << i;
    }
    // radius = half diagonals of core and satellite plus spacing
    const Point p0 = l.node_rects.at("c0").center();
    EXPECT_NEAR(p0.x - c.x, 2.0 * std::hypot(10.0, 10.0) + 10.0, 1e-9);
}

TEST(Radial, NoOverlapsForAnyCount)
{
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> side(5.0, 120.0);
    for (int k = 0; k <= 40; ++k) {
        std::vector<Size> sizes(static_cast<std::size_t>(k));
        for (Size& s : sizes) {
            s = {side(rng), side(rng)};
        }
        const LocalLayout l = radial_layout({"core", {side(rng), side(rng)}}, sized(sizes), 5);
        expect_disjoint_and_inside(l);
    }
}

// ---------------------------------------------------------------------------

TEST(HierarchyRouting, ClipsToBorders)
{
    const std::map<NodeId, Rect> rects{{"a", {0, 0, 10, 10}}, {"b", {100, 0, 10, 10}}};
    const std::vector<Edge> edges{{"e", "a", "b"}};
    const HierarchyRouting r = route_hierarchy_edges(rects, edges);
    ASSERT_EQ(r.routes.at("e").size(), 2u);
    EXPECT_NEAR(r.routes.at("e")[0].x, 10, 1e-12);
    EXPECT_NEAR(r.routes.at("e")[0].y, 5, 1e-12);
    EXPECT_NEAR(r.routes.at("e")[1].x, 100, 1e-12);
    EXPECT_NEAR(r.routes.at("e")[1].y, 5, 1e-12);
    EXPECT_TRUE(r.omitted.empty());
    EXPECT_TRUE(r.degenerate.empty());
}

TEST(HierarchyRouting, SameContainerIsDegenerate)
{
    const std::map<NodeId, Rect> rects{{"a", {0, 0, 10, 10}}, {"inner", {2, 2, 4, 4}}};
    const std::vector<Edge> edges{{"self", "a", "a"}, {"down", "a", "inner"}};
    const HierarchyRouting r = route_hierarchy_edges(rects, edges);
    EXPECT_EQ(r.degenerate, (std::vector<EdgeId>{"self", "down"}));
    ASSERT_EQ(r.routes.at("self").size(), 2u);
    EXPECT_EQ(r.routes.at("self")[0], r.routes.at("self")[1]);
}

TEST(HierarchyRouting, MissingEndpointIsOmitted)
{
    const std::map<NodeId, Rect> rects{{"a", {0, 0, 10, 10}}};
    const std::vector<Edge> edges{{"e", "a", "deferred"}};
    const HierarchyRouting r = route_hierarchy_edges(rects, edges);
    EXPECT_TRUE(r.routes.empty());
    EXPECT_EQ(r.omitted, std::vector<EdgeId>{"e"});
}
