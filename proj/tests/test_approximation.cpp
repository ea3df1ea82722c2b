#include <gtest/gtest.h>

#include <cmath>

#include "support.hpp"
#include "zdown/approximation.hpp"
#include "zdown/engine.hpp"

using namespace zdown;

namespace {

CompoundGraph star(std::size_t n, Algorithm algorithm = Algorithm::Shelf, bool titled = false)
{
    GraphBuilder b;
    Node root{.id = "root", .type = NodeType::Root, .algorithm = algorithm};
    if (titled) {
        root.title = Label::from_text("Root");
    }
    b.add_node(root);
    for (std::size_t i = 0; i < n; ++i) {
        b.add_child("root", {.id = "c" + std::to_string(i)});
    }
    b.set_root("root");
    return b.build();
}

}  // namespace

TEST(BaseSize, IgnoresContents)
{
    const LayoutOptions options;
    const CompoundGraph leafy = star(0);
    const CompoundGraph big = star(50);
    EXPECT_EQ(base_size_approx("root", {leafy, options}), (Size{100, 60}));
    EXPECT_EQ(base_size_approx("root", {big, options}), (Size{100, 60}));
    EXPECT_EQ(base_size_approx("root", {big, options}), base_size_approx("root", {big, options}));
}

TEST(NodeCount, SquareRootFactor)
{
    const LayoutOptions options;
    EXPECT_EQ(node_count_approx("root", {star(9), options}), (Size{300, 180}));
    EXPECT_EQ(node_count_approx("root", {star(0), options}), (Size{100, 60}));
    const Size two = node_count_approx("root", {star(2), options});
    EXPECT_NEAR(two.width, 141.42135623730950, 1e-9);
    EXPECT_NEAR(two.height, 84.852813742385702, 1e-9);
}

TEST(NodeCount, MonotoneInChildCount)
{
    const LayoutOptions options;
    Size previous{0, 0};
    for (std::size_t n = 0; n <= 60; ++n) {
        const Size s = node_count_approx("root", {star(n), options});
        EXPECT_GE(s.width, previous.width);
        EXPECT_GE(s.height, previous.height);
        EXPECT_NEAR(s.width / s.height, 100.0 / 60.0, 1e-12);
        previous = s;
    }
}

TEST(Lookahead, LeafGetsBase)
{
    const LayoutOptions options;
    const CompoundGraph g = star(3);
    EXPECT_EQ(lookahead_approx("c0", {g, options}), (Size{100, 60}));
}

TEST(Lookahead, FiveLeavesInPackingIsPredictPlusPadding)
{
    const LayoutOptions options;
    const Size predicted = topdownpacking_predict(5, {100, 60}, options.gap);
    const Size expected{predicted.width + 2 * options.padding, predicted.height + 2 * options.padding};
    EXPECT_EQ(lookahead_approx("root", {star(5, Algorithm::TopdownPacking), options}), expected);

    // A title adds its band on top.
    const Size titled = lookahead_approx("root", {star(5, Algorithm::TopdownPacking, true), options});
    EXPECT_EQ(titled, (Size{expected.width, expected.height + kDefaultLabelHeight}));
}

TEST(Lookahead, PerfectWithoutGrandchildren)
{
    // Every compound whose children are leaves: look-ahead equals the node's
    // bottom-up size, computed independently from a bottom-up run.
    const LayoutOptions options;
    std::size_t checked = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const CompoundGraph g = support::corpus_graph(seed, 80);
        const Layout bu = bottom_up_layout(g, g.root(), options);
        const auto sizes = support::bottom_up_sizes(g, bu, options);
        const ApproximationContext ctx{g, options};
        for (const Node& n : g.nodes()) {
            if (n.is_leaf() || n.type == NodeType::Fixed) {
                continue;
            }
            const bool leaf_children = std::all_of(n.children.begin(), n.children.end(),
                                                   [&](const NodeId& c) { return g.node(c).is_leaf(); });
            if (!leaf_children) {
                continue;
            }
            const Size la = lookahead_approx(n.id, ctx);
            EXPECT_NEAR(la.width, sizes.at(n.id).width, 1e-6) << seed << " " << n.id;
            EXPECT_NEAR(la.height, sizes.at(n.id).height, 1e-6) << seed << " " << n.id;
            ++checked;
        }
    }
    EXPECT_GT(checked, 100u);
}

TEST(Lookahead, FixedChildrenContributeTheirFixedSize)
{
    GraphBuilder b;
    b.add_node({.id = "root", .type = NodeType::Root, .algorithm = Algorithm::Shelf});
    b.add_child("root", {.id = "f", .type = NodeType::Fixed, .algorithm = Algorithm::TopdownPacking});
    for (int i = 0; i < 4; ++i) {
        b.add_child("f", {.id = "l" + std::to_string(i), .base = {50, 50}});
    }
    b.set_root("root");
    const CompoundGraph g = b.build();
    const LayoutOptions options;
    const ApproximationContext ctx{g, options};
    const Size fixed = fixed_container_size("f", ctx);
    const Size grid = topdownpacking_predict(4, {50, 50}, options.gap);
    EXPECT_EQ(fixed, (Size{grid.width + 30, grid.height + 30}));
    EXPECT_EQ(lookahead_approx("root", ctx), (Size{fixed.width + 30, fixed.height + 30}));
    EXPECT_EQ(predict_size("f", ctx), fixed);
}

TEST(PredictSize, OracleWinsThenApproximator)
{
    LayoutOptions options;
    GraphBuilder b;
    b.add_node({.id = "root", .type = NodeType::Root});
    b.add_child("root", {.id = "a", .approximator = Approximator::Base});
    b.add_child("root", {.id = "b", .approximator = Approximator::NodeCount});
    b.add_child("b", {.id = "b0"});
    b.add_child("b", {.id = "b1"});
    b.add_child("b", {.id = "b2"});
    b.add_child("b", {.id = "b3"});
    b.set_root("root");
    const CompoundGraph g = b.build();
    EXPECT_EQ(predict_size("a", {g, options}), (Size{100, 60}));
    EXPECT_EQ(predict_size("b", {g, options}), (Size{200, 120}));
    options.size_oracle = [](const Node& n) -> std::optional<Size> {
        if (n.id == "b") {
            return Size{7, 8};
        }
        return std::nullopt;
    };
    EXPECT_EQ(predict_size("b", {g, options}), (Size{7, 8}));
    EXPECT_EQ(predict_size("a", {g, options}), (Size{100, 60}));
}
