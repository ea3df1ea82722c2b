#include "zdown/approximation.hpp"

#include <algorithm>
#include <cmath>

#include "zdown/container.hpp"

namespace zdown {

Size base_size_approx(const NodeId& node, const ApproximationContext& ctx)
{
    return ctx.graph.node(node).base;
}

Size node_count_approx(const NodeId& node, const ApproximationContext& ctx)
{
    const Node& n = ctx.graph.node(node);
    const double factor = std::sqrt(std::max<double>(1.0, static_cast<double>(n.children.size())));
    return {n.base.width * factor, n.base.height * factor};
}

Size fixed_container_size(const NodeId& node, const ApproximationContext& ctx)
{
    const Node& n = ctx.graph.node(node);
    if (n.children.empty()) {
        return n.base;
    }
    Size cell{0.0, 0.0};
    for (const NodeId& child : n.children) {
        const Size base = ctx.graph.node(child).base;
        cell.width = std::max(cell.width, base.width);
        cell.height = std::max(cell.height, base.height);
    }
    return frame_size(n, topdownpacking_predict(n.children.size(), cell, ctx.options.gap), ctx.options);
}

Size lookahead_approx(const NodeId& node, const ApproximationContext& ctx)
{
    const Node& n = ctx.graph.node(node);
    if (n.children.empty()) {
        return n.base;
    }
    std::map<NodeId, Size> sizes;
    for (const NodeId& child : n.children) {
        const Node& c = ctx.graph.node(child);
        sizes.emplace(child, c.type == NodeType::Fixed ? fixed_container_size(child, ctx)
                                                       : node_count_approx(child, ctx));
    }
    const LocalLayout trial = layout_children(ctx.graph, n, sizes, ctx.options);
    return frame_size(n, trial.size, ctx.options);
}

Size predict_size(const NodeId& node, const ApproximationContext& ctx)
{
    const Node& n = ctx.graph.node(node);
    if (ctx.options.size_oracle) {
        if (auto size = ctx.options.size_oracle(n)) {
            return *size;
        }
    }
    if (n.type == NodeType::Fixed) {
        return fixed_container_size(node, ctx);
    }
    switch (n.approximator) {
    case Approximator::Base:
        return base_size_approx(node, ctx);
    case Approximator::NodeCount:
        return node_count_approx(node, ctx);
    case Approximator::Lookahead:
        return lookahead_approx(node, ctx);
    }
    return n.base;
}

}  // namespace zdown
