#pragma once

#include "zdown/graph.hpp"
#include "zdown/options.hpp"

namespace zdown {

/// Read-only view handed to size approximators.
struct ApproximationContext {
    const CompoundGraph& graph;
    const LayoutOptions& options;
};

/// The node's base size, regardless of contents.
Size base_size_approx(const NodeId& node, const ApproximationContext& ctx);

/// Base size times sqrt(max(1, child count)); keeps the base aspect ratio.
Size node_count_approx(const NodeId& node, const ApproximationContext& ctx);

/// Lays out one level with node-count child sizes and returns the drawing
/// size plus padding and title band. The trial layout is discarded.
Size lookahead_approx(const NodeId& node, const ApproximationContext& ctx);

/// Size a FIXED container needs so its packing gives every child its base size.
Size fixed_container_size(const NodeId& node, const ApproximationContext& ctx);

/// predictSize: the size oracle when set, the packing prediction for FIXED
/// nodes, otherwise the node's configured approximator.
Size predict_size(const NodeId& node, const ApproximationContext& ctx);

}  // namespace zdown
