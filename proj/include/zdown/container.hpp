#pragma once

#include <map>

#include "zdown/algorithms.hpp"
#include "zdown/options.hpp"

namespace zdown {

/// Height of the title strip a compound node reserves above its children.
double title_band(const Node& node);

/// Area of a node of the given size that receives the scaled child drawing.
/// Padding and title band shrink proportionally when the node is too small.
Rect content_box(const Node& node, Size node_size, const LayoutOptions& options);

/// Node size that holds `drawing` at scale 1 (inverse of content_box).
Size frame_size(const Node& node, Size drawing, const LayoutOptions& options);

/// Lays out the children of a size-assigning container with its configured
/// algorithm. Packing uses the largest child size as cell size.
LocalLayout layout_children(const CompoundGraph& graph, const Node& container,
                            const std::map<NodeId, Size>& child_sizes, const LayoutOptions& options);

/// Fills a fixed content area with the container's children. Only packing can
/// fill an assigned size; other algorithms raise LayoutError.
LocalLayout fill_fixed_container(const CompoundGraph& graph, const Node& container, Size content,
                                 const LayoutOptions& options);

class LayoutError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace zdown
