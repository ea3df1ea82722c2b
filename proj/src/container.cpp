#include "zdown/container.hpp"

#include <algorithm>

namespace zdown {

double title_band(const Node& node)
{
    return node.title && !node.children.empty() ? node.title->unit_height : 0.0;
}

Rect content_box(const Node& node, Size node_size, const LayoutOptions& options)
{
    double pad_x = options.padding;
    if (node_size.width <= 2.0 * pad_x) {
        pad_x = node_size.width / 4.0;
    }
    double pad_y = options.padding;
    double band = title_band(node);
    if (node_size.height <= 2.0 * pad_y + band) {
        const double shrink = 0.5 * node_size.height / (2.0 * pad_y + band);
        pad_y *= shrink;
        band *= shrink;
    }
    return {pad_x, pad_y + band, node_size.width - 2.0 * pad_x, node_size.height - 2.0 * pad_y - band};
}

Size frame_size(const Node& node, Size drawing, const LayoutOptions& options)
{
    return {drawing.width + 2.0 * options.padding,
            drawing.height + 2.0 * options.padding + title_band(node)};
}

namespace {

std::vector<SizedNode> sized_children(const Node& container, const std::map<NodeId, Size>& sizes)
{
    std::vector<SizedNode> result;
    result.reserve(container.children.size());
    for (const NodeId& id : container.children) {
        result.push_back({id, sizes.at(id)});
    }
    return result;
}

std::vector<Edge> sibling_edges(const CompoundGraph& graph, const Node& container)
{
    std::vector<Edge> edges;
    for (const Edge* e : graph.sibling_edges(container.id)) {
        edges.push_back(*e);
    }
    return edges;
}

}  // namespace

LocalLayout layout_children(const CompoundGraph& graph, const Node& container,
                            const std::map<NodeId, Size>& child_sizes, const LayoutOptions& options)
{
    const std::vector<SizedNode> children = sized_children(container, child_sizes);
    const std::vector<Edge> edges = sibling_edges(graph, container);
    LocalLayout layout;
    switch (container.algorithm) {
    case Algorithm::TopdownPacking: {
        Size cell{0.0, 0.0};
        for (const SizedNode& c : children) {
            cell.width = std::max(cell.width, c.size.width);
            cell.height = std::max(cell.height, c.size.height);
        }
        const Size area = topdownpacking_predict(children.size(), cell, options.gap);
        layout = topdownpacking_layout(container.children, area, options.gap, options.vertical_fill);
        route_straight_edges(layout, edges);
        break;
    }
    case Algorithm::Shelf: {
        const double aspect = options.target_aspect > 0.0
                                  ? options.target_aspect
                                  : container.base.width / container.base.height;
        layout = shelf_pack(children, aspect, options.gap);
        route_straight_edges(layout, edges);
        break;
    }
    case Algorithm::Layered:
        layout = layered_layout(children, edges, options.spacing);
        break;
    case Algorithm::Radial: {
        if (children.empty()) {
            break;
        }
        auto core = std::find_if(children.begin(), children.end(),
                                 [&](const SizedNode& c) { return graph.node(c.id).core; });
        if (core == children.end()) {
            core = children.begin();
        }
        std::vector<SizedNode> satellites;
        for (auto it = children.begin(); it != children.end(); ++it) {
            if (it != core) {
                satellites.push_back(*it);
            }
        }
        layout = radial_layout(*core, satellites, options.spacing);
        route_straight_edges(layout, edges);
        break;
    }
    }
    return layout;
}

LocalLayout fill_fixed_container(const CompoundGraph& graph, const Node& container, Size content,
                                 const LayoutOptions& options)
{
    if (container.algorithm != Algorithm::TopdownPacking) {
        throw LayoutError("FIXED node " + container.id + " uses " +
                          std::string(to_string(container.algorithm)) +
                          ", which cannot fill an assigned size");
    }
    LocalLayout layout =
        topdownpacking_layout(container.children, content, options.gap, options.vertical_fill);
    route_straight_edges(layout, sibling_edges(graph, container));
    return layout;
}

}  // namespace zdown
