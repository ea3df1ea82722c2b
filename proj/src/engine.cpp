#include "zdown/engine.hpp"

#include <algorithm>
#include <memory>
#include <unordered_map>

#include "zdown/approximation.hpp"

namespace zdown {

std::string_view to_string(Direction direction)
{
    return direction == Direction::BottomUp ? "BOTTOM_UP" : "TOP_DOWN";
}

std::optional<Direction> parse_direction(std::string_view text)
{
    if (text == "BOTTOM_UP" || text == "bottom-up") {
        return Direction::BottomUp;
    }
    if (text == "TOP_DOWN" || text == "top-down") {
        return Direction::TopDown;
    }
    return std::nullopt;
}

double compute_scale(Size assigned, Size laid_out, bool cap_at_one)
{
    const double scale = std::min(assigned.width / laid_out.width, assigned.height / laid_out.height);
    return cap_at_one ? std::min(scale, 1.0) : scale;
}

Composition compose(const Rect& content, Size drawing, double scale)
{
    Composition c;
    c.scale = scale;
    c.occupied = {drawing.width * scale, drawing.height * scale};
    c.offset = {content.x + (content.width - c.occupied.width) / 2.0,
                content.y + (content.height - c.occupied.height) / 2.0};
    return c;
}

namespace {

class Driver {
public:
    Driver(const CompoundGraph& graph, const LayoutOptions& options, const MarkPredicate& marked, Layout& out)
        : graph_(graph), options_(options), marked_(marked), out_(out), ctx_{graph, options}
    {
    }

    // Bottom-up: children first, then the node's own drawing at scale 1.
    Size bottom_up(const NodeId& id)
    {
        const Node& node = graph_.node(id);
        if (node.is_leaf()) {
            out_.nodes[id];
            return node.base;
        }
        std::map<NodeId, Size> sizes;
        for (const NodeId& child : node.children) {
            sizes.emplace(child, bottom_up(child));
        }
        const LocalLayout local = layout_children(graph_, node, sizes, options_);
        const Size size = frame_size(node, local.size, options_);
        place(node, size, local, 1.0);
        // Packing may hand a child a larger box than it asked for; its drawing
        // stays at scale 1 and is centered in the box it received.
        for (const NodeId& child : node.children) {
            const Node& c = graph_.node(child);
            NodeLayout& entry = out_.nodes.at(child);
            if (!c.is_leaf()) {
                entry.content_offset =
                    compose(content_box(c, entry.rect.size(), options_), entry.drawing, 1.0).offset;
            }
        }
        return size;
    }

    void top_down_root(const NodeId& id)
    {
        const Node& node = graph_.node(id);
        if (node.is_leaf()) {
            out_.nodes[id].rect = {0.0, 0.0, node.base.width, node.base.height};
            out_.size = node.base;
            return;
        }
        const LocalLayout local = layout_children(graph_, node, predicted_child_sizes(node), options_);
        const Size size = frame_size(node, local.size, options_);
        out_.nodes[id].rect = {0.0, 0.0, size.width, size.height};
        out_.size = size;
        place(node, size, local, 1.0);
        recurse(node);
    }

    // Lays out a node whose box has already been fixed by its parent.
    void top_down_subtree(const NodeId& id)
    {
        const Node& node = graph_.node(id);
        if (node.is_leaf()) {
            return;
        }
        const Size size = out_.nodes.at(id).rect.size();
        const Rect content = content_box(node, size, options_);
        if (node.type == NodeType::Fixed) {
            place(node, size, fill_fixed_container(graph_, node, content.size(), options_), 1.0);
        } else {
            const LocalLayout local = layout_children(graph_, node, predicted_child_sizes(node), options_);
            place(node, size, local, compute_scale(content.size(), local.size, options_.cap_scale_at_one));
        }
        recurse(node);
    }

    std::vector<NodeId> touched;

private:
    std::map<NodeId, Size> predicted_child_sizes(const Node& node) const
    {
        std::map<NodeId, Size> sizes;
        for (const NodeId& child : node.children) {
            sizes.emplace(child, predict_size(child, ctx_));
        }
        return sizes;
    }

    bool is_marked(const NodeId& id) const { return !marked_ || marked_(id); }

    // Composes the child drawing into the node and records child boxes.
    void place(const Node& node, Size size, const LocalLayout& local, double scale)
    {
        NodeLayout& self = out_.nodes[node.id];
        const Composition c = compose(content_box(node, size, options_), local.size, scale);
        self.child_scale = scale;
        self.content_offset = c.offset;
        self.drawing = local.size;
        self.laid_out = true;
        touched.push_back(node.id);
        for (const NodeId& child : node.children) {
            NodeLayout& entry = out_.nodes[child];
            entry.rect = local.node_rects.at(child);
            entry.laid_out = graph_.node(child).is_leaf() || is_marked(child);
            touched.push_back(child);
        }
        for (const auto& [edge, route] : local.edge_routes) {
            out_.edge_routes[edge] = route;
        }
    }

    void recurse(const Node& node)
    {
        for (const NodeId& child : node.children) {
            if (out_.nodes.at(child).laid_out) {
                top_down_subtree(child);
            }
        }
    }

    const CompoundGraph& graph_;
    const LayoutOptions& options_;
    const MarkPredicate marked_;
    Layout& out_;
    ApproximationContext ctx_;
};

}  // namespace

Layout bottom_up_layout(const CompoundGraph& graph, const NodeId& root, const LayoutOptions& options)
{
    Layout layout;
    layout.direction = Direction::BottomUp;
    layout.root = root;
    Driver driver(graph, options, {}, layout);
    layout.size = driver.bottom_up(root);
    layout.nodes[root].rect = {0.0, 0.0, layout.size.width, layout.size.height};
    return layout;
}

Layout top_down_layout(const CompoundGraph& graph, const NodeId& root, const MarkPredicate& marked,
                       const LayoutOptions& options)
{
    Layout layout;
    layout.direction = Direction::TopDown;
    layout.root = root;
    Driver driver(graph, options, marked, layout);
    driver.top_down_root(root);
    return layout;
}

ExpandResult expand_marked(const Layout& layout, const CompoundGraph& graph, const NodeId& node,
                           const MarkPredicate& marked, const LayoutOptions& options)
{
    if (!graph.contains(node)) {
        throw ExpandError(ExpandError::Kind::UnknownNode, "unknown node '" + node + "'");
    }
    auto it = layout.nodes.find(node);
    if (it == layout.nodes.end()) {
        throw ExpandError(ExpandError::Kind::ParentNotLaidOut, "parent not laid out for '" + node + "'");
    }
    ExpandResult result{layout, false, {}, {}};
    if (it->second.laid_out) {
        result.notice = "node '" + node + "' is already laid out";
        return result;
    }
    result.layout.nodes.at(node).laid_out = true;
    Driver driver(graph, options, marked, result.layout);
    driver.top_down_subtree(node);
    result.changed = true;
    result.touched = std::move(driver.touched);
    if (result.touched.empty()) {
        result.touched.push_back(node);
    }
    return result;
}

MarkPredicate mark_to_depth(const CompoundGraph& graph, int depth)
{
    auto depths = std::make_shared<std::unordered_map<std::string, int>>();
    for (const NodeId& id : graph.preorder()) {
        (*depths)[id] = graph.depth(id).value_or(0);
    }
    return [depths, depth](const NodeId& id) {
        auto it = depths->find(id);
        return it != depths->end() && it->second <= depth;
    };
}

// ---------------------------------------------------------------------------

AbsoluteLayout absolute_geometry(const Layout& layout, const CompoundGraph& graph, const LayoutOptions& options)
{
    AbsoluteLayout abs;
    abs.direction = layout.direction;
    abs.root = layout.root;
    abs.size = layout.size;

    std::unordered_map<std::string, std::string> container_of;
    for (const Edge& e : graph.edges()) {
        if (auto p = graph.parent(e.source)) {
            container_of.emplace(e.id, *p);
        }
    }

    // Maps a point in `id`'s child frame to absolute coordinates.
    auto child_frame_to_abs = [&](const NodeId& id, Point p) {
        const AbsoluteNode& a = abs.nodes.at(id);
        const NodeLayout& l = layout.nodes.at(id);
        return Point{a.rect.x + a.scale * (l.content_offset.x + l.child_scale * p.x),
                     a.rect.y + a.scale * (l.content_offset.y + l.child_scale * p.y)};
    };

    auto visit = [&](auto&& self, const NodeId& id) -> void {
        const NodeLayout& l = layout.nodes.at(id);
        const AbsoluteNode& a = abs.nodes.at(id);
        const Node& node = graph.node(id);
        if (node.title) {
            const Label& t = *node.title;
            Point local;
            if (node.is_leaf()) {
                local = {(l.rect.width - t.unit_width) / 2.0, (l.rect.height - t.unit_height) / 2.0};
            } else {
                const Rect content = content_box(node, l.rect.size(), options);
                local = {content.x, content.y - title_band(node)};
            }
            abs.labels.push_back({id, t.text,
                                  Rect{a.rect.x + a.scale * local.x, a.rect.y + a.scale * local.y,
                                       a.scale * t.unit_width, a.scale * t.unit_height},
                                  a.scale});
        }
        if (!l.laid_out) {
            return;
        }
        const double child_scale_abs = a.scale * l.child_scale;
        for (const NodeId& child : node.children) {
            auto it = layout.nodes.find(child);
            if (it == layout.nodes.end()) {
                continue;
            }
            const Rect& r = it->second.rect;
            const Point origin = child_frame_to_abs(id, {r.x, r.y});
            abs.nodes[child] = AbsoluteNode{
                Rect{origin.x, origin.y, child_scale_abs * r.width, child_scale_abs * r.height},
                child_scale_abs, it->second.child_scale, it->second.laid_out};
            self(self, child);
        }
    };

    if (auto it = layout.nodes.find(layout.root); it != layout.nodes.end()) {
        abs.nodes[layout.root] = AbsoluteNode{it->second.rect, 1.0, it->second.child_scale, it->second.laid_out};
        visit(visit, layout.root);
    }

    for (const auto& [edge, route] : layout.edge_routes) {
        auto c = container_of.find(edge);
        if (c == container_of.end() || !abs.nodes.count(c->second)) {
            continue;
        }
        Polyline line;
        for (const Point& p : route) {
            line.push_back(child_frame_to_abs(c->second, p));
        }
        abs.edge_routes.emplace(edge, std::move(line));
    }
    abs.hierarchy = route_hierarchy_edges(abs, graph);
    return abs;
}

HierarchyRouting route_hierarchy_edges(const AbsoluteLayout& absolute, const CompoundGraph& graph)
{
    std::map<NodeId, Rect> rects;
    for (const auto& [id, n] : absolute.nodes) {
        rects.emplace(id, n.rect);
    }
    std::vector<Edge> crossing;
    for (const Edge* e : graph.hierarchy_crossing_edges()) {
        crossing.push_back(*e);
    }
    return route_hierarchy_edges(rects, crossing);
}

}  // namespace zdown
