#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "zdown/algorithms.hpp"
#include "zdown/container.hpp"
#include "zdown/options.hpp"

namespace zdown {

enum class Direction { BottomUp, TopDown };

std::string_view to_string(Direction direction);
std::optional<Direction> parse_direction(std::string_view text);

struct NodeLayout {
    /// Box in the parent's child frame (before the parent's child_scale).
    Rect rect;
    /// Scale applied to this node's child drawing.
    double child_scale = 1.0;
    /// Where the scaled child drawing starts, in this node's own frame.
    Point content_offset;
    /// Unscaled size of the child drawing; zero for leaves and deferred nodes.
    Size drawing;
    /// False while the node's children are deferred.
    bool laid_out = true;

    bool operator==(const NodeLayout&) const = default;
};

struct Layout {
    Direction direction = Direction::TopDown;
    NodeId root;
    Size size;
    std::map<NodeId, NodeLayout> nodes;
    /// Sibling edge routes in the child frame of the edge's container.
    std::map<EdgeId, Polyline> edge_routes;

    bool operator==(const Layout&) const = default;
};

/// Decides whether a child is laid out now; an empty predicate marks everything.
using MarkPredicate = std::function<bool(const NodeId&)>;

Layout bottom_up_layout(const CompoundGraph& graph, const NodeId& root, const LayoutOptions& options = {});

Layout top_down_layout(const CompoundGraph& graph, const NodeId& root, const MarkPredicate& marked = {},
                       const LayoutOptions& options = {});

/// Largest uniform factor under which `laid_out` fits into `assigned`.
double compute_scale(Size assigned, Size laid_out, bool cap_at_one = false);

struct Composition {
    double scale = 1.0;
    /// Origin of the scaled drawing inside the node.
    Point offset;
    /// Extent of the scaled drawing.
    Size occupied;
};

/// Places a drawing scaled by `scale` into `content`, centering the leftover space.
Composition compose(const Rect& content, Size drawing, double scale);

class ExpandError : public std::runtime_error {
public:
    enum class Kind { UnknownNode, ParentNotLaidOut };

    ExpandError(Kind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

struct ExpandResult {
    Layout layout;
    bool changed = false;
    std::string notice;
    /// Nodes whose entries were added or updated.
    std::vector<NodeId> touched;
};

/// Lays out a deferred node inside its frozen box and splices the result.
/// Geometry outside the node's subtree is left untouched.
ExpandResult expand_marked(const Layout& layout, const CompoundGraph& graph, const NodeId& node,
                           const MarkPredicate& marked = {}, const LayoutOptions& options = {});

/// Marks nodes at depth <= `depth` below `root`; deeper nodes are deferred.
MarkPredicate mark_to_depth(const CompoundGraph& graph, int depth);

// ---------------------------------------------------------------------------

struct AbsoluteNode {
    Rect rect;
    /// Product of all ancestor child scales.
    double scale = 1.0;
    double child_scale = 1.0;
    bool laid_out = true;

    bool operator==(const AbsoluteNode&) const = default;
};

struct AbsoluteLabel {
    NodeId node;
    std::string text;
    Rect box;
    double text_scale = 1.0;
};

struct AbsoluteLayout {
    Direction direction = Direction::TopDown;
    NodeId root;
    Size size;
    std::map<NodeId, AbsoluteNode> nodes;
    std::vector<AbsoluteLabel> labels;
    std::map<EdgeId, Polyline> edge_routes;
    HierarchyRouting hierarchy;
};

/// Flattens a layout: absolute origin = parent origin + parent scale *
/// (content offset + parent child_scale * relative position).
AbsoluteLayout absolute_geometry(const Layout& layout, const CompoundGraph& graph,
                                 const LayoutOptions& options = {});

HierarchyRouting route_hierarchy_edges(const AbsoluteLayout& absolute, const CompoundGraph& graph);

}  // namespace zdown
