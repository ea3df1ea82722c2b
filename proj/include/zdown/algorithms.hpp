#pragma once

#include <map>
#include <span>
#include <vector>

#include "zdown/geometry.hpp"
#include "zdown/graph.hpp"

namespace zdown {

/// Drawing of one container's children in the container's child frame.
struct LocalLayout {
    std::map<NodeId, Rect> node_rects;
    std::map<EdgeId, Polyline> edge_routes;
    Size size;

    bool operator==(const LocalLayout&) const = default;
};

struct SizedNode {
    NodeId id;
    Size size;
};

struct GridShape {
    int columns = 0;
    int rows = 0;
};

/// Square grid for n cells: ceil(sqrt(n)) columns, only as many rows as needed.
GridShape packing_grid(std::size_t n);

/// Fills `parent` with a grid of equal cells. The final incomplete row is
/// widened to the full width, or with `vertical_fill` the cells above its
/// empty slots are extended down instead.
LocalLayout topdownpacking_layout(std::span<const NodeId> children, Size parent, double gap,
                                  bool vertical_fill = false);

/// Size of a packing of n cells of size `base`; laying out n children in it
/// never shrinks a cell below `base`.
Size topdownpacking_predict(std::size_t n, Size base, double gap);

/// Greedy row placement. A new shelf starts once the current one would grow
/// wider than sqrt(total_area * target_aspect).
LocalLayout shelf_pack(std::span<const SizedNode> children, double target_aspect, double gap);

/// Left-to-right layered drawing: longest-path ranks, one barycenter sweep,
/// back edges found by depth-first search in input order are ignored for ranking.
LocalLayout layered_layout(std::span<const SizedNode> children, std::span<const Edge> edges,
                           double spacing);

/// Rank of every child as computed by layered_layout.
std::map<NodeId, int> layered_ranks(std::span<const SizedNode> children, std::span<const Edge> edges);

/// Core in the middle, satellites on one circle at equal angular steps from east.
LocalLayout radial_layout(const SizedNode& core, std::span<const SizedNode> satellites, double spacing);

/// Adds straight clipped routes for `edges` between rects already placed in
/// `layout`. Self-loops and overlapping endpoints get no route.
void route_straight_edges(LocalLayout& layout, std::span<const Edge> edges);

struct HierarchyRouting {
    std::map<EdgeId, Polyline> routes;
    /// Endpoint missing from the geometry (deferred by incremental layout).
    std::vector<EdgeId> omitted;
    /// Zero-length routes: same endpoint or overlapping endpoint boxes.
    std::vector<EdgeId> degenerate;
};

/// Straight routes between absolute endpoint boxes, clipped to their borders.
HierarchyRouting route_hierarchy_edges(const std::map<NodeId, Rect>& absolute_rects,
                                       std::span<const Edge> edges);

}  // namespace zdown
