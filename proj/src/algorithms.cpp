#include "zdown/algorithms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <unordered_map>

namespace zdown {

GridShape packing_grid(std::size_t n)
{
    if (n == 0) {
        return {};
    }
    std::size_t columns = 1;
    while (columns * columns < n) {
        ++columns;
    }
    const std::size_t rows = (n + columns - 1) / columns;
    return {static_cast<int>(columns), static_cast<int>(rows)};
}

LocalLayout topdownpacking_layout(std::span<const NodeId> children, Size parent, double gap,
                                  bool vertical_fill)
{
    LocalLayout layout;
    layout.size = parent;
    const std::size_t n = children.size();
    if (n == 0) {
        return layout;
    }
    const auto [columns, rows] = packing_grid(n);
    const double cell_width = std::max(0.0, (parent.width - (columns - 1) * gap) / columns);
    const double cell_height = std::max(0.0, (parent.height - (rows - 1) * gap) / rows);
    const std::size_t last_row_count = n - static_cast<std::size_t>(rows - 1) * columns;
    const bool incomplete = last_row_count < static_cast<std::size_t>(columns);

    for (std::size_t i = 0; i < n; ++i) {
        const int row = static_cast<int>(i / columns);
        const int column = static_cast<int>(i % columns);
        const bool in_last_row = row == rows - 1;
        Rect cell{column * (cell_width + gap), row * (cell_height + gap), cell_width, cell_height};
        if (incomplete && in_last_row && !vertical_fill) {
            const auto k = static_cast<double>(last_row_count);
            const double wide = std::max(0.0, (parent.width - (k - 1) * gap) / k);
            cell.x = column * (wide + gap);
            cell.width = wide;
        } else if (incomplete && vertical_fill && row == rows - 2 &&
                   static_cast<std::size_t>(column) >= last_row_count) {
            cell.height = 2 * cell_height + gap;
        }
        layout.node_rects.emplace(children[i], cell);
    }
    return layout;
}

Size topdownpacking_predict(std::size_t n, Size base, double gap)
{
    if (n == 0) {
        return {0.0, 0.0};
    }
    const auto [columns, rows] = packing_grid(n);
    return {columns * base.width + (columns - 1) * gap, rows * base.height + (rows - 1) * gap};
}

LocalLayout shelf_pack(std::span<const SizedNode> children, double target_aspect, double gap)
{
    LocalLayout layout;
    double area = 0.0;
    for (const SizedNode& c : children) {
        area += c.size.width * c.size.height;
    }
    const double limit = std::sqrt(area * target_aspect);

    double x = 0.0;
    double y = 0.0;
    double shelf_height = 0.0;
    double width = 0.0;
    bool shelf_empty = true;
    for (const SizedNode& c : children) {
        const double next = shelf_empty ? c.size.width : x + gap + c.size.width;
        if (!shelf_empty && next > limit + 1e-9) {
            y += shelf_height + gap;
            x = 0.0;
            shelf_height = 0.0;
            shelf_empty = true;
        }
        const double left = shelf_empty ? 0.0 : x + gap;
        layout.node_rects.emplace(c.id, Rect{left, y, c.size.width, c.size.height});
        x = left + c.size.width;
        shelf_height = std::max(shelf_height, c.size.height);
        width = std::max(width, x);
        shelf_empty = false;
    }
    layout.size = children.empty() ? Size{} : Size{width, y + shelf_height};
    return layout;
}

namespace {

struct RankedGraph {
    std::vector<std::vector<std::size_t>> predecessors;  // forward edges only
    std::vector<int> rank;
};

RankedGraph rank_children(std::span<const SizedNode> children, std::span<const Edge> edges)
{
    const std::size_t n = children.size();
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) {
        index.emplace(children[i].id, i);
    }
    std::vector<std::vector<std::size_t>> successors(n);
    for (const Edge& e : edges) {
        auto s = index.find(e.source);
        auto t = index.find(e.target);
        if (s != index.end() && t != index.end() && s->second != t->second) {
            successors[s->second].push_back(t->second);
        }
    }

    // Iterative depth-first search in input order; an edge into a node still
    // on the stack is a back edge.
    enum class Mark { Fresh, Active, Done };
    std::vector<Mark> mark(n, Mark::Fresh);
    std::vector<std::vector<bool>> forward(n);
    for (std::size_t i = 0; i < n; ++i) {
        forward[i].assign(successors[i].size(), true);
    }
    std::vector<std::size_t> post_order;
    for (std::size_t start = 0; start < n; ++start) {
        if (mark[start] != Mark::Fresh) {
            continue;
        }
        std::vector<std::pair<std::size_t, std::size_t>> stack{{start, 0}};
        mark[start] = Mark::Active;
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            if (next < successors[v].size()) {
                const std::size_t slot = next++;
                const std::size_t w = successors[v][slot];
                if (mark[w] == Mark::Active) {
                    forward[v][slot] = false;
                } else if (mark[w] == Mark::Fresh) {
                    mark[w] = Mark::Active;
                    stack.emplace_back(w, 0);
                }
            } else {
                mark[v] = Mark::Done;
                post_order.push_back(v);
                stack.pop_back();
            }
        }
    }

    RankedGraph ranked;
    ranked.predecessors.resize(n);
    ranked.rank.assign(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t slot = 0; slot < successors[v].size(); ++slot) {
            if (forward[v][slot]) {
                ranked.predecessors[successors[v][slot]].push_back(v);
            }
        }
    }
    // Reverse post-order is a topological order of the forward edges.
    for (auto it = post_order.rbegin(); it != post_order.rend(); ++it) {
        for (std::size_t p : ranked.predecessors[*it]) {
            ranked.rank[*it] = std::max(ranked.rank[*it], ranked.rank[p] + 1);
        }
    }
    return ranked;
}

}  // namespace

std::map<NodeId, int> layered_ranks(std::span<const SizedNode> children, std::span<const Edge> edges)
{
    const RankedGraph ranked = rank_children(children, edges);
    std::map<NodeId, int> result;
    for (std::size_t i = 0; i < children.size(); ++i) {
        result.emplace(children[i].id, ranked.rank[i]);
    }
    return result;
}

LocalLayout layered_layout(std::span<const SizedNode> children, std::span<const Edge> edges,
                           double spacing)
{
    LocalLayout layout;
    if (children.empty()) {
        return layout;
    }
    const RankedGraph ranked = rank_children(children, edges);
    const int rank_count = *std::max_element(ranked.rank.begin(), ranked.rank.end()) + 1;

    std::vector<std::vector<std::size_t>> layers(rank_count);
    for (std::size_t i = 0; i < children.size(); ++i) {
        layers[ranked.rank[i]].push_back(i);
    }

    // Single sweep: order each layer by the mean position of its predecessors.
    std::vector<double> position(children.size(), 0.0);
    for (int r = 0; r < rank_count; ++r) {
        auto& layer = layers[r];
        std::vector<double> barycenter(children.size(), 0.0);
        for (std::size_t slot = 0; slot < layer.size(); ++slot) {
            const std::size_t v = layer[slot];
            const auto& preds = ranked.predecessors[v];
            if (preds.empty()) {
                barycenter[v] = static_cast<double>(slot);
                continue;
            }
            double sum = 0.0;
            for (std::size_t p : preds) {
                sum += position[p];
            }
            barycenter[v] = sum / static_cast<double>(preds.size());
        }
        std::stable_sort(layer.begin(), layer.end(),
                         [&](std::size_t a, std::size_t b) { return barycenter[a] < barycenter[b]; });
        for (std::size_t slot = 0; slot < layer.size(); ++slot) {
            position[layer[slot]] = static_cast<double>(slot);
        }
    }

    std::vector<double> column_width(rank_count, 0.0);
    std::vector<double> column_height(rank_count, 0.0);
    for (int r = 0; r < rank_count; ++r) {
        for (std::size_t v : layers[r]) {
            column_width[r] = std::max(column_width[r], children[v].size.width);
            column_height[r] += children[v].size.height;
        }
        column_height[r] += spacing * static_cast<double>(layers[r].size() - 1);
    }
    const double total_height = *std::max_element(column_height.begin(), column_height.end());

    double x = 0.0;
    for (int r = 0; r < rank_count; ++r) {
        double y = (total_height - column_height[r]) / 2.0;
        for (std::size_t v : layers[r]) {
            const Size s = children[v].size;
            layout.node_rects.emplace(children[v].id,
                                      Rect{x + (column_width[r] - s.width) / 2.0, y, s.width, s.height});
            y += s.height + spacing;
        }
        x += column_width[r] + spacing;
    }
    route_straight_edges(layout, edges);
    std::vector<Rect> rects;
    for (const auto& [id, r] : layout.node_rects) {
        rects.push_back(r);
    }
    const Rect box = *bounding_box(rects);
    layout.size = {box.right(), box.bottom()};
    return layout;
}

LocalLayout radial_layout(const SizedNode& core, std::span<const SizedNode> satellites, double spacing)
{
    auto half_diagonal = [](Size s) { return 0.5 * std::hypot(s.width, s.height); };
    const double core_half = half_diagonal(core.size);
    double radius = 0.0;
    double widest = 0.0;
    for (const SizedNode& s : satellites) {
        radius = std::max(radius, core_half + half_diagonal(s.size) + spacing);
        widest = std::max(widest, half_diagonal(s.size));
    }
    const std::size_t k = satellites.size();
    if (k >= 2) {
        // Neighbouring satellites must not touch either.
        const double chord = 2.0 * std::sin(std::numbers::pi / static_cast<double>(k));
        radius = std::max(radius, (2.0 * widest + spacing) / chord);
    }

    std::vector<std::pair<NodeId, Rect>> placed;
    placed.emplace_back(core.id, Rect{-core.size.width / 2.0, -core.size.height / 2.0,
                                      core.size.width, core.size.height});
    for (std::size_t i = 0; i < k; ++i) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(k);
        const Size s = satellites[i].size;
        const double cx = radius * std::cos(angle);
        const double cy = radius * std::sin(angle);
        placed.emplace_back(satellites[i].id,
                            Rect{cx - s.width / 2.0, cy - s.height / 2.0, s.width, s.height});
    }
    std::vector<Rect> rects;
    for (const auto& [id, r] : placed) {
        rects.push_back(r);
    }
    const Rect box = *bounding_box(rects);

    LocalLayout layout;
    for (auto& [id, r] : placed) {
        r.x -= box.x;
        r.y -= box.y;
        layout.node_rects.emplace(id, r);
    }
    layout.size = box.size();
    return layout;
}

void route_straight_edges(LocalLayout& layout, std::span<const Edge> edges)
{
    for (const Edge& e : edges) {
        auto s = layout.node_rects.find(e.source);
        auto t = layout.node_rects.find(e.target);
        if (s == layout.node_rects.end() || t == layout.node_rects.end() || e.source == e.target) {
            continue;
        }
        if (auto route = clipped_center_segment(s->second, t->second)) {
            layout.edge_routes.emplace(e.id, std::move(*route));
        }
    }
}

HierarchyRouting route_hierarchy_edges(const std::map<NodeId, Rect>& absolute_rects,
                                       std::span<const Edge> edges)
{
    HierarchyRouting routing;
    for (const Edge& e : edges) {
        auto s = absolute_rects.find(e.source);
        auto t = absolute_rects.find(e.target);
        if (s == absolute_rects.end() || t == absolute_rects.end()) {
            routing.omitted.push_back(e.id);
            continue;
        }
        if (auto route = clipped_center_segment(s->second, t->second)) {
            routing.routes.emplace(e.id, std::move(*route));
            continue;
        }
        const Point a = s->second.center();
        const Point b = t->second.center();
        const Point mid{(a.x + b.x) / 2.0, (a.y + b.y) / 2.0};
        routing.routes.emplace(e.id, Polyline{mid, mid});
        routing.degenerate.push_back(e.id);
    }
    return routing;
}

}  // namespace zdown
