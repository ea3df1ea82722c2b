// Shared fixtures and independent oracles for the test binaries.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "zdown/engine.hpp"
#include "zdown/graph.hpp"

namespace zdown::support {

// Seeded corpus entry: sizes vary with the seed so that shallow, deep,
// narrow and wide graphs all appear.
inline GeneratorOptions corpus_options(std::uint64_t seed, int max_nodes = 300)
{
    GeneratorOptions o;
    o.seed = seed;
    o.max_depth = 1 + static_cast<int>(seed % 5);
    o.max_children = 1 + static_cast<int>((seed / 5) % 6);
    o.label_probability = 0.6;
    o.fixed_probability = 0.3;
    o.edge_probability = 0.4;
    o.max_nodes = max_nodes;
    return o;
}

inline CompoundGraph corpus_graph(std::uint64_t seed, int max_nodes = 300)
{
    return generate_random_graph(corpus_options(seed, max_nodes));
}

/// 2-D affine map x' = s*x + t, composed by hand rather than by the engine's
/// recursive accumulation.
struct Affine {
    double s = 1.0;
    double tx = 0.0;
    double ty = 0.0;

    Affine then(const Affine& inner) const { return {s * inner.s, tx + s * inner.tx, ty + s * inner.ty}; }
    Point apply(Point p) const { return {tx + s * p.x, ty + s * p.y}; }
};

/// Absolute rect of `id` computed from the chain of ancestors, outermost first.
inline Rect oracle_absolute_rect(const Layout& layout, const CompoundGraph& graph, const NodeId& id)
{
    std::vector<NodeId> chain{id};
    for (auto p = graph.parent(id); p; p = graph.parent(*p)) {
        chain.push_back(*p);
    }
    std::reverse(chain.begin(), chain.end());
    Affine frame;  // maps the current node's parent child-frame to absolute
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        const NodeLayout& l = layout.nodes.at(chain[i]);
        const Affine own{1.0, l.rect.x, l.rect.y};
        const Affine content{l.child_scale, l.content_offset.x, l.content_offset.y};
        frame = frame.then(own).then(content);
    }
    const Rect& r = layout.nodes.at(id).rect;
    const Point origin = frame.apply({r.x, r.y});
    return {origin.x, origin.y, frame.s * r.width, frame.s * r.height};
}

/// Largest amount by which a laid-out child pokes out of its parent's content
/// area, measured in the parent's own frame. Zero means contained.
inline double max_child_overflow(const Layout& layout, const CompoundGraph& graph, const LayoutOptions& options,
                                 NodeId* worst = nullptr)
{
    double overflow = 0.0;
    for (const auto& [id, l] : layout.nodes) {
        const Node& node = graph.node(id);
        if (!l.laid_out || node.is_leaf()) {
            continue;
        }
        const Rect content = content_box(node, l.rect.size(), options);
        for (const NodeId& child : node.children) {
            auto it = layout.nodes.find(child);
            if (it == layout.nodes.end()) {
                continue;
            }
            const Rect& r = it->second.rect;
            const double x0 = l.content_offset.x + l.child_scale * r.x;
            const double y0 = l.content_offset.y + l.child_scale * r.y;
            const double x1 = x0 + l.child_scale * r.width;
            const double y1 = y0 + l.child_scale * r.height;
            const double o = std::max({content.x - x0, content.y - y0, x1 - content.right(), y1 - content.bottom(),
                                       0.0});
            if (o > overflow) {
                overflow = o;
                if (worst) {
                    *worst = id;
                }
            }
        }
    }
    return overflow;
}

/// Exact size each node reaches in a bottom-up run: the perfect size predictor.
inline std::map<NodeId, Size> bottom_up_sizes(const CompoundGraph& graph, const Layout& bottom_up,
                                              const LayoutOptions& options)
{
    std::map<NodeId, Size> sizes;
    for (const auto& [id, l] : bottom_up.nodes) {
        const Node& n = graph.node(id);
        sizes[id] = n.is_leaf() ? n.base : frame_size(n, l.drawing, options);
    }
    return sizes;
}

/// Compound nodes in pre-order.
inline std::vector<NodeId> compound_nodes(const CompoundGraph& graph)
{
    std::vector<NodeId> out;
    for (const NodeId& id : graph.preorder()) {
        if (!graph.node(id).is_leaf()) {
            out.push_back(id);
        }
    }
    return out;
}

inline bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

inline bool near(const Rect& a, const Rect& b, double tol)
{
    return near(a.x, b.x, tol) && near(a.y, b.y, tol) && near(a.width, b.width, tol) &&
           near(a.height, b.height, tol);
}

}  // namespace zdown::support
