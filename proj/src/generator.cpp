#include <deque>
#include <random>

#include "zdown/graph.hpp"

namespace zdown {

namespace {

// Draws built directly on the engine output so sequences do not depend on the
// standard library's distribution implementations.
class Draw {
public:
    explicit Draw(std::uint64_t seed) : engine_(seed) {}

    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    bool chance(double p) { return unit() < p; }
    int between(int lo, int hi) { return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1)); }

private:
    std::mt19937_64 engine_;
};

struct Pending {
    std::size_t index;
    int depth;
    bool spine;
};

}  // namespace

CompoundGraph generate_random_graph(const GeneratorOptions& options)
{
    Draw draw(options.seed);
    std::vector<Node> nodes;
    std::vector<Edge> edges;
    const int max_nodes = std::max(1, options.max_nodes);

    auto make_title = [&](const std::string& id) { return Label::from_text("State " + id); };
    auto pick_algorithm = [&] {
        static constexpr Algorithm kChoices[] = {Algorithm::Shelf, Algorithm::Layered,
                                                 Algorithm::TopdownPacking, Algorithm::Radial};
        return kChoices[draw.between(0, 3)];
    };

    Node root;
    root.id = "root";
    root.type = NodeType::Root;
    if (options.root_title || draw.chance(options.label_probability)) {
        root.title = make_title(root.id);
    }
    nodes.push_back(root);

    std::deque<Pending> queue{{0, 0, true}};
    int next_id = 1;
    while (!queue.empty()) {
        const Pending current = queue.front();
        queue.pop_front();
        if (current.depth >= options.max_depth) {
            continue;
        }
        int count = current.index == 0 ? options.max_children : draw.between(0, options.max_children);
        if (current.spine) {
            count = std::max(count, 1);
        }
        count = std::min(count, max_nodes - static_cast<int>(nodes.size()));
        if (count <= 0) {
            continue;
        }

        Node& parent = nodes[current.index];
        parent.algorithm = pick_algorithm();
        const bool even_level = current.depth % 2 == 0;
        if (current.depth >= 2 && even_level && draw.chance(options.fixed_probability)) {
            parent.type = NodeType::Fixed;
            parent.algorithm = Algorithm::TopdownPacking;
        }

        std::vector<NodeId> child_ids;
        for (int i = 0; i < count; ++i) {
            Node child;
            child.id = "n" + std::to_string(next_id++);
            child.base = {static_cast<double>(draw.between(6, 14) * 10),
                          static_cast<double>(draw.between(4, 8) * 10)};
            if (draw.chance(options.label_probability)) {
                child.title = make_title(child.id);
            }
            child_ids.push_back(child.id);
            queue.push_back({nodes.size(), current.depth + 1, current.spine && i == 0});
            nodes.push_back(std::move(child));
        }
        nodes[current.index].children = child_ids;

        for (std::size_t i = 0; i + 1 < child_ids.size(); ++i) {
            if (draw.chance(options.edge_probability)) {
                edges.push_back({"e" + std::to_string(edges.size()), child_ids[i], child_ids[i + 1]});
            }
        }
        if (child_ids.size() > 2 && draw.chance(options.edge_probability / 3.0)) {
            edges.push_back({"e" + std::to_string(edges.size()), child_ids.back(), child_ids.front()});
        }
    }
    return CompoundGraph(std::move(nodes), std::move(edges), "root");
}

CompoundGraph make_complete_tree(int arity, int depth)
{
    GraphBuilder builder;
    Node root;
    root.id = "t0";
    root.type = NodeType::Root;
    builder.add_node(root);
    builder.set_root(root.id);
    std::vector<NodeId> level{root.id};
    int next = 1;
    for (int d = 0; d < depth; ++d) {
        std::vector<NodeId> next_level;
        for (const NodeId& parent : level) {
            for (int i = 0; i < arity; ++i) {
                Node child;
                child.id = "t" + std::to_string(next++);
                child.base = {40.0, 40.0};
                builder.add_child(parent, child);
                builder.add_edge(parent, child.id);
                next_level.push_back(child.id);
            }
        }
        level = std::move(next_level);
    }
    return builder.build();
}

}  // namespace zdown
