#include <unordered_map>
#include <unordered_set>

#include "zdown/graph.hpp"

namespace zdown {

std::string balloon_group_id(std::string_view id) { return "balloon:" + std::string(id); }

namespace {

struct OrientedTree {
    std::unordered_map<std::string, std::vector<NodeId>> children;
    std::unordered_map<std::string, EdgeId> edge_to;  // edge id reaching a node from its parent
};

OrientedTree orient_from_edges(const CompoundGraph& tree, const NodeId& root)
{
    std::unordered_map<std::string, std::vector<std::pair<NodeId, EdgeId>>> adjacent;
    for (const Edge& e : tree.edges()) {
        if (!tree.contains(e.source) || !tree.contains(e.target)) {
            throw TransformError("edge " + e.id + " references an unknown node");
        }
        if (e.source == e.target) {
            throw TransformError("not a tree: self-loop at " + e.source);
        }
        adjacent[e.source].emplace_back(e.target, e.id);
        adjacent[e.target].emplace_back(e.source, e.id);
    }

    OrientedTree oriented;
    std::unordered_set<std::string> visited{root};
    std::size_t tree_edges = 0;
    // Breadth-first orientation; children keep the order of their edges.
    std::vector<NodeId> order{root};
    for (std::size_t i = 0; i < order.size(); ++i) {
        const NodeId v = order[i];
        const EdgeId via = oriented.edge_to.count(v) ? oriented.edge_to.at(v) : EdgeId{};
        for (const auto& [w, edge] : adjacent[v]) {
            if (edge == via) {
                continue;
            }
            if (!visited.insert(w).second) {
                throw TransformError("not a tree: cycle through " + w);
            }
            oriented.children[v].push_back(w);
            oriented.edge_to[w] = edge;
            order.push_back(w);
            ++tree_edges;
        }
    }
    if (tree_edges != tree.edges().size()) {
        throw TransformError("not a tree: edges outside the component of " + root);
    }
    for (const Node& n : tree.nodes()) {
        if (!visited.count(n.id)) {
            throw TransformError("not a tree: node " + n.id + " is not connected to " + root);
        }
    }
    return oriented;
}

OrientedTree orient_from_containment(const CompoundGraph& tree, const NodeId& root)
{
    ValidationReport report = validate(tree);
    if (!report.ok()) {
        throw TransformError("containment is not a tree: " + report.violations.front().message);
    }
    if (tree.root() != root) {
        throw TransformError("requested root " + root + " is not the containment root");
    }
    OrientedTree oriented;
    for (const Node& n : tree.nodes()) {
        oriented.children[n.id] = n.children;
    }
    return oriented;
}

}  // namespace

CompoundGraph tree_to_balloon_compound(const CompoundGraph& tree, const NodeId& root)
{
    if (!tree.contains(root)) {
        throw TransformError("unknown tree root '" + root + "'");
    }
    const OrientedTree oriented =
        tree.edges().empty() ? orient_from_containment(tree, root) : orient_from_edges(tree, root);

    std::vector<Node> nodes;
    std::vector<Edge> edges;
    auto children_of = [&](const NodeId& id) -> const std::vector<NodeId>& {
        static const std::vector<NodeId> kNone;
        auto it = oriented.children.find(id);
        return it == oriented.children.end() ? kNone : it->second;
    };
    auto edge_id = [&](const NodeId& child) {
        auto it = oriented.edge_to.find(child);
        return it != oriented.edge_to.end() ? it->second : "e" + std::to_string(edges.size());
    };

    // Returns the id of the node that represents `v` inside its parent group.
    auto build = [&](auto&& self, const NodeId& v, bool top) -> NodeId {
        Node original = tree.node(v);
        original.children.clear();
        original.type = top ? NodeType::Root : NodeType::Flexible;
        const auto& kids = children_of(v);
        if (kids.empty()) {
            nodes.push_back(original);
            return original.id;
        }

        const std::size_t group_index = nodes.size();
        Node group;
        group.id = balloon_group_id(v);
        group.type = top ? NodeType::Root : NodeType::Flexible;
        group.base = original.base;
        group.algorithm = Algorithm::Radial;
        group.approximator = original.approximator;
        nodes.push_back(group);

        Node core = original;
        core.type = NodeType::Flexible;
        core.core = true;
        nodes.push_back(core);

        std::vector<NodeId> members{core.id};
        for (const NodeId& w : kids) {
            members.push_back(self(self, w, false));
            // Internal children are represented by their group; the edge keeps
            // the original endpoints and therefore crosses into that group.
            edges.push_back({edge_id(w), v, w});
        }
        nodes[group_index].children = std::move(members);
        return nodes[group_index].id;
    };

    const NodeId new_root = build(build, root, true);
    return CompoundGraph(std::move(nodes), std::move(edges), new_root);
}

}  // namespace zdown
