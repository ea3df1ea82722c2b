#include "zdown/graph.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace zdown {

namespace {

template <typename Enum, std::size_t N>
std::optional<Enum> lookup(const std::pair<Enum, std::string_view> (&table)[N], std::string_view text)
{
    for (const auto& [value, name] : table) {
        if (name == text) {
            return value;
        }
    }
    return std::nullopt;
}

template <typename Enum, std::size_t N>
std::string_view name_of(const std::pair<Enum, std::string_view> (&table)[N], Enum value)
{
    for (const auto& [candidate, name] : table) {
        if (candidate == value) {
            return name;
        }
    }
    return "UNKNOWN";
}

constexpr std::pair<NodeType, std::string_view> kNodeTypes[] = {
    {NodeType::Root, "ROOT"}, {NodeType::Flexible, "FLEXIBLE"}, {NodeType::Fixed, "FIXED"}};
constexpr std::pair<Algorithm, std::string_view> kAlgorithms[] = {
    {Algorithm::TopdownPacking, "TOPDOWNPACKING"},
    {Algorithm::Shelf, "SHELF"},
    {Algorithm::Layered, "LAYERED"},
    {Algorithm::Radial, "RADIAL"}};
constexpr std::pair<Approximator, std::string_view> kApproximators[] = {
    {Approximator::Base, "BASE"},
    {Approximator::NodeCount, "NODE_COUNT"},
    {Approximator::Lookahead, "LOOKAHEAD"}};

}  // namespace

std::string_view to_string(NodeType type) { return name_of(kNodeTypes, type); }
std::string_view to_string(Algorithm algorithm) { return name_of(kAlgorithms, algorithm); }
std::string_view to_string(Approximator approximator) { return name_of(kApproximators, approximator); }
std::optional<NodeType> parse_node_type(std::string_view text) { return lookup(kNodeTypes, text); }
std::optional<Algorithm> parse_algorithm(std::string_view text) { return lookup(kAlgorithms, text); }
std::optional<Approximator> parse_approximator(std::string_view text)
{
    return lookup(kApproximators, text);
}

Label Label::from_text(std::string text)
{
    Label label;
    label.unit_width = kDefaultCharWidth * static_cast<double>(text.size());
    label.unit_height = kDefaultLabelHeight;
    label.text = std::move(text);
    return label;
}

// ---------------------------------------------------------------------------

CompoundGraph::CompoundGraph(std::vector<Node> nodes, std::vector<Edge> edges, NodeId root)
    : nodes_(std::move(nodes)), edges_(std::move(edges)), root_(std::move(root))
{
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        index_.try_emplace(nodes_[i].id, i);
    }
    for (const Node& n : nodes_) {
        for (const NodeId& child : n.children) {
            parent_.try_emplace(child, n.id);
        }
    }
}

bool CompoundGraph::contains(std::string_view id) const { return find(id) != nullptr; }

const Node& CompoundGraph::node(std::string_view id) const
{
    const Node* n = find(id);
    if (n == nullptr) {
        throw std::out_of_range("unknown node '" + std::string(id) + "'");
    }
    return *n;
}

const Node* CompoundGraph::find(std::string_view id) const
{
    auto it = index_.find(std::string(id));
    return it == index_.end() ? nullptr : &nodes_[it->second];
}

std::optional<NodeId> CompoundGraph::parent(std::string_view id) const
{
    auto it = parent_.find(std::string(id));
    if (it == parent_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::optional<int> CompoundGraph::depth(std::string_view id) const
{
    int d = 0;
    std::string current(id);
    while (current != root_) {
        auto it = parent_.find(current);
        if (it == parent_.end() || d > static_cast<int>(nodes_.size())) {
            return std::nullopt;
        }
        current = it->second;
        ++d;
    }
    return d;
}

bool CompoundGraph::is_hierarchy_crossing(const Edge& edge) const
{
    if (!contains(edge.source) || !contains(edge.target)) {
        return false;
    }
    return parent(edge.source) != parent(edge.target);
}

std::vector<const Edge*> CompoundGraph::sibling_edges(std::string_view container) const
{
    std::vector<const Edge*> result;
    for (const Edge& e : edges_) {
        auto ps = parent(e.source);
        auto pt = parent(e.target);
        if (ps && pt && *ps == container && *pt == container) {
            result.push_back(&e);
        }
    }
    return result;
}

std::vector<const Edge*> CompoundGraph::hierarchy_crossing_edges() const
{
    std::vector<const Edge*> result;
    for (const Edge& e : edges_) {
        if (is_hierarchy_crossing(e)) {
            result.push_back(&e);
        }
    }
    return result;
}

std::vector<NodeId> CompoundGraph::preorder() const
{
    std::vector<NodeId> order;
    if (!contains(root_)) {
        return order;
    }
    std::unordered_set<std::string> seen;
    std::vector<std::string> stack{root_};
    while (!stack.empty()) {
        std::string id = std::move(stack.back());
        stack.pop_back();
        if (!seen.insert(id).second) {
            continue;
        }
        const Node* n = find(id);
        if (n == nullptr) {
            continue;
        }
        order.push_back(id);
        for (auto it = n->children.rbegin(); it != n->children.rend(); ++it) {
            stack.push_back(*it);
        }
    }
    return order;
}

// ---------------------------------------------------------------------------

Node& GraphBuilder::add_node(Node node)
{
    nodes_.push_back(std::move(node));
    return nodes_.back();
}

Node& GraphBuilder::add_child(const NodeId& parent, Node node)
{
    Node* p = find(parent);
    if (p == nullptr) {
        throw std::out_of_range("unknown parent '" + parent + "'");
    }
    p->children.push_back(node.id);
    return add_node(std::move(node));
}

void GraphBuilder::add_edge(NodeId source, NodeId target, EdgeId id)
{
    if (id.empty()) {
        id = "e" + std::to_string(edges_.size());
    }
    edges_.push_back(Edge{std::move(id), std::move(source), std::move(target)});
}

Node* GraphBuilder::find(std::string_view id)
{
    auto it = std::find_if(nodes_.begin(), nodes_.end(), [&](const Node& n) { return n.id == id; });
    return it == nodes_.end() ? nullptr : &*it;
}

CompoundGraph GraphBuilder::build() const
{
    NodeId root = root_;
    if (root.empty() && !nodes_.empty()) {
        root = nodes_.front().id;
    }
    return CompoundGraph(nodes_, edges_, root);
}

// ---------------------------------------------------------------------------

std::string ValidationReport::summary() const
{
    std::ostringstream out;
    for (const Violation& v : violations) {
        out << "error: " << v.message << '\n';
    }
    for (const Violation& w : warnings) {
        out << "warning: " << w.message << '\n';
    }
    if (!hierarchy_crossing.empty()) {
        out << "note: " << hierarchy_crossing.size() << " hierarchy-crossing edge(s)\n";
    }
    return out.str();
}

ValidationReport validate(const CompoundGraph& graph, const ValidationOptions& options)
{
    ValidationReport report;
    auto violation = [&](std::string kind, std::string message, std::vector<std::string> ids) {
        report.violations.push_back({std::move(kind), std::move(message), std::move(ids)});
    };

    const NodeId& root = graph.root();
    if (!graph.contains(root)) {
        violation("missing-root", "root '" + root + "' is not a node of the graph", {root});
    }

    std::unordered_map<std::string, int> occurrences;
    std::unordered_map<std::string, int> child_listings;
    for (const Node& n : graph.nodes()) {
        if (n.id.empty()) {
            violation("empty-id", "node with empty id", {});
        }
        if (++occurrences[n.id] == 2) {
            violation("duplicate-id", "duplicate node id '" + n.id + "'", {n.id});
        }
        if (!(n.base.width > 0.0) || !(n.base.height > 0.0)) {
            violation("base-size", "non-positive base size at " + n.id, {n.id});
        }
        if (n.title && !(n.title->unit_height > 0.0)) {
            violation("label-size", "non-positive label height at " + n.id, {n.id});
        }
        if (n.type == NodeType::Root && n.id != root) {
            violation("extra-root", "node " + n.id + " has type ROOT but is not the root", {n.id});
        }
        for (const NodeId& child : n.children) {
            if (!graph.contains(child)) {
                violation("unknown-child", "unknown child '" + child + "' of " + n.id, {n.id, child});
            }
            if (++child_listings[child] == 2) {
                violation("non-tree", "non-tree containment at " + child, {child});
            }
            if (child == root) {
                violation("root-contained", "root " + root + " listed as child of " + n.id, {n.id, root});
            }
        }
        if (n.type == NodeType::Fixed && !n.children.empty() &&
            n.algorithm != Algorithm::TopdownPacking) {
            report.warnings.push_back({"fixed-algorithm",
                                       "FIXED node " + n.id + " uses " +
                                           std::string(to_string(n.algorithm)) +
                                           ", which cannot fill an assigned size",
                                       {n.id}});
        }
    }
    if (const Node* r = graph.find(root); r != nullptr && r->type != NodeType::Root) {
        violation("root-type", "root " + root + " does not have type ROOT", {root});
    }

    // Every node must hang off the root through an acyclic parent chain.
    for (const Node& n : graph.nodes()) {
        std::unordered_set<std::string> chain;
        std::string current = n.id;
        bool reached = false;
        while (true) {
            if (current == root) {
                reached = true;
                break;
            }
            if (!chain.insert(current).second) {
                violation("cycle", "containment cycle through " + n.id, {n.id});
                reached = true;
                break;
            }
            auto p = graph.parent(current);
            if (!p) {
                break;
            }
            current = *p;
        }
        if (!reached) {
            violation("unreachable", "node " + n.id + " is not contained in root " + root, {n.id});
        }
    }

    std::unordered_set<std::string> edge_ids;
    for (const Edge& e : graph.edges()) {
        if (!edge_ids.insert(e.id).second) {
            violation("duplicate-edge-id", "duplicate edge id '" + e.id + "'", {e.id});
        }
        bool endpoints = true;
        for (const NodeId* end : {&e.source, &e.target}) {
            if (!graph.contains(*end)) {
                violation("unknown-endpoint", "edge " + e.id + " references unknown node '" + *end + "'",
                          {e.id, *end});
                endpoints = false;
            }
        }
        if (endpoints && graph.is_hierarchy_crossing(e)) {
            if (options.allow_hierarchy_edges) {
                report.hierarchy_crossing.push_back(e.id);
            } else {
                violation("hierarchy-edge", "edge " + e.id + " crosses hierarchy levels", {e.id});
            }
        }
    }
    return report;
}

}  // namespace zdown
