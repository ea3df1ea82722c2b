#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "zdown/geometry.hpp"

namespace zdown {

using NodeId = std::string;
using EdgeId = std::string;

enum class NodeType { Root, Flexible, Fixed };
enum class Algorithm { TopdownPacking, Shelf, Layered, Radial };
enum class Approximator { Base, NodeCount, Lookahead };

inline constexpr Size kDefaultBaseSize{100.0, 60.0};
inline constexpr double kDefaultLabelHeight = 12.0;
inline constexpr double kDefaultCharWidth = 7.0;

std::string_view to_string(NodeType type);
std::string_view to_string(Algorithm algorithm);
std::string_view to_string(Approximator approximator);
std::optional<NodeType> parse_node_type(std::string_view text);
std::optional<Algorithm> parse_algorithm(std::string_view text);
std::optional<Approximator> parse_approximator(std::string_view text);

struct Label {
    std::string text;
    double unit_width = 0.0;
    double unit_height = kDefaultLabelHeight;

    /// Label sized from its text with the default glyph metrics.
    static Label from_text(std::string text);

    bool operator==(const Label&) const = default;
};

struct Node {
    NodeId id;
    NodeType type = NodeType::Flexible;
    Size base = kDefaultBaseSize;
    std::vector<NodeId> children;
    Algorithm algorithm = Algorithm::Shelf;
    Approximator approximator = Approximator::NodeCount;
    std::optional<Label> title;
    // Balloon-tree core marker; drawn distinctly by renderers.
    bool core = false;

    bool is_leaf() const { return children.empty(); }
    bool operator==(const Node&) const = default;
};

struct Edge {
    EdgeId id;
    NodeId source;
    NodeId target;

    bool operator==(const Edge&) const = default;
};

/// Immutable compound graph. Containment is stored child-ward; the parent
/// index is derived on construction. Structural problems are representable
/// so that validate() can report them.
class CompoundGraph {
public:
    CompoundGraph() = default;
    CompoundGraph(std::vector<Node> nodes, std::vector<Edge> edges, NodeId root);

    const NodeId& root() const { return root_; }
    const std::vector<Node>& nodes() const { return nodes_; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool contains(std::string_view id) const;
    /// Throws std::out_of_range for unknown ids.
    const Node& node(std::string_view id) const;
    const Node* find(std::string_view id) const;
    /// First parent found for `id`; nullopt for the root and orphans.
    std::optional<NodeId> parent(std::string_view id) const;
    /// Number of containment steps from the root; nullopt if unreachable.
    std::optional<int> depth(std::string_view id) const;

    /// Derived: endpoints exist and do not share a parent.
    bool is_hierarchy_crossing(const Edge& edge) const;
    /// Edges whose endpoints are both children of `container`.
    std::vector<const Edge*> sibling_edges(std::string_view container) const;
    std::vector<const Edge*> hierarchy_crossing_edges() const;

    /// Nodes reachable from the root in pre-order, children in stored order.
    std::vector<NodeId> preorder() const;

    bool operator==(const CompoundGraph& other) const
    {
        return root_ == other.root_ && nodes_ == other.nodes_ && edges_ == other.edges_;
    }

private:
    std::vector<Node> nodes_;
    std::vector<Edge> edges_;
    NodeId root_;
    std::unordered_map<std::string, std::size_t> index_;
    std::unordered_map<std::string, std::string> parent_;
};

/// Accumulates nodes and edges; build() does not validate.
class GraphBuilder {
public:
    Node& add_node(Node node);
    /// Adds `node` and appends it to `parent`'s children.
    Node& add_child(const NodeId& parent, Node node);
    void add_edge(NodeId source, NodeId target, EdgeId id = {});
    void set_root(NodeId root) { root_ = std::move(root); }
    Node* find(std::string_view id);

    CompoundGraph build() const;

private:
    std::vector<Node> nodes_;
    std::vector<Edge> edges_;
    NodeId root_;
};

// ---------------------------------------------------------------------------
// Validation

struct Violation {
    std::string kind;
    std::string message;
    std::vector<std::string> ids;
};

struct ValidationOptions {
    bool allow_hierarchy_edges = true;
};

struct ValidationReport {
    std::vector<Violation> violations;
    std::vector<Violation> warnings;
    std::vector<EdgeId> hierarchy_crossing;

    bool ok() const { return violations.empty(); }
    std::string summary() const;
};

ValidationReport validate(const CompoundGraph& graph, const ValidationOptions& options = {});

// ---------------------------------------------------------------------------
// Synthetic corpus

struct GeneratorOptions {
    std::uint64_t seed = 1;
    int max_depth = 3;
    int max_children = 4;
    double label_probability = 0.5;
    /// Chance that a compound node on an even level becomes a FIXED packing container.
    double fixed_probability = 0.0;
    /// Chance of an edge between consecutive siblings.
    double edge_probability = 0.3;
    /// Upper bound on node count; generation stops adding children once reached.
    int max_nodes = 2000;
    /// Root always carries a title.
    bool root_title = true;
};

CompoundGraph generate_random_graph(const GeneratorOptions& options);

inline CompoundGraph generate_random_graph(std::uint64_t seed, int max_depth, int max_children,
                                           double label_probability)
{
    GeneratorOptions options;
    options.seed = seed;
    options.max_depth = max_depth;
    options.max_children = max_children;
    options.label_probability = label_probability;
    return generate_random_graph(options);
}

/// Complete k-ary tree of the given depth as a flat graph whose edges mirror
/// the containment tree.
CompoundGraph make_complete_tree(int arity, int depth);

// ---------------------------------------------------------------------------
// Balloon trees

class TransformError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Id of the compound node created for internal tree node `id`.
std::string balloon_group_id(std::string_view id);

/// Restructures a tree so every internal node becomes a compound node holding
/// the node itself (marked core) and one entry per child. The tree is read
/// from the edges when present, otherwise from containment.
CompoundGraph tree_to_balloon_compound(const CompoundGraph& tree, const NodeId& root);

}  // namespace zdown
