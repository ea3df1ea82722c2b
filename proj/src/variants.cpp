#include "zdown/variants.hpp"

namespace zdown {

std::string_view to_string(Variant variant)
{
    switch (variant) {
    case Variant::Flexible:
        return "flexible";
    case Variant::Lookahead:
        return "lookahead";
    case Variant::Fixed:
        return "fixed";
    }
    return "flexible";
}

std::optional<Variant> parse_variant(std::string_view text)
{
    for (Variant v : {Variant::Flexible, Variant::Lookahead, Variant::Fixed}) {
        if (to_string(v) == text) {
            return v;
        }
    }
    return std::nullopt;
}

CompoundGraph apply_variant(const CompoundGraph& graph, Variant variant)
{
    std::vector<Node> nodes = graph.nodes();
    for (Node& n : nodes) {
        if (n.id == graph.root()) {
            n.type = NodeType::Root;
            continue;
        }
        n.type = NodeType::Flexible;
        n.approximator = variant == Variant::Lookahead ? Approximator::Lookahead : Approximator::NodeCount;
        if (variant == Variant::Fixed && !n.children.empty()) {
            const int depth = graph.depth(n.id).value_or(1);
            if (depth >= 2 && depth % 2 == 0) {
                n.type = NodeType::Fixed;
                n.algorithm = Algorithm::TopdownPacking;
            }
        }
    }
    return CompoundGraph(std::move(nodes), graph.edges(), graph.root());
}

}  // namespace zdown
