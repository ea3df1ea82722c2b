#include "zdown/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

namespace zdown {

using json = nlohmann::ordered_json;

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                                        message
                                  : message),
      line_(line), column_(column)
{
}

std::string format_number(double value)
{
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.6f", value);
    std::string text = buffer;
    if (text.find('.') != std::string::npos) {
        while (text.back() == '0') {
            text.pop_back();
        }
        if (text.back() == '.') {
            text.pop_back();
        }
    }
    if (text == "-0") {
        text = "0";
    }
    return text;
}

namespace {

double round6(double value)
{
    const double r = std::round(value * 1e6) / 1e6;
    return r == 0.0 ? 0.0 : r;
}

json parse_json(std::string_view text)
{
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        // e.byte counts from 1 and points just past the offending character.
        std::size_t line = 1;
        std::size_t column = 1;
        const std::size_t end = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
        for (std::size_t i = 0; i < end; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        std::string what = e.what();
        if (auto pos = what.find("syntax error"); pos != std::string::npos) {
            what = what.substr(pos);
        }
        throw ParseError(what, line, column);
    }
}

// Deepest node that strictly contains both endpoints; the root if none does.
NodeId edge_container(const CompoundGraph& graph, const Edge& edge)
{
    std::unordered_set<std::string> above_source;
    for (auto p = graph.parent(edge.source); p; p = graph.parent(*p)) {
        above_source.insert(*p);
    }
    for (auto p = graph.parent(edge.target); p; p = graph.parent(*p)) {
        if (above_source.count(*p)) {
            return *p;
        }
    }
    return graph.root();
}

class GraphReader {
public:
    CompoundGraph read(const json& doc)
    {
        if (!doc.is_object()) {
            throw ParseError("graph document must be an object");
        }
        const NodeId root = read_node(doc, true);
        builder_.set_root(root);
        CompoundGraph graph = builder_.build();

        // Canonical edge order: by container in pre-order, stable otherwise.
        std::unordered_map<std::string, std::size_t> order;
        const auto pre = graph.preorder();
        for (std::size_t i = 0; i < pre.size(); ++i) {
            order.emplace(pre[i], i);
        }
        std::vector<std::pair<std::size_t, Edge>> keyed;
        for (const Edge& e : graph.edges()) {
            auto it = order.find(edge_container(graph, e));
            keyed.emplace_back(it == order.end() ? 0 : it->second, e);
        }
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<Edge> edges;
        for (auto& [key, e] : keyed) {
            edges.push_back(std::move(e));
        }
        CompoundGraph canonical(graph.nodes(), std::move(edges), root);

        const ValidationReport report = validate(canonical);
        if (!report.ok()) {
            throw ParseError("invalid graph: " + report.summary());
        }
        return canonical;
    }

private:
    NodeId read_node(const json& j, bool top)
    {
        if (!j.is_object()) {
            throw ParseError("node entry must be an object");
        }
        if (!j.contains("id") || !j["id"].is_string()) {
            throw ParseError("node without string id");
        }
        Node node;
        node.id = j["id"].get<std::string>();
        if (!seen_.insert(node.id).second) {
            throw ParseError("duplicate id '" + node.id + "'");
        }
        node.type = top ? NodeType::Root : NodeType::Flexible;
        if (j.contains("nodeType")) {
            const std::string text = string_field(j, "nodeType", node.id);
            auto type = parse_node_type(text);
            if (!type) {
                throw ParseError("unknown nodeType '" + text + "' on node '" + node.id + "'");
            }
            node.type = *type;
        }
        node.base.width = number_field(j, "width", node.base.width, node.id);
        node.base.height = number_field(j, "height", node.base.height, node.id);
        if (j.contains("title")) {
            node.title = read_label(j["title"], node.id);
        }
        if (j.contains("layoutOptions")) {
            const json& lo = j["layoutOptions"];
            if (!lo.is_object()) {
                throw ParseError("layoutOptions of '" + node.id + "' must be an object");
            }
            if (lo.contains("algorithm")) {
                const std::string text = string_field(lo, "algorithm", node.id);
                auto algorithm = parse_algorithm(text);
                if (!algorithm) {
                    throw ParseError("unknown algorithm '" + text + "' on node '" + node.id + "'");
                }
                node.algorithm = *algorithm;
            }
            if (lo.contains("approximator")) {
                const std::string text = string_field(lo, "approximator", node.id);
                auto approximator = parse_approximator(text);
                if (!approximator) {
                    throw ParseError("unknown approximator '" + text + "' on node '" + node.id + "'");
                }
                node.approximator = *approximator;
            }
        }
        if (j.contains("core")) {
            if (!j["core"].is_boolean()) {
                throw ParseError("core of '" + node.id + "' must be a boolean");
            }
            node.core = j["core"].get<bool>();
        }
        if (j.contains("edges")) {
            if (!j["edges"].is_array()) {
                throw ParseError("edges of '" + node.id + "' must be an array");
            }
            for (const json& e : j["edges"]) {
                if (!e.is_object()) {
                    throw ParseError("edge entry in '" + node.id + "' must be an object");
                }
                const std::string source = string_field(e, "source", node.id);
                const std::string target = string_field(e, "target", node.id);
                std::string id = e.contains("id") ? string_field(e, "id", node.id) : std::string{};
                edges_.push_back({std::move(id), source, target});
            }
        }
        const NodeId id = node.id;
        builder_.add_node(std::move(node));
        if (j.contains("children")) {
            if (!j["children"].is_array()) {
                throw ParseError("children of '" + id + "' must be an array");
            }
            for (const json& child : j["children"]) {
                NodeId c = read_node(child, false);
                builder_.find(id)->children.push_back(std::move(c));
            }
        }
        if (top) {
            std::size_t k = 0;
            for (Edge& e : edges_) {
                builder_.add_edge(std::move(e.source), std::move(e.target),
                                  e.id.empty() ? "e" + std::to_string(k) : std::move(e.id));
                ++k;
            }
        }
        return id;
    }

    static std::string string_field(const json& j, const char* key, const std::string& owner)
    {
        if (!j.contains(key) || !j[key].is_string()) {
            throw ParseError(std::string("missing or non-string '") + key + "' in '" + owner + "'");
        }
        return j[key].get<std::string>();
    }

    static double number_field(const json& j, const char* key, double fallback, const std::string& owner)
    {
        if (!j.contains(key)) {
            return fallback;
        }
        if (!j[key].is_number()) {
            throw ParseError(std::string("'") + key + "' of '" + owner + "' must be a number");
        }
        return j[key].get<double>();
    }

    static Label read_label(const json& j, const std::string& owner)
    {
        if (j.is_string()) {
            return Label::from_text(j.get<std::string>());
        }
        if (!j.is_object()) {
            throw ParseError("title of '" + owner + "' must be a string or an object");
        }
        Label label = Label::from_text(string_field(j, "text", owner));
        label.unit_width = number_field(j, "width", label.unit_width, owner);
        label.unit_height = number_field(j, "height", label.unit_height, owner);
        return label;
    }

    GraphBuilder builder_;
    std::unordered_set<std::string> seen_;
    std::vector<Edge> edges_;
};

json write_node(const CompoundGraph& graph, const NodeId& id,
                const std::unordered_map<std::string, std::vector<const Edge*>>& edges_by_container)
{
    const Node& node = graph.node(id);
    json j;
    j["id"] = node.id;
    j["nodeType"] = to_string(node.type);
    j["width"] = node.base.width;
    j["height"] = node.base.height;
    if (node.title) {
        if (*node.title == Label::from_text(node.title->text)) {
            j["title"] = node.title->text;
        } else {
            j["title"] = {{"text", node.title->text},
                          {"width", node.title->unit_width},
                          {"height", node.title->unit_height}};
        }
    }
    j["layoutOptions"] = {{"algorithm", to_string(node.algorithm)}, {"approximator", to_string(node.approximator)}};
    if (node.core) {
        j["core"] = true;
    }
    if (!node.children.empty()) {
        json children = json::array();
        for (const NodeId& child : node.children) {
            children.push_back(write_node(graph, child, edges_by_container));
        }
        j["children"] = std::move(children);
    }
    if (auto it = edges_by_container.find(id); it != edges_by_container.end()) {
        json edges = json::array();
        for (const Edge* e : it->second) {
            edges.push_back({{"id", e->id}, {"source", e->source}, {"target", e->target}});
        }
        j["edges"] = std::move(edges);
    }
    return j;
}

json graph_json(const CompoundGraph& graph)
{
    std::unordered_map<std::string, std::vector<const Edge*>> by_container;
    for (const Edge& e : graph.edges()) {
        by_container[edge_container(graph, e)].push_back(&e);
    }
    return write_node(graph, graph.root(), by_container);
}

Rect round6(const Rect& r) { return {round6(r.x), round6(r.y), round6(r.width), round6(r.height)}; }

// The document only carries 6 decimals, so the derived sections are computed
// from the rounded layout. Reading a document back then reproduces it exactly.
Layout rounded(const Layout& layout)
{
    Layout out = layout;
    out.size = {round6(layout.size.width), round6(layout.size.height)};
    for (auto& [id, l] : out.nodes) {
        l.rect = round6(l.rect);
        l.child_scale = round6(l.child_scale);
        l.content_offset = {round6(l.content_offset.x), round6(l.content_offset.y)};
        l.drawing = {round6(l.drawing.width), round6(l.drawing.height)};
    }
    for (auto& [id, route] : out.edge_routes) {
        for (Point& p : route) {
            p = {round6(p.x), round6(p.y)};
        }
    }
    return out;
}

json rect_json(const Rect& r)
{
    return {{"x", round6(r.x)}, {"y", round6(r.y)}, {"width", round6(r.width)}, {"height", round6(r.height)}};
}

json polyline_json(const Polyline& line)
{
    json points = json::array();
    for (const Point& p : line) {
        points.push_back(json::array({round6(p.x), round6(p.y)}));
    }
    return points;
}

json node_entry(const NodeId& id, const NodeLayout& l, const AbsoluteLayout& abs)
{
    json j;
    j["id"] = id;
    j["x"] = round6(l.rect.x);
    j["y"] = round6(l.rect.y);
    j["width"] = round6(l.rect.width);
    j["height"] = round6(l.rect.height);
    j["childScale"] = round6(l.child_scale);
    j["laidOut"] = l.laid_out;
    j["contentOffset"] = {{"x", round6(l.content_offset.x)}, {"y", round6(l.content_offset.y)}};
    j["drawing"] = {{"width", round6(l.drawing.width)}, {"height", round6(l.drawing.height)}};
    if (auto it = abs.nodes.find(id); it != abs.nodes.end()) {
        j["cumulativeScale"] = round6(it->second.scale);
        j["absolute"] = rect_json(it->second.rect);
    }
    return j;
}

json edge_entries(const Layout& layout, const std::unordered_set<std::string>* only_containers,
                  const CompoundGraph& graph)
{
    json edges = json::array();
    for (const auto& [id, route] : layout.edge_routes) {
        if (only_containers) {
            const Edge* edge = nullptr;
            for (const Edge& e : graph.edges()) {
                if (e.id == id) {
                    edge = &e;
                    break;
                }
            }
            auto p = edge ? graph.parent(edge->source) : std::nullopt;
            if (!p || !only_containers->count(*p)) {
                continue;
            }
        }
        edges.push_back({{"id", id}, {"points", polyline_json(route)}});
    }
    return edges;
}

json hierarchy_entries(const AbsoluteLayout& abs)
{
    json edges = json::array();
    for (const auto& [id, route] : abs.hierarchy.routes) {
        const bool degenerate = std::find(abs.hierarchy.degenerate.begin(), abs.hierarchy.degenerate.end(), id) !=
                                abs.hierarchy.degenerate.end();
        edges.push_back({{"id", id}, {"points", polyline_json(route)}, {"degenerate", degenerate}});
    }
    return edges;
}

json options_json(const LayoutOptions& o)
{
    return {{"padding", o.padding},           {"gap", o.gap},
            {"spacing", o.spacing},           {"targetAspect", o.target_aspect},
            {"verticalFill", o.vertical_fill}, {"capScaleAtOne", o.cap_scale_at_one}};
}

LayoutOptions read_options(const json& j)
{
    LayoutOptions o;
    if (!j.is_object()) {
        return o;
    }
    o.padding = j.value("padding", o.padding);
    o.gap = j.value("gap", o.gap);
    o.spacing = j.value("spacing", o.spacing);
    o.target_aspect = j.value("targetAspect", o.target_aspect);
    o.vertical_fill = j.value("verticalFill", o.vertical_fill);
    o.cap_scale_at_one = j.value("capScaleAtOne", o.cap_scale_at_one);
    return o;
}

Polyline read_polyline(const json& j)
{
    Polyline line;
    for (const json& p : j) {
        if (!p.is_array() || p.size() != 2) {
            throw ParseError("route point must be an [x, y] pair");
        }
        line.push_back({p[0].get<double>(), p[1].get<double>()});
    }
    return line;
}

}  // namespace

CompoundGraph parse_graph(std::string_view text)
{
    const json doc = parse_json(text);
    return GraphReader{}.read(doc);
}

std::string serialize_graph(const CompoundGraph& graph)
{
    return graph_json(graph).dump(2) + "\n";
}

std::string serialize_layout(const CompoundGraph& graph, const Layout& exact, const LayoutOptions& options)
{
    const Layout layout = rounded(exact);
    const AbsoluteLayout abs = absolute_geometry(layout, graph, options);
    json doc = graph_json(graph);
    json section;
    section["direction"] = to_string(layout.direction);
    section["root"] = layout.root;
    section["width"] = round6(layout.size.width);
    section["height"] = round6(layout.size.height);
    section["options"] = options_json(options);
    json nodes = json::array();
    for (const NodeId& id : graph.preorder()) {
        if (auto it = layout.nodes.find(id); it != layout.nodes.end()) {
            nodes.push_back(node_entry(id, it->second, abs));
        }
    }
    section["nodes"] = std::move(nodes);
    section["edges"] = edge_entries(layout, nullptr, graph);
    section["hierarchyEdges"] = hierarchy_entries(abs);
    section["omittedEdges"] = abs.hierarchy.omitted;
    doc["layout"] = std::move(section);
    return doc.dump(2) + "\n";
}

std::string serialize_layout_fragment(const CompoundGraph& graph, const Layout& exact,
                                      const std::vector<NodeId>& nodes, const LayoutOptions& options)
{
    const Layout layout = rounded(exact);
    const AbsoluteLayout abs = absolute_geometry(layout, graph, options);
    std::unordered_set<std::string> wanted(nodes.begin(), nodes.end());
    json fragment;
    json entries = json::array();
    for (const NodeId& id : graph.preorder()) {
        if (!wanted.count(id)) {
            continue;
        }
        if (auto it = layout.nodes.find(id); it != layout.nodes.end()) {
            entries.push_back(node_entry(id, it->second, abs));
        }
    }
    fragment["nodes"] = std::move(entries);
    fragment["edges"] = edge_entries(layout, &wanted, graph);
    fragment["hierarchyEdges"] = hierarchy_entries(abs);
    fragment["omittedEdges"] = abs.hierarchy.omitted;
    return fragment.dump(2) + "\n";
}

bool has_layout_section(std::string_view text)
{
    const json doc = parse_json(text);
    return doc.is_object() && doc.contains("layout");
}

LayoutDocument parse_layout_document(std::string_view text)
{
    json doc = parse_json(text);
    if (!doc.is_object() || !doc.contains("layout")) {
        throw ParseError("document has no layout section");
    }
    const json section = doc["layout"];
    doc.erase("layout");
    LayoutDocument result{GraphReader{}.read(doc), {}, {}};
    try {
        const std::string direction = section.at("direction").get<std::string>();
        auto parsed = parse_direction(direction);
        if (!parsed) {
            throw ParseError("unknown direction '" + direction + "'");
        }
        Layout& layout = result.layout;
        layout.direction = *parsed;
        layout.root = section.value("root", result.graph.root());
        layout.size = {section.at("width").get<double>(), section.at("height").get<double>()};
        if (section.contains("options")) {
            result.options = read_options(section["options"]);
        }
        for (const json& n : section.at("nodes")) {
            const std::string id = n.at("id").get<std::string>();
            if (!result.graph.contains(id)) {
                throw ParseError("layout entry for unknown node '" + id + "'");
            }
            NodeLayout l;
            l.rect = {n.at("x").get<double>(), n.at("y").get<double>(), n.at("width").get<double>(),
                      n.at("height").get<double>()};
            l.child_scale = n.value("childScale", 1.0);
            l.laid_out = n.value("laidOut", true);
            if (n.contains("contentOffset")) {
                l.content_offset = {n["contentOffset"].at("x").get<double>(), n["contentOffset"].at("y").get<double>()};
            }
            if (n.contains("drawing")) {
                l.drawing = {n["drawing"].at("width").get<double>(), n["drawing"].at("height").get<double>()};
            }
            layout.nodes[id] = l;
        }
        if (section.contains("edges")) {
            for (const json& e : section["edges"]) {
                layout.edge_routes[e.at("id").get<std::string>()] = read_polyline(e.at("points"));
            }
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed layout section: ") + e.what());
    }
    return result;
}

}  // namespace zdown
