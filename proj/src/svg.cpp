#include <sstream>

#include "zdown/io.hpp"

namespace zdown {

namespace {

std::string escape(std::string_view text)
{
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\'': out += "&apos;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string points_attr(const Polyline& line)
{
    std::string out;
    for (const Point& p : line) {
        if (!out.empty()) {
            out += ' ';
        }
        out += format_number(p.x) + "," + format_number(p.y);
    }
    return out;
}

class SvgWriter {
public:
    SvgWriter(const CompoundGraph& graph, const Layout& layout, const LayoutOptions& options)
        : graph_(graph), layout_(layout), options_(options)
    {
        for (const Edge& e : graph.edges()) {
            if (auto p = graph.parent(e.source)) {
                edges_by_container_[*p].push_back(&e);
            }
        }
    }

    void node(std::ostringstream& out, const NodeId& id, int depth)
    {
        const NodeLayout& l = layout_.nodes.at(id);
        const Node& n = graph_.node(id);
        const std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
        const char* fill = n.core ? "#d62728" : (!l.laid_out ? "url(#deferred)" : (n.is_leaf() ? "#ffffff" : "#f2f2f2"));
        out << indent << "<g class=\"node\" data-id=\"" << escape(id) << "\" transform=\"translate("
            << format_number(l.rect.x) << "," << format_number(l.rect.y) << ")\">\n";
        out << indent << "  <rect width=\"" << format_number(l.rect.width) << "\" height=\""
            << format_number(l.rect.height) << "\" rx=\"4\" fill=\"" << fill << "\" stroke=\"#333333\"/>\n";
        if (n.title) {
            const Label& t = *n.title;
            Point at;
            if (n.is_leaf()) {
                at = {(l.rect.width - t.unit_width) / 2.0, (l.rect.height - t.unit_height) / 2.0};
            } else {
                const Rect content = content_box(n, l.rect.size(), options_);
                at = {content.x, content.y - title_band(n)};
            }
            out << indent << "  <text x=\"" << format_number(at.x) << "\" y=\"" << format_number(at.y)
                << "\" font-size=\"" << format_number(t.unit_height) << "\" dominant-baseline=\"hanging\">"
                << escape(t.text) << "</text>\n";
        }
        if (l.laid_out && !n.is_leaf()) {
            out << indent << "  <g class=\"children\" transform=\"translate(" << format_number(l.content_offset.x)
                << "," << format_number(l.content_offset.y) << ") scale(" << format_number(l.child_scale)
                << ")\">\n";
            if (auto it = edges_by_container_.find(id); it != edges_by_container_.end()) {
                for (const Edge* e : it->second) {
                    auto route = layout_.edge_routes.find(e->id);
                    if (route != layout_.edge_routes.end() && route->second.size() >= 2) {
                        out << indent << "    <polyline class=\"edge\" data-id=\"" << escape(e->id)
                            << "\" points=\"" << points_attr(route->second)
                            << "\" fill=\"none\" stroke=\"#555555\"/>\n";
                    }
                }
            }
            for (const NodeId& child : n.children) {
                if (layout_.nodes.count(child)) {
                    node(out, child, depth + 2);
                }
            }
            out << indent << "  </g>\n";
        }
        out << indent << "</g>\n";
    }

private:
    const CompoundGraph& graph_;
    const Layout& layout_;
    const LayoutOptions& options_;
    std::map<NodeId, std::vector<const Edge*>> edges_by_container_;
};

}  // namespace

std::string render_svg(const CompoundGraph& graph, const Layout& layout, const LayoutOptions& layout_options,
                       const SvgOptions& options)
{
    const double w = layout.size.width + 2.0 * options.margin;
    const double h = layout.size.height + 2.0 * options.margin;
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << format_number(w)
        << "\" height=\"" << format_number(h) << "\" viewBox=\"0 0 " << format_number(w) << " "
        << format_number(h) << "\" font-family=\"sans-serif\">\n";
    out << "  <defs>\n"
           "    <pattern id=\"deferred\" width=\"6\" height=\"6\" patternUnits=\"userSpaceOnUse\" "
           "patternTransform=\"rotate(45)\">\n"
           "      <rect width=\"6\" height=\"6\" fill=\"#ffffff\"/>\n"
           "      <line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"6\" stroke=\"#999999\" stroke-width=\"2\"/>\n"
           "    </pattern>\n"
           "  </defs>\n";
    out << "  <g transform=\"translate(" << format_number(options.margin) << "," << format_number(options.margin)
        << ")\">\n";
    if (layout.nodes.count(layout.root)) {
        SvgWriter writer(graph, layout, layout_options);
        writer.node(out, layout.root, 2);
        // Root sits at the origin with scale 1, so absolute coordinates apply here.
        const AbsoluteLayout abs = absolute_geometry(layout, graph, layout_options);
        for (const auto& [id, route] : abs.hierarchy.routes) {
            out << "    <polyline class=\"edge hierarchy\" data-id=\"" << escape(id) << "\" points=\""
                << points_attr(route) << "\" fill=\"none\" stroke=\"#555555\" stroke-dasharray=\"4 2\"/>\n";
        }
    }
    out << "  </g>\n</svg>\n";
    return out.str();
}

}  // namespace zdown
