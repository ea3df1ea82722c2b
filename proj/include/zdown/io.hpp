#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "zdown/engine.hpp"
#include "zdown/metrics.hpp"

namespace zdown {

/// Raised for malformed documents. Syntax errors carry a 1-based position;
/// semantic errors (unknown enum value, duplicate id, invalid graph) have line 0.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t line = 0, std::size_t column = 0);

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Reads a graph document. Missing fields default to FLEXIBLE, 100x60, SHELF,
/// NODE_COUNT; the top-level node defaults to ROOT. The result is validated.
CompoundGraph parse_graph(std::string_view text);

/// Writes a graph document; each edge is stored in the deepest container
/// enclosing both endpoints.
std::string serialize_graph(const CompoundGraph& graph);

struct LayoutDocument {
    CompoundGraph graph;
    Layout layout;
    LayoutOptions options;
};

/// Graph document extended by a "layout" section carrying relative and
/// absolute geometry. Numbers are rounded to 6 decimals.
std::string serialize_layout(const CompoundGraph& graph, const Layout& layout, const LayoutOptions& options = {});

LayoutDocument parse_layout_document(std::string_view text);

/// True when the document carries a "layout" section.
bool has_layout_section(std::string_view text);

/// Layout entries for a subset of nodes plus routes of edges inside them, in
/// the same shape as the "layout" section.
std::string serialize_layout_fragment(const CompoundGraph& graph, const Layout& layout,
                                      const std::vector<NodeId>& nodes, const LayoutOptions& options = {});

struct SvgOptions {
    double margin = 10.0;
};

/// Nested groups mirroring containment; each laid-out compound node wraps its
/// children in a translate+scale group so child coordinates stay local.
std::string render_svg(const CompoundGraph& graph, const Layout& layout, const LayoutOptions& layout_options = {},
                       const SvgOptions& options = {});

/// Header z,s_d,v,r,R and one row per sample.
std::string write_metrics_csv(const MetricSeries& series);

/// Header node_id,D and one row per compound node.
std::string write_discrepancy_csv(const MetricSeries& series);

/// Fixed-point with at most 6 decimals and no trailing zeros.
std::string format_number(double value);

}  // namespace zdown
