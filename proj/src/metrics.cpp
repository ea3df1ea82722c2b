#include "zdown/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace zdown {

ZoomProfile compute_a(const AbsoluteLayout& abs, const Viewport& viewport, Direction direction)
{
    ZoomProfile profile;
    profile.direction = direction;
    if (abs.nodes.empty() || !(abs.size.width > 0.0) || !(abs.size.height > 0.0)) {
        profile.degenerate = true;
        return profile;
    }
    if (direction == Direction::BottomUp) {
        const double fit = std::min(viewport.width / abs.size.width, viewport.height / abs.size.height);
        profile.a = std::min(fit, 1.0);
        return profile;
    }
    double smallest = 1.0;
    for (const auto& [id, n] : abs.nodes) {
        smallest = std::min(smallest, n.scale);
    }
    for (const AbsoluteLabel& label : abs.labels) {
        smallest = std::min(smallest, label.text_scale);
    }
    profile.a = 1.0 / smallest;
    return profile;
}

double diagram_scale(double a, double z)
{
    if (a <= 1.0) {
        return z * (a - 1.0) + 1.0;
    }
    return z * (1.0 - a) + a;
}

double visible_proportion(double diagram_area, const Viewport& viewport, double diagram_scale)
{
    return std::min(viewport.area() / (diagram_area * diagram_scale * diagram_scale), 1.0);
}

ReadableFraction readable_fraction(std::span<const double> text_scales, double diagram_scale)
{
    if (text_scales.empty()) {
        return {0.0, true};
    }
    const auto readable = std::count_if(text_scales.begin(), text_scales.end(),
                                        [&](double s) { return s * diagram_scale >= 1.0; });
    return {static_cast<double>(readable) / static_cast<double>(text_scales.size()), false};
}

ReadableFraction readable_fraction(const AbsoluteLayout& abs, double diagram_scale)
{
    std::vector<double> scales;
    scales.reserve(abs.labels.size());
    for (const AbsoluteLabel& label : abs.labels) {
        scales.push_back(label.text_scale);
    }
    return readable_fraction(scales, diagram_scale);
}

MetricSeries readability_curve(const AbsoluteLayout& abs, const CompoundGraph& graph,
                               const Viewport& viewport, std::size_t samples)
{
    MetricSeries series;
    series.profile = compute_a(abs, viewport, abs.direction);
    series.degenerate = series.profile.degenerate || abs.labels.empty();
    samples = std::max<std::size_t>(samples, 2);
    const double area = abs.size.width * abs.size.height;
    for (std::size_t i = 0; i < samples; ++i) {
        MetricRow row;
        row.z = static_cast<double>(i) / static_cast<double>(samples - 1);
        row.s_d = diagram_scale(series.profile.a, row.z);
        row.v = area > 0.0 ? visible_proportion(area, viewport, row.s_d) : 1.0;
        row.r = readable_fraction(abs, row.s_d).r;
        row.R = row.r * row.v;
        series.rows.push_back(row);
    }
    series.discrepancy = discrepancies(abs, graph);
    return series;
}

double scale_discrepancy(std::span<const double> scales)
{
    if (scales.size() < 2) {
        return 0.0;
    }
    const auto [lo, hi] = std::minmax_element(scales.begin(), scales.end());
    return *hi / *lo - 1.0;
}

double scale_discrepancy(const AbsoluteLayout& abs, const CompoundGraph& graph, const NodeId& node)
{
    std::vector<double> scales;
    for (const NodeId& child : graph.node(node).children) {
        auto it = abs.nodes.find(child);
        if (it != abs.nodes.end() && it->second.laid_out && !graph.node(child).is_leaf()) {
            scales.push_back(it->second.child_scale);
        }
    }
    return scale_discrepancy(scales);
}

std::map<NodeId, double> discrepancies(const AbsoluteLayout& abs, const CompoundGraph& graph)
{
    std::map<NodeId, double> result;
    for (const auto& [id, n] : abs.nodes) {
        if (n.laid_out && !graph.node(id).is_leaf()) {
            result.emplace(id, scale_discrepancy(abs, graph, id));
        }
    }
    return result;
}

DiscrepancyHistogram make_histogram(std::span<const double> values, double bin_width, double max_bin)
{
    DiscrepancyHistogram h;
    h.bin_width = bin_width;
    h.max_bin = max_bin;
    const auto count = static_cast<std::size_t>(std::ceil(max_bin / bin_width));
    h.bins.assign(std::max<std::size_t>(count, 1), 0);
    for (double d : values) {
        if (d > max_bin) {
            ++h.outliers;
            continue;
        }
        auto bin = static_cast<std::size_t>(std::floor(d / bin_width));
        h.bins[std::min(bin, h.bins.size() - 1)] += 1;
    }
    return h;
}

DiscrepancyHistogram discrepancy_histogram(const AbsoluteLayout& abs, const CompoundGraph& graph,
                                           double bin_width, double max_bin)
{
    std::vector<double> values;
    for (const auto& [id, d] : discrepancies(abs, graph)) {
        values.push_back(d);
    }
    return make_histogram(values, bin_width, max_bin);
}

SizeGroup size_group(std::size_t label_count)
{
    if (label_count < 50) {
        return SizeGroup::Small;
    }
    return label_count < 500 ? SizeGroup::Medium : SizeGroup::Large;
}

std::string_view to_string(SizeGroup group)
{
    switch (group) {
    case SizeGroup::Small:
        return "small";
    case SizeGroup::Medium:
        return "medium";
    case SizeGroup::Large:
        return "large";
    }
    return "small";
}

}  // namespace zdown
