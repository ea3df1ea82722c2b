#pragma once

#include <map>
#include <span>
#include <vector>

#include "zdown/engine.hpp"

namespace zdown {

struct Viewport {
    double width = 600.0;
    double height = 400.0;

    double area() const { return width * height; }
};

/// `a` fixes the diagram scale at the zoom extreme that is not 1: the
/// zoom-to-fit scale (bottom-up, a <= 1) or the magnification that shows the
/// smallest element at its intended size (top-down, a >= 1).
struct ZoomProfile {
    double a = 1.0;
    Direction direction = Direction::TopDown;
    bool degenerate = false;
};

ZoomProfile compute_a(const AbsoluteLayout& abs, const Viewport& viewport, Direction direction);

/// Diagram scale at zoom level z in [0, 1].
double diagram_scale(double a, double z);

/// Share of the diagram inside the viewport, assuming equal aspect ratios.
double visible_proportion(double diagram_area, const Viewport& viewport, double diagram_scale);

struct ReadableFraction {
    double r = 0.0;
    /// No labels at all; r is reported as 0.
    bool degenerate = false;
};

/// Fraction of labels whose render scale text_scale * s_d is at least 1.
ReadableFraction readable_fraction(std::span<const double> text_scales, double diagram_scale);
ReadableFraction readable_fraction(const AbsoluteLayout& abs, double diagram_scale);

struct MetricRow {
    double z = 0.0;
    double s_d = 1.0;
    double v = 1.0;
    double r = 0.0;
    double R = 0.0;
};

struct MetricSeries {
    ZoomProfile profile;
    std::vector<MetricRow> rows;
    std::map<NodeId, double> discrepancy;
    bool degenerate = false;
};

inline constexpr std::size_t kDefaultSamples = 101;

/// Samples z uniformly on [0, 1]; R = r * v per row. Also fills the
/// per-node scale discrepancy map.
MetricSeries readability_curve(const AbsoluteLayout& abs, const CompoundGraph& graph,
                               const Viewport& viewport = {}, std::size_t samples = kDefaultSamples);

/// max/min - 1 over the given scales; 0 for fewer than two values.
double scale_discrepancy(std::span<const double> scales);

/// Discrepancy between the child scales of `node`'s laid-out compound children.
double scale_discrepancy(const AbsoluteLayout& abs, const CompoundGraph& graph, const NodeId& node);

/// D(n) for every laid-out compound node.
std::map<NodeId, double> discrepancies(const AbsoluteLayout& abs, const CompoundGraph& graph);

struct DiscrepancyHistogram {
    double bin_width = 1.0;
    double max_bin = 50.0;
    std::vector<std::size_t> bins;
    std::size_t outliers = 0;
};

DiscrepancyHistogram make_histogram(std::span<const double> values, double bin_width, double max_bin);
DiscrepancyHistogram discrepancy_histogram(const AbsoluteLayout& abs, const CompoundGraph& graph,
                                           double bin_width = 1.0, double max_bin = 50.0);

enum class SizeGroup { Small, Medium, Large };

/// small < 50 labels, medium < 500, large otherwise.
SizeGroup size_group(std::size_t label_count);
std::string_view to_string(SizeGroup group);

}  // namespace zdown
