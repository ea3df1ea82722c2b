#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "zdown/engine.hpp"
#include "zdown/metrics.hpp"
#include "zdown/variants.hpp"

namespace zdown {

struct LayoutCommand {
    std::string input;
    Direction direction = Direction::TopDown;
    Variant variant = Variant::Flexible;
    std::optional<int> defer;
    /// Empty writes to stdout.
    std::string output;
};

struct MetricsCommand {
    /// A layout document, a graph document, or a directory of either.
    std::string input;
    /// Used when the input carries no layout; batch mode runs both when unset.
    std::optional<Direction> direction;
    Variant variant = Variant::Flexible;
    Viewport viewport;
    std::size_t samples = kDefaultSamples;
    /// Readability CSV (batch: grouped aggregates). Empty writes to stdout.
    std::string output;
    /// Discrepancy CSV (batch: histograms). Defaults next to `output`.
    std::string discrepancy_output;
};

struct RenderCommand {
    std::string input;
    std::string output;
};

struct GenerateCommand {
    std::uint64_t seed = 1;
    int depth = 3;
    int children = 4;
    double label_probability = 0.5;
    double fixed_probability = 0.0;
    double edge_probability = 0.3;
    int max_nodes = 2000;
    /// Balloon graph of the complete tree with this arity instead of a random graph.
    std::optional<int> balloon_arity;
    std::string output;
};

/// Each command returns the process exit code; diagnostics go to `err`.
int run_layout(const LayoutCommand& cmd, std::ostream& out, std::ostream& err);
int run_metrics(const MetricsCommand& cmd, std::ostream& out, std::ostream& err);
int run_render(const RenderCommand& cmd, std::ostream& out, std::ostream& err);
int run_generate(const GenerateCommand& cmd, std::ostream& out, std::ostream& err);

/// Derived file name for the second metrics output: "a/b.csv" -> "a/b.<suffix>.csv".
std::string sibling_path(const std::string& path, const std::string& suffix);

}  // namespace zdown
