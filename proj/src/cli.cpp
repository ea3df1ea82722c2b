#include "zdown/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <tuple>

#include "zdown/io.hpp"

namespace zdown {

namespace fs = std::filesystem;

namespace {

struct CommandError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw CommandError("cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out)
{
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    file << text;
    file.close();
    if (!file) {
        throw CommandError("cannot write '" + path + "'");
    }
}

std::size_t title_count(const CompoundGraph& graph)
{
    return static_cast<std::size_t>(
        std::count_if(graph.nodes().begin(), graph.nodes().end(), [](const Node& n) { return n.title.has_value(); }));
}

struct Laid {
    CompoundGraph graph;
    Layout layout;
    LayoutOptions options;
};

Laid lay_out(const CompoundGraph& graph, Direction direction, Variant variant, std::optional<int> defer)
{
    Laid result{graph, {}, {}};
    if (direction == Direction::BottomUp) {
        if (defer) {
            throw CommandError("--defer requires top-down layout");
        }
        result.layout = bottom_up_layout(graph, graph.root(), result.options);
        return result;
    }
    result.graph = apply_variant(graph, variant);
    const MarkPredicate marked = defer ? mark_to_depth(result.graph, *defer) : MarkPredicate{};
    result.layout = top_down_layout(result.graph, result.graph.root(), marked, result.options);
    return result;
}

// Layouts described by one input file: its own layout section, or fresh
// layouts in the requested directions.
std::vector<Laid> load_layouts(const std::string& path, const std::vector<Direction>& directions, Variant variant)
{
    const std::string text = read_file(path);
    if (has_layout_section(text)) {
        LayoutDocument doc = parse_layout_document(text);
        return {Laid{std::move(doc.graph), std::move(doc.layout), std::move(doc.options)}};
    }
    const CompoundGraph graph = parse_graph(text);
    std::vector<Laid> result;
    for (Direction d : directions) {
        result.push_back(lay_out(graph, d, variant, std::nullopt));
    }
    return result;
}

int report(std::ostream& err, const std::exception& e)
{
    err << "error: " << e.what() << "\n";
    return 1;
}

struct GroupKey {
    SizeGroup group;
    Direction direction;

    bool operator<(const GroupKey& o) const
    {
        return std::tie(group, direction) < std::tie(o.group, o.direction);
    }
};

struct RowSum {
    double z = 0.0;
    double r = 0.0;
    double v = 0.0;
    double R = 0.0;
};

struct GroupAccumulator {
    std::size_t graphs = 0;
    std::vector<RowSum> sums;
    std::vector<double> discrepancies;
};

int run_metrics_batch(const MetricsCommand& cmd, std::ostream& out)
{
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(cmd.input)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    const std::vector<Direction> directions =
        cmd.direction ? std::vector<Direction>{*cmd.direction}
                      : std::vector<Direction>{Direction::BottomUp, Direction::TopDown};

    std::map<GroupKey, GroupAccumulator> groups;
    for (const fs::path& file : files) {
        for (const Laid& laid : load_layouts(file.string(), directions, cmd.variant)) {
            const AbsoluteLayout abs = absolute_geometry(laid.layout, laid.graph, laid.options);
            const MetricSeries series = readability_curve(abs, laid.graph, cmd.viewport, cmd.samples);
            GroupAccumulator& acc = groups[{size_group(title_count(laid.graph)), laid.layout.direction}];
            acc.graphs += 1;
            acc.sums.resize(series.rows.size());
            for (std::size_t i = 0; i < series.rows.size(); ++i) {
                acc.sums[i].z = series.rows[i].z;
                acc.sums[i].v += series.rows[i].v;
                acc.sums[i].r += series.rows[i].r;
                acc.sums[i].R += series.rows[i].R;
            }
            for (const auto& [id, d] : series.discrepancy) {
                acc.discrepancies.push_back(d);
            }
        }
    }

    std::string aggregate = "group,direction,graphs,z,r,v,R\n";
    std::string histogram = "group,direction,bin,count\n";
    for (auto& [key, acc] : groups) {
        const std::string prefix = std::string(to_string(key.group)) + "," + std::string(to_string(key.direction));
        const double n = static_cast<double>(acc.graphs);
        for (const RowSum& row : acc.sums) {
            aggregate += prefix + "," + std::to_string(acc.graphs) + "," + format_number(row.z) + "," +
                         format_number(row.r / n) + "," + format_number(row.v / n) + "," +
                         format_number(row.R / n) + "\n";
        }
        const DiscrepancyHistogram h = make_histogram(acc.discrepancies, 1.0, 50.0);
        for (std::size_t b = 0; b < h.bins.size(); ++b) {
            histogram += prefix + "," + format_number(static_cast<double>(b) * h.bin_width) + "," +
                         std::to_string(h.bins[b]) + "\n";
        }
        histogram += prefix + ",outliers," + std::to_string(h.outliers) + "\n";
    }
    write_output(cmd.output, aggregate, out);
    const std::string second = !cmd.discrepancy_output.empty() ? cmd.discrepancy_output
                               : cmd.output.empty()           ? std::string{}
                                                              : sibling_path(cmd.output, "histogram");
    if (!second.empty()) {
        write_output(second, histogram, out);
    }
    return 0;
}

}  // namespace

std::string sibling_path(const std::string& path, const std::string& suffix)
{
    fs::path p(path);
    const std::string ext = p.has_extension() ? p.extension().string() : std::string(".csv");
    p.replace_extension();
    return p.string() + "." + suffix + ext;
}

int run_layout(const LayoutCommand& cmd, std::ostream& out, std::ostream& err)
{
    try {
        const CompoundGraph graph = parse_graph(read_file(cmd.input));
        const Laid laid = lay_out(graph, cmd.direction, cmd.variant, cmd.defer);
        write_output(cmd.output, serialize_layout(laid.graph, laid.layout, laid.options), out);
        return 0;
    } catch (const std::exception& e) {
        return report(err, e);
    }
}

int run_metrics(const MetricsCommand& cmd, std::ostream& out, std::ostream& err)
{
    try {
        if (fs::is_directory(cmd.input)) {
            return run_metrics_batch(cmd, out);
        }
        const Direction direction = cmd.direction.value_or(Direction::TopDown);
        const Laid laid = load_layouts(cmd.input, {direction}, cmd.variant).front();
        const AbsoluteLayout abs = absolute_geometry(laid.layout, laid.graph, laid.options);
        const MetricSeries series = readability_curve(abs, laid.graph, cmd.viewport, cmd.samples);
        write_output(cmd.output, write_metrics_csv(series), out);
        const std::string second = !cmd.discrepancy_output.empty() ? cmd.discrepancy_output
                                   : cmd.output.empty()           ? std::string{}
                                                                  : sibling_path(cmd.output, "discrepancy");
        if (!second.empty()) {
            write_output(second, write_discrepancy_csv(series), out);
        }
        return 0;
    } catch (const std::exception& e) {
        return report(err, e);
    }
}

int run_render(const RenderCommand& cmd, std::ostream& out, std::ostream& err)
{
    try {
        const std::string text = read_file(cmd.input);
        if (!has_layout_section(text)) {
            throw CommandError("'" + cmd.input + "' has no layout section; run the layout command first");
        }
        const LayoutDocument doc = parse_layout_document(text);
        write_output(cmd.output, render_svg(doc.graph, doc.layout, doc.options), out);
        return 0;
    } catch (const std::exception& e) {
        return report(err, e);
    }
}

int run_generate(const GenerateCommand& cmd, std::ostream& out, std::ostream& err)
{
    try {
        CompoundGraph graph;
        if (cmd.balloon_arity) {
            const CompoundGraph tree = make_complete_tree(*cmd.balloon_arity, cmd.depth);
            graph = tree_to_balloon_compound(tree, tree.root());
        } else {
            GeneratorOptions options;
            options.seed = cmd.seed;
            options.max_depth = cmd.depth;
            options.max_children = cmd.children;
            options.label_probability = cmd.label_probability;
            options.fixed_probability = cmd.fixed_probability;
            options.edge_probability = cmd.edge_probability;
            options.max_nodes = cmd.max_nodes;
            graph = generate_random_graph(options);
        }
        write_output(cmd.output, serialize_graph(graph), out);
        return 0;
    } catch (const std::exception& e) {
        return report(err, e);
    }
}

}  // namespace zdown
