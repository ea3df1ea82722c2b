// zdown: command-line front end and HTTP service.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <httplib.h>

#include "zdown/cli.hpp"
#include "zdown/io.hpp"
#include "zdown/service.hpp"

using namespace zdown;

namespace {

const std::vector<std::string> kDirections{"bottom-up", "top-down"};
const std::vector<std::string> kVariants{"flexible", "lookahead", "fixed"};

int serve(const std::string& input, int port, const std::string& host)
{
    if (const char* env = std::getenv("ZDOWN_PORT")) {
        try {
            port = std::stoi(env);
        } catch (const std::exception&) {
            std::cerr << "error: ZDOWN_PORT is not a number: " << env << "\n";
            return 1;
        }
    }
    std::ifstream in(input, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open '" << input << "'\n";
        return 1;
    }
    std::ostringstream text;
    text << in.rdbuf();
    std::unique_ptr<Session> session;
    try {
        session = std::make_unique<Session>(parse_graph(text.str()));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    httplib::Server server;
    auto bind = [&](const httplib::Request& req, httplib::Response& res) {
        std::map<std::string, std::string> query(req.params.begin(), req.params.end());
        const Response r = session->handle(req.method, req.path, query, req.body);
        res.status = r.status;
        res.set_content(r.body, r.content_type.c_str());
    };
    for (const char* path : {"/graph", "/layout", "/metrics"}) {
        server.Get(path, bind);
    }
    for (const char* path : {"/layout", "/expand"}) {
        server.Post(path, bind);
    }
    std::cerr << "listening on " << host << ":" << port << "\n";
    if (!server.listen(host, port)) {
        std::cerr << "error: cannot listen on " << host << ":" << port << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Top-down and bottom-up layout of compound graphs"};
    app.require_subcommand(1);

    LayoutCommand layout;
    auto* layout_cmd = app.add_subcommand("layout", "Lay out a graph document");
    layout_cmd->add_option("input", layout.input, "Graph document")->required()->check(CLI::ExistingFile);
    std::string layout_direction = "top-down";
    std::string layout_variant = "flexible";
    layout_cmd->add_option("--direction", layout_direction, "bottom-up or top-down")
        ->check(CLI::IsMember(kDirections));
    layout_cmd->add_option("--variant", layout_variant, "flexible, lookahead or fixed")
        ->check(CLI::IsMember(kVariants));
    layout_cmd->add_option("--defer", layout.defer, "Leave children below this depth unlaid")
        ->check(CLI::NonNegativeNumber);
    layout_cmd->add_option("-o,--output", layout.output, "Layout document (default stdout)");

    MetricsCommand metrics;
    std::string viewport = "600x400";
    auto* metrics_cmd = app.add_subcommand("metrics", "Readability and scale discrepancy");
    metrics_cmd->add_option("input", metrics.input, "Layout or graph document, or a directory of them")
        ->required()
        ->check(CLI::ExistingPath);
    std::string metrics_direction;
    std::string metrics_variant = "flexible";
    metrics_cmd->add_option("--direction", metrics_direction, "Direction for graph inputs")
        ->check(CLI::IsMember(kDirections));
    metrics_cmd->add_option("--variant", metrics_variant, "Top-down variant for graph inputs")
        ->check(CLI::IsMember(kVariants));
    metrics_cmd->add_option("--viewport", viewport, "Viewport as WxH");
    metrics_cmd->add_option("--samples", metrics.samples, "Number of z samples")->check(CLI::Range(2, 100000));
    metrics_cmd->add_option("-o,--output", metrics.output, "Readability CSV (default stdout)");
    metrics_cmd->add_option("--discrepancy", metrics.discrepancy_output, "Discrepancy CSV");

    RenderCommand render;
    auto* render_cmd = app.add_subcommand("render", "Render a layout document as SVG");
    render_cmd->add_option("input", render.input, "Layout document")->required()->check(CLI::ExistingFile);
    render_cmd->add_option("-o,--output", render.output, "SVG file (default stdout)");

    GenerateCommand generate;
    auto* generate_cmd = app.add_subcommand("generate", "Write a synthetic graph document");
    generate_cmd->add_option("--seed", generate.seed);
    generate_cmd->add_option("--depth", generate.depth)->check(CLI::Range(0, 32));
    generate_cmd->add_option("--children", generate.children)->check(CLI::Range(1, 1000));
    generate_cmd->add_option("--labels", generate.label_probability, "Title probability")->check(CLI::Range(0.0, 1.0));
    generate_cmd->add_option("--fixed", generate.fixed_probability, "FIXED container probability")
        ->check(CLI::Range(0.0, 1.0));
    generate_cmd->add_option("--edges", generate.edge_probability, "Sibling edge probability")
        ->check(CLI::Range(0.0, 1.0));
    generate_cmd->add_option("--max-nodes", generate.max_nodes)->check(CLI::PositiveNumber);
    generate_cmd->add_option("--balloon", generate.balloon_arity, "Balloon graph of a complete tree of this arity")
        ->check(CLI::Range(1, 64));
    generate_cmd->add_option("-o,--output", generate.output, "Graph document (default stdout)");

    std::string serve_input;
    int port = 8080;
    std::string host = "127.0.0.1";
    auto* serve_cmd = app.add_subcommand("serve", "HTTP service for incremental layout");
    serve_cmd->add_option("input", serve_input, "Graph document")->required()->check(CLI::ExistingFile);
    serve_cmd->add_option("--port", port, "Port (ZDOWN_PORT overrides)");
    serve_cmd->add_option("--host", host);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // --help exits 0; every usage error exits 2.
        return app.exit(e) == 0 ? 0 : 2;
    }

    if (*layout_cmd) {
        layout.direction = *parse_direction(layout_direction);
        layout.variant = *parse_variant(layout_variant);
        return run_layout(layout, std::cout, std::cerr);
    }
    if (*metrics_cmd) {
        auto vp = parse_viewport(viewport);
        if (!vp) {
            std::cerr << "error: --viewport must be WxH\n";
            return 2;
        }
        metrics.viewport = *vp;
        if (!metrics_direction.empty()) {
            metrics.direction = parse_direction(metrics_direction);
        }
        metrics.variant = *parse_variant(metrics_variant);
        return run_metrics(metrics, std::cout, std::cerr);
    }
    if (*render_cmd) {
        return run_render(render, std::cout, std::cerr);
    }
    if (*generate_cmd) {
        return run_generate(generate, std::cout, std::cerr);
    }
    return serve(serve_input, port, host);
}
