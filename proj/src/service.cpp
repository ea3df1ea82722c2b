#include "zdown/service.hpp"

#include <charconv>
#include <mutex>

#include <json.hpp>

#include "zdown/io.hpp"

namespace zdown {

using json = nlohmann::ordered_json;

namespace {

Response error(int status, const std::string& message)
{
    return {status, "application/json", json{{"error", message}}.dump() + "\n"};
}

std::optional<double> parse_positive(std::string_view text)
{
    double value = 0.0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size() || !(value > 0.0)) {
        return std::nullopt;
    }
    return value;
}

}  // namespace

std::optional<Viewport> parse_viewport(std::string_view text)
{
    const auto x = text.find_first_of("xX");
    if (x == std::string_view::npos) {
        return std::nullopt;
    }
    auto w = parse_positive(text.substr(0, x));
    auto h = parse_positive(text.substr(x + 1));
    if (!w || !h) {
        return std::nullopt;
    }
    return Viewport{*w, *h};
}

Session::Session(CompoundGraph graph, LayoutOptions options) : source_(std::move(graph)), options_(std::move(options))
{
    relayout();
}

void Session::relayout()
{
    CompoundGraph graph = config_.direction == Direction::BottomUp ? source_ : apply_variant(source_, config_.variant);
    Layout layout;
    if (config_.direction == Direction::BottomUp) {
        layout = bottom_up_layout(graph, graph.root(), options_);
    } else {
        const MarkPredicate marked = config_.defer ? mark_to_depth(graph, *config_.defer) : MarkPredicate{};
        layout = top_down_layout(graph, graph.root(), marked, options_);
    }
    graph_ = std::move(graph);
    layout_ = std::move(layout);
}

Response Session::get_graph() const
{
    return {200, "application/json", serialize_graph(source_)};
}

Response Session::get_layout() const
{
    std::shared_lock lock(mutex_);
    return {200, "application/json", serialize_layout(graph_, layout_, options_)};
}

Response Session::post_layout(std::string_view body)
{
    SessionConfig next;
    {
        std::shared_lock lock(mutex_);
        next = config_;
    }
    json request = json::object();
    if (!body.empty()) {
        try {
            request = json::parse(body.begin(), body.end());
        } catch (const json::parse_error& e) {
            return error(400, std::string("malformed body: ") + e.what());
        }
        if (!request.is_object()) {
            return error(400, "body must be an object");
        }
    }
    if (request.contains("direction")) {
        auto d = request["direction"].is_string() ? parse_direction(request["direction"].get<std::string>())
                                                  : std::nullopt;
        if (!d) {
            return error(400, "direction must be bottom-up or top-down");
        }
        next.direction = *d;
    }
    if (request.contains("variant")) {
        auto v = request["variant"].is_string() ? parse_variant(request["variant"].get<std::string>()) : std::nullopt;
        if (!v) {
            return error(400, "variant must be flexible, lookahead or fixed");
        }
        next.variant = *v;
    }
    if (request.contains("defer")) {
        const json& d = request["defer"];
        if (d.is_null()) {
            next.defer.reset();
        } else if (d.is_number_integer() && d.get<long long>() >= 0) {
            next.defer = static_cast<int>(d.get<long long>());
        } else {
            return error(400, "defer must be a non-negative integer or null");
        }
    }
    if (next.defer && next.direction == Direction::BottomUp) {
        return error(400, "defer requires top-down layout");
    }

    std::unique_lock lock(mutex_);
    const SessionConfig previous = config_;
    config_.direction = next.direction;
    config_.variant = next.variant;
    config_.defer = next.defer;
    try {
        relayout();
    } catch (const LayoutError& e) {
        config_ = previous;
        return error(400, e.what());
    }
    return {200, "application/json", serialize_layout(graph_, layout_, options_)};
}

Response Session::post_expand(std::string_view body)
{
    json request;
    try {
        request = json::parse(body.begin(), body.end());
    } catch (const json::parse_error& e) {
        return error(400, std::string("malformed body: ") + e.what());
    }
    if (!request.is_object() || !request.contains("nodeId") || !request["nodeId"].is_string()) {
        return error(400, "body must be {\"nodeId\": string}");
    }
    const NodeId node = request["nodeId"].get<std::string>();

    std::unique_lock lock(mutex_);
    if (layout_.direction != Direction::TopDown) {
        return error(409, "bottom-up layouts have nothing to expand");
    }
    ExpandResult result;
    try {
        result = expand_marked(layout_, graph_, node, [](const NodeId&) { return false; }, options_);
    } catch (const ExpandError& e) {
        return error(e.kind() == ExpandError::Kind::UnknownNode ? 404 : 409, e.what());
    } catch (const LayoutError& e) {
        return error(400, e.what());
    }
    layout_ = std::move(result.layout);
    json fragment = json::parse(serialize_layout_fragment(graph_, layout_, result.touched, options_));
    json out;
    out["nodeId"] = node;
    out["changed"] = result.changed;
    if (!result.notice.empty()) {
        out["notice"] = result.notice;
    }
    for (auto& [key, value] : fragment.items()) {
        out[key] = value;
    }
    return {200, "application/json", out.dump(2) + "\n"};
}

Response Session::get_metrics(std::string_view viewport) const
{
    std::shared_lock lock(mutex_);
    Viewport vp = config_.viewport;
    if (!viewport.empty()) {
        auto parsed = parse_viewport(viewport);
        if (!parsed) {
            return error(400, "viewport must be WxH");
        }
        vp = *parsed;
    }
    const AbsoluteLayout abs = absolute_geometry(layout_, graph_, options_);
    return {200, "text/csv", write_metrics_csv(readability_curve(abs, graph_, vp))};
}

Response Session::handle(std::string_view method, std::string_view path,
                         const std::map<std::string, std::string>& query, std::string_view body)
{
    if (method == "GET" && path == "/graph") {
        return get_graph();
    }
    if (method == "GET" && path == "/layout") {
        return get_layout();
    }
    if (method == "GET" && path == "/metrics") {
        auto it = query.find("viewport");
        return get_metrics(it == query.end() ? std::string_view{} : std::string_view{it->second});
    }
    if (method == "POST" && path == "/layout") {
        return post_layout(body);
    }
    if (method == "POST" && path == "/expand") {
        return post_expand(body);
    }
    return error(404, "no route for " + std::string(method) + " " + std::string(path));
}

Layout Session::layout() const
{
    std::shared_lock lock(mutex_);
    return layout_;
}

CompoundGraph Session::layout_graph() const
{
    std::shared_lock lock(mutex_);
    return graph_;
}

SessionConfig Session::config() const
{
    std::shared_lock lock(mutex_);
    return config_;
}

}  // namespace zdown
