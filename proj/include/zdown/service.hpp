#pragma once

#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>

#include "zdown/engine.hpp"
#include "zdown/metrics.hpp"
#include "zdown/variants.hpp"

namespace zdown {

struct SessionConfig {
    Direction direction = Direction::TopDown;
    Variant variant = Variant::Flexible;
    /// Depth below which children start out deferred; unset lays out everything.
    std::optional<int> defer;
    Viewport viewport;
};

struct Response {
    int status = 200;
    std::string content_type = "application/json";
    std::string body;
};

/// One loaded graph and its current, possibly partial, layout. Reads share a
/// lock; /layout and /expand take it exclusively, so mutations are serialized.
class Session {
public:
    explicit Session(CompoundGraph graph, LayoutOptions options = {});

    Response get_graph() const;
    Response get_layout() const;
    /// Body: {"direction", "variant", "defer"}; every field optional.
    Response post_layout(std::string_view body);
    /// Body: {"nodeId"}. Lays out the node's children; their own children stay deferred.
    Response post_expand(std::string_view body);
    /// `viewport` as WxH; empty means the session default.
    Response get_metrics(std::string_view viewport) const;

    /// Routes a request the way the HTTP server does.
    Response handle(std::string_view method, std::string_view path,
                    const std::map<std::string, std::string>& query, std::string_view body);

    Layout layout() const;
    CompoundGraph layout_graph() const;
    SessionConfig config() const;

private:
    void relayout();

    mutable std::shared_mutex mutex_;
    const CompoundGraph source_;
    const LayoutOptions options_;
    CompoundGraph graph_;
    Layout layout_;
    SessionConfig config_;
};

/// Parses "WxH" with positive dimensions.
std::optional<Viewport> parse_viewport(std::string_view text);

}  // namespace zdown
