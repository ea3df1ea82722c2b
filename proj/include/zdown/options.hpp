#pragma once

#include <functional>
#include <optional>

#include "zdown/graph.hpp"

namespace zdown {

struct LayoutOptions {
    /// Space between a compound node's border and its child drawing.
    double padding = 15.0;
    /// Space between cells (packing) and shelf items.
    double gap = 10.0;
    /// Space between ranks and nodes (layered) and around satellites (radial).
    double spacing = 20.0;
    /// Shelf target aspect; non-positive means the container's base aspect.
    double target_aspect = 0.0;
    bool vertical_fill = false;
    bool cap_scale_at_one = false;
    /// Replaces every size prediction when it returns a value.
    std::function<std::optional<Size>(const Node&)> size_oracle;
};

}  // namespace zdown
