#pragma once

#include <optional>
#include <string_view>

#include "zdown/graph.hpp"

namespace zdown {

/// Named top-down configurations.
///  - Flexible: every container FLEXIBLE, node-count approximator.
///  - Lookahead: every container FLEXIBLE, one-level look-ahead approximator.
///  - Fixed: containers on even levels below the root become FIXED packing
///    containers; the levels between them stay FLEXIBLE with node-count sizing.
enum class Variant { Flexible, Lookahead, Fixed };

std::string_view to_string(Variant variant);
std::optional<Variant> parse_variant(std::string_view text);

/// Copy of `graph` with node types, approximators and (for Fixed) algorithms
/// rewritten for the variant. The root keeps type ROOT.
CompoundGraph apply_variant(const CompoundGraph& graph, Variant variant);

}  // namespace zdown
