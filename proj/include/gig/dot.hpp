#pragma once

#include <optional>
#include <string>

#include "gig/parse_graph.hpp"

namespace gig {

/// Graphviz rendering: E edges solid, F edges dashed, lexemes boxed, ε-leaves as points.
std::string to_dot(const ParseGraph& g, const std::string& name = "parse_graph",
                   std::optional<NodeId> highlight = std::nullopt);

}  // namespace gig
