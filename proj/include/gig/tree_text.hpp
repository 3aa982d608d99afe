#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "gig/parse_graph.hpp"

namespace gig {

/// A graph plus at most one marked node (the `^` in tree text).
struct MarkedGraph {
  ParseGraph graph;
  std::optional<NodeId> mark;
};

// Tree text format:
//
//   S( A("a") S( B S(#eps) C ) D )
//
// `Label(children...)` is a nonlexical node, a bare `Label` is a dangling
// variable, `"tok"` is a lexeme, `#eps` is an ε-leaf and `^` marks one node.
// Several top-level trees are the root followed by its right-sibling chain.
// The parser does not validate; a lexeme in sibling position parses fine and
// is reported later by `validate`.

MarkedGraph parse_tree_text(std::string_view text);

/// Canonical text. Ids do not appear, so isomorphic graphs print identically.
std::string to_tree_text(const ParseGraph& g, std::optional<NodeId> mark = std::nullopt);

std::string quote_symbol(std::string_view symbol);

}  // namespace gig
