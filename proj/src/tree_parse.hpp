#pragma once

#include <optional>

#include "gig/parse_graph.hpp"
#include "lexer.hpp"

namespace gig::detail {

/// True if the current token can start a tree.
bool starts_tree(const Lexer& lex);

/// Parses one or more sibling trees into `g`, links them by F edges and
/// returns the first. A `^` sets `mark`; a second `^` is a syntax error.
NodeId parse_forest(Lexer& lex, ParseGraph& g, std::optional<NodeId>& mark);

}  // namespace gig::detail
