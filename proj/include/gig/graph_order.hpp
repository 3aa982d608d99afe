#pragma once

#include <vector>

#include "gig/label.hpp"
#include "gig/parse_graph.hpp"

namespace gig {

// Order relations over parse graphs.
//
// The successor relation is  < = ((F⁻¹)* ∘ E⁻¹)* ∘ F ∘ E*  read as a path:
// climb through first-child links (skipping left over siblings), take one
// right-sibling step, then descend through first children.

/// All n with m < n.
std::vector<NodeId> successors(const ParseGraph& g, NodeId m);
bool successor(const ParseGraph& g, NodeId m, NodeId n);

/// { n | m < n and no third node p with m < p < n }.
std::vector<NodeId> immediate_successor_set(const ParseGraph& g, NodeId m);

/// Nodes on the E ∪ F path from the root down to `n`, listed from `n` upward.
/// Includes `n` and the root.
std::vector<NodeId> ancestors(const ParseGraph& g, NodeId n);

/// Image of `n` under ((F⁻¹)* ∘ E⁻¹)*: `n` and its tree ancestors only.
std::vector<NodeId> tree_ancestors(const ParseGraph& g, NodeId n);

/// Terminal nodes (no first child) in reading order, ε-leaves included.
std::vector<NodeId> terminal_sequence(const ParseGraph& g);

/// Terminal nodes in reading order with ε-leaves dropped.
std::vector<NodeId> frontier(const ParseGraph& g);

/// Nodes in preorder (node, its first-child subtree, then its right sibling).
std::vector<NodeId> preorder(const ParseGraph& g);

bool is_leftmost_lexicalized(const ParseGraph& g);

/// Labels of the maximal lexeme prefix of the frontier.
/// Throws PreconditionError unless the graph is leftmost-lexicalized.
SymbolString yield_string(const ParseGraph& g);

/// Labels of the whole frontier (lexemes and dangling variables).
std::vector<Label> frontier_labels(const ParseGraph& g);

/// True when the frontier consists of lexemes only.
bool is_complete(const ParseGraph& g);

/// The rightmost lexeme of the frontier, if any.
std::optional<NodeId> last_lexeme(const ParseGraph& g);

/// A node whose subtree is fully derived and contains nothing but ε-leaves.
bool is_epsilon_null(const ParseGraph& g, NodeId n);

/// Number of variable nodes in the frontier.
std::size_t dangling_count(const ParseGraph& g);

}  // namespace gig
