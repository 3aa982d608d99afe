#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gig/grammar.hpp"

namespace gig {

/// The current context and the input still to scan.
struct InstantaneousDescription {
  ParseGraph context;
  SymbolString remaining;
};

/// Applying rule `rule` (an index into Gig::rules) at `anchor`.
struct Move {
  std::size_t rule = 0;
  NodeId anchor{};
  friend bool operator==(const Move&, const Move&) = default;
};

/// A move together with the context it produces.
struct Successor {
  Move move;
  ParseGraph context;
};

struct TraceStep {
  std::size_t rule = 0;
  NodeId anchor{};
  std::string symbol;
};

struct DerivationTrace {
  std::vector<TraceStep> steps;
  ParseGraph final_graph;
};

/// Context holding one axiom-labeled node. Throws PreconditionError when the
/// input contains a symbol outside Σ.
InstantaneousDescription initial_id(const Gig& g, SymbolString input);

/// Every defined interpolation of every rule on `context`. When `symbol` is
/// given, only rules whose lexeme carries it are tried. Ordered by rule, then
/// by anchor candidate order.
std::vector<Successor> expand(const Gig& g, const ParseGraph& context, const std::string* symbol);

/// Moves that scan the first remaining symbol; empty once the input is exhausted.
std::vector<Move> applicable_moves(const Gig& g, const InstantaneousDescription& id);

/// Throws PreconditionError if the move is not applicable.
InstantaneousDescription step(const Gig& g, const InstantaneousDescription& id, Move move);

/// Depth-first search for accepting derivations, in rule/anchor order. A trace
/// is accepting when the input is exhausted and the frontier holds lexemes only.
std::vector<DerivationTrace> recognize(const Gig& g, const SymbolString& input, std::size_t max_parses = 1);

bool accepts(const Gig& g, const SymbolString& input);

/// Re-applies a trace move by move from the initial description.
ParseGraph replay(const Gig& g, const SymbolString& input, const DerivationTrace& trace);

/// Callback for every move explored: context before, move, context after, and
/// the symbols scanned before the move.
using MoveVisitor =
    std::function<void(const ParseGraph& before, const Move& move, const ParseGraph& after,
                       const SymbolString& scanned)>;

/// Breadth-first walk over all descriptions reachable within `max_len` scanned
/// symbols, for every input over Σ. Isomorphic contexts are merged. With
/// `prune` set, contexts with more dangling variables than symbols left are
/// dropped, since each dangling variable costs at least one more move.
void explore(const Gig& g, std::size_t max_len, bool prune, const MoveVisitor& visit);

/// Every accepted string of length at most `max_len`.
std::set<SymbolString> enumerate_language(const Gig& g, std::size_t max_len);

/// Every distinct final graph for `input`, in canonical text form.
std::set<std::string> parse_graph_set(const Gig& g, const SymbolString& input);

struct Ambiguity {
  SymbolString input;
  std::size_t graphs = 0;
};

/// First accepted string of length at most `max_len` with more than one
/// distinct final graph, in enumeration order.
std::optional<Ambiguity> find_ambiguity(const Gig& g, std::size_t max_len);

struct DeterminismReport {
  bool deterministic = true;
  /// First description reached with more than one applicable move.
  std::optional<InstantaneousDescription> branching;
  SymbolString scanned;
  std::vector<Move> moves;
};

/// Walks every description reachable while scanning `input` and reports the
/// first one with more than one applicable move.
DeterminismReport check_determinism(const Gig& g, const SymbolString& input);

/// Same check over every input of length at most `max_len`.
DeterminismReport check_determinism_upto(const Gig& g, std::size_t max_len);

}  // namespace gig
