#include "gig/engine.hpp"

#include <algorithm>
#include <map>

#include "gig/graph_order.hpp"
#include "gig/tree_text.hpp"

namespace gig {

InstantaneousDescription initial_id(const Gig& g, SymbolString input) {
  for (const auto& s : input)
    if (!g.symbols().count(s)) throw PreconditionError("symbol '" + s + "' is not in the grammar's alphabet");
  return {ParseGraph(g.axiom()), std::move(input)};
}

std::vector<Successor> expand(const Gig& g, const ParseGraph& context, const std::string* symbol) {
  std::vector<Successor> out;
  std::map<std::string, std::vector<NodeId>> anchors_by_pattern;
  for (std::size_t i = 0; i < g.rules().size(); ++i) {
    const InterpolationRule& rule = g.rules()[i];
    if (symbol && rule.symbol() != *symbol) continue;
    auto it = anchors_by_pattern.find(rule.pattern.name);
    if (it == anchors_by_pattern.end())
      it = anchors_by_pattern.emplace(rule.pattern.name, candidate_anchors(context, rule.pattern)).first;
    for (NodeId q : it->second) {
      auto outcome = evaluate_interpolation({context, rule.addendum, q, rule.target});
      if (outcome.result) out.push_back({Move{i, q}, std::move(*outcome.result)});
    }
  }
  return out;
}

std::vector<Move> applicable_moves(const Gig& g, const InstantaneousDescription& id) {
  std::vector<Move> out;
  if (id.remaining.empty()) return out;
  for (auto& s : expand(g, id.context, &id.remaining.front())) out.push_back(s.move);
  return out;
}

InstantaneousDescription step(const Gig& g, const InstantaneousDescription& id, Move move) {
  if (id.remaining.empty()) throw PreconditionError("no input left to scan");
  if (move.rule >= g.rules().size()) throw PreconditionError("rule index out of range");
  const InterpolationRule& rule = g.rules()[move.rule];
  if (rule.symbol() != id.remaining.front())
    throw PreconditionError("rule " + rule.name + " scans '" + rule.symbol() + "' but the next symbol is '" +
                            id.remaining.front() + "'");
  const auto anchors = candidate_anchors(id.context, rule.pattern);
  if (std::find(anchors.begin(), anchors.end(), move.anchor) == anchors.end())
    throw PreconditionError("anchor is not a candidate for rule " + rule.name);
  auto outcome = evaluate_interpolation({id.context, rule.addendum, move.anchor, rule.target});
  if (!outcome.result) throw InterpolationError(std::move(outcome.report));
  return {std::move(*outcome.result), SymbolString(id.remaining.begin() + 1, id.remaining.end())};
}

std::vector<DerivationTrace> recognize(const Gig& g, const SymbolString& input, std::size_t max_parses) {
  std::vector<DerivationTrace> out;
  if (max_parses == 0) return out;
  const InstantaneousDescription start = initial_id(g, input);

  struct Frame {
    ParseGraph context;
    std::vector<TraceStep> steps;
  };
  std::vector<Frame> stack;
  stack.push_back({start.context, {}});
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    const std::size_t depth = f.steps.size();
    if (depth == input.size()) {
      if (is_complete(f.context)) {
        out.push_back({std::move(f.steps), std::move(f.context)});
        if (out.size() >= max_parses) break;
      }
      continue;
    }
    if (dangling_count(f.context) > input.size() - depth) continue;
    auto next = expand(g, f.context, &input[depth]);
    for (auto it = next.rbegin(); it != next.rend(); ++it) {
      Frame child{std::move(it->context), f.steps};
      child.steps.push_back({it->move.rule, it->move.anchor, input[depth]});
      stack.push_back(std::move(child));
    }
  }
  return out;
}

bool accepts(const Gig& g, const SymbolString& input) { return !recognize(g, input, 1).empty(); }

ParseGraph replay(const Gig& g, const SymbolString& input, const DerivationTrace& trace) {
  InstantaneousDescription id = initial_id(g, input);
  for (const TraceStep& s : trace.steps) id = step(g, id, Move{s.rule, s.anchor});
  return id.context;
}

void explore(const Gig& g, std::size_t max_len, bool prune, const MoveVisitor& visit) {
  struct Item {
    ParseGraph context;
    SymbolString scanned;
  };
  std::vector<Item> level;
  level.push_back({ParseGraph(g.axiom()), {}});
  for (std::size_t depth = 0; depth < max_len && !level.empty(); ++depth) {
    std::vector<Item> next_level;
    std::set<std::string> seen;
    for (const Item& item : level) {
      for (auto& s : expand(g, item.context, nullptr)) {
        visit(item.context, s.move, s.context, item.scanned);
        if (prune && dangling_count(s.context) > max_len - depth - 1) continue;
        if (!seen.insert(to_tree_text(s.context)).second) continue;
        SymbolString scanned = item.scanned;
        scanned.push_back(g.rules()[s.move.rule].symbol());
        next_level.push_back({std::move(s.context), std::move(scanned)});
      }
    }
    level = std::move(next_level);
  }
}

std::set<SymbolString> enumerate_language(const Gig& g, std::size_t max_len) {
  std::set<SymbolString> out;
  explore(g, max_len, true, [&](const ParseGraph&, const Move&, const ParseGraph& after, const SymbolString&) {
    if (is_complete(after)) out.insert(yield_string(after));
  });
  return out;
}

std::set<std::string> parse_graph_set(const Gig& g, const SymbolString& input) {
  std::set<std::string> out;
  for (const auto& t : recognize(g, input, static_cast<std::size_t>(-1))) out.insert(to_tree_text(t.final_graph));
  return out;
}

std::optional<Ambiguity> find_ambiguity(const Gig& g, std::size_t max_len) {
  for (const auto& w : enumerate_language(g, max_len)) {
    const std::size_t n = parse_graph_set(g, w).size();
    if (n > 1) return Ambiguity{w, n};
  }
  return std::nullopt;
}

namespace {

// Depth-first over every description, following `input` when given and every
// symbol of Σ otherwise (up to `max_len`).
DeterminismReport find_branching(const Gig& g, const SymbolString* input, std::size_t max_len) {
  struct Frame {
    ParseGraph context;
    SymbolString scanned;
  };
  std::vector<Frame> stack;
  stack.push_back({ParseGraph(g.axiom()), {}});
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    const std::size_t depth = f.scanned.size();
    std::vector<std::string> symbols;
    if (input) {
      if (depth < input->size()) symbols.push_back((*input)[depth]);
    } else if (depth < max_len) {
      symbols.assign(g.symbols().begin(), g.symbols().end());
    }
    std::vector<Frame> children;
    for (const auto& sym : symbols) {
      auto next = expand(g, f.context, &sym);
      if (next.size() > 1) {
        DeterminismReport r;
        r.deterministic = false;
        SymbolString remaining = input ? SymbolString(input->begin() + depth, input->end()) : SymbolString{sym};
        r.branching = InstantaneousDescription{f.context, std::move(remaining)};
        r.scanned = f.scanned;
        for (auto& s : next) r.moves.push_back(s.move);
        return r;
      }
      for (auto& s : next) {
        SymbolString scanned = f.scanned;
        scanned.push_back(sym);
        children.push_back({std::move(s.context), std::move(scanned)});
      }
    }
    for (auto it = children.rbegin(); it != children.rend(); ++it) stack.push_back(std::move(*it));
  }
  return {};
}

}  // namespace

DeterminismReport check_determinism(const Gig& g, const SymbolString& input) {
  (void)initial_id(g, input);
  return find_branching(g, &input, input.size());
}

DeterminismReport check_determinism_upto(const Gig& g, std::size_t max_len) {
  return find_branching(g, nullptr, max_len);
}

}  // namespace gig
