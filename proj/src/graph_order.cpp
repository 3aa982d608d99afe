#include "gig/graph_order.hpp"

#include <algorithm>
#include <unordered_set>

#include "gig/error.hpp"

namespace gig {
namespace {

struct IdHash {
  std::size_t operator()(NodeId id) const noexcept { return index_of(id); }
};
using IdSet = std::unordered_set<NodeId, IdHash>;

void require_node(const ParseGraph& g, NodeId n) {
  if (!g.contains(n)) throw PreconditionError("unknown node id n" + std::to_string(index_of(n)));
}

// Image of m under ((F⁻¹)* ∘ E⁻¹)*, in discovery order starting with m.
std::vector<NodeId> climb(const ParseGraph& g, NodeId m) {
  std::vector<NodeId> out{m};
  IdSet seen{m};
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::optional<NodeId> w = out[i];
    IdSet chain;
    while (w && chain.insert(*w).second) {
      if (auto p = g.parent(*w); p && seen.insert(*p).second) out.push_back(*p);
      w = g.left_sibling(*w);
    }
  }
  return out;
}

}  // namespace

std::vector<NodeId> successors(const ParseGraph& g, NodeId m) {
  require_node(g, m);
  std::vector<NodeId> out;
  IdSet seen;
  for (NodeId u : climb(g, m)) {
    std::optional<NodeId> v = g.right_sibling(u);
    while (v && seen.insert(*v).second) {
      out.push_back(*v);
      v = g.first_child(*v);
    }
  }
  return out;
}

bool successor(const ParseGraph& g, NodeId m, NodeId n) {
  require_node(g, n);
  const auto s = successors(g, m);
  return std::find(s.begin(), s.end(), n) != s.end();
}

std::vector<NodeId> immediate_successor_set(const ParseGraph& g, NodeId m) {
  const auto after_m = successors(g, m);
  std::vector<NodeId> out;
  for (NodeId n : after_m) {
    const bool blocked = std::any_of(after_m.begin(), after_m.end(), [&](NodeId p) {
      return p != n && p != m && successor(g, p, n);
    });
    if (!blocked) out.push_back(n);
  }
  return out;
}

std::vector<NodeId> ancestors(const ParseGraph& g, NodeId n) {
  require_node(g, n);
  std::vector<NodeId> out{n};
  std::optional<NodeId> d = g.dominator(n);
  while (d && out.size() <= g.size()) {
    out.push_back(*d);
    d = g.dominator(*d);
  }
  return out;
}

std::vector<NodeId> tree_ancestors(const ParseGraph& g, NodeId n) {
  require_node(g, n);
  return climb(g, n);
}

std::vector<NodeId> preorder(const ParseGraph& g) {
  std::vector<NodeId> out;
  if (!g.has_root()) return out;
  std::vector<NodeId> stack{g.root()};
  IdSet seen;
  while (!stack.empty()) {
    const NodeId n = stack.back();
    stack.pop_back();
    if (!seen.insert(n).second) continue;
    out.push_back(n);
    if (auto f = g.right_sibling(n)) stack.push_back(*f);
    if (auto e = g.first_child(n)) stack.push_back(*e);
  }
  return out;
}

std::vector<NodeId> terminal_sequence(const ParseGraph& g) {
  std::vector<NodeId> out;
  for (NodeId n : preorder(g))
    if (!g.first_child(n)) out.push_back(n);
  return out;
}

std::vector<NodeId> frontier(const ParseGraph& g) {
  std::vector<NodeId> out;
  for (NodeId n : terminal_sequence(g))
    if (!g.is_epsilon(n)) out.push_back(n);
  return out;
}

bool is_leftmost_lexicalized(const ParseGraph& g) {
  bool seen_variable = false;
  for (NodeId n : frontier(g)) {
    if (g.is_lexeme(n)) {
      if (seen_variable) return false;
    } else {
      seen_variable = true;
    }
  }
  return true;
}

SymbolString yield_string(const ParseGraph& g) {
  if (!is_leftmost_lexicalized(g))
    throw PreconditionError("yield requires a leftmost-lexicalized graph");
  SymbolString out;
  for (NodeId n : frontier(g)) {
    if (!g.is_lexeme(n)) break;
    out.push_back(g.label(n).name);
  }
  return out;
}

std::vector<Label> frontier_labels(const ParseGraph& g) {
  std::vector<Label> out;
  for (NodeId n : frontier(g)) out.push_back(g.label(n));
  return out;
}

bool is_complete(const ParseGraph& g) {
  const auto f = frontier(g);
  return std::all_of(f.begin(), f.end(), [&](NodeId n) { return g.is_lexeme(n); });
}

std::optional<NodeId> last_lexeme(const ParseGraph& g) {
  std::optional<NodeId> out;
  for (NodeId n : frontier(g))
    if (g.is_lexeme(n)) out = n;
  return out;
}

bool is_epsilon_null(const ParseGraph& g, NodeId n) {
  switch (g.kind(n)) {
    case NodeKind::epsilon:
      return true;
    case NodeKind::lexeme:
      return false;
    case NodeKind::nonlexical:
      break;
  }
  const auto kids = g.children(n);
  return !kids.empty() &&
         std::all_of(kids.begin(), kids.end(), [&](NodeId c) { return is_epsilon_null(g, c); });
}

std::size_t dangling_count(const ParseGraph& g) {
  const auto f = frontier(g);
  return static_cast<std::size_t>(
      std::count_if(f.begin(), f.end(), [&](NodeId n) { return g.is_variable_node(n); }));
}

}  // namespace gig
