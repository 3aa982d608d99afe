#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gig/cfg.hpp"
#include "gig/gig_text.hpp"
#include "gig/graph_order.hpp"
#include "gig/parse_graph.hpp"
#include "gig/tree_text.hpp"

namespace testing_support {

using gig::NodeId;
using gig::ParseGraph;

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string grammar_path(const std::string& name) { return std::string(GIG_GRAMMAR_DIR) + "/" + name; }
inline gig::Gig load_gig(const std::string& name) { return gig::parse_gig(slurp(grammar_path(name))); }
inline gig::Cfg load_cfg(const std::string& name) { return gig::parse_cfg(slurp(grammar_path(name))); }

inline ParseGraph tree(const std::string& text) { return gig::parse_tree_text(text).graph; }

/// Variable nodes with the given label, in preorder.
inline std::vector<NodeId> labeled(const ParseGraph& g, const std::string& name) {
  std::vector<NodeId> out;
  for (NodeId n : gig::preorder(g))
    if (!g.is_epsilon(n) && g.label(n).name == name) out.push_back(n);
  return out;
}

inline std::vector<std::string> names(const std::vector<gig::Label>& labels) {
  std::vector<std::string> out;
  for (const auto& l : labels) out.push_back(l.name);
  return out;
}

// --- brute-force relation algebra over boolean matrices ---------------------

using Matrix = std::vector<std::vector<bool>>;

inline Matrix identity(std::size_t n) {
  Matrix m(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = true;
  return m;
}

/// Path composition: (a ; b)[i][k] iff some j has a[i][j] and b[j][k].
inline Matrix then(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix out(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a[i][j])
        for (std::size_t k = 0; k < n; ++k)
          if (b[j][k]) out[i][k] = true;
  return out;
}

inline Matrix star(const Matrix& a) {
  Matrix out = identity(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a[i][j]) out[i][j] = true;
  const std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (out[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (out[k][j]) out[i][j] = true;
  return out;
}

inline Matrix inverse(const Matrix& a) {
  Matrix out(a.size(), std::vector<bool>(a.size(), false));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out[j][i] = a[i][j];
  return out;
}

/// The successor relation computed from its defining formula, independently
/// of the library's walk. Indices are positions in g.nodes().
struct Relations {
  std::vector<NodeId> ids;
  std::map<NodeId, std::size_t> index;
  Matrix successor;
  Matrix climb;  // ((F⁻¹)* ; E⁻¹)*

  explicit Relations(const ParseGraph& g) : ids(g.nodes()) {
    for (std::size_t i = 0; i < ids.size(); ++i) index[ids[i]] = i;
    const std::size_t n = ids.size();
    Matrix e(n, std::vector<bool>(n, false)), f = e;
    for (const auto& x : g.first_child_edges()) e[index[x.from]][index[x.to]] = true;
    for (const auto& x : g.right_sibling_edges()) f[index[x.from]][index[x.to]] = true;
    climb = star(then(star(inverse(f)), inverse(e)));
    successor = then(then(climb, f), star(e));
  }

  bool less(NodeId m, NodeId n) const { return successor[index.at(m)][index.at(n)]; }

  std::vector<NodeId> immediate(NodeId m) const {
    std::vector<NodeId> out;
    for (NodeId n : ids) {
      if (!less(m, n)) continue;
      bool between = false;
      for (NodeId p : ids)
        if (p != m && p != n && less(m, p) && less(p, n)) between = true;
      if (!between) out.push_back(n);
    }
    return out;
  }
};

/// Terminal nodes by recursive tree reading over explicit child lists.
inline std::vector<NodeId> reading_order(const ParseGraph& g, bool with_epsilon) {
  std::vector<NodeId> out;
  auto visit = [&](auto& self, NodeId n) -> void {
    for (std::optional<NodeId> cur = n; cur; cur = g.right_sibling(*cur)) {
      if (auto c = g.first_child(*cur))
        self(self, *c);
      else if (with_epsilon || !g.is_epsilon(*cur))
        out.push_back(*cur);
    }
  };
  visit(visit, g.root());
  return out;
}

// --- random graphs ------------------------------------------------------------

/// Random valid parse graph: an ordered tree of variables in which some leaves
/// get a single lexeme (or, with `epsilon`, an ε-leaf) child. Top-level forest
/// of `top` trees. At most `max_nodes` nodes.
inline ParseGraph random_graph(std::mt19937& rng, std::size_t max_nodes, bool epsilon, std::size_t top = 1) {
  const char* vars[] = {"A", "B", "C", "S"};
  const char* syms[] = {"a", "b", "c"};
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };

  std::vector<std::vector<std::size_t>> kids(1);
  std::vector<std::size_t> top_level{0};
  std::size_t count = 1;
  while (top_level.size() < top && count < max_nodes) {
    top_level.push_back(count++);
    kids.emplace_back();
  }
  const std::size_t target = 1 + pick(max_nodes);
  while (count < target) {
    kids[pick(count)].push_back(count);
    kids.emplace_back();
    ++count;
  }
  ParseGraph g;
  std::vector<NodeId> id(count);
  for (std::size_t i = 0; i < count; ++i) id[i] = g.add_variable(vars[pick(4)]);
  std::size_t total = count;
  for (std::size_t i = 0; i < count; ++i) {
    if (!kids[i].empty()) {
      g.add_first_child(id[i], id[kids[i].front()]);
      for (std::size_t k = 1; k < kids[i].size(); ++k) g.add_right_sibling(id[kids[i][k - 1]], id[kids[i][k]]);
    } else if (total < max_nodes && pick(2) == 0) {
      const NodeId leaf = epsilon && pick(3) == 0 ? g.add_epsilon() : g.add_lexeme(syms[pick(3)]);
      g.add_first_child(id[i], leaf);
      ++total;
    }
  }
  for (std::size_t k = 1; k < top_level.size(); ++k) g.add_right_sibling(id[top_level[k - 1]], id[top_level[k]]);
  g.set_root(id[0]);
  return g;
}

/// Random ε-free, leftmost-lexicalized context: the first k frontier leaves
/// of a random variable tree get a lexeme child.
inline ParseGraph random_context(std::mt19937& rng, std::size_t max_nodes, std::size_t min_lexemes) {
  const char* syms[] = {"a", "b", "c"};
  for (;;) {
    ParseGraph base = random_graph(rng, max_nodes, false);
    // Strip lexemes to get a bare variable tree, then lexicalize a prefix.
    ParseGraph g;
    std::map<NodeId, NodeId> copy;
    for (NodeId n : base.nodes())
      if (base.is_variable_node(n)) copy[n] = g.add_variable(base.label(n).name);
    for (const auto& e : base.first_child_edges())
      if (base.is_variable_node(e.to)) g.add_first_child(copy[e.from], copy[e.to]);
    for (const auto& e : base.right_sibling_edges()) g.add_right_sibling(copy[e.from], copy[e.to]);
    g.set_root(copy[base.root()]);
    const auto leaves = gig::frontier(g);
    if (leaves.size() < min_lexemes) continue;
    const std::size_t k =
        std::uniform_int_distribution<std::size_t>(min_lexemes, leaves.size())(rng);
    for (std::size_t i = 0; i < k; ++i)
      g.add_first_child(leaves[i], g.add_lexeme(syms[std::uniform_int_distribution<int>(0, 2)(rng)]));
    return g;
  }
}

/// Random mono-lexicalized addendum with a random variable target. May be a
/// forest, so that right-shifts occur.
inline gig::MarkedGraph random_addendum(std::mt19937& rng, std::size_t max_nodes) {
  for (;;) {
    const std::size_t top = std::uniform_int_distribution<std::size_t>(1, 2)(rng);
    ParseGraph g = random_graph(rng, max_nodes, false, top);
    const auto lexemes = g.nodes_of_kind(gig::NodeKind::lexeme);
    if (lexemes.size() != 1) continue;
    const auto vars = g.nodes_of_kind(gig::NodeKind::nonlexical);
    const NodeId t = vars[std::uniform_int_distribution<std::size_t>(0, vars.size() - 1)(rng)];
    return {std::move(g), t};
  }
}

}  // namespace testing_support
