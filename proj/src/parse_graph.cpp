#include "gig/parse_graph.hpp"

#include <algorithm>
#include <set>

#include "gig/error.hpp"

namespace gig {

std::ostream& operator<<(std::ostream& os, NodeId id) { return os << 'n' << index_of(id); }

std::ostream& operator<<(std::ostream& os, const Violation& v) {
  if (v.node) os << *v.node << ": ";
  return os << v.constraint;
}

ParseGraph::ParseGraph(const std::string& root_variable) {
  set_root(add_variable(root_variable));
}

NodeId ParseGraph::add_node(Label label) {
  return insert(NodeId{next_id()}, NodeKind::nonlexical, std::move(label));
}

NodeId ParseGraph::add_lexeme(const std::string& symbol) {
  return insert(NodeId{next_id()}, NodeKind::lexeme, Label::symbol(symbol));
}

NodeId ParseGraph::add_epsilon() {
  return insert(NodeId{next_id()}, NodeKind::epsilon, Label::symbol(""));
}

NodeId ParseGraph::insert(NodeId id, NodeKind kind, Label label) {
  const auto idx = index_of(id);
  if (idx < slots_.size() && slots_[idx].present)
    throw PreconditionError("node id already in use");
  if (idx >= slots_.size()) slots_.resize(idx + 1);
  Slot& s = slots_[idx];
  s.present = true;
  s.kind = kind;
  s.label = std::move(label);
  ++size_;
  return id;
}

void ParseGraph::reserve_ids(std::uint32_t next) {
  if (next > slots_.size()) slots_.resize(next);
}

const ParseGraph::Slot& ParseGraph::slot(NodeId id) const {
  const auto idx = index_of(id);
  if (idx >= slots_.size() || !slots_[idx].present)
    throw PreconditionError("unknown node id n" + std::to_string(idx));
  return slots_[idx];
}

ParseGraph::Slot& ParseGraph::slot(NodeId id) {
  return const_cast<Slot&>(std::as_const(*this).slot(id));
}

void ParseGraph::add_first_child(NodeId parent, NodeId child) {
  Slot& p = slot(parent);
  Slot& c = slot(child);
  e_edges_.push_back({parent, child});
  if (!p.first_child) p.first_child = child;
  if (!c.parent) c.parent = parent;
}

void ParseGraph::add_right_sibling(NodeId left, NodeId right) {
  Slot& l = slot(left);
  Slot& r = slot(right);
  f_edges_.push_back({left, right});
  if (!l.right_sibling) l.right_sibling = right;
  if (!r.left_sibling) r.left_sibling = left;
}

void ParseGraph::set_root(NodeId root) {
  (void)slot(root);
  root_ = root;
}

NodeId ParseGraph::root() const {
  if (!root_) throw PreconditionError("graph has no root");
  return *root_;
}

bool ParseGraph::contains(NodeId id) const noexcept {
  const auto idx = index_of(id);
  return idx < slots_.size() && slots_[idx].present;
}

NodeKind ParseGraph::kind(NodeId id) const { return slot(id).kind; }
const Label& ParseGraph::label(NodeId id) const { return slot(id).label; }
std::optional<NodeId> ParseGraph::first_child(NodeId id) const { return slot(id).first_child; }
std::optional<NodeId> ParseGraph::right_sibling(NodeId id) const { return slot(id).right_sibling; }
std::optional<NodeId> ParseGraph::parent(NodeId id) const { return slot(id).parent; }
std::optional<NodeId> ParseGraph::left_sibling(NodeId id) const { return slot(id).left_sibling; }

std::optional<NodeId> ParseGraph::dominator(NodeId id) const {
  const Slot& s = slot(id);
  return s.parent ? s.parent : s.left_sibling;
}

std::vector<NodeId> ParseGraph::children(NodeId id) const {
  std::vector<NodeId> out;
  auto c = first_child(id);
  while (c && out.size() <= size_) {
    out.push_back(*c);
    c = right_sibling(*c);
  }
  return out;
}

std::vector<NodeId> ParseGraph::nodes() const {
  std::vector<NodeId> out;
  out.reserve(size_);
  for (std::uint32_t i = 0; i < slots_.size(); ++i)
    if (slots_[i].present) out.push_back(NodeId{i});
  return out;
}

std::vector<NodeId> ParseGraph::nodes_of_kind(NodeKind k) const {
  std::vector<NodeId> out;
  for (std::uint32_t i = 0; i < slots_.size(); ++i)
    if (slots_[i].present && slots_[i].kind == k) out.push_back(NodeId{i});
  return out;
}

bool operator==(const ParseGraph& a, const ParseGraph& b) {
  if (a.root_ != b.root_ || a.size_ != b.size_ || a.slots_.size() != b.slots_.size())
    return false;
  for (std::size_t i = 0; i < a.slots_.size(); ++i) {
    const auto& x = a.slots_[i];
    const auto& y = b.slots_[i];
    if (x.present != y.present) return false;
    if (!x.present) continue;
    if (x.kind != y.kind || x.label != y.label) return false;
  }
  auto sorted = [](std::vector<Edge> edges) {
    std::sort(edges.begin(), edges.end(), [](const Edge& l, const Edge& r) {
      return std::pair(index_of(l.from), index_of(l.to)) < std::pair(index_of(r.from), index_of(r.to));
    });
    return edges;
  };
  return sorted(a.e_edges_) == sorted(b.e_edges_) && sorted(a.f_edges_) == sorted(b.f_edges_);
}

std::vector<Violation> validate(const ParseGraph& g) {
  std::vector<Violation> out;
  auto report = [&](std::optional<NodeId> n, std::string what) {
    out.push_back({n, std::move(what)});
  };

  if (!g.has_root()) {
    report(std::nullopt, "graph has no root");
    return out;
  }
  const NodeId root = g.root();
  if (g.kind(root) != NodeKind::nonlexical) report(root, "root is not a nonlexical node");

  // Variables label nonlexical nodes, symbols label lexemes, and no name is both.
  std::set<std::string> variable_names;
  std::set<std::string> symbol_names;
  for (NodeId n : g.nodes()) {
    const Label& l = g.label(n);
    switch (g.kind(n)) {
      case NodeKind::nonlexical:
        if (!l.is_variable()) report(n, "nonlexical node labeled with a symbol");
        if (l.name.empty()) report(n, "nonlexical node without a label");
        variable_names.insert(l.name);
        break;
      case NodeKind::lexeme:
        if (!l.is_symbol()) report(n, "lexeme labeled with a variable");
        symbol_names.insert(l.name);
        break;
      case NodeKind::epsilon:
        break;
    }
  }
  for (const auto& name : variable_names)
    if (symbol_names.count(name)) report(std::nullopt, "label '" + name + "' used as both variable and symbol");

  const std::size_t n_ids = g.next_id();
  std::vector<int> e_out(n_ids), f_out(n_ids), f_in(n_ids), incoming(n_ids);
  auto check_edges = [&](std::span<const Edge> edges, std::vector<int>& out_degree,
                         std::vector<int>* in_degree, const char* not_function) {
    for (const Edge& e : edges) {
      if (!g.contains(e.from) || !g.contains(e.to)) {
        report(g.contains(e.from) ? e.to : e.from, "edge refers to a missing node");
        continue;
      }
      if (++out_degree[index_of(e.from)] == 2) report(e.from, not_function);
      ++incoming[index_of(e.to)];
      if (in_degree) ++(*in_degree)[index_of(e.to)];
    }
  };
  check_edges(g.first_child_edges(), e_out, nullptr, "E not a function");
  check_edges(g.right_sibling_edges(), f_out, &f_in, "F not a function");

  for (NodeId n : g.nodes()) {
    const auto i = index_of(n);
    const int in = incoming[i];
    if (n == root) {
      if (in != 0) report(n, "root has an immediate dominator");
    } else if (in == 0) {
      report(n, "no immediate dominator");
    } else if (in > 1) {
      report(n, "more than one immediate dominator");
    }
    if (g.kind(n) != NodeKind::nonlexical) {
      const std::string what = g.kind(n) == NodeKind::lexeme ? "lexeme" : "epsilon leaf";
      if (e_out[i] > 0) report(n, what + " has a first child");
      if (f_out[i] > 0) report(n, what + " has a right sibling");
      if (f_in[i] > 0) report(n, what + " is a right sibling");
    }
  }

  // Reachability from the root through E ∪ F; with single dominators this
  // also rules out cycles.
  std::vector<std::vector<NodeId>> adjacent(n_ids);
  for (auto edges : {g.first_child_edges(), g.right_sibling_edges()})
    for (const Edge& e : edges)
      if (g.contains(e.from) && g.contains(e.to)) adjacent[index_of(e.from)].push_back(e.to);
  std::vector<bool> seen(n_ids);
  seen[index_of(root)] = true;
  std::vector<NodeId> stack{root};
  while (!stack.empty()) {
    const NodeId n = stack.back();
    stack.pop_back();
    for (NodeId m : adjacent[index_of(n)]) {
      if (seen[index_of(m)]) continue;
      seen[index_of(m)] = true;
      stack.push_back(m);
    }
  }
  for (NodeId n : g.nodes())
    if (!seen[index_of(n)]) report(n, "unreachable from the root");

  return out;
}

}  // namespace gig
