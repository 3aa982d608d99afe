#include "gig/interpolation.hpp"

#include <algorithm>
#include <sstream>

#include "gig/graph_order.hpp"

namespace gig {

std::string_view to_string(ShiftKind kind) {
  switch (kind) {
    case ShiftKind::down_shift: return "down-shift";
    case ShiftKind::right_shift: return "right-shift";
    case ShiftKind::epsilon_shift: return "epsilon-shift";
  }
  return "?";
}

std::vector<NodeId> interpolation_path(const ParseGraph& addendum, NodeId target) {
  if (!addendum.contains(target)) return {};
  const NodeId s = addendum.root();
  std::vector<NodeId> path{target};
  std::optional<NodeId> d = target == s ? std::nullopt : addendum.dominator(target);
  while (d && path.size() <= addendum.size()) {
    path.push_back(*d);
    if (*d == s) break;
    d = addendum.dominator(*d);
  }
  if (path.back() != s) return {};
  std::reverse(path.begin(), path.end());
  return path;
}

ShiftKind classify_shift(const ParseGraph& addendum, NodeId target) {
  const auto path = interpolation_path(addendum, target);
  if (path.empty()) throw PreconditionError("no path from the addendum root to the target");
  if (path.size() == 1) return ShiftKind::epsilon_shift;
  return addendum.first_child(path[0]) == path[1] ? ShiftKind::down_shift : ShiftKind::right_shift;
}

std::vector<std::string> ConstraintReport::failures() const {
  std::vector<std::string> out;
  if (!disjunction) out.emplace_back("disjunction");
  if (!lexicalization) out.emplace_back("lexicalization");
  if (!context) out.emplace_back("context");
  if (!path_existence) out.emplace_back("path-existence");
  if (!anchor_open) out.emplace_back("anchor-open");
  if (!result_well_formedness) out.emplace_back("result-well-formedness");
  if (!frontier) out.emplace_back("frontier");
  return out;
}

std::ostream& operator<<(std::ostream& os, const ConstraintReport& r) {
  const auto f = r.failures();
  if (f.empty()) return os << "all constraints pass";
  os << "failed:";
  for (const auto& name : f) os << ' ' << name;
  return os;
}

InterpolationError::InterpolationError(ConstraintReport report)
    : Error([&] {
        std::ostringstream os;
        os << "interpolation undefined: " << report;
        return os.str();
      }()),
      report_(std::move(report)) {}

namespace {

struct Spliced {
  ParseGraph graph;
  NodeId source;
  NodeId target;
  std::optional<NodeId> lexeme;
};

Spliced build(const InterpolationRequest& req, ShiftKind kind) {
  const ParseGraph& g1 = req.context;
  const ParseGraph& g2 = req.addendum;
  const NodeId q = req.anchor;
  const std::uint32_t offset = g1.next_id();
  auto fresh = [offset](NodeId n) { return NodeId{offset + index_of(n)}; };

  Spliced out;
  ParseGraph& g3 = out.graph;
  for (NodeId n : g1.nodes())
    if (n != q) g3.insert(n, g1.kind(n), g1.label(n));
  for (NodeId n : g2.nodes()) {
    g3.insert(fresh(n), g2.kind(n), g2.label(n));
    if (g2.is_lexeme(n) && !out.lexeme) out.lexeme = fresh(n);
  }
  g3.reserve_ids(offset + g2.next_id());

  const NodeId s = fresh(g2.root());
  const NodeId t = fresh(req.target);
  out.source = s;
  out.target = t;

  // The anchor's incoming edge re-targets s; its outgoing E edge leaves from
  // t on a down-shift and from s otherwise; its outgoing F edge leaves from t
  // on a right-shift and from s otherwise.
  const NodeId e_holder = kind == ShiftKind::down_shift ? t : s;
  const NodeId f_holder = kind == ShiftKind::right_shift ? t : s;
  for (const Edge& e : g2.first_child_edges()) g3.add_first_child(fresh(e.from), fresh(e.to));
  for (const Edge& e : g2.right_sibling_edges()) g3.add_right_sibling(fresh(e.from), fresh(e.to));
  for (const Edge& e : g1.first_child_edges()) {
    if (e.to == q)
      g3.add_first_child(e.from, s);
    else if (e.from == q)
      g3.add_first_child(e_holder, e.to);
    else
      g3.add_first_child(e.from, e.to);
  }
  for (const Edge& e : g1.right_sibling_edges()) {
    if (e.to == q)
      g3.add_right_sibling(e.from, s);
    else if (e.from == q)
      g3.add_right_sibling(f_holder, e.to);
    else
      g3.add_right_sibling(e.from, e.to);
  }
  // Replacing the root makes the addendum root the new root.
  g3.set_root(g1.root() == q ? s : g1.root());
  return out;
}

void require_request(const InterpolationRequest& req) {
  if (!req.context.contains(req.anchor))
    throw PreconditionError("anchor n" + std::to_string(index_of(req.anchor)) + " is not a node of the context");
  if (!req.context.is_variable_node(req.anchor))
    throw PreconditionError("anchor n" + std::to_string(index_of(req.anchor)) + " is not variable-labeled");
  if (!req.addendum.contains(req.target))
    throw PreconditionError("target n" + std::to_string(index_of(req.target)) + " is not a node of the addendum");
}

}  // namespace

ParseGraph splice(const InterpolationRequest& req) {
  require_request(req);
  return build(req, classify_shift(req.addendum, req.target)).graph;
}

InterpolationOutcome evaluate_interpolation(const InterpolationRequest& req) {
  require_request(req);
  InterpolationOutcome out;
  ConstraintReport& r = out.report;
  r.disjunction = true;
  r.lexicalization = req.addendum.nodes_of_kind(NodeKind::lexeme).size() == 1;
  r.context = is_leftmost_lexicalized(req.context);
  r.path_existence = !interpolation_path(req.addendum, req.target).empty();
  r.anchor_open = !is_epsilon_null(req.context, req.anchor);
  if (!r.path_existence) return out;
  const ShiftKind kind = classify_shift(req.addendum, req.target);
  // A down-shift pushes the anchor's subtree below the target, so the anchor
  // must have one.
  if (kind == ShiftKind::down_shift && !req.context.first_child(req.anchor)) r.anchor_open = false;

  Spliced sp = build(req, kind);
  out.source = sp.source;
  out.lexeme = sp.lexeme;
  r.result_violations = validate(sp.graph);
  r.result_well_formedness = r.result_violations.empty();

  if (r.result_well_formedness && r.lexicalization) {
    std::vector<NodeId> expected;
    for (NodeId n : frontier(req.context)) {
      if (!req.context.is_lexeme(n)) break;
      expected.push_back(n);
    }
    expected.push_back(*sp.lexeme);
    const auto f3 = frontier(sp.graph);
    r.frontier = f3.size() >= expected.size() && std::equal(expected.begin(), expected.end(), f3.begin());
  }
  if (r.all_pass()) out.result = std::move(sp.graph);
  return out;
}

ConstraintReport check_constraints(const InterpolationRequest& req) {
  return evaluate_interpolation(req).report;
}

ParseGraph interpolate(const InterpolationRequest& req) {
  auto outcome = evaluate_interpolation(req);
  if (!outcome.result) throw InterpolationError(std::move(outcome.report));
  return std::move(*outcome.result);
}

std::vector<NodeId> candidate_anchors(const ParseGraph& context, const Label& pattern) {
  if (!pattern.is_variable())
    throw PreconditionError("context pattern '" + pattern.name + "' is not a variable");
  auto matches = [&](NodeId n) {
    return context.is_variable_node(n) && context.label(n) == pattern && !is_epsilon_null(context, n);
  };

  const auto last = last_lexeme(context);
  if (!last) {
    const NodeId r = context.root();
    if (matches(r)) return {r};
    return {};
  }

  std::vector<NodeId> out;
  for (NodeId n : ancestors(context, *last))
    if (matches(n)) out.push_back(n);

  std::vector<NodeId> following = immediate_successor_set(context, *last);
  for (std::size_t i = 0; i < following.size(); ++i) {
    if (!is_epsilon_null(context, following[i])) continue;
    for (NodeId n : immediate_successor_set(context, following[i]))
      if (std::find(following.begin(), following.end(), n) == following.end()) following.push_back(n);
  }
  const auto order = preorder(context);
  auto rank = [&](NodeId n) { return std::find(order.begin(), order.end(), n) - order.begin(); };
  std::sort(following.begin(), following.end(), [&](NodeId a, NodeId b) { return rank(a) < rank(b); });
  for (NodeId n : following)
    if (matches(n) && std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
  return out;
}

}  // namespace gig
