#include "gig/tree_text.hpp"

#include <sstream>

#include "tree_parse.hpp"

namespace gig {
namespace detail {

bool starts_tree(const Lexer& lex) {
  switch (lex.peek().kind) {
    case Tok::ident:
    case Tok::string:
    case Tok::eps:
    case Tok::caret:
      return true;
    default:
      return false;
  }
}

namespace {

NodeId parse_tree(Lexer& lex, ParseGraph& g, std::optional<NodeId>& mark) {
  const Token start = lex.peek();
  const bool marked = lex.accept(Tok::caret);
  const Token t = lex.next();
  NodeId n{};
  switch (t.kind) {
    case Tok::string:
      n = g.add_lexeme(t.text);
      break;
    case Tok::eps:
      n = g.add_epsilon();
      break;
    case Tok::ident:
      n = g.add_variable(t.text);
      if (lex.accept(Tok::lparen)) {
        const NodeId first = parse_forest(lex, g, mark);
        g.add_first_child(n, first);
        lex.expect(Tok::rparen, "to close the child list");
      }
      break;
    default:
      throw SyntaxError(std::string("expected a node, got ") + describe(t.kind), t.line, t.column);
  }
  if (marked) {
    if (mark) throw SyntaxError("more than one '^' marker", start.line, start.column);
    mark = n;
  }
  return n;
}

}  // namespace

NodeId parse_forest(Lexer& lex, ParseGraph& g, std::optional<NodeId>& mark) {
  if (!starts_tree(lex)) {
    const Token& t = lex.peek();
    throw SyntaxError(std::string("expected a node, got ") + describe(t.kind), t.line, t.column);
  }
  const NodeId first = parse_tree(lex, g, mark);
  NodeId prev = first;
  while (starts_tree(lex)) {
    const NodeId next = parse_tree(lex, g, mark);
    g.add_right_sibling(prev, next);
    prev = next;
  }
  return first;
}

}  // namespace detail

MarkedGraph parse_tree_text(std::string_view text) {
  detail::Lexer lex(text);
  MarkedGraph out;
  const NodeId root = detail::parse_forest(lex, out.graph, out.mark);
  out.graph.set_root(root);
  lex.expect(detail::Tok::end, "after the last tree");
  return out;
}

std::string quote_symbol(std::string_view symbol) {
  std::string out = "\"";
  for (char c : symbol) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

namespace {

void write_node(std::ostream& os, const ParseGraph& g, NodeId n, std::optional<NodeId> mark,
                std::size_t depth) {
  if (depth > g.size()) throw PreconditionError("cycle in parse graph");
  if (mark == n) os << '^';
  switch (g.kind(n)) {
    case NodeKind::lexeme:
      os << quote_symbol(g.label(n).name);
      return;
    case NodeKind::epsilon:
      os << "#eps";
      return;
    case NodeKind::nonlexical:
      break;
  }
  os << g.label(n).name;
  const auto kids = g.children(n);
  if (kids.empty()) return;
  os << '(';
  for (std::size_t i = 0; i < kids.size(); ++i) {
    if (i) os << ' ';
    write_node(os, g, kids[i], mark, depth + 1);
  }
  os << ')';
}

}  // namespace

std::string to_tree_text(const ParseGraph& g, std::optional<NodeId> mark) {
  std::ostringstream os;
  std::optional<NodeId> n = g.root();
  bool first = true;
  std::size_t guard = 0;
  while (n && guard++ <= g.size()) {
    if (!first) os << ' ';
    first = false;
    write_node(os, g, *n, mark, 0);
    n = g.right_sibling(*n);
  }
  return os.str();
}

}  // namespace gig
