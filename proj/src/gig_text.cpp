#include "gig/gig_text.hpp"

#include <sstream>

#include "gig/tree_text.hpp"
#include "tree_parse.hpp"

namespace gig {

using detail::Lexer;
using detail::Tok;

Gig parse_gig(std::string_view text) {
  Lexer lex(text);
  const auto kw = lex.expect(Tok::ident, "at the start of the grammar");
  if (kw.text != "gig") throw SyntaxError("expected 'gig'", kw.line, kw.column);
  lex.expect(Tok::lbrace, "after 'gig'");
  const auto axiom_kw = lex.expect(Tok::ident, "to open the axiom declaration");
  if (axiom_kw.text != "axiom") throw SyntaxError("expected 'axiom'", axiom_kw.line, axiom_kw.column);
  Gig g(lex.expect(Tok::ident, "naming the axiom").text);
  lex.expect(Tok::semi, "after the axiom");

  while (lex.peek().kind != Tok::rbrace) {
    const auto rule_kw = lex.expect(Tok::ident, "to open a rule");
    if (rule_kw.text != "rule") throw SyntaxError("expected 'rule'", rule_kw.line, rule_kw.column);
    const auto name = lex.expect(Tok::ident, "naming the rule");
    lex.expect(Tok::colon, "after the rule name");
    const auto pattern = lex.expect(Tok::ident, "as context pattern");
    lex.expect(Tok::arrow, "after the context pattern");
    const auto body_start = lex.peek();
    ParseGraph addendum;
    std::optional<NodeId> mark;
    addendum.set_root(detail::parse_forest(lex, addendum, mark));
    if (!mark) throw SyntaxError("rule " + name.text + " has no '^' target", body_start.line, body_start.column);
    lex.expect(Tok::semi, "after the rule");
    try {
      g.add_rule(InterpolationRule::make(name.text, Label::variable(pattern.text), std::move(addendum), *mark));
    } catch (const PreconditionError& e) {
      throw SyntaxError(e.what(), name.line, name.column);
    }
  }
  lex.expect(Tok::rbrace, "to close the grammar");
  lex.expect(Tok::end, "after the grammar");
  return g;
}

std::string rule_text(const InterpolationRule& rule) {
  return "rule " + rule.name + ": " + rule.pattern.name + " -> " + to_tree_text(rule.addendum, rule.target);
}

std::string to_gig_text(const Gig& g) {
  std::ostringstream os;
  os << "gig { axiom " << g.axiom() << ";\n";
  for (const auto& r : g.rules()) os << "  " << rule_text(r) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace gig
