#include "gig/grammar.hpp"

#include <sstream>

namespace gig {

InterpolationRule InterpolationRule::make(std::string name, Label pattern, ParseGraph addendum,
                                          NodeId target) {
  const std::string where = "rule " + name + ": ";
  if (!pattern.is_variable()) throw PreconditionError(where + "context pattern must be a variable");
  if (const auto v = validate(addendum); !v.empty()) {
    std::ostringstream os;
    os << where << "addendum is not a parse graph (" << v.front() << ")";
    throw PreconditionError(os.str());
  }
  const auto lexemes = addendum.nodes_of_kind(NodeKind::lexeme);
  if (lexemes.size() != 1)
    throw PreconditionError(where + "addendum must contain exactly one lexeme, found " +
                            std::to_string(lexemes.size()));
  if (interpolation_path(addendum, target).empty())
    throw PreconditionError(where + "target is not reachable from the addendum root");

  InterpolationRule r;
  r.name = std::move(name);
  r.pattern = std::move(pattern);
  r.kind = classify_shift(addendum, target);
  r.addendum = std::move(addendum);
  r.target = target;
  r.lexeme = lexemes.front();
  return r;
}

Gig::Gig(std::string axiom) : axiom_(std::move(axiom)) { declare(Label::variable(axiom_)); }

void Gig::declare(const Label& label) {
  if (label.is_variable()) {
    if (symbols_.count(label.name)) throw PreconditionError("'" + label.name + "' used as both variable and symbol");
    variables_.insert(label.name);
  } else {
    if (variables_.count(label.name)) throw PreconditionError("'" + label.name + "' used as both variable and symbol");
    symbols_.insert(label.name);
  }
}

void Gig::add_rule(InterpolationRule rule) {
  declare(rule.pattern);
  for (NodeId n : rule.addendum.nodes())
    if (!rule.addendum.is_epsilon(n)) declare(rule.addendum.label(n));
  rules_.push_back(std::move(rule));
}

}  // namespace gig
