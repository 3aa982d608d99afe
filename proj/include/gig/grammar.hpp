#pragma once

#include <set>
#include <string>
#include <vector>

#include "gig/interpolation.hpp"
#include "gig/label.hpp"
#include "gig/parse_graph.hpp"

namespace gig {

/// Pattern, addendum and target, with the shift kind derived from the addendum.
struct InterpolationRule {
  std::string name;
  Label pattern;
  ParseGraph addendum;
  NodeId target{};
  ShiftKind kind = ShiftKind::epsilon_shift;
  NodeId lexeme{};

  /// Throws PreconditionError unless the addendum validates, holds exactly
  /// one lexeme and reaches `target` from its root.
  static InterpolationRule make(std::string name, Label pattern, ParseGraph addendum, NodeId target);

  const std::string& symbol() const { return addendum.label(lexeme).name; }
};

/// A Graph Interpolation Grammar: an axiom and a list of rules. Variables and
/// symbols are declared by use.
class Gig {
 public:
  explicit Gig(std::string axiom);

  void add_rule(InterpolationRule rule);

  const std::string& axiom() const noexcept { return axiom_; }
  const std::vector<InterpolationRule>& rules() const noexcept { return rules_; }
  const std::set<std::string>& variables() const noexcept { return variables_; }
  const std::set<std::string>& symbols() const noexcept { return symbols_; }

 private:
  void declare(const Label& label);

  std::string axiom_;
  std::vector<InterpolationRule> rules_;
  std::set<std::string> variables_;
  std::set<std::string> symbols_;
};

}  // namespace gig
