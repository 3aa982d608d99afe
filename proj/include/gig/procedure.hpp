#pragma once

#include <compare>
#include <string>
#include <vector>

#include "gig/cfg.hpp"
#include "gig/grammar.hpp"

namespace gig {

struct DerivationStep {
  std::size_t position = 0;    // occurrence rewritten in the current form
  std::size_t production = 0;  // index into Cfg::productions
  friend auto operator<=>(const DerivationStep&, const DerivationStep&) = default;
};

/// A derivation from one variable; forms[k + 1] is forms[k] rewritten by steps[k].
struct Derivation {
  std::string name;
  std::vector<std::vector<Label>> forms;
  std::vector<DerivationStep> steps;

  const std::string& start() const { return forms.front().front().name; }
  const std::vector<Label>& yield() const { return forms.back(); }
  bool is_leftmost() const;
};

/// Replays `steps` from `start`. Throws PreconditionError on an invalid step.
Derivation make_derivation(const Cfg& g, const std::string& start, const std::vector<DerivationStep>& steps,
                           std::string name = {});

/// "S => A1 B1 => a B1", with #eps for the empty form.
std::string derivation_text(const Derivation& d);

/// The parse graph of a derivation: variables rewritten to ε get an ε-leaf,
/// unrewritten variables stay dangling.
ParseGraph derivation_graph(const Cfg& g, const Derivation& d);

// The five steps. Derivations are named D1, D2, ... in creation order; a
// Step-2 replacement keeps the name with a prime appended.

/// Step 1: every leftmost derivation from each variable, halted at ε, at a
/// leading terminal, or at a leading variable already rewritten.
std::vector<Derivation> unwind_derivations(const Cfg& g);

/// Step 2: each A =>* A B α becomes A =>* A B α =>* A b β α, once per
/// derivation B =>* b β. Throws PreconditionError for a self-embedding yield
/// not of the form A B α, or a B with no terminal-initial derivation.
std::vector<Derivation> embed_left_recursion(const std::vector<Derivation>& delta, const Cfg& g);

/// Step 3: plugs ε-derivations into later positions of other yields, to a
/// fixpoint. Position 0 is also plugged for A =>* A b β, so that the
/// left-recursive tail can start a string.
std::vector<Derivation> plug_epsilon(const std::vector<Derivation>& delta, const Cfg& g);

struct EmittedRule {
  std::string rule;
  ShiftKind kind = ShiftKind::epsilon_shift;
  std::vector<std::string> sources;  // derivations mapped to this addendum
};

/// Steps 4-5: ε-shifts from terminal-initial yields, down-shifts from
/// A =>* A b α. Identical addenda collapse into the first rule.
Gig build_gig_rules(const std::vector<Derivation>& delta, const Cfg& g, std::vector<EmittedRule>* emitted = nullptr);

struct ProcedureLog {
  std::vector<Derivation> step1;
  std::vector<Derivation> step2;
  std::vector<Derivation> step3;
  std::vector<EmittedRule> rules;
  std::vector<std::string> rule_texts;
};

/// Sections [step1] [step2] [step3] [rules], one line per entry.
std::string to_text(const ProcedureLog& log);

struct ProcedureResult {
  Gig gig;
  ProcedureLog log;
};

/// Steps 1-5. The grammar must be unambiguous; that is not checked. Throws
/// PreconditionError unless the grammar is 2-tiered and ε ∉ L(g).
ProcedureResult two_tiered_to_gig(const Cfg& g);

}  // namespace gig
