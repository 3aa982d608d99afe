#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "gig/grammar.hpp"
#include "gig/label.hpp"

namespace gig {

struct Production {
  std::string lhs;
  std::vector<Label> rhs;  // empty for an ε-production
  friend bool operator==(const Production&, const Production&) = default;
};

/// A context-free grammar. Variables keep declaration order
/// (first appearance as a left-hand side, then first use), which fixes the
/// order of every derived listing.
class Cfg {
 public:
  explicit Cfg(std::string start);

  /// Throws PreconditionError when a label is used both as variable and terminal.
  void add_production(std::string lhs, std::vector<Label> rhs);

  const std::string& start() const noexcept { return start_; }
  const std::vector<std::string>& variables() const noexcept { return variables_; }
  const std::set<std::string>& terminals() const noexcept { return terminals_; }
  const std::vector<Production>& productions() const noexcept { return productions_; }

  bool is_variable(const std::string& name) const { return variable_set_.count(name) > 0; }
  bool is_terminal(const std::string& name) const { return terminals_.count(name) > 0; }

  /// Indices into productions() with the given left-hand side.
  std::vector<std::size_t> productions_of(const std::string& lhs) const;

  /// Variables in order of their first production.
  std::vector<std::string> lhs_order() const;

  /// Variables that occur but have no production.
  std::vector<std::string> undefined_variables() const;

 private:
  void declare_variable(const std::string& name);

  std::string start_;
  std::vector<std::string> variables_;
  std::set<std::string> variable_set_;
  std::set<std::string> terminals_;
  std::vector<Production> productions_;
};

// CFG text format:
//
//   cfg { start S;
//         S -> A1 B1 | C1 E;   A1 -> A2 | #eps;   A2 -> "a"; }
Cfg parse_cfg(std::string_view text);
std::string to_cfg_text(const Cfg& g);
std::string production_text(const Production& p);

std::set<std::string> nullable_variables(const Cfg& g);
bool derives_empty(const Cfg& g);

/// No production mixes a terminal with other symbols.
bool is_two_tiered(const Cfg& g);

/// Replaces every terminal in a mixed right-hand side with a preterminal
/// X_a and adds X_a -> a.
Cfg to_two_tiered(const Cfg& g);

/// Every production is A -> a B1 ... Bn.
bool is_gnf(const Cfg& g);

/// Standard ε-elimination. Throws PreconditionError when ε ∈ L(g).
Cfg eliminate_epsilon(const Cfg& g);

/// End-of-input marker used in FOLLOW sets.
inline constexpr std::string_view end_marker = "$";

std::map<std::string, std::set<std::string>> first_sets(const Cfg& g);
std::map<std::string, std::set<std::string>> follow_sets(const Cfg& g);

/// Human-readable description of the first LL(1) table conflict, if any.
std::optional<std::string> ll1_conflict(const Cfg& g);
bool is_ll1(const Cfg& g);

/// Inlines leading variables until the grammar is in GNF, after
/// ε-elimination. Non-leading terminals become preterminals. Throws
/// PreconditionError for a non-LL(1) input, ε ∈ L(g), left recursion, or a
/// result that is no longer LL(1).
Cfg ll1_to_gnf(const Cfg& g);

/// One ε-shift per production A -> a B1..Bn, addendum ^A(X("a") B1 .. Bn).
/// X is "X" unless that name is taken. Throws PreconditionError unless GNF.
Gig gnf_to_gig(const Cfg& g);

/// Name for the preterminal of `terminal` that does not clash with `taken`.
std::string preterminal_name(const std::string& terminal, std::size_t index, const std::set<std::string>& taken);

}  // namespace gig
