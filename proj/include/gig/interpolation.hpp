#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gig/error.hpp"
#include "gig/parse_graph.hpp"

namespace gig {

enum class ShiftKind { down_shift, right_shift, epsilon_shift };

std::string_view to_string(ShiftKind kind);

/// The unique E ∪ F path from the addendum root s to `target`, s first.
/// Empty when `target` is not reachable from s.
std::vector<NodeId> interpolation_path(const ParseGraph& addendum, NodeId target);

/// ε-shift when target is the root, otherwise the kind of the first path edge.
/// Throws PreconditionError when no path exists.
ShiftKind classify_shift(const ParseGraph& addendum, NodeId target);

/// Plugging `addendum` into `context` at `anchor`, with `target` the end of
/// the interpolation path. Both graphs are borrowed.
struct InterpolationRequest {
  const ParseGraph& context;
  const ParseGraph& addendum;
  NodeId anchor;
  NodeId target;
};

/// One flag per definition constraint. `disjunction` always holds since the
/// addendum is re-identified with fresh ids. `anchor_open` rejects anchors
/// whose subtree already derived the empty string, and down-shift anchors with
/// no subtree to push down.
struct ConstraintReport {
  bool disjunction = false;
  bool lexicalization = false;
  bool context = false;
  bool frontier = false;
  bool path_existence = false;
  bool result_well_formedness = false;
  bool anchor_open = false;
  std::vector<Violation> result_violations;

  bool all_pass() const noexcept {
    return disjunction && lexicalization && context && frontier && path_existence &&
           result_well_formedness && anchor_open;
  }
  std::vector<std::string> failures() const;
};

std::ostream& operator<<(std::ostream& os, const ConstraintReport& r);

class InterpolationError : public Error {
 public:
  explicit InterpolationError(ConstraintReport report);
  const ConstraintReport& report() const noexcept { return report_; }

 private:
  ConstraintReport report_;
};

struct InterpolationOutcome {
  ConstraintReport report;
  /// The interpolated graph, present only when every constraint passes.
  std::optional<ParseGraph> result;
  /// Ids that the addendum root and lexeme received in the result.
  NodeId source{};
  std::optional<NodeId> lexeme;
};

/// Evaluates every constraint and builds the result when the path exists.
/// Throws PreconditionError when the anchor is not a nonlexical node of the
/// context or the target is not a node of the addendum.
InterpolationOutcome evaluate_interpolation(const InterpolationRequest& req);

ConstraintReport check_constraints(const InterpolationRequest& req);

/// The interpolated graph. Throws InterpolationError carrying the report if a
/// constraint fails.
ParseGraph interpolate(const InterpolationRequest& req);

/// The result built by edge rewiring alone, with no constraint checks; the
/// addendum is re-identified starting at `context.next_id()`.
ParseGraph splice(const InterpolationRequest& req);

/// Nodes labeled `pattern` that may serve as anchor. With no lexeme in the
/// context this is the root; otherwise the ancestors of the last lexeme
/// (from the lexeme upward) followed by its immediate successors in reading order.
/// Immediate successors that derived ε are looked through, since they occupy
/// no frontier position. Throws PreconditionError if `pattern` is not a variable.
std::vector<NodeId> candidate_anchors(const ParseGraph& context, const Label& pattern);

}  // namespace gig
