#include "gig/yield_mapping.hpp"

#include <algorithm>

#include "gig/graph_order.hpp"

namespace gig {

std::string_view to_string(YieldMapping mapping) {
  switch (mapping) {
    case YieldMapping::vertical_eps: return "vertical-epsilon-shift";
    case YieldMapping::horizontal_eps: return "horizontal-epsilon-shift";
    case YieldMapping::down_terminal_anchor: return "down-shift-terminal-anchor";
    case YieldMapping::down_nonterminal_anchor: return "down-shift-nonterminal-anchor";
    case YieldMapping::right_dangling: return "right-shift-dangling";
    case YieldMapping::right_nondangling: return "right-shift-nondangling";
  }
  return "?";
}

YieldMappingInfo classify_yield_mapping(const InterpolationRule& rule) {
  const ParseGraph& a = rule.addendum;
  const bool root_has_child = a.first_child(a.root()).has_value();
  switch (rule.kind) {
    case ShiftKind::epsilon_shift:
      return root_has_child ? YieldMappingInfo{YieldMapping::vertical_eps, true}
                            : YieldMappingInfo{YieldMapping::horizontal_eps, false};
    case ShiftKind::right_shift:
      return root_has_child ? YieldMappingInfo{YieldMapping::right_dangling, true}
                            : YieldMappingInfo{YieldMapping::right_nondangling, false};
    case ShiftKind::down_shift: {
      const auto seq = terminal_sequence(a);
      const auto t = std::find(seq.begin(), seq.end(), rule.target);
      const auto lex = std::find(seq.begin(), seq.end(), rule.lexeme);
      return t < lex ? YieldMappingInfo{YieldMapping::down_terminal_anchor, false}
                     : YieldMappingInfo{YieldMapping::down_nonterminal_anchor, false};
    }
  }
  return {YieldMapping::vertical_eps, true};
}

}  // namespace gig
