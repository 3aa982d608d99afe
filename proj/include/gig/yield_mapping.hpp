#pragma once

#include <string_view>

#include "gig/grammar.hpp"

namespace gig {

enum class YieldMapping {
  vertical_eps,             // xAα => xbβα: a dangling node is expanded
  horizontal_eps,           // xα => xaβα: the anchor dominates the last lexeme
  down_terminal_anchor,     // xyα => xyaβα: the anchor's yield stays left of the lexeme
  down_nonterminal_anchor,  // the anchor's yield lands right of the lexeme
  right_dangling,           // xAα => xaβα with A dangling
  right_nondangling,        // the anchor has descendants
};

struct YieldMappingInfo {
  YieldMapping mapping;
  /// Whether a leftmost CF derivation produces the same yield change.
  bool leftmost_emulable;
};

std::string_view to_string(YieldMapping mapping);

/// Classifies from the rule alone. When the addendum root has its own first
/// child the anchor must be dangling (its E edge has nowhere to go); otherwise
/// the anchor's subtree moves under the root.
YieldMappingInfo classify_yield_mapping(const InterpolationRule& rule);

}  // namespace gig
