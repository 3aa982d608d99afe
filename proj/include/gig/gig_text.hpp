#pragma once

#include <string>
#include <string_view>

#include "gig/grammar.hpp"

namespace gig {

// GIG grammar file:
//
//   gig { axiom S;
//         rule r1: S -> ^S( A("a") S( B S(#eps) C ) D );
//         rule r3: B -> ^B("b"); }
//
// Each rule's addendum is tree text with exactly one `^` marking the target.

/// Throws SyntaxError (with position) or PreconditionError for an invalid rule.
Gig parse_gig(std::string_view text);

std::string to_gig_text(const Gig& g);

/// `rule name: A -> addendum` without the trailing semicolon.
std::string rule_text(const InterpolationRule& rule);

}  // namespace gig
