#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace gig {

enum class LabelKind { variable, symbol };

/// A node label: either a variable (nonterminal) or a symbol (terminal).
struct Label {
  LabelKind kind = LabelKind::variable;
  std::string name;

  static Label variable(std::string name) { return {LabelKind::variable, std::move(name)}; }
  static Label symbol(std::string name) { return {LabelKind::symbol, std::move(name)}; }

  bool is_variable() const noexcept { return kind == LabelKind::variable; }
  bool is_symbol() const noexcept { return kind == LabelKind::symbol; }

  friend bool operator==(const Label&, const Label&) = default;
  friend auto operator<=>(const Label&, const Label&) = default;
};

std::ostream& operator<<(std::ostream& os, const Label& label);

/// A string over the terminal alphabet. Symbols may be longer than one character.
using SymbolString = std::vector<std::string>;

/// Splits command-line style input into symbols: on whitespace when the text
/// contains any, otherwise one symbol per character.
SymbolString split_symbols(std::string_view text);

/// Inverse of split_symbols for display; single-character symbols are
/// concatenated, anything longer forces space separation.
std::string join_symbols(const SymbolString& symbols);

bool is_identifier(std::string_view text);

}  // namespace gig
