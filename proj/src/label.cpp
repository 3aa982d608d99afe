#include "gig/label.hpp"

#include <algorithm>
#include <cctype>

namespace gig {

std::ostream& operator<<(std::ostream& os, const Label& label) {
  if (label.is_symbol()) return os << '"' << label.name << '"';
  return os << label.name;
}

SymbolString split_symbols(std::string_view text) {
  SymbolString out;
  const bool spaced = std::any_of(text.begin(), text.end(),
                                  [](unsigned char c) { return std::isspace(c) != 0; });
  if (!spaced) {
    for (char c : text) out.emplace_back(1, c);
    return out;
  }
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) out.emplace_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string join_symbols(const SymbolString& symbols) {
  const bool all_single = std::all_of(symbols.begin(), symbols.end(),
                                      [](const std::string& s) { return s.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (!all_single && i > 0) out += ' ';
    out += symbols[i];
  }
  return out;
}

bool is_identifier(std::string_view text) {
  if (text.empty()) return false;
  const auto head = static_cast<unsigned char>(text.front());
  if (!std::isalpha(head) && head != '_') return false;
  return std::all_of(text.begin(), text.end(), [](unsigned char c) {
    return std::isalnum(c) != 0 || c == '_' || c == '\'';
  });
}

}  // namespace gig
