#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "gig/cfg.hpp"

namespace gig {

/// A CF derivation tree. A node with `epsilon` set stands for the empty
/// right-hand side; a symbol-labeled node is a leaf.
struct CfTree {
  Label label;
  bool epsilon = false;
  std::vector<CfTree> children;
};

/// Same canonical text as to_tree_text, so CF trees and parse graphs compare
/// as strings.
std::string to_tree_text(const CfTree& tree);

/// Incremental Earley recognizer with the nullable-prediction fix. Feed one
/// symbol at a time; `viable` turns false once no sentence has the fed prefix.
class EarleyParser {
 public:
  explicit EarleyParser(const Cfg& g);
  ~EarleyParser();
  EarleyParser(const EarleyParser&);
  EarleyParser& operator=(const EarleyParser&);
  EarleyParser(EarleyParser&&) noexcept;
  EarleyParser& operator=(EarleyParser&&) noexcept;

  void feed(const std::string& symbol);
  bool viable() const;
  bool accepted() const;
  std::size_t position() const;

  /// Parse trees for everything fed so far, at most `cap` of them. Cyclic
  /// grammars do not loop: a variable is not re-entered on the same span.
  std::vector<CfTree> trees(std::size_t cap) const;

 private:
  struct State;
  std::unique_ptr<State> state_;
};

bool earley_recognize(const Cfg& g, const SymbolString& input);
std::vector<CfTree> earley_parse_trees(const Cfg& g, const SymbolString& input, std::size_t cap);

/// Every sentence of length at most max_len, the empty one included.
/// Prefixes are extended symbol by symbol and dropped as soon as the parser
/// says they are not viable.
std::set<SymbolString> earley_enumerate(const Cfg& g, std::size_t max_len);

}  // namespace gig
