#include "gig/earley.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "gig/tree_text.hpp"

namespace gig {

std::string to_tree_text(const CfTree& tree) {
  if (tree.epsilon) return "#eps";
  if (tree.label.is_symbol()) return quote_symbol(tree.label.name);
  std::string out = tree.label.name;
  if (tree.children.empty()) return out;
  out += '(';
  for (std::size_t i = 0; i < tree.children.size(); ++i) {
    if (i) out += ' ';
    out += to_tree_text(tree.children[i]);
  }
  out += ')';
  return out;
}

namespace {

struct Item {
  std::size_t prod;
  std::size_t dot;
  std::size_t origin;
  friend auto operator<=>(const Item&, const Item&) = default;
};

// Drops productions that mention a variable deriving no terminal string.
std::vector<Production> productive_productions(const Cfg& g) {
  std::set<std::string> productive;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& p : g.productions()) {
      if (productive.count(p.lhs)) continue;
      if (std::all_of(p.rhs.begin(), p.rhs.end(),
                      [&](const Label& l) { return l.is_symbol() || productive.count(l.name); })) {
        productive.insert(p.lhs);
        changed = true;
      }
    }
  }
  std::vector<Production> out;
  for (const auto& p : g.productions())
    if (std::all_of(p.rhs.begin(), p.rhs.end(),
                    [&](const Label& l) { return l.is_symbol() || productive.count(l.name); }))
      out.push_back(p);
  return out;
}

}  // namespace

struct EarleyParser::State {
  std::vector<Production> prods;  // the last one is the augmented start
  std::map<std::string, std::vector<std::size_t>> by_lhs;
  std::set<std::string> nullable;
  SymbolString input;
  std::vector<std::vector<Item>> sets;

  void close(std::size_t j) {
    std::set<Item> seen(sets[j].begin(), sets[j].end());
    auto add = [&](Item it) {
      if (seen.insert(it).second) sets[j].push_back(it);
    };
    for (std::size_t k = 0; k < sets[j].size(); ++k) {
      const Item it = sets[j][k];
      const Production& p = prods[it.prod];
      if (it.dot < p.rhs.size()) {
        const Label& next = p.rhs[it.dot];
        if (!next.is_variable()) continue;
        if (auto f = by_lhs.find(next.name); f != by_lhs.end())
          for (std::size_t q : f->second) add({q, 0, j});
        if (nullable.count(next.name)) add({it.prod, it.dot + 1, it.origin});
      } else {
        // Index loop: sets[j] may grow while completing into itself.
        for (std::size_t m = 0; m < sets[it.origin].size(); ++m) {
          const Item w = sets[it.origin][m];
          const Production& wp = prods[w.prod];
          if (w.dot < wp.rhs.size() && wp.rhs[w.dot] == Label::variable(p.lhs)) add({w.prod, w.dot + 1, w.origin});
        }
      }
    }
  }
};

EarleyParser::EarleyParser(const Cfg& g) : state_(std::make_unique<State>()) {
  State& s = *state_;
  s.prods = productive_productions(g);
  for (std::size_t i = 0; i < s.prods.size(); ++i) s.by_lhs[s.prods[i].lhs].push_back(i);
  s.nullable = nullable_variables(g);
  s.prods.push_back({"", {Label::variable(g.start())}});
  s.sets.push_back({Item{s.prods.size() - 1, 0, 0}});
  s.close(0);
}

EarleyParser::~EarleyParser() = default;
EarleyParser::EarleyParser(EarleyParser&&) noexcept = default;
EarleyParser& EarleyParser::operator=(EarleyParser&&) noexcept = default;
EarleyParser::EarleyParser(const EarleyParser& other) : state_(std::make_unique<State>(*other.state_)) {}
EarleyParser& EarleyParser::operator=(const EarleyParser& other) {
  if (this != &other) state_ = std::make_unique<State>(*other.state_);
  return *this;
}

void EarleyParser::feed(const std::string& symbol) {
  State& s = *state_;
  const std::size_t j = s.sets.size() - 1;
  std::vector<Item> next;
  for (const Item& it : s.sets[j]) {
    const Production& p = s.prods[it.prod];
    if (it.dot < p.rhs.size() && p.rhs[it.dot] == Label::symbol(symbol)) next.push_back({it.prod, it.dot + 1, it.origin});
  }
  s.input.push_back(symbol);
  s.sets.push_back(std::move(next));
  s.close(j + 1);
}

bool EarleyParser::viable() const { return !state_->sets.back().empty(); }

bool EarleyParser::accepted() const {
  const State& s = *state_;
  const Item done{s.prods.size() - 1, 1, 0};
  return std::find(s.sets.back().begin(), s.sets.back().end(), done) != s.sets.back().end();
}

std::size_t EarleyParser::position() const { return state_->input.size(); }

std::vector<CfTree> EarleyParser::trees(std::size_t cap) const {
  const State& s = *state_;
  std::vector<CfTree> out;
  if (!accepted() || cap == 0) return out;

  // (lhs, from, to) -> productions completed over that span
  std::map<std::tuple<std::string, std::size_t, std::size_t>, std::vector<std::size_t>> done;
  for (std::size_t j = 0; j < s.sets.size(); ++j)
    for (const Item& it : s.sets[j])
      if (it.prod + 1 < s.prods.size() && it.dot == s.prods[it.prod].rhs.size())
        done[{s.prods[it.prod].lhs, it.origin, j}].push_back(it.prod);

  std::set<std::tuple<std::string, std::size_t, std::size_t>> active;

  // Trees for `var` over [from, to).
  auto build = [&](auto& self, const std::string& var, std::size_t from, std::size_t to) -> std::vector<CfTree> {
    std::vector<CfTree> result;
    const auto key = std::make_tuple(var, from, to);
    const auto f = done.find(key);
    if (f == done.end() || active.count(key)) return result;
    active.insert(key);
    for (std::size_t prod : f->second) {
      const auto& rhs = s.prods[prod].rhs;
      // Children sequences for rhs[k..] over [pos, to).
      auto seq = [&](auto& seq_self, std::size_t k, std::size_t pos) -> std::vector<std::vector<CfTree>> {
        std::vector<std::vector<CfTree>> outs;
        if (k == rhs.size()) {
          if (pos == to) outs.emplace_back();
          return outs;
        }
        const Label& sym = rhs[k];
        if (sym.is_symbol()) {
          if (pos < to && s.input[pos] == sym.name)
            for (auto& rest : seq_self(seq_self, k + 1, pos + 1)) {
              rest.insert(rest.begin(), CfTree{sym, false, {}});
              outs.push_back(std::move(rest));
            }
          return outs;
        }
        for (std::size_t mid = pos; mid <= to && outs.size() < cap; ++mid) {
          if (!done.count({sym.name, pos, mid})) continue;
          auto rests = seq_self(seq_self, k + 1, mid);
          if (rests.empty()) continue;
          for (const auto& sub : self(self, sym.name, pos, mid))
            for (const auto& rest : rests) {
              std::vector<CfTree> kids{sub};
              kids.insert(kids.end(), rest.begin(), rest.end());
              outs.push_back(std::move(kids));
              if (outs.size() >= cap) return outs;
            }
        }
        return outs;
      };
      for (auto& kids : seq(seq, 0, from)) {
        CfTree t{Label::variable(var), false, std::move(kids)};
        if (rhs.empty()) t.children.push_back(CfTree{Label::variable(var), true, {}});
        result.push_back(std::move(t));
        if (result.size() >= cap) break;
      }
      if (result.size() >= cap) break;
    }
    active.erase(key);
    return result;
  };
  return build(build, s.prods.back().rhs.front().name, 0, s.input.size());
}

bool earley_recognize(const Cfg& g, const SymbolString& input) {
  EarleyParser p(g);
  for (const auto& sym : input) {
    if (!g.is_terminal(sym)) return false;
    p.feed(sym);
    if (!p.viable()) return false;
  }
  return p.accepted();
}

std::vector<CfTree> earley_parse_trees(const Cfg& g, const SymbolString& input, std::size_t cap) {
  EarleyParser p(g);
  for (const auto& sym : input) {
    p.feed(sym);
    if (!p.viable()) return {};
  }
  return p.trees(cap);
}

std::set<SymbolString> earley_enumerate(const Cfg& g, std::size_t max_len) {
  std::set<SymbolString> out;
  struct Frame {
    EarleyParser parser;
    SymbolString prefix;
  };
  std::vector<Frame> stack;
  stack.push_back({EarleyParser(g), {}});
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (f.parser.accepted()) out.insert(f.prefix);
    if (f.prefix.size() == max_len) continue;
    for (const auto& t : g.terminals()) {
      EarleyParser next = f.parser;
      next.feed(t);
      if (!next.viable()) continue;
      SymbolString prefix = f.prefix;
      prefix.push_back(t);
      stack.push_back({std::move(next), std::move(prefix)});
    }
  }
  return out;
}

}  // namespace gig
