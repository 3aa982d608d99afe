#include "gig/cfg.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "gig/tree_text.hpp"
#include "lexer.hpp"

namespace gig {

Cfg::Cfg(std::string start) : start_(std::move(start)) { declare_variable(start_); }

void Cfg::declare_variable(const std::string& name) {
  if (terminals_.count(name)) throw PreconditionError("'" + name + "' used as both variable and terminal");
  if (variable_set_.insert(name).second) variables_.push_back(name);
}

void Cfg::add_production(std::string lhs, std::vector<Label> rhs) {
  declare_variable(lhs);
  for (const Label& l : rhs) {
    if (l.is_variable()) {
      declare_variable(l.name);
    } else {
      if (variable_set_.count(l.name)) throw PreconditionError("'" + l.name + "' used as both variable and terminal");
      terminals_.insert(l.name);
    }
  }
  productions_.push_back({std::move(lhs), std::move(rhs)});
}

std::vector<std::size_t> Cfg::productions_of(const std::string& lhs) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < productions_.size(); ++i)
    if (productions_[i].lhs == lhs) out.push_back(i);
  return out;
}

std::vector<std::string> Cfg::lhs_order() const {
  std::vector<std::string> out;
  for (const auto& p : productions_)
    if (std::find(out.begin(), out.end(), p.lhs) == out.end()) out.push_back(p.lhs);
  return out;
}

std::vector<std::string> Cfg::undefined_variables() const {
  std::vector<std::string> out;
  for (const auto& v : variables_)
    if (productions_of(v).empty()) out.push_back(v);
  return out;
}

// --- text format ------------------------------------------------------------

using detail::Lexer;
using detail::Tok;
using detail::Token;

Cfg parse_cfg(std::string_view text) {
  Lexer lex(text);
  const auto kw = lex.expect(Tok::ident, "at the start of the grammar");
  if (kw.text != "cfg") throw SyntaxError("expected 'cfg'", kw.line, kw.column);
  lex.expect(Tok::lbrace, "after 'cfg'");
  const auto start_kw = lex.expect(Tok::ident, "to open the start declaration");
  if (start_kw.text != "start") throw SyntaxError("expected 'start'", start_kw.line, start_kw.column);
  Cfg g(lex.expect(Tok::ident, "naming the start variable").text);
  lex.expect(Tok::semi, "after the start variable");

  while (lex.peek().kind != Tok::rbrace) {
    const auto lhs = lex.expect(Tok::ident, "as left-hand side");
    lex.expect(Tok::arrow, "after the left-hand side");
    do {
      std::vector<Label> rhs;
      if (lex.peek().kind == Tok::eps) {
        lex.next();
      } else {
        for (;;) {
          const Token& t = lex.peek();
          if (t.kind == Tok::ident)
            rhs.push_back(Label::variable(lex.next().text));
          else if (t.kind == Tok::string)
            rhs.push_back(Label::symbol(lex.next().text));
          else
            break;
        }
        if (rhs.empty()) {
          const Token& t = lex.peek();
          throw SyntaxError(std::string("expected a right-hand side, got ") + detail::describe(t.kind), t.line, t.column);
        }
      }
      try {
        g.add_production(lhs.text, std::move(rhs));
      } catch (const PreconditionError& e) {
        throw SyntaxError(e.what(), lhs.line, lhs.column);
      }
    } while (lex.accept(Tok::pipe));
    lex.expect(Tok::semi, "after the productions");
  }
  lex.expect(Tok::rbrace, "to close the grammar");
  lex.expect(Tok::end, "after the grammar");
  if (const auto undefined = g.undefined_variables(); !undefined.empty())
    throw SyntaxError("variable '" + undefined.front() + "' has no production", kw.line, kw.column);
  return g;
}

namespace {

std::string rhs_text(const std::vector<Label>& rhs) {
  if (rhs.empty()) return "#eps";
  std::string out;
  for (const Label& l : rhs) {
    if (!out.empty()) out += ' ';
    out += l.is_variable() ? l.name : quote_symbol(l.name);
  }
  return out;
}

}  // namespace

std::string production_text(const Production& p) { return p.lhs + " -> " + rhs_text(p.rhs); }

std::string to_cfg_text(const Cfg& g) {
  std::ostringstream os;
  os << "cfg { start " << g.start() << ";\n";
  for (const auto& v : g.lhs_order()) {
    const auto ps = g.productions_of(v);
    os << "  " << v << " ->";
    for (std::size_t i = 0; i < ps.size(); ++i) os << (i ? " | " : " ") << rhs_text(g.productions()[ps[i]].rhs);
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

// --- analyses -----------------------------------------------------------------

std::set<std::string> nullable_variables(const Cfg& g) {
  std::set<std::string> out;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& p : g.productions()) {
      if (out.count(p.lhs)) continue;
      if (std::all_of(p.rhs.begin(), p.rhs.end(),
                      [&](const Label& l) { return l.is_variable() && out.count(l.name); })) {
        out.insert(p.lhs);
        changed = true;
      }
    }
  }
  return out;
}

bool derives_empty(const Cfg& g) { return nullable_variables(g).count(g.start()) > 0; }

bool is_two_tiered(const Cfg& g) {
  for (const auto& p : g.productions())
    if (p.rhs.size() > 1 && std::any_of(p.rhs.begin(), p.rhs.end(), [](const Label& l) { return l.is_symbol(); }))
      return false;
  return true;
}

bool is_gnf(const Cfg& g) {
  for (const auto& p : g.productions()) {
    if (p.rhs.empty() || !p.rhs.front().is_symbol()) return false;
    if (std::any_of(p.rhs.begin() + 1, p.rhs.end(), [](const Label& l) { return l.is_symbol(); })) return false;
  }
  return true;
}

std::string preterminal_name(const std::string& terminal, std::size_t index, const std::set<std::string>& taken) {
  const bool plain = !terminal.empty() && std::all_of(terminal.begin(), terminal.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
  std::string name = plain ? "X_" + terminal : "X_" + std::to_string(index);
  while (taken.count(name)) name += '_';
  return name;
}

namespace {

std::set<std::string> all_names(const Cfg& g) {
  std::set<std::string> out(g.variables().begin(), g.variables().end());
  out.insert(g.terminals().begin(), g.terminals().end());
  return out;
}

// Replaces terminals in mixed right-hand sides (or, with `keep_leading`, in
// every non-leading position) by preterminals.
Cfg with_preterminals(const Cfg& g, bool keep_leading) {
  std::set<std::string> taken = all_names(g);
  std::map<std::string, std::string> pre;
  std::size_t index = 0;
  for (const auto& t : g.terminals()) {
    pre[t] = preterminal_name(t, index++, taken);
    taken.insert(pre[t]);
  }
  std::vector<std::string> used;
  Cfg out(g.start());
  for (const auto& p : g.productions()) {
    std::vector<Label> rhs = p.rhs;
    const bool mixed = rhs.size() > 1;
    for (std::size_t i = 0; i < rhs.size(); ++i) {
      if (!rhs[i].is_symbol()) continue;
      if (keep_leading ? i == 0 : !mixed) continue;
      const std::string& x = pre[rhs[i].name];
      if (std::find(used.begin(), used.end(), rhs[i].name) == used.end()) used.push_back(rhs[i].name);
      rhs[i] = Label::variable(x);
    }
    out.add_production(p.lhs, std::move(rhs));
  }
  for (const auto& t : used) out.add_production(pre[t], {Label::symbol(t)});
  return out;
}

Cfg dedupe_and_prune(const Cfg& g) {
  std::set<std::string> reachable{g.start()};
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& p : g.productions()) {
      if (!reachable.count(p.lhs)) continue;
      for (const Label& l : p.rhs)
        if (l.is_variable() && reachable.insert(l.name).second) changed = true;
    }
  }
  Cfg out(g.start());
  std::vector<Production> seen;
  for (const auto& v : g.lhs_order()) {
    if (!reachable.count(v)) continue;
    for (std::size_t i : g.productions_of(v)) {
      const Production& p = g.productions()[i];
      if (std::find(seen.begin(), seen.end(), p) != seen.end()) continue;
      seen.push_back(p);
      out.add_production(p.lhs, p.rhs);
    }
  }
  return out;
}

}  // namespace

Cfg to_two_tiered(const Cfg& g) { return with_preterminals(g, false); }

Cfg eliminate_epsilon(const Cfg& g) {
  if (derives_empty(g)) throw PreconditionError("the grammar derives the empty string");
  const auto nullable = nullable_variables(g);
  Cfg out(g.start());
  std::vector<Production> seen;
  for (const auto& v : g.lhs_order()) {
    for (std::size_t i : g.productions_of(v)) {
      const Production& p = g.productions()[i];
      std::vector<std::size_t> optional;
      for (std::size_t k = 0; k < p.rhs.size(); ++k)
        if (p.rhs[k].is_variable() && nullable.count(p.rhs[k].name)) optional.push_back(k);
      // Enumerate which optional positions are kept; all bits set keeps everything.
      const std::size_t variants = std::size_t{1} << optional.size();
      for (std::size_t mask = variants; mask-- > 0;) {
        std::vector<Label> rhs;
        std::size_t next = 0;
        for (std::size_t k = 0; k < p.rhs.size(); ++k) {
          if (next < optional.size() && optional[next] == k) {
            const bool keep = mask & (std::size_t{1} << next);
            ++next;
            if (!keep) continue;
          }
          rhs.push_back(p.rhs[k]);
        }
        if (rhs.empty()) continue;
        if (rhs.size() == 1 && rhs.front() == Label::variable(p.lhs)) continue;
        Production np{p.lhs, std::move(rhs)};
        if (std::find(seen.begin(), seen.end(), np) != seen.end()) continue;
        seen.push_back(np);
        out.add_production(np.lhs, np.rhs);
      }
    }
  }
  // Variables that only derived ε are gone; keep the result closed.
  if (const auto undefined = out.undefined_variables(); !undefined.empty()) {
    Cfg closed(g.start());
    for (const auto& p : out.productions()) {
      if (std::any_of(p.rhs.begin(), p.rhs.end(), [&](const Label& l) {
            return l.is_variable() && std::find(undefined.begin(), undefined.end(), l.name) != undefined.end();
          }))
        continue;
      closed.add_production(p.lhs, p.rhs);
    }
    return closed;
  }
  return out;
}

namespace {

using SetMap = std::map<std::string, std::set<std::string>>;

// FIRST of a label string; the bool reports whether the whole string is nullable.
std::pair<std::set<std::string>, bool> first_of(const std::vector<Label>& seq, std::size_t from, const SetMap& first,
                                                const std::set<std::string>& nullable) {
  std::set<std::string> out;
  for (std::size_t i = from; i < seq.size(); ++i) {
    if (seq[i].is_symbol()) {
      out.insert(seq[i].name);
      return {out, false};
    }
    const auto it = first.find(seq[i].name);
    if (it != first.end()) out.insert(it->second.begin(), it->second.end());
    if (!nullable.count(seq[i].name)) return {out, false};
  }
  return {out, true};
}

}  // namespace

std::map<std::string, std::set<std::string>> first_sets(const Cfg& g) {
  const auto nullable = nullable_variables(g);
  SetMap first;
  for (const auto& v : g.variables()) first[v];
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& p : g.productions()) {
      const auto [f, _] = first_of(p.rhs, 0, first, nullable);
      auto& dst = first[p.lhs];
      const std::size_t before = dst.size();
      dst.insert(f.begin(), f.end());
      changed |= dst.size() != before;
    }
  }
  return first;
}

std::map<std::string, std::set<std::string>> follow_sets(const Cfg& g) {
  const auto nullable = nullable_variables(g);
  const auto first = first_sets(g);
  SetMap follow;
  for (const auto& v : g.variables()) follow[v];
  follow[g.start()].insert(std::string(end_marker));
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& p : g.productions()) {
      for (std::size_t i = 0; i < p.rhs.size(); ++i) {
        if (!p.rhs[i].is_variable()) continue;
        auto [f, rest_nullable] = first_of(p.rhs, i + 1, first, nullable);
        if (rest_nullable) f.insert(follow[p.lhs].begin(), follow[p.lhs].end());
        auto& dst = follow[p.rhs[i].name];
        const std::size_t before = dst.size();
        dst.insert(f.begin(), f.end());
        changed |= dst.size() != before;
      }
    }
  }
  return follow;
}

std::optional<std::string> ll1_conflict(const Cfg& g) {
  const auto nullable = nullable_variables(g);
  const auto first = first_sets(g);
  const auto follow = follow_sets(g);
  for (const auto& v : g.lhs_order()) {
    std::map<std::string, std::size_t> owner;
    for (std::size_t i : g.productions_of(v)) {
      const Production& p = g.productions()[i];
      auto [predict, is_nullable] = first_of(p.rhs, 0, first, nullable);
      if (is_nullable) predict.insert(follow.at(v).begin(), follow.at(v).end());
      for (const auto& t : predict) {
        const auto [it, fresh] = owner.emplace(t, i);
        if (!fresh)
          return "LL(1) conflict for " + v + " on " + (t == end_marker ? std::string(end_marker) : quote_symbol(t)) +
                 ": " + production_text(g.productions()[it->second]) + " vs " + production_text(p);
      }
    }
  }
  return std::nullopt;
}

bool is_ll1(const Cfg& g) { return !ll1_conflict(g); }

Cfg ll1_to_gnf(const Cfg& g) {
  if (const auto c = ll1_conflict(g)) throw PreconditionError("input is not LL(1): " + *c);
  const Cfg ef = eliminate_epsilon(g);

  Cfg inlined(ef.start());
  // Expands leading variables depth-first; `chain` holds the variables
  // inlined so far for this production, to catch (indirect) left recursion.
  auto expand = [&](auto& self, const std::string& lhs, const std::vector<Label>& rhs,
                    std::vector<std::string>& chain) -> void {
    if (rhs.front().is_symbol()) {
      inlined.add_production(lhs, rhs);
      return;
    }
    const std::string& b = rhs.front().name;
    if (std::find(chain.begin(), chain.end(), b) != chain.end())
      throw PreconditionError("left recursion through " + b);
    chain.push_back(b);
    for (std::size_t i : ef.productions_of(b)) {
      std::vector<Label> next = ef.productions()[i].rhs;
      next.insert(next.end(), rhs.begin() + 1, rhs.end());
      self(self, lhs, next, chain);
    }
    chain.pop_back();
  };
  for (const auto& v : ef.lhs_order()) {
    for (std::size_t i : ef.productions_of(v)) {
      std::vector<std::string> chain{v};
      expand(expand, v, ef.productions()[i].rhs, chain);
    }
  }
  Cfg out = dedupe_and_prune(with_preterminals(inlined, true));
  if (const auto c = ll1_conflict(out)) throw PreconditionError("conversion result is not LL(1): " + *c);
  return out;
}

Gig gnf_to_gig(const Cfg& g) {
  if (!is_gnf(g)) throw PreconditionError("grammar is not in Greibach normal form");
  const std::set<std::string> taken = all_names(g);
  std::string x = "X";
  while (taken.count(x)) x += '\'';

  Gig out(g.start());
  for (std::size_t i = 0; i < g.productions().size(); ++i) {
    const Production& p = g.productions()[i];
    ParseGraph addendum;
    const NodeId root = addendum.add_variable(p.lhs);
    const NodeId pre = addendum.add_variable(x);
    addendum.add_first_child(root, pre);
    addendum.add_first_child(pre, addendum.add_lexeme(p.rhs.front().name));
    NodeId prev = pre;
    for (std::size_t k = 1; k < p.rhs.size(); ++k) {
      const NodeId b = addendum.add_variable(p.rhs[k].name);
      addendum.add_right_sibling(prev, b);
      prev = b;
    }
    addendum.set_root(root);
    out.add_rule(InterpolationRule::make("p" + std::to_string(i + 1), Label::variable(p.lhs), std::move(addendum), root));
  }
  return out;
}

}  // namespace gig
