#include "gig/procedure.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "gig/gig_text.hpp"
#include "gig/graph_order.hpp"
#include "gig/tree_text.hpp"

namespace gig {

bool Derivation::is_leftmost() const {
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const auto& form = forms[k];
    const auto first = std::find_if(form.begin(), form.end(), [](const Label& l) { return l.is_variable(); });
    if (static_cast<std::size_t>(first - form.begin()) != steps[k].position) return false;
  }
  return true;
}

Derivation make_derivation(const Cfg& g, const std::string& start, const std::vector<DerivationStep>& steps,
                           std::string name) {
  Derivation d;
  d.name = std::move(name);
  d.forms.push_back({Label::variable(start)});
  for (const DerivationStep& s : steps) {
    const auto& form = d.forms.back();
    if (s.position >= form.size()) throw PreconditionError("derivation step past the end of the form");
    if (s.production >= g.productions().size()) throw PreconditionError("derivation step names no production");
    const Production& p = g.productions()[s.production];
    if (form[s.position] != Label::variable(p.lhs))
      throw PreconditionError("derivation step rewrites " + form[s.position].name + " with a " + p.lhs + "-production");
    std::vector<Label> next(form.begin(), form.begin() + s.position);
    next.insert(next.end(), p.rhs.begin(), p.rhs.end());
    next.insert(next.end(), form.begin() + s.position + 1, form.end());
    d.forms.push_back(std::move(next));
    d.steps.push_back(s);
  }
  return d;
}

namespace {

std::string form_text(const std::vector<Label>& form) {
  if (form.empty()) return "#eps";
  std::string out;
  for (const Label& l : form) out += (out.empty() ? "" : " ") + l.name;
  return out;
}

}  // namespace

std::string derivation_text(const Derivation& d) {
  std::string out;
  for (const auto& form : d.forms) out += (out.empty() ? "" : " => ") + form_text(form);
  return out;
}

ParseGraph derivation_graph(const Cfg& g, const Derivation& d) {
  ParseGraph graph(d.start());
  std::vector<NodeId> occurrence{graph.root()};
  for (const DerivationStep& s : d.steps) {
    const NodeId n = occurrence[s.position];
    const Production& p = g.productions()[s.production];
    std::vector<NodeId> kids;
    if (p.rhs.empty()) {
      graph.add_first_child(n, graph.add_epsilon());
    } else {
      for (const Label& l : p.rhs) kids.push_back(l.is_variable() ? graph.add_variable(l.name) : graph.add_lexeme(l.name));
      graph.add_first_child(n, kids.front());
      for (std::size_t i = 1; i < kids.size(); ++i) graph.add_right_sibling(kids[i - 1], kids[i]);
    }
    occurrence.erase(occurrence.begin() + s.position);
    occurrence.insert(occurrence.begin() + s.position, kids.begin(), kids.end());
  }
  return graph;
}

namespace {

std::string numbered(std::size_t k) { return "D" + std::to_string(k); }

// Appends `inner` (a derivation from the variable at `position` of outer's
// yield) to `outer`.
Derivation splice_derivation(const Cfg& g, const Derivation& outer, const Derivation& inner, std::size_t position) {
  std::vector<DerivationStep> steps = outer.steps;
  for (DerivationStep s : inner.steps) {
    s.position += position;
    steps.push_back(s);
  }
  return make_derivation(g, outer.start(), steps);
}

bool leads_with_terminal(const Derivation& d) { return !d.yield().empty() && d.yield().front().is_symbol(); }

bool is_self_embedding(const Derivation& d) {
  return !d.yield().empty() && d.yield().front() == Label::variable(d.start());
}

// A =>* A b β: the shape Step 5 turns into a down-shift.
bool is_down_shift_shape(const Derivation& d) {
  return is_self_embedding(d) && d.yield().size() >= 2 && d.yield()[1].is_symbol();
}

}  // namespace

std::vector<Derivation> unwind_derivations(const Cfg& g) {
  std::vector<Derivation> out;
  struct Partial {
    std::vector<DerivationStep> steps;
    std::vector<Label> form;
    std::set<std::string> rewritten;
  };
  for (const auto& a : g.lhs_order()) {
    // Depth-first in production order, so derivations come out in the
    // order of their first differing choice.
    auto walk = [&](auto& self, const Partial& cur) -> void {
      const bool halt = cur.form.empty() || cur.form.front().is_symbol() ||
                        (!cur.steps.empty() && cur.rewritten.count(cur.form.front().name));
      if (halt) {
        out.push_back(make_derivation(g, a, cur.steps, numbered(out.size() + 1)));
        return;
      }
      const std::string& lead = cur.form.front().name;
      for (std::size_t i : g.productions_of(lead)) {
        Partial next = cur;
        next.steps.push_back({0, i});
        next.form.erase(next.form.begin());
        const auto& rhs = g.productions()[i].rhs;
        next.form.insert(next.form.begin(), rhs.begin(), rhs.end());
        next.rewritten.insert(lead);
        self(self, next);
      }
    };
    walk(walk, Partial{{}, {Label::variable(a)}, {}});
  }
  return out;
}

std::vector<Derivation> embed_left_recursion(const std::vector<Derivation>& delta, const Cfg& g) {
  std::vector<Derivation> out;
  for (const Derivation& d : delta) {
    if (!is_self_embedding(d)) {
      out.push_back(d);
      continue;
    }
    const auto& y = d.yield();
    if (y.size() < 2 || !y[1].is_variable())
      throw PreconditionError(d.name + ": self-embedding yield '" + form_text(y) +
                              "' is not of the form A B alpha (ambiguous or not 2-tiered)");
    std::vector<const Derivation*> tails;
    for (const Derivation& e : delta)
      if (e.start() == y[1].name && leads_with_terminal(e)) tails.push_back(&e);
    if (tails.empty())
      throw PreconditionError(d.name + ": " + y[1].name + " has no derivation starting with a terminal");
    for (std::size_t k = 0; k < tails.size(); ++k) {
      Derivation r = splice_derivation(g, d, *tails[k], 1);
      r.name = d.name + "'" + (tails.size() > 1 ? std::to_string(k + 1) : "");
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<Derivation> plug_epsilon(const std::vector<Derivation>& delta, const Cfg& g) {
  std::map<std::string, std::vector<const Derivation*>> empty_of;
  for (const Derivation& d : delta)
    if (d.yield().empty()) empty_of[d.start()].push_back(&d);

  std::vector<Derivation> out = delta;
  std::set<std::pair<std::string, std::vector<DerivationStep>>> seen;
  for (const Derivation& d : delta) seen.insert({d.start(), d.steps});
  std::size_t next_number = delta.size() + 1;

  // Each source's closure is explored breadth-first before the next source.
  for (const Derivation& source : delta) {
    std::deque<Derivation> queue{source};
    while (!queue.empty()) {
      const Derivation cur = std::move(queue.front());
      queue.pop_front();
      const auto& y = cur.yield();
      for (std::size_t pos = 0; pos < y.size(); ++pos) {
        if (!y[pos].is_variable()) continue;
        if (pos == 0 && !is_down_shift_shape(cur)) continue;
        const auto it = empty_of.find(y[pos].name);
        if (it == empty_of.end()) continue;
        for (const Derivation* eps : it->second) {
          Derivation plugged = splice_derivation(g, cur, *eps, pos);
          if (!seen.insert({plugged.start(), plugged.steps}).second) continue;
          plugged.name = numbered(next_number++);
          out.push_back(plugged);
          queue.push_back(std::move(plugged));
        }
      }
    }
  }
  return out;
}

Gig build_gig_rules(const std::vector<Derivation>& delta, const Cfg& g, std::vector<EmittedRule>* emitted) {
  Gig out(g.start());
  std::vector<EmittedRule> log;
  std::map<std::string, std::size_t> by_addendum;
  for (const Derivation& d : delta) {
    const bool eps_shift = leads_with_terminal(d);
    const bool down_shift = is_down_shift_shape(d);
    if (!eps_shift && !down_shift) continue;
    ParseGraph graph = derivation_graph(g, d);
    NodeId target = graph.root();
    if (down_shift) {
      for (NodeId n : frontier(graph))
        if (graph.is_variable_node(n) && graph.label(n).name == d.start()) {
          target = n;
          break;
        }
    }
    const std::string key = d.start() + " " + to_tree_text(graph, target);
    if (const auto it = by_addendum.find(key); it != by_addendum.end()) {
      log[it->second].sources.push_back(d.name);
      continue;
    }
    by_addendum.emplace(key, log.size());
    auto rule = InterpolationRule::make(d.name, Label::variable(d.start()), std::move(graph), target);
    log.push_back({d.name, rule.kind, {d.name}});
    out.add_rule(std::move(rule));
  }
  if (emitted) *emitted = std::move(log);
  return out;
}

std::string to_text(const ProcedureLog& log) {
  std::ostringstream os;
  auto section = [&](const char* title, const std::vector<Derivation>& ds) {
    os << '[' << title << "]\n";
    for (const auto& d : ds) os << d.name << ": " << derivation_text(d) << '\n';
  };
  section("step1", log.step1);
  section("step2", log.step2);
  section("step3", log.step3);
  os << "[rules]\n";
  for (std::size_t i = 0; i < log.rules.size(); ++i) {
    const EmittedRule& r = log.rules[i];
    os << to_string(r.kind) << " from";
    for (const auto& s : r.sources) os << ' ' << s;
    os << ": " << (i < log.rule_texts.size() ? log.rule_texts[i] : r.rule) << '\n';
  }
  return os.str();
}

ProcedureResult two_tiered_to_gig(const Cfg& g) {
  if (!is_two_tiered(g)) throw PreconditionError("grammar is not 2-tiered (run two-tier first)");
  if (derives_empty(g)) throw PreconditionError("grammar derives the empty string");
  ProcedureLog log;
  log.step1 = unwind_derivations(g);
  log.step2 = embed_left_recursion(log.step1, g);
  log.step3 = plug_epsilon(log.step2, g);
  Gig gig = build_gig_rules(log.step3, g, &log.rules);
  for (const auto& r : gig.rules()) log.rule_texts.push_back(rule_text(r));
  return {std::move(gig), std::move(log)};
}

}  // namespace gig
