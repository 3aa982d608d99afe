#include <gtest/gtest.h>

#include <deque>

#include "gig/cfg.hpp"
#include "gig/earley.hpp"
#include "gig/engine.hpp"
#include "gig/gig_text.hpp"
#include "gig/yield_mapping.hpp"
#include "support.hpp"

using namespace gig;
using testing_support::load_cfg;

namespace {

SymbolString sym(const std::string& s) { return split_symbols(s); }

Cfg cfg(const std::string& body) { return parse_cfg("cfg { " + body + " }"); }

// Sentences up to max_len by breadth-first leftmost rewriting. Only for
// ε-free grammars, where a form never shrinks and can be cut at max_len.
std::set<SymbolString> brute_force_language(const Cfg& g, std::size_t max_len) {
  std::set<SymbolString> out;
  std::set<std::vector<Label>> seen;
  std::deque<std::vector<Label>> queue{{Label::variable(g.start())}};
  while (!queue.empty()) {
    auto form = std::move(queue.front());
    queue.pop_front();
    const auto lead = std::find_if(form.begin(), form.end(), [](const Label& l) { return l.is_variable(); });
    if (lead == form.end()) {
      SymbolString w;
      for (const auto& l : form) w.push_back(l.name);
      out.insert(w);
      continue;
    }
    for (std::size_t i : g.productions_of(lead->name)) {
      std::vector<Label> next(form.begin(), lead);
      const auto& rhs = g.productions()[i].rhs;
      next.insert(next.end(), rhs.begin(), rhs.end());
      next.insert(next.end(), lead + 1, form.end());
      if (next.size() <= max_len && seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return out;
}

}  // namespace

TEST(CfgText, ParsesAndPrints) {
  const Cfg g = load_cfg("example5.cfg");
  EXPECT_EQ(g.start(), "S");
  EXPECT_EQ(g.productions().size(), 14u);
  EXPECT_EQ(g.terminals(), (std::set<std::string>{"a", "b", "c", "d"}));
  EXPECT_EQ(g.lhs_order(), (std::vector<std::string>{"S", "A1", "A2", "B1", "B2", "C1", "C2", "D1", "D2", "E"}));
  const std::string text = to_cfg_text(g);
  EXPECT_EQ(to_cfg_text(parse_cfg(text)), text);
  EXPECT_EQ(production_text(g.productions()[3]), "A1 -> #eps");
}

TEST(CfgText, Errors) {
  EXPECT_THROW(cfg("start S; S -> A;"), SyntaxError);  // A undefined
  EXPECT_THROW(cfg("S -> \"a\";"), SyntaxError);
  EXPECT_THROW(cfg("start S; S -> \"a\""), SyntaxError);
  EXPECT_THROW(cfg("start S; S -> \"S\";"), Error);
}

TEST(Nullable, ExampleGrammar) {
  const Cfg g = load_cfg("example5.cfg");
  EXPECT_EQ(nullable_variables(g), (std::set<std::string>{"A1", "D1", "E"}));
  EXPECT_FALSE(derives_empty(g));
  EXPECT_TRUE(derives_empty(cfg("start S; S -> A A; A -> #eps | \"a\";")));
}

TEST(TwoTier, Examples) {
  const Cfg t = to_two_tiered(cfg("start S; S -> \"a\" S \"b\" | \"c\";"));
  EXPECT_TRUE(is_two_tiered(t));
  EXPECT_EQ(production_text(t.productions()[0]), "S -> X_a S X_b");
  EXPECT_EQ(earley_enumerate(t, 7), earley_enumerate(cfg("start S; S -> \"a\" S \"b\" | \"c\";"), 7));

  const Cfg e = load_cfg("example5.cfg");
  EXPECT_TRUE(is_two_tiered(e));
  EXPECT_EQ(to_cfg_text(to_two_tiered(e)), to_cfg_text(e));

  const Cfg single = cfg("start S; S -> \"a\";");
  EXPECT_TRUE(is_two_tiered(single));
  EXPECT_EQ(to_cfg_text(to_two_tiered(single)), to_cfg_text(single));
}

TEST(TwoTier, AvoidsNameClashes) {
  const Cfg t = to_two_tiered(cfg("start S; S -> \"a\" X_a; X_a -> \"b\";"));
  EXPECT_TRUE(is_two_tiered(t));
  EXPECT_EQ(earley_enumerate(t, 4), (std::set<SymbolString>{sym("ab")}));
}

TEST(Gnf, Examples) {
  EXPECT_TRUE(is_gnf(cfg("start S; S -> \"a\" S | \"a\";")));
  EXPECT_FALSE(is_gnf(cfg("start S; S -> S S | \"a\";")));
  EXPECT_FALSE(is_gnf(load_cfg("example5.cfg")));
  EXPECT_TRUE(is_gnf(load_cfg("parens.cfg")));
}

TEST(GnfToGig, RuleShape) {
  const Gig g = gnf_to_gig(cfg("start A; A -> \"a\" B C; B -> \"b\"; C -> \"c\";"));
  ASSERT_EQ(g.rules().size(), 3u);
  EXPECT_EQ(rule_text(g.rules()[0]), R"(rule p1: A -> ^A(X("a") B C))");
  EXPECT_EQ(rule_text(g.rules()[1]), R"(rule p2: B -> ^B(X("b")))");
  EXPECT_THROW(gnf_to_gig(load_cfg("example5.cfg")), PreconditionError);
  const Gig taken = gnf_to_gig(cfg("start X; X -> \"a\";"));
  EXPECT_EQ(rule_text(taken.rules()[0]), R"(rule p1: X -> ^X(X'("a")))");
}

TEST(GnfToGig, ParensMatchOracle) {
  const Cfg c = load_cfg("parens.cfg");
  const Gig g = gnf_to_gig(c);
  auto expected = earley_enumerate(c, 8);
  EXPECT_EQ(enumerate_language(g, 8), expected);
  EXPECT_EQ(expected, brute_force_language(c, 8));
}

TEST(Earley, Examples) {
  const Cfg g = load_cfg("example5.cfg");
  EXPECT_TRUE(earley_recognize(g, sym("ab")));
  EXPECT_TRUE(earley_recognize(g, sym("abbb")));
  EXPECT_TRUE(earley_recognize(g, sym("cddd")));
  EXPECT_FALSE(earley_recognize(g, {}));
  EXPECT_FALSE(earley_recognize(g, sym("ax")));
  EXPECT_FALSE(earley_recognize(g, sym("ba")));
}

TEST(Earley, EnumerationMatchesBruteForce) {
  for (const char* name : {"parens.cfg", "arith.cfg"}) {
    const Cfg g = load_cfg(name);
    EXPECT_EQ(earley_enumerate(g, 7), brute_force_language(g, 7)) << name;
  }
}

TEST(Earley, IncrementalFeed) {
  EarleyParser p(load_cfg("parens.cfg"));
  EXPECT_FALSE(p.accepted());
  p.feed("(");
  EXPECT_TRUE(p.viable());
  p.feed(")");
  EXPECT_TRUE(p.accepted());
  EarleyParser copy = p;
  copy.feed(")");
  EXPECT_FALSE(copy.viable());
  EXPECT_TRUE(p.viable());
  EXPECT_EQ(copy.position(), 3u);
}

TEST(Earley, TreesOfAnAmbiguousGrammar) {
  const Cfg g = cfg("start S; S -> S S | \"a\";");
  EXPECT_EQ(earley_parse_trees(g, sym("aaa"), 10).size(), 2u);
  EXPECT_EQ(earley_parse_trees(g, sym("aaaa"), 10).size(), 5u);
  EXPECT_EQ(earley_parse_trees(g, sym("aaaa"), 3).size(), 3u);
}

TEST(Earley, TreeText) {
  const auto trees = earley_parse_trees(load_cfg("example5.cfg"), sym("c"), 10);
  ASSERT_EQ(trees.size(), 1u);
  EXPECT_EQ(to_tree_text(trees[0]), R"(S(C1(C2("c") D1(#eps)) E(#eps)))");
}

TEST(Earley, CyclicGrammarTerminates) {
  const Cfg g = cfg("start S; S -> S | \"a\";");
  EXPECT_TRUE(earley_recognize(g, sym("a")));
  EXPECT_GE(earley_parse_trees(g, sym("a"), 10).size(), 1u);
}

TEST(Ll1, Examples) {
  EXPECT_TRUE(is_ll1(cfg("start S; S -> \"a\" S | \"b\";")));
  EXPECT_FALSE(is_ll1(cfg("start S; S -> \"a\" S | \"a\";")));
  // Left recursion in B1 puts "b" in both B1 alternatives.
  const auto conflict = ll1_conflict(load_cfg("example5.cfg"));
  ASSERT_TRUE(conflict.has_value());
  EXPECT_NE(conflict->find("B1"), std::string::npos);
  EXPECT_TRUE(is_ll1(load_cfg("arith.cfg")));
  EXPECT_FALSE(is_ll1(load_cfg("parens.cfg")));
}

TEST(Ll1, FirstAndFollow) {
  const Cfg g = cfg("start S; S -> A B; A -> \"a\" | #eps; B -> \"b\" S | \"d\";");
  const auto first = first_sets(g);
  EXPECT_EQ(first.at("S"), (std::set<std::string>{"a", "b", "d"}));
  const auto follow = follow_sets(g);
  EXPECT_EQ(follow.at("A"), (std::set<std::string>{"b", "d"}));
  EXPECT_EQ(follow.at("S"), (std::set<std::string>{"$"}));
  EXPECT_TRUE(is_ll1(g));
}

TEST(Ll1ToGnf, InlinesLeadingVariable) {
  const Cfg out = ll1_to_gnf(cfg("start S; S -> A \"b\"; A -> \"a\";"));
  EXPECT_TRUE(is_gnf(out));
  EXPECT_TRUE(is_ll1(out));
  EXPECT_EQ(earley_enumerate(out, 4), (std::set<SymbolString>{sym("ab")}));
}

TEST(Ll1ToGnf, AlreadyGnfUnchanged) {
  const Cfg in = cfg("start S; S -> \"a\" S | \"b\";");
  EXPECT_EQ(to_cfg_text(ll1_to_gnf(in)), to_cfg_text(in));
}

TEST(Ll1ToGnf, WithEmptyProductions) {
  const Cfg in = cfg("start S; S -> A B; A -> \"a\" | #eps; B -> \"b\" S | \"d\";");
  const Cfg out = ll1_to_gnf(in);
  EXPECT_TRUE(is_gnf(out));
  EXPECT_TRUE(is_ll1(out));
  EXPECT_EQ(earley_enumerate(out, 8), earley_enumerate(in, 8));
  EXPECT_TRUE(check_determinism_upto(gnf_to_gig(out), 8).deterministic);
}

TEST(Ll1ToGnf, Rejections) {
  EXPECT_THROW(ll1_to_gnf(load_cfg("example5.cfg")), PreconditionError);
  EXPECT_THROW(ll1_to_gnf(cfg("start S; S -> A; A -> \"a\" | #eps;")), PreconditionError);  // ε in L
  // LL(1) before, not after: ε-elimination merges A's two ways to start with "a".
  EXPECT_THROW(ll1_to_gnf(cfg("start S; S -> \"a\" A; A -> \"b\" | #eps;")), PreconditionError);
}

TEST(Ll1ToGnf, PreterminalNames) {
  EXPECT_EQ(preterminal_name("a", 0, {}), "X_a");
  EXPECT_EQ(preterminal_name("+", 3, {}), "X_3");
  EXPECT_EQ(preterminal_name("a", 0, {"X_a"}), "X_a_");
}

TEST(YieldMapping, Examples) {
  const Gig gnf = gnf_to_gig(load_cfg("parens.cfg"));
  for (const auto& r : gnf.rules()) {
    const auto info = classify_yield_mapping(r);
    EXPECT_EQ(info.mapping, YieldMapping::vertical_eps) << r.name;
    EXPECT_TRUE(info.leftmost_emulable);
  }
  const Gig anbn = testing_support::load_gig("anbncndn.gig");
  const auto down = classify_yield_mapping(anbn.rules()[1]);
  EXPECT_EQ(down.mapping, YieldMapping::down_nonterminal_anchor);
  EXPECT_FALSE(down.leftmost_emulable);

  const Gig right = parse_gig(R"(gig { axiom V; rule r: V -> V("v") S(N ^V); })");
  const auto r = classify_yield_mapping(right.rules()[0]);
  EXPECT_EQ(r.mapping, YieldMapping::right_dangling);
  EXPECT_TRUE(r.leftmost_emulable);

  const Gig more = parse_gig(R"(gig { axiom S;
      rule h: S -> ^S T("t");
      rule d: S -> S(^S A("a"));
      rule n: S -> S T(A("a") ^U); })");
  EXPECT_EQ(classify_yield_mapping(more.rules()[0]).mapping, YieldMapping::horizontal_eps);
  EXPECT_EQ(classify_yield_mapping(more.rules()[1]).mapping, YieldMapping::down_terminal_anchor);
  EXPECT_EQ(classify_yield_mapping(more.rules()[2]).mapping, YieldMapping::right_nondangling);
  EXPECT_EQ(to_string(YieldMapping::vertical_eps), std::string_view("vertical-epsilon-shift"));
}
