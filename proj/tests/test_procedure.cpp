#include <gtest/gtest.h>

#include "gig/earley.hpp"
#include "gig/engine.hpp"
#include "gig/gig_text.hpp"
#include "gig/procedure.hpp"
#include "gig/tree_text.hpp"
#include "support.hpp"

using namespace gig;
using testing_support::load_cfg;

namespace {

SymbolString sym(const std::string& s) { return split_symbols(s); }

Cfg cfg(const std::string& body) { return parse_cfg("cfg { " + body + " }"); }

std::vector<std::string> lines(const std::vector<Derivation>& ds) {
  std::vector<std::string> out;
  for (const auto& d : ds) out.push_back(d.name + ": " + derivation_text(d));
  return out;
}

const std::vector<std::string> kUnwound = {
    "D1: S => A1 B1 => A2 B1 => a B1",
    "D2: S => A1 B1 => B1 => B1 B2",
    "D3: S => A1 B1 => B1 => B2 => b",
    "D4: S => C1 E => C2 D1 E => c D1 E",
    "D5: A1 => A2 => a",
    "D6: A1 => #eps",
    "D7: A2 => a",
    "D8: B1 => B1 B2",
    "D9: B1 => B2 => b",
    "D10: B2 => b",
    "D11: C1 => C2 D1 => c D1",
    "D12: C2 => c",
    "D13: D1 => D1 D2",
    "D14: D1 => #eps",
    "D15: D2 => d",
    "D16: E => #eps",
};

const std::vector<std::string> kPlugged = {
    "D17: S => C1 E => C2 D1 E => c D1 E => c E",
    "D18: S => C1 E => C2 D1 E => c D1 E => c D1",
    "D19: S => C1 E => C2 D1 E => c D1 E => c E => c",
    "D20: S => C1 E => C2 D1 E => c D1 E => c D1 => c",
    "D21: C1 => C2 D1 => c D1 => c",
    "D22: D1 => D1 D2 => D1 d => d",
};

struct Example {
  Cfg grammar = load_cfg("example5.cfg");
  ProcedureResult result = two_tiered_to_gig(grammar);
};

const Example& example() {
  static const Example e;
  return e;
}

}  // namespace

TEST(Derivations, MakeAndPrint) {
  const Cfg g = load_cfg("example5.cfg");
  const Derivation d = make_derivation(g, "S", {{0, 0}, {0, 2}, {0, 4}}, "x");
  EXPECT_EQ(derivation_text(d), "S => A1 B1 => A2 B1 => a B1");
  EXPECT_TRUE(d.is_leftmost());
  EXPECT_EQ(to_tree_text(derivation_graph(g, d)), R"(S(A1(A2("a")) B1))");
  EXPECT_THROW(make_derivation(g, "S", {{0, 4}}), PreconditionError);
  EXPECT_THROW(make_derivation(g, "S", {{3, 0}}), PreconditionError);
  EXPECT_FALSE(make_derivation(g, "S", {{0, 0}, {1, 5}}).is_leftmost());
}

TEST(Unwind, ExampleGrammar) { EXPECT_EQ(lines(example().result.log.step1), kUnwound); }

TEST(Unwind, EveryDerivationReplays) {
  const auto& g = example().grammar;
  for (const auto& d : example().result.log.step3) {
    const Derivation again = make_derivation(g, d.start(), d.steps);
    EXPECT_EQ(again.forms, d.forms) << d.name;
  }
}

TEST(Unwind, SmallGrammars) {
  EXPECT_EQ(lines(unwind_derivations(cfg("start A; A -> \"a\";"))), std::vector<std::string>{"D1: A => a"});
  EXPECT_EQ(lines(unwind_derivations(cfg("start A; A -> A B | B; B -> \"b\";")))[0], "D1: A => A B");
}

TEST(EmbedLeftRecursion, ExampleGrammar) {
  const auto& step2 = example().result.log.step2;
  std::vector<std::string> expected = kUnwound;
  expected[7] = "D8': B1 => B1 B2 => B1 b";
  expected[12] = "D13': D1 => D1 D2 => D1 d";
  EXPECT_EQ(lines(step2), expected);
}

TEST(EmbedLeftRecursion, NoSelfEmbeddingIsNoOp) {
  const Cfg g = cfg("start S; S -> A; A -> \"a\";");
  const auto d = unwind_derivations(g);
  EXPECT_EQ(lines(embed_left_recursion(d, g)), lines(d));
}

TEST(EmbedLeftRecursion, Errors) {
  // S => S X has the A B alpha shape; S => S does not.
  const Cfg mixed = cfg("start S; S -> S X | \"b\"; X -> \"a\";");
  EXPECT_NO_THROW(embed_left_recursion(unwind_derivations(mixed), mixed));
  const Cfg bare = cfg("start S; S -> S | \"b\";");
  EXPECT_THROW(embed_left_recursion(unwind_derivations(bare), bare), PreconditionError);
  // B only ever derives B Y ..., so S => S B has no terminal-initial tail.
  const Cfg no_tail = cfg("start S; S -> S B | Y; B -> B Y; Y -> \"y\";");
  ASSERT_TRUE(is_two_tiered(no_tail));
  try {
    two_tiered_to_gig(no_tail);
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("no derivation starting with a terminal"), std::string::npos) << e.what();
  }
}

TEST(PlugEpsilon, ExampleGrammar) {
  const auto& step3 = example().result.log.step3;
  ASSERT_EQ(step3.size(), 22u);
  const auto all = lines(step3);
  EXPECT_EQ(std::vector<std::string>(all.begin() + 16, all.end()), kPlugged);
}

TEST(PlugEpsilon, NoEmptyProductionsIsNoOp) {
  const Cfg g = cfg("start S; S -> A B; A -> \"a\"; B -> \"b\";");
  const auto d = unwind_derivations(g);
  EXPECT_EQ(lines(plug_epsilon(d, g)), lines(d));
}

TEST(BuildRules, ExampleGrammar) {
  const auto& log = example().result.log;
  const Gig& gig = example().result.gig;
  ASSERT_EQ(gig.rules().size(), 17u);
  std::size_t eps = 0, down = 0;
  for (const auto& r : gig.rules()) (r.kind == ShiftKind::epsilon_shift ? eps : down)++;
  EXPECT_EQ(eps, 15u);
  EXPECT_EQ(down, 2u);
  std::vector<std::string> down_sources;
  for (const auto& r : log.rules)
    if (r.kind == ShiftKind::down_shift) down_sources.push_back(r.sources.front());
  EXPECT_EQ(down_sources, (std::vector<std::string>{"D8'", "D13'"}));
  bool merged = false;
  for (const auto& r : log.rules)
    if (r.sources == std::vector<std::string>{"D19", "D20"}) merged = true;
  EXPECT_TRUE(merged);
  for (const auto& r : log.rules)
    for (const char* dropped : {"D2", "D6", "D14", "D16"})
      EXPECT_NE(r.sources.front(), dropped);
}

TEST(BuildRules, DownShiftShapes) {
  const Gig& gig = example().result.gig;
  for (const auto& r : gig.rules()) {
    if (r.kind != ShiftKind::down_shift) continue;
    EXPECT_TRUE(rule_text(r) == R"(rule D8': B1 -> B1(^B1 B2("b")))" ||
                rule_text(r) == R"(rule D13': D1 -> D1(^D1 D2("d")))")
        << rule_text(r);
  }
}

TEST(BuildRules, EmptyInputGivesNoRules) {
  const Cfg g = cfg("start S; S -> \"a\";");
  EXPECT_TRUE(build_gig_rules({}, g).rules().empty());
}

TEST(BuildRules, GnfGrammarMatchesDirectConstruction) {
  // Same language and rule count; the addenda differ only by the preterminal.
  const Cfg g = to_two_tiered(cfg("start S; S -> \"a\" S | \"a\";"));
  const auto via_procedure = two_tiered_to_gig(g).gig;
  EXPECT_EQ(via_procedure.rules().size(), 3u);  // S => X_a S, S => X_a, X_a => a
  EXPECT_EQ(enumerate_language(via_procedure, 6), earley_enumerate(g, 6));
  EXPECT_TRUE(two_tiered_to_gig(cfg("start S; S -> X_a; X_a -> \"a\";")).gig.rules().size() == 2u);
}

TEST(TwoTieredToGig, Preconditions) {
  EXPECT_THROW(two_tiered_to_gig(cfg("start S; S -> \"a\" S | \"b\";")), PreconditionError);
  EXPECT_THROW(two_tiered_to_gig(cfg("start S; S -> A; A -> \"a\" | #eps;")), PreconditionError);
}

TEST(TwoTieredToGig, SingleTerminal) {
  const auto r = two_tiered_to_gig(cfg("start S; S -> X_a; X_a -> \"a\";"));
  EXPECT_EQ(enumerate_language(r.gig, 3), (std::set<SymbolString>{sym("a")}));
}

TEST(TwoTieredToGig, LanguageMatchesOracle) {
  EXPECT_EQ(enumerate_language(example().result.gig, 6), earley_enumerate(example().grammar, 6));
}

TEST(TwoTieredToGig, ArbitraryGrammarThroughTwoTiering) {
  const Cfg source = cfg("start S; S -> \"a\" S \"b\" | \"c\";");
  const auto r = two_tiered_to_gig(to_two_tiered(source));
  EXPECT_EQ(enumerate_language(r.gig, 7), earley_enumerate(source, 7));
}

TEST(TwoTieredToGig, SameDerivationTrees) {
  const auto& e = example();
  for (const char* w : {"a b", "b", "c", "c d", "a b b", "c d d", "b b"}) {
    const auto input = sym(w);
    std::set<std::string> cf;
    for (const auto& t : earley_parse_trees(e.grammar, input, 16)) cf.insert(to_tree_text(t));
    EXPECT_EQ(parse_graph_set(e.result.gig, input), cf) << w;
  }
}

TEST(ProcedureLog, Sections) {
  const std::string text = to_text(example().result.log);
  EXPECT_EQ(text.rfind("[step1]\nD1: S => A1 B1 => A2 B1 => a B1\n", 0), 0u);
  for (const char* s : {"[step2]", "[step3]", "[rules]", "epsilon-shift from D19 D20: rule D19:",
                        "down-shift from D8': rule D8': B1 -> B1(^B1 B2(\"b\"))"})
    EXPECT_NE(text.find(s), std::string::npos) << s;
}

TEST(TwoTieredToGig, ShippedGrammarsMatchOracle) {
  for (const char* name : {"example5.cfg", "parens.cfg", "arith.cfg"}) {
    const Cfg source = load_cfg(name);
    const Gig g = two_tiered_to_gig(to_two_tiered(source)).gig;
    EXPECT_EQ(enumerate_language(g, 8), earley_enumerate(source, 8)) << name;
    EXPECT_FALSE(find_ambiguity(g, 6).has_value()) << name;
  }
}
