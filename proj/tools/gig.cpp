// gig: parse with, convert to, and check Graph Interpolation Grammars.
//
// Exit status: 0 accept/equal/deterministic, 1 reject/unequal/branching,
// 2 usage, IO or precondition error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "gig/cfg.hpp"
#include "gig/dot.hpp"
#include "gig/earley.hpp"
#include "gig/engine.hpp"
#include "gig/gig_text.hpp"
#include "gig/procedure.hpp"
#include "gig/tree_text.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw IoError("cannot write " + path);
}

template <class F>
auto load(const std::string& path, F parse) {
  const std::string text = read_file(path);
  try {
    return parse(text);
  } catch (const gig::SyntaxError& e) {
    throw gig::Error(path + ":" + e.what());
  }
}

gig::Gig load_gig(const std::string& path) {
  return load(path, [](const std::string& t) { return gig::parse_gig(t); });
}

gig::Cfg load_cfg(const std::string& path) {
  return load(path, [](const std::string& t) { return gig::parse_cfg(t); });
}

std::string move_text(const gig::Gig& g, std::size_t rule, gig::NodeId anchor) {
  std::ostringstream os;
  os << g.rules()[rule].name << '@' << anchor;
  return os.str();
}

std::string quoted_input(const gig::SymbolString& s) { return "\"" + gig::join_symbols(s) + "\""; }

struct ParseOptions {
  std::string grammar;
  std::string input;
  bool all = false;
  std::string dot;
};

int cmd_parse(const ParseOptions& o) {
  const gig::Gig g = load_gig(o.grammar);
  const gig::SymbolString input = gig::split_symbols(o.input);
  for (const auto& s : input)
    if (!g.symbols().count(s)) {
      std::cout << "reject\nsymbol '" << s << "' is not in the grammar's alphabet\n";
      return kNo;
    }
  const auto traces = gig::recognize(g, input, o.all ? static_cast<std::size_t>(-1) : 1);
  if (traces.empty()) {
    std::cout << "reject\n";
    return kNo;
  }
  std::cout << "accept\nmoves: " << input.size() << "\nparses: " << traces.size() << '\n';
  for (std::size_t i = 0; i < traces.size(); ++i) {
    std::cout << "parse " << i + 1 << ':';
    for (const auto& s : traces[i].steps) std::cout << ' ' << move_text(g, s.rule, s.anchor);
    std::cout << "\ngraph " << i + 1 << ": " << gig::to_tree_text(traces[i].final_graph) << '\n';
  }
  if (!o.dot.empty()) write_file(o.dot, gig::to_dot(traces.front().final_graph));
  return kOk;
}

struct ConvertOptions {
  std::string mode;
  std::string grammar;
  std::string output;
  std::string log;
};

int cmd_convert(const ConvertOptions& o) {
  if (!o.log.empty() && o.mode != "cfg2gig") throw CLI::ValidationError("--log", "only cfg2gig writes a log");
  const gig::Cfg g = load_cfg(o.grammar);
  std::string text;
  if (o.mode == "gnf2gig") {
    text = gig::to_gig_text(gig::gnf_to_gig(g));
  } else if (o.mode == "cfg2gig") {
    auto result = gig::two_tiered_to_gig(g);
    text = gig::to_gig_text(result.gig);
    if (!o.log.empty()) write_file(o.log, gig::to_text(result.log));
  } else if (o.mode == "two-tier") {
    text = gig::to_cfg_text(gig::to_two_tiered(g));
  } else {
    text = gig::to_cfg_text(gig::ll1_to_gnf(g));
  }
  if (o.output.empty())
    std::cout << text;
  else
    write_file(o.output, text);
  return kOk;
}

struct CheckOptions {
  std::string mode;
  std::string grammar;
  std::string gig_file;
  std::size_t max_len = 8;
};

int cmd_check_deterministic(const CheckOptions& o) {
  const gig::Gig g = load_gig(o.grammar);
  const auto r = gig::check_determinism_upto(g, o.max_len);
  if (r.deterministic) {
    std::cout << "deterministic up to length " << o.max_len << '\n';
    return kOk;
  }
  std::cout << "branching after " << quoted_input(r.scanned) << " on '" << r.branching->remaining.front() << "'\n";
  std::cout << "context: " << gig::to_tree_text(r.branching->context) << '\n';
  std::cout << "moves:";
  for (const auto& m : r.moves) std::cout << ' ' << move_text(g, m.rule, m.anchor);
  std::cout << '\n';
  return kNo;
}

int cmd_check_equivalence(const CheckOptions& o) {
  if (o.gig_file.empty()) throw CLI::RequiredError("-G");
  const gig::Cfg cfg = load_cfg(o.grammar);
  const gig::Gig g = load_gig(o.gig_file);
  const auto expected = gig::earley_enumerate(cfg, o.max_len);
  const auto actual = gig::enumerate_language(g, o.max_len);
  if (expected == actual) {
    std::cout << "equal: " << actual.size() << " strings up to length " << o.max_len << '\n';
    // A conversion that was meant to preserve derivations must not add any.
    if (const auto amb = gig::find_ambiguity(g, o.max_len)) {
      std::cout << "ambiguous: " << quoted_input(amb->input) << " has " << amb->graphs << " parse graphs\n";
      return kNo;
    }
    return kOk;
  }
  std::cout << "unequal up to length " << o.max_len << '\n';
  for (const auto& w : expected)
    if (!actual.count(w)) std::cout << "only in cfg: " << quoted_input(w) << '\n';
  for (const auto& w : actual)
    if (!expected.count(w)) std::cout << "only in gig: " << quoted_input(w) << '\n';
  return kNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph Interpolation Grammar toolkit"};
  app.require_subcommand(1);

  ParseOptions parse;
  auto* p = app.add_subcommand("parse", "Recognize an input with a GIG");
  p->add_option("-g,--grammar", parse.grammar, "GIG file")->required();
  p->add_option("-i,--input", parse.input, "Input; split on whitespace if any, else per character")->required();
  p->add_flag("--all", parse.all, "Report every parse");
  p->add_option("--dot", parse.dot, "Write the (first) final parse graph as Graphviz");

  ConvertOptions convert;
  auto* c = app.add_subcommand("convert", "Convert a CFG");
  c->add_option("mode", convert.mode, "gnf2gig | cfg2gig | two-tier | ll1-gnf")
      ->required()
      ->check(CLI::IsMember({"gnf2gig", "cfg2gig", "two-tier", "ll1-gnf"}));
  c->add_option("-g,--grammar", convert.grammar, "CFG file")->required();
  c->add_option("-G,--gig", convert.output, "Output file (default: stdout)");
  c->add_option("--log", convert.log, "cfg2gig: write the procedure log");

  CheckOptions check;
  auto* k = app.add_subcommand("check", "Check determinism or equivalence");
  k->add_option("mode", check.mode, "deterministic | equivalence")
      ->required()
      ->check(CLI::IsMember({"deterministic", "equivalence"}));
  k->add_option("-g,--grammar", check.grammar, "GIG file (deterministic) or CFG file (equivalence)")->required();
  k->add_option("-G,--gig", check.gig_file, "GIG file (equivalence)");
  k->add_option("--max-len", check.max_len, "Longest input swept")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kError;
  }

  try {
    if (p->parsed()) return cmd_parse(parse);
    if (c->parsed()) return cmd_convert(convert);
    return check.mode == "deterministic" ? cmd_check_deterministic(check) : cmd_check_equivalence(check);
  } catch (const CLI::Error& e) {
    std::cerr << "gig: " << e.what() << '\n';
  } catch (const IoError& e) {
    std::cerr << "gig: " << e.what() << '\n';
  } catch (const gig::Error& e) {
    std::cerr << "gig: " << e.what() << '\n';
  }
  return kError;
}
