#include <doctest.h>

#include <filesystem>
#include <random>

#include "support.hpp"
#include "wk/corpus.hpp"
#include "wk/errors.hpp"
#include "wk/format.hpp"
#include "wk/legacy.hpp"

using namespace wk;

namespace {

std::string corpus_file(const std::string& name) {
  return read_text_file(std::filesystem::path(WK_CORPUS_DIR) / name);
}

std::size_t error_line(std::string_view text) {
  try {
    parse_automaton(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

std::size_t grammar_error_line(std::string_view text) {
  try {
    parse_grammar(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("bundled machine files are the built-in corpus") {
  for (const CorpusEntry& e : builtin_corpus()) {
    CHECK_MESSAGE(parse_automaton(corpus_file(e.oracle.name + ".wk")) == e.machine,
                  e.oracle.name);
  }
  CHECK(parse_automaton(corpus_file("L2-legacy.wk")) == legacy_witness());
}

TEST_CASE("bundled files survive parse -> serialize -> parse") {
  for (const auto& entry : std::filesystem::directory_iterator(WK_CORPUS_DIR)) {
    const std::string text = read_text_file(entry.path());
    if (entry.path().extension() == ".wk") {
      const Automaton m = parse_automaton(text);
      CHECK(parse_automaton(serialize(m)) == m);
    } else {
      const LinearGrammar g = parse_grammar(text);
      CHECK(parse_grammar(serialize(g)) == g);
    }
  }
}

TEST_CASE("machine serialization layout") {
  CHECK(serialize(test::a_ab()) ==
        "wk-automaton\n"
        "alphabet: a b\n"
        "states: q0\n"
        "initial: q0\n"
        "final: q0\n"
        "trans: q0 a _ q0\n"
        "trans: q0 _ b q0\n");
  CHECK(serialize(legacy_witness()).find("trans: q0 a _ q0 @inf\n") != std::string::npos);
  CHECK(serialize(test::empty_machine(false)).find("final:\n") != std::string::npos);
  const Automaton bare = lift_to_legacy(test::empty_machine(true));
  CHECK(serialize(bare).find("model: legacy\n") != std::string::npos);
  CHECK(parse_automaton(serialize(bare)).model() == Model::Legacy);
  CHECK(error_line("wk-automaton\nalphabet: a\nstates: q0\ninitial: q0\nfinal: q0\n"
                   "model: new\ntrans: q0 a _ q0 @inf\n") == 7);
  CHECK(error_line("wk-automaton\nalphabet: a\nstates: q0\ninitial: q0\nfinal: q0\n"
                   "model: legacy\ntrans: q0 a _ q0\n") == 7);
}

TEST_CASE("machine parse errors carry line numbers") {
  CHECK(error_line(read_text_file(std::filesystem::path(WK_FIXTURE_DIR) / "bad-symbol.wk")) == 7);
  CHECK(error_line("automaton\n") == 1);
  CHECK(error_line("") == 1);
  CHECK(error_line("wk-automaton\nalphabet: a\nstates: q0\ninitial: q0\nfinal: q0\ncolour: red\n") == 6);
  CHECK(error_line("wk-automaton\nalphabet: a\nstates: q0\ninitial: q1\nfinal: q0\n") == 4);
  CHECK(error_line("wk-automaton\nalphabet: a\nstates: q0\ninitial: q0\nfinal: q0\n"
                   "trans: q0 a _ q0 @inf\ntrans: q0 a _ q0\n") == 7);
  CHECK(error_line("wk-automaton\nalphabet: a\nstates: q0\ninitial: q0\nfinal: q0\n"
                   "trans: q0 a _ q0 @2\n") == 6);
  CHECK(error_line("wk-automaton\nalphabet: a\nalphabet: b\n") == 3);
  CHECK(error_line("wk-automaton\nalphabet: ab\n") == 2);
  CHECK(error_line("wk-automaton\nalphabet: a\nstates: q0\ninitial: q0\nfinal: q0\n"
                   "trans: q0 a q0\n") == 6);
  CHECK(error_line("wk-automaton\nalphabet: a\nstates: q0\ninitial: q0\n") == 4);
}

TEST_CASE("machine files accept comments and blank lines; duplicates merge") {
  const Automaton m = parse_automaton(
      "# comment\n\nwk-automaton\nalphabet: a   # letters\nstates: q0\n"
      "initial: q0\nfinal: q0\ntrans: q0 a _ q0\ntrans: q0 a _ q0\n");
  CHECK(m.transitions().size() == 1);
}

TEST_CASE("grammar files") {
  const LinearGrammar g = parse_grammar(corpus_file("anbn.lg"));
  CHECK(g == LinearGrammar::from_productions(
                 "S", {Production::chain("S", "a", "T", ""),
                       Production::chain("T", "", "S", "b"),
                       Production::terminal("S", "a")}));
  CHECK(serialize(g) ==
        "linear-grammar\n"
        "start: S\n"
        "terminals: a b\n"
        "nonterminals: S T\n"
        "prod: S -> a T\n"
        "prod: T -> S b\n"
        "prod: S -> a\n");

  const LinearGrammar body = parse_grammar(
      "linear-grammar\nstart: S\nprod: S -> ab c Q_1 ba\nprod: Q_1 -> _\nprod: S -> ab c\n");
  CHECK(body.productions()[0] == Production::chain("S", "abc", "Q_1", "ba"));
  CHECK(body.productions()[1] == Production::terminal("Q_1", ""));
  CHECK(body.productions()[2] == Production::terminal("S", "abc"));
}

TEST_CASE("grammar parse errors") {
  CHECK(grammar_error_line("linear-grammar\nstart: S\nprod: S -> A b B\n") == 3);
  CHECK(grammar_error_line("linear-grammar\nstart: S\nprod: S a\n") == 3);
  CHECK(grammar_error_line("linear-grammar\nprod: S -> a\n") == 2);
  CHECK(grammar_error_line("linear-grammar\nstart: S\nterminals: a\nprod: S -> b\n") == 4);
  CHECK(grammar_error_line("linear-grammar\nstart: S\nnonterminals: S\nprod: S -> a T\n") == 4);
  CHECK(grammar_error_line("linear-grammar\nstart: s\n") == 2);
  CHECK(grammar_error_line("wk-automaton\n") == 1);
}

TEST_CASE("detect_kind") {
  CHECK(detect_kind("# x\nwk-automaton\n") == FileKind::Automaton);
  CHECK(detect_kind("linear-grammar\n") == FileKind::Grammar);
  CHECK(detect_kind("hello\n") == FileKind::Unknown);
  CHECK(detect_kind("") == FileKind::Unknown);
}

TEST_CASE("random machines and grammars round-trip") {
  std::mt19937 rng(1234);
  for (int i = 0; i < 100; ++i) {
    const Automaton m = test::random_machine(rng, 4, 6, 3);
    CHECK(parse_automaton(serialize(m)) == m);
    const Automaton lifted = lift_to_legacy(m);
    CHECK(parse_automaton(serialize(lifted)) == lifted);
    const LinearGrammar g = test::random_normal_grammar(rng);
    CHECK(parse_grammar(serialize(g)) == g);
  }
}
