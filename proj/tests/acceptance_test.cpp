// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.
#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "support.hpp"
#include "wk/corpus.hpp"
#include "wk/format.hpp"
#include "wk/grammar.hpp"
#include "wk/legacy.hpp"
#include "wk/suite.hpp"
#include "wk/testbench.hpp"
#include "wk/variants.hpp"

namespace {

using namespace wk;
using Clock = std::chrono::steady_clock;

constexpr unsigned kSeed = 20240917;
constexpr std::size_t kRandomGrammars = 200;
constexpr std::size_t kGrammarBound = 8;
constexpr double kGrammarSeconds = 60.0;
constexpr std::size_t kRoundTripBound = 8;
constexpr std::size_t kOracleBound = 10;
constexpr std::size_t kLemmaBound = 12;
constexpr std::size_t kLegacyBound = 8;
constexpr std::size_t kGateBound = 3;
constexpr std::size_t kSuiteBound = 10;
constexpr double kSuiteSeconds = 300.0;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

WordSet nonempty(WordSet s) {
  s.erase(Word{});
  return s;
}

Outcome random_grammar_conversion() {
  Outcome o;
  std::mt19937 rng(kSeed);
  const auto start = Clock::now();
  for (std::size_t i = 0; i < kRandomGrammars && o.ok; ++i) {
    const LinearGrammar g = test::random_normal_grammar(rng);
    const WordSet generated = generate(g, kGrammarBound);
    const WordSet accepted = nonempty(enumerate_language(grammar_to_automaton(g), kGrammarBound));
    if (generated != accepted) o.fail("grammar #" + std::to_string(i) + " disagrees");
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= kGrammarSeconds) o.fail("took " + std::to_string(elapsed) + "s");
  if (o.ok) o.detail = std::to_string(kRandomGrammars) + " grammars in " + std::to_string(elapsed) + "s";
  return o;
}

Outcome automaton_grammar_round_trip() {
  Outcome o;
  for (const auto& entry : builtin_corpus()) {
    const LinearGrammar g = automaton_to_grammar(entry.machine);
    const WordSet accepted = nonempty(enumerate_language(entry.machine, kRoundTripBound));
    WordSet derived;
    for_each_word(entry.machine.alphabet(), kRoundTripBound, [&](std::string_view w) {
      if (!w.empty() && derives(g, w)) derived.insert(Word(w));
      return true;
    });
    if (accepted != derived) o.fail(entry.oracle.name + " grammar disagrees");
  }
  return o;
}

Outcome corpus_matches_oracles() {
  Outcome o;
  const std::array<const char*, 8> expected{"N1", "NS", "N", "N", "F1", "FS", "F", "WK"};
  const auto corpus = builtin_corpus();
  if (corpus.size() != expected.size()) {
    o.fail("corpus has " + std::to_string(corpus.size()) + " entries");
    return o;
  }
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& e = corpus[i];
    if (auto w = equivalent_up_to(language_of(e.machine), language_of(e.oracle), kOracleBound))
      o.fail(e.oracle.name + " differs on " + display_word(*w));
    if (classify(e.machine).class_name() != expected[i])
      o.fail(e.oracle.name + " classified " + classify(e.machine).class_name());
  }
  return o;
}

Outcome lemma1_holds() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& e : builtin_corpus()) {
    const std::string cls = classify(e.machine).class_name();
    if (cls != "F1" && cls != "N1") continue;
    ++checked;
    if (!check_lemma1(e.machine, kLemmaBound)) o.fail(e.oracle.name + " lengths not downward closed");
  }
  if (checked == 0) o.fail("no F1/N1 machine in the corpus");
  if (o.ok) o.detail = std::to_string(checked) + " machines";
  return o;
}

Outcome shortest_words() {
  Outcome o;
  const std::array<std::pair<const char*, const char*>, 3> expected{
      {{"L2", "bb"}, {"L3", "aab"}, {"L6", "aa"}}};
  for (const auto& [name, word] : expected) {
    const auto w = shortest_nonempty_word(*find_oracle(name), kOracleBound);
    if (!w || *w != word) o.fail(std::string(name) + " shortest is " + (w ? display_word(*w) : "none"));
  }
  return o;
}

Outcome legacy_embedding() {
  Outcome o;
  for (const auto& e : builtin_corpus()) {
    const Automaton lifted = lift_to_legacy(e.machine);
    for_each_word(e.machine.alphabet(), kLegacyBound, [&](std::string_view w) {
      if (legacy_accepts(lifted, w) != accepts(e.machine, w)) {
        o.fail(e.oracle.name + " differs on " + display_word(Word(w)));
        return false;
      }
      return true;
    });
  }
  const Automaton witness = parse_automaton(
      read_text_file(std::filesystem::path(WK_CORPUS_DIR) / "L2-legacy.wk"));
  const Automaton stripped = strip_labels(witness);
  if (!equivalent_up_to(language_of(witness), language_of(stripped), kGateBound))
    o.fail("legacy witness agrees with its stripped form");
  return o;
}

Outcome documented_cells() {
  Outcome o;
  const SuiteReport report = run_suite(0);
  std::size_t documented = 0;
  for (const auto& e : builtin_corpus()) {
    for (const auto& x : e.exclusions) {
      if (x.evidence != Exclusion::Evidence::Documented) continue;
      const std::string id = e.oracle.name + "/not-" + x.variant;
      const SuiteCell* cell = report.find(id);
      if (!cell || cell->status != CellStatus::Documented) o.fail(id + " missing or not documented");
      ++documented;
    }
  }
  const SuiteCell* l8 = report.find("L8/not-F");
  if (!l8 || l8->status != CellStatus::Documented) o.fail("L8/not-F missing");
  if (o.ok) o.detail = std::to_string(documented) + " documented cells";
  return o;
}

bool run_wkctl(const std::string& command, std::string& output, int& status) {
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return false;
  std::array<char, 4096> buffer{};
  std::size_t n = 0;
  output.clear();
  while ((n = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) output.append(buffer.data(), n);
  status = pclose(pipe);
  return true;
}

Outcome suite_deterministic() {
  Outcome o;
  const std::string command = std::string("\"") + WKCTL_PATH + "\" suite --max-len " +
                              std::to_string(kSuiteBound);
  const auto start = Clock::now();
  std::string first, second;
  int s1 = 0, s2 = 0;
  if (!run_wkctl(command, first, s1) || !run_wkctl(command, second, s2)) {
    o.fail("could not run wkctl");
    return o;
  }
  const double elapsed = seconds_since(start);
  if (s1 != 0 || s2 != 0) o.fail("suite exited nonzero");
  if (first.empty() || first != second) o.fail("outputs differ");
  if (elapsed >= kSuiteSeconds) o.fail("took " + std::to_string(elapsed) + "s");
  if (o.ok) o.detail = "two runs in " + std::to_string(elapsed) + "s";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    Outcome (*run)();
  };
  const std::array<Criterion, 8> criteria{{
      {"grammar-to-automaton", random_grammar_conversion},
      {"automaton-to-grammar", automaton_grammar_round_trip},
      {"corpus-oracles", corpus_matches_oracles},
      {"lemma1", lemma1_holds},
      {"shortest-words", shortest_words},
      {"legacy-embedding", legacy_embedding},
      {"documented-cells", documented_cells},
      {"suite-deterministic", suite_deterministic},
  }};

  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (!o.ok) ++failures;
    std::cout << (o.ok ? "PASS " : "FAIL ") << c.id;
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    std::cout << '\n';
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
