#include "wk/cli.hpp"

#include <CLI11.hpp>
#include <optional>

#include "wk/automaton.hpp"
#include "wk/corpus.hpp"
#include "wk/errors.hpp"
#include "wk/format.hpp"
#include "wk/grammar.hpp"
#include "wk/legacy.hpp"
#include "wk/suite.hpp"
#include "wk/testbench.hpp"
#include "wk/variants.hpp"

namespace wk::cli {

namespace {

Automaton load_automaton(const std::string& path) {
  return parse_automaton(read_text_file(path));
}

// One side of `compare`: a machine file, a grammar file, or oracle:<name>.
class Operand {
 public:
  explicit Operand(const std::string& spec) {
    if (spec.rfind("oracle:", 0) == 0) {
      const LanguageOracle* o = find_oracle(spec.substr(7));
      if (!o) throw Error("unknown oracle `" + spec.substr(7) + "`");
      oracle_ = o;
      return;
    }
    const std::string text = read_text_file(spec);
    switch (detect_kind(text)) {
      case FileKind::Automaton: machine_.emplace(parse_automaton(text)); break;
      case FileKind::Grammar: grammar_.emplace(parse_grammar(text)); break;
      case FileKind::Unknown:
        throw ParseError(1, spec + ": expected `wk-automaton` or `linear-grammar` header");
    }
  }
  Operand(const Operand&) = delete;
  Operand& operator=(const Operand&) = delete;

  Language language() const {
    if (oracle_) return language_of(*oracle_);
    if (machine_) return language_of(*machine_);
    return language_of(*grammar_);
  }

 private:
  const LanguageOracle* oracle_ = nullptr;
  std::optional<Automaton> machine_;
  std::optional<LinearGrammar> grammar_;
};

std::string describe_config(const Automaton& m, const Configuration& c) {
  return m.state_name(c.state) + " [" + std::to_string(c.lo) + "," +
         std::to_string(c.hi) + ")";
}

int cmd_check(const std::string& path, const std::string& word_text,
              bool with_trace, std::ostream& out) {
  const Automaton m = load_automaton(path);
  const Word w = parse_word_literal(word_text);
  check_word(m, w);
  if (m.model() == Model::Legacy) {
    const bool ok = legacy_accepts(m, w);
    out << (ok ? "ACCEPT" : "REJECT") << '\n';
    return ok ? kOk : kNegative;
  }
  const auto t = trace(m, w);
  out << (t ? "ACCEPT" : "REJECT") << '\n';
  if (t && with_trace) {
    out << describe_config(m, t->configurations.front()) << '\n';
    for (std::size_t i = 0; i < t->steps(); ++i) {
      const Transition& tr = m.transitions()[t->transitions[i]];
      out << describe_config(m, t->configurations[i + 1]) << " via ("
          << display_word(tr.u) << ',' << display_word(tr.v) << ")\n";
    }
  }
  return t ? kOk : kNegative;
}

int cmd_enumerate(const std::string& path, std::size_t max_len,
                  std::ostream& out) {
  const Automaton m = load_automaton(path);
  for (const Word& w : enumerate_language(m, max_len)) {
    out << display_word(w) << '\n';
  }
  return kOk;
}

int cmd_classify(const std::string& path, std::ostream& out) {
  const VariantFlags f = classify(load_automaton(path));
  const std::string flags = f.flag_list();
  if (flags.empty()) {
    out << "(WK)\n";
  } else if (flags.size() == 1) {
    out << flags << '\n';
  } else {
    out << flags << " (" << f.class_name() << ")\n";
  }
  return kOk;
}

int cmd_convert(const std::string& to_grammar, const std::string& to_automaton,
                std::ostream& out) {
  if (!to_grammar.empty()) {
    out << serialize(automaton_to_grammar(load_automaton(to_grammar)));
  } else {
    const LinearGrammar g = parse_grammar(read_text_file(to_automaton));
    out << serialize(grammar_to_automaton(normalize(g)));
  }
  return kOk;
}

int cmd_compare(const std::string& a, const std::string& b,
                std::size_t max_len, std::ostream& out) {
  const Operand x(a);
  const Operand y(b);
  const auto diff = equivalent_up_to(x.language(), y.language(), max_len);
  if (!diff) {
    out << "EQUIV<=" << max_len << '\n';
    return kOk;
  }
  out << "DIFFER " << display_word(*diff) << '\n';
  return kNegative;
}

int cmd_suite(std::size_t max_len, bool lines,
              const std::vector<std::string>& overrides, std::ostream& out) {
  auto corpus = builtin_corpus();
  for (const std::string& o : overrides) {
    const std::size_t eq = o.find('=');
    if (eq == std::string::npos) {
      throw Error("--machine expects <language>=<path>, got `" + o + "`");
    }
    const std::string name = o.substr(0, eq);
    const auto it = std::find_if(corpus.begin(), corpus.end(),
                                 [&](const CorpusEntry& e) { return e.oracle.name == name; });
    if (it == corpus.end()) throw Error("no corpus entry `" + name + "`");
    it->machine = load_automaton(o.substr(eq + 1));
  }
  const SuiteReport report = run_suite(corpus, max_len);
  out << (lines ? report.lines() : report.table());
  return report.passed() ? kOk : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Sensing 5'->3' Watson-Crick automata toolkit", "wkctl"};
  app.require_subcommand(1);

  std::string machine, word, first, second, to_grammar, to_automaton;
  bool with_trace = false, lines = false;
  std::size_t max_len = 10;
  std::vector<std::string> overrides;

  auto* check = app.add_subcommand("check", "Decide membership of a word (`_` is λ)");
  check->add_option("machine", machine, "Machine file")->required();
  check->add_option("word", word, "Input word")->required();
  check->add_flag("--trace", with_trace, "Print an accepting computation");

  auto* enumerate = app.add_subcommand("enumerate", "List accepted words up to a length");
  enumerate->add_option("machine", machine, "Machine file")->required();
  enumerate->add_option("--max-len", max_len, "Length bound")->required();

  auto* classify_cmd = app.add_subcommand("classify", "Print the N/F/S/1 restrictions");
  classify_cmd->add_option("machine", machine, "Machine file")->required();

  auto* convert = app.add_subcommand("convert", "Convert between machines and linear grammars");
  auto* tg = convert->add_option("--to-grammar", to_grammar, "Machine file to convert");
  auto* ta = convert->add_option("--to-automaton", to_automaton, "Grammar file to convert");
  tg->excludes(ta);
  convert->require_option(1);

  auto* compare = app.add_subcommand("compare", "Bounded equivalence of two languages");
  compare->add_option("first", first, "Machine, grammar or oracle:<name>")->required();
  compare->add_option("second", second, "Machine, grammar or oracle:<name>")->required();
  compare->add_option("--max-len", max_len, "Length bound")->required();

  auto* suite = app.add_subcommand("suite", "Run the corpus checks");
  suite->add_option("--max-len", max_len, "Length bound")->capture_default_str();
  suite->add_flag("--lines", lines, "Machine-readable output");
  suite->add_option("--machine", overrides,
                    "Replace a corpus machine: <language>=<machine file>");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (check->parsed()) return cmd_check(machine, word, with_trace, out);
    if (enumerate->parsed()) return cmd_enumerate(machine, max_len, out);
    if (classify_cmd->parsed()) return cmd_classify(machine, out);
    if (convert->parsed()) return cmd_convert(to_grammar, to_automaton, out);
    if (compare->parsed()) return cmd_compare(first, second, max_len, out);
    if (suite->parsed()) return cmd_suite(max_len, lines, overrides, out);
  } catch (const ContractError& e) {
    err << "error: " << e.what() << '\n';
    return kContract;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kUsage;
}

}  // namespace wk::cli
