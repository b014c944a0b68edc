#include "wk/format.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "wk/errors.hpp"

namespace wk {

namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) != 0;
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

// Non-blank lines with comments stripped.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const std::size_t end = text.find('\n');
    std::string_view raw = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    if (const std::size_t hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    raw = trim(raw);
    if (!raw.empty()) lines.push_back({number, raw});
  }
  return lines;
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    const std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

// "key: value" -> (key, value)
std::pair<std::string_view, std::string_view> split_key(const Line& line) {
  const std::size_t colon = line.text.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError(line.number, "expected `key: value`, got `" +
                                      std::string(line.text) + "`");
  }
  return {trim(line.text.substr(0, colon)), trim(line.text.substr(colon + 1))};
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (const char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

bool is_nonterminal_name(std::string_view s) {
  return is_identifier(s) && std::isupper(static_cast<unsigned char>(s[0]));
}

bool is_terminal_run(std::string_view s) {
  if (s.empty()) return false;
  for (const char c : s) {
    if (!is_symbol(c)) return false;
  }
  return true;
}

void expect_header(const std::vector<Line>& lines, std::string_view header) {
  if (lines.empty()) throw ParseError(1, "empty file");
  if (lines.front().text != header) {
    throw ParseError(lines.front().number,
                     "expected header `" + std::string(header) + "`");
  }
}

class Once {
 public:
  explicit Once(const char* key) : key_(key) {}
  void mark(const Line& line) {
    if (seen_) {
      throw ParseError(line.number, std::string("duplicate `") + key_ + "` line");
    }
    seen_ = true;
  }
  bool seen() const { return seen_; }

 private:
  const char* key_;
  bool seen_ = false;
};

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out;
}

}  // namespace

Automaton parse_automaton(std::string_view text) {
  const auto lines = content_lines(text);
  expect_header(lines, "wk-automaton");

  Alphabet alphabet;
  std::vector<std::string> states;
  std::optional<std::pair<std::string, std::size_t>> initial;
  std::vector<std::pair<std::string, std::size_t>> finals;
  struct RawTransition {
    std::size_t line;
    std::string from, to;
    Word u, v;
    std::optional<DistanceLabel> label;
  };
  std::vector<RawTransition> raw;
  std::optional<Model> declared_model;
  Once alphabet_once("alphabet"), states_once("states"),
      initial_once("initial"), final_once("final"), model_once("model");

  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    const auto [key, value] = split_key(line);
    const auto toks = tokens(value);
    if (key == "alphabet") {
      alphabet_once.mark(line);
      for (const auto t : toks) {
        if (t.size() != 1 || !is_symbol(t[0])) {
          throw ParseError(line.number, "symbol `" + std::string(t) +
                                            "` is not a lowercase letter");
        }
        alphabet.insert(t[0]);
      }
    } else if (key == "states") {
      states_once.mark(line);
      for (const auto t : toks) {
        if (!is_identifier(t)) {
          throw ParseError(line.number, "bad state id `" + std::string(t) + "`");
        }
        for (const auto& s : states) {
          if (s == t) {
            throw ParseError(line.number, "duplicate state `" + s + "`");
          }
        }
        states.emplace_back(t);
      }
    } else if (key == "initial") {
      initial_once.mark(line);
      if (toks.size() != 1) {
        throw ParseError(line.number, "expected exactly one initial state");
      }
      initial.emplace(std::string(toks[0]), line.number);
    } else if (key == "final") {
      final_once.mark(line);
      for (const auto t : toks) finals.emplace_back(std::string(t), line.number);
    } else if (key == "model") {
      model_once.mark(line);
      if (value == "legacy") {
        declared_model = Model::Legacy;
      } else if (value == "new") {
        declared_model = Model::New;
      } else {
        throw ParseError(line.number, "model must be `new` or `legacy`");
      }
    } else if (key == "trans") {
      if (toks.size() != 4 && toks.size() != 5) {
        throw ParseError(line.number,
                         "expected `trans: <from> <u> <v> <to> [@<d|inf>]`");
      }
      RawTransition t{line.number, std::string(toks[0]), std::string(toks[3]),
                      parse_word_literal(toks[1]), parse_word_literal(toks[2]),
                      std::nullopt};
      for (const Word* w : {&t.u, &t.v}) {
        for (const char c : *w) {
          if (!alphabet.contains(c)) {
            throw ParseError(line.number, "symbol '" + std::string(1, c) +
                                              "' is not in the alphabet");
          }
        }
      }
      if (toks.size() == 5) {
        const std::string_view label = toks[4];
        if (label.size() < 2 || label[0] != '@') {
          throw ParseError(line.number, "distance label must look like @3 or @inf");
        }
        const std::string_view body = label.substr(1);
        if (body == "inf") {
          t.label = DistanceLabel::infinity();
        } else {
          std::size_t d = 0;
          for (const char c : body) {
            if (!std::isdigit(static_cast<unsigned char>(c))) {
              throw ParseError(line.number, "bad distance label `" +
                                                std::string(label) + "`");
            }
            d = d * 10 + static_cast<std::size_t>(c - '0');
          }
          t.label = DistanceLabel::finite(d);
        }
      }
      raw.push_back(std::move(t));
    } else {
      throw ParseError(line.number, "unknown key `" + std::string(key) + "`");
    }
  }

  const std::size_t last = lines.back().number;
  if (!alphabet_once.seen()) throw ParseError(last, "missing `alphabet` line");
  if (!states_once.seen()) throw ParseError(last, "missing `states` line");
  if (!initial) throw ParseError(last, "missing `initial` line");
  if (!final_once.seen()) throw ParseError(last, "missing `final` line");

  const auto state_index = [&states](const std::string& name,
                                     std::size_t line) -> StateId {
    for (std::size_t i = 0; i < states.size(); ++i) {
      if (states[i] == name) return i;
    }
    throw ParseError(line, "undeclared state `" + name + "`");
  };

  const auto labeled = std::find_if(raw.begin(), raw.end(), [](const RawTransition& t) {
    return t.label.has_value();
  });
  if (declared_model == Model::New && labeled != raw.end()) {
    throw ParseError(labeled->line, "distance label on a new-model machine");
  }
  const bool legacy = labeled != raw.end() || declared_model == Model::Legacy;
  std::size_t r = 0;
  for (const auto& t : raw) r = std::max({r, t.u.size(), t.v.size()});

  std::vector<Transition> ts;
  for (const auto& t : raw) {
    if (legacy && !t.label) {
      throw ParseError(t.line, "legacy machine: every transition needs a distance label");
    }
    if (t.label && !t.label->is_infinite() && t.label->value() > r) {
      throw ParseError(t.line, "distance label exceeds the radius " + std::to_string(r));
    }
    ts.push_back({state_index(t.from, t.line), t.u, t.v, state_index(t.to, t.line),
                  t.label});
  }
  std::vector<StateId> final_ids;
  for (const auto& [name, line] : finals) final_ids.push_back(state_index(name, line));

  try {
    return Automaton(std::move(alphabet), std::move(states),
                     state_index(initial->first, initial->second),
                     std::move(final_ids), std::move(ts),
                     legacy ? Model::Legacy : Model::New);
  } catch (const StructuralError& e) {
    throw ParseError(last, e.what());
  }
}

std::string serialize(const Automaton& m) {
  std::ostringstream out;
  out << "wk-automaton\n";
  std::string alphabet;
  for (const char c : m.alphabet()) {
    if (!alphabet.empty()) alphabet += ' ';
    alphabet += c;
  }
  const auto field = [&out](const char* key, const std::string& value) {
    out << key << ':' << (value.empty() ? "" : " ") << value << '\n';
  };
  field("alphabet", alphabet);
  field("states", join(m.state_names()));
  field("initial", m.state_name(m.initial()));
  std::vector<std::string> finals;
  for (const StateId q : m.finals()) finals.push_back(m.state_name(q));
  field("final", join(finals));
  // Labels mark a legacy machine; without transitions it has to be explicit.
  if (m.model() == Model::Legacy && m.transitions().empty()) {
    field("model", "legacy");
  }
  for (const Transition& t : m.transitions()) {
    out << "trans: " << m.state_name(t.from) << ' ' << display_word(t.u) << ' '
        << display_word(t.v) << ' ' << m.state_name(t.to);
    if (t.distance) out << " @" << t.distance->to_string();
    out << '\n';
  }
  return out.str();
}

LinearGrammar parse_grammar(std::string_view text) {
  const auto lines = content_lines(text);
  expect_header(lines, "linear-grammar");

  std::optional<std::string> start;
  std::optional<Alphabet> declared_terminals;
  std::optional<std::vector<std::string>> declared_nonterminals;
  std::vector<Production> prods;
  std::vector<std::size_t> prod_lines;
  Once start_once("start"), terminals_once("terminals"),
      nonterminals_once("nonterminals");

  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    const auto [key, value] = split_key(line);
    const auto toks = tokens(value);
    if (key == "start") {
      start_once.mark(line);
      if (toks.size() != 1 || !is_nonterminal_name(toks[0])) {
        throw ParseError(line.number, "expected one nonterminal after `start:`");
      }
      start = std::string(toks[0]);
    } else if (key == "terminals") {
      terminals_once.mark(line);
      declared_terminals.emplace();
      for (const auto t : toks) {
        if (t.size() != 1 || !is_symbol(t[0])) {
          throw ParseError(line.number, "terminal `" + std::string(t) +
                                            "` is not a lowercase letter");
        }
        declared_terminals->insert(t[0]);
      }
    } else if (key == "nonterminals") {
      nonterminals_once.mark(line);
      declared_nonterminals.emplace();
      for (const auto t : toks) {
        if (!is_nonterminal_name(t)) {
          throw ParseError(line.number, "bad nonterminal `" + std::string(t) + "`");
        }
        declared_nonterminals->emplace_back(t);
      }
    } else if (key == "prod") {
      if (toks.size() < 3 || toks[1] != "->" || !is_nonterminal_name(toks[0])) {
        throw ParseError(line.number, "expected `prod: <NT> -> <body>`");
      }
      Production p{std::string(toks[0]), {}, std::nullopt, {}};
      if (!(toks.size() == 3 && toks[2] == "_")) {
        for (std::size_t i = 2; i < toks.size(); ++i) {
          const std::string_view t = toks[i];
          if (is_terminal_run(t)) {
            (p.nonterminal ? p.right : p.left) += t;
          } else if (is_nonterminal_name(t)) {
            if (p.nonterminal) {
              throw ParseError(line.number, "production is not linear: more "
                                            "than one nonterminal in the body");
            }
            p.nonterminal = std::string(t);
          } else {
            throw ParseError(line.number, "bad body token `" + std::string(t) + "`");
          }
        }
      }
      prods.push_back(std::move(p));
      prod_lines.push_back(line.number);
    } else {
      throw ParseError(line.number, "unknown key `" + std::string(key) + "`");
    }
  }

  const std::size_t last = lines.back().number;
  if (!start) throw ParseError(last, "missing `start` line");

  if (declared_terminals) {
    for (std::size_t i = 0; i < prods.size(); ++i) {
      for (const char c : prods[i].left + prods[i].right) {
        if (!declared_terminals->contains(c)) {
          throw ParseError(prod_lines[i], "terminal '" + std::string(1, c) +
                                              "' is not declared");
        }
      }
    }
  }
  if (declared_nonterminals) {
    const auto known = [&](const std::string& a) {
      return std::find(declared_nonterminals->begin(),
                       declared_nonterminals->end(),
                       a) != declared_nonterminals->end();
    };
    for (std::size_t i = 0; i < prods.size(); ++i) {
      if (!known(prods[i].head) ||
          (prods[i].nonterminal && !known(*prods[i].nonterminal))) {
        throw ParseError(prod_lines[i], "undeclared nonterminal");
      }
    }
  }

  try {
    if (declared_nonterminals) {
      Alphabet terminals = declared_terminals.value_or(Alphabet{});
      if (!declared_terminals) {
        for (const auto& p : prods) {
          terminals.insert(p.left.begin(), p.left.end());
          terminals.insert(p.right.begin(), p.right.end());
        }
      }
      return LinearGrammar(std::move(*declared_nonterminals), std::move(terminals),
                           std::move(*start), std::move(prods));
    }
    return LinearGrammar::from_productions(std::move(*start), std::move(prods),
                                           declared_terminals.value_or(Alphabet{}));
  } catch (const StructuralError& e) {
    throw ParseError(last, e.what());
  }
}

std::string serialize(const LinearGrammar& g) {
  std::ostringstream out;
  out << "linear-grammar\n";
  out << "start: " << g.start() << '\n';
  std::string terminals;
  for (const char c : g.terminals()) {
    if (!terminals.empty()) terminals += ' ';
    terminals += c;
  }
  out << "terminals:" << (terminals.empty() ? "" : " ") << terminals << '\n';
  out << "nonterminals: " << join(g.nonterminals()) << '\n';
  for (const Production& p : g.productions()) out << "prod: " << p.to_string() << '\n';
  return out.str();
}

FileKind detect_kind(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) return FileKind::Unknown;
  if (lines.front().text == "wk-automaton") return FileKind::Automaton;
  if (lines.front().text == "linear-grammar") return FileKind::Grammar;
  return FileKind::Unknown;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace wk
