#include "wk/grammar.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <unordered_set>

#include "wk/errors.hpp"

namespace wk {

std::string Production::to_string() const {
  std::string body;
  const auto add = [&body](std::string_view token) {
    if (token.empty()) return;
    if (!body.empty()) body += ' ';
    body += token;
  };
  add(left);
  if (nonterminal) add(*nonterminal);
  add(right);
  return head + " -> " + (body.empty() ? std::string("_") : body);
}

LinearGrammar::LinearGrammar(std::vector<std::string> nonterminals,
                             Alphabet terminals, std::string start,
                             std::vector<Production> productions)
    : nonterminals_(std::move(nonterminals)),
      terminals_(std::move(terminals)),
      start_(std::move(start)),
      productions_(std::move(productions)) {
  std::set<std::string_view> seen;
  for (const auto& a : nonterminals_) {
    if (a.empty()) throw StructuralError("empty nonterminal name");
    if (!seen.insert(a).second) {
      throw StructuralError("duplicate nonterminal '" + a + "'");
    }
  }
  for (const char c : terminals_) {
    if (!is_symbol(c)) {
      throw StructuralError("terminals must be lowercase letters");
    }
  }
  if (!has_nonterminal(start_)) {
    throw StructuralError("start symbol '" + start_ + "' is not declared");
  }
  for (const Production& p : productions_) {
    if (!has_nonterminal(p.head) ||
        (p.nonterminal && !has_nonterminal(*p.nonterminal))) {
      throw StructuralError("production " + p.to_string() +
                            " uses an undeclared nonterminal");
    }
    if (p.is_terminal() && !p.right.empty()) {
      throw StructuralError("terminal production " + p.to_string() +
                            " must keep its body in `left`");
    }
    for (const char c : p.left + p.right) {
      if (!terminals_.contains(c)) {
        throw StructuralError("production " + p.to_string() +
                              " uses an undeclared terminal");
      }
    }
  }
}

LinearGrammar LinearGrammar::from_productions(
    std::string start, std::vector<Production> productions,
    Alphabet extra_terminals) {
  std::vector<std::string> names{start};
  const auto declare = [&names](const std::string& a) {
    if (std::find(names.begin(), names.end(), a) == names.end()) {
      names.push_back(a);
    }
  };
  Alphabet terminals = std::move(extra_terminals);
  for (const Production& p : productions) {
    declare(p.head);
    if (p.nonterminal) declare(*p.nonterminal);
    terminals.insert(p.left.begin(), p.left.end());
    terminals.insert(p.right.begin(), p.right.end());
  }
  return LinearGrammar(std::move(names), std::move(terminals),
                       std::move(start), std::move(productions));
}

bool LinearGrammar::has_nonterminal(std::string_view name) const {
  return std::find(nonterminals_.begin(), nonterminals_.end(), name) !=
         nonterminals_.end();
}

std::size_t LinearGrammar::index_of(std::string_view name) const {
  const auto it = std::find(nonterminals_.begin(), nonterminals_.end(), name);
  if (it == nonterminals_.end()) {
    throw StructuralError("unknown nonterminal '" + std::string(name) + "'");
  }
  return static_cast<std::size_t>(it - nonterminals_.begin());
}

bool is_normal_form(const LinearGrammar& g) {
  return std::all_of(g.productions().begin(), g.productions().end(),
                     [](const Production& p) { return p.is_normal(); });
}

namespace {

// Deterministic supply of unused nonterminal names: T..Z, A..S, then the same
// letters with numeric suffixes.
class FreshNames {
 public:
  explicit FreshNames(const std::vector<std::string>& taken)
      : taken_(taken.begin(), taken.end()) {}

  std::string next() {
    static constexpr std::string_view kLetters = "TUVWXYZABCDEFGHIJKLMNOPQRS";
    while (true) {
      std::string name(1, kLetters[counter_ % kLetters.size()]);
      const std::size_t round = counter_ / kLetters.size();
      if (round > 0) name += std::to_string(round);
      ++counter_;
      if (taken_.insert(name).second) return name;
    }
  }

 private:
  std::set<std::string> taken_;
  std::size_t counter_ = 0;
};

void push_unique(std::vector<Production>& out, Production p) {
  if (std::find(out.begin(), out.end(), p) == out.end()) {
    out.push_back(std::move(p));
  }
}

}  // namespace

LinearGrammar normalize(const LinearGrammar& g) {
  for (const Production& p : g.productions()) {
    if (p.is_lambda()) {
      throw ContractError("grammar is not lambda-free: " + p.to_string());
    }
  }

  FreshNames fresh(g.nonterminals());
  std::vector<std::string> names = g.nonterminals();
  const auto new_name = [&]() {
    names.push_back(fresh.next());
    return names.back();
  };

  std::vector<Production> split;
  for (const Production& p : g.productions()) {
    if (p.is_unit() || p.is_normal()) {
      push_unique(split, p);
      continue;
    }
    std::string current = p.head;
    if (p.is_terminal()) {
      for (std::size_t i = 0; i + 1 < p.left.size(); ++i) {
        std::string next = new_name();
        push_unique(split, Production::chain(current, Word(1, p.left[i]), next, {}));
        current = std::move(next);
      }
      push_unique(split, Production::terminal(current, Word(1, p.left.back())));
      continue;
    }
    std::size_t remaining = p.left.size() + p.right.size();
    for (const char c : p.left) {
      if (--remaining == 0) {
        push_unique(split, Production::chain(current, Word(1, c), *p.nonterminal, {}));
      } else {
        std::string next = new_name();
        push_unique(split, Production::chain(current, Word(1, c), next, {}));
        current = std::move(next);
      }
    }
    for (auto it = p.right.rbegin(); it != p.right.rend(); ++it) {
      if (--remaining == 0) {
        push_unique(split, Production::chain(current, {}, *p.nonterminal, Word(1, *it)));
      } else {
        std::string next = new_name();
        push_unique(split, Production::chain(current, {}, next, Word(1, *it)));
        current = std::move(next);
      }
    }
  }

  // reaches[a][b]: a =>* b using unit productions only.
  const std::size_t n = names.size();
  const auto index = [&names](const std::string& a) {
    return static_cast<std::size_t>(
        std::find(names.begin(), names.end(), a) - names.begin());
  };
  std::vector<std::vector<bool>> reaches(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a) reaches[a][a] = true;
  for (const Production& p : split) {
    if (p.is_unit()) reaches[index(p.head)][index(*p.nonterminal)] = true;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t a = 0; a < n; ++a) {
      if (!reaches[a][k]) continue;
      for (std::size_t b = 0; b < n; ++b) {
        if (reaches[k][b]) reaches[a][b] = true;
      }
    }
  }

  std::vector<Production> out;
  for (const Production& p : split) {
    if (p.is_unit()) continue;
    const std::size_t b = index(p.head);
    push_unique(out, p);
    for (std::size_t a = 0; a < n; ++a) {
      if (a == b || !reaches[a][b]) continue;
      Production copy = p;
      copy.head = names[a];
      push_unique(out, std::move(copy));
    }
  }
  return LinearGrammar(std::move(names), g.terminals(), g.start(),
                       std::move(out));
}

Automaton grammar_to_automaton(const LinearGrammar& g) {
  for (const Production& p : g.productions()) {
    if (!p.is_normal()) {
      throw ContractError("production " + p.to_string() +
                          " is not in normal form; normalize first");
    }
  }
  std::vector<std::string> states = g.nonterminals();
  std::string final_name = "q_f";
  for (std::size_t k = 1; g.has_nonterminal(final_name); ++k) {
    final_name = "q_f" + std::to_string(k);
  }
  states.push_back(final_name);
  const StateId qf = states.size() - 1;

  std::vector<Transition> ts;
  for (const Production& p : g.productions()) {
    const StateId from = g.index_of(p.head);
    const StateId to = p.nonterminal ? g.index_of(*p.nonterminal) : qf;
    ts.push_back({from, p.left, p.right, to, std::nullopt});
  }
  return Automaton(g.terminals(), std::move(states), g.index_of(g.start()),
                   {qf}, std::move(ts));
}

LinearGrammar automaton_to_grammar(const Automaton& m) {
  if (m.model() != Model::New) {
    throw ContractError("automaton_to_grammar needs a new-model machine");
  }
  if (has_lambda_moves(m)) {
    throw ContractError(
        "machine has (λ,λ) transitions; eliminate lambda-moves first");
  }

  std::vector<std::string> names;
  for (const std::string& s : m.state_names()) {
    std::string name = s;
    name[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
    while (std::find(names.begin(), names.end(), name) != names.end()) {
      name += '_';
    }
    names.push_back(std::move(name));
  }

  std::vector<Production> prods;
  for (const Transition& t : m.transitions()) {
    push_unique(prods, Production::chain(names[t.from], t.u, names[t.to], t.v));
    if (m.is_final(t.to)) {
      push_unique(prods, Production::terminal(names[t.from], t.u + t.v));
    }
  }

  std::string start = names[m.initial()];
  if (m.is_final(m.initial())) {
    std::string fresh = "S";
    while (std::find(names.begin(), names.end(), fresh) != names.end()) {
      fresh += '_';
    }
    std::vector<Production> with_start{Production::terminal(fresh, {})};
    for (const Production& p : prods) {
      if (p.head != start) continue;
      Production copy = p;
      copy.head = fresh;
      with_start.push_back(std::move(copy));
    }
    with_start.insert(with_start.end(), prods.begin(), prods.end());
    prods = std::move(with_start);
    names.insert(names.begin(), fresh);
    start = std::move(fresh);
  }
  return LinearGrammar(std::move(names), m.alphabet(), std::move(start),
                       std::move(prods));
}

bool derives(const LinearGrammar& g, std::string_view w) {
  const std::size_t n = w.size();
  const std::size_t count = g.nonterminals().size();
  const std::size_t width = n + 1;
  std::vector<bool> known(count * width * width, false);
  const auto slot = [&](std::size_t a, std::size_t i, std::size_t j) {
    return (a * width + i) * width + j;
  };

  struct Item {
    std::size_t nt, i, j;
  };
  std::vector<Item> work;
  const auto add = [&](std::size_t a, std::size_t i, std::size_t j) {
    if (known[slot(a, i, j)]) return;
    known[slot(a, i, j)] = true;
    work.push_back({a, i, j});
  };

  std::vector<std::vector<const Production*>> users(count);
  for (const Production& p : g.productions()) {
    const std::size_t a = g.index_of(p.head);
    if (p.nonterminal) {
      users[g.index_of(*p.nonterminal)].push_back(&p);
      continue;
    }
    const std::size_t len = p.left.size();
    for (std::size_t i = 0; i + len <= n; ++i) {
      if (w.substr(i, len) == p.left) add(a, i, i + len);
    }
  }

  while (!work.empty()) {
    const Item item = work.back();
    work.pop_back();
    for (const Production* p : users[item.nt]) {
      const std::size_t ul = p->left.size();
      const std::size_t vl = p->right.size();
      if (ul > item.i || item.j + vl > n) continue;
      if (w.substr(item.i - ul, ul) != p->left) continue;
      if (w.substr(item.j, vl) != p->right) continue;
      add(g.index_of(p->head), item.i - ul, item.j + vl);
    }
  }
  return known[slot(g.index_of(g.start()), 0, n)];
}

WordSet generate(const LinearGrammar& g, std::size_t max_len) {
  const std::size_t count = g.nonterminals().size();
  std::vector<std::vector<const Production*>> by_head(count);
  for (const Production& p : g.productions()) {
    by_head[g.index_of(p.head)].push_back(&p);
  }

  struct Form {
    Word prefix;
    std::size_t nt;
    Word suffix;
  };
  const auto encode = [](const Form& f) {
    return std::to_string(f.nt) + ':' + f.prefix + '|' + f.suffix;
  };

  WordSet words;
  std::deque<Form> queue{{{}, g.index_of(g.start()), {}}};
  std::unordered_set<std::string> seen{encode(queue.front())};
  while (!queue.empty()) {
    const Form f = std::move(queue.front());
    queue.pop_front();
    const std::size_t used = f.prefix.size() + f.suffix.size();
    for (const Production* p : by_head[f.nt]) {
      if (used + p->left.size() + p->right.size() > max_len) continue;
      if (p->is_terminal()) {
        words.insert(f.prefix + p->left + f.suffix);
        continue;
      }
      Form next{f.prefix + p->left, g.index_of(*p->nonterminal),
                p->right + f.suffix};
      if (seen.insert(encode(next)).second) queue.push_back(std::move(next));
    }
  }
  return words;
}

}  // namespace wk
