#include "wk/testbench.hpp"

#include <deque>
#include <unordered_set>

#include "wk/errors.hpp"
#include "wk/legacy.hpp"
#include "wk/variants.hpp"

namespace wk {

namespace {

bool over(const Alphabet& alphabet, std::string_view w) {
  for (const char c : w) {
    if (!alphabet.contains(c)) return false;
  }
  return true;
}

}  // namespace

Language language_of(const Automaton& m, std::string name) {
  return {std::move(name), m.alphabet(), [&m](std::string_view w) {
            if (!over(m.alphabet(), w)) return false;
            return m.model() == Model::Legacy ? legacy_accepts(m, w)
                                              : accepts(m, w);
          }};
}

Language language_of(const LinearGrammar& g, std::string name) {
  return {std::move(name), g.terminals(), [&g](std::string_view w) {
            return over(g.terminals(), w) && derives(g, w);
          }};
}

Language language_of(const LanguageOracle& oracle) {
  return {oracle.name, oracle.alphabet,
          [&oracle](std::string_view w) { return oracle.contains(w); }};
}

WordSet enumerate_language(const Automaton& m, std::size_t max_len) {
  WordSet words;
  if (m.model() == Model::Legacy) {
    for_each_word(m.alphabet(), max_len, [&](std::string_view w) {
      if (legacy_accepts(m, w)) words.emplace(w);
      return true;
    });
    return words;
  }

  struct Item {
    StateId state;
    Word left;
    Word right;
  };
  const auto encode = [](const Item& it) {
    return std::to_string(it.state) + ':' + it.left + '|' + it.right;
  };
  std::vector<std::vector<const Transition*>> out(m.num_states());
  for (const Transition& t : m.transitions()) out[t.from].push_back(&t);

  std::deque<Item> queue{{m.initial(), {}, {}}};
  std::unordered_set<std::string> seen{encode(queue.front())};
  while (!queue.empty()) {
    const Item it = std::move(queue.front());
    queue.pop_front();
    if (m.is_final(it.state)) words.insert(it.left + it.right);
    const std::size_t used = it.left.size() + it.right.size();
    for (const Transition* t : out[it.state]) {
      if (used + t->u.size() + t->v.size() > max_len) continue;
      Item next{t->to, it.left + t->u, t->v + it.right};
      if (seen.insert(encode(next)).second) queue.push_back(std::move(next));
    }
  }
  return words;
}

std::optional<Word> equivalent_up_to(const Language& x, const Language& y,
                                     std::size_t max_len) {
  Alphabet letters = x.alphabet;
  letters.insert(y.alphabet.begin(), y.alphabet.end());
  std::optional<Word> witness;
  for_each_word(letters, max_len, [&](std::string_view w) {
    if (x.member(w) == y.member(w)) return true;
    witness = Word(w);
    return false;
  });
  return witness;
}

std::set<std::size_t> accepted_lengths(const Automaton& m, std::size_t max_len) {
  std::set<std::size_t> lengths;
  for (const Word& w : enumerate_language(m, max_len)) lengths.insert(w.size());
  return lengths;
}

bool check_lemma1(const Automaton& m, std::size_t max_len) {
  const VariantFlags f = classify(m);
  if (!f.one_limited || !f.all_final) {
    throw ContractError("downward closure of lengths is only claimed for F1/N1 "
                        "machines, got " + f.class_name());
  }
  const auto lengths = accepted_lengths(m, max_len);
  if (lengths.empty()) return true;
  return lengths.size() == *lengths.rbegin() + 1;
}

std::optional<Word> shortest_nonempty_word(const LanguageOracle& oracle,
                                           std::size_t max_len) {
  std::optional<Word> found;
  for_each_word(oracle.alphabet, max_len, [&](std::string_view w) {
    if (w.empty() || !oracle.contains(w)) return true;
    found = Word(w);
    return false;
  });
  return found;
}

std::size_t shortest_word_necessary_condition(const LanguageOracle& oracle,
                                              std::size_t max_len) {
  if (max_len < 1) throw ContractError("max_len must be at least 1");
  const auto w = shortest_nonempty_word(oracle, max_len);
  return w ? w->size() : 0;
}

}  // namespace wk
