#pragma once

// Test-only oracles and generators. Nothing here calls the search, the
// enumerator or the grammar DP under test.

#include <random>
#include <set>
#include <string>
#include <vector>

#include "wk/automaton.hpp"
#include "wk/grammar.hpp"

namespace wk::test {

inline Automaton a_ab() {
  return AutomatonBuilder()
      .alphabet("ab")
      .initial("q0")
      .final_state("q0")
      .transition("q0", "a", "", "q0")
      .transition("q0", "", "b", "q0")
      .build();
}

// Stateless simple machine: loops (aaa,λ) and (λ,bb).
inline Automaton ns_a3b2() {
  return AutomatonBuilder()
      .alphabet("ab")
      .initial("q0")
      .final_state("q0")
      .transition("q0", "aaa", "", "q0")
      .transition("q0", "", "bb", "q0")
      .build();
}

inline Automaton empty_machine(bool initial_final) {
  AutomatonBuilder b;
  b.alphabet("ab").initial("q0");
  if (initial_final) b.final_state("q0");
  return b.build();
}

// Expands every computation tree path of a λ-move-free machine whose reads
// total at most `bound` letters. No memoisation.
inline void expand_paths(const Automaton& m, StateId q, const std::string& left,
                         const std::string& right, std::size_t bound,
                         std::set<std::string>& out) {
  if (m.is_final(q)) out.insert(left + right);
  for (const Transition& t : m.transitions()) {
    if (t.from != q || (t.u.empty() && t.v.empty())) continue;
    if (left.size() + right.size() + t.u.size() + t.v.size() > bound) continue;
    expand_paths(m, t.to, left + t.u, t.v + right, bound, out);
  }
}

inline std::set<std::string> brute_force_language(const Automaton& m,
                                                  std::size_t bound) {
  std::set<std::string> out;
  expand_paths(m, m.initial(), "", "", bound, out);
  return out;
}

inline std::string rep(char c, std::size_t n) { return std::string(n, c); }

// Generates the built-in languages from their parameters, up to `bound`.
inline std::set<std::string> generate_by_parameters(const std::string& name,
                                                    std::size_t bound) {
  std::set<std::string> out;
  const auto keep = [&](const std::string& w) {
    if (w.size() <= bound) out.insert(w);
  };
  const std::size_t k = bound + 1;
  if (name == "L1") {
    for (std::size_t n = 0; n < k; ++n)
      for (std::size_t m = 0; m < k; ++m) keep(rep('a', n) + rep('b', m));
  } else if (name == "L2") {
    for (std::size_t n = 0; n < k; ++n)
      for (std::size_t m = 0; m < k; ++m) keep(rep('a', 3 * n) + rep('b', 2 * m));
  } else if (name == "L3") {
    for (std::size_t n = 0; n < k; ++n)
      for (std::size_t m = 0; m < k; ++m)
        keep(rep('a', 2 * n + m) + rep('b', 2 * m + n));
  } else if (name == "L4") {
    for (std::size_t len = 0; 2 * len <= bound; ++len) {
      for (std::size_t bits = 0; bits < (std::size_t{1} << len); ++bits) {
        std::string w;
        for (std::size_t i = 0; i < len; ++i) w += (bits >> i & 1) ? 'b' : 'a';
        keep(w + std::string(w.rbegin(), w.rend()));
      }
    }
  } else if (name == "L5") {
    for (std::size_t m = 0; m < k; ++m) {
      keep(rep('a', m) + rep('b', m));
      keep(rep('a', m + 1) + rep('b', m));
    }
  } else if (name == "L6") {
    for (std::size_t m = 0; m < k; ++m) {
      keep(rep('a', 2 * m) + rep('b', 2 * m));
      keep(rep('a', 2 * m + 2) + rep('b', 2 * m));
    }
  } else if (name == "L7") {
    for (std::size_t n = 0; n < k; ++n)
      for (std::size_t q = 0; q < k; ++q)
        for (std::size_t m = 0; m < 2; ++m)
          keep(rep('a', 2 * n + q) + rep('c', 4 * m) + rep('b', 2 * q + n));
  } else if (name == "L8") {
    for (std::size_t n = 1; n < k; ++n) keep(rep('a', n) + "c" + rep('b', n) + "c");
  }
  return out;
}

// Random normal-form grammar: up to 5 nonterminals, up to 10 productions,
// terminals drawn from the first `letters` of {a,b,c}.
inline LinearGrammar random_normal_grammar(std::mt19937& rng,
                                           std::size_t letters = 3) {
  std::uniform_int_distribution<std::size_t> nt_count(1, 5);
  std::uniform_int_distribution<std::size_t> prod_count(1, 10);
  const std::size_t n = nt_count(rng);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(i == 0 ? "S" : "N" + std::to_string(i));
  std::uniform_int_distribution<std::size_t> pick_nt(0, n - 1);
  std::uniform_int_distribution<std::size_t> pick_letter(0, letters - 1);
  std::uniform_int_distribution<int> shape(0, 2);

  std::vector<Production> prods;
  const std::size_t count = prod_count(rng);
  for (std::size_t i = 0; i < count; ++i) {
    const std::string head = names[pick_nt(rng)];
    const Word a(1, static_cast<char>('a' + pick_letter(rng)));
    switch (shape(rng)) {
      case 0: prods.push_back(Production::chain(head, a, names[pick_nt(rng)], {})); break;
      case 1: prods.push_back(Production::chain(head, {}, names[pick_nt(rng)], a)); break;
      default: prods.push_back(Production::terminal(head, a)); break;
    }
  }
  Alphabet terminals;
  for (std::size_t i = 0; i < letters; ++i) terminals.insert(static_cast<char>('a' + i));
  return LinearGrammar(names, terminals, "S", prods);
}

// Random λ-move-free new-model machine over {a,b}.
inline Automaton random_machine(std::mt19937& rng, std::size_t max_states = 3,
                                std::size_t max_transitions = 5,
                                std::size_t max_read = 2) {
  std::uniform_int_distribution<std::size_t> states(1, max_states);
  std::uniform_int_distribution<std::size_t> tcount(0, max_transitions);
  std::uniform_int_distribution<std::size_t> len(0, max_read);
  std::uniform_int_distribution<int> coin(0, 1);
  const std::size_t n = states(rng);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);

  std::vector<std::string> names;
  std::vector<StateId> finals;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("q" + std::to_string(i));
    if (coin(rng)) finals.push_back(i);
  }
  const auto word = [&](std::size_t l) {
    Word w;
    for (std::size_t i = 0; i < l; ++i) w += coin(rng) ? 'a' : 'b';
    return w;
  };
  std::vector<Transition> ts;
  const std::size_t count = tcount(rng);
  for (std::size_t i = 0; i < count; ++i) {
    Word u = word(len(rng));
    Word v = word(len(rng));
    if (u.empty() && v.empty()) u = word(1);
    ts.push_back({pick(rng), u, v, pick(rng), std::nullopt});
  }
  return Automaton({'a', 'b'}, names, pick(rng), finals, ts);
}

}  // namespace wk::test
