#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wk/automaton.hpp"
#include "wk/words.hpp"

namespace wk {

// A -> u B v (chain form) or A -> u (terminal form).
struct Production {
  std::string head;
  Word left;
  std::optional<std::string> nonterminal;
  Word right;

  static Production chain(std::string head, Word left, std::string body,
                          Word right) {
    return {std::move(head), std::move(left), std::move(body), std::move(right)};
  }
  static Production terminal(std::string head, Word body) {
    return {std::move(head), std::move(body), std::nullopt, {}};
  }

  bool is_terminal() const noexcept { return !nonterminal.has_value(); }
  bool is_unit() const noexcept {
    return nonterminal && left.empty() && right.empty();
  }
  bool is_lambda() const noexcept { return is_terminal() && left.empty(); }
  // A -> aB, A -> Ba or A -> a with a single terminal.
  bool is_normal() const noexcept {
    return left.size() + right.size() == 1 && (nonterminal || right.empty());
  }

  std::string to_string() const;

  friend bool operator==(const Production&, const Production&) = default;
};

class LinearGrammar {
 public:
  // Throws StructuralError if the start symbol or any production refers to an
  // undeclared nonterminal or terminal.
  LinearGrammar(std::vector<std::string> nonterminals, Alphabet terminals,
                std::string start, std::vector<Production> productions);

  // Declares nonterminals (start first, then in order of appearance) and
  // terminals from the productions.
  static LinearGrammar from_productions(std::string start,
                                        std::vector<Production> productions,
                                        Alphabet extra_terminals = {});

  const std::vector<std::string>& nonterminals() const noexcept {
    return nonterminals_;
  }
  const Alphabet& terminals() const noexcept { return terminals_; }
  const std::string& start() const noexcept { return start_; }
  const std::vector<Production>& productions() const noexcept {
    return productions_;
  }

  bool has_nonterminal(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;

  friend bool operator==(const LinearGrammar&, const LinearGrammar&) = default;

 private:
  std::vector<std::string> nonterminals_;
  Alphabet terminals_;
  std::string start_;
  std::vector<Production> productions_;
};

bool is_normal_form(const LinearGrammar& g);

// Rewrites g into the forms A -> aB, A -> Ba, A -> a. Long bodies are split
// through fresh nonterminals (left terminals first, then right), unit
// productions are removed by closure. Throws ContractError on A -> λ.
LinearGrammar normalize(const LinearGrammar& g);

// The 1-limited machine with states N ∪ {q_f}: B ∈ δ(A,u,v) for A -> uBv and
// q_f ∈ δ(A,u,λ) for A -> u. Requires normal form.
Automaton grammar_to_automaton(const LinearGrammar& g);

// Productions p -> u q v for every q ∈ δ(p,u,v), plus p -> uv when q is final.
// Requires a λ-move-free new-model machine. Nonterminals are the state names
// with the first letter capitalised; when q0 is final a fresh start symbol
// with a λ-production is added.
LinearGrammar automaton_to_grammar(const Automaton& m);

// Membership by closure over items (A, i, j) meaning A =>* w[i, j).
bool derives(const LinearGrammar& g, std::string_view w);

// Every derivable word of length <= max_len, in shortlex order.
WordSet generate(const LinearGrammar& g, std::size_t max_len);

}  // namespace wk
