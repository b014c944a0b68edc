#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "wk/automaton.hpp"
#include "wk/grammar.hpp"
#include "wk/oracles.hpp"
#include "wk/words.hpp"

namespace wk {

// Any language with decidable membership: a machine (either model), a
// grammar or an oracle. Words with foreign symbols are not members. The
// language_of views keep a reference to their argument.
struct Language {
  std::string name;
  Alphabet alphabet;
  std::function<bool(std::string_view)> member;
};

Language language_of(const Automaton& m, std::string name = "machine");
Language language_of(const LinearGrammar& g, std::string name = "grammar");
Language language_of(const LanguageOracle& oracle);

// All accepted words of length <= max_len in shortlex order. New-model
// machines are expanded forward over (state, left-read, right-read);
// legacy machines are tested word by word because the gate depends on the
// target length.
WordSet enumerate_language(const Automaton& m, std::size_t max_len);

// The shortlex-first word of length <= max_len (over the union of both
// alphabets) on which x and y disagree, or nothing.
std::optional<Word> equivalent_up_to(const Language& x, const Language& y,
                                     std::size_t max_len);

std::set<std::size_t> accepted_lengths(const Automaton& m, std::size_t max_len);

// Whether the accepted lengths up to max_len are downward closed. Only
// claimed for all-final 1-limited machines; throws ContractError otherwise.
bool check_lemma1(const Automaton& m, std::size_t max_len);

std::optional<Word> shortest_nonempty_word(const LanguageOracle& oracle,
                                           std::size_t max_len);

// Length of the shortest nonempty word up to max_len, 0 if none. A value of
// 2 or more rules out F1 and N1 machines. Requires max_len >= 1.
std::size_t shortest_word_necessary_condition(const LanguageOracle& oracle,
                                              std::size_t max_len);

}  // namespace wk
