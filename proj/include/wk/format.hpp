#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "wk/automaton.hpp"
#include "wk/grammar.hpp"

namespace wk {

// Machine files:
//
//   wk-automaton
//   alphabet: a b
//   states: q0 q1
//   initial: q0
//   final: q1
//   trans: q0 a _ q1 [@<d|inf>]
//
// `_` is λ. Any `@` label makes the machine legacy, and then every transition
// needs one. An optional `model: <new|legacy>` line states the model
// explicitly; it is only written for legacy machines without transitions.
// Blank lines and `#` comments are ignored.
Automaton parse_automaton(std::string_view text);
std::string serialize(const Automaton& m);

// Grammar files:
//
//   linear-grammar
//   start: S
//   terminals: a b        (optional)
//   nonterminals: S T     (optional)
//   prod: S -> a T b
//   prod: T -> _
//
// Body tokens are runs of lowercase terminals and at most one nonterminal
// (an identifier starting with an uppercase letter).
LinearGrammar parse_grammar(std::string_view text);
std::string serialize(const LinearGrammar& g);

enum class FileKind { Automaton, Grammar, Unknown };

// Looks at the header line only.
FileKind detect_kind(std::string_view text);

// Throws Error when the file cannot be read.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace wk
