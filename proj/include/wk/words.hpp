#pragma once

#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace wk {

using Symbol = char;
using Word = std::string;
using Alphabet = std::set<Symbol>;

// Shortlex: shorter words first, equal lengths compared lexicographically.
struct LengthLexLess {
  bool operator()(std::string_view a, std::string_view b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using WordSet = std::set<Word, LengthLexLess>;

// Calls visit(w) for every word over `alphabet` with |w| <= max_len, in
// shortlex order. Stops early and returns false as soon as visit returns false.
bool for_each_word(const Alphabet& alphabet, std::size_t max_len,
                   const std::function<bool(std::string_view)>& visit);

// λ is written as "_" on the command line and in files.
std::string display_word(std::string_view w);
Word parse_word_literal(std::string_view text);

bool is_symbol(char c);

std::string reversed(std::string_view w);

}  // namespace wk
