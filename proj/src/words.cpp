#include "wk/words.hpp"

#include <vector>

namespace wk {

bool for_each_word(const Alphabet& alphabet, std::size_t max_len,
                   const std::function<bool(std::string_view)>& visit) {
  const std::vector<Symbol> letters(alphabet.begin(), alphabet.end());
  if (!visit({})) return false;
  if (letters.empty()) return true;
  for (std::size_t len = 1; len <= max_len; ++len) {
    // Odometer over letter indices; most significant digit first so the
    // visiting order is lexicographic within a length.
    std::vector<std::size_t> digits(len, 0);
    Word w(len, letters.front());
    while (true) {
      if (!visit(w)) return false;
      std::size_t pos = len;
      while (pos > 0 && digits[pos - 1] + 1 == letters.size()) {
        --pos;
        digits[pos] = 0;
        w[pos] = letters.front();
      }
      if (pos == 0) break;
      --pos;
      w[pos] = letters[++digits[pos]];
    }
  }
  return true;
}

std::string display_word(std::string_view w) {
  return w.empty() ? std::string("_") : std::string(w);
}

Word parse_word_literal(std::string_view text) {
  if (text == "_") return {};
  return Word(text);
}

bool is_symbol(char c) { return c >= 'a' && c <= 'z'; }

std::string reversed(std::string_view w) { return {w.rbegin(), w.rend()}; }

}  // namespace wk
