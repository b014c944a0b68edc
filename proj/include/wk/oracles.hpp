#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wk/words.hpp"

namespace wk {

// A decidable language given by a membership predicate.
struct LanguageOracle {
  std::string name;
  Alphabet alphabet;
  std::string description;
  std::function<bool(std::string_view)> predicate;

  // False for words with symbols outside the alphabet.
  bool contains(std::string_view w) const;
};

// L1 = a^n b^m
// L2 = a^3n b^2m
// L3 = a^(2n+m) b^(2m+n)
// L4 = w w^R over {a,b}
// L5 = a^n b^m, n = m or n = m+1
// L6 = (aa)^n (bb)^m, m <= n <= m+1
// L7 = a^(2n+q) c^4m b^(2q+n), m in {0,1}
// L8 = a^n c b^n c, n >= 1
const std::vector<LanguageOracle>& builtin_oracles();

// Null when no oracle has that name.
const LanguageOracle* find_oracle(std::string_view name);

}  // namespace wk
