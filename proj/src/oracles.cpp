#include "wk/oracles.hpp"

#include <algorithm>

namespace wk {

bool LanguageOracle::contains(std::string_view w) const {
  for (const char c : w) {
    if (!alphabet.contains(c)) return false;
  }
  return predicate(w);
}

namespace {

// Length of the maximal run of `c` starting at `pos`.
std::size_t run(std::string_view w, std::size_t pos, char c) {
  std::size_t end = pos;
  while (end < w.size() && w[end] == c) ++end;
  return end - pos;
}

struct Blocks {
  std::size_t a = 0;
  std::size_t b = 0;
};

// w = a^x b^y
std::optional<Blocks> split_ab(std::string_view w) {
  const std::size_t x = run(w, 0, 'a');
  const std::size_t y = run(w, x, 'b');
  if (x + y != w.size()) return std::nullopt;
  return Blocks{x, y};
}

// x = 2n + m and y = 2m + n for some n, m >= 0.
bool balanced_mix(std::size_t x, std::size_t y) {
  const auto sx = static_cast<long long>(x);
  const auto sy = static_cast<long long>(y);
  const long long three_n = 2 * sx - sy;
  const long long three_m = 2 * sy - sx;
  return three_n >= 0 && three_m >= 0 && three_n % 3 == 0 && three_m % 3 == 0;
}

bool l1(std::string_view w) { return split_ab(w).has_value(); }

bool l2(std::string_view w) {
  const auto s = split_ab(w);
  return s && s->a % 3 == 0 && s->b % 2 == 0;
}

bool l3(std::string_view w) {
  const auto s = split_ab(w);
  return s && balanced_mix(s->a, s->b);
}

bool l4(std::string_view w) {
  if (w.size() % 2 != 0) return false;
  if (!std::all_of(w.begin(), w.end(), [](char c) { return c == 'a' || c == 'b'; })) {
    return false;
  }
  return std::equal(w.begin(), w.begin() + static_cast<long>(w.size() / 2),
                    w.rbegin());
}

bool l5(std::string_view w) {
  const auto s = split_ab(w);
  return s && (s->a == s->b || s->a == s->b + 1);
}

bool l6(std::string_view w) {
  const auto s = split_ab(w);
  if (!s || s->a % 2 != 0 || s->b % 2 != 0) return false;
  const std::size_t n = s->a / 2;
  const std::size_t m = s->b / 2;
  return m <= n && n <= m + 1;
}

bool l7(std::string_view w) {
  const std::size_t x = run(w, 0, 'a');
  const std::size_t z = run(w, x, 'c');
  const std::size_t y = run(w, x + z, 'b');
  if (x + z + y != w.size()) return false;
  return (z == 0 || z == 4) && balanced_mix(x, y);
}

bool l8(std::string_view w) {
  const std::size_t n = run(w, 0, 'a');
  if (n == 0 || w.size() != 2 * n + 2) return false;
  return w[n] == 'c' && run(w, n + 1, 'b') == n && w.back() == 'c';
}

}  // namespace

const std::vector<LanguageOracle>& builtin_oracles() {
  static const std::vector<LanguageOracle> oracles{
      {"L1", {'a', 'b'}, "a^n b^m | n,m >= 0", l1},
      {"L2", {'a', 'b'}, "a^3n b^2m | n,m >= 0", l2},
      {"L3", {'a', 'b'}, "a^(2n+m) b^(2m+n) | n,m >= 0", l3},
      {"L4", {'a', 'b'}, "w w^R | w in {a,b}*", l4},
      {"L5", {'a', 'b'}, "a^n b^m | n = m or n = m+1", l5},
      {"L6", {'a', 'b'}, "(aa)^n (bb)^m | m <= n <= m+1", l6},
      {"L7", {'a', 'b', 'c'}, "a^(2n+q) c^4m b^(2q+n) | n,q >= 0, m in {0,1}", l7},
      {"L8", {'a', 'b', 'c'}, "a^n c b^n c | n >= 1", l8},
  };
  return oracles;
}

const LanguageOracle* find_oracle(std::string_view name) {
  for (const LanguageOracle& o : builtin_oracles()) {
    if (o.name == name) return &o;
  }
  return nullptr;
}

}  // namespace wk
