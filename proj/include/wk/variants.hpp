#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wk/automaton.hpp"

namespace wk {

// The restricted versions N (stateless), F (all-final), S (simple: at most
// one head moves per step) and 1 (1-limited: exactly one letter per step).
struct VariantFlags {
  bool stateless = false;
  bool all_final = false;
  bool simple = false;
  bool one_limited = false;

  // Parses a class name such as "N1", "FS", "F" or "WK" (no restriction).
  // Implied flags are added: N brings F, 1 brings S.
  static VariantFlags from_name(std::string_view name);

  // "N1", "NS", "N", "F1", "FS", "F", "S", "1", or "WK" when nothing holds.
  std::string class_name() const;
  // Space separated subset of "N F S 1"; empty when nothing holds.
  std::string flag_list() const;

  // True when every flag set in `other` is also set here.
  bool includes(const VariantFlags& other) const;

  friend bool operator==(const VariantFlags&, const VariantFlags&) = default;
};

VariantFlags classify(const Automaton& m);

struct Violation {
  char flag;  // 'N', 'F', 'S' or '1'
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

// One violation per declared flag that m does not satisfy, naming the first
// offending state or transition.
std::vector<Violation> validate_declared(const Automaton& m,
                                         const VariantFlags& declared);

}  // namespace wk
