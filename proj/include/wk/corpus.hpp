#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wk/automaton.hpp"
#include "wk/oracles.hpp"
#include "wk/variants.hpp"

namespace wk {

// Why a language is outside some class.
struct Exclusion {
  enum class Evidence {
    // The shortest nonempty word is too long for an F1/N1 machine; checked
    // against the oracle.
    ShortestWord,
    // Holds over all machines of the class; not testable by enumeration.
    Documented,
  };

  std::string variant;  // class name, e.g. "F1"
  Evidence evidence = Evidence::Documented;
  std::size_t expected_shortest = 0;  // ShortestWord only
  std::string note;
};

struct CorpusEntry {
  LanguageOracle oracle;
  Automaton machine;
  VariantFlags declared;
  std::vector<Exclusion> exclusions;
};

// One witness machine per built-in language, in oracle order, each in the
// weakest class that accepts it.
std::vector<CorpusEntry> builtin_corpus();

// Legacy machine with a single loop (a,λ)@inf: the gate forbids consuming the
// last letter, so it accepts only λ while its stripped form accepts a*.
Automaton legacy_witness();

}  // namespace wk
