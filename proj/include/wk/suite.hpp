#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wk/corpus.hpp"
#include "wk/words.hpp"

namespace wk {

enum class CellStatus { Pass, Fail, Documented };

const char* to_string(CellStatus s);

struct SuiteCell {
  std::string id;
  CellStatus status = CellStatus::Pass;
  std::optional<Word> witness;  // set on failures that have a word
  std::string detail;
};

struct SuiteReport {
  std::size_t max_len = 0;
  std::vector<SuiteCell> cells;

  // No cell failed; documented cells do not count against the suite.
  bool passed() const;
  const SuiteCell* find(std::string_view id) const;

  // Aligned columns: cell id, status, witness, detail; then a summary line.
  std::string table() const;
  // One `cell=<id> status=<pass|fail|documented> witness=<word|->` per cell.
  std::string lines() const;
};

// Cells are evaluated in corpus order:
//   <L>/variant       declared class matches classify
//   <L>/equiv         machine agrees with the oracle on words <= max_len
//   <L>/lemma1        F1/N1 machines only: accepted lengths downward closed
//   <L>/legacy-embed  lifted machine agrees with the original (<= min(8, max_len))
//   <L>/not-<class>   exclusions; ShortestWord ones need max_len >= the length
//   legacy/gate       the legacy witness differs from its stripped form
//                     on a word of length <= 3 (needs max_len >= 1)
SuiteReport run_suite(const std::vector<CorpusEntry>& corpus,
                      std::size_t max_len);
SuiteReport run_suite(std::size_t max_len);

}  // namespace wk
