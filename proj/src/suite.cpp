#include "wk/suite.hpp"

#include <algorithm>
#include <sstream>

#include "wk/legacy.hpp"
#include "wk/testbench.hpp"
#include "wk/variants.hpp"

namespace wk {

const char* to_string(CellStatus s) {
  switch (s) {
    case CellStatus::Pass: return "pass";
    case CellStatus::Fail: return "fail";
    case CellStatus::Documented: return "documented";
  }
  return "?";
}

bool SuiteReport::passed() const {
  return std::none_of(cells.begin(), cells.end(), [](const SuiteCell& c) {
    return c.status == CellStatus::Fail;
  });
}

const SuiteCell* SuiteReport::find(std::string_view id) const {
  for (const SuiteCell& c : cells) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

namespace {

std::string witness_text(const SuiteCell& c) {
  return c.witness ? display_word(*c.witness) : std::string("-");
}

SuiteCell verdict(std::string id, bool ok, std::string detail,
                  std::optional<Word> witness = {}) {
  return {std::move(id), ok ? CellStatus::Pass : CellStatus::Fail,
          ok ? std::nullopt : std::move(witness), std::move(detail)};
}

SuiteCell variant_cell(const CorpusEntry& e) {
  const std::string id = e.oracle.name + "/variant";
  const auto violations = validate_declared(e.machine, e.declared);
  const VariantFlags actual = classify(e.machine);
  if (!violations.empty()) {
    return verdict(id, false, violations.front().message);
  }
  if (actual != e.declared) {
    return verdict(id, false, "declared " + e.declared.class_name() +
                                  " but classified " + actual.class_name());
  }
  return verdict(id, true, actual.class_name());
}

SuiteCell equiv_cell(const CorpusEntry& e, std::size_t max_len) {
  const auto diff = equivalent_up_to(language_of(e.machine),
                                     language_of(e.oracle), max_len);
  return verdict(e.oracle.name + "/equiv", !diff,
                 diff ? "machine and oracle disagree"
                      : "agree up to length " + std::to_string(max_len),
                 diff);
}

SuiteCell lemma1_cell(const CorpusEntry& e, std::size_t max_len) {
  const VariantFlags f = classify(e.machine);
  if (!f.one_limited || !f.all_final) {
    return verdict(e.oracle.name + "/lemma1", false,
                   "machine is " + f.class_name() + ", not F1/N1");
  }
  const auto lengths = accepted_lengths(e.machine, max_len);
  const bool ok = check_lemma1(e.machine, max_len);
  std::string detail = ok ? "lengths downward closed" : "gap in lengths:";
  if (!ok) {
    for (const std::size_t l : lengths) detail += ' ' + std::to_string(l);
  }
  return verdict(e.oracle.name + "/lemma1", ok, detail);
}

SuiteCell legacy_embed_cell(const CorpusEntry& e, std::size_t max_len) {
  if (e.machine.model() != Model::New) {
    return verdict(e.oracle.name + "/legacy-embed", false,
                   "corpus machine is not a new-model machine");
  }
  const Automaton lifted = lift_to_legacy(e.machine);
  const auto diff = equivalent_up_to(language_of(lifted, "lifted"),
                                     language_of(e.machine),
                                     std::min<std::size_t>(max_len, 8));
  return verdict(e.oracle.name + "/legacy-embed", !diff,
                 diff ? "lifted machine disagrees" : "gated semantics agree",
                 diff);
}

std::optional<SuiteCell> exclusion_cell(const CorpusEntry& e,
                                        const Exclusion& x,
                                        std::size_t max_len) {
  const std::string id = e.oracle.name + "/not-" + x.variant;
  if (x.evidence == Exclusion::Evidence::Documented) {
    return SuiteCell{id, CellStatus::Documented, std::nullopt, x.note};
  }
  if (max_len < x.expected_shortest) return std::nullopt;
  const auto w = shortest_nonempty_word(e.oracle, max_len);
  const bool ok = w && w->size() == x.expected_shortest && w->size() >= 2;
  return verdict(id, ok,
                 w ? "shortest nonempty word " + *w : "no nonempty word found",
                 w);
}

SuiteCell legacy_gate_cell(std::size_t max_len) {
  const Automaton gated = legacy_witness();
  const Automaton stripped = strip_labels(gated);
  const auto diff = equivalent_up_to(language_of(gated, "gated"),
                                     language_of(stripped, "stripped"),
                                     std::min<std::size_t>(max_len, 3));
  SuiteCell c = verdict("legacy/gate", diff.has_value(),
                        diff ? "gate changes membership of " + display_word(*diff)
                             : "no difference found");
  return c;
}

}  // namespace

SuiteReport run_suite(const std::vector<CorpusEntry>& corpus,
                      std::size_t max_len) {
  SuiteReport report;
  report.max_len = max_len;
  for (const CorpusEntry& e : corpus) {
    report.cells.push_back(variant_cell(e));
    report.cells.push_back(equiv_cell(e, max_len));
    if (e.declared.one_limited && e.declared.all_final) {
      report.cells.push_back(lemma1_cell(e, max_len));
    }
    report.cells.push_back(legacy_embed_cell(e, max_len));
    for (const Exclusion& x : e.exclusions) {
      if (auto c = exclusion_cell(e, x, max_len)) {
        report.cells.push_back(std::move(*c));
      }
    }
  }
  if (max_len >= 1) report.cells.push_back(legacy_gate_cell(max_len));
  return report;
}

SuiteReport run_suite(std::size_t max_len) {
  return run_suite(builtin_corpus(), max_len);
}

std::string SuiteReport::table() const {
  std::size_t id_width = 4;
  std::size_t witness_width = 7;
  for (const SuiteCell& c : cells) {
    id_width = std::max(id_width, c.id.size());
    witness_width = std::max(witness_width, witness_text(c).size());
  }
  const auto pad = [](std::string s, std::size_t width) {
    s.resize(std::max(width, s.size()), ' ');
    return s;
  };

  std::ostringstream out;
  out << pad("cell", id_width) << "  " << pad("status", 10) << "  "
      << pad("witness", witness_width) << "  detail\n";
  std::size_t pass = 0, fail = 0, documented = 0;
  for (const SuiteCell& c : cells) {
    out << pad(c.id, id_width) << "  " << pad(to_string(c.status), 10) << "  "
        << pad(witness_text(c), witness_width) << "  " << c.detail << '\n';
    switch (c.status) {
      case CellStatus::Pass: ++pass; break;
      case CellStatus::Fail: ++fail; break;
      case CellStatus::Documented: ++documented; break;
    }
  }
  out << "max-len " << max_len << ": " << cells.size() << " cells, " << pass
      << " pass, " << fail << " fail, " << documented << " documented\n";
  return out.str();
}

std::string SuiteReport::lines() const {
  std::ostringstream out;
  for (const SuiteCell& c : cells) {
    out << "cell=" << c.id << " status=" << to_string(c.status)
        << " witness=" << witness_text(c) << '\n';
  }
  return out.str();
}

}  // namespace wk
