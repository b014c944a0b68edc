#include "wk/corpus.hpp"

namespace wk {

namespace {

Exclusion shortest(std::string variant, std::size_t length) {
  return {std::move(variant), Exclusion::Evidence::ShortestWord, length,
          "shortest nonempty word has length " + std::to_string(length) +
              "; F1/N1 lengths are downward closed"};
}

Exclusion documented(std::string variant, std::string note) {
  return {std::move(variant), Exclusion::Evidence::Documented, 0,
          std::move(note)};
}

}  // namespace

std::vector<CorpusEntry> builtin_corpus() {
  const auto oracle = [](const char* name) { return *find_oracle(name); };
  std::vector<CorpusEntry> corpus;

  corpus.push_back({oracle("L1"),
                    AutomatonBuilder()
                        .alphabet("ab")
                        .initial("q0")
                        .final_state("q0")
                        .transition("q0", "a", "", "q0")
                        .transition("q0", "", "b", "q0")
                        .build(),
                    VariantFlags::from_name("N1"),
                    {}});

  corpus.push_back({oracle("L2"),
                    AutomatonBuilder()
                        .alphabet("ab")
                        .initial("q0")
                        .final_state("q0")
                        .transition("q0", "aaa", "", "q0")
                        .transition("q0", "", "bb", "q0")
                        .build(),
                    VariantFlags::from_name("NS"),
                    {shortest("N1", 2), shortest("F1", 2)}});

  corpus.push_back(
      {oracle("L3"),
       AutomatonBuilder()
           .alphabet("ab")
           .initial("q0")
           .final_state("q0")
           .transition("q0", "aa", "b", "q0")
           .transition("q0", "a", "bb", "q0")
           .build(),
       VariantFlags::from_name("N"),
       {shortest("N1", 3), shortest("F1", 3),
        documented("NS", "every one-head loop reading aab or abb leaves the "
                         "language when repeated")}});

  const std::string palindrome_note =
      "even palindromes need both heads; no simple machine keeps them apart";
  corpus.push_back({oracle("L4"),
                    AutomatonBuilder()
                        .alphabet("ab")
                        .initial("q0")
                        .final_state("q0")
                        .transition("q0", "a", "a", "q0")
                        .transition("q0", "b", "b", "q0")
                        .build(),
                    VariantFlags::from_name("N"),
                    {documented("N1", palindrome_note),
                     documented("NS", palindrome_note),
                     documented("F1", palindrome_note),
                     documented("FS", palindrome_note)}});

  const std::string single_state_note =
      "w_s = a forces a one-state loop on a, which accepts aa";
  corpus.push_back({oracle("L5"),
                    AutomatonBuilder()
                        .alphabet("ab")
                        .initial("p")
                        .final_state("p")
                        .final_state("q")
                        .transition("p", "a", "", "q")
                        .transition("q", "", "b", "p")
                        .build(),
                    VariantFlags::from_name("F1"),
                    {documented("N1", single_state_note),
                     documented("NS", single_state_note),
                     documented("N", single_state_note)}});

  const std::string counting_note =
      "the block counts must stay balanced, which one state cannot track";
  corpus.push_back({oracle("L6"),
                    AutomatonBuilder()
                        .alphabet("ab")
                        .initial("p")
                        .final_state("p")
                        .final_state("q")
                        .transition("p", "aa", "", "q")
                        .transition("q", "", "bb", "p")
                        .build(),
                    VariantFlags::from_name("FS"),
                    {documented("N1", counting_note),
                     documented("NS", counting_note),
                     documented("N", counting_note), shortest("F1", 2)}});

  const std::string mixed_note =
      "a first one-head step of an all-final machine would accept a word "
      "from a+ or b+";
  corpus.push_back({oracle("L7"),
                    AutomatonBuilder()
                        .alphabet("abc")
                        .initial("p")
                        .final_state("p")
                        .final_state("r")
                        .transition("p", "aa", "b", "p")
                        .transition("p", "a", "bb", "p")
                        .transition("p", "cc", "cc", "r")
                        .build(),
                    VariantFlags::from_name("F"),
                    {documented("N1", mixed_note), documented("NS", mixed_note),
                     documented("N", mixed_note), documented("F1", mixed_note),
                     documented("FS", mixed_note)}});

  const std::string marker_note =
      "an all-final machine would accept the first step's reads, which "
      "already contain both c markers";
  corpus.push_back({oracle("L8"),
                    AutomatonBuilder()
                        .alphabet("abc")
                        .initial("q0")
                        .transition("q0", "a", "bc", "q1")
                        .transition("q1", "a", "b", "q1")
                        .transition("q1", "c", "", "qf")
                        .final_state("qf")
                        .build(),
                    VariantFlags::from_name("WK"),
                    {documented("N1", marker_note), documented("NS", marker_note),
                     documented("N", marker_note), documented("F1", marker_note),
                     documented("FS", marker_note), documented("F", marker_note)}});
  return corpus;
}

Automaton legacy_witness() {
  return AutomatonBuilder()
      .alphabet("a")
      .initial("q0")
      .final_state("q0")
      .transition("q0", "a", "", "q0", DistanceLabel::infinity())
      .model(Model::Legacy)
      .build();
}

}  // namespace wk
