#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wk/words.hpp"

namespace wk {

using StateId = std::size_t;

// Sensed head distance of the legacy model: a finite value 0..radius, or
// infinity when the heads are further apart than the radius.
class DistanceLabel {
 public:
  static DistanceLabel finite(std::size_t d) { return DistanceLabel(d); }
  static DistanceLabel infinity() { return DistanceLabel(); }

  bool is_infinite() const noexcept { return !value_.has_value(); }
  // Precondition: !is_infinite().
  std::size_t value() const { return *value_; }

  std::string to_string() const;

  friend bool operator==(const DistanceLabel&, const DistanceLabel&) = default;
  // Finite labels order by value; infinity sorts after every finite label.
  friend std::strong_ordering operator<=>(const DistanceLabel& a,
                                          const DistanceLabel& b);

 private:
  DistanceLabel() = default;
  explicit DistanceLabel(std::size_t d) : value_(d) {}

  std::optional<std::size_t> value_;
};

// One entry of the transition relation: from `from`, the left head reads `u`
// and the right head reads `v`, moving to `to`.
struct Transition {
  StateId from = 0;
  Word u;
  Word v;
  StateId to = 0;
  std::optional<DistanceLabel> distance;

  friend bool operator==(const Transition&, const Transition&) = default;
};

enum class Model { New, Legacy };

// A sensing 5'->3' Watson-Crick automaton. The complementarity relation is
// the identity and is not stored. Immutable after construction.
class Automaton {
 public:
  // Throws StructuralError when an invariant fails. Duplicate transitions
  // are dropped, keeping the first occurrence.
  Automaton(Alphabet alphabet, std::vector<std::string> state_names,
            StateId initial, std::vector<StateId> finals,
            std::vector<Transition> transitions, Model model = Model::New);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t num_states() const noexcept { return state_names_.size(); }
  const std::vector<std::string>& state_names() const noexcept {
    return state_names_;
  }
  const std::string& state_name(StateId q) const { return state_names_.at(q); }
  std::optional<StateId> find_state(std::string_view name) const;

  StateId initial() const noexcept { return initial_; }
  // Sorted, no duplicates.
  const std::vector<StateId>& finals() const noexcept { return finals_; }
  bool is_final(StateId q) const { return is_final_.at(q); }

  const std::vector<Transition>& transitions() const noexcept {
    return transitions_;
  }
  Model model() const noexcept { return model_; }

  friend bool operator==(const Automaton&, const Automaton&) = default;

 private:
  Alphabet alphabet_;
  std::vector<std::string> state_names_;
  StateId initial_;
  std::vector<StateId> finals_;
  std::vector<bool> is_final_;
  std::vector<Transition> transitions_;
  Model model_;
};

// Builds automata by state name; states are numbered in order of first
// mention.
class AutomatonBuilder {
 public:
  AutomatonBuilder& alphabet(std::string_view symbols);
  AutomatonBuilder& state(std::string_view name);
  AutomatonBuilder& initial(std::string_view name);
  AutomatonBuilder& final_state(std::string_view name);
  AutomatonBuilder& transition(std::string_view from, std::string_view u,
                               std::string_view v, std::string_view to,
                               std::optional<DistanceLabel> distance = {});
  AutomatonBuilder& model(Model m);

  Automaton build() const;

 private:
  StateId intern(std::string_view name);

  Alphabet alphabet_;
  std::vector<std::string> names_;
  std::optional<StateId> initial_;
  std::vector<StateId> finals_;
  std::vector<Transition> transitions_;
  Model model_ = Model::New;
};

// The unread infix of a fixed input word w is w[lo, hi).
struct Configuration {
  StateId state = 0;
  std::size_t lo = 0;
  std::size_t hi = 0;

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

// An accepting computation: configurations[0] is the initial configuration,
// transitions[i] (an index into Automaton::transitions) leads from
// configurations[i] to configurations[i + 1].
struct Trace {
  std::vector<Configuration> configurations;
  std::vector<std::size_t> transitions;

  std::size_t steps() const noexcept { return transitions.size(); }
};

// Throws InputError when w has a symbol outside m's alphabet.
void check_word(const Automaton& m, std::string_view w);

// Successors of c under the disjoint-read rule: u must be a prefix and v a
// suffix of the unread infix, with |u| + |v| <= hi - lo. Results are listed in
// transition declaration order without duplicates. Requires a new-model
// machine.
std::vector<Configuration> step_targets(const Automaton& m, std::string_view w,
                                        const Configuration& c);

bool accepts(const Automaton& m, std::string_view w);

// Shortest accepting computation; ties are broken by transition declaration
// order. Empty optional when w is rejected.
std::optional<Trace> trace(const Automaton& m, std::string_view w);

// Longest string read by a single head in one transition.
std::size_t radius(const Automaton& m);

bool has_lambda_moves(const Automaton& m);

// Mirror image: every (u, v) becomes (reverse v, reverse u), so the result
// accepts exactly the reversals of m's words.
Automaton mirrored(const Automaton& m);

}  // namespace wk
