#include "wk/automaton.hpp"

#include <algorithm>

#include "search.hpp"
#include "wk/errors.hpp"

namespace wk {

std::string DistanceLabel::to_string() const {
  return is_infinite() ? std::string("inf") : std::to_string(*value_);
}

std::strong_ordering operator<=>(const DistanceLabel& a,
                                 const DistanceLabel& b) {
  if (a.is_infinite() || b.is_infinite()) {
    return a.is_infinite() <=> b.is_infinite();
  }
  return a.value() <=> b.value();
}

namespace {

void check_symbols(const Alphabet& alphabet, std::string_view s,
                   const std::string& context) {
  for (const char c : s) {
    if (!alphabet.contains(c)) {
      throw StructuralError(context + ": symbol '" + std::string(1, c) +
                            "' is not in the alphabet");
    }
  }
}

}  // namespace

Automaton::Automaton(Alphabet alphabet, std::vector<std::string> state_names,
                     StateId initial, std::vector<StateId> finals,
                     std::vector<Transition> transitions, Model model)
    : alphabet_(std::move(alphabet)),
      state_names_(std::move(state_names)),
      initial_(initial),
      model_(model) {
  for (const char c : alphabet_) {
    if (!is_symbol(c)) {
      throw StructuralError("alphabet symbols must be lowercase letters");
    }
  }
  const std::size_t n = state_names_.size();
  if (n == 0) throw StructuralError("automaton has no states");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (state_names_[i] == state_names_[j]) {
        throw StructuralError("duplicate state '" + state_names_[i] + "'");
      }
    }
  }
  if (initial_ >= n) throw StructuralError("initial state out of range");

  std::sort(finals.begin(), finals.end());
  finals.erase(std::unique(finals.begin(), finals.end()), finals.end());
  is_final_.assign(n, false);
  for (const StateId q : finals) {
    if (q >= n) throw StructuralError("final state out of range");
    is_final_[q] = true;
  }
  finals_ = std::move(finals);

  for (Transition& t : transitions) {
    if (t.from >= n || t.to >= n) {
      throw StructuralError("transition endpoint out of range");
    }
    const std::string context =
        "transition " + state_names_[t.from] + " -> " + state_names_[t.to];
    check_symbols(alphabet_, t.u, context);
    check_symbols(alphabet_, t.v, context);
    if (model_ == Model::New && t.distance) {
      throw StructuralError(context + ": distance label on a new-model machine");
    }
    if (model_ == Model::Legacy && !t.distance) {
      throw StructuralError(context + ": legacy machine needs a distance label");
    }
    if (std::find(transitions_.begin(), transitions_.end(), t) ==
        transitions_.end()) {
      transitions_.push_back(std::move(t));
    }
  }
  if (model_ == Model::Legacy) {
    const std::size_t r = radius(*this);
    for (const Transition& t : transitions_) {
      if (!t.distance->is_infinite() && t.distance->value() > r) {
        throw StructuralError("distance label " + t.distance->to_string() +
                              " exceeds the radius " + std::to_string(r));
      }
    }
  }
}

std::optional<StateId> Automaton::find_state(std::string_view name) const {
  const auto it = std::find(state_names_.begin(), state_names_.end(), name);
  if (it == state_names_.end()) return std::nullopt;
  return static_cast<StateId>(it - state_names_.begin());
}

AutomatonBuilder& AutomatonBuilder::alphabet(std::string_view symbols) {
  alphabet_.insert(symbols.begin(), symbols.end());
  return *this;
}

AutomatonBuilder& AutomatonBuilder::state(std::string_view name) {
  intern(name);
  return *this;
}

AutomatonBuilder& AutomatonBuilder::initial(std::string_view name) {
  initial_ = intern(name);
  return *this;
}

AutomatonBuilder& AutomatonBuilder::final_state(std::string_view name) {
  finals_.push_back(intern(name));
  return *this;
}

AutomatonBuilder& AutomatonBuilder::transition(
    std::string_view from, std::string_view u, std::string_view v,
    std::string_view to, std::optional<DistanceLabel> distance) {
  const StateId f = intern(from);
  const StateId t = intern(to);
  transitions_.push_back({f, Word(u), Word(v), t, distance});
  return *this;
}

AutomatonBuilder& AutomatonBuilder::model(Model m) {
  model_ = m;
  return *this;
}

Automaton AutomatonBuilder::build() const {
  if (!initial_) throw StructuralError("no initial state");
  return Automaton(alphabet_, names_, *initial_, finals_, transitions_, model_);
}

StateId AutomatonBuilder::intern(std::string_view name) {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it != names_.end()) return static_cast<StateId>(it - names_.begin());
  names_.emplace_back(name);
  return names_.size() - 1;
}

void check_word(const Automaton& m, std::string_view w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!m.alphabet().contains(w[i])) {
      throw InputError("symbol '" + std::string(1, w[i]) + "' at position " +
                       std::to_string(i) + " is not in the alphabet");
    }
  }
}

namespace {

void require_new_model(const Automaton& m, const char* op) {
  if (m.model() != Model::New) {
    throw ContractError(std::string(op) + " needs a new-model machine");
  }
}

}  // namespace

std::vector<Configuration> step_targets(const Automaton& m, std::string_view w,
                                        const Configuration& c) {
  require_new_model(m, "step_targets");
  std::vector<Configuration> result;
  for (const Transition& t : m.transitions()) {
    if (t.from != c.state || !detail::reads_fit(t, w, c)) continue;
    const Configuration next = detail::apply(t, c);
    if (std::find(result.begin(), result.end(), next) == result.end()) {
      result.push_back(next);
    }
  }
  return result;
}

bool accepts(const Automaton& m, std::string_view w) {
  return trace(m, w).has_value();
}

std::optional<Trace> trace(const Automaton& m, std::string_view w) {
  require_new_model(m, "accepts");
  check_word(m, w);
  return detail::search(m, w, [](const Transition&, const Configuration&) {
    return true;
  });
}

std::size_t radius(const Automaton& m) {
  std::size_t r = 0;
  for (const Transition& t : m.transitions()) {
    r = std::max({r, t.u.size(), t.v.size()});
  }
  return r;
}

bool has_lambda_moves(const Automaton& m) {
  return std::any_of(m.transitions().begin(), m.transitions().end(),
                     [](const Transition& t) { return t.u.empty() && t.v.empty(); });
}

Automaton mirrored(const Automaton& m) {
  std::vector<Transition> ts;
  ts.reserve(m.transitions().size());
  for (const Transition& t : m.transitions()) {
    ts.push_back({t.from, reversed(t.v), reversed(t.u), t.to, t.distance});
  }
  return Automaton(m.alphabet(), m.state_names(), m.initial(), m.finals(),
                   std::move(ts), m.model());
}

}  // namespace wk
