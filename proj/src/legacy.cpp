#include "wk/legacy.hpp"

#include "search.hpp"
#include "wk/errors.hpp"

namespace wk {

DistanceLabel sensed_distance(std::size_t unread_len, std::size_t r) {
  return unread_len <= r ? DistanceLabel::finite(unread_len)
                         : DistanceLabel::infinity();
}

bool legacy_accepts(const Automaton& m, std::string_view w) {
  for (const Transition& t : m.transitions()) {
    if (!t.distance) {
      throw StructuralError("transition from '" + m.state_name(t.from) +
                            "' has no distance label");
    }
  }
  check_word(m, w);
  const std::size_t r = radius(m);
  return detail::search(m, w, [r](const Transition& t, const Configuration& c) {
           return *t.distance == sensed_distance(c.hi - c.lo, r);
         }).has_value();
}

Automaton lift_to_legacy(const Automaton& m) {
  if (m.model() != Model::New) {
    throw ContractError("lift_to_legacy needs a new-model machine");
  }
  const std::size_t r = radius(m);
  std::vector<Transition> ts;
  ts.reserve(m.transitions().size() * (r + 2));
  for (const Transition& t : m.transitions()) {
    for (std::size_t d = 0; d <= r; ++d) {
      ts.push_back({t.from, t.u, t.v, t.to, DistanceLabel::finite(d)});
    }
    ts.push_back({t.from, t.u, t.v, t.to, DistanceLabel::infinity()});
  }
  return Automaton(m.alphabet(), m.state_names(), m.initial(), m.finals(),
                   std::move(ts), Model::Legacy);
}

Automaton strip_labels(const Automaton& m) {
  std::vector<Transition> ts = m.transitions();
  for (Transition& t : ts) t.distance.reset();
  return Automaton(m.alphabet(), m.state_names(), m.initial(), m.finals(),
                   std::move(ts), Model::New);
}

}  // namespace wk
