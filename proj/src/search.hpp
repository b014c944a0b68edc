#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "wk/automaton.hpp"

namespace wk::detail {

inline bool reads_fit(const Transition& t, std::string_view w,
                      const Configuration& c) {
  const std::size_t unread = c.hi - c.lo;
  if (t.u.size() + t.v.size() > unread) return false;
  return w.substr(c.lo, t.u.size()) == t.u &&
         w.substr(c.hi - t.v.size(), t.v.size()) == t.v;
}

inline Configuration apply(const Transition& t, const Configuration& c) {
  return {t.to, c.lo + t.u.size(), c.hi - t.v.size()};
}

inline std::vector<std::vector<std::size_t>> outgoing(const Automaton& m) {
  std::vector<std::vector<std::size_t>> out(m.num_states());
  const auto& ts = m.transitions();
  for (std::size_t i = 0; i < ts.size(); ++i) out[ts[i].from].push_back(i);
  return out;
}

// Breadth-first search over configurations of w. `gate(t, c)` may veto a
// transition whose reads fit; the new model passes a gate that always says
// yes. Returns the first accepting configuration's trace in BFS discovery
// order, which is shortest with ties broken by declaration order.
template <class Gate>
std::optional<Trace> search(const Automaton& m, std::string_view w,
                            Gate&& gate) {
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  const std::uint64_t width = w.size() + 1;
  const auto key = [width](const Configuration& c) {
    return (static_cast<std::uint64_t>(c.state) * width + c.lo) * width + c.hi;
  };
  const auto accepting = [&m](const Configuration& c) {
    return c.lo == c.hi && m.is_final(c.state);
  };

  struct Node {
    Configuration config;
    std::size_t parent;
    std::size_t via;
  };
  std::vector<Node> nodes;
  const auto unwind = [&nodes](std::size_t last) {
    Trace trace;
    for (std::size_t i = last; i != kNone; i = nodes[i].parent) {
      trace.configurations.push_back(nodes[i].config);
      if (nodes[i].via != kNone) trace.transitions.push_back(nodes[i].via);
    }
    std::reverse(trace.configurations.begin(), trace.configurations.end());
    std::reverse(trace.transitions.begin(), trace.transitions.end());
    return trace;
  };

  const Configuration start{m.initial(), 0, w.size()};
  nodes.push_back({start, kNone, kNone});
  if (accepting(start)) return unwind(0);

  const auto out = outgoing(m);
  const auto& ts = m.transitions();
  std::unordered_set<std::uint64_t> seen{key(start)};
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    const Configuration c = nodes[head].config;
    for (const std::size_t i : out[c.state]) {
      const Transition& t = ts[i];
      if (!reads_fit(t, w, c) || !gate(t, c)) continue;
      const Configuration next = apply(t, c);
      if (!seen.insert(key(next)).second) continue;
      nodes.push_back({next, head, i});
      if (accepting(next)) return unwind(nodes.size() - 1);
    }
  }
  return std::nullopt;
}

}  // namespace wk::detail
