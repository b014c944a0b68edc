#pragma once

#include <cstddef>
#include <string_view>

#include "wk/automaton.hpp"

namespace wk {

// Head distance as sensed by a machine of radius r. The heads start at the
// two ends and read inward, so their distance is the unread length.
DistanceLabel sensed_distance(std::size_t unread_len, std::size_t r);

// Acceptance under the sensing-parameter model: a transition fires only when
// its label equals the currently sensed distance. Throws StructuralError on
// a transition without a label.
bool legacy_accepts(const Automaton& m, std::string_view w);

// One copy of every transition per label in {0, ..., radius(m), inf}. The
// result accepts the same language as m.
Automaton lift_to_legacy(const Automaton& m);

// Drops distance labels (merging the copies) and returns a new-model machine.
Automaton strip_labels(const Automaton& m);

}  // namespace wk
