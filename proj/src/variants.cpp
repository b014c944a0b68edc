#include "wk/variants.hpp"

#include <algorithm>

#include "wk/errors.hpp"

namespace wk {

namespace {

bool is_simple(const Transition& t) { return t.u.empty() || t.v.empty(); }

bool is_one_limited(const Transition& t) {
  return t.u.size() + t.v.size() == 1;
}

std::string describe(const Automaton& m, const Transition& t) {
  return m.state_name(t.from) + " -(" + display_word(t.u) + "," +
         display_word(t.v) + ")-> " + m.state_name(t.to);
}

}  // namespace

VariantFlags VariantFlags::from_name(std::string_view name) {
  VariantFlags f;
  if (name == "WK") return f;
  for (const char c : name) {
    switch (c) {
      case 'N': f.stateless = f.all_final = true; break;
      case 'F': f.all_final = true; break;
      case 'S': f.simple = true; break;
      case '1': f.one_limited = f.simple = true; break;
      default:
        throw ContractError("unknown variant letter '" + std::string(1, c) + "'");
    }
  }
  return f;
}

std::string VariantFlags::class_name() const {
  std::string name;
  if (stateless) {
    name += 'N';
  } else if (all_final) {
    name += 'F';
  }
  if (one_limited) {
    name += '1';
  } else if (simple) {
    name += 'S';
  }
  return name.empty() ? "WK" : name;
}

std::string VariantFlags::flag_list() const {
  std::string out;
  const auto add = [&out](bool on, char c) {
    if (!on) return;
    if (!out.empty()) out += ' ';
    out += c;
  };
  add(stateless, 'N');
  add(all_final, 'F');
  add(simple, 'S');
  add(one_limited, '1');
  return out;
}

bool VariantFlags::includes(const VariantFlags& other) const {
  return (stateless || !other.stateless) && (all_final || !other.all_final) &&
         (simple || !other.simple) && (one_limited || !other.one_limited);
}

VariantFlags classify(const Automaton& m) {
  const auto& ts = m.transitions();
  VariantFlags f;
  f.all_final = m.finals().size() == m.num_states();
  f.stateless = f.all_final && m.num_states() == 1;
  f.simple = std::all_of(ts.begin(), ts.end(), is_simple);
  f.one_limited = std::all_of(ts.begin(), ts.end(), is_one_limited);
  return f;
}

std::vector<Violation> validate_declared(const Automaton& m,
                                         const VariantFlags& declared) {
  std::vector<Violation> out;
  const auto& ts = m.transitions();

  if (declared.stateless) {
    if (m.num_states() != 1) {
      out.push_back({'N', "machine has " + std::to_string(m.num_states()) +
                              " states; state '" + m.state_name(1) +
                              "' is extra"});
    } else if (!m.is_final(0)) {
      out.push_back({'N', "the only state '" + m.state_name(0) +
                              "' is not final"});
    }
  }
  if (declared.all_final) {
    for (StateId q = 0; q < m.num_states(); ++q) {
      if (!m.is_final(q)) {
        out.push_back({'F', "state '" + m.state_name(q) + "' is not final"});
        break;
      }
    }
  }
  if (declared.simple) {
    const auto it = std::find_if_not(ts.begin(), ts.end(), is_simple);
    if (it != ts.end()) {
      out.push_back({'S', "transition " + describe(m, *it) + " moves both heads"});
    }
  }
  if (declared.one_limited) {
    const auto it = std::find_if_not(ts.begin(), ts.end(), is_one_limited);
    if (it != ts.end()) {
      out.push_back({'1', "transition " + describe(m, *it) + " reads " +
                              std::to_string(it->u.size() + it->v.size()) +
                              " letters"});
    }
  }
  return out;
}

}  // namespace wk
