// format.hpp -- rendering subsets and families with element names
#pragma once

#include <string>

#include "roughmatroid/rough.hpp"
#include "roughmatroid/set_family.hpp"
#include "roughmatroid/subset.hpp"

namespace roughmatroid {

/// Empty-set display token for human-readable output.
inline constexpr const char* kEmptySetToken = "∅";

/// Elements joined by single spaces in index order; the empty set is
/// rendered as the empty-set token.
inline std::string format_subset(const Subset& s, const Universe& u) {
  if (s.is_empty()) return kEmptySetToken;
  std::string out;
  for (ElementId e : s.elements()) {
    if (!out.empty()) out += ' ';
    out += u.label(e);
  }
  return out;
}

/// Braced rendering for witness messages: "{a c}" or "{}".
inline std::string format_braced(const Subset& s, const Universe& u) {
  std::string out = "{";
  bool first = true;
  for (ElementId e : s.elements()) {
    if (!first) out += ' ';
    out += u.label(e);
    first = false;
  }
  return out + "}";
}

/// One set per line, in canonical (ascending mask) order.
inline std::string format_family(const SetFamily& f, const Universe& u) {
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    out += format_subset(f.at(i), u);
    out += '\n';
  }
  return out;
}

}  // namespace roughmatroid
