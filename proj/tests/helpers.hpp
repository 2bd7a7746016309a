// helpers.hpp -- conversions between library values and oracle values,
// plus the shared fixtures.
#pragma once

#include <cstdlib>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "roughmatroid.hpp"

namespace helpers {

namespace rm = roughmatroid;

inline rm::Subset sub(int n, std::initializer_list<int> elements) {
  return rm::Subset::of(n, elements);
}

inline oracle::Set to_set(const rm::Subset& s) {
  oracle::Set out;
  for (int e : s.elements()) out.insert(e);
  return out;
}

inline rm::Subset from_set(int n, const oracle::Set& s) {
  rm::Subset out(n);
  for (int e : s) out = out.with(e);
  return out;
}

inline oracle::Family to_family(const rm::SetFamily& f) {
  oracle::Family out;
  for (std::size_t i = 0; i < f.size(); ++i) out.push_back(to_set(f.at(i)));
  return out;
}

inline rm::SetFamily from_family(int n, const oracle::Family& fam) {
  std::vector<rm::Subset> sets;
  for (const oracle::Set& s : fam) sets.push_back(from_set(n, s));
  return rm::SetFamily(n, sets);
}

inline std::vector<oracle::Set> to_blocks(const rm::Partition& p) {
  std::vector<oracle::Set> out;
  for (std::size_t i = 0; i < p.block_count(); ++i) out.push_back(to_set(p.block(i)));
  return out;
}

inline std::vector<std::string> letters(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
  return out;
}

/// {a b} {c d e} over a..e.
inline rm::Partition fixture_two_three() {
  return rm::Partition(rm::Universe(5, letters(5)),
                       {sub(5, {0, 1}), sub(5, {2, 3, 4})});
}

/// {a b c} {d} over a..d; its induced matroid is the loop-plus-triangle
/// fixture below.
inline rm::Partition fixture_triple_single() {
  return rm::Partition(rm::Universe(4, letters(4)),
                       {sub(4, {0, 1, 2}), sub(4, {3})});
}

/// Independents {{}, a, b, c, ab, ac, bc} over a..d: rank two on the
/// first three elements, d a loop.
inline rm::SetFamily fixture_triangle_loop_family() {
  return rm::SetFamily(4, std::vector<rm::Subset>{
                              sub(4, {}), sub(4, {0}), sub(4, {1}), sub(4, {2}),
                              sub(4, {0, 1}), sub(4, {0, 2}), sub(4, {1, 2})});
}

inline rm::Matroid fixture_triangle_loop_matroid() {
  return rm::Matroid(4, fixture_triangle_loop_family());
}

inline rm::SetFamily all_subsets_family(int n) {
  std::vector<std::uint32_t> masks;
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m) masks.push_back(m);
  return rm::SetFamily(n, std::move(masks));
}

inline rm::Matroid free_matroid(int n) { return rm::Matroid(n, all_subsets_family(n)); }

inline rm::Matroid rank_zero_matroid(int n) {
  return rm::Matroid(n, rm::SetFamily(n, std::vector<std::uint32_t>{0}));
}

inline std::string env_or_fail(const char* name) {
  const char* value = std::getenv(name);
  return value ? std::string(value) : std::string();
}

}  // namespace helpers
