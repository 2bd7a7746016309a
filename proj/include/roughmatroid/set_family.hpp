// set_family.hpp -- canonically ordered, duplicate-free families of subsets
#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "roughmatroid/errors.hpp"
#include "roughmatroid/subset.hpp"

namespace roughmatroid {

/// A finite family of subsets over one universe, stored sorted by mask
/// value with duplicates removed. Construction canonicalizes.
class SetFamily {
 public:
  explicit SetFamily(int universe_size) : universe_size_(check_size(universe_size)) {}

  SetFamily(int universe_size, std::vector<std::uint32_t> masks)
      : universe_size_(check_size(universe_size)), masks_(std::move(masks)) {
    const std::uint32_t full = Subset::full_mask(universe_size_);
    for (std::uint32_t m : masks_)
      if ((m & ~full) != 0)
        throw OutOfUniverseError("family member has bits outside the universe");
    std::sort(masks_.begin(), masks_.end());
    masks_.erase(std::unique(masks_.begin(), masks_.end()), masks_.end());
  }

  SetFamily(int universe_size, const std::vector<Subset>& sets)
      : universe_size_(check_size(universe_size)) {
    masks_.reserve(sets.size());
    for (const Subset& s : sets) {
      if (s.universe_size() != universe_size_)
        throw UniverseMismatchError("family member universe size " +
                                    std::to_string(s.universe_size()) +
                                    " != " + std::to_string(universe_size_));
      masks_.push_back(s.mask());
    }
    std::sort(masks_.begin(), masks_.end());
    masks_.erase(std::unique(masks_.begin(), masks_.end()), masks_.end());
  }

  int universe_size() const { return universe_size_; }
  std::size_t size() const { return masks_.size(); }
  bool empty() const { return masks_.empty(); }

  Subset at(std::size_t i) const { return Subset(universe_size_, masks_[i]); }
  std::uint32_t mask_at(std::size_t i) const { return masks_[i]; }
  const std::vector<std::uint32_t>& masks() const { return masks_; }

  bool contains_mask(std::uint32_t m) const {
    return std::binary_search(masks_.begin(), masks_.end(), m);
  }

  bool contains(const Subset& s) const {
    if (s.universe_size() != universe_size_)
      throw UniverseMismatchError("membership test across universes");
    return contains_mask(s.mask());
  }

  std::vector<Subset> sets() const {
    std::vector<Subset> out;
    out.reserve(masks_.size());
    for (std::uint32_t m : masks_) out.emplace_back(universe_size_, m);
    return out;
  }

  friend bool operator==(const SetFamily& a, const SetFamily& b) {
    return a.universe_size_ == b.universe_size_ && a.masks_ == b.masks_;
  }

 private:
  static int check_size(int n) {
    if (n < 0 || n > kMaxUniverse)
      throw InvalidParameterError("universe size out of range: " + std::to_string(n));
    return n;
  }

  int universe_size_;
  std::vector<std::uint32_t> masks_;
};

/// Inclusion-maximal members of an arbitrary family. Max of the empty
/// family is the empty family.
inline SetFamily max_sets(const SetFamily& family) {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const std::uint32_t x = family.mask_at(i);
    bool maximal = true;
    for (std::size_t j = 0; j < family.size(); ++j) {
      const std::uint32_t y = family.mask_at(j);
      if (y != x && detail::submask(x, y)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(x);
  }
  return SetFamily(family.universe_size(), std::move(out));
}

/// Inclusion-minimal members of an arbitrary family.
inline SetFamily min_sets(const SetFamily& family) {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const std::uint32_t x = family.mask_at(i);
    bool minimal = true;
    for (std::size_t j = 0; j < family.size(); ++j) {
      const std::uint32_t y = family.mask_at(j);
      if (y != x && detail::submask(y, x)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(x);
  }
  return SetFamily(family.universe_size(), std::move(out));
}

namespace detail {

/// Presence table indexed by mask; only sensible for n <= 20.
inline std::vector<std::uint8_t> presence_table(const SetFamily& family) {
  std::vector<std::uint8_t> present(subset_count(family.universe_size()), 0);
  for (std::size_t i = 0; i < family.size(); ++i) present[family.mask_at(i)] = 1;
  return present;
}

/// Compacts the bits of `mask` selected by `selector` into low positions,
/// preserving relative order (a portable PEXT).
inline std::uint32_t compact_bits(std::uint32_t mask, std::uint32_t selector) {
  std::uint32_t out = 0;
  int pos = 0;
  for (std::uint32_t sel = selector; sel != 0; sel &= sel - 1, ++pos) {
    const std::uint32_t bit = sel & ~(sel - 1);
    if (mask & bit) out |= std::uint32_t{1} << pos;
  }
  return out;
}

}  // namespace detail

}  // namespace roughmatroid
