// subset.hpp -- immutable bitmask subsets of a fixed finite universe
#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "roughmatroid/errors.hpp"

namespace roughmatroid {

/// Canonical index of a universe element.
using ElementId = int;

/// Largest universe a Subset may range over (one bit per element).
inline constexpr int kMaxUniverse = 32;

/// An immutable subset of {0, ..., n-1} with bit-level membership.
///
/// Element e is a member iff bit e of mask() is set. Equality is
/// extensional over a fixed universe; the canonical order of subsets is
/// the numeric order of their masks.
class Subset {
 public:
  /// The empty set over a universe of the given size.
  explicit Subset(int universe_size) : Subset(universe_size, 0u) {}

  Subset(int universe_size, std::uint32_t mask)
      : universe_size_(universe_size), mask_(mask) {
    if (universe_size < 0 || universe_size > kMaxUniverse)
      throw InvalidParameterError("universe size out of range: " +
                                  std::to_string(universe_size));
    if (universe_size < kMaxUniverse && (mask >> universe_size) != 0)
      throw OutOfUniverseError("subset mask has bits outside the universe");
  }

  static Subset empty(int universe_size) { return Subset(universe_size); }

  static Subset full(int universe_size) {
    return Subset(universe_size, full_mask(universe_size));
  }

  static Subset of(int universe_size, std::initializer_list<ElementId> elements) {
    std::uint32_t mask = 0;
    for (ElementId e : elements) mask |= element_bit(universe_size, e);
    return Subset(universe_size, mask);
  }

  static Subset single(int universe_size, ElementId e) {
    return Subset(universe_size, element_bit(universe_size, e));
  }

  int universe_size() const { return universe_size_; }
  std::uint32_t mask() const { return mask_; }

  bool contains(ElementId e) const {
    return (mask_ & element_bit(universe_size_, e)) != 0;
  }

  int cardinality() const { return std::popcount(mask_); }
  bool is_empty() const { return mask_ == 0; }
  bool is_full() const { return mask_ == full_mask(universe_size_); }

  bool is_subset_of(const Subset& other) const {
    check_same_universe(other);
    return (mask_ & ~other.mask_) == 0;
  }

  bool intersects(const Subset& other) const {
    check_same_universe(other);
    return (mask_ & other.mask_) != 0;
  }

  Subset unite(const Subset& other) const {
    check_same_universe(other);
    return Subset(universe_size_, mask_ | other.mask_);
  }

  Subset intersect(const Subset& other) const {
    check_same_universe(other);
    return Subset(universe_size_, mask_ & other.mask_);
  }

  Subset difference(const Subset& other) const {
    check_same_universe(other);
    return Subset(universe_size_, mask_ & ~other.mask_);
  }

  /// Complement within the fixed universe.
  Subset complement() const {
    return Subset(universe_size_, ~mask_ & full_mask(universe_size_));
  }

  Subset with(ElementId e) const {
    return Subset(universe_size_, mask_ | element_bit(universe_size_, e));
  }

  Subset without(ElementId e) const {
    return Subset(universe_size_, mask_ & ~element_bit(universe_size_, e));
  }

  std::vector<ElementId> elements() const {
    std::vector<ElementId> out;
    out.reserve(static_cast<std::size_t>(cardinality()));
    for (std::uint32_t m = mask_; m != 0; m &= m - 1)
      out.push_back(std::countr_zero(m));
    return out;
  }

  friend bool operator==(const Subset& a, const Subset& b) {
    return a.universe_size_ == b.universe_size_ && a.mask_ == b.mask_;
  }

  // canonical order: numeric mask value
  friend std::strong_ordering operator<=>(const Subset& a, const Subset& b) {
    if (auto c = a.universe_size_ <=> b.universe_size_; c != 0) return c;
    return a.mask_ <=> b.mask_;
  }

  static std::uint32_t full_mask(int universe_size) {
    return universe_size >= kMaxUniverse
               ? ~std::uint32_t{0}
               : (std::uint32_t{1} << universe_size) - 1;
  }

 private:
  static std::uint32_t element_bit(int universe_size, ElementId e) {
    if (e < 0 || e >= universe_size)
      throw OutOfUniverseError("element " + std::to_string(e) +
                               " is outside a universe of size " +
                               std::to_string(universe_size));
    return std::uint32_t{1} << e;
  }

  void check_same_universe(const Subset& other) const {
    if (universe_size_ != other.universe_size_)
      throw UniverseMismatchError("subsets live over different universes (" +
                                  std::to_string(universe_size_) + " vs " +
                                  std::to_string(other.universe_size_) + ")");
  }

  int universe_size_;
  std::uint32_t mask_;
};

namespace detail {

/// a \subseteq b on raw masks.
inline bool submask(std::uint32_t a, std::uint32_t b) { return (a & ~b) == 0; }

inline int popcount(std::uint32_t m) { return std::popcount(m); }

/// Number of subsets of a universe of size n (n <= 20 in all callers).
inline std::size_t subset_count(int n) { return std::size_t{1} << n; }

}  // namespace detail

}  // namespace roughmatroid
