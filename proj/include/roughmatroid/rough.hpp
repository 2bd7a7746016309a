// rough.hpp -- approximation spaces, lower/upper approximation operators
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "roughmatroid/caps.hpp"
#include "roughmatroid/errors.hpp"
#include "roughmatroid/set_family.hpp"
#include "roughmatroid/subset.hpp"

namespace roughmatroid {

/// A nonempty finite universe with optional distinct display names.
class Universe {
 public:
  explicit Universe(int size) : size_(size) { check(); }

  Universe(int size, std::vector<std::string> names)
      : size_(size), names_(std::move(names)) {
    check();
    if (static_cast<int>(names_.size()) != size_)
      throw InvalidParameterError("expected " + std::to_string(size_) +
                                  " names, got " + std::to_string(names_.size()));
    std::unordered_set<std::string> seen;
    for (const std::string& n : names_)
      if (!seen.insert(n).second)
        throw InvalidParameterError("duplicate element name: " + n);
  }

  int size() const { return size_; }
  bool has_names() const { return !names_.empty(); }
  const std::vector<std::string>& names() const { return names_; }

  /// Display label of one element (falls back to the index).
  std::string label(ElementId e) const {
    if (e < 0 || e >= size_)
      throw OutOfUniverseError("no element " + std::to_string(e));
    return names_.empty() ? std::to_string(e) : names_[static_cast<std::size_t>(e)];
  }

  std::optional<ElementId> index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return static_cast<ElementId>(i);
    return std::nullopt;
  }

  friend bool operator==(const Universe& a, const Universe& b) {
    return a.size_ == b.size_ && a.names_ == b.names_;
  }

 private:
  void check() const {
    if (size_ < 1) throw EmptyUniverseError("universe must have at least one element");
    if (size_ > kMaxUniverse)
      throw InvalidParameterError("universe larger than " +
                                  std::to_string(kMaxUniverse) + " elements");
  }

  int size_;
  std::vector<std::string> names_;  // empty = unnamed
};

/// The quotient of a universe by an equivalence relation: pairwise
/// disjoint nonempty blocks covering the universe, sorted by their
/// minimum element. The relation itself is never materialized.
class Partition {
 public:
  Partition(Universe universe, const std::vector<Subset>& blocks)
      : universe_(std::move(universe)),
        block_of_(static_cast<std::size_t>(universe_.size()), -1) {
    const int n = universe_.size();
    std::uint32_t covered = 0;
    for (const Subset& b : blocks) {
      if (b.universe_size() != n)
        throw UniverseMismatchError("block universe size " +
                                    std::to_string(b.universe_size()) +
                                    " != " + std::to_string(n));
      if (b.is_empty()) throw EmptyBlockError("partition block is empty");
      if ((covered & b.mask()) != 0)
        throw OverlapError("partition blocks overlap");
      covered |= b.mask();
    }
    if (covered != Subset::full_mask(n))
      throw CoverageError("partition blocks do not cover the universe");

    block_masks_.reserve(blocks.size());
    for (const Subset& b : blocks) block_masks_.push_back(b.mask());
    // canonical block order: by minimum element (distinct across
    // disjoint nonempty blocks)
    std::sort(block_masks_.begin(), block_masks_.end(),
              [](std::uint32_t a, std::uint32_t b) {
                return std::countr_zero(a) < std::countr_zero(b);
              });
    for (std::size_t i = 0; i < block_masks_.size(); ++i)
      for (std::uint32_t m = block_masks_[i]; m != 0; m &= m - 1)
        block_of_[static_cast<std::size_t>(std::countr_zero(m))] = static_cast<int>(i);
  }

  const Universe& universe() const { return universe_; }
  int universe_size() const { return universe_.size(); }
  std::size_t block_count() const { return block_masks_.size(); }
  Subset block(std::size_t i) const { return Subset(universe_.size(), block_masks_[i]); }
  const std::vector<std::uint32_t>& block_masks() const { return block_masks_; }

  /// The unique block containing x.
  Subset equivalence_class(ElementId x) const {
    if (x < 0 || x >= universe_.size())
      throw OutOfUniverseError("element " + std::to_string(x) +
                               " is outside the universe");
    return block(static_cast<std::size_t>(block_of_[static_cast<std::size_t>(x)]));
  }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.universe_ == b.universe_ && a.block_masks_ == b.block_masks_;
  }

 private:
  Universe universe_;
  std::vector<std::uint32_t> block_masks_;
  std::vector<int> block_of_;
};

/// Validating construction path for a partition.
inline Partition partition_from_blocks(Universe universe, const std::vector<Subset>& blocks) {
  return Partition(std::move(universe), blocks);
}

inline void check_same_universe(const Partition& p, const Subset& x) {
  if (x.universe_size() != p.universe_size())
    throw UniverseMismatchError("subset universe size " +
                                std::to_string(x.universe_size()) + " != " +
                                std::to_string(p.universe_size()));
}

/// Lower approximation: every element whose whole class lies inside X,
/// i.e. the union of the blocks contained in X.
inline Subset lower_approximation(const Partition& p, const Subset& x) {
  check_same_universe(p, x);
  std::uint32_t out = 0;
  for (std::uint32_t b : p.block_masks())
    if (detail::submask(b, x.mask())) out |= b;
  return Subset(p.universe_size(), out);
}

/// Upper approximation: every element whose class meets X, i.e. the
/// union of the blocks intersecting X.
inline Subset upper_approximation(const Partition& p, const Subset& x) {
  check_same_universe(p, x);
  std::uint32_t out = 0;
  for (std::uint32_t b : p.block_masks())
    if ((b & x.mask()) != 0) out |= b;
  return Subset(p.universe_size(), out);
}

// ---------------------------------------------------------------------------
// exhaustive verification of the classical approximation-operator laws
// ---------------------------------------------------------------------------

/// The sixteen classical laws of the pair (lower, upper) over one
/// partition, labelled 1L..9LH.
inline const std::vector<std::string>& pawlak_property_ids() {
  static const std::vector<std::string> ids = {
      "1L", "1H", "2L", "2H", "3L", "3H", "4L", "4H",
      "5L", "5H", "6L", "6H", "7L", "7H", "8LH", "9LH"};
  return ids;
}

struct PawlakCaps {
  int single = caps::pawlak_single;  // laws quantified over one subset
  int pair = caps::pawlak_pair;      // laws quantified over subset pairs
};

struct PawlakReport {
  enum class Status { pass, fail, skip };

  struct Entry {
    std::string property;
    Status status = Status::pass;
    std::optional<Subset> x;  // first counterexample, when status == fail
    std::optional<Subset> y;
  };

  std::vector<Entry> entries;

  bool all_passed() const {
    for (const Entry& e : entries)
      if (e.status == Status::fail) return false;
    return true;
  }

  bool has_skips() const {
    for (const Entry& e : entries)
      if (e.status == Status::skip) return true;
    return false;
  }

  const Entry* first_failure() const {
    for (const Entry& e : entries)
      if (e.status == Status::fail) return &e;
    return nullptr;
  }
};

/// Checks all sixteen laws by exhaustive enumeration over every subset
/// (and every pair of subsets for 4L/4H/6L/6H). Laws above their cap are
/// reported as skipped; a universe above the single-subset cap raises
/// CapExceededError.
inline PawlakReport verify_pawlak_properties(const Partition& p,
                                             const PawlakCaps& limits = {}) {
  const int n = p.universe_size();
  if (n > limits.single)
    throw CapExceededError("universe size " + std::to_string(n) +
                           " exceeds the exhaustive-check cap " +
                           std::to_string(limits.single));

  const std::size_t count = detail::subset_count(n);
  const std::uint32_t full = Subset::full_mask(n);
  std::vector<std::uint32_t> lower(count), upper(count);
  for (std::uint32_t x = 0; x < count; ++x) {
    std::uint32_t lo = 0, hi = 0;
    for (std::uint32_t b : p.block_masks()) {
      if (detail::submask(b, x)) lo |= b;
      if ((b & x) != 0) hi |= b;
    }
    lower[x] = lo;
    upper[x] = hi;
  }

  PawlakReport report;
  auto subset_of = [n](std::uint32_t m) { return Subset(n, m); };
  auto add = [&](const std::string& id, PawlakReport::Status st,
                 std::optional<Subset> x = std::nullopt,
                 std::optional<Subset> y = std::nullopt) {
    report.entries.push_back({id, st, std::move(x), std::move(y)});
  };
  auto add_single = [&](const std::string& id, auto&& holds) {
    for (std::uint32_t x = 0; x < count; ++x)
      if (!holds(x)) {
        add(id, PawlakReport::Status::fail, subset_of(x));
        return;
      }
    add(id, PawlakReport::Status::pass);
  };
  auto add_pair = [&](const std::string& id, auto&& holds) {
    if (n > limits.pair) {
      add(id, PawlakReport::Status::skip);
      return;
    }
    for (std::uint32_t x = 0; x < count; ++x)
      for (std::uint32_t y = 0; y < count; ++y)
        if (!holds(x, y)) {
          add(id, PawlakReport::Status::fail, subset_of(x), subset_of(y));
          return;
        }
    add(id, PawlakReport::Status::pass);
  };

  add_single("1L", [&](std::uint32_t) { return lower[full] == full; });
  add_single("1H", [&](std::uint32_t) { return upper[full] == full; });
  add_single("2L", [&](std::uint32_t) { return lower[0] == 0; });
  add_single("2H", [&](std::uint32_t) { return upper[0] == 0; });
  add_single("3L", [&](std::uint32_t x) { return detail::submask(lower[x], x); });
  add_single("3H", [&](std::uint32_t x) { return detail::submask(x, upper[x]); });
  add_pair("4L", [&](std::uint32_t x, std::uint32_t y) {
    return lower[x & y] == (lower[x] & lower[y]);
  });
  add_pair("4H", [&](std::uint32_t x, std::uint32_t y) {
    return upper[x | y] == (upper[x] | upper[y]);
  });
  add_single("5L", [&](std::uint32_t x) { return lower[lower[x]] == lower[x]; });
  add_single("5H", [&](std::uint32_t x) { return upper[upper[x]] == upper[x]; });
  add_pair("6L", [&](std::uint32_t x, std::uint32_t y) {
    return !detail::submask(x, y) || detail::submask(lower[x], lower[y]);
  });
  add_pair("6H", [&](std::uint32_t x, std::uint32_t y) {
    return !detail::submask(x, y) || detail::submask(upper[x], upper[y]);
  });
  add_single("7L", [&](std::uint32_t x) {
    const std::uint32_t c = ~lower[x] & full;
    return lower[c] == c;
  });
  add_single("7H", [&](std::uint32_t x) {
    const std::uint32_t c = ~upper[x] & full;
    return upper[c] == c;
  });
  add_single("8LH", [&](std::uint32_t x) {
    return lower[~x & full] == (~upper[x] & full);
  });
  add_single("9LH", [&](std::uint32_t x) { return detail::submask(lower[x], upper[x]); });

  return report;
}

}  // namespace roughmatroid
