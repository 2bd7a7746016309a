// induced.hpp -- the matroid induced by the lower approximation operator,
// its dual, and the point-vs-class contraction relationships
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "roughmatroid/caps.hpp"
#include "roughmatroid/errors.hpp"
#include "roughmatroid/matroid.hpp"
#include "roughmatroid/rough.hpp"

namespace roughmatroid {

/// X is independent in the induced matroid iff its lower approximation
/// is empty, equivalently iff no equivalence class fits inside X.
inline bool independent_closed_form(const Partition& p, const Subset& x) {
  check_same_universe(p, x);
  for (std::uint32_t b : p.block_masks())
    if (detail::submask(b, x.mask())) return false;
  return true;
}

namespace detail {

/// All OR-combinations of one mask per slot (odometer over the choice
/// lists). An empty choice list yields an empty product.
inline std::vector<std::uint32_t> mask_product(
    const std::vector<std::vector<std::uint32_t>>& choices) {
  std::vector<std::uint32_t> out{0};
  for (const auto& slot : choices) {
    std::vector<std::uint32_t> next;
    next.reserve(out.size() * slot.size());
    for (std::uint32_t prefix : out)
      for (std::uint32_t pick : slot) next.push_back(prefix | pick);
    out = std::move(next);
  }
  return out;
}

/// Proper submasks of `mask`, ascending, including 0.
inline std::vector<std::uint32_t> proper_submasks(std::uint32_t mask) {
  std::vector<std::uint32_t> out{0};
  if (mask == 0) return {};  // no proper subsets of the empty set
  for (std::uint32_t s = (0 - mask) & mask; s != mask; s = (s - mask) & mask)
    out.push_back(s);
  return out;
}

inline std::vector<std::uint32_t> singleton_masks(std::uint32_t mask) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = mask; d != 0; d &= d - 1) out.push_back(d & ~(d - 1));
  return out;
}

inline void check_induced_cap(const Partition& p) {
  if (p.universe_size() > caps::construction)
    throw CapExceededError("induced matroids are capped at " +
                           std::to_string(caps::construction) +
                           " elements, got " + std::to_string(p.universe_size()));
}

}  // namespace detail

/// Every set missing exactly one element from each equivalence class;
/// these are the maximal independents of the induced matroid.
inline SetFamily bases_closed_form(const Partition& p) {
  detail::check_induced_cap(p);
  std::vector<std::vector<std::uint32_t>> choices;
  choices.reserve(p.block_count());
  for (std::uint32_t b : p.block_masks()) {
    std::vector<std::uint32_t> slot;
    for (std::uint32_t single : detail::singleton_masks(b)) slot.push_back(b ^ single);
    choices.push_back(std::move(slot));
  }
  return SetFamily(p.universe_size(), detail::mask_product(choices));
}

/// Transversals: exactly one element per class. These are the bases of
/// the dual induced matroid.
inline SetFamily transversals_closed_form(const Partition& p) {
  detail::check_induced_cap(p);
  std::vector<std::vector<std::uint32_t>> choices;
  choices.reserve(p.block_count());
  for (std::uint32_t b : p.block_masks()) choices.push_back(detail::singleton_masks(b));
  return SetFamily(p.universe_size(), detail::mask_product(choices));
}

/// Partial transversals: at most one element per class. These are the
/// independents of the dual induced matroid.
inline SetFamily partial_transversals_closed_form(const Partition& p) {
  detail::check_induced_cap(p);
  std::vector<std::vector<std::uint32_t>> choices;
  choices.reserve(p.block_count());
  for (std::uint32_t b : p.block_masks()) {
    std::vector<std::uint32_t> slot{0};
    for (std::uint32_t single : detail::singleton_masks(b)) slot.push_back(single);
    choices.push_back(std::move(slot));
  }
  return SetFamily(p.universe_size(), detail::mask_product(choices));
}

/// Rank of X in the dual induced matroid: the number of classes X meets.
inline int dual_rank_closed_form(const Partition& p, const Subset& x) {
  check_same_universe(p, x);
  int count = 0;
  for (std::uint32_t b : p.block_masks())
    if ((b & x.mask()) != 0) ++count;
  return count;
}

/// Rank of X in the induced matroid: each class contributes its overlap
/// with X, saturating one below the class size.
inline int primal_rank_closed_form(const Partition& p, const Subset& x) {
  check_same_universe(p, x);
  int total = 0;
  for (std::uint32_t b : p.block_masks())
    total += std::min(detail::popcount(b & x.mask()), detail::popcount(b) - 1);
  return total;
}

/// The matroid induced by the lower approximation operator: a set is
/// independent iff its lower approximation is empty. Built from the
/// no-class-inside closed form (as a product over classes) and
/// cross-checked against the operator definition at construction.
class InducedMatroid {
 public:
  explicit InducedMatroid(Partition partition)
      : partition_(std::move(partition)), matroid_(build(partition_)) {}

  const Partition& partition() const { return partition_; }
  const Matroid& matroid() const { return matroid_; }

 private:
  static Matroid build(const Partition& p) {
    detail::check_induced_cap(p);
    const int n = p.universe_size();

    // route 1: product of proper class subsets
    std::vector<std::vector<std::uint32_t>> choices;
    choices.reserve(p.block_count());
    for (std::uint32_t b : p.block_masks())
      choices.push_back(detail::proper_submasks(b));
    SetFamily family(n, detail::mask_product(choices));

    // route 2: filter by emptiness of the lower approximation
    const auto present = detail::presence_table(family);
    for (std::uint32_t x = 0; x < present.size(); ++x) {
      const bool empty_lower = lower_approximation(p, Subset(n, x)).is_empty();
      if (empty_lower != static_cast<bool>(present[x]))
        throw InternalMismatchError(
            "induced independents disagree with the lower-approximation filter");
    }
    return Matroid(n, std::move(family));
  }

  Partition partition_;
  Matroid matroid_;
};

inline InducedMatroid induce_matroid(Partition p) {
  return InducedMatroid(std::move(p));
}

/// The dual of the induced matroid. Built through the generic engine
/// dual and through the transversal closed forms; the two routes are
/// compared member-for-member at construction.
class DualInducedMatroid {
 public:
  explicit DualInducedMatroid(const InducedMatroid& induced)
      : partition_(induced.partition()), matroid_(build(induced)) {}

  const Partition& partition() const { return partition_; }
  const Matroid& matroid() const { return matroid_; }

 private:
  static Matroid build(const InducedMatroid& induced) {
    Matroid engine_dual = dual(induced.matroid());
    const Partition& p = induced.partition();
    if (bases(engine_dual) != transversals_closed_form(p))
      throw InternalMismatchError(
          "dual bases disagree with the transversal closed form");
    if (engine_dual.independents() != partial_transversals_closed_form(p))
      throw InternalMismatchError(
          "dual independents disagree with the partial-transversal closed form");
    return engine_dual;
  }

  Partition partition_;
  Matroid matroid_;
};

inline DualInducedMatroid dual_matroid(const InducedMatroid& induced) {
  return DualInducedMatroid(induced);
}

// ---------------------------------------------------------------------------
// point-vs-class contraction relationships of the dual induced matroid
// ---------------------------------------------------------------------------

/// Result of comparing two set families over the parent universe.
struct FamilyComparison {
  bool passed = true;
  std::optional<Subset> witness;  // first set present on exactly one side
};

/// Result of the circuit-containment check: contracting by a point can
/// only add circuits relative to contracting by its whole class, and the
/// surplus must be exactly the singletons of the rest of the class.
struct CircuitContainment {
  bool contained = true;
  std::optional<Subset> missing;  // class-side circuit absent on the point side
  SetFamily surplus;
  SetFamily expected_surplus;
  bool surplus_as_expected = true;
  bool passed() const { return contained && surplus_as_expected; }
};

struct RankComparison {
  bool passed = true;
  std::optional<Subset> witness;  // subset of U - RN(x) where the ranks differ
};

namespace detail {

inline FamilyComparison compare_families(const SetFamily& a, const SetFamily& b) {
  if (a == b) return {};
  // first mask in the symmetric difference
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a.mask_at(i) < b.mask_at(j)))
      return {false, a.at(i)};
    if (i == a.size() || b.mask_at(j) < a.mask_at(i)) return {false, b.at(j)};
    ++i;
    ++j;
  }
  return {false, std::nullopt};  // unreachable for unequal canonical families
}

inline void check_sweep_cap(const Partition& p, int cap) {
  if (p.universe_size() > cap)
    throw CapExceededError("universe size " + std::to_string(p.universe_size()) +
                           " exceeds the verification cap " + std::to_string(cap));
}

struct ContractionPair {
  Minor by_point;
  Minor by_class;
};

inline ContractionPair contract_both(const DualInducedMatroid& dm, ElementId x) {
  const int n = dm.partition().universe_size();
  const Subset point = Subset::single(n, x);
  const Subset cls = dm.partition().equivalence_class(x);
  return {contraction(dm.matroid(), point), contraction(dm.matroid(), cls)};
}

}  // namespace detail

/// Contracting the dual induced matroid by one point or by that point's
/// whole class yields the same independent sets (compared over
/// parent-universe element names).
inline FamilyComparison verify_contraction_independents(const DualInducedMatroid& dm,
                                                        ElementId x) {
  const auto pair = detail::contract_both(dm, x);
  return detail::compare_families(
      pair.by_point.lift(pair.by_point.matroid().independents()),
      pair.by_class.lift(pair.by_class.matroid().independents()));
}

/// Same comparison for the base families.
inline FamilyComparison verify_contraction_bases(const DualInducedMatroid& dm,
                                                 ElementId x) {
  const auto pair = detail::contract_both(dm, x);
  return detail::compare_families(pair.by_point.lift(bases(pair.by_point.matroid())),
                                  pair.by_class.lift(bases(pair.by_class.matroid())));
}

/// Rank agreement of the two contractions on every subset of U - RN(x).
inline RankComparison verify_contraction_rank(const DualInducedMatroid& dm,
                                              ElementId x) {
  const auto pair = detail::contract_both(dm, x);
  const int n = dm.partition().universe_size();
  const auto point_rank = rank_table(pair.by_point.matroid());
  const auto class_rank = rank_table(pair.by_class.matroid());
  const std::uint32_t point_ground = pair.by_point.ground_in_parent().mask();
  const std::uint32_t class_ground = pair.by_class.ground_in_parent().mask();

  for (std::uint32_t s = class_ground;; s = (s - 1) & class_ground) {
    if (point_rank[detail::compact_bits(s, point_ground)] !=
        class_rank[detail::compact_bits(s, class_ground)])
      return {false, Subset(n, s)};
    if (s == 0) break;
  }
  return {};
}

/// Circuits of the class contraction are contained in those of the point
/// contraction; the surplus is exactly one singleton per other element
/// of the class.
inline CircuitContainment verify_circuit_containment(const DualInducedMatroid& dm,
                                                     ElementId x) {
  const auto pair = detail::contract_both(dm, x);
  const int n = dm.partition().universe_size();
  const SetFamily point_circuits = pair.by_point.lift(circuits(pair.by_point.matroid()));
  const SetFamily class_circuits = pair.by_class.lift(circuits(pair.by_class.matroid()));

  CircuitContainment result{true,
                            std::nullopt,
                            SetFamily(n),
                            SetFamily(n),
                            true};
  std::vector<std::uint32_t> surplus;
  for (std::size_t i = 0; i < point_circuits.size(); ++i)
    if (!class_circuits.contains_mask(point_circuits.mask_at(i)))
      surplus.push_back(point_circuits.mask_at(i));
  result.surplus = SetFamily(n, std::move(surplus));

  for (std::size_t i = 0; i < class_circuits.size(); ++i)
    if (!point_circuits.contains_mask(class_circuits.mask_at(i))) {
      result.contained = false;
      result.missing = class_circuits.at(i);
      break;
    }

  const std::uint32_t rest =
      dm.partition().equivalence_class(x).mask() & ~(std::uint32_t{1} << x);
  result.expected_surplus = SetFamily(n, detail::singleton_masks(rest));
  result.surplus_as_expected = result.surplus == result.expected_surplus;
  return result;
}

/// Restricting the point contraction to U - RN(x) recovers exactly the
/// circuits of the class contraction.
inline FamilyComparison verify_circuit_equality_after_restriction(
    const DualInducedMatroid& dm, ElementId x) {
  const auto pair = detail::contract_both(dm, x);
  const Subset keep_parent = pair.by_class.ground_in_parent();
  const Minor restricted =
      restriction(pair.by_point.matroid(), pair.by_point.to_child(keep_parent));
  const SetFamily restricted_circuits =
      pair.by_point.lift(restricted.lift(circuits(restricted.matroid())));
  const SetFamily class_circuits = pair.by_class.lift(circuits(pair.by_class.matroid()));
  return detail::compare_families(restricted_circuits, class_circuits);
}

// Partition-level wrappers; each builds the induced matroid and its dual
// for one call. Sweeps should construct DualInducedMatroid once instead.

inline FamilyComparison verify_contraction_independents(const Partition& p, ElementId x,
                                                        int cap = caps::sweep) {
  detail::check_sweep_cap(p, cap);
  return verify_contraction_independents(DualInducedMatroid(InducedMatroid(p)), x);
}

inline FamilyComparison verify_contraction_bases(const Partition& p, ElementId x,
                                                 int cap = caps::sweep) {
  detail::check_sweep_cap(p, cap);
  return verify_contraction_bases(DualInducedMatroid(InducedMatroid(p)), x);
}

inline RankComparison verify_contraction_rank(const Partition& p, ElementId x,
                                              int cap = caps::sweep) {
  detail::check_sweep_cap(p, cap);
  return verify_contraction_rank(DualInducedMatroid(InducedMatroid(p)), x);
}

inline CircuitContainment verify_circuit_containment(const Partition& p, ElementId x,
                                                     int cap = caps::sweep) {
  detail::check_sweep_cap(p, cap);
  return verify_circuit_containment(DualInducedMatroid(InducedMatroid(p)), x);
}

inline FamilyComparison verify_circuit_equality_after_restriction(
    const Partition& p, ElementId x, int cap = caps::sweep) {
  detail::check_sweep_cap(p, cap);
  return verify_circuit_equality_after_restriction(DualInducedMatroid(InducedMatroid(p)),
                                                   x);
}

}  // namespace roughmatroid
