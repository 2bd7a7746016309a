// matroid.hpp -- finite matroids over explicit independent-set families:
// axiom checks, bases, circuits, rank, duality, restriction, contraction
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "roughmatroid/caps.hpp"
#include "roughmatroid/errors.hpp"
#include "roughmatroid/set_family.hpp"
#include "roughmatroid/subset.hpp"

namespace roughmatroid {

/// First failed axiom of a family check, with the witness sets in role
/// order (I2: the member and its missing subset; I3: the pair that
/// cannot be augmented; B2: the base pair plus the element x).
struct AxiomViolation {
  std::string axiom;
  std::vector<Subset> sets;
  std::optional<ElementId> element;
};

struct AxiomReport {
  std::optional<AxiomViolation> violation;
  bool passed() const { return !violation.has_value(); }
};

/// Thrown by matroid_from_bases when the candidate family fails the base
/// axioms; carries the failing report.
class BaseAxiomError : public Error {
 public:
  explicit BaseAxiomError(AxiomReport report)
      : Error("base axiom " +
              (report.violation ? report.violation->axiom : std::string("?")) +
              " violated"),
        report_(std::move(report)) {}
  const AxiomReport& report() const { return report_; }

 private:
  AxiomReport report_;
};

namespace detail {

/// r[X] = size of the largest family member contained in X, for every X,
/// by a max zeta transform over subsets. Exact when the family contains
/// the empty set.
inline std::vector<std::uint8_t> max_subset_size_table(const SetFamily& family) {
  const int n = family.universe_size();
  std::vector<std::uint8_t> r(subset_count(n), 0);
  for (std::size_t i = 0; i < family.size(); ++i) {
    const std::uint32_t m = family.mask_at(i);
    r[m] = static_cast<std::uint8_t>(popcount(m));
  }
  for (int e = 0; e < n; ++e) {
    const std::uint32_t bit = std::uint32_t{1} << e;
    for (std::uint32_t x = 0; x < r.size(); ++x)
      if (x & bit) r[x] = std::max(r[x], r[x ^ bit]);
  }
  return r;
}

}  // namespace detail

/// Definitional check of the independence axioms with witnesses: I1
/// (empty set present), I2 (downward closure, every subset of a member
/// enumerated in canonical order), I3 (augmentation; given I2, pairs one
/// cardinality apart decide the general case). Intended for desk-scale
/// families -- cost grows with the full subset lattice of each member.
inline AxiomReport check_independence_axioms(int universe_size,
                                             const SetFamily& family) {
  if (family.universe_size() != universe_size)
    throw UniverseMismatchError("family is over a different universe");
  AxiomReport report;
  if (!family.contains_mask(0)) {
    report.violation = AxiomViolation{"I1", {}, std::nullopt};
    return report;
  }

  const int n = universe_size;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const std::uint32_t member = family.mask_at(i);
    if (member == 0) continue;
    // proper submasks in ascending order
    for (std::uint32_t s = (0 - member) & member; s != member;
         s = (s - member) & member) {
      if (!family.contains_mask(s)) {
        report.violation = AxiomViolation{
            "I2", {Subset(n, member), Subset(n, s)}, std::nullopt};
        return report;
      }
    }
  }

  for (std::size_t i = 0; i < family.size(); ++i) {
    const std::uint32_t small = family.mask_at(i);
    const int small_size = detail::popcount(small);
    for (std::size_t j = 0; j < family.size(); ++j) {
      const std::uint32_t large = family.mask_at(j);
      if (detail::popcount(large) != small_size + 1) continue;
      bool augmented = false;
      for (std::uint32_t d = large & ~small; d != 0; d &= d - 1) {
        const std::uint32_t e = d & ~(d - 1);
        if (family.contains_mask(small | e)) {
          augmented = true;
          break;
        }
      }
      if (!augmented) {
        report.violation = AxiomViolation{
            "I3", {Subset(n, small), Subset(n, large)}, std::nullopt};
        return report;
      }
    }
  }
  return report;
}

/// A finite matroid given by its explicit family of independent sets.
/// The axioms are enforced at construction: I1 directly, I2 and I3
/// through the local characterization of the exact
/// max-independent-subset-size table (unit increase fails exactly when
/// downward closure does; the local exchange condition fails exactly
/// when augmentation does). Construction is O(2^n n^2).
class Matroid {
 public:
  Matroid(int universe_size, SetFamily independents)
      : universe_size_(universe_size), independents_(std::move(independents)) {
    if (universe_size_ < 0 || universe_size_ > caps::construction)
      throw CapExceededError("matroid ground sets are capped at " +
                             std::to_string(caps::construction) +
                             " elements, got " + std::to_string(universe_size_));
    if (independents_.universe_size() != universe_size_)
      throw UniverseMismatchError("independent family is over a different universe");
    if (!independents_.contains_mask(0))
      throw AxiomError("I1", "the empty set must be independent");

    const auto r = detail::max_subset_size_table(independents_);
    const std::uint32_t count = static_cast<std::uint32_t>(r.size());
    for (std::uint32_t x = 0; x < count; ++x) {
      for (int e = 0; e < universe_size_; ++e) {
        const std::uint32_t bit = std::uint32_t{1} << e;
        if (x & bit) continue;
        if (r[x | bit] > r[x] + 1)
          throw AxiomError("I2", "independent family is not downward closed");
      }
    }
    for (std::uint32_t x = 0; x < count; ++x) {
      for (int e = 0; e < universe_size_; ++e) {
        const std::uint32_t be = std::uint32_t{1} << e;
        if ((x & be) || r[x | be] != r[x]) continue;
        for (int f = e + 1; f < universe_size_; ++f) {
          const std::uint32_t bf = std::uint32_t{1} << f;
          if ((x & bf) || r[x | bf] != r[x]) continue;
          if (r[x | be | bf] != r[x])
            throw AxiomError("I3", "independent family fails the exchange axiom");
        }
      }
    }
  }

  int universe_size() const { return universe_size_; }
  const SetFamily& independents() const { return independents_; }

  bool independent(const Subset& x) const { return independents_.contains(x); }

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.universe_size_ == b.universe_size_ && a.independents_ == b.independents_;
  }

 private:
  int universe_size_;
  SetFamily independents_;
};

/// Exact rank of every subset, indexed by mask.
inline std::vector<std::uint8_t> rank_table(const Matroid& m) {
  return detail::max_subset_size_table(m.independents());
}

/// Rank by definition: the largest independent set inside X, found by a
/// scan of the whole family.
inline int rank(const Matroid& m, const Subset& x) {
  if (x.universe_size() != m.universe_size())
    throw UniverseMismatchError("rank query across universes");
  int best = 0;
  const SetFamily& fam = m.independents();
  for (std::size_t i = 0; i < fam.size(); ++i) {
    const std::uint32_t member = fam.mask_at(i);
    if (detail::submask(member, x.mask()))
      best = std::max(best, detail::popcount(member));
  }
  return best;
}

/// Rank by greedy augmentation along the given element order (every
/// maximal chain reaches the same size; the exchange axiom makes the
/// greedy result exact). Elements outside X are ignored.
inline int rank_greedy(const Matroid& m, const Subset& x,
                       std::span<const ElementId> order) {
  if (x.universe_size() != m.universe_size())
    throw UniverseMismatchError("rank query across universes");
  std::uint32_t current = 0;
  for (ElementId e : order) {
    if (!x.contains(e)) continue;
    const std::uint32_t next = current | (std::uint32_t{1} << e);
    if (m.independents().contains_mask(next)) current = next;
  }
  return detail::popcount(current);
}

inline int rank_greedy(const Matroid& m, const Subset& x) {
  std::vector<ElementId> order(static_cast<std::size_t>(m.universe_size()));
  for (int e = 0; e < m.universe_size(); ++e) order[static_cast<std::size_t>(e)] = e;
  return rank_greedy(m, x, order);
}

/// All maximal independent sets. Downward closure lets maximality be
/// decided by single-element augmentation. Equal cardinality of the
/// result is asserted; a violation means the construction-time axiom
/// check is broken.
inline SetFamily bases(const Matroid& m) {
  const int n = m.universe_size();
  const auto present = detail::presence_table(m.independents());
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < m.independents().size(); ++i) {
    const std::uint32_t member = m.independents().mask_at(i);
    bool maximal = true;
    for (int e = 0; e < n && maximal; ++e) {
      const std::uint32_t bit = std::uint32_t{1} << e;
      if (!(member & bit) && present[member | bit]) maximal = false;
    }
    if (maximal) out.push_back(member);
  }
  SetFamily result(n, std::move(out));
  for (std::size_t i = 1; i < result.size(); ++i)
    if (detail::popcount(result.mask_at(i)) != detail::popcount(result.mask_at(0)))
      throw InternalMismatchError("bases of unequal cardinality");
  return result;
}

/// All circuits (minimal dependent sets), enumerated lazily over the
/// subset lattice: a dependent set is a circuit iff every one-element
/// deletion is independent. The free matroid yields the empty family.
inline SetFamily circuits(const Matroid& m) {
  const int n = m.universe_size();
  const auto present = detail::presence_table(m.independents());
  std::vector<std::uint32_t> out;
  const std::uint32_t count = static_cast<std::uint32_t>(present.size());
  for (std::uint32_t x = 0; x < count; ++x) {
    if (present[x]) continue;
    bool minimal = true;
    for (std::uint32_t d = x; d != 0 && minimal; d &= d - 1) {
      const std::uint32_t e = d & ~(d - 1);
      if (!present[x ^ e]) minimal = false;
    }
    if (minimal) out.push_back(x);
  }
  return SetFamily(n, std::move(out));
}

/// Base axiom check with witnesses: B1 (nonempty) and B2 (exchange; the
/// witness is the triple (B1, B2, x) admitting no replacement y).
inline AxiomReport check_base_axiom(int universe_size, const SetFamily& candidate) {
  if (candidate.universe_size() != universe_size)
    throw UniverseMismatchError("candidate family is over a different universe");
  AxiomReport report;
  if (candidate.empty()) {
    report.violation = AxiomViolation{"B1", {}, std::nullopt};
    return report;
  }
  const int n = universe_size;
  for (std::size_t i = 0; i < candidate.size(); ++i) {
    const std::uint32_t b1 = candidate.mask_at(i);
    for (std::size_t j = 0; j < candidate.size(); ++j) {
      const std::uint32_t b2 = candidate.mask_at(j);
      for (std::uint32_t d = b1 & ~b2; d != 0; d &= d - 1) {
        const std::uint32_t x = d & ~(d - 1);
        bool exchanged = false;
        for (std::uint32_t c = b2 & ~b1; c != 0; c &= c - 1) {
          const std::uint32_t y = c & ~(c - 1);
          if (candidate.contains_mask((b1 & ~x) | y)) {
            exchanged = true;
            break;
          }
        }
        if (!exchanged) {
          report.violation =
              AxiomViolation{"B2",
                             {Subset(n, b1), Subset(n, b2)},
                             std::countr_zero(x)};
          return report;
        }
      }
    }
  }
  return report;
}

/// The matroid whose bases are the given family: independents are the
/// downward closure. Throws BaseAxiomError (carrying the report) when
/// the candidate fails B1/B2.
inline Matroid matroid_from_bases(int universe_size, const SetFamily& base_family) {
  AxiomReport report = check_base_axiom(universe_size, base_family);
  if (!report.passed()) throw BaseAxiomError(std::move(report));

  std::vector<std::uint8_t> mark(detail::subset_count(universe_size), 0);
  for (std::size_t i = 0; i < base_family.size(); ++i) mark[base_family.mask_at(i)] = 1;
  for (std::uint32_t x = static_cast<std::uint32_t>(mark.size()); x-- > 0;) {
    if (!mark[x]) continue;
    for (std::uint32_t d = x; d != 0; d &= d - 1) mark[x ^ (d & ~(d - 1))] = 1;
  }
  std::vector<std::uint32_t> masks;
  for (std::uint32_t x = 0; x < mark.size(); ++x)
    if (mark[x]) masks.push_back(x);
  return Matroid(universe_size, SetFamily(universe_size, std::move(masks)));
}

/// The dual: bases are the complements of the bases.
inline Matroid dual(const Matroid& m) {
  const std::uint32_t full = Subset::full_mask(m.universe_size());
  const SetFamily primal_bases = bases(m);
  std::vector<std::uint32_t> co;
  co.reserve(primal_bases.size());
  for (std::size_t i = 0; i < primal_bases.size(); ++i)
    co.push_back(~primal_bases.mask_at(i) & full);
  return matroid_from_bases(m.universe_size(), SetFamily(m.universe_size(), std::move(co)));
}

/// A minor: a matroid whose ground set was re-indexed to 0..k-1, with
/// the map back to the parent universe.
class Minor {
 public:
  Minor(Matroid matroid, std::vector<ElementId> parent_elements, int parent_universe_size)
      : matroid_(std::move(matroid)),
        parent_elements_(std::move(parent_elements)),
        parent_universe_size_(parent_universe_size) {}

  const Matroid& matroid() const { return matroid_; }
  const std::vector<ElementId>& parent_elements() const { return parent_elements_; }
  int parent_universe_size() const { return parent_universe_size_; }

  /// Ground set of this minor as a subset of the parent universe.
  Subset ground_in_parent() const {
    std::uint32_t m = 0;
    for (ElementId e : parent_elements_) m |= std::uint32_t{1} << e;
    return Subset(parent_universe_size_, m);
  }

  std::uint32_t mask_to_parent(std::uint32_t child_mask) const {
    std::uint32_t out = 0;
    for (std::uint32_t d = child_mask; d != 0; d &= d - 1)
      out |= std::uint32_t{1}
             << parent_elements_[static_cast<std::size_t>(std::countr_zero(d))];
    return out;
  }

  std::uint32_t mask_to_child(std::uint32_t parent_mask) const {
    return detail::compact_bits(parent_mask, ground_in_parent().mask());
  }

  Subset to_parent(const Subset& child_set) const {
    return Subset(parent_universe_size_, mask_to_parent(child_set.mask()));
  }

  /// Re-expresses a set of parent elements in this minor's indexing.
  /// The set must lie inside the minor's ground set.
  Subset to_child(const Subset& parent_set) const {
    if (!parent_set.is_subset_of(ground_in_parent()))
      throw OutOfUniverseError("set has elements outside the minor's ground set");
    return Subset(matroid_.universe_size(), mask_to_child(parent_set.mask()));
  }

  /// Translates a whole family back to parent-universe element names.
  SetFamily lift(const SetFamily& child_family) const {
    std::vector<std::uint32_t> masks;
    masks.reserve(child_family.size());
    for (std::size_t i = 0; i < child_family.size(); ++i)
      masks.push_back(mask_to_parent(child_family.mask_at(i)));
    return SetFamily(parent_universe_size_, std::move(masks));
  }

  friend bool operator==(const Minor& a, const Minor& b) {
    return a.parent_universe_size_ == b.parent_universe_size_ &&
           a.parent_elements_ == b.parent_elements_ && a.matroid_ == b.matroid_;
  }

 private:
  Matroid matroid_;
  std::vector<ElementId> parent_elements_;
  int parent_universe_size_;
};

/// Restriction to X: independents of m that lie inside X, on the ground
/// set X re-indexed to 0..|X|-1.
inline Minor restriction(const Matroid& m, const Subset& x) {
  if (x.universe_size() != m.universe_size())
    throw UniverseMismatchError("restriction set is over a different universe");
  const std::uint32_t sel = x.mask();
  std::vector<std::uint32_t> masks;
  const SetFamily& fam = m.independents();
  for (std::size_t i = 0; i < fam.size(); ++i) {
    const std::uint32_t member = fam.mask_at(i);
    if (detail::submask(member, sel))
      masks.push_back(detail::compact_bits(member, sel));
  }
  const int k = detail::popcount(sel);
  return Minor(Matroid(k, SetFamily(k, std::move(masks))), x.elements(),
               m.universe_size());
}

/// Independents of the contraction by T for one chosen base of the
/// restriction to T: sets I inside U-T with I union base independent,
/// re-indexed onto U-T. The result is the same family for every base
/// choice; contraction_with_base wraps it in a minor.
inline SetFamily contraction_independents(const Matroid& m, const Subset& t,
                                          const Subset& base_of_t) {
  if (t.universe_size() != m.universe_size())
    throw UniverseMismatchError("contraction set is over a different universe");
  if (!base_of_t.is_subset_of(t) || !m.independent(base_of_t))
    throw InvalidParameterError("chosen set is not a base of the restriction");
  for (std::uint32_t d = t.mask() & ~base_of_t.mask(); d != 0; d &= d - 1)
    if (m.independents().contains_mask(base_of_t.mask() | (d & ~(d - 1))))
      throw InvalidParameterError("chosen set is not maximal in the restriction");

  const std::uint32_t keep = ~t.mask() & Subset::full_mask(m.universe_size());
  const std::uint32_t bt = base_of_t.mask();
  std::vector<std::uint32_t> masks;
  const SetFamily& fam = m.independents();
  for (std::size_t i = 0; i < fam.size(); ++i) {
    const std::uint32_t member = fam.mask_at(i);
    if ((member & t.mask()) == bt)
      masks.push_back(detail::compact_bits(member & keep, keep));
  }
  return SetFamily(detail::popcount(keep), std::move(masks));
}

inline Minor contraction_with_base(const Matroid& m, const Subset& t,
                                   const Subset& base_of_t) {
  SetFamily family = contraction_independents(m, t, base_of_t);
  const int k = family.universe_size();
  return Minor(Matroid(k, std::move(family)), t.complement().elements(),
               m.universe_size());
}

/// Contraction by T, using the canonically-first base of the restriction
/// to T (the one with the smallest mask).
inline Minor contraction(const Matroid& m, const Subset& t) {
  const Minor rest = restriction(m, t);
  const SetFamily rbases = bases(rest.matroid());
  const Subset base_of_t(m.universe_size(), rest.mask_to_parent(rbases.mask_at(0)));
  return contraction_with_base(m, t, base_of_t);
}

// ---------------------------------------------------------------------------
// exhaustive rank-side checks
// ---------------------------------------------------------------------------

inline void check_pairwise_cap(int n, int cap) {
  if (n > cap)
    throw CapExceededError("universe size " + std::to_string(n) +
                           " exceeds the exhaustive pair-check cap " +
                           std::to_string(cap));
}

/// R1 (bounds), R2 (monotonicity over every nested pair) and R3
/// (submodularity over every pair), from the exact rank table.
inline AxiomReport check_rank_axioms(const Matroid& m, int cap = caps::pairwise) {
  const int n = m.universe_size();
  check_pairwise_cap(n, cap);
  const auto r = rank_table(m);
  const std::uint32_t count = static_cast<std::uint32_t>(r.size());
  AxiomReport report;

  for (std::uint32_t x = 0; x < count; ++x)
    if (r[x] > detail::popcount(x)) {
      report.violation = AxiomViolation{"R1", {Subset(n, x)}, std::nullopt};
      return report;
    }
  for (std::uint32_t y = 0; y < count; ++y) {
    for (std::uint32_t x = y;; x = (x - 1) & y) {
      if (r[x] > r[y]) {
        report.violation =
            AxiomViolation{"R2", {Subset(n, x), Subset(n, y)}, std::nullopt};
        return report;
      }
      if (x == 0) break;
    }
  }
  for (std::uint32_t x = 0; x < count; ++x)
    for (std::uint32_t y = 0; y < count; ++y)
      if (r[x] + r[y] < r[x | y] + r[x & y]) {
        report.violation =
            AxiomViolation{"R3", {Subset(n, x), Subset(n, y)}, std::nullopt};
        return report;
      }
  return report;
}

/// For every X: if no single element of Y-X raises the rank of X, then Y
/// does not either. Checked through the largest such Y (the union E of
/// all rank-preserving elements); monotonicity squeezes every smaller Y.
inline AxiomReport check_rank_extension(const Matroid& m, int cap = caps::pairwise) {
  const int n = m.universe_size();
  check_pairwise_cap(n, cap);
  const auto r = rank_table(m);
  const std::uint32_t count = static_cast<std::uint32_t>(r.size());
  AxiomReport report;
  for (std::uint32_t x = 0; x < count; ++x) {
    std::uint32_t extension = 0;
    for (int e = 0; e < n; ++e) {
      const std::uint32_t bit = std::uint32_t{1} << e;
      if (!(x & bit) && r[x | bit] == r[x]) extension |= bit;
    }
    if (r[x | extension] != r[x]) {
      report.violation = AxiomViolation{
          "rank-extension", {Subset(n, x), Subset(n, extension)}, std::nullopt};
      return report;
    }
  }
  return report;
}

/// Contraction/parent rank identity: for every X inside U-T, the rank of
/// X in M/T equals r(X union T) - r(T).
inline AxiomReport check_contraction_rank(const Matroid& m, const Subset& t,
                                          int cap = caps::pairwise) {
  if (t.universe_size() != m.universe_size())
    throw UniverseMismatchError("contraction set is over a different universe");
  const int n = m.universe_size();
  check_pairwise_cap(n, cap);

  const Minor minor = contraction(m, t);
  const auto parent_rank = rank_table(m);
  const auto child_rank = rank_table(minor.matroid());
  const std::uint32_t keep = ~t.mask() & Subset::full_mask(n);
  const int base = parent_rank[t.mask()];

  AxiomReport report;
  for (std::uint32_t x = keep;; x = (x - 1) & keep) {
    const std::uint32_t child = detail::compact_bits(x, keep);
    if (child_rank[child] != parent_rank[x | t.mask()] - base) {
      report.violation = AxiomViolation{"contraction-rank", {Subset(n, x)}, std::nullopt};
      return report;
    }
    if (x == 0) break;
  }
  return report;
}

}  // namespace roughmatroid
