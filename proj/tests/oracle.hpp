// oracle.hpp -- naive reference implementations used only by the tests.
//
// Everything here evaluates the defining formulas literally over
// std::set<int> values, with no bitmask tricks and no sharing with the
// library under test. Exponential cost throughout; call at desk scale.
#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Set = std::set<int>;
using Family = std::vector<Set>;  // kept sorted ascending by caller convention

inline bool subset_of(const Set& a, const Set& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline bool intersects(const Set& a, const Set& b) {
  for (int e : a)
    if (b.count(e)) return true;
  return false;
}

inline Set unite(const Set& a, const Set& b) {
  Set out = a;
  out.insert(b.begin(), b.end());
  return out;
}

inline Set minus(const Set& a, const Set& b) {
  Set out;
  for (int e : a)
    if (!b.count(e)) out.insert(e);
  return out;
}

inline bool member(const Family& family, const Set& s) {
  return std::find(family.begin(), family.end(), s) != family.end();
}

/// All subsets of {0..n-1}, in ascending indicator order (matching the
/// library's canonical order, so witnesses line up).
inline Family all_subsets(int n) {
  Family out;
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    Set s;
    for (int e = 0; e < n; ++e)
      if (mask & (1ul << e)) s.insert(e);
    out.push_back(s);
  }
  return out;
}

inline std::vector<Set> subsets_of(const Set& ground) {
  std::vector<int> elems(ground.begin(), ground.end());
  Family out;
  for (unsigned long mask = 0; mask < (1ul << elems.size()); ++mask) {
    Set s;
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (mask & (1ul << i)) s.insert(elems[i]);
    out.push_back(s);
  }
  return out;
}

// --- approximation operators by element scan -------------------------------

inline Set block_of(const std::vector<Set>& blocks, int e) {
  for (const Set& b : blocks)
    if (b.count(e)) return b;
  return {};
}

inline Set lower(const std::vector<Set>& blocks, int n, const Set& x) {
  Set out;
  for (int e = 0; e < n; ++e)
    if (subset_of(block_of(blocks, e), x)) out.insert(e);
  return out;
}

inline Set upper(const std::vector<Set>& blocks, int n, const Set& x) {
  Set out;
  for (int e = 0; e < n; ++e)
    if (intersects(block_of(blocks, e), x)) out.insert(e);
  return out;
}

// --- independence and base axioms, checked literally ------------------------

struct IndependenceWitness {
  std::string axiom;
  Set first;
  Set second;
};

/// I1 directly, I2 over every (member, subset) pair, I3 over every pair
/// with |I1| < |I2|. Quantifier order follows the input family order.
inline std::optional<IndependenceWitness> check_independence(const Family& family) {
  if (!member(family, {})) return IndependenceWitness{"I1", {}, {}};
  for (const Set& big : family)
    for (const Set& sub : subsets_of(big))
      if (!member(family, sub)) return IndependenceWitness{"I2", big, sub};
  for (const Set& small : family)
    for (const Set& big : family) {
      if (small.size() >= big.size()) continue;
      bool augmented = false;
      for (int e : minus(big, small)) {
        Set extended = small;
        extended.insert(e);
        if (member(family, extended)) {
          augmented = true;
          break;
        }
      }
      if (!augmented) return IndependenceWitness{"I3", small, big};
    }
  return std::nullopt;
}

struct BaseWitness {
  std::string axiom;
  Set first;
  Set second;
  int element = -1;
};

inline std::optional<BaseWitness> check_bases(const Family& family) {
  if (family.empty()) return BaseWitness{"B1", {}, {}, -1};
  for (const Set& b1 : family)
    for (const Set& b2 : family)
      for (int x : minus(b1, b2)) {
        bool exchanged = false;
        for (int y : minus(b2, b1)) {
          Set candidate = minus(b1, {x});
          candidate.insert(y);
          if (member(family, candidate)) {
            exchanged = true;
            break;
          }
        }
        if (!exchanged) return BaseWitness{"B2", b1, b2, x};
      }
  return std::nullopt;
}

// --- derived families and rank, by definition ------------------------------

inline Family max_sets(const Family& family) {
  Family out;
  for (const Set& x : family) {
    bool maximal = true;
    for (const Set& y : family)
      if (x != y && subset_of(x, y)) maximal = false;
    if (maximal) out.push_back(x);
  }
  return out;
}

inline Family min_sets(const Family& family) {
  Family out;
  for (const Set& x : family) {
    bool minimal = true;
    for (const Set& y : family)
      if (x != y && subset_of(y, x)) minimal = false;
    if (minimal) out.push_back(x);
  }
  return out;
}

inline Family bases(const Family& independents) { return max_sets(independents); }

/// Minimal members of the complement family 2^U - I.
inline Family circuits(int n, const Family& independents) {
  Family dependents;
  for (const Set& s : all_subsets(n))
    if (!member(independents, s)) dependents.push_back(s);
  return min_sets(dependents);
}

inline int rank(const Family& independents, const Set& x) {
  int best = 0;
  for (const Set& i : independents)
    if (subset_of(i, x)) best = std::max<int>(best, static_cast<int>(i.size()));
  return best;
}

/// Coindependents: sets disjoint from some base (equivalently, subsets
/// of some complement of a base).
inline Family dual_independents(int n, const Family& independents) {
  const Family base_family = bases(independents);
  Family out;
  for (const Set& s : all_subsets(n)) {
    bool coindependent = false;
    for (const Set& b : base_family)
      if (!intersects(s, b)) coindependent = true;
    if (coindependent) out.push_back(s);
  }
  return out;
}

// --- minors, by definition ---------------------------------------------------

/// Independents of the restriction to X, as parent-element sets.
inline Family restriction(const Family& independents, const Set& x) {
  Family out;
  for (const Set& i : independents)
    if (subset_of(i, x)) out.push_back(i);
  return out;
}

/// Independents of the contraction by T for one chosen base of the
/// restriction to T, as parent-element sets over U - T.
inline Family contraction(int n, const Family& independents, const Set& t,
                          const Set& base_of_t) {
  Set rest;
  for (int e = 0; e < n; ++e)
    if (!t.count(e)) rest.insert(e);
  Family out;
  for (const Set& i : subsets_of(rest))
    if (member(independents, unite(i, base_of_t))) out.push_back(i);
  return out;
}

/// Every base choice for a contraction: the maximal independents inside T.
inline Family restriction_bases(const Family& independents, const Set& t) {
  return max_sets(restriction(independents, t));
}

}  // namespace oracle
