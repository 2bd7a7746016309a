// verify.hpp -- runs every check this library knows against one instance
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "roughmatroid/caps.hpp"
#include "roughmatroid/format.hpp"
#include "roughmatroid/induced.hpp"
#include "roughmatroid/matroid.hpp"
#include "roughmatroid/rough.hpp"

namespace roughmatroid {

/// One row of the verification matrix. `check` is a descriptive
/// identifier, `subject` narrows it (a matroid, a base family, one
/// element, or one approximation law), `status` is pass/fail/skip and
/// `witness` holds the first counterexample when failing.
struct CheckResult {
  std::string check;
  std::string subject;
  std::string status;
  std::string witness;

  bool passed() const { return status != "fail"; }
};

inline bool all_passed(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results)
    if (!r.passed()) return false;
  return true;
}

struct VerifyOptions {
  int cap = caps::sweep;
  PawlakCaps pawlak{};
};

namespace detail {

inline std::string describe_violation(const AxiomViolation& v, const Universe& u) {
  std::string out = v.axiom + ":";
  for (const Subset& s : v.sets) out += " " + format_braced(s, u);
  if (v.element) out += " x=" + u.label(*v.element);
  return out;
}

inline void push_axiom_row(std::vector<CheckResult>& rows, const std::string& check,
                           const std::string& subject, const AxiomReport& report,
                           const Universe& u) {
  if (report.passed())
    rows.push_back({check, subject, "pass", ""});
  else
    rows.push_back({check, subject, "fail", describe_violation(*report.violation, u)});
}

}  // namespace detail

/// Runs the whole battery against one partition: the approximation-
/// operator laws, the independence/base/rank axioms of the induced
/// matroid and its dual, the closed-form characterizations, duality, and
/// the point-vs-class contraction relationships for every element.
/// Rows come out in a fixed order (check id, then subject), so two runs
/// on the same instance are identical.
inline std::vector<CheckResult> verify_all(const Partition& p,
                                           const VerifyOptions& options = {}) {
  const int n = p.universe_size();
  if (n > options.cap)
    throw CapExceededError("universe size " + std::to_string(n) +
                           " exceeds the verification cap " +
                           std::to_string(options.cap));
  const Universe& u = p.universe();
  std::vector<CheckResult> rows;

  // approximation-operator laws
  {
    const PawlakReport report = verify_pawlak_properties(p, options.pawlak);
    for (const auto& entry : report.entries) {
      std::string witness;
      if (entry.status == PawlakReport::Status::fail) {
        witness = "X=" + format_braced(*entry.x, u);
        if (entry.y) witness += " Y=" + format_braced(*entry.y, u);
      }
      const char* status = entry.status == PawlakReport::Status::pass   ? "pass"
                           : entry.status == PawlakReport::Status::skip ? "skip"
                                                                        : "fail";
      rows.push_back({"approximation-properties", entry.property, status, witness});
    }
  }

  const InducedMatroid induced(p);
  const DualInducedMatroid dual_induced(induced);
  const Matroid& primal = induced.matroid();
  const Matroid& co = dual_induced.matroid();

  detail::push_axiom_row(rows, "independence-axioms", "M(R)",
                         check_independence_axioms(n, primal.independents()), u);
  detail::push_axiom_row(rows, "independence-axioms", "M*(R)",
                         check_independence_axioms(n, co.independents()), u);

  const SetFamily primal_bases = bases(primal);
  const SetFamily co_bases = bases(co);
  detail::push_axiom_row(rows, "base-axioms", "B(R)",
                         check_base_axiom(n, primal_bases), u);
  detail::push_axiom_row(rows, "base-axioms", "B*(R)",
                         check_base_axiom(n, co_bases), u);

  {
    std::vector<std::uint32_t> complements;
    complements.reserve(primal_bases.size());
    for (std::size_t i = 0; i < primal_bases.size(); ++i)
      complements.push_back(~primal_bases.mask_at(i) & Subset::full_mask(n));
    const SetFamily complement_family(n, std::move(complements));
    const SetFamily transversals = transversals_closed_form(p);
    const bool ok = co_bases == complement_family && co_bases == transversals;
    rows.push_back({"base-complement-duality", "M*(R)", ok ? "pass" : "fail",
                    ok ? "" : "base families disagree"});
  }

  rows.push_back({"dual-involution", "M(R)",
                  dual(dual(primal)) == primal ? "pass" : "fail", ""});
  rows.push_back({"dual-involution", "M*(R)",
                  dual(dual(co)) == co ? "pass" : "fail", ""});

  detail::push_axiom_row(rows, "rank-axioms", "M(R)",
                         check_rank_axioms(primal, options.cap), u);
  detail::push_axiom_row(rows, "rank-axioms", "M*(R)",
                         check_rank_axioms(co, options.cap), u);

  detail::push_axiom_row(rows, "rank-extension", "M(R)",
                         check_rank_extension(primal, options.cap), u);
  detail::push_axiom_row(rows, "rank-extension", "M*(R)",
                         check_rank_extension(co, options.cap), u);

  // closed forms against the engine
  {
    const auto present = detail::presence_table(primal.independents());
    CheckResult row{"independents-closed-form", "M(R)", "pass", ""};
    for (std::uint32_t x = 0; x < present.size(); ++x) {
      const Subset set(n, x);
      const bool closed = independent_closed_form(p, set);
      const bool by_lower = lower_approximation(p, set).is_empty();
      if (closed != by_lower || closed != static_cast<bool>(present[x])) {
        row.status = "fail";
        row.witness = "X=" + format_braced(set, u);
        break;
      }
    }
    rows.push_back(row);
  }
  {
    const bool ok = bases_closed_form(p) == primal_bases;
    rows.push_back({"bases-closed-form", "M(R)", ok ? "pass" : "fail", ""});
  }
  {
    const bool ok = partial_transversals_closed_form(p) == co.independents();
    rows.push_back({"dual-independents-closed-form", "M*(R)", ok ? "pass" : "fail", ""});
  }
  {
    const auto co_rank = rank_table(co);
    CheckResult row{"dual-rank-closed-form", "M*(R)", "pass", ""};
    for (std::uint32_t x = 0; x < co_rank.size(); ++x)
      if (dual_rank_closed_form(p, Subset(n, x)) != co_rank[x]) {
        row.status = "fail";
        row.witness = "X=" + format_braced(Subset(n, x), u);
        break;
      }
    rows.push_back(row);
  }
  {
    const auto primal_rank = rank_table(primal);
    CheckResult row{"primal-rank-formula", "M(R)", "pass", ""};
    for (std::uint32_t x = 0; x < primal_rank.size(); ++x)
      if (primal_rank_closed_form(p, Subset(n, x)) != primal_rank[x]) {
        row.status = "fail";
        row.witness = "X=" + format_braced(Subset(n, x), u);
        break;
      }
    rows.push_back(row);
  }

  // rank identity of every contraction
  for (const Matroid* m : {&primal, &co}) {
    const std::string subject = m == &primal ? "M(R)" : "M*(R)";
    CheckResult row{"contraction-rank", subject, "pass", ""};
    const std::uint32_t full = Subset::full_mask(n);
    for (std::uint32_t t = 0; t <= full && row.status == "pass"; ++t) {
      const AxiomReport report = check_contraction_rank(*m, Subset(n, t), options.cap);
      if (!report.passed()) {
        row.status = "fail";
        row.witness = "T=" + format_braced(Subset(n, t), u) + " " +
                      detail::describe_violation(*report.violation, u);
      }
      if (t == full) break;
    }
    rows.push_back(row);
  }

  // point-vs-class contraction relationships, one row per element
  auto family_witness = [&](const FamilyComparison& c) {
    return c.passed ? std::string()
                    : (c.witness ? format_braced(*c.witness, u)
                                 : std::string("families differ"));
  };
  for (ElementId x = 0; x < n; ++x) {
    const std::string subject = "x=" + u.label(x);
    const FamilyComparison ind = verify_contraction_independents(dual_induced, x);
    rows.push_back({"contraction-independents", subject,
                    ind.passed ? "pass" : "fail", family_witness(ind)});
  }
  for (ElementId x = 0; x < n; ++x) {
    const std::string subject = "x=" + u.label(x);
    const FamilyComparison b = verify_contraction_bases(dual_induced, x);
    rows.push_back({"contraction-bases", subject, b.passed ? "pass" : "fail",
                    family_witness(b)});
  }
  for (ElementId x = 0; x < n; ++x) {
    const std::string subject = "x=" + u.label(x);
    const RankComparison r = verify_contraction_rank(dual_induced, x);
    rows.push_back({"contraction-rank-agreement", subject,
                    r.passed ? "pass" : "fail",
                    r.passed ? "" : "X=" + format_braced(*r.witness, u)});
  }
  for (ElementId x = 0; x < n; ++x) {
    const std::string subject = "x=" + u.label(x);
    const CircuitContainment c = verify_circuit_containment(dual_induced, x);
    std::string witness;
    if (!c.contained && c.missing)
      witness = "missing circuit " + format_braced(*c.missing, u);
    else if (!c.surplus_as_expected)
      witness = "unexpected surplus";
    rows.push_back({"contraction-circuits", subject, c.passed() ? "pass" : "fail",
                    witness});
  }
  for (ElementId x = 0; x < n; ++x) {
    const std::string subject = "x=" + u.label(x);
    const FamilyComparison c = verify_circuit_equality_after_restriction(dual_induced, x);
    rows.push_back({"contraction-circuit-restriction", subject,
                    c.passed ? "pass" : "fail", family_witness(c)});
  }

  return rows;
}

}  // namespace roughmatroid
