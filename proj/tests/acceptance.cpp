// acceptance.cpp -- end-to-end acceptance suite. One line per criterion;
// exits nonzero if any criterion fails. Usage:
//   roughmatroid_acceptance <cli-binary> <fixture-dir>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "roughmatroid.hpp"

using namespace roughmatroid;
using helpers::sub;

namespace {

std::string g_cli;
std::string g_data;

struct Failure {
  std::string detail;
};

#define EXPECT(cond, message)                         \
  do {                                                \
    if (!(cond)) return Failure{message};             \
  } while (0)

using Criterion = std::function<std::optional<Failure>()>;

// deterministic instance stream: n in [1, max_n], block count in [1, n]
std::vector<Partition> instance_stream(std::uint64_t seed, int count, int max_n) {
  detail::SeededRng rng(seed);
  std::vector<Partition> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n)));
    const int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    out.push_back(random_partition(n, k, rng.next()));
  }
  return out;
}

std::optional<Failure> criterion_fixture_matroid() {
  const Matroid m = helpers::fixture_triangle_loop_matroid();
  EXPECT(bases(m) == SetFamily(4, std::vector<Subset>{sub(4, {0, 1}), sub(4, {0, 2}),
                                                      sub(4, {1, 2})}),
         "bases of the triangle-with-loop matroid are wrong");
  EXPECT(circuits(m) ==
             SetFamily(4, std::vector<Subset>{sub(4, {3}), sub(4, {0, 1, 2})}),
         "circuits of the triangle-with-loop matroid are wrong");
  EXPECT(rank(m, sub(4, {0})) == 1, "rank of {a} must be 1");
  EXPECT(rank(m, sub(4, {0, 1, 2})) == 2, "rank of {a b c} must be 2");
  EXPECT(rank(m, sub(4, {0, 1, 3})) == 2, "rank of {a b d} must be 2");
  return std::nullopt;
}

std::optional<Failure> criterion_fixture_induced() {
  const Partition p = helpers::fixture_two_three();
  const InducedMatroid im(p);
  const DualInducedMatroid dm(im);

  const SetFamily independents(
      5, std::vector<Subset>{
             sub(5, {}),        sub(5, {0}),       sub(5, {1}),       sub(5, {2}),
             sub(5, {3}),       sub(5, {4}),       sub(5, {0, 2}),    sub(5, {0, 3}),
             sub(5, {0, 4}),    sub(5, {1, 2}),    sub(5, {1, 3}),    sub(5, {1, 4}),
             sub(5, {2, 3}),    sub(5, {2, 4}),    sub(5, {3, 4}),    sub(5, {0, 2, 3}),
             sub(5, {0, 2, 4}), sub(5, {0, 3, 4}), sub(5, {1, 2, 3}), sub(5, {1, 2, 4}),
             sub(5, {1, 3, 4})});
  EXPECT(im.matroid().independents() == independents,
         "induced independents differ from the 21 expected sets");

  const SetFamily base_family(
      5, std::vector<Subset>{sub(5, {0, 2, 3}), sub(5, {0, 2, 4}), sub(5, {0, 3, 4}),
                             sub(5, {1, 2, 3}), sub(5, {1, 2, 4}), sub(5, {1, 3, 4})});
  EXPECT(bases(im.matroid()) == base_family, "induced bases differ");

  const SetFamily dual_bases(
      5, std::vector<Subset>{sub(5, {0, 2}), sub(5, {0, 3}), sub(5, {0, 4}),
                             sub(5, {1, 2}), sub(5, {1, 3}), sub(5, {1, 4})});
  EXPECT(bases(dm.matroid()) == dual_bases, "dual bases differ");

  const SetFamily dual_independents(
      5, std::vector<Subset>{sub(5, {}), sub(5, {0}), sub(5, {1}), sub(5, {2}),
                             sub(5, {3}), sub(5, {4}), sub(5, {0, 2}), sub(5, {0, 3}),
                             sub(5, {0, 4}), sub(5, {1, 2}), sub(5, {1, 3}),
                             sub(5, {1, 4})});
  EXPECT(dm.matroid().independents() == dual_independents,
         "dual independents differ from the 12 expected sets");

  EXPECT(rank(dm.matroid(), sub(5, {0, 2})) == 2, "dual rank of {a c} must be 2");
  EXPECT(rank(dm.matroid(), sub(5, {2, 3, 4})) == 1, "dual rank of {c d e} must be 1");
  return std::nullopt;
}

std::optional<Failure> criterion_counting() {
  for (const Partition& p : instance_stream(0xC0117, 200, 12)) {
    std::uint64_t independents = 1, base_count = 1, dual_independents = 1;
    for (std::size_t i = 0; i < p.block_count(); ++i) {
      const int size = p.block(i).cardinality();
      independents *= (std::uint64_t{1} << size) - 1;
      base_count *= static_cast<std::uint64_t>(size);
      dual_independents *= static_cast<std::uint64_t>(size) + 1;
    }
    const InducedMatroid im(p);
    const DualInducedMatroid dm(im);
    EXPECT(im.matroid().independents().size() == independents,
           "independent-set count product failed");
    EXPECT(bases(im.matroid()).size() == base_count, "base count product failed");
    EXPECT(bases(dm.matroid()).size() == base_count, "dual base count product failed");
    EXPECT(dm.matroid().independents().size() == dual_independents,
           "dual independent-set count product failed");
  }
  return std::nullopt;
}

std::optional<Failure> criterion_axiom_suites() {
  for (const Partition& p : instance_stream(0xA1103, 200, 10)) {
    const InducedMatroid im(p);
    const DualInducedMatroid dm(im);
    for (const Matroid* m : {&im.matroid(), &dm.matroid()}) {
      EXPECT(check_independence_axioms(m->universe_size(), m->independents()).passed(),
             "independence axioms failed");
      EXPECT(check_base_axiom(m->universe_size(), bases(*m)).passed(),
             "base axioms failed");
      EXPECT(check_rank_axioms(*m).passed(), "rank axioms failed");
    }
  }
  return std::nullopt;
}

std::optional<Failure> criterion_pawlak() {
  for (const Partition& p : instance_stream(0x9A41AB, 200, 8)) {
    const PawlakReport report = verify_pawlak_properties(p);
    EXPECT(report.entries.size() == 16, "expected sixteen approximation laws");
    EXPECT(report.all_passed() && !report.has_skips(),
           "an approximation law failed or was skipped");
  }
  return std::nullopt;
}

std::optional<Failure> criterion_duality_minors() {
  // involution over the full stream
  for (const Partition& p : instance_stream(0xD0A1, 200, 10)) {
    const InducedMatroid im(p);
    EXPECT(dual(dual(im.matroid())) == im.matroid(), "double dual is not the identity");
  }
  // base-choice invariance of contraction, all T and all bases, n <= 10
  std::vector<Partition> invariance = instance_stream(0xB7, 20, 10);
  invariance.push_back(helpers::fixture_two_three());
  invariance.push_back(helpers::fixture_triple_single());
  for (const Partition& p : invariance) {
    const InducedMatroid im(p);
    const DualInducedMatroid dm(im);
    for (const Matroid* m : {&im.matroid(), &dm.matroid()}) {
      const int n = m->universe_size();
      for (std::uint32_t t = 0; t < (std::uint32_t{1} << n); ++t) {
        const Subset ts(n, t);
        const Minor rest = restriction(*m, ts);
        const SetFamily choices = bases(rest.matroid());
        const SetFamily canonical = contraction_independents(
            *m, ts, Subset(n, rest.mask_to_parent(choices.mask_at(0))));
        for (std::size_t i = 1; i < choices.size(); ++i) {
          const Subset base(n, rest.mask_to_parent(choices.mask_at(i)));
          EXPECT(contraction_independents(*m, ts, base) == canonical,
                 "contraction depends on the chosen base");
        }
      }
    }
  }
  // contraction rank identity for every T and X, n <= 8
  for (const Partition& p : instance_stream(0x6B1D, 200, 8)) {
    const InducedMatroid im(p);
    const DualInducedMatroid dm(im);
    for (const Matroid* m : {&im.matroid(), &dm.matroid()}) {
      const int n = m->universe_size();
      for (std::uint32_t t = 0; t < (std::uint32_t{1} << n); ++t)
        EXPECT(check_contraction_rank(*m, Subset(n, t)).passed(),
               "contraction rank identity failed");
    }
  }
  return std::nullopt;
}

std::optional<Failure> criterion_contraction_theorems() {
  for (const Partition& p : instance_stream(0xC0217AC7, 200, 10)) {
    const DualInducedMatroid dm{InducedMatroid(p)};
    for (ElementId x = 0; x < p.universe_size(); ++x) {
      EXPECT(verify_contraction_independents(dm, x).passed,
             "point/class contraction independents differ");
      EXPECT(verify_contraction_bases(dm, x).passed,
             "point/class contraction bases differ");
      EXPECT(verify_contraction_rank(dm, x).passed,
             "point/class contraction ranks differ");
      EXPECT(verify_circuit_containment(dm, x).passed(),
             "circuit containment or its surplus failed");
      EXPECT(verify_circuit_equality_after_restriction(dm, x).passed,
             "circuit equality after restriction failed");
    }
  }
  return std::nullopt;
}

std::optional<Failure> criterion_closed_forms() {
  std::vector<Partition> stream = instance_stream(0xF0BB, 200, 10);
  stream.push_back(helpers::fixture_two_three());
  stream.push_back(helpers::fixture_triple_single());
  for (const Partition& p : stream) {
    const int n = p.universe_size();
    const InducedMatroid im(p);
    const DualInducedMatroid dm(im);
    const auto primal_rank = rank_table(im.matroid());
    const auto dual_rank = rank_table(dm.matroid());
    const auto present = detail::presence_table(im.matroid().independents());
    for (std::uint32_t mask = 0; mask < present.size(); ++mask) {
      const Subset x(n, mask);
      const bool closed = independent_closed_form(p, x);
      EXPECT(closed == lower_approximation(p, x).is_empty(),
             "independence closed form disagrees with the operator route");
      EXPECT(closed == static_cast<bool>(present[mask]),
             "independence closed form disagrees with the engine");
      EXPECT(dual_rank_closed_form(p, x) == static_cast<int>(dual_rank[mask]),
             "dual rank closed form disagrees with the engine");
      EXPECT(primal_rank_closed_form(p, x) == static_cast<int>(primal_rank[mask]),
             "primal rank formula disagrees with the engine");
    }
    EXPECT(bases_closed_form(p) == bases(im.matroid()),
           "bases closed form disagrees with the engine");
    const SetFamily transversals = transversals_closed_form(p);
    EXPECT(check_base_axiom(n, transversals).passed(),
           "transversal family fails the base axiom");
    std::vector<std::uint32_t> complements;
    const SetFamily primal_bases = bases(im.matroid());
    for (std::size_t i = 0; i < primal_bases.size(); ++i)
      complements.push_back(~primal_bases.mask_at(i) & Subset::full_mask(n));
    EXPECT(transversals == SetFamily(n, std::move(complements)),
           "transversals are not the base complements");
    EXPECT(transversals == bases(dm.matroid()),
           "transversals are not the dual bases");
    EXPECT(partial_transversals_closed_form(p) == dm.matroid().independents(),
           "partial transversals are not the dual independents");
  }
  return std::nullopt;
}

struct CliRun {
  int exit_code = -1;
  std::string output;
};

CliRun run_cli(const std::string& args) {
  const std::string command = g_cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  CliRun run;
  if (!pipe) return run;
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    run.output.append(buffer.data(), got);
  const int status = pclose(pipe);
  run.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return run;
}

std::optional<Failure> criterion_cli_determinism() {
  const std::string instance = g_data + "/two_three.instance";
  const CliRun first = run_cli("-i " + instance + " verify");
  const CliRun second = run_cli("-i " + instance + " verify");
  EXPECT(first.exit_code == 0, "verify did not exit 0 on the fixture");
  EXPECT(!first.output.empty(), "verify produced no output");
  EXPECT(first.output == second.output, "verify output is not byte-identical");

  for (const char* name :
       {"two_three.instance", "triple_single.instance", "singleton.instance",
        "identity4.instance", "oneblock3.instance"}) {
    std::ifstream in(g_data + "/" + name, std::ios::binary);
    EXPECT(in.good(), std::string("missing fixture ") + name);
    std::ostringstream text;
    text << in.rdbuf();
    const InstanceDocument doc = parse_instance(text.str());
    EXPECT(parse_instance(print_instance(doc)) == doc,
           std::string("parse/print round trip failed on ") + name);
    EXPECT(print_instance(doc) == text.str(),
           std::string("fixture is not in canonical form: ") + name);
  }
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: roughmatroid_acceptance <cli-binary> <fixture-dir>\n";
    return 2;
  }
  g_cli = argv[1];
  g_data = argv[2];

  const std::vector<std::pair<std::string, Criterion>> criteria = {
      {"fixture matroid: bases, circuits and ranks", criterion_fixture_matroid},
      {"fixture induced matroid: all four families and dual ranks",
       criterion_fixture_induced},
      {"counting identities on 200 seeded instances (n <= 12)", criterion_counting},
      {"independence, base and rank axioms on 200 seeded instances (n <= 10)",
       criterion_axiom_suites},
      {"sixteen approximation laws on 200 seeded instances (n <= 8)",
       criterion_pawlak},
      {"double dual, base-choice invariance, contraction rank identity",
       criterion_duality_minors},
      {"point-vs-class contraction theorems on 200 seeded instances (n <= 10)",
       criterion_contraction_theorems},
      {"closed forms agree with the engine on every subset (n <= 10)",
       criterion_closed_forms},
      {"CLI determinism and fixture round trips", criterion_cli_determinism},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::optional<Failure> failure;
    try {
      failure = criteria[i].second();
    } catch (const std::exception& e) {
      failure = Failure{std::string("exception: ") + e.what()};
    }
    if (failure) {
      ++failures;
      std::cout << "[FAIL] criterion " << (i + 1) << ": " << criteria[i].first
                << " -- " << failure->detail << "\n";
    } else {
      std::cout << "[PASS] criterion " << (i + 1) << ": " << criteria[i].first << "\n";
    }
  }
  std::cout << (failures == 0 ? "all criteria passed"
                              : std::to_string(failures) + " criteria failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}
