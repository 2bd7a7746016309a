// roughmatroid CLI: approximation queries, matroid listings, rank queries,
// contractions, the verification suite and a seeded instance generator.
#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "roughmatroid.hpp"

namespace rm = roughmatroid;

namespace {

constexpr int kExitAllPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInputError = 2;
constexpr int kExitCapExceeded = 3;

rm::InstanceDocument load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw rm::InvalidParameterError("cannot open instance file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return rm::parse_instance(buffer.str());
}

rm::Subset subset_from_names(const rm::Universe& u, const std::vector<std::string>& names) {
  rm::Subset s(u.size());
  for (const std::string& name : names) {
    const auto id = u.index_of(name);
    if (!id) throw rm::UnknownElementError("unknown element: " + name);
    s = s.with(*id);
  }
  return s;
}

// approx output: plain name list; the empty set prints as an empty line
std::string format_plain(const rm::Subset& s, const rm::Universe& u) {
  std::string out;
  for (rm::ElementId e : s.elements()) {
    if (!out.empty()) out += ' ';
    out += u.label(e);
  }
  return out;
}

void require_exactly_one(bool a, bool b, const std::string& what) {
  if (a == b)
    throw rm::InvalidParameterError("choose exactly one of " + what);
}

int run_approx(const std::string& path, bool lower, bool upper,
               const std::vector<std::string>& names) {
  require_exactly_one(lower, upper, "--lower/--upper");
  const rm::Partition p = rm::to_partition(load_instance(path));
  const rm::Subset x = subset_from_names(p.universe(), names);
  const rm::Subset result =
      lower ? rm::lower_approximation(p, x) : rm::upper_approximation(p, x);
  std::cout << format_plain(result, p.universe()) << "\n";
  return kExitAllPass;
}

const rm::Matroid& pick_matroid(bool primal, const rm::InducedMatroid& im,
                                const rm::DualInducedMatroid& dm) {
  return primal ? im.matroid() : dm.matroid();
}

int run_matroid(const std::string& path, bool primal, bool dual_side,
                bool independents, bool base_family, bool circuit_family) {
  require_exactly_one(primal, dual_side, "--primal/--dual");
  if (independents + base_family + circuit_family != 1)
    throw rm::InvalidParameterError(
        "choose exactly one of --independents/--bases/--circuits");
  const rm::Partition p = rm::to_partition(load_instance(path));
  const rm::InducedMatroid im(p);
  const rm::DualInducedMatroid dm(im);
  const rm::Matroid& m = pick_matroid(primal, im, dm);
  const rm::SetFamily family = independents  ? m.independents()
                               : base_family ? rm::bases(m)
                                             : rm::circuits(m);
  std::cout << rm::format_family(family, p.universe());
  return kExitAllPass;
}

int run_rank(const std::string& path, bool primal, bool dual_side,
             const std::vector<std::string>& names) {
  require_exactly_one(primal, dual_side, "--primal/--dual");
  const rm::Partition p = rm::to_partition(load_instance(path));
  const rm::Subset x = subset_from_names(p.universe(), names);
  const rm::InducedMatroid im(p);
  int value = 0;
  if (primal) {
    value = rm::rank(im.matroid(), x);
  } else {
    const rm::DualInducedMatroid dm(im);
    value = rm::rank(dm.matroid(), x);
    if (value != rm::dual_rank_closed_form(p, x))
      throw rm::InternalMismatchError(
          "dual rank closed form disagrees with the engine");
  }
  std::cout << value << "\n";
  return kExitAllPass;
}

int run_contract(const std::string& path, const std::string& element, bool point,
                 bool whole_class, bool independents, bool base_family,
                 bool circuit_family) {
  require_exactly_one(point, whole_class, "--point/--class");
  if (independents + base_family + circuit_family != 1)
    throw rm::InvalidParameterError(
        "choose exactly one of --independents/--bases/--circuits");
  const rm::Partition p = rm::to_partition(load_instance(path));
  const auto id = p.universe().index_of(element);
  if (!id) throw rm::UnknownElementError("unknown element: " + element);

  const rm::DualInducedMatroid dm{rm::InducedMatroid(p)};
  const rm::Subset t = point ? rm::Subset::single(p.universe_size(), *id)
                             : p.equivalence_class(*id);
  const rm::Minor minor = rm::contraction(dm.matroid(), t);
  const rm::SetFamily family = independents  ? minor.matroid().independents()
                               : base_family ? rm::bases(minor.matroid())
                                             : rm::circuits(minor.matroid());
  std::cout << rm::format_family(minor.lift(family), p.universe());
  return kExitAllPass;
}

nlohmann::ordered_json report_to_json(const rm::SuiteReport& report) {
  nlohmann::ordered_json out;
  out["digest"] = report.instance_digest;
  out["results"] = nlohmann::ordered_json::array();
  for (const rm::CheckResult& row : report.results) {
    nlohmann::ordered_json entry;
    entry["proposition"] = row.check;
    entry["subject"] = row.subject;
    entry["status"] = row.status;
    entry["witness"] = row.witness;
    out["results"].push_back(std::move(entry));
  }
  out["all_passed"] = report.all_passed();
  return out;
}

int run_verify(const std::string& path, const std::string& json_path, int cap) {
  if (cap < 1 || cap > rm::caps::construction)
    throw rm::InvalidParameterError("--cap must be between 1 and " +
                                    std::to_string(rm::caps::construction));
  const rm::InstanceDocument doc = load_instance(path);
  rm::VerifyOptions options;
  options.cap = cap;
  options.pawlak.single = std::max(options.pawlak.single, cap);
  options.pawlak.pair = std::min(options.pawlak.pair, cap);
  const rm::SuiteReport report = rm::run_suite(doc, options);

  std::cout << "instance " << report.instance_digest << "\n";
  std::size_t passed = 0, failed = 0, skipped = 0;
  for (const rm::CheckResult& row : report.results) {
    std::cout << row.status << " " << row.check << " [" << row.subject << "]";
    if (!row.witness.empty()) std::cout << " " << row.witness;
    std::cout << "\n";
    if (row.status == "pass") ++passed;
    else if (row.status == "fail") ++failed;
    else ++skipped;
  }
  std::cout << report.results.size() << " checks: " << passed << " passed, "
            << failed << " failed, " << skipped << " skipped\n";

  if (!json_path.empty()) {
    const std::string text = report_to_json(report).dump();
    if (json_path == "-") {
      std::cout << text << "\n";
    } else {
      std::ofstream out(json_path, std::ios::binary);
      if (!out) throw rm::InvalidParameterError("cannot write " + json_path);
      out << text << "\n";
    }
  }
  return report.all_passed() ? kExitAllPass : kExitVerifyFail;
}

int run_gen(int n, int blocks, std::uint64_t seed) {
  const auto index_blocks = rm::random_blocks(n, blocks, seed);
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  std::vector<std::vector<std::string>> named_blocks;
  for (const auto& block : index_blocks) {
    std::vector<std::string> named;
    for (rm::ElementId e : block) named.push_back(names[static_cast<std::size_t>(e)]);
    named_blocks.push_back(std::move(named));
  }
  std::cout << rm::print_instance(rm::make_instance(names, named_blocks));
  return kExitAllPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rough-set approximation operators and their induced matroids"};
  app.require_subcommand(1);

  std::string instance_path;
  std::string json_path;
  int cap = rm::caps::sweep;
  app.add_option("-i,--instance", instance_path, "instance file")->type_name("PATH");
  app.add_option("--json", json_path,
                 "also write the machine-readable verify report (PATH or '-')")
      ->type_name("PATH");
  app.add_option("--cap", cap, "verification cap override (1..20)");

  auto* approx = app.add_subcommand("approx", "lower or upper approximation of a set");
  bool lower = false, upper = false;
  std::vector<std::string> approx_names;
  approx->add_flag("--lower", lower, "lower approximation");
  approx->add_flag("--upper", upper, "upper approximation");
  approx->add_option("elements", approx_names, "element names");

  auto* matroid = app.add_subcommand("matroid", "list a family of the induced matroid");
  bool m_primal = false, m_dual = false, m_ind = false, m_bases = false, m_circ = false;
  matroid->add_flag("--primal", m_primal, "the induced matroid");
  matroid->add_flag("--dual", m_dual, "its dual");
  matroid->add_flag("--independents", m_ind, "independent sets");
  matroid->add_flag("--bases", m_bases, "bases");
  matroid->add_flag("--circuits", m_circ, "circuits");

  auto* rank_cmd = app.add_subcommand("rank", "rank of a set in the induced matroid");
  bool r_primal = false, r_dual = false;
  std::vector<std::string> rank_names;
  rank_cmd->add_flag("--primal", r_primal, "the induced matroid");
  rank_cmd->add_flag("--dual", r_dual, "its dual");
  rank_cmd->add_option("elements", rank_names, "element names");

  auto* contract = app.add_subcommand(
      "contract", "contract the dual matroid by a point or by its class");
  std::string contract_element;
  bool c_point = false, c_class = false, c_ind = false, c_bases = false, c_circ = false;
  contract->add_option("-x,--element", contract_element, "element name")->required();
  contract->add_flag("--point", c_point, "contract by {x}");
  contract->add_flag("--class", c_class, "contract by the class of x");
  contract->add_flag("--independents", c_ind, "independent sets");
  contract->add_flag("--bases", c_bases, "bases");
  contract->add_flag("--circuits", c_circ, "circuits");

  auto* verify = app.add_subcommand("verify", "run the full verification suite");

  auto* gen = app.add_subcommand("gen", "print a seeded random instance");
  int gen_n = 0, gen_blocks = 0;
  std::uint64_t gen_seed = 0;
  gen->add_option("-n,--elements", gen_n, "universe size")->required();
  gen->add_option("-b,--blocks", gen_blocks, "number of blocks")->required();
  gen->add_option("-s,--seed", gen_seed, "generator seed")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    auto need_instance = [&]() -> const std::string& {
      if (instance_path.empty())
        throw rm::InvalidParameterError("an instance file is required (-i PATH)");
      return instance_path;
    };
    if (approx->parsed())
      return run_approx(need_instance(), lower, upper, approx_names);
    if (matroid->parsed())
      return run_matroid(need_instance(), m_primal, m_dual, m_ind, m_bases, m_circ);
    if (rank_cmd->parsed())
      return run_rank(need_instance(), r_primal, r_dual, rank_names);
    if (contract->parsed())
      return run_contract(need_instance(), contract_element, c_point, c_class, c_ind,
                          c_bases, c_circ);
    if (verify->parsed()) return run_verify(need_instance(), json_path, cap);
    if (gen->parsed()) return run_gen(gen_n, gen_blocks, gen_seed);
    return kExitInputError;
  } catch (const rm::CapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const rm::InternalMismatchError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitVerifyFail;
  } catch (const rm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}
