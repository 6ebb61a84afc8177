#include "semicat/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "semicat/aut.hpp"
#include "semicat/congruence.hpp"
#include "semicat/decomp.hpp"
#include "semicat/errors.hpp"
#include "semicat/family.hpp"
#include "semicat/json_io.hpp"
#include "semicat/semigroup.hpp"
#include "semicat/verify.hpp"

namespace semicat {

namespace {

std::vector<int> parse_int_list(std::string const& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoi(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (std::exception const&) {
      throw InputError("not an integer list: " + text);
    }
  }
  if (out.empty()) throw InputError("empty integer list");
  return out;
}

std::vector<std::pair<int, int>> parse_pairs(Json const& j, int order) {
  if (!j.is_array()) throw InputError("expected an array of pairs");
  std::vector<std::pair<int, int>> out;
  for (auto const& row : j) {
    if (!row.is_array() || row.size() != 2 || !row[0].is_number_integer() ||
        !row[1].is_number_integer())
      throw InputError("each generator must be a pair of elements");
    int const a = row[0].get<int>(), b = row[1].get<int>();
    if (a < 0 || a >= order || b < 0 || b >= order)
      throw InputError("generator pair out of range");
    out.emplace_back(a, b);
  }
  return out;
}

struct OrbitsArgs {
  std::string input;
  int n = 1;
  std::string fix;
  std::string setwise_path;
  std::string classes_path;
};

void run_orbits(OrbitsArgs const& a, std::ostream& out) {
  auto const s = semigroup_from_json(read_json_file(a.input));
  auto group = automorphism_group(s);
  std::string desc = "full";

  if (!a.fix.empty()) {
    auto const tuple = parse_int_list(a.fix);
    for (int x : tuple)
      if (x < 0 || x >= s.order()) throw InputError("fixed element out of range");
    group = pointwise_stabilizer(group, tuple);
    desc = "pointwise stabilizer of (" + a.fix + ")";
  }
  if (!a.setwise_path.empty()) {
    auto const j = read_json_file(a.setwise_path);
    if (!j.is_array()) throw InputError("setwise file must hold an array of sets");
    std::vector<std::vector<int>> sets;
    for (auto const& row : j) {
      sets.emplace_back();
      if (!row.is_array()) throw InputError("setwise file must hold an array of sets");
      for (auto const& x : row) {
        if (!x.is_number_integer() || x.get<int>() < 0 || x.get<int>() >= s.order())
          throw InputError("setwise entry out of range");
        sets.back().push_back(x.get<int>());
      }
    }
    group = setwise_stabilizer(group, sets);
    desc = (desc == "full" ? "" : desc + ", ") + std::string("setwise stabilizer of ") +
           std::to_string(sets.size()) + " sets";
  }

  if (!a.classes_path.empty()) {
    auto const tau = partition_from_json(read_json_file(a.classes_path));
    if (tau.size() != s.order())
      throw InputError("class partition size disagrees with the semigroup");
    Json j;
    j["n"] = a.n;
    j["group"] = desc;
    j["classes"] = tau.n_blocks();
    j["orbit_count"] = class_orbit_count(s, tau, a.n, &group);
    out << dump_json(j);
    return;
  }
  out << dump_json(orbit_report_to_json(orbit_count(s, a.n, group, {}, desc)));
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact structure calculator for finite semigroups"};
  app.name("semicat");
  app.require_subcommand(1);

  std::string recipe_path, out_path;
  auto* construct = app.add_subcommand("construct", "build a semigroup from a recipe");
  construct->add_option("--recipe", recipe_path, "recipe JSON file")->required();
  construct->add_option("--out", out_path, "write the semigroup here instead of stdout");

  std::string analyze_input;
  bool with_green = false;
  auto* analyze = app.add_subcommand("analyze", "structural predicates and class counts");
  analyze->add_option("input", analyze_input, "semigroup JSON file")->required();
  analyze->add_flag("--green", with_green, "include the egg-box picture per D-class");

  OrbitsArgs orbits_args;
  auto* orbits = app.add_subcommand("orbits", "automorphism orbits on tuples");
  orbits->add_option("input", orbits_args.input, "semigroup JSON file")->required();
  orbits->add_option("-n,--n", orbits_args.n, "tuple length")->check(CLI::PositiveNumber);
  orbits->add_option("--fix", orbits_args.fix, "comma list of elements to fix pointwise");
  orbits->add_option("--setwise", orbits_args.setwise_path,
                     "JSON file with sets to stabilize setwise");
  orbits->add_option("--classes", orbits_args.classes_path,
                     "partition JSON file; count orbits on class tuples");

  std::string aut_input;
  auto* aut = app.add_subcommand("aut", "automorphism group order and generators");
  aut->add_option("input", aut_input, "semigroup JSON file")->required();

  std::string cong_input, generated_path, rees_path;
  bool want_sigma = false, want_mu = false;
  auto* congruence = app.add_subcommand("congruence", "distinguished congruences");
  congruence->add_option("input", cong_input, "semigroup JSON file")->required();
  congruence->add_flag("--sigma", want_sigma, "least group congruence");
  congruence->add_flag("--mu", want_mu, "maximum idempotent-separating congruence");
  congruence->add_option("--generated", generated_path, "JSON file of generating pairs");
  congruence->add_option("--rees", rees_path, "JSON file listing an ideal");

  std::string decompose_input;
  auto* decompose = app.add_subcommand("decompose", "greatest 0-direct decomposition");
  decompose->add_option("input", decompose_input, "semigroup JSON file")->required();

  FamilySpec family_spec;
  auto* family = app.add_subcommand("family", "statistic growth over a family");
  family->add_option("--family", family_spec.family, "family name")->required();
  family->add_option("--from", family_spec.from, "first parameter")->required();
  family->add_option("--to", family_spec.to, "last parameter")->required();
  family->add_option("--statistic", family_spec.statistic,
                     "tau, orbit_count or aut_order");
  family->add_option("-n,--n", family_spec.n, "tuple length for orbit_count");
  family->add_option("--base", family_spec.base,
                     "builtin group or factor for brandt / direct_power");

  std::string suite;
  std::uint64_t seed = kDefaultVerifySeed;
  auto* verify = app.add_subcommand("verify", "run a self-check battery");
  verify->add_option("suite", suite, "suite name")->required();
  verify->add_option("--seed", seed, "seed for randomized suites");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return 0;
  } catch (CLI::ParseError const& e) {
    err << e.get_name() << ": " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(construct)) {
      auto const s = semigroup_from_recipe(read_json_file(recipe_path));
      if (out_path.empty())
        out << dump_json(semigroup_to_json(s));
      else
        write_json_file(out_path, semigroup_to_json(s));
    } else if (app.got_subcommand(analyze)) {
      auto const s = semigroup_from_json(read_json_file(analyze_input));
      out << dump_json(analysis_to_json(s, with_green));
    } else if (app.got_subcommand(orbits)) {
      run_orbits(orbits_args, out);
    } else if (app.got_subcommand(aut)) {
      auto const s = semigroup_from_json(read_json_file(aut_input));
      out << dump_json(aut_group_to_json(automorphism_group(s)));
    } else if (app.got_subcommand(congruence)) {
      int const modes = static_cast<int>(want_sigma) + static_cast<int>(want_mu) +
                        static_cast<int>(!generated_path.empty()) +
                        static_cast<int>(!rees_path.empty());
      if (modes != 1)
        throw InputError("choose exactly one of --sigma, --mu, --generated, --rees");
      auto const s = semigroup_from_json(read_json_file(cong_input));
      Json j;
      if (want_sigma) {
        auto const p = least_group_congruence(s);
        j["kind"] = "sigma";
        j["n_blocks"] = p.n_blocks();
        j["partition"] = partition_to_json(p);
      } else if (want_mu) {
        auto const p = max_idempotent_separating(s);
        j["kind"] = "mu";
        j["n_blocks"] = p.n_blocks();
        j["partition"] = partition_to_json(p);
      } else if (!generated_path.empty()) {
        auto const pairs = parse_pairs(read_json_file(generated_path), s.order());
        auto const p = congruence_generated_by(s, pairs);
        j["kind"] = "generated";
        j["n_blocks"] = p.n_blocks();
        j["partition"] = partition_to_json(p);
      } else {
        auto const j_ideal = read_json_file(rees_path);
        if (!j_ideal.is_array()) throw InputError("ideal file must hold an array");
        std::vector<int> ideal;
        for (auto const& x : j_ideal) {
          if (!x.is_number_integer()) throw InputError("ideal file must hold integers");
          ideal.push_back(x.get<int>());
        }
        auto const q = rees_quotient(s, ideal);
        UnionFind uf(s.order());
        for (size_t i = 1; i < ideal.size(); ++i) uf.unite(ideal[0], ideal[i]);
        auto const p = Partition::from_union_find(uf);
        j["kind"] = "rees";
        j["n_blocks"] = p.n_blocks();
        j["partition"] = partition_to_json(p);
        j["quotient"] = semigroup_to_json(q);
      }
      out << dump_json(j);
    } else if (app.got_subcommand(decompose)) {
      auto const s = semigroup_from_json(read_json_file(decompose_input));
      out << dump_json(decomposition_to_json(s, greatest_zero_direct_decomposition(s)));
    } else if (app.got_subcommand(family)) {
      out << dump_json(family_report_to_json(run_family(family_spec)));
    } else if (app.got_subcommand(verify)) {
      auto const report = run_verify(suite, seed);
      out << dump_json(verify_report_to_json(report));
      return report.ok() ? 0 : 1;
    }
  } catch (CheckError const& e) {
    err << "check failed: " << e.what() << "\n";
    return 1;
  } catch (InputError const& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace semicat
