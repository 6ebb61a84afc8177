#include "semicat/family.hpp"

#include <future>

#include "semicat/aut.hpp"
#include "semicat/builtin.hpp"
#include "semicat/constructions.hpp"
#include "semicat/errors.hpp"
#include "semicat/semigroup.hpp"

namespace semicat {

namespace {

FiniteSemigroup member(FamilySpec const& spec, int m) {
  if (spec.family == "chain_semilattice")
    return chain_of_semigroups(
        std::vector<FiniteSemigroup>(static_cast<size_t>(m), builtin_semigroup("trivial")));
  if (spec.family == "null") return null_semigroup(m);
  if (spec.family == "brandt") return brandt(builtin_semigroup(spec.base), m);
  if (spec.family == "direct_power")
    return direct_product(
        std::vector<FiniteSemigroup>(static_cast<size_t>(m), builtin_semigroup(spec.base)));
  if (spec.family == "example_c") return example_c(m);
  if (spec.family == "boolean_zs") return boolean_zs(m);
  throw InputError("unknown family: " + spec.family);
}

std::uint64_t statistic_of(FamilySpec const& spec, FiniteSemigroup const& s) {
  if (spec.statistic == "aut_order")
    return static_cast<std::uint64_t>(automorphism_group(s).order());
  auto aut = automorphism_group(s);
  if (spec.statistic == "tau") return orbit_count(s, 1, aut).orbit_count;
  if (spec.statistic == "orbit_count") return orbit_count(s, spec.n, aut).orbit_count;
  throw InputError("unknown statistic: " + spec.statistic);
}

}  // namespace

FamilyReport run_family(FamilySpec const& spec) {
  if (spec.from < 1 || spec.to < spec.from)
    throw InputError("parameter range must be finite and positive");
  if (spec.statistic == "orbit_count" && spec.n < 1)
    throw InputError("tuple length must be positive");

  std::vector<std::future<std::uint64_t>> futures;
  for (int m = spec.from; m <= spec.to; ++m)
    futures.push_back(std::async(std::launch::async, [&spec, m] {
      return statistic_of(spec, member(spec, m));
    }));

  FamilyReport report;
  report.spec = spec;
  for (int m = spec.from; m <= spec.to; ++m)
    report.rows.push_back({m, futures[static_cast<size_t>(m - spec.from)].get()});

  bool strict = report.rows.size() >= 2;
  for (size_t i = 1; i < report.rows.size(); ++i)
    if (report.rows[i].value <= report.rows[i - 1].value) strict = false;
  report.label = strict ? "strictly increasing over range" : "bounded over range";
  report.note =
      "exact statistics of finite truncations; no claim about infinite limits";
  return report;
}

}  // namespace semicat
