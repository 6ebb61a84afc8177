#pragma once

// Self-check batteries over the builtin instances.  Each suite re-derives
// a structural fact two independent ways and reports any disagreement with
// a witness; the randomized suite is reproducible through its seed.

#include <cstdint>
#include <string>
#include <vector>

namespace semicat {

struct VerifyIssue {
  std::string instance;
  std::string message;
};

struct VerifyReport {
  std::string suite;
  std::uint64_t seed = 0;
  int checks = 0;  // individual facts confirmed
  std::vector<VerifyIssue> failures;

  bool ok() const { return failures.empty(); }
};

inline constexpr std::uint64_t kDefaultVerifySeed = 20260823;

// brandt-aut, p-semigroup, zero-direct, semidirect, congruences, counting
std::vector<std::string> verify_suite_names();

// InputError on an unknown suite name; only the counting suite consumes
// the seed
VerifyReport run_verify(std::string const& suite, std::uint64_t seed = kDefaultVerifySeed);

}  // namespace semicat
