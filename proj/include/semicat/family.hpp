#pragma once

// Growth profiles over one-parameter families.  For each parameter in a
// finite range the chosen statistic is computed exactly on the finite
// instance; the report labels the observed trend and is explicitly
// finite-truncation evidence, never a verdict about infinite limits.

#include <cstdint>
#include <string>
#include <vector>

namespace semicat {

struct FamilySpec {
  // chain_semilattice, null, brandt, direct_power, example_c or boolean_zs
  std::string family;
  int from = 1;
  int to = 1;  // inclusive; the range must be finite and positive
  // tau (element orbits), orbit_count (n-tuple orbits) or aut_order
  std::string statistic = "tau";
  int n = 1;            // tuple length, used by orbit_count only
  std::string base = "z2";  // builtin name: brandt group or direct_power factor
};

struct FamilyRow {
  int parameter;
  std::uint64_t value;
};

struct FamilyReport {
  FamilySpec spec;
  std::vector<FamilyRow> rows;  // in parameter order
  // "strictly increasing over range" when every step grows, otherwise
  // "bounded over range"
  std::string label;
  std::string note;  // the fixed evidence disclaimer
};

// members are evaluated concurrently and assembled in parameter order;
// member errors (for instance TupleSpaceTooLarge) propagate
FamilyReport run_family(FamilySpec const& spec);

}  // namespace semicat
