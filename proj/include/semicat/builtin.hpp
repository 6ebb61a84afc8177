#pragma once

// Named example instances.  The verify suites, the CLI and the docs all
// refer to the same fixed zoo of small semigroups, McAlister triples and
// semidirect actions by these names, so results stay comparable across
// commands.

#include <string>
#include <vector>

#include "semicat/constructions.hpp"
#include "semicat/semigroup.hpp"

namespace semicat {

// registry order is fixed: groups, bands, chains, nulls, Brandt
// instances, adjoined zeros, 0-direct unions, then the nil examples
std::vector<std::string> builtin_semigroup_names();
FiniteSemigroup builtin_semigroup(std::string const& name);  // InputError on unknown

struct NamedTriple {
  std::string name;
  McAlisterTriple triple;
};
// every entry has |P| at most 16
std::vector<NamedTriple> builtin_triples();

struct NamedSemidirect {
  std::string name;
  SemidirectData data;
};
// every entry has |S x| T| at most 20
std::vector<NamedSemidirect> builtin_semidirect();

}  // namespace semicat
