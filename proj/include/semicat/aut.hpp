#pragma once

// Automorphism groups by pruned backtracking, exact orbit counting of a
// permutation group acting coordinatewise on tuples, stabilizers,
// equality patterns, characteristic subsets and the characteristic ideal
// tower.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semicat/partition.hpp"
#include "semicat/perm.hpp"
#include "semicat/semigroup.hpp"

namespace semicat {

struct AutGroup {
  std::vector<Perm> elements;  // sorted; contains the identity

  int order() const { return static_cast<int>(elements.size()); }
  bool contains(Perm const& p) const;
  // small generating set found greedily (empty for the trivial group)
  std::vector<Perm> generators() const;
};

struct SearchOptions {
  std::uint64_t node_budget = 10'000'000;
};

// Complete automorphism list.  Backtracking over index bijections, pruned
// by iterated invariant refinement (idempotency, index/period, Green class
// sizes, multiplication profiles).  Throws SearchBudgetExceeded when the
// node budget runs out.
AutGroup automorphism_group(FiniteSemigroup const& s, SearchOptions const& opts = {});

std::optional<Perm> find_isomorphism(FiniteSemigroup const& s, FiniteSemigroup const& t,
                                     SearchOptions const& opts = {});
bool are_isomorphic(FiniteSemigroup const& s, FiniteSemigroup const& t,
                    SearchOptions const& opts = {});
std::vector<Perm> all_isomorphisms(FiniteSemigroup const& s, FiniteSemigroup const& t,
                                   SearchOptions const& opts = {});

struct OrbitOptions {
  std::uint64_t max_tuples = 10'000'000;
  int max_group_for_union_find = 10'000;
  bool collect_representatives = true;
};

struct OrbitReport {
  int n = 0;
  std::string group;  // description of the acting group
  std::uint64_t orbit_count = 0;
  // lexicographically least tuple per orbit, in increasing order
  std::vector<std::vector<int>> representatives;
};

// Orbits of the group acting coordinatewise on S^n.  Throws
// TupleSpaceTooLarge when k^n exceeds the configured bound.
OrbitReport orbit_count(FiniteSemigroup const& s, int n, AutGroup const& group,
                        OrbitOptions const& opts = {}, std::string group_desc = "full");

// Same, but tuples draw their entries from the given subset only.  Images
// that leave the subset simply contribute no identification.
OrbitReport orbit_count_over(std::vector<int> universe, int n, AutGroup const& group,
                             OrbitOptions const& opts = {},
                             std::string group_desc = "full");

AutGroup pointwise_stabilizer(AutGroup const& g, std::vector<int> const& tuple);
AutGroup setwise_stabilizer(AutGroup const& g, std::vector<std::vector<int>> const& sets);

// Orbits of Aut(S) on n-tuples of tau-classes: classes are related when
// some automorphism carries each class onto its counterpart setwise.
// Computes Aut(S) itself unless a precomputed group is passed.
std::uint64_t class_orbit_count(FiniteSemigroup const& s, Partition const& tau, int n,
                                AutGroup const* aut = nullptr,
                                OrbitOptions const& opts = {});

// Bell number: how many equality patterns n-tuples can have
std::uint64_t pattern_classes(int n);

// restricted growth string of the tuple, e.g. (x,y,x) -> [0,1,0]
std::vector<int> natural_class_of(std::vector<int> const& tuple);
std::string pattern_string(std::vector<int> const& pattern);

// A is a union of orbits of Aut(S) on elements
bool is_characteristic(FiniteSemigroup const& s, std::vector<int> const& subset,
                       AutGroup const* aut = nullptr);

struct CharacteristicReport {
  int tau;  // number of 1-orbits
  std::vector<std::vector<int>> orbits;
};
CharacteristicReport characteristic_closure_report(FiniteSemigroup const& s,
                                                   AutGroup const* aut = nullptr);

struct PivotedSubset {
  std::vector<int> subset;
  std::vector<int> pivot;
};

// pairwise relatively characteristic system check: whenever an
// automorphism carries pivot i to pivot j it must carry subset i into
// subset j.  All pivots must share one length.
bool is_prc_system(FiniteSemigroup const& s, std::vector<PivotedSubset> const& system,
                   AutGroup const* aut = nullptr);

// S = S0 > S1 > ... with each step a maximal proper characteristic ideal
// of the previous (ties broken by least sorted element set); subsets are
// in the original S's indices, starting with all of S.
std::vector<std::vector<int>> characteristic_ideal_tower(FiniteSemigroup const& s,
                                                         SearchOptions const& opts = {});

}  // namespace semicat
