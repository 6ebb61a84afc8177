#pragma once

// Green's relations, maximal subgroups, principal ideals and principal
// factors.  R and L come from strongly connected components of the right
// and left Cayley graphs; J from the two-sided graph.

#include <utility>
#include <vector>

#include "semicat/partition.hpp"
#include "semicat/semigroup.hpp"

namespace semicat {

struct JClassInfo {
  bool contains_idempotent;
  bool is_kernel;
};

struct GreenStructure {
  Partition R, L, H, D, J;
  std::vector<JClassInfo> j_info;  // indexed by J block id
};

// Postcondition D = J is checked on every call.
GreenStructure green_relations(FiniteSemigroup const& s);

struct MaximalSubgroup {
  int idempotent;
  std::vector<int> h_class;  // global indices, ascending
  FiniteSemigroup group;     // induced table, verified to be a group
};

std::vector<MaximalSubgroup> maximal_subgroups(FiniteSemigroup const& s);

// S^1 a S^1 as a sorted list
std::vector<int> principal_ideal(FiniteSemigroup const& s, int a);

enum class FactorClass { completely_simple, completely_0_simple, null_class };
char const* to_string(FactorClass c);

struct PrincipalFactor {
  // J-class elements in ascending global order; when a fresh zero was
  // needed it sits at the last index
  FiniteSemigroup factor;
  FactorClass classification;
  std::vector<int> j_class;  // global indices, ascending
  bool is_kernel;            // J(a) = J_a, no quotient taken
};

PrincipalFactor principal_factor(FiniteSemigroup const& s, int a);

// smallest-index idempotents e R a and a L f; throws NotRegular
std::pair<int, int> idempotent_frame(FiniteSemigroup const& s, int a);

}  // namespace semicat
