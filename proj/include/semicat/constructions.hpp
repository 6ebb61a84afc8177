#pragma once

// Builders for the semigroup families the tool works with: null
// semigroups, bands, chains, Brandt semigroups, products, 0-direct
// unions, semidirect products with their kappa relation, the Boolean
// zs-semigroup, the two-level nil example, and McAlister P-semigroups
// with the T_A / ~_A / nu apparatus.

#include <optional>
#include <utility>
#include <vector>

#include "semicat/partition.hpp"
#include "semicat/perm.hpp"
#include "semicat/semigroup.hpp"

namespace semicat {

struct FinitePoset {
  int n = 0;
  std::vector<char> leq;  // row-major n*n, leq[a*n+b] means a <= b

  // validates reflexivity, antisymmetry and transitivity
  static FinitePoset from_matrix(std::vector<std::vector<int>> const& m);
  static FinitePoset chain(int n);
  static FinitePoset antichain(int n);

  int size() const { return n; }
  bool le(int a, int b) const { return leq[static_cast<size_t>(a) * n + b] != 0; }
  // greatest common lower bound of a and b among the listed elements, if
  // one exists
  std::optional<int> meet_in(std::vector<int> const& subset, int a, int b) const;
};

struct McAlisterTriple {
  FiniteSemigroup group;
  FinitePoset poset;                      // X
  std::vector<int> ideal;                 // Y, sorted indices into X
  std::vector<std::vector<int>> action;   // action[g][x] = g.x
};

// Validates every triple axiom: the group, the action (bijective order
// automorphisms forming a group action), Y an order ideal and meet
// semilattice, GY = X and gY meeting Y for every g.  Throws NotAGroup or
// InvalidTriple naming the broken axiom and a witness.
McAlisterTriple make_triple(FiniteSemigroup group, FinitePoset poset,
                            std::vector<int> ideal,
                            std::vector<std::vector<int>> action);

struct SemidirectData {
  FiniteSemigroup s;
  FiniteSemigroup t;
  std::vector<std::vector<int>> action;  // action[t][s] = t.s
};

FiniteSemigroup null_semigroup(int m);    // m non-zero elements plus a zero
FiniteSemigroup left_zero_band(int m);    // xy = x

// disjoint union along a chain of components, lowest first: products
// across components collapse to the element from the lower component
FiniteSemigroup chain_of_semigroups(std::vector<FiniteSemigroup> const& parts);

// zero, then the triples (i,g,j) ordered by row, group element, column;
// (i,g,j)(k,h,l) = (i,gh,l) when j = k, otherwise zero
FiniteSemigroup brandt(FiniteSemigroup const& group, int m);

// the map 0 -> 0, (i,g,j) -> (i pi, g theta, j pi); checked to be an
// automorphism of brandt(group, m)
Perm brandt_automorphism(FiniteSemigroup const& group, int m, Perm const& theta,
                         Perm const& pi);

// the general form (i,g,j) -> (i pi, u_i (g theta) u_j^-1, j pi) with one
// scaling element u_i per row; brandt_automorphism is the case where every
// u_i is the identity.  The scaled maps exhaust Aut(brandt(group, m)),
// whose order is |Aut(group)| * m! * |group|^(m-1); the parametrization is
// redundant, each automorphism arising from exactly |group| triples
// (theta, pi, u).
Perm brandt_scaled_automorphism(FiniteSemigroup const& group, int m, Perm const& theta,
                                Perm const& pi, std::vector<int> const& u);

FiniteSemigroup direct_product(std::vector<FiniteSemigroup> const& parts);
FiniteSemigroup direct_sum_of_monoids(std::vector<FiniteSemigroup> const& parts);

// amalgamates the summand zeros into one shared zero; all cross products
// are zero.  Summands must have a zero and at least one other element.
FiniteSemigroup zero_direct_union(std::vector<FiniteSemigroup> const& parts);

// validates the two action laws (composition and distribution over
// products) with witnesses, then forms pairs (s,t) with
// (s,t)(s',t') = (s(t.s'), tt')
FiniteSemigroup semidirect_product(SemidirectData const& d);

// t and t' are related when they act identically inside every product:
// s(t.s') = s(t'.s') for all s, s'
Partition kappa_partition(SemidirectData const& d);

// non-empty subsets of an m-set under "union if disjoint, else top"; the
// top subset is the zero
FiniteSemigroup boolean_zs(int m);

// {0, u, a_1..a_m} with a_i a_j = u for distinct i,j and all other
// products zero
FiniteSemigroup example_c(int m);

// pairs (A,g) with A in Y and g^{-1}A in Y, product (A ^ gB, gh); checked
// E-unitary inverse with idempotents exactly Y x {1}
FiniteSemigroup p_semigroup(McAlisterTriple const& t);
std::vector<std::pair<int, int>> p_elements(McAlisterTriple const& t);

struct TripleApparatus {
  // parallel to the Y list: T_A = {g : g^{-1}A in Y}, and the partition
  // of each T_A by "g^{-1}U = h^{-1}U for every U <= A"
  std::vector<std::vector<int>> t_sets;
  std::vector<Partition> sim;
  // the classes of all the quotients pooled: (A, sorted class of g's)
  std::vector<std::pair<int, std::vector<int>>> classes;
  Partition nu;  // on G: g nu h when gA = hA for every A in X
};
TripleApparatus triple_apparatus(McAlisterTriple const& t);

// order-automorphisms psi of X with Y psi = Y and (gA) psi = g(A psi).
// Validates only the act axioms (poset, action laws, Y inside X), so it
// also serves acts whose Y is no semilattice.
std::vector<Perm> augmented_act_automorphisms(FiniteSemigroup const& group,
                                              FinitePoset const& poset,
                                              std::vector<int> const& ideal,
                                              std::vector<std::vector<int>> const& action);
std::vector<Perm> augmented_act_automorphisms(McAlisterTriple const& t);

// a pair (psi, theta) with theta a group automorphism, psi an
// order-automorphism of X fixing Y setwise and (gA) psi = (g theta)(A psi);
// induced is the resulting permutation (A,g) -> (A psi, g theta) of
// p_semigroup(t), indexed along p_elements(t)
struct TripleAutomorphism {
  Perm psi;
  Perm theta;
  Perm induced;
};
// every such pair, each checked to induce a genuine automorphism; the
// induced permutation only sees psi on Y, so distinct pairs can induce the
// same map and callers comparing against a raw search should dedup on the
// induced member
std::vector<TripleAutomorphism> p_triple_automorphisms(McAlisterTriple const& t);

}  // namespace semicat
