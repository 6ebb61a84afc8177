#pragma once

// 0-consistent ideals and the greatest 0-direct decomposition: splitting a
// semigroup with zero into ideals that pairwise intersect and multiply into
// the zero alone, plus primitivity tests and the factorization of
// automorphisms along the summands.

#include <vector>

#include "semicat/perm.hpp"
#include "semicat/semigroup.hpp"

namespace semicat {

// T \ {0} is consistent: uv in T \ {0} forces both u and v into T \ {0}
bool is_zero_consistent(FiniteSemigroup const& s, std::vector<int> const& subset);

// least 0-consistent ideal containing x: closure under products with S on
// either side and under pulling the factors of non-zero members back in
std::vector<int> least_zero_consistent_ideal(FiniteSemigroup const& s, int x);

struct ZeroDecomposition {
  // sorted element sets, each containing the zero, ordered by least
  // non-zero element; pairwise intersections and cross products are {0}
  std::vector<std::vector<int>> summands;
};

// Every semigroup with zero other than {0} itself has a greatest 0-direct
// decomposition; its summands are the closures of the non-zero elements.
// Each summand is checked 0-directly indecomposable before returning.
ZeroDecomposition greatest_zero_direct_decomposition(FiniteSemigroup const& s);

// no 0-consistent ideals besides {0} and S
bool is_zero_directly_indecomposable(FiniteSemigroup const& s);

// every non-zero idempotent is minimal among the non-zero idempotents in
// the natural partial order e <= f iff ef = fe = e
bool is_primitive(FiniteSemigroup const& s);

// Definition-based checkers: principal ideals for simplicity, the natural
// partial order for primitivity of idempotents.
bool is_completely_0_simple(FiniteSemigroup const& s);
bool is_completely_simple(FiniteSemigroup const& s);

// greatest decomposition of a regular semigroup with every summand checked
// completely 0-simple.  Throws SummandNotCompletely0Simple when a summand
// fails, which happens exactly for the non-primitive inputs.
ZeroDecomposition primitive_regular_decomposition(FiniteSemigroup const& s);

struct DecomposedAutomorphism {
  ZeroDecomposition decomposition;
  std::vector<int> summand_map;  // summand i goes onto summand summand_map[i]
  // component i sends the t-th element of summand i (ascending element
  // order) to the components[i][t]-th element of the image summand
  std::vector<std::vector<int>> components;
};

// Factors an automorphism through the greatest 0-direct decomposition:
// phi permutes the summands and restricts to an isomorphism on each.  The
// reconstruction from the parts is checked to equal phi again.
DecomposedAutomorphism decompose_automorphism(FiniteSemigroup const& s, Perm const& phi);

}  // namespace semicat
