#pragma once

// Congruences: generated closure, the largest congruence inside a given
// partition, the least group congruence and the maximum idempotent
// separating congruence on inverse semigroups, and quotients.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semicat/partition.hpp"
#include "semicat/perm.hpp"
#include "semicat/semigroup.hpp"

namespace semicat {

// translation closure test; fills witness with an offending (a,b,c) if given
bool is_congruence(FiniteSemigroup const& s, Partition const& p,
                   std::string* witness = nullptr);

// least congruence containing the pairs
Partition congruence_generated_by(FiniteSemigroup const& s,
                                  std::vector<std::pair<int, int>> const& pairs);

// a related to b iff uav and ubv land in the same tau block for every
// u, v ranging over S plus the empty translation
Partition largest_congruence_within(FiniteSemigroup const& s, Partition const& tau);

// a sigma b iff ea = eb for some idempotent e; quotient is a group.
// Throws NotInverse.
Partition least_group_congruence(FiniteSemigroup const& s);

// the largest congruence inside Green's H; blocks separate idempotents.
// Throws NotInverse.
Partition max_idempotent_separating(FiniteSemigroup const& s);

// block product table; block ids follow the partition's numbering.
// Throws NotACongruence.
FiniteSemigroup quotient(FiniteSemigroup const& s, Partition const& rho);

bool is_ideal(FiniteSemigroup const& s, std::vector<int> const& subset,
              std::string* witness = nullptr);

// collapse a two-sided ideal to a single zero, keeping the remaining
// elements in their original order and placing the zero last.
// Throws NotAnIdeal.
FiniteSemigroup rees_quotient(FiniteSemigroup const& s, std::vector<int> const& ideal);

// a tau b iff (a phi) tau (b phi), for all a, b
bool is_preserved_by(Partition const& tau, Perm const& phi);

}  // namespace semicat
