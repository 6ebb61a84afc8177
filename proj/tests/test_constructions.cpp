#include <algorithm>
#include <cstdint>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "semicat/aut.hpp"
#include "semicat/congruence.hpp"
#include "semicat/constructions.hpp"
#include "semicat/errors.hpp"
#include "semicat/green.hpp"
#include "semicat/semigroup.hpp"

using namespace semicat;

namespace {

FiniteSemigroup cyclic(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      t[i][j] = (i + j) % n;
    }
  }
  return FiniteSemigroup::from_table(t);
}

FiniteSemigroup trivial() { return cyclic(1); }

// B below the incomparable pair A, A'; the group swaps A and A'
McAlisterTriple z2_swap_triple() {
  auto poset = FinitePoset::from_matrix({{1, 0, 0}, {0, 1, 0}, {1, 1, 1}});
  return make_triple(cyclic(2), poset, {0, 2}, {{0, 1, 2}, {1, 0, 2}});
}

// two chains C < B < A and C < B' < A' glued at C; the group swaps them
McAlisterTriple double_chain_triple() {
  auto poset = FinitePoset::from_matrix({{1, 0, 0, 0, 0},
                                         {0, 1, 0, 0, 0},
                                         {1, 0, 1, 0, 0},
                                         {0, 1, 0, 1, 0},
                                         {1, 1, 1, 1, 1}});
  return make_triple(cyclic(2), poset, {0, 2, 3, 4},
                     {{0, 1, 2, 3, 4}, {1, 0, 3, 2, 4}});
}

// bottom, two swapped atoms, top; Y is all of X
McAlisterTriple diamond_z2_triple() {
  auto poset = FinitePoset::from_matrix(
      {{1, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}});
  return make_triple(cyclic(2), poset, {0, 1, 2, 3}, {{0, 1, 2, 3}, {0, 2, 1, 3}});
}

// bottom plus three atoms cycled by Z3; Y holds the bottom and one atom
McAlisterTriple atoms_z3_triple() {
  auto poset = FinitePoset::from_matrix(
      {{1, 1, 1, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  return make_triple(cyclic(3), poset, {0, 1},
                     {{0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}});
}

SemidirectData swap_action_on_null() {
  SemidirectData d;
  d.s = null_semigroup(2);
  d.t = cyclic(2);
  d.action = {{0, 1, 2}, {0, 2, 1}};
  return d;
}

// the two-sided ideal L^0 of S' = N2^0 u L^0, acted on by left
// multiplication inside S'
SemidirectData left_mult_data() {
  SemidirectData d;
  d.s = adjoin_zero(left_zero_band(2));  // l1, l2, then the zero
  d.t = zero_direct_union({null_semigroup(2), d.s});
  d.action.assign(5, {2, 2, 2});  // the union's zero and the nulls kill L^0
  d.action[3] = {0, 0, 2};        // l1 wins against everything non-zero
  d.action[4] = {1, 1, 2};
  return d;
}

}  // namespace

TEST_CASE("null semigroups and left zero bands") {
  auto n2 = null_semigroup(2);
  CHECK(n2.order() == 3);
  CHECK(n2.zero() == 0);
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      CHECK(n2.product(a, b) == 0);
    }
  }
  CHECK(n2.name_of(1) == "a1");

  // the 2-element null semigroup is not the 2-element semilattice
  auto n1 = null_semigroup(1);
  CHECK(n1.order() == 2);
  CHECK_FALSE(is_semilattice(n1));
  CHECK(n1.product(1, 1) == 0);

  auto l2 = left_zero_band(2);
  CHECK(is_band(l2));
  auto g = green_relations(l2);
  CHECK(g.R == Partition::singletons(2));
  CHECK(g.L == Partition::universal(2));
  CHECK_THROWS_AS(null_semigroup(0), InputError);
  CHECK_THROWS_AS(left_zero_band(0), InputError);
}

TEST_CASE("chains of semigroups multiply down to the lower component") {
  auto two = chain_of_semigroups({trivial(), trivial()});
  CHECK(two.flat_table() == std::vector<int>{0, 0, 0, 1});
  CHECK(is_semilattice(two));

  auto three = chain_of_semigroups({trivial(), trivial(), trivial()});
  CHECK(three.flat_table() == FiniteSemigroup::from_table(
                                  {{0, 0, 0}, {0, 1, 1}, {0, 1, 2}}).flat_table());

  auto mixed = chain_of_semigroups({cyclic(2), cyclic(3)});
  CHECK(mixed.order() == 5);
  // lower element wins across components, both ways
  CHECK(mixed.product(0, 3) == 0);
  CHECK(mixed.product(3, 0) == 0);
  CHECK(mixed.product(4, 1) == 1);
  CHECK(mixed.product(1, 1) == 0);          // inside Z2
  CHECK(mixed.product(3, 4) == 2 + (1 + 2) % 3);  // inside Z3
  CHECK(automorphism_group(mixed).order() == 2);  // Aut(Z2) x Aut(Z3)
  CHECK(mixed.name_of(0) == "0_1");
  CHECK(mixed.name_of(2) == "0_2");

  auto alone = chain_of_semigroups({cyclic(3)});
  CHECK(alone.flat_table() == cyclic(3).flat_table());
  CHECK_THROWS_AS(chain_of_semigroups({}), InputError);
}

TEST_CASE("brandt semigroups over small groups") {
  auto b = brandt(cyclic(2), 2);
  CHECK(b.order() == 9);
  CHECK(b.zero() == 0);
  CHECK(idempotents(b).size() == 3);
  CHECK(is_inverse(b));
  CHECK_FALSE(is_commutative(b));
  CHECK(b.name_of(1) == "(1,0,1)");

  // product rule: middle coordinates must match
  // (1,g,1)(1,g,2) = (1,g+g,2) = (1,e,2)
  int x = 1 + (0 * 2 + 1) * 2 + 0;  // (1,g,1)
  int y = 1 + (0 * 2 + 1) * 2 + 1;  // (1,g,2)
  int z = 1 + (0 * 2 + 0) * 2 + 1;  // (1,e,2)
  CHECK(b.product(x, y) == z);
  CHECK(b.product(y, x) == 0);  // (1,g,2)(1,g,1) has 2 != 1

  auto g = green_relations(b);
  CHECK(g.J.n_blocks() == 2);  // the zero and everything else
  CHECK(g.H.n_blocks() == 5);  // the zero and the four cells

  auto tiny = brandt(trivial(), 1);
  CHECK(tiny.order() == 2);
  CHECK(is_semilattice(tiny));

  auto bz21 = brandt(cyclic(2), 1);
  CHECK(bz21.order() == 3);
  CHECK(bz21.identity().has_value());  // single cell: group with zero

  CHECK_THROWS_AS(brandt(null_semigroup(2), 1), NotAGroup);
  CHECK_THROWS_AS(brandt(cyclic(2), 0), InputError);
}

TEST_CASE("brandt automorphism group is exhausted by the scaled maps") {
  auto z2 = cyclic(2);
  auto b = brandt(z2, 2);
  auto aut = automorphism_group(b);
  // |Aut(Z2)| * 2! * |Z2|^(2-1) = 4, cross-checked against brute force below
  CHECK(aut.order() == 4);
  CHECK(oracle::all_automorphisms(b).size() == 4);

  auto lifted = brandt_automorphism(z2, 2, Perm::identity(2), Perm({1, 0}));
  CHECK_FALSE(lifted.is_identity());
  CHECK(aut.contains(lifted));
  CHECK(brandt_automorphism(z2, 2, Perm::identity(2), Perm::identity(2)).is_identity());

  // a pure row scaling: fixes the diagonal cells pointwise and multiplies the
  // off-diagonal cells by the non-identity group element.  It is a genuine
  // automorphism but not of the unscaled (theta; pi) shape, so the unscaled
  // maps alone do not exhaust the group once m >= 2.
  auto scaled = brandt_scaled_automorphism(z2, 2, Perm::identity(2), Perm::identity(2), {0, 1});
  CHECK_FALSE(scaled.is_identity());
  CHECK(aut.contains(scaled));
  for (int c = 1; c <= 8; ++c) {
    bool diagonal_cell = (c == 1 || c == 3 || c == 6 || c == 8);
    CHECK((scaled[c] == c) == diagonal_cell);
  }
  std::set<Perm> unscaled = {brandt_automorphism(z2, 2, Perm::identity(2), Perm::identity(2)),
                             lifted};
  CHECK(unscaled.count(scaled) == 0);

  // the scaled maps exhaust the raw group: |Aut| = |Aut(G)| * m! * |G|^(m-1)
  for (auto const& group : {cyclic(2), cyclic(3)}) {
    for (int m = 1; m <= 2; ++m) {
      auto s = brandt(group, m);
      auto raw = automorphism_group(s);
      auto group_auts = automorphism_group(group);
      std::vector<Perm> index_perms;
      std::vector<int> img(m);
      for (int i = 0; i < m; ++i) img[i] = i;
      do {
        index_perms.emplace_back(img);
      } while (std::next_permutation(img.begin(), img.end()));

      std::set<Perm> unscaled_all;
      std::set<Perm> scaled_all;
      for (auto const& theta : group_auts.elements) {
        for (auto const& pi : index_perms) {
          unscaled_all.insert(brandt_automorphism(group, m, theta, pi));
          std::vector<int> u(m, 0);
          while (true) {
            scaled_all.insert(brandt_scaled_automorphism(group, m, theta, pi, u));
            int d = 0;
            while (d < m && ++u[d] == group.order()) u[d++] = 0;
            if (d == m) break;
          }
        }
      }
      std::uint64_t expected = group_auts.order() * index_perms.size();
      CHECK(unscaled_all.size() == expected);
      for (int i = 1; i < m; ++i) expected *= group.order();
      CHECK(scaled_all.size() == expected);
      CHECK(scaled_all.size() == raw.elements.size());
      for (auto const& p : raw.elements) CHECK(scaled_all.count(p) == 1);
      // for a single row and column the scalings collapse to conjugation,
      // which the group automorphisms already contain
      if (m == 1) CHECK(unscaled_all == scaled_all);
      if (m == 2) CHECK(unscaled_all.size() < scaled_all.size());
    }
  }

  CHECK_THROWS_AS(brandt_automorphism(cyclic(3), 2, Perm({1, 0, 2}), Perm::identity(2)),
                  InputError);  // not a group automorphism
  CHECK_THROWS_AS(brandt_automorphism(z2, 2, Perm::identity(2), Perm({0, 0})),
                  InputError);
  CHECK_THROWS_AS(brandt_scaled_automorphism(z2, 2, Perm::identity(2), Perm::identity(2), {0}),
                  InputError);  // wrong number of scaling elements
  CHECK_THROWS_AS(brandt_scaled_automorphism(z2, 2, Perm::identity(2), Perm::identity(2), {0, 2}),
                  InputError);  // scaling element out of range
}

TEST_CASE("orbit statistics of a small brandt semigroup") {
  auto b = brandt(cyclic(2), 2);
  auto aut = automorphism_group(b);
  REQUIRE(aut.order() == 4);

  // element orbits: zero, diagonal identity cells, diagonal non-identity
  // cells, and all off-diagonal cells fused into one orbit by the scalings
  auto rep = orbit_count(b, 1, aut);
  CHECK(rep.orbit_count == 4);
  CHECK(rep.representatives ==
        std::vector<std::vector<int>>{{0}, {1}, {2}, {3}});

  auto gs = green_relations(b);
  REQUIRE(gs.H.n_blocks() == 5);
  CHECK(class_orbit_count(b, gs.H, 1, &aut) == 3);

  // cross-check pairs of H-classes by brute force: induce the class maps,
  // then grow orbits over all 25 pairs
  std::vector<std::vector<int>> class_maps;
  for (auto const& phi : aut.elements) {
    std::vector<int> cm(gs.H.n_blocks());
    for (int x = 0; x < b.order(); ++x) cm[gs.H.block_of(x)] = gs.H.block_of(phi[x]);
    class_maps.push_back(cm);
  }
  std::set<std::pair<int, int>> seen;
  std::uint64_t pair_orbits = 0;
  for (int c = 0; c < gs.H.n_blocks(); ++c) {
    for (int d = 0; d < gs.H.n_blocks(); ++d) {
      if (seen.count({c, d})) continue;
      ++pair_orbits;
      for (auto const& cm : class_maps) seen.insert({cm[c], cm[d]});
    }
  }
  CHECK(pair_orbits == 13);
  CHECK(class_orbit_count(b, gs.H, 2, &aut) == pair_orbits);
}

TEST_CASE("direct products and monoid sums") {
  auto k4 = direct_product({cyclic(2), cyclic(2)});
  CHECK(k4.flat_table() == FiniteSemigroup::from_table({{0, 1, 2, 3},
                                                        {1, 0, 3, 2},
                                                        {2, 3, 0, 1},
                                                        {3, 2, 1, 0}}).flat_table());
  CHECK(k4.name_of(1) == "(0,1)");
  CHECK(is_group(k4));

  auto padded = direct_product({cyclic(3), trivial()});
  CHECK(padded.flat_table() == cyclic(3).flat_table());

  auto band = direct_product({left_zero_band(2), chain_of_semigroups({trivial(), trivial()})});
  CHECK(band.order() == 4);
  CHECK(is_band(band));

  CHECK(are_isomorphic(direct_sum_of_monoids({cyclic(2), cyclic(3)}), cyclic(6)));
  CHECK_THROWS_AS(direct_sum_of_monoids({cyclic(2), null_semigroup(2)}), NotAMonoid);
  CHECK_THROWS_AS(direct_product({}), InputError);
}

TEST_CASE("zero-direct unions share one zero and kill cross products") {
  auto n2 = zero_direct_union({null_semigroup(1), null_semigroup(1)});
  CHECK(n2.order() == 3);
  CHECK(n2.flat_table() == null_semigroup(2).flat_table());

  auto u = zero_direct_union({brandt(cyclic(2), 1), brandt(cyclic(2), 1)});
  CHECK(u.order() == 5);
  CHECK(u.zero() == 0);
  CHECK(is_inverse(u));
  CHECK(idempotents(u).size() == 3);
  CHECK(u.name_of(1) == "(1,0,1)_1");
  CHECK(u.name_of(3) == "(1,0,1)_2");
  // members of different summands annihilate each other
  CHECK(u.product(1, 3) == 0);
  CHECK(u.product(3, 1) == 0);
  auto g = green_relations(u);
  CHECK(g.j_info[g.J.block_of(0)].is_kernel);

  auto alone = zero_direct_union({null_semigroup(2)});
  CHECK(alone.flat_table() == null_semigroup(2).flat_table());

  CHECK_THROWS_AS(zero_direct_union({left_zero_band(2)}), NoZero);
  CHECK_THROWS_AS(zero_direct_union({trivial(), null_semigroup(1)}), TrivialSummand);
  CHECK_THROWS_AS(zero_direct_union({}), InputError);
}

TEST_CASE("semidirect products with a trivial action are direct products") {
  SemidirectData d;
  d.s = chain_of_semigroups({trivial(), trivial()});
  d.t = cyclic(2);
  d.action = {{0, 1}, {0, 1}};
  auto m = semidirect_product(d);
  CHECK(m.order() == 4);
  CHECK(m.flat_table() == direct_product({d.s, d.t}).flat_table());
  CHECK(kappa_partition(d) == Partition::universal(2));
}

TEST_CASE("semidirect product over the swap action on a null semigroup") {
  auto d = swap_action_on_null();
  auto m = semidirect_product(d);
  CHECK(m.order() == 6);
  // (a1, e)(a2, g) = (a1 a2, g) = (0, g)
  CHECK(m.product(1 * 2 + 0, 2 * 2 + 1) == 0 * 2 + 1);
  // products in the null factor collapse, so the action never shows up
  // inside kappa and the relation is universal
  CHECK(kappa_partition(d) == Partition::universal(2));

  // kappa-preserving automorphisms of T lift to automorphisms of S x| T
  auto aut_t = automorphism_group(d.t);
  auto kappa = kappa_partition(d);
  for (auto const& theta : aut_t.elements) {
    if (!is_preserved_by(kappa, theta)) {
      continue;
    }
    std::vector<int> img(m.order());
    for (int s = 0; s < d.s.order(); ++s) {
      for (int t = 0; t < d.t.order(); ++t) {
        img[s * d.t.order() + t] = s * d.t.order() + theta[t];
      }
    }
    Perm lifted(std::move(img));
    CHECK(automorphism_group(m).contains(lifted));
  }
}

TEST_CASE("the left-multiplication action splits kappa into the band and the rest") {
  auto d = left_mult_data();
  auto m = semidirect_product(d);
  CHECK(m.order() == 15);
  auto kappa = kappa_partition(d);
  CHECK(kappa.n_blocks() == 2);
  // the zero and both null generators act alike; the band members differ
  CHECK(kappa.same(0, 1));
  CHECK(kappa.same(0, 2));
  CHECK(kappa.same(3, 4));
  CHECK_FALSE(kappa.same(0, 3));
}

TEST_CASE("broken semidirect actions are rejected with the failing law") {
  SemidirectData d;
  d.s = chain_of_semigroups({trivial(), trivial()});
  d.t = cyclic(2);
  d.action = {{0, 1}, {1, 0}};  // the swap is no endomorphism of a chain
  CHECK_THROWS_AS(semidirect_product(d), NotAnAction);

  SemidirectData e;
  e.s = chain_of_semigroups({trivial(), trivial()});
  e.t = cyclic(2);
  e.action = {{0, 1}, {0, 0}};  // constant map squares wrongly
  CHECK_THROWS_AS(kappa_partition(e), NotAnAction);

  SemidirectData f;
  f.s = null_semigroup(1);
  f.t = cyclic(2);
  f.action = {{0, 1}};  // missing a row
  CHECK_THROWS_AS(semidirect_product(f), InputError);
}

TEST_CASE("the boolean subset semigroup is nil of degree two") {
  auto b2 = boolean_zs(2);
  CHECK(b2.order() == 3);
  CHECK(b2.zero() == 2);  // the full set
  CHECK(are_isomorphic(b2, null_semigroup(2)));

  auto b3 = boolean_zs(3);
  CHECK(b3.order() == 7);
  CHECK(is_commutative(b3));
  CHECK(b3.name_of(0) == "{1}");
  CHECK(b3.name_of(2) == "{1,2}");
  CHECK(b3.name_of(6) == "{1,2,3}");
  // disjoint sets join, overlapping ones collapse to the top
  CHECK(b3.product(0, 1) == 2);   // {1}{2} = {1,2}
  CHECK(b3.product(0, 2) == 6);   // {1}{1,2} overlaps
  CHECK(b3.zero() == 6);

  for (int m = 2; m <= 4; ++m) {
    auto b = boolean_zs(m);
    CHECK(is_commutative(b));
    CHECK(nil_degree(b) == 2);
    CHECK(is_nil_of_degree(b, 2));
  }
  // the one-atom case is the trivial semigroup, nil already at degree 1
  auto b1 = boolean_zs(1);
  CHECK(b1.order() == 1);
  CHECK(nil_degree(b1) == 1);
  CHECK(is_nil_of_degree(b1, 2));

  // squares kill the atoms, so the semigroup never equals its square
  auto sq = power_ideal(b3, 2);
  CHECK(sq.size() == 4);
  CHECK(!std::binary_search(sq.begin(), sq.end(), 0));
  CHECK(std::binary_search(sq.begin(), sq.end(), 2));
  CHECK_THROWS_AS(boolean_zs(0), InputError);
}

TEST_CASE("the two-level nil example") {
  auto c = example_c(3);
  CHECK(c.order() == 5);
  CHECK(c.zero() == 0);
  CHECK(c.name_of(1) == "u");
  // distinct generators multiply to u, everything else dies
  CHECK(c.product(2, 3) == 1);
  CHECK(c.product(3, 2) == 1);
  CHECK(c.product(2, 2) == 0);
  CHECK(c.product(1, 2) == 0);
  CHECK(c.product(1, 1) == 0);
  CHECK(is_commutative(c));

  CHECK(nil_degree(c) == 2);
  CHECK(nilpotency_degree(c) == 3);
  // squares vanish, so the power sequence of a generator is a, 0, 0, ...
  CHECK(index_period(c, 2) == IndexPeriod{2, 1});
  CHECK(index_period(c, 2) == oracle::min_index_period(c, 2));

  // dividing out {0, u} leaves a null semigroup on the generators
  CHECK(are_isomorphic(rees_quotient(c, {0, 1}), null_semigroup(3)));

  for (int m = 2; m <= 4; ++m) {
    auto s = example_c(m);
    CHECK(nil_degree(s) == 2);
    CHECK(nilpotency_degree(s) == 3);
  }
  CHECK_THROWS_AS(example_c(1), InputError);
}

TEST_CASE("the deep ideal structure of the two-level nil example") {
  auto c = example_c(3);
  CHECK(automorphism_group(c).order() == 6);  // generators permute freely
  CHECK(characteristic_closure_report(c).tau == 3);
  CHECK(characteristic_ideal_tower(c) ==
        std::vector<std::vector<int>>{{0, 1, 2, 3, 4}, {0, 1}, {0}});
}

TEST_CASE("poset validation and meets") {
  CHECK_THROWS_AS(FinitePoset::from_matrix({{0}}), InputError);  // not reflexive
  CHECK_THROWS_AS(FinitePoset::from_matrix({{1, 1}, {1, 1}}), InputError);  // not antisym
  CHECK_THROWS_AS(FinitePoset::from_matrix({{1, 1, 0}, {0, 1, 1}, {0, 0, 1}}),
                  InputError);  // not transitive
  CHECK_THROWS_AS(FinitePoset::from_matrix({{1, 0}, {0, 1}, {0, 0}}), InputError);

  auto diamond = FinitePoset::from_matrix(
      {{1, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}});
  std::vector<int> all{0, 1, 2, 3};
  CHECK(diamond.meet_in(all, 1, 2) == 0);
  CHECK(diamond.meet_in(all, 1, 3) == 1);
  CHECK(diamond.meet_in({1, 2, 3}, 1, 2) == std::nullopt);
  CHECK(FinitePoset::chain(3).le(0, 2));
  CHECK_FALSE(FinitePoset::antichain(2).le(0, 1));
}

TEST_CASE("triple validation rejects each broken axiom") {
  auto z2 = cyclic(2);
  // swapping the ends of a chain inverts the order
  CHECK_THROWS_AS(make_triple(z2, FinitePoset::chain(2), {0, 1}, {{0, 1}, {1, 0}}),
                  InvalidTriple);
  // a three-cycle is no involution, so composition fails
  CHECK_THROWS_AS(make_triple(z2, FinitePoset::antichain(3), {0, 1, 2},
                              {{0, 1, 2}, {1, 2, 0}}),
                  InvalidTriple);
  // Y missing the bottom of the chain is no order ideal
  CHECK_THROWS_AS(make_triple(trivial(), FinitePoset::chain(2), {1}, {{0, 1}}),
                  InvalidTriple);
  // an antichain pair has no meet
  CHECK_THROWS_AS(make_triple(trivial(), FinitePoset::antichain(2), {0, 1}, {{0, 1}}),
                  InvalidTriple);
  // the trivial group cannot reach the second point
  CHECK_THROWS_AS(make_triple(trivial(),
                              FinitePoset::from_matrix({{1, 0}, {0, 1}}), {0}, {{0, 1}}),
                  InvalidTriple);
  // the swap moves Y completely off itself
  CHECK_THROWS_AS(make_triple(z2, FinitePoset::antichain(2), {0}, {{0, 1}, {1, 0}}),
                  InvalidTriple);
  CHECK_THROWS_AS(make_triple(null_semigroup(1), FinitePoset::chain(2), {0, 1},
                              {{0, 1}, {0, 1}}),
                  NotAGroup);
  CHECK_THROWS_AS(make_triple(trivial(), FinitePoset::chain(2), {}, {{0, 1}}),
                  InvalidTriple);
}

TEST_CASE("the trivial triple generates the semilattice itself") {
  auto t = make_triple(trivial(), FinitePoset::chain(2), {0, 1}, {{0, 1}});
  CHECK(p_elements(t) == std::vector<std::pair<int, int>>{{0, 0}, {1, 0}});
  auto p = p_semigroup(t);
  CHECK(p.order() == 2);
  CHECK(is_semilattice(p));
  CHECK(p.flat_table() == std::vector<int>{0, 0, 0, 1});
}

TEST_CASE("the swap triple generates the two-element group with identity") {
  auto t = z2_swap_triple();
  // (A, g) is excluded: g^{-1}A = A' lies outside Y
  CHECK(p_elements(t) == std::vector<std::pair<int, int>>{{0, 0}, {2, 0}, {2, 1}});
  auto p = p_semigroup(t);
  CHECK(p.order() == 3);
  CHECK(p.name_of(0) == "(0,0)");
  CHECK(is_inverse(p));
  CHECK(is_e_unitary(p));
  CHECK(p.identity() == 0);
  CHECK(idempotents(p) == std::vector<int>{0, 1});

  // maximal subgroup at (B,1) is the two-element group
  auto sub = subsemigroup(p, {1, 2});
  CHECK(is_group(sub));
  CHECK(sub.order() == 2);
}

TEST_CASE("green relations on generated P-semigroups follow the coordinates") {
  for (auto const& t : {z2_swap_triple(), double_chain_triple()}) {
    auto elements = p_elements(t);
    auto p = p_semigroup(t);
    auto g = green_relations(p);
    auto inv = std::vector<int>{};
    {
      int const e = *t.group.identity();
      inv.assign(t.group.order(), -1);
      for (int a = 0; a < t.group.order(); ++a) {
        for (int b = 0; b < t.group.order(); ++b) {
          if (t.group.product(a, b) == e) {
            inv[a] = b;
          }
        }
      }
    }
    for (size_t i = 0; i < elements.size(); ++i) {
      for (size_t j = 0; j < elements.size(); ++j) {
        auto [a, gi] = elements[i];
        auto [b, gj] = elements[j];
        bool same_r = a == b;
        bool same_l = t.action[inv[gi]][a] == t.action[inv[gj]][b];
        CHECK(g.R.same(static_cast<int>(i), static_cast<int>(j)) == same_r);
        CHECK(g.L.same(static_cast<int>(i), static_cast<int>(j)) == same_l);
      }
    }
  }
}

TEST_CASE("the double chain triple has seven elements and a single collapsed pair") {
  auto t = double_chain_triple();
  auto p = p_semigroup(t);
  CHECK(p.order() == 7);
  CHECK(is_e_unitary(p));

  // the kernel congruence separating no idempotents merges exactly the
  // two elements pivoted at the shared bottom
  auto mu = max_idempotent_separating(p);
  auto elements = p_elements(t);
  int collapsed = -1;
  for (size_t i = 0; i < elements.size(); ++i) {
    for (size_t j = i + 1; j < elements.size(); ++j) {
      if (mu.same(static_cast<int>(i), static_cast<int>(j))) {
        CHECK(elements[i].first == 4);  // the common bottom C
        CHECK(elements[j].first == 4);
        collapsed = static_cast<int>(i);
      }
    }
  }
  CHECK(collapsed != -1);
  CHECK(mu.n_blocks() == 6);
}

TEST_CASE("idempotent-separating collapse matches the apparatus relations") {
  // blocks of the kernel congruence are exactly the pairs with equal
  // pivot and equivalent group parts
  for (auto const& t : {z2_swap_triple(), double_chain_triple()}) {
    auto p = p_semigroup(t);
    auto mu = max_idempotent_separating(p);
    auto elements = p_elements(t);
    auto apparatus = triple_apparatus(t);
    auto y_pos = [&t](int a) {
      return static_cast<int>(std::lower_bound(t.ideal.begin(), t.ideal.end(), a) -
                              t.ideal.begin());
    };
    for (size_t i = 0; i < elements.size(); ++i) {
      for (size_t j = 0; j < elements.size(); ++j) {
        auto [a, gi] = elements[i];
        auto [b, gj] = elements[j];
        bool predicted = false;
        if (a == b) {
          auto const& t_a = apparatus.t_sets[y_pos(a)];
          int pi = static_cast<int>(std::find(t_a.begin(), t_a.end(), gi) - t_a.begin());
          int pj = static_cast<int>(std::find(t_a.begin(), t_a.end(), gj) - t_a.begin());
          predicted = apparatus.sim[y_pos(a)].same(pi, pj);
        }
        CHECK(mu.same(static_cast<int>(i), static_cast<int>(j)) == predicted);
      }
    }
  }
}

TEST_CASE("the triple apparatus on the swap triple") {
  auto t = z2_swap_triple();
  auto apparatus = triple_apparatus(t);
  // Y = {A, B}: only the identity may move A, everything fixes B
  CHECK(apparatus.t_sets == std::vector<std::vector<int>>{{0}, {0, 1}});
  CHECK(apparatus.sim[0] == Partition::universal(1));
  // nothing sits strictly below B, so both group members act equally there
  CHECK(apparatus.sim[1] == Partition::universal(2));
  CHECK(apparatus.classes ==
        std::vector<std::pair<int, std::vector<int>>>{{0, {0}}, {2, {0, 1}}});
  // the swap acts differently on X at large, so nu separates the group
  CHECK(apparatus.nu == Partition::singletons(2));
}

TEST_CASE("the apparatus under a trivial action is degenerate") {
  auto t = make_triple(trivial(), FinitePoset::chain(2), {0, 1}, {{0, 1}});
  auto apparatus = triple_apparatus(t);
  CHECK(apparatus.nu == Partition::universal(1));
  for (auto const& t_a : apparatus.t_sets) {
    CHECK(t_a == std::vector<int>{0});
  }
}

TEST_CASE("order automorphisms commuting with the action") {
  auto rigid = augmented_act_automorphisms(trivial(), FinitePoset::chain(2), {0, 1},
                                           {{0, 1}});
  CHECK(rigid.size() == 1);
  CHECK(rigid.front().is_identity());

  // Y pins the swap triple pointwise
  auto pinned = augmented_act_automorphisms(z2_swap_triple());
  CHECK(pinned.size() == 1);
  CHECK(pinned.front().is_identity());

  // an unordered pair with no group constraints allows both maps
  auto loose = augmented_act_automorphisms(trivial(), FinitePoset::antichain(2), {0, 1},
                                           {{0, 1}});
  CHECK(loose.size() == 2);

  // dropping Y from the swap triple frees the poset swap
  auto t = z2_swap_triple();
  auto unpinned = augmented_act_automorphisms(t.group, t.poset, {2}, t.action);
  CHECK(unpinned.size() == 2);
}

TEST_CASE("pair automorphisms exhaust the raw automorphisms of P") {
  auto run = [](McAlisterTriple const& t, size_t expect) {
    auto p = p_semigroup(t);
    auto elements = p_elements(t);
    auto fam = p_triple_automorphisms(t);
    std::set<std::vector<int>> induced;
    for (auto const& f : fam) {
      // each member really is the coordinatewise map it claims to be
      for (size_t i = 0; i < elements.size(); ++i) {
        auto img = elements[f.induced[static_cast<int>(i)]];
        CHECK(img.first == f.psi[elements[i].first]);
        CHECK(img.second == f.theta[elements[i].second]);
      }
      induced.insert(f.induced.img);
    }
    std::set<std::vector<int>> raw;
    for (auto const& r : oracle::all_automorphisms(p)) raw.insert(r.img);
    CHECK(raw == induced);
    CHECK(raw.size() == expect);
  };
  run(z2_swap_triple(), 1);
  run(double_chain_triple(), 1);
  run(diamond_z2_triple(), 2);
  run(atoms_z3_triple(), 2);
}

TEST_CASE("kappa preserving automorphisms lift to the semidirect product") {
  auto lifts = [](SemidirectData const& d, Perm const& theta) {
    auto m = semidirect_product(d);
    int const nt = d.t.order();
    std::vector<int> img(static_cast<size_t>(m.order()));
    for (int s = 0; s < d.s.order(); ++s)
      for (int t = 0; t < nt; ++t) img[s * nt + t] = s * nt + theta[t];
    for (int a = 0; a < m.order(); ++a)
      for (int b = 0; b < m.order(); ++b)
        if (img[m.product(a, b)] != m.product(img[a], img[b])) return false;
    return true;
  };

  // left multiplication data: every automorphism of the acting semigroup
  // respects both kappa classes, and every one lifts
  auto d = left_mult_data();
  auto kappa = kappa_partition(d);
  auto thetas = oracle::all_automorphisms(d.t);
  CHECK(thetas.size() == 4);
  for (auto const& theta : thetas) {
    for (int t = 0; t < d.t.order(); ++t)
      CHECK(kappa.block_of(t) == kappa.block_of(theta[t]));
    CHECK(lifts(d, theta));
  }

  // a trivial action makes kappa universal, so both automorphisms of the
  // acting group lift to the direct product
  SemidirectData prod;
  prod.s = cyclic(2);
  prod.t = cyclic(3);
  prod.action = {{0, 1}, {0, 1}, {0, 1}};
  CHECK(kappa_partition(prod) == Partition::universal(3));
  auto group_thetas = oracle::all_automorphisms(prod.t);
  CHECK(group_thetas.size() == 2);
  for (auto const& theta : group_thetas) CHECK(lifts(prod, theta));
}
