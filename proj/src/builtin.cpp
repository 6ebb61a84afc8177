#include "semicat/builtin.hpp"

#include <algorithm>
#include <functional>
#include <utility>

#include "semicat/errors.hpp"

namespace semicat {

namespace {

FiniteSemigroup cyclic(int n) {
  std::vector<std::vector<int>> t(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return FiniteSemigroup::from_table(t);
}

// all permutations of three points in lexicographic order; product is
// composition, left factor applied last
FiniteSemigroup symmetric3() {
  std::vector<std::vector<int>> perms;
  std::vector<int> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  int const n = static_cast<int>(perms.size());
  std::vector<std::vector<int>> t(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      std::vector<int> c(3);
      for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
      t[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return FiniteSemigroup::from_table(t);
}

FiniteSemigroup right_zero_band(int m) {
  std::vector<std::vector<int>> t(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) t[i][j] = j;
  return FiniteSemigroup::from_table(t);
}

FiniteSemigroup semilattice_chain(int m) {
  return chain_of_semigroups(std::vector<FiniteSemigroup>(static_cast<size_t>(m), cyclic(1)));
}

struct Entry {
  char const* name;
  std::function<FiniteSemigroup()> make;
};

std::vector<Entry> const& registry() {
  static std::vector<Entry> const table = {
      {"trivial", [] { return cyclic(1); }},
      {"z2", [] { return cyclic(2); }},
      {"z3", [] { return cyclic(3); }},
      {"z4", [] { return cyclic(4); }},
      {"z5", [] { return cyclic(5); }},
      {"z6", [] { return cyclic(6); }},
      {"k4", [] { return direct_product({cyclic(2), cyclic(2)}); }},
      {"s3", [] { return symmetric3(); }},
      {"left-zero-2", [] { return left_zero_band(2); }},
      {"left-zero-3", [] { return left_zero_band(3); }},
      {"right-zero-2", [] { return right_zero_band(2); }},
      {"chain-2", [] { return semilattice_chain(2); }},
      {"chain-3", [] { return semilattice_chain(3); }},
      {"chain-4", [] { return semilattice_chain(4); }},
      {"null-1", [] { return null_semigroup(1); }},
      {"null-2", [] { return null_semigroup(2); }},
      {"null-3", [] { return null_semigroup(3); }},
      {"null-4", [] { return null_semigroup(4); }},
      {"brandt-z2-1", [] { return brandt(cyclic(2), 1); }},
      {"brandt-z2-2", [] { return brandt(cyclic(2), 2); }},
      {"brandt-z3-1", [] { return brandt(cyclic(3), 1); }},
      {"brandt-z3-2", [] { return brandt(cyclic(3), 2); }},
      {"left-zero-2-0", [] { return adjoin_zero(left_zero_band(2)); }},
      {"z3-0", [] { return adjoin_zero(cyclic(3)); }},
      {"zero-union-null2-brandt",
       [] { return zero_direct_union({null_semigroup(2), brandt(cyclic(2), 1)}); }},
      {"zero-union-brandt-brandt",
       [] { return zero_direct_union({brandt(cyclic(2), 1), brandt(cyclic(2), 1)}); }},
      {"zero-union-mixed",
       [] { return zero_direct_union({brandt(cyclic(2), 1), brandt(cyclic(3), 1)}); }},
      {"boolean-zs-2", [] { return boolean_zs(2); }},
      {"boolean-zs-3", [] { return boolean_zs(3); }},
      {"nil-example-2", [] { return example_c(2); }},
      {"nil-example-3", [] { return example_c(3); }},
  };
  return table;
}

}  // namespace

std::vector<std::string> builtin_semigroup_names() {
  std::vector<std::string> names;
  names.reserve(registry().size());
  for (auto const& e : registry()) names.emplace_back(e.name);
  return names;
}

FiniteSemigroup builtin_semigroup(std::string const& name) {
  for (auto const& e : registry())
    if (name == e.name) return e.make();
  throw InputError("unknown builtin semigroup: " + name);
}

std::vector<NamedTriple> builtin_triples() {
  std::vector<NamedTriple> out;
  auto const triv = cyclic(1);
  auto const z2 = cyclic(2);
  auto const z3 = cyclic(3);

  out.push_back({"chain2-trivial",
                 make_triple(triv, FinitePoset::chain(2), {0, 1}, {{0, 1}})});
  out.push_back({"chain3-trivial",
                 make_triple(triv, FinitePoset::chain(3), {0, 1, 2}, {{0, 1, 2}})});

  // one point below an incomparable pair the group swaps; Y omits half
  // the pair
  out.push_back(
      {"swap-z2",
       make_triple(z2, FinitePoset::from_matrix({{1, 0, 0}, {0, 1, 0}, {1, 1, 1}}),
                   {0, 2}, {{0, 1, 2}, {1, 0, 2}})});

  // trivial action of z2 on a chain; P is the direct product
  out.push_back({"chain2-z2",
                 make_triple(z2, FinitePoset::chain(2), {0, 1}, {{0, 1}, {0, 1}})});

  // bottom, two swapped atoms, top; Y is all of X
  out.push_back(
      {"diamond-z2",
       make_triple(z2,
                   FinitePoset::from_matrix(
                       {{1, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}}),
                   {0, 1, 2, 3}, {{0, 1, 2, 3}, {0, 2, 1, 3}})});

  // bottom plus three atoms cycled by z3; Y holds the bottom and one atom
  out.push_back(
      {"atoms-z3",
       make_triple(z3,
                   FinitePoset::from_matrix(
                       {{1, 1, 1, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}),
                   {0, 1}, {{0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}})});

  // two chains glued at the bottom, swapped by z2; Y misses one top
  out.push_back({"double-chain-z2",
                 make_triple(z2,
                             FinitePoset::from_matrix({{1, 0, 0, 0, 0},
                                                       {0, 1, 0, 0, 0},
                                                       {1, 0, 1, 0, 0},
                                                       {0, 1, 0, 1, 0},
                                                       {1, 1, 1, 1, 1}}),
                             {0, 2, 3, 4}, {{0, 1, 2, 3, 4}, {1, 0, 3, 2, 4}})});
  return out;
}

std::vector<NamedSemidirect> builtin_semidirect() {
  std::vector<NamedSemidirect> out;

  // trivial action, so the product is direct and kappa is universal
  {
    SemidirectData d;
    d.s = cyclic(2);
    d.t = cyclic(3);
    d.action = {{0, 1}, {0, 1}, {0, 1}};
    out.push_back({"product-z2-z3", std::move(d)});
  }

  // z2 swaps the two non-zero elements of a null semigroup
  {
    SemidirectData d;
    d.s = null_semigroup(2);
    d.t = cyclic(2);
    d.action = {{0, 1, 2}, {0, 2, 1}};
    out.push_back({"swap-null", std::move(d)});
  }

  // the two-sided ideal L^0 of S' = N2^0 u0 L^0, acted on by left
  // multiplication inside S'
  {
    SemidirectData d;
    d.s = adjoin_zero(left_zero_band(2));  // l1, l2, then the zero
    d.t = zero_direct_union({null_semigroup(2), d.s});
    d.action.assign(5, {2, 2, 2});  // the union's zero and the nulls kill L^0
    d.action[3] = {0, 0, 2};        // l1 wins against everything non-zero
    d.action[4] = {1, 1, 2};
    out.push_back({"left-mult-ideal", std::move(d)});
  }

  // inversion actions; the first builds the symmetric group on 3 points
  {
    SemidirectData d;
    d.s = cyclic(3);
    d.t = cyclic(2);
    d.action = {{0, 1, 2}, {0, 2, 1}};
    out.push_back({"inversion-z3", std::move(d)});
  }
  {
    SemidirectData d;
    d.s = cyclic(4);
    d.t = cyclic(2);
    d.action = {{0, 1, 2, 3}, {0, 3, 2, 1}};
    out.push_back({"inversion-z4", std::move(d)});
  }
  return out;
}

}  // namespace semicat
