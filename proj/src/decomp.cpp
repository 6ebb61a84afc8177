#include "semicat/decomp.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "semicat/errors.hpp"
#include "semicat/green.hpp"

namespace semicat {

namespace {

int require_zero(FiniteSemigroup const& s, char const* who) {
  auto z = s.zero();
  if (!z) throw NoZero(std::string(who) + " needs a semigroup with zero");
  return *z;
}

int least_nonzero(std::vector<int> const& sorted_set, int z) {
  for (int a : sorted_set)
    if (a != z) return a;
  return z;
}

}  // namespace

bool is_zero_consistent(FiniteSemigroup const& s, std::vector<int> const& subset) {
  int const z = require_zero(s, "is_zero_consistent");
  std::vector<char> in(static_cast<size_t>(s.order()), 0);
  for (int x : subset) {
    if (x < 0 || x >= s.order()) throw InputError("subset element out of range");
    in[x] = 1;
  }
  for (int u = 0; u < s.order(); ++u) {
    for (int v = 0; v < s.order(); ++v) {
      int p = s.product(u, v);
      // u = 0 or v = 0 forces p = 0, so the factors are automatically
      // non-zero here
      if (p != z && in[p] && !(in[u] && in[v])) return false;
    }
  }
  return true;
}

std::vector<int> least_zero_consistent_ideal(FiniteSemigroup const& s, int x) {
  int const z = require_zero(s, "least_zero_consistent_ideal");
  if (x < 0 || x >= s.order()) throw InputError("element out of range");
  std::vector<char> in(static_cast<size_t>(s.order()), 0);
  in[z] = 1;
  in[x] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int u = 0; u < s.order(); ++u) {
      for (int v = 0; v < s.order(); ++v) {
        int p = s.product(u, v);
        if ((in[u] || in[v]) && !in[p]) {
          in[p] = 1;
          changed = true;
        }
        if (p != z && in[p] && !(in[u] && in[v])) {
          in[u] = in[v] = 1;
          changed = true;
        }
      }
    }
  }
  std::vector<int> out;
  for (int a = 0; a < s.order(); ++a)
    if (in[a]) out.push_back(a);
  return out;
}

ZeroDecomposition greatest_zero_direct_decomposition(FiniteSemigroup const& s) {
  int const z = require_zero(s, "greatest_zero_direct_decomposition");
  if (s.order() == 1) throw InputError("the zero alone has no 0-direct decomposition");

  std::set<std::vector<int>> distinct;
  for (int x = 0; x < s.order(); ++x)
    if (x != z) distinct.insert(least_zero_consistent_ideal(s, x));

  ZeroDecomposition d;
  d.summands.assign(distinct.begin(), distinct.end());
  std::sort(d.summands.begin(), d.summands.end(),
            [&](std::vector<int> const& a, std::vector<int> const& b) {
              return least_nonzero(a, z) < least_nonzero(b, z);
            });

  // union axiom: every non-zero element in exactly one summand
  std::vector<char> seen(static_cast<size_t>(s.order()), 0);
  seen[z] = 1;
  for (auto const& sm : d.summands) {
    if (sm.size() < 2) throw CheckError("decomposition produced a trivial summand");
    for (int a : sm) {
      if (a == z) continue;
      if (seen[a]) throw CheckError("summands overlap beyond the zero");
      seen[a] = 1;
    }
  }
  for (int a = 0; a < s.order(); ++a)
    if (!seen[a]) throw CheckError("decomposition misses an element");

  // annihilation axiom and indecomposability of each summand
  for (size_t i = 0; i < d.summands.size(); ++i) {
    for (size_t j = i + 1; j < d.summands.size(); ++j) {
      for (int a : d.summands[i]) {
        for (int b : d.summands[j]) {
          if (a == z || b == z) continue;
          if (s.product(a, b) != z || s.product(b, a) != z)
            throw CheckError("cross product between summands is not zero");
        }
      }
    }
  }
  for (auto const& sm : d.summands) {
    if (!is_zero_consistent(s, sm)) throw CheckError("summand is not 0-consistent");
    if (!is_zero_directly_indecomposable(subsemigroup(s, sm)))
      throw CheckError("summand decomposes further");
  }
  return d;
}

bool is_zero_directly_indecomposable(FiniteSemigroup const& s) {
  int const z = require_zero(s, "is_zero_directly_indecomposable");
  for (int x = 0; x < s.order(); ++x) {
    if (x == z) continue;
    if (static_cast<int>(least_zero_consistent_ideal(s, x).size()) != s.order()) return false;
  }
  return true;
}

bool is_primitive(FiniteSemigroup const& s) {
  int const z = require_zero(s, "is_primitive");
  auto es = idempotents(s);
  for (int e : es) {
    for (int f : es) {
      if (e == f || e == z || f == z) continue;
      // e strictly below f: f is not primitive
      if (s.product(e, f) == e && s.product(f, e) == e) return false;
    }
  }
  return true;
}

bool is_completely_0_simple(FiniteSemigroup const& s) {
  auto z = s.zero();
  if (!z || s.order() < 2) return false;
  bool some_nonzero_product = false;
  for (int a = 0; a < s.order() && !some_nonzero_product; ++a)
    for (int b = 0; b < s.order() && !some_nonzero_product; ++b)
      some_nonzero_product = s.product(a, b) != *z;
  if (!some_nonzero_product) return false;  // null, not 0-simple

  for (int a = 0; a < s.order(); ++a)
    if (a != *z && static_cast<int>(principal_ideal(s, a).size()) != s.order()) return false;

  auto es = idempotents(s);
  for (int e : es) {
    if (e == *z) continue;
    bool primitive = true;
    for (int f : es) {
      if (f == *z || f == e) continue;
      if (s.product(f, e) == f && s.product(e, f) == f) primitive = false;
    }
    if (primitive) return true;
  }
  return false;
}

bool is_completely_simple(FiniteSemigroup const& s) {
  for (int a = 0; a < s.order(); ++a)
    if (static_cast<int>(principal_ideal(s, a).size()) != s.order()) return false;
  auto es = idempotents(s);
  if (es.empty()) return false;
  for (int e : es)
    for (int f : es)
      if (e != f && s.product(e, f) == e && s.product(f, e) == e) return false;
  return true;
}

ZeroDecomposition primitive_regular_decomposition(FiniteSemigroup const& s) {
  int const z = require_zero(s, "primitive_regular_decomposition");
  if (!is_regular_semigroup(s))
    throw NotRegular("primitive_regular_decomposition needs a regular semigroup");
  auto d = greatest_zero_direct_decomposition(s);
  bool const primitive = is_primitive(s);
  for (auto const& sm : d.summands) {
    if (!is_completely_0_simple(subsemigroup(s, sm))) {
      if (primitive)
        throw CheckError("primitive regular semigroup has a summand that is not completely 0-simple");
      throw SummandNotCompletely0Simple(
          "summand containing element " + std::to_string(least_nonzero(sm, z)) +
          " is not completely 0-simple: the input is not primitive");
    }
  }
  if (!primitive)
    throw CheckError("all summands completely 0-simple yet two non-zero idempotents are comparable");
  return d;
}

DecomposedAutomorphism decompose_automorphism(FiniteSemigroup const& s, Perm const& phi) {
  int const z = require_zero(s, "decompose_automorphism");
  if (!is_permutation(phi.img, s.order()))
    throw InputError("phi is not a permutation of the elements");
  for (int a = 0; a < s.order(); ++a)
    for (int b = 0; b < s.order(); ++b)
      if (phi[s.product(a, b)] != s.product(phi[a], phi[b]))
        throw InputError("phi is not an automorphism");

  DecomposedAutomorphism out;
  out.decomposition = greatest_zero_direct_decomposition(s);
  auto const& summands = out.decomposition.summands;
  int const n = static_cast<int>(summands.size());

  std::vector<int> owner(static_cast<size_t>(s.order()), -1);
  for (int i = 0; i < n; ++i)
    for (int a : summands[i])
      if (a != z) owner[a] = i;

  out.summand_map.assign(static_cast<size_t>(n), -1);
  out.components.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    int target = -1;
    for (int a : summands[i]) {
      if (a == z) continue;
      int t = owner[phi[a]];
      if (t < 0) throw CheckError("automorphism sends a non-zero element to the zero");
      if (target < 0) target = t;
      if (t != target) throw CheckError("summand image straddles two summands");
    }
    out.summand_map[i] = target;
    if (summands[i].size() != summands[target].size())
      throw CheckError("summand image has the wrong size");
    auto const& img = summands[target];
    for (int a : summands[i]) {
      auto it = std::lower_bound(img.begin(), img.end(), phi[a]);
      if (it == img.end() || *it != phi[a]) throw CheckError("summand image is not onto");
      out.components[i].push_back(static_cast<int>(it - img.begin()));
    }
  }

  std::vector<int> pi = out.summand_map;
  std::sort(pi.begin(), pi.end());
  for (int i = 0; i < n; ++i)
    if (pi[i] != i) throw CheckError("summand map is not a bijection");

  // each component is an isomorphism of the induced tables, and the glued
  // map reproduces phi
  std::vector<int> rebuilt(static_cast<size_t>(s.order()), -1);
  for (int i = 0; i < n; ++i) {
    auto sub = subsemigroup(s, summands[i]);
    auto img = subsemigroup(s, summands[out.summand_map[i]]);
    auto const& c = out.components[i];
    for (int x = 0; x < sub.order(); ++x)
      for (int y = 0; y < sub.order(); ++y)
        if (c[sub.product(x, y)] != img.product(c[x], c[y]))
          throw CheckError("component restriction is not an isomorphism");
    for (size_t t = 0; t < summands[i].size(); ++t)
      rebuilt[summands[i][t]] = summands[out.summand_map[i]][c[t]];
  }
  rebuilt[z] = z;
  for (int a = 0; a < s.order(); ++a)
    if (rebuilt[a] != phi[a]) throw CheckError("reconstruction does not reproduce phi");
  return out;
}

}  // namespace semicat
