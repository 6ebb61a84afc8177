#include "semicat/congruence.hpp"

#include <algorithm>
#include <deque>

#include "semicat/green.hpp"

namespace semicat {

bool is_congruence(FiniteSemigroup const& s, Partition const& p, std::string* witness) {
  for (int a = 0; a < s.order(); ++a) {
    for (int b = a + 1; b < s.order(); ++b) {
      if (!p.same(a, b)) {
        continue;
      }
      for (int c = 0; c < s.order(); ++c) {
        if (!p.same(s.product(c, a), s.product(c, b)) ||
            !p.same(s.product(a, c), s.product(b, c))) {
          if (witness) {
            *witness = "pair (" + std::to_string(a) + "," + std::to_string(b) +
                       ") breaks under translation by " + std::to_string(c);
          }
          return false;
        }
      }
    }
  }
  return true;
}

Partition congruence_generated_by(FiniteSemigroup const& s,
                                  std::vector<std::pair<int, int>> const& pairs) {
  int n = s.order();
  UnionFind uf(n);
  std::deque<std::pair<int, int>> work;
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw InputError("congruence_generated_by: pair (" + std::to_string(a) + "," +
                       std::to_string(b) + ") out of range");
    }
    work.emplace_back(a, b);
  }
  // each merge event queues its left and right translates; chains of merges
  // cover translates of every related pair by transitivity
  while (!work.empty()) {
    auto [a, b] = work.front();
    work.pop_front();
    if (!uf.unite(a, b)) {
      continue;
    }
    for (int c = 0; c < n; ++c) {
      work.emplace_back(s.product(c, a), s.product(c, b));
      work.emplace_back(s.product(a, c), s.product(b, c));
    }
  }
  return Partition::from_union_find(uf);
}

Partition largest_congruence_within(FiniteSemigroup const& s, Partition const& tau) {
  int n = s.order();
  if (tau.size() != n) {
    throw InputError("largest_congruence_within: partition size mismatch");
  }
  // contexts u, v range over S plus "absent", encoded as -1
  auto ctx = [&](int u, int a, int v) {
    int x = a;
    if (u >= 0) {
      x = s.product(u, x);
    }
    if (v >= 0) {
      x = s.product(x, v);
    }
    return x;
  };
  UnionFind uf(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      bool same = true;
      for (int u = -1; u < n && same; ++u) {
        for (int v = -1; v < n && same; ++v) {
          same = tau.same(ctx(u, a, v), ctx(u, b, v));
        }
      }
      if (same) {
        uf.unite(a, b);
      }
    }
  }
  auto rho = Partition::from_union_find(uf);
  if (!rho.refines(tau) || !is_congruence(s, rho)) {
    throw CheckError("largest_congruence_within: result failed its postcondition");
  }
  return rho;
}

Partition least_group_congruence(FiniteSemigroup const& s) {
  if (!is_inverse(s)) {
    throw NotInverse("least_group_congruence requires an inverse semigroup");
  }
  auto es = idempotents(s);
  int n = s.order();
  UnionFind uf(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int e : es) {
        if (s.product(e, a) == s.product(e, b)) {
          uf.unite(a, b);
          break;
        }
      }
    }
  }
  auto sigma = Partition::from_union_find(uf);
  if (!is_congruence(s, sigma) || !is_group(quotient(s, sigma))) {
    throw CheckError("least_group_congruence: quotient is not a group");
  }
  return sigma;
}

Partition max_idempotent_separating(FiniteSemigroup const& s) {
  if (!is_inverse(s)) {
    throw NotInverse("max_idempotent_separating requires an inverse semigroup");
  }
  auto mu = largest_congruence_within(s, green_relations(s).H);
  std::vector<int> idem_in_block(mu.n_blocks(), -1);
  for (int e : idempotents(s)) {
    int b = mu.block_of(e);
    if (idem_in_block[b] != -1) {
      throw CheckError("max_idempotent_separating: block contains idempotents " +
                       std::to_string(idem_in_block[b]) + " and " + std::to_string(e));
    }
    idem_in_block[b] = e;
  }
  return mu;
}

FiniteSemigroup quotient(FiniteSemigroup const& s, Partition const& rho) {
  if (rho.size() != s.order()) {
    throw InputError("quotient: partition size mismatch");
  }
  std::string witness;
  if (!is_congruence(s, rho, &witness)) {
    throw NotACongruence("quotient: " + witness);
  }
  int k = rho.n_blocks();
  std::vector<int> rep(k, -1);
  for (int x = 0; x < s.order(); ++x) {
    if (rep[rho.block_of(x)] == -1) {
      rep[rho.block_of(x)] = x;
    }
  }
  std::vector<int> table(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      table[static_cast<size_t>(i) * k + j] = rho.block_of(s.product(rep[i], rep[j]));
    }
  }
  std::vector<std::string> names;
  if (!s.names().empty()) {
    for (int i = 0; i < k; ++i) {
      names.push_back("[" + s.names()[rep[i]] + "]");
    }
  }
  return FiniteSemigroup::from_flat(k, std::move(table), std::move(names));
}

bool is_ideal(FiniteSemigroup const& s, std::vector<int> const& subset,
              std::string* witness) {
  if (subset.empty()) {
    if (witness) {
      *witness = "ideal is empty";
    }
    return false;
  }
  std::vector<bool> in(s.order(), false);
  for (int x : subset) {
    if (x < 0 || x >= s.order()) {
      if (witness) {
        *witness = "element " + std::to_string(x) + " out of range";
      }
      return false;
    }
    in[x] = true;
  }
  for (int x : subset) {
    for (int c = 0; c < s.order(); ++c) {
      if (!in[s.product(x, c)]) {
        if (witness) {
          *witness = std::to_string(x) + "*" + std::to_string(c) + " = " +
                     std::to_string(s.product(x, c)) + " escapes";
        }
        return false;
      }
      if (!in[s.product(c, x)]) {
        if (witness) {
          *witness = std::to_string(c) + "*" + std::to_string(x) + " = " +
                     std::to_string(s.product(c, x)) + " escapes";
        }
        return false;
      }
    }
  }
  return true;
}

FiniteSemigroup rees_quotient(FiniteSemigroup const& s, std::vector<int> const& ideal) {
  std::string witness;
  if (!is_ideal(s, ideal, &witness)) {
    throw NotAnIdeal("rees_quotient: " + witness);
  }
  std::vector<bool> in(s.order(), false);
  for (int x : ideal) {
    in[x] = true;
  }
  // survivors keep their order, the collapsed ideal becomes a zero at the end
  std::vector<int> local(s.order(), -1);
  std::vector<int> survivors;
  for (int x = 0; x < s.order(); ++x) {
    if (!in[x]) {
      local[x] = static_cast<int>(survivors.size());
      survivors.push_back(x);
    }
  }
  int zero_ix = static_cast<int>(survivors.size());
  int k = zero_ix + 1;
  std::vector<int> table(static_cast<size_t>(k) * k, zero_ix);
  for (int i = 0; i < zero_ix; ++i) {
    for (int j = 0; j < zero_ix; ++j) {
      int p = s.product(survivors[i], survivors[j]);
      table[static_cast<size_t>(i) * k + j] = in[p] ? zero_ix : local[p];
    }
  }
  std::vector<std::string> names;
  if (!s.names().empty()) {
    for (int x : survivors) {
      names.push_back(s.names()[x]);
    }
    names.push_back("0");
  }
  return FiniteSemigroup::from_flat(k, std::move(table), std::move(names));
}

bool is_preserved_by(Partition const& tau, Perm const& phi) {
  int n = tau.size();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (tau.same(a, b) != tau.same(phi[a], phi[b])) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace semicat
