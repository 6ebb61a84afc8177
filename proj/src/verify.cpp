#include "semicat/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "semicat/aut.hpp"
#include "semicat/builtin.hpp"
#include "semicat/congruence.hpp"
#include "semicat/constructions.hpp"
#include "semicat/decomp.hpp"
#include "semicat/errors.hpp"
#include "semicat/green.hpp"
#include "semicat/semigroup.hpp"

namespace semicat {

namespace {

struct Battery {
  VerifyReport report;

  void expect(bool ok, std::string const& instance, std::string const& message) {
    ++report.checks;
    if (!ok) report.failures.push_back({instance, message});
  }
};

// every partition of {0..n-1} by restricted growth strings
std::vector<Partition> all_partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> ids(static_cast<size_t>(n), 0);
  while (true) {
    out.push_back(Partition::from_assignment(ids));
    int pos = n - 1;
    for (; pos > 0; --pos) {
      int cap = *std::max_element(ids.begin(), ids.begin() + pos) + 1;
      if (ids[static_cast<size_t>(pos)] < cap) break;
    }
    if (pos == 0) return out;
    ++ids[static_cast<size_t>(pos)];
    std::fill(ids.begin() + pos + 1, ids.end(), 0);
  }
}

std::vector<int> group_inverses(FiniteSemigroup const& g) {
  int const e = *g.identity();
  std::vector<int> inv(static_cast<size_t>(g.order()));
  for (int a = 0; a < g.order(); ++a)
    for (int x = 0; x < g.order(); ++x)
      if (g.product(a, x) == e) inv[static_cast<size_t>(a)] = x;
  return inv;
}

void brandt_aut_suite(Battery& b) {
  for (auto const& gname : {"z2", "z3", "z4", "k4", "s3"}) {
    auto const g = builtin_semigroup(gname);
    auto const autg = automorphism_group(g);
    auto const inv = group_inverses(g);
    for (int m = 1; m <= 3; ++m) {
      if (m * m * g.order() > 55) continue;
      std::string const instance = std::string(gname) + " m=" + std::to_string(m);
      auto const s = brandt(g, m);
      auto const aut = automorphism_group(s);

      std::uint64_t expected = static_cast<std::uint64_t>(autg.order());
      for (int i = 2; i <= m; ++i) expected *= static_cast<std::uint64_t>(i);
      for (int i = 1; i < m; ++i) expected *= static_cast<std::uint64_t>(g.order());
      b.expect(static_cast<std::uint64_t>(aut.order()) == expected, instance,
               "|Aut| = " + std::to_string(aut.order()) + ", formula gives " +
                   std::to_string(expected));

      // the scaled family, exhausted by odometer over the scaling vectors
      std::set<std::vector<int>> scaled, plain;
      for (auto const& theta : autg.elements) {
        std::vector<int> pi(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i) pi[static_cast<size_t>(i)] = i;
        do {
          std::vector<int> u(static_cast<size_t>(m), 0);
          while (true) {
            auto p = brandt_scaled_automorphism(g, m, theta, Perm(pi), u);
            scaled.insert(p.img);
            if (std::all_of(u.begin(), u.end(),
                            [&](int x) { return x == *g.identity(); }))
              plain.insert(p.img);
            int pos = m - 1;
            while (pos >= 0 && ++u[static_cast<size_t>(pos)] == g.order()) {
              u[static_cast<size_t>(pos)] = 0;
              --pos;
            }
            if (pos < 0) break;
          }
        } while (std::next_permutation(pi.begin(), pi.end()));
      }

      std::set<std::vector<int>> raw;
      for (auto const& p : aut.elements) raw.insert(p.img);
      b.expect(raw == scaled, instance, "raw search and scaled family disagree");
      b.expect(std::includes(raw.begin(), raw.end(), plain.begin(), plain.end()), instance,
               "an unscaled pair map is no automorphism");
      if (m == 1)
        b.expect(raw == plain, instance, "scalings added maps even with one row");
    }
  }
}

void p_semigroup_suite(Battery& b) {
  for (auto const& [name, t] : builtin_triples()) {
    auto const p = p_semigroup(t);
    auto const elements = p_elements(t);
    int const np = p.order();
    b.expect(is_inverse(p), name, "P is not inverse");
    b.expect(is_inverse(p) && is_e_unitary(p), name, "P is not E-unitary");

    // idempotents are exactly Y x {identity}
    int const e = *t.group.identity();
    std::vector<int> expected_idem;
    for (int i = 0; i < np; ++i)
      if (elements[static_cast<size_t>(i)].second == e) expected_idem.push_back(i);
    b.expect(idempotents(p) == expected_idem, name, "E(P) is not Y x {1}");

    // R compares left coordinates, L compares g^{-1}A
    auto const gs = green_relations(p);
    auto const inv = group_inverses(t.group);
    bool r_ok = true, l_ok = true;
    for (int a = 0; a < np; ++a)
      for (int c = 0; c < np; ++c) {
        auto const& [A, g] = elements[static_cast<size_t>(a)];
        auto const& [B, h] = elements[static_cast<size_t>(c)];
        if (gs.R.same(a, c) != (A == B)) r_ok = false;
        int const ga = t.action[static_cast<size_t>(inv[static_cast<size_t>(g)])]
                               [static_cast<size_t>(A)];
        int const hb = t.action[static_cast<size_t>(inv[static_cast<size_t>(h)])]
                               [static_cast<size_t>(B)];
        if (gs.L.same(a, c) != (ga == hb)) l_ok = false;
      }
    b.expect(r_ok, name, "R does not compare left coordinates");
    b.expect(l_ok, name, "L does not compare g^{-1}A");

    // mu identifies (A,g) and (A,h) exactly when g ~_A h
    auto const mu = max_idempotent_separating(p);
    auto const apparatus = triple_apparatus(t);
    std::map<int, size_t> y_index;
    for (size_t i = 0; i < t.ideal.size(); ++i) y_index[t.ideal[i]] = i;
    bool mu_ok = true;
    for (int a = 0; a < np; ++a)
      for (int c = 0; c < np; ++c) {
        auto const& [A, g] = elements[static_cast<size_t>(a)];
        auto const& [B, h] = elements[static_cast<size_t>(c)];
        bool same = false;
        if (A == B) {
          auto const& t_a = apparatus.t_sets[y_index[A]];
          auto const gp = std::find(t_a.begin(), t_a.end(), g) - t_a.begin();
          auto const hp = std::find(t_a.begin(), t_a.end(), h) - t_a.begin();
          same = apparatus.sim[y_index[A]].same(static_cast<int>(gp), static_cast<int>(hp));
        }
        if (mu.same(a, c) != same) mu_ok = false;
      }
    b.expect(mu_ok, name, "mu disagrees with the ~_A description");

    // the coordinate pair maps exhaust the raw automorphisms
    std::set<std::vector<int>> induced, raw;
    for (auto const& f : p_triple_automorphisms(t)) induced.insert(f.induced.img);
    for (auto const& r : automorphism_group(p).elements) raw.insert(r.img);
    b.expect(induced == raw, name, "pair maps and raw automorphisms disagree");
  }
}

void zero_direct_suite(Battery& b) {
  for (auto const& name : builtin_semigroup_names()) {
    auto const s = builtin_semigroup(name);
    if (!s.zero() || s.order() < 2 || s.order() > 8) continue;
    auto const d = greatest_zero_direct_decomposition(s);

    std::vector<FiniteSemigroup> parts;
    bool all_indec = true;
    for (auto const& part : d.summands) {
      parts.push_back(subsemigroup(s, part));
      if (!is_zero_directly_indecomposable(parts.back())) all_indec = false;
    }
    b.expect(all_indec, name, "a summand decomposes further");
    if (parts.size() >= 2)
      b.expect(are_isomorphic(zero_direct_union(parts), s), name,
               "reassembled union is not isomorphic");

    bool all_factor = true;
    std::string detail;
    for (auto const& phi : automorphism_group(s).elements) {
      try {
        decompose_automorphism(s, phi);
      } catch (std::runtime_error const& e) {
        all_factor = false;
        detail = e.what();
      }
    }
    b.expect(all_factor, name, "an automorphism fails to factor: " + detail);
  }
}

void semidirect_suite(Battery& b) {
  for (auto const& [name, d] : builtin_semidirect()) {
    auto const m = semidirect_product(d);
    auto const kappa = kappa_partition(d);
    int const nt = d.t.order();

    for (auto const& theta : automorphism_group(d.t).elements) {
      bool preserves = true;
      for (int t = 0; t < nt; ++t)
        if (kappa.block_of(t) != kappa.block_of(theta[t])) preserves = false;
      if (!preserves) continue;
      std::vector<int> img(static_cast<size_t>(m.order()));
      for (int s = 0; s < d.s.order(); ++s)
        for (int t = 0; t < nt; ++t)
          img[static_cast<size_t>(s * nt + t)] = s * nt + theta[t];
      bool hom = true;
      for (int a = 0; a < m.order() && hom; ++a)
        for (int c = 0; c < m.order() && hom; ++c)
          if (img[static_cast<size_t>(m.product(a, c))] != m.product(img[a], img[c]))
            hom = false;
      b.expect(hom, name, "a kappa-preserving automorphism fails to lift");
    }

    if (name == "product-z2-z3")
      b.expect(kappa == Partition::universal(nt), name,
               "trivial action should make kappa universal");
    if (name == "left-mult-ideal")
      b.expect(kappa == Partition::from_blocks(5, {{0, 1, 2}, {3, 4}}), name,
               "kappa blocks should split the ideal from the rest");
  }
}

void congruences_suite(Battery& b) {
  for (auto const& name : builtin_semigroup_names()) {
    auto const s = builtin_semigroup(name);
    int const n = s.order();
    if (n > 5) continue;

    std::vector<Partition> congruences;
    for (auto const& p : all_partitions(n))
      if (is_congruence(s, p)) congruences.push_back(p);

    // the generated congruence is the meet of everything containing the pair
    bool gen_ok = true;
    for (int a = 0; a < n && gen_ok; ++a)
      for (int c = a; c < n && gen_ok; ++c) {
        auto const rho = congruence_generated_by(s, {{a, c}});
        Partition expected = Partition::universal(n);
        for (auto const& cong : congruences)
          if (cong.same(a, c)) expected = expected.meet(cong);
        if (rho != expected) gen_ok = false;
      }
    b.expect(gen_ok, name, "generated congruence is not the least one");

    // the largest congruence inside tau sits above every congruence in tau
    bool within_ok = true;
    for (auto const& tau : all_partitions(n)) {
      auto const flat = largest_congruence_within(s, tau);
      if (!is_congruence(s, flat) || !flat.refines(tau)) within_ok = false;
      for (auto const& cong : congruences)
        if (cong.refines(tau) && !cong.refines(flat)) within_ok = false;
    }
    b.expect(within_ok, name, "largest congruence within tau misses a congruence");

    if (is_inverse(s)) {
      auto const sigma = least_group_congruence(s);
      bool sigma_ok = is_group(quotient(s, sigma));
      for (auto const& cong : congruences)
        if (is_group(quotient(s, cong)) && !sigma.refines(cong)) sigma_ok = false;
      b.expect(sigma_ok, name, "sigma is not the least group congruence");

      auto const mu = max_idempotent_separating(s);
      auto const idem = idempotents(s);
      bool mu_ok = is_congruence(s, mu);
      for (size_t i = 0; i < idem.size() && mu_ok; ++i)
        for (size_t j = i + 1; j < idem.size(); ++j)
          if (mu.same(idem[i], idem[j])) mu_ok = false;
      for (auto const& cong : congruences) {
        bool separates = true;
        for (size_t i = 0; i < idem.size() && separates; ++i)
          for (size_t j = i + 1; j < idem.size(); ++j)
            if (cong.same(idem[i], idem[j])) separates = false;
        if (separates && !cong.refines(mu)) mu_ok = false;
      }
      b.expect(mu_ok, name, "mu is not the largest idempotent-separating congruence");
    }
  }
}

void counting_suite(Battery& b, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int round = 0; round < 1000; ++round) {
    int const n = 1 + static_cast<int>(rng() % 20);
    int const r = 1 + static_cast<int>(rng() % 4);

    std::vector<Partition> gammas;
    Partition meet = Partition::universal(n);
    for (int i = 0; i < r; ++i) {
      int const k = 1 + static_cast<int>(rng() % n);
      std::vector<int> ids(static_cast<size_t>(n));
      for (auto& x : ids) x = static_cast<int>(rng() % static_cast<std::uint64_t>(k));
      gammas.push_back(Partition::from_assignment(ids));
      meet = meet.meet(gammas.back());
    }

    // sigma is a random coarsening of the meet, so the hypothesis holds
    UnionFind uf(n);
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y)
        if (meet.same(x, y)) uf.unite(x, y);
    auto const merges = rng() % static_cast<std::uint64_t>(n + 1);
    for (std::uint64_t i = 0; i < merges; ++i)
      uf.unite(static_cast<int>(rng() % static_cast<std::uint64_t>(n)),
               static_cast<int>(rng() % static_cast<std::uint64_t>(n)));
    auto const sigma = Partition::from_union_find(uf);

    std::uint64_t bound = 1;
    for (auto const& g : gammas) bound *= static_cast<std::uint64_t>(g.n_blocks());
    b.expect(meet.refines(sigma), "round " + std::to_string(round),
             "construction broke the hypothesis");
    b.expect(static_cast<std::uint64_t>(sigma.n_blocks()) <= bound,
             "round " + std::to_string(round),
             std::to_string(sigma.n_blocks()) + " classes exceed the bound " +
                 std::to_string(bound));
  }
}

}  // namespace

std::vector<std::string> verify_suite_names() {
  return {"brandt-aut", "p-semigroup", "zero-direct", "semidirect", "congruences",
          "counting"};
}

VerifyReport run_verify(std::string const& suite, std::uint64_t seed) {
  Battery b;
  b.report.suite = suite;
  b.report.seed = seed;
  if (suite == "brandt-aut")
    brandt_aut_suite(b);
  else if (suite == "p-semigroup")
    p_semigroup_suite(b);
  else if (suite == "zero-direct")
    zero_direct_suite(b);
  else if (suite == "semidirect")
    semidirect_suite(b);
  else if (suite == "congruences")
    congruences_suite(b);
  else if (suite == "counting")
    counting_suite(b, seed);
  else
    throw InputError("unknown verify suite: " + suite);
  return b.report;
}

}  // namespace semicat
