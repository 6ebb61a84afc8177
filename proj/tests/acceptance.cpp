// Acceptance battery: eleven structural criteria, one line of output each.
// Every check compares the library against an independent computation
// (brute force, closed formula, exhaustive enumeration) on the builtin
// instances.  Exits non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "semicat/aut.hpp"
#include "semicat/builtin.hpp"
#include "semicat/congruence.hpp"
#include "semicat/constructions.hpp"
#include "semicat/decomp.hpp"
#include "semicat/errors.hpp"
#include "semicat/family.hpp"
#include "semicat/green.hpp"
#include "semicat/semigroup.hpp"
#include "semicat/verify.hpp"

using namespace semicat;

namespace {

struct Tally {
  bool ok = true;
  std::string detail;

  void fail(std::string const& message) {
    ok = false;
    if (!detail.empty()) detail += "; ";
    detail += message;
  }
  void require(bool condition, std::string const& message) {
    if (!condition) fail(message);
  }
};

// ---- criterion 1: pair maps and the |Aut(G)|*m! count ----------------

void brandt_pair_count(Tally& t) {
  for (auto const& gname : {"z2", "z3", "z4", "k4", "s3"}) {
    auto const g = builtin_semigroup(gname);
    auto const autg = automorphism_group(g);
    for (int m = 1; m <= 3; ++m) {
      if (m * m * g.order() > 55) continue;
      std::string const cell = std::string(gname) + " m=" + std::to_string(m);
      auto const aut = automorphism_group(brandt(g, m));

      std::uint64_t want = static_cast<std::uint64_t>(autg.order());
      for (int i = 2; i <= m; ++i) want *= static_cast<std::uint64_t>(i);
      if (static_cast<std::uint64_t>(aut.order()) != want) {
        t.fail(cell + " observed " + std::to_string(aut.order()) + " want " +
               std::to_string(want));
        continue;
      }

      std::set<std::vector<int>> pair_maps;
      for (auto const& theta : autg.elements) {
        std::vector<int> pi(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i) pi[static_cast<size_t>(i)] = i;
        do {
          pair_maps.insert(brandt_automorphism(g, m, theta, Perm(pi)).img);
        } while (std::next_permutation(pi.begin(), pi.end()));
      }
      for (auto const& phi : aut.elements)
        if (!pair_maps.count(phi.img)) {
          t.fail(cell + " holds an automorphism outside the pair maps");
          break;
        }
    }
  }
}

// ---- criterion 2: orbits on tuples of a null semigroup ----------------

std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) /
                                    static_cast<std::uint64_t>(i);
  return r;
}

std::uint64_t partitions_into_at_most(int n, int k) {
  // Stirling triangle, summed over block counts 0..k
  std::vector<std::vector<std::uint64_t>> s(static_cast<size_t>(n + 1),
                                            std::vector<std::uint64_t>(static_cast<size_t>(n + 1), 0));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j)
      s[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          s[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] +
          static_cast<std::uint64_t>(j) * s[static_cast<size_t>(i - 1)][static_cast<size_t>(j)];
  std::uint64_t total = 0;
  for (int j = 0; j <= std::min(n, k); ++j) total += s[static_cast<size_t>(n)][static_cast<size_t>(j)];
  return total;
}

// orbit count over all tuples by direct canonicalization under every
// permutation of the non-zero elements
std::uint64_t null_orbits_brute(int k, int n) {
  int const order = k + 1;  // zero sits at index 0
  std::vector<std::vector<int>> perms;
  std::vector<int> base(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) base[static_cast<size_t>(i)] = i + 1;
  do {
    std::vector<int> full(static_cast<size_t>(order));
    for (int i = 0; i < k; ++i) full[static_cast<size_t>(i + 1)] = base[static_cast<size_t>(i)];
    perms.push_back(full);
  } while (std::next_permutation(base.begin(), base.end()));

  std::set<std::vector<int>> canonical;
  std::vector<int> tuple(static_cast<size_t>(n), 0);
  while (true) {
    std::vector<int> best;
    for (auto const& p : perms) {
      std::vector<int> image(tuple.size());
      for (size_t i = 0; i < tuple.size(); ++i)
        image[i] = p[static_cast<size_t>(tuple[i])];
      if (best.empty() || image < best) best = image;
    }
    canonical.insert(best);
    int pos = n - 1;
    while (pos >= 0 && ++tuple[static_cast<size_t>(pos)] == order) {
      tuple[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return canonical.size();
}

void null_orbit_formula(Tally& t) {
  for (int k = 1; k <= 4; ++k) {
    auto const s = null_semigroup(k);
    auto const aut = automorphism_group(s);
    for (int n = 1; n <= 4; ++n) {
      std::uint64_t formula = 0;
      for (int j = 0; j <= n; ++j)
        formula += binomial(n, j) * partitions_into_at_most(n - j, k);
      auto const tool = orbit_count(s, n, aut).orbit_count;
      auto const brute = null_orbits_brute(k, n);
      if (tool != formula || brute != formula)
        t.fail("k=" + std::to_string(k) + " n=" + std::to_string(n) + " tool " +
               std::to_string(tool) + " formula " + std::to_string(formula) +
               " brute " + std::to_string(brute));
    }
  }
}

// ---- criterion 4: generated and restricted congruences ----------------

void congruence_oracles(Tally& t) {
  for (auto const& name : builtin_semigroup_names()) {
    auto const s = builtin_semigroup(name);
    int const n = s.order();
    if (n > 5) continue;
    auto const congruences = oracle::all_congruences(s);

    std::vector<std::pair<int, int>> all_pairs;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) all_pairs.emplace_back(a, b);

    auto least_containing = [&](std::vector<std::pair<int, int>> const& gens) {
      Partition expected = Partition::universal(n);
      for (auto const& cong : congruences) {
        bool contains = true;
        for (auto const& [a, b] : gens)
          if (!cong.same(a, b)) contains = false;
        if (contains) expected = expected.meet(cong);
      }
      return expected;
    };

    for (auto const& pair : all_pairs)
      if (congruence_generated_by(s, {pair}) !=
          least_containing(std::vector<std::pair<int, int>>{pair})) {
        t.fail(name + ": generated congruence of a single pair is wrong");
        break;
      }
    for (size_t i = 0; i < all_pairs.size() && t.ok; i += 3)
      for (size_t j = i + 1; j < all_pairs.size(); j += 3)
        if (congruence_generated_by(s, {all_pairs[i], all_pairs[j]}) !=
            least_containing({all_pairs[i], all_pairs[j]})) {
          t.fail(name + ": generated congruence of a pair set is wrong");
          break;
        }

    for (auto const& tau : oracle::all_partitions(n)) {
      auto const flat = largest_congruence_within(s, tau);
      if (!is_congruence(s, flat) || !flat.refines(tau)) {
        t.fail(name + ": restriction is no congruence inside tau");
        break;
      }
      bool dominated = true;
      for (auto const& cong : congruences)
        if (cong.refines(tau) && !cong.refines(flat)) dominated = false;
      if (!dominated) {
        t.fail(name + ": a congruence inside tau escapes the restriction");
        break;
      }
    }
  }
}

// ---- criteria 5 and 6: the P-semigroup battery ------------------------

std::vector<int> group_inverses(FiniteSemigroup const& g) {
  int const e = *g.identity();
  std::vector<int> inv(static_cast<size_t>(g.order()));
  for (int a = 0; a < g.order(); ++a)
    for (int x = 0; x < g.order(); ++x)
      if (g.product(a, x) == e) inv[static_cast<size_t>(a)] = x;
  return inv;
}

void mu_matches_sim(Tally& t) {
  auto const triples = builtin_triples();
  t.require(triples.size() >= 5, "fewer than five builtin triples");
  for (auto const& [name, triple] : triples) {
    auto const p = p_semigroup(triple);
    t.require(p.order() <= 16, name + ": P larger than 16");
    auto const elements = p_elements(triple);
    auto const mu = max_idempotent_separating(p);
    auto const apparatus = triple_apparatus(triple);
    std::map<int, size_t> y_index;
    for (size_t i = 0; i < triple.ideal.size(); ++i) y_index[triple.ideal[i]] = i;
    for (int a = 0; a < p.order(); ++a)
      for (int c = 0; c < p.order(); ++c) {
        auto const& [A, g] = elements[static_cast<size_t>(a)];
        auto const& [B, h] = elements[static_cast<size_t>(c)];
        bool same = false;
        if (A == B) {
          auto const& t_a = apparatus.t_sets[y_index[A]];
          auto const gp = std::find(t_a.begin(), t_a.end(), g) - t_a.begin();
          auto const hp = std::find(t_a.begin(), t_a.end(), h) - t_a.begin();
          same = apparatus.sim[y_index[A]].same(static_cast<int>(gp),
                                                static_cast<int>(hp));
        }
        if (mu.same(a, c) != same) {
          t.fail(name + ": mu disagrees at (" + std::to_string(a) + "," +
                 std::to_string(c) + ")");
          return;
        }
      }
  }
}

void p_semigroup_structure(Tally& t) {
  for (auto const& [name, triple] : builtin_triples()) {
    auto const p = p_semigroup(triple);
    auto const elements = p_elements(triple);
    if (!is_inverse(p) || !is_e_unitary(p)) {
      t.fail(name + ": not E-unitary inverse");
      continue;
    }
    int const e = *triple.group.identity();
    std::vector<int> expected_idem;
    for (int i = 0; i < p.order(); ++i)
      if (elements[static_cast<size_t>(i)].second == e) expected_idem.push_back(i);
    t.require(idempotents(p) == expected_idem, name + ": E(P) is not Y x {1}");

    auto const gs = green_relations(p);
    auto const inv = group_inverses(triple.group);
    for (int a = 0; a < p.order(); ++a)
      for (int c = 0; c < p.order(); ++c) {
        auto const& [A, g] = elements[static_cast<size_t>(a)];
        auto const& [B, h] = elements[static_cast<size_t>(c)];
        int const ga = triple.action[static_cast<size_t>(inv[static_cast<size_t>(g)])]
                                    [static_cast<size_t>(A)];
        int const hb = triple.action[static_cast<size_t>(inv[static_cast<size_t>(h)])]
                                    [static_cast<size_t>(B)];
        if (gs.R.same(a, c) != (A == B) || gs.L.same(a, c) != (ga == hb)) {
          t.fail(name + ": a Green law fails");
          goto next_triple;
        }
      }
    {
      std::set<std::vector<int>> induced, raw;
      for (auto const& f : p_triple_automorphisms(triple)) induced.insert(f.induced.img);
      for (auto const& r : oracle::all_automorphisms(p)) raw.insert(r.img);
      t.require(induced == raw, name + ": raw automorphisms escape the pair maps");
    }
  next_triple:;
  }
}

// ---- criterion 7: greatest 0-direct decomposition ---------------------

void zero_direct_battery(Tally& t) {
  for (auto const& name : builtin_semigroup_names()) {
    auto const s = builtin_semigroup(name);
    if (!s.zero() || s.order() < 2 || s.order() > 8) continue;
    auto const d = greatest_zero_direct_decomposition(s);

    auto const all = oracle::all_zero_decompositions(s);
    t.require(std::count(all.begin(), all.end(), d.summands) == 1,
              name + ": computed decomposition not among the enumerated ones");
    int maximal = 0;
    for (auto const& other : all) {
      if (!oracle::refines_decomposition(d.summands, other))
        t.fail(name + ": an enumerated decomposition is not refined");
      if (oracle::refines_decomposition(other, d.summands) && other != d.summands)
        ++maximal;
    }
    t.require(maximal == 0, name + ": maximal decomposition is not unique");

    for (auto const& part : d.summands)
      if (!is_zero_directly_indecomposable(subsemigroup(s, part)))
        t.fail(name + ": a summand decomposes further");

    for (auto const& phi : oracle::all_automorphisms(s)) {
      try {
        auto const split = decompose_automorphism(s, phi);
        t.require(is_permutation(std::vector<int>(split.summand_map.begin(),
                                                  split.summand_map.end()),
                                 static_cast<int>(d.summands.size())),
                  name + ": summand map is no permutation");
      } catch (std::runtime_error const& e) {
        t.fail(name + ": automorphism fails to factor: " + e.what());
      }
    }
  }
}

// ---- criterion 8: semidirect lifting ----------------------------------

void semidirect_lifting(Tally& t) {
  for (auto const& [name, d] : builtin_semidirect()) {
    auto const m = semidirect_product(d);
    t.require(m.order() <= 20, name + ": product larger than 20");
    auto const kappa = kappa_partition(d);
    int const nt = d.t.order();
    for (auto const& theta : oracle::all_automorphisms(d.t)) {
      bool preserving = true;
      for (int x = 0; x < nt; ++x)
        if (kappa.block_of(x) != kappa.block_of(theta[x])) preserving = false;
      if (!preserving) continue;
      std::vector<int> img(static_cast<size_t>(m.order()));
      for (int s = 0; s < d.s.order(); ++s)
        for (int x = 0; x < nt; ++x)
          img[static_cast<size_t>(s * nt + x)] = s * nt + theta[x];
      for (int a = 0; a < m.order(); ++a)
        for (int b = 0; b < m.order(); ++b)
          if (img[static_cast<size_t>(m.product(a, b))] != m.product(img[a], img[b])) {
            t.fail(name + ": a kappa-preserving automorphism fails to lift");
            goto next_instance;
          }
    }
    if (name == "product-z2-z3")
      t.require(kappa == Partition::universal(nt), name + ": kappa is not universal");
    if (name == "left-mult-ideal")
      t.require(kappa == Partition::from_blocks(5, {{0, 1, 2}, {3, 4}}),
                name + ": kappa does not split the ideal from the rest");
  next_instance:;
  }
}

// ---- criterion 9: principal factor classification ---------------------

void principal_factors_classify(Tally& t) {
  for (auto const& name : builtin_semigroup_names()) {
    auto const s = builtin_semigroup(name);
    auto const gs = green_relations(s);

    std::vector<FiniteSemigroup> factors;
    for (auto const& jclass : gs.J.blocks()) {
      auto const pf = principal_factor(s, jclass.front());
      bool const all_zero = [&] {
        if (!pf.factor.zero()) return false;
        for (int a = 0; a < pf.factor.order(); ++a)
          for (int b = 0; b < pf.factor.order(); ++b)
            if (pf.factor.product(a, b) != *pf.factor.zero()) return false;
        return true;
      }();
      bool const c0s = is_completely_0_simple(pf.factor);
      bool const cs = is_completely_simple(pf.factor);

      switch (pf.classification) {
        case FactorClass::null_class:
          t.require(all_zero && !c0s, name + ": null factor misclassified");
          break;
        case FactorClass::completely_0_simple:
          t.require(c0s && !all_zero, name + ": 0-simple factor misclassified");
          break;
        case FactorClass::completely_simple:
          t.require(cs, name + ": simple factor fails the checker");
          break;
      }
      factors.push_back(pf.factor);
    }

    std::vector<FiniteSemigroup> types;
    for (auto const& f : factors) {
      bool known = false;
      for (auto const& t2 : types)
        if (are_isomorphic(f, t2)) known = true;
      if (!known) types.push_back(f);
    }
    auto const aut = automorphism_group(s);
    auto const tau = orbit_count(s, 1, aut).orbit_count;
    t.require(types.size() <= tau + 1,
              name + ": " + std::to_string(types.size()) + " factor types exceed tau+1 = " +
                  std::to_string(tau + 1));
  }
}

// ---- criterion 10: family growth labels -------------------------------

void family_growth(Tally& t) {
  FamilySpec chain;
  chain.family = "chain_semilattice";
  chain.from = 1;
  chain.to = 8;
  chain.statistic = "tau";
  auto const cr = run_family(chain);
  for (auto const& row : cr.rows)
    if (row.value != static_cast<std::uint64_t>(row.parameter))
      t.fail("chain m=" + std::to_string(row.parameter) + " tau " +
             std::to_string(row.value));
  t.require(cr.label == "strictly increasing over range", "chain label is " + cr.label);

  FamilySpec null_family;
  null_family.family = "null";
  null_family.from = 1;
  null_family.to = 8;
  null_family.statistic = "tau";
  auto const nr = run_family(null_family);
  for (auto const& row : nr.rows)
    if (row.value != 2)
      t.fail("null m=" + std::to_string(row.parameter) + " tau " +
             std::to_string(row.value));
  t.require(nr.label == "bounded over range", "null label is " + nr.label);
}

// ---- criterion 11: the nil examples -----------------------------------

void nil_examples(Tally& t) {
  for (int m = 2; m <= 5; ++m) {
    auto const s = example_c(m);
    t.require(nil_degree(s) == std::optional<int>(2),
              "example_c(" + std::to_string(m) + ") nil degree");
    t.require(nilpotency_degree(s) == std::optional<int>(3),
              "example_c(" + std::to_string(m) + ") nilpotency degree");
  }
  for (int m = 1; m <= 4; ++m) {
    auto const s = boolean_zs(m);
    t.require(is_nil_of_degree(s, 2), "boolean_zs(" + std::to_string(m) + ") not nil of degree 2");
    if (m >= 2)
      t.require(nil_degree(s) == std::optional<int>(2),
                "boolean_zs(" + std::to_string(m) + ") nil degree");
    t.require(is_commutative(s), "boolean_zs(" + std::to_string(m) + ") not commutative");
    t.require(s.zero() == std::optional<int>((1 << m) - 2),
              "boolean_zs(" + std::to_string(m) + ") zero is not the full set");
  }
}

}  // namespace

int main() {
  struct Criterion {
    char const* title;
    std::function<void(Tally&)> run;
  };
  std::vector<Criterion> const criteria = {
      {"Brandt automorphisms are the |Aut(G)|*m! pair maps", brandt_pair_count},
      {"null semigroup orbit counts match the closed formula", null_orbit_formula},
      {"random partition counting bound holds",
       [](Tally& t) {
         auto const report = run_verify("counting", kDefaultVerifySeed);
         t.require(report.checks == 2000, "expected 2000 checks");
         for (auto const& f : report.failures) t.fail(f.instance + ": " + f.message);
       }},
      {"generated and restricted congruences match enumeration", congruence_oracles},
      {"mu blocks match the per-ideal-element equivalences", mu_matches_sim},
      {"P-semigroups are E-unitary with coordinate Green relations",
       p_semigroup_structure},
      {"greatest 0-direct decomposition is the unique maximal one",
       zero_direct_battery},
      {"kappa-preserving automorphisms lift to semidirect products",
       semidirect_lifting},
      {"principal factors classify and stay within tau+1 types",
       principal_factors_classify},
      {"family growth labels match the chain and null profiles", family_growth},
      {"nil examples have the advertised degrees", nil_examples},
  };

  bool all_ok = true;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Tally tally;
    auto const start = std::chrono::steady_clock::now();
    try {
      criteria[i].run(tally);
    } catch (std::exception const& e) {
      tally.fail(std::string("exception: ") + e.what());
    }
    auto const ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::printf("[%s] C%zu %s (%lld ms)%s%s\n", tally.ok ? "PASS" : "FAIL", i + 1,
                criteria[i].title, static_cast<long long>(ms),
                tally.ok ? "" : ": ", tally.detail.c_str());
    if (!tally.ok) all_ok = false;
  }
  return all_ok ? 0 : 1;
}
