#include "semicat/aut.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "semicat/congruence.hpp"
#include "semicat/errors.hpp"
#include "semicat/green.hpp"

namespace semicat {

namespace {

// Iterated invariant refinement.  Colors are interned jointly for the two
// tables so equal colors mean "not yet distinguishable"; any isomorphism
// must respect them.  Returns empty vectors when the color histograms
// diverge, i.e. no isomorphism can exist.
struct Coloring {
  std::vector<int> s_colors;
  std::vector<int> t_colors;
  bool compatible = false;
};

std::vector<long long> initial_key(FiniteSemigroup const& s, GreenStructure const& g,
                                   int a) {
  int const k = s.order();
  std::vector<long long> key;
  key.push_back(s.product(a, a) == a ? 1 : 0);
  key.push_back(s.zero() && *s.zero() == a ? 1 : 0);
  key.push_back(s.identity() && *s.identity() == a ? 1 : 0);
  auto ip = index_period(s, a);
  key.push_back(ip.index);
  key.push_back(ip.period);
  for (Partition const* rel : {&g.R, &g.L, &g.H, &g.J}) {
    long long size = 0;
    for (int b = 0; b < k; ++b)
      if (rel->same(a, b)) ++size;
    key.push_back(size);
  }
  // multiplicity profile of the row and column of a: how often each value
  // occurs, as a sorted multiset (value identities are not invariant, the
  // multiplicities are)
  for (bool row : {true, false}) {
    std::vector<long long> counts(k, 0);
    for (int b = 0; b < k; ++b) ++counts[row ? s.product(a, b) : s.product(b, a)];
    std::sort(counts.begin(), counts.end());
    while (!counts.empty() && counts.front() == 0) counts.erase(counts.begin());
    key.push_back(static_cast<long long>(counts.size()));
    key.insert(key.end(), counts.begin(), counts.end());
  }
  return key;
}

bool histograms_match(std::vector<int> const& a, std::vector<int> const& b) {
  std::map<int, int> ha, hb;
  for (int c : a) ++ha[c];
  for (int c : b) ++hb[c];
  return ha == hb;
}

Coloring refine_colors(FiniteSemigroup const& s, FiniteSemigroup const& t) {
  Coloring out;
  int const ks = s.order(), kt = t.order();
  if (ks != kt) return out;
  GreenStructure gs = green_relations(s);
  GreenStructure gt = green_relations(t);

  std::map<std::vector<long long>, int> intern;
  auto color_of = [&intern](std::vector<long long> const& key) {
    auto it = intern.find(key);
    if (it != intern.end()) return it->second;
    int id = static_cast<int>(intern.size());
    intern.emplace(key, id);
    return id;
  };

  std::vector<int> cs(ks), ct(kt);
  for (int a = 0; a < ks; ++a) cs[a] = color_of(initial_key(s, gs, a));
  for (int a = 0; a < kt; ++a) ct[a] = color_of(initial_key(t, gt, a));
  if (!histograms_match(cs, ct)) return out;

  auto refine_once = [&color_of](FiniteSemigroup const& u, std::vector<int> const& c,
                                 std::vector<int>& next) {
    int const k = u.order();
    next.resize(k);
    for (int a = 0; a < k; ++a) {
      std::vector<long long> triples;
      triples.reserve(3 * static_cast<size_t>(k));
      for (int b = 0; b < k; ++b) {
        // pack the triple into one value; color ids stay well below 2^20
        long long packed = (static_cast<long long>(c[b]) << 42) |
                           (static_cast<long long>(c[u.product(a, b)]) << 21) |
                           static_cast<long long>(c[u.product(b, a)]);
        triples.push_back(packed);
      }
      std::sort(triples.begin(), triples.end());
      std::vector<long long> key;
      key.reserve(triples.size() + 1);
      key.push_back(c[a]);
      key.insert(key.end(), triples.begin(), triples.end());
      next[a] = color_of(key);
    }
  };

  int n_colors = static_cast<int>(intern.size());
  for (;;) {
    intern.clear();
    std::vector<int> ns, nt;
    refine_once(s, cs, ns);
    refine_once(t, ct, nt);
    if (!histograms_match(ns, nt)) return out;
    int fresh = static_cast<int>(intern.size());
    cs = std::move(ns);
    ct = std::move(nt);
    if (fresh == n_colors) break;  // stable partition reached
    n_colors = fresh;
  }

  out.s_colors = std::move(cs);
  out.t_colors = std::move(ct);
  out.compatible = true;
  return out;
}

// Depth-first search for table-preserving bijections.  Each tentative
// assignment propagates through the multiplication: once a -> b and
// c -> d are fixed, ac -> bd and ca -> db are forced.
struct IsoSearch {
  FiniteSemigroup const& s;
  FiniteSemigroup const& t;
  std::vector<int> s_colors;
  std::vector<int> t_colors;
  std::uint64_t budget;
  bool collect_all;

  int k;
  std::vector<int> img;   // s index -> t index, -1 open
  std::vector<int> pre;   // t index -> s index, -1 open
  std::uint64_t nodes = 0;
  bool stop = false;
  std::vector<Perm> found;

  IsoSearch(FiniteSemigroup const& s_, FiniteSemigroup const& t_, Coloring colors,
            std::uint64_t budget_, bool collect_all_)
      : s(s_),
        t(t_),
        s_colors(std::move(colors.s_colors)),
        t_colors(std::move(colors.t_colors)),
        budget(budget_),
        collect_all(collect_all_),
        k(s_.order()),
        img(static_cast<size_t>(s_.order()), -1),
        pre(static_cast<size_t>(s_.order()), -1) {}

  bool force(int a, int b, std::vector<int>& trail, std::deque<int>& queue) {
    if (img[a] != -1) return img[a] == b;
    if (pre[b] != -1) return false;
    if (s_colors[a] != t_colors[b]) return false;
    img[a] = b;
    pre[b] = a;
    trail.push_back(a);
    queue.push_back(a);
    return true;
  }

  bool propagate(std::vector<int>& trail, std::deque<int>& queue) {
    while (!queue.empty()) {
      int a = queue.front();
      queue.pop_front();
      int b = img[a];
      for (int c = 0; c < k; ++c) {
        if (img[c] == -1) continue;
        int d = img[c];
        if (!force(s.product(a, c), t.product(b, d), trail, queue)) return false;
        if (!force(s.product(c, a), t.product(d, b), trail, queue)) return false;
      }
    }
    return true;
  }

  void unwind(std::vector<int> const& trail) {
    for (int a : trail) {
      pre[img[a]] = -1;
      img[a] = -1;
    }
  }

  void dfs() {
    if (stop) return;
    if (++nodes > budget)
      throw SearchBudgetExceeded("isomorphism search exceeded " +
                                 std::to_string(budget) + " nodes");
    // branch on the open point with the fewest viable targets
    int pick = -1, best = k + 1;
    for (int a = 0; a < k; ++a) {
      if (img[a] != -1) continue;
      int viable = 0;
      for (int b = 0; b < k; ++b)
        if (pre[b] == -1 && t_colors[b] == s_colors[a]) ++viable;
      if (viable < best) {
        best = viable;
        pick = a;
      }
      if (viable == 0) break;
    }
    if (pick == -1) {
      Perm p;
      p.img = img;
      found.push_back(std::move(p));
      if (!collect_all) stop = true;
      return;
    }
    for (int b = 0; b < k && !stop; ++b) {
      if (pre[b] != -1 || t_colors[b] != s_colors[pick]) continue;
      std::vector<int> trail;
      std::deque<int> queue;
      if (force(pick, b, trail, queue) && propagate(trail, queue)) dfs();
      unwind(trail);
    }
  }

  std::vector<Perm> run() {
    dfs();
    std::sort(found.begin(), found.end());
    return found;
  }
};

std::vector<Perm> search_isomorphisms(FiniteSemigroup const& s, FiniteSemigroup const& t,
                                      SearchOptions const& opts, bool collect_all) {
  if (s.order() != t.order()) return {};
  Coloring colors = refine_colors(s, t);
  if (!colors.compatible) return {};
  IsoSearch search(s, t, std::move(colors), opts.node_budget, collect_all);
  return search.run();
}

// identity present, inverses present, closed under composition.  The
// quadratic closure check is gated to keep large groups affordable.
void assert_subgroup(std::vector<Perm> const& elements, int degree) {
  if (elements.empty()) throw CheckError("automorphism set lost the identity");
  std::set<Perm> all(elements.begin(), elements.end());
  if (!all.count(Perm::identity(degree)))
    throw CheckError("automorphism set lost the identity");
  for (Perm const& p : elements)
    if (!all.count(p.inverse())) throw CheckError("automorphism set not inverse closed");
  if (elements.size() <= 1000) {
    for (Perm const& p : elements)
      for (Perm const& q : elements)
        if (!all.count(p.after(q)))
          throw CheckError("automorphism set not closed under composition");
  } else {
    for (size_t i = 0; i < elements.size(); i += elements.size() / 100 + 1)
      for (size_t j = 0; j < elements.size(); j += elements.size() / 100 + 1)
        if (!all.count(elements[i].after(elements[j])))
          throw CheckError("automorphism set not closed under composition");
  }
}

bool is_table_automorphism(FiniteSemigroup const& s, Perm const& p) {
  int const k = s.order();
  if (p.degree() != k) return false;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (p[s.product(a, b)] != s.product(p[a], p[b])) return false;
  return true;
}

}  // namespace

bool AutGroup::contains(Perm const& p) const {
  return std::binary_search(elements.begin(), elements.end(), p);
}

std::vector<Perm> AutGroup::generators() const {
  if (elements.empty()) return {};
  int const degree = elements.front().degree();
  std::vector<Perm> gens;
  std::set<Perm> span;
  span.insert(Perm::identity(degree));
  while (span.size() < elements.size()) {
    Perm next = Perm::identity(degree);
    bool found_missing = false;
    for (Perm const& p : elements)
      if (!span.count(p)) {
        next = p;
        found_missing = true;
        break;
      }
    if (!found_missing) break;
    gens.push_back(next);
    // regenerate the span with the enlarged generating set
    std::deque<Perm> work(span.begin(), span.end());
    span.insert(next);
    work.push_back(next);
    while (!work.empty()) {
      Perm p = work.front();
      work.pop_front();
      for (Perm const& g : gens) {
        for (Perm q : {p.after(g), g.after(p)}) {
          if (span.insert(q).second) work.push_back(q);
        }
      }
    }
  }
  return gens;
}

AutGroup automorphism_group(FiniteSemigroup const& s, SearchOptions const& opts) {
  AutGroup g;
  g.elements = search_isomorphisms(s, s, opts, true);
  for (Perm const& p : g.elements)
    if (!is_table_automorphism(s, p)) throw CheckError("search produced a non-automorphism");
  assert_subgroup(g.elements, s.order());
  return g;
}

std::optional<Perm> find_isomorphism(FiniteSemigroup const& s, FiniteSemigroup const& t,
                                     SearchOptions const& opts) {
  auto found = search_isomorphisms(s, t, opts, false);
  if (found.empty()) return std::nullopt;
  return found.front();
}

bool are_isomorphic(FiniteSemigroup const& s, FiniteSemigroup const& t,
                    SearchOptions const& opts) {
  return find_isomorphism(s, t, opts).has_value();
}

std::vector<Perm> all_isomorphisms(FiniteSemigroup const& s, FiniteSemigroup const& t,
                                   SearchOptions const& opts) {
  return search_isomorphisms(s, t, opts, true);
}

namespace {

// Shared tuple-orbit engine.  Points are drawn from a sorted universe of
// ids; maps act on ids with -1 marking "undefined / leaves the universe".
// Tuples are mixed-radix codes, most significant digit first, so numeric
// order equals lexicographic order.
struct TupleOrbitResult {
  std::uint64_t count = 0;
  std::vector<std::vector<int>> representatives;
};

TupleOrbitResult orbits_on_tuples(std::vector<int> universe, int n, int degree,
                                  std::vector<std::vector<int>> const& maps,
                                  OrbitOptions const& opts) {
  if (n < 1) throw InputError("tuple length must be at least 1");
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
  for (int e : universe)
    if (e < 0 || e >= degree) throw InputError("universe entry out of range");

  std::uint64_t const m = universe.size();
  TupleOrbitResult out;
  if (m == 0) return out;
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= m;
    if (total > opts.max_tuples)
      throw TupleSpaceTooLarge("tuple space exceeds " +
                               std::to_string(opts.max_tuples) + " entries");
  }

  std::vector<int> position(static_cast<size_t>(degree), -1);
  for (std::uint64_t i = 0; i < m; ++i) position[universe[i]] = static_cast<int>(i);

  std::vector<int> digits(static_cast<size_t>(n));
  auto decode = [&](std::uint64_t code) {
    for (int i = n - 1; i >= 0; --i) {
      digits[i] = static_cast<int>(code % m);
      code /= m;
    }
  };
  // image of the decoded tuple under one map, already re-encoded; -1 when
  // any coordinate is undefined or escapes the universe
  auto image_code = [&](std::vector<int> const& map) -> std::int64_t {
    std::uint64_t code = 0;
    for (int i = 0; i < n; ++i) {
      int e = map[universe[digits[i]]];
      if (e < 0) return -1;
      int pos = position[e];
      if (pos < 0) return -1;
      code = code * m + static_cast<std::uint64_t>(pos);
    }
    return static_cast<std::int64_t>(code);
  };

  auto push_representative = [&](std::uint64_t code) {
    if (!opts.collect_representatives) return;
    decode(code);
    std::vector<int> rep(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) rep[i] = universe[digits[i]];
    out.representatives.push_back(std::move(rep));
  };

  if (static_cast<std::uint64_t>(maps.size()) <=
      static_cast<std::uint64_t>(opts.max_group_for_union_find)) {
    UnionFind uf(static_cast<int>(total));
    for (std::uint64_t code = 0; code < total; ++code) {
      decode(code);
      for (auto const& map : maps) {
        std::int64_t other = image_code(map);
        if (other >= 0) uf.unite(static_cast<int>(code), static_cast<int>(other));
      }
    }
    for (std::uint64_t code = 0; code < total; ++code) {
      // roots are minimal in their class, so each root is the least tuple
      if (uf.find(static_cast<int>(code)) == static_cast<int>(code)) {
        ++out.count;
        push_representative(code);
      }
    }
  } else {
    for (std::uint64_t code = 0; code < total; ++code) {
      decode(code);
      bool least = true;
      for (auto const& map : maps) {
        std::int64_t other = image_code(map);
        if (other >= 0 && static_cast<std::uint64_t>(other) < code) {
          least = false;
          break;
        }
      }
      if (least) {
        ++out.count;
        push_representative(code);
      }
    }
  }
  return out;
}

std::vector<std::vector<int>> group_as_maps(AutGroup const& group) {
  std::vector<std::vector<int>> maps;
  maps.reserve(group.elements.size());
  for (Perm const& p : group.elements) maps.push_back(p.img);
  return maps;
}

}  // namespace

OrbitReport orbit_count(FiniteSemigroup const& s, int n, AutGroup const& group,
                        OrbitOptions const& opts, std::string group_desc) {
  std::vector<int> universe(static_cast<size_t>(s.order()));
  for (int i = 0; i < s.order(); ++i) universe[i] = i;
  return orbit_count_over(std::move(universe), n, group, opts, std::move(group_desc));
}

OrbitReport orbit_count_over(std::vector<int> universe, int n, AutGroup const& group,
                             OrbitOptions const& opts, std::string group_desc) {
  if (group.elements.empty()) throw InputError("acting group is empty");
  int const degree = group.elements.front().degree();
  auto result = orbits_on_tuples(std::move(universe), n, degree, group_as_maps(group), opts);
  OrbitReport report;
  report.n = n;
  report.group = std::move(group_desc);
  report.orbit_count = result.count;
  report.representatives = std::move(result.representatives);
  return report;
}

AutGroup pointwise_stabilizer(AutGroup const& g, std::vector<int> const& tuple) {
  AutGroup out;
  for (Perm const& p : g.elements) {
    bool fixes = true;
    for (int e : tuple) {
      if (e < 0 || e >= p.degree()) throw InputError("stabilized point out of range");
      if (p[e] != e) {
        fixes = false;
        break;
      }
    }
    if (fixes) out.elements.push_back(p);
  }
  if (!g.elements.empty()) assert_subgroup(out.elements, g.elements.front().degree());
  return out;
}

AutGroup setwise_stabilizer(AutGroup const& g, std::vector<std::vector<int>> const& sets) {
  std::vector<std::set<int>> targets;
  for (auto const& s : sets) targets.emplace_back(s.begin(), s.end());
  AutGroup out;
  for (Perm const& p : g.elements) {
    bool keeps = true;
    for (auto const& target : targets) {
      std::set<int> image;
      for (int e : target) {
        if (e < 0 || e >= p.degree()) throw InputError("stabilized point out of range");
        image.insert(p[e]);
      }
      if (image != target) {
        keeps = false;
        break;
      }
    }
    if (keeps) out.elements.push_back(p);
  }
  if (!g.elements.empty()) assert_subgroup(out.elements, g.elements.front().degree());
  return out;
}

std::uint64_t class_orbit_count(FiniteSemigroup const& s, Partition const& tau, int n,
                                AutGroup const* aut, OrbitOptions const& opts) {
  if (tau.size() != s.order()) throw InputError("partition size mismatch");
  AutGroup computed;
  if (!aut) {
    computed = automorphism_group(s);
    aut = &computed;
  }
  auto blocks = tau.blocks();
  int const n_blocks = static_cast<int>(blocks.size());
  std::vector<std::set<int>> block_sets;
  for (auto const& b : blocks) block_sets.emplace_back(b.begin(), b.end());

  // induced action on tau-classes: a class maps to the class its setwise
  // image equals, or nowhere when the image is no tau-class at all
  std::vector<std::vector<int>> class_maps;
  for (Perm const& p : aut->elements) {
    std::vector<int> cmap(static_cast<size_t>(n_blocks), -1);
    for (int c = 0; c < n_blocks; ++c) {
      std::set<int> image;
      for (int e : block_sets[c]) image.insert(p[e]);
      for (int d = 0; d < n_blocks; ++d)
        if (image == block_sets[d]) {
          cmap[c] = d;
          break;
        }
    }
    class_maps.push_back(std::move(cmap));
  }

  std::vector<int> universe(static_cast<size_t>(n_blocks));
  for (int i = 0; i < n_blocks; ++i) universe[i] = i;
  OrbitOptions local = opts;
  local.collect_representatives = false;
  return orbits_on_tuples(std::move(universe), n, n_blocks, class_maps, local).count;
}

std::uint64_t pattern_classes(int n) {
  if (n < 1) throw InputError("pattern length must be at least 1");
  if (n > 25) throw InputError("pattern count overflows past length 25");
  // Bell triangle; each row ends in the next Bell number
  std::vector<std::uint64_t> row{1};
  for (int i = 1; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (std::uint64_t v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.back();
}

std::vector<int> natural_class_of(std::vector<int> const& tuple) {
  std::vector<int> pattern;
  pattern.reserve(tuple.size());
  std::map<int, int> seen;
  for (int e : tuple) {
    auto it = seen.find(e);
    if (it == seen.end()) {
      int id = static_cast<int>(seen.size());
      seen.emplace(e, id);
      pattern.push_back(id);
    } else {
      pattern.push_back(it->second);
    }
  }
  return pattern;
}

std::string pattern_string(std::vector<int> const& pattern) {
  std::string out;
  for (size_t i = 0; i < pattern.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(pattern[i]);
  }
  return out;
}

namespace {

Partition element_orbits(FiniteSemigroup const& s, AutGroup const& aut) {
  UnionFind uf(s.order());
  for (Perm const& p : aut.elements)
    for (int a = 0; a < s.order(); ++a) uf.unite(a, p[a]);
  return Partition::from_union_find(uf);
}

}  // namespace

bool is_characteristic(FiniteSemigroup const& s, std::vector<int> const& subset,
                       AutGroup const* aut) {
  std::vector<char> member(static_cast<size_t>(s.order()), 0);
  for (int e : subset) {
    if (e < 0 || e >= s.order()) throw InputError("subset entry out of range");
    member[e] = 1;
  }
  AutGroup computed;
  if (!aut) {
    computed = automorphism_group(s);
    aut = &computed;
  }
  Partition orbits = element_orbits(s, *aut);
  for (auto const& orbit : orbits.blocks()) {
    int inside = 0;
    for (int e : orbit) inside += member[e];
    if (inside != 0 && inside != static_cast<int>(orbit.size())) return false;
  }
  return true;
}

CharacteristicReport characteristic_closure_report(FiniteSemigroup const& s,
                                                   AutGroup const* aut) {
  AutGroup computed;
  if (!aut) {
    computed = automorphism_group(s);
    aut = &computed;
  }
  Partition orbits = element_orbits(s, *aut);
  CharacteristicReport report;
  report.tau = orbits.n_blocks();
  report.orbits = orbits.blocks();
  return report;
}

bool is_prc_system(FiniteSemigroup const& s, std::vector<PivotedSubset> const& system,
                   AutGroup const* aut) {
  if (system.empty()) return true;
  size_t const t = system.front().pivot.size();
  for (auto const& ps : system) {
    if (ps.pivot.size() != t) throw InputError("pivot tuples must share one length");
    for (int e : ps.pivot)
      if (e < 0 || e >= s.order()) throw InputError("pivot entry out of range");
    for (int e : ps.subset)
      if (e < 0 || e >= s.order()) throw InputError("subset entry out of range");
  }
  AutGroup computed;
  if (!aut) {
    computed = automorphism_group(s);
    aut = &computed;
  }
  std::vector<std::set<int>> subset_sets;
  for (auto const& ps : system) subset_sets.emplace_back(ps.subset.begin(), ps.subset.end());

  // one-sided containment suffices: the inverse automorphism supplies the
  // reverse inclusion, so equality holds whenever pivots match
  for (Perm const& p : aut->elements) {
    for (size_t i = 0; i < system.size(); ++i) {
      std::vector<int> pivot_image(t);
      for (size_t c = 0; c < t; ++c) pivot_image[c] = p[system[i].pivot[c]];
      for (size_t j = 0; j < system.size(); ++j) {
        if (pivot_image != system[j].pivot) continue;
        for (int e : system[i].subset)
          if (!subset_sets[j].count(p[e])) return false;
      }
    }
  }
  return true;
}

namespace {

// smallest ideal containing the seed: close under products with anything
std::vector<int> ideal_closure(FiniteSemigroup const& s, std::vector<int> const& seed) {
  std::vector<char> in(static_cast<size_t>(s.order()), 0);
  std::deque<int> work;
  for (int e : seed)
    if (!in[e]) {
      in[e] = 1;
      work.push_back(e);
    }
  while (!work.empty()) {
    int a = work.front();
    work.pop_front();
    for (int c = 0; c < s.order(); ++c) {
      for (int p : {s.product(a, c), s.product(c, a)}) {
        if (!in[p]) {
          in[p] = 1;
          work.push_back(p);
        }
      }
    }
  }
  std::vector<int> out;
  for (int e = 0; e < s.order(); ++e)
    if (in[e]) out.push_back(e);
  return out;
}

// Rees quotients along the tower must have no characteristic ideal other
// than the zero and everything.  Ideals generated by single orbits are
// automatically characteristic and every characteristic ideal is a union
// of such, so checking the single-orbit ideals covers all of them.
void assert_characteristically_0_simple(FiniteSemigroup const& q, SearchOptions const& opts) {
  if (!q.zero()) throw CheckError("tower quotient lost its zero");
  int const zero = *q.zero();
  AutGroup aut = automorphism_group(q, opts);
  Partition orbits = element_orbits(q, aut);
  for (auto const& orbit : orbits.blocks()) {
    auto ideal = ideal_closure(q, orbit);
    if (static_cast<int>(ideal.size()) == q.order()) continue;
    if (ideal.size() == 1 && ideal.front() == zero) continue;
    throw CheckError("tower quotient has a proper characteristic ideal");
  }
}

}  // namespace

std::vector<std::vector<int>> characteristic_ideal_tower(FiniteSemigroup const& s,
                                                         SearchOptions const& opts) {
  std::vector<int> current(static_cast<size_t>(s.order()));
  for (int i = 0; i < s.order(); ++i) current[i] = i;
  std::vector<std::vector<int>> tower{current};

  for (;;) {
    FiniteSemigroup sub = subsemigroup(s, current);
    AutGroup aut = automorphism_group(sub, opts);
    Partition orbits = element_orbits(sub, aut);
    auto orbit_blocks = orbits.blocks();
    int const n_orbits = static_cast<int>(orbit_blocks.size());

    std::vector<std::vector<int>> principal(static_cast<size_t>(n_orbits));
    for (int i = 0; i < n_orbits; ++i) principal[i] = ideal_closure(sub, orbit_blocks[i]);

    // a characteristic ideal omitting orbit O sits inside the union of the
    // single-orbit ideals avoiding O, and that union is itself one; the
    // maximal proper characteristic ideals appear among these unions
    std::vector<std::vector<int>> candidates;
    for (int o = 0; o < n_orbits; ++o) {
      int const probe = orbit_blocks[o].front();
      std::vector<char> in(static_cast<size_t>(sub.order()), 0);
      for (int i = 0; i < n_orbits; ++i) {
        if (std::binary_search(principal[i].begin(), principal[i].end(), probe)) continue;
        for (int e : principal[i]) in[e] = 1;
      }
      std::vector<int> candidate;
      for (int e = 0; e < sub.order(); ++e)
        if (in[e]) candidate.push_back(e);
      if (!candidate.empty()) candidates.push_back(std::move(candidate));
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    if (candidates.empty()) break;

    std::vector<std::vector<int>> maximal;
    for (auto const& c : candidates) {
      bool dominated = false;
      for (auto const& d : candidates) {
        if (c.size() >= d.size() || &c == &d) continue;
        if (std::includes(d.begin(), d.end(), c.begin(), c.end())) {
          dominated = true;
          break;
        }
      }
      if (!dominated) maximal.push_back(c);
    }
    // deterministic choice among equally maximal ideals: least element set
    std::vector<int> chosen = *std::min_element(maximal.begin(), maximal.end());

    assert_characteristically_0_simple(rees_quotient(sub, chosen), opts);

    std::vector<int> global;
    global.reserve(chosen.size());
    for (int e : chosen) global.push_back(current[e]);
    tower.push_back(global);
    current = std::move(global);
  }
  return tower;
}

}  // namespace semicat
