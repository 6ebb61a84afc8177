#include "semicat/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "semicat/errors.hpp"

namespace semicat {

namespace {

std::string pair_witness(char const* label, int a, int b) {
  return std::string(label) + " at (" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

FinitePoset FinitePoset::from_matrix(std::vector<std::vector<int>> const& m) {
  int const n = static_cast<int>(m.size());
  FinitePoset p;
  p.n = n;
  p.leq.assign(static_cast<size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(m[a].size()) != n) throw InputError("order matrix is not square");
    for (int b = 0; b < n; ++b) {
      if (m[a][b] != 0 && m[a][b] != 1) throw InputError("order matrix entries must be 0 or 1");
      p.leq[static_cast<size_t>(a) * n + b] = static_cast<char>(m[a][b]);
    }
  }
  for (int a = 0; a < n; ++a)
    if (!p.le(a, a)) throw InputError("order not reflexive at " + std::to_string(a));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && p.le(a, b) && p.le(b, a))
        throw InputError(pair_witness("order not antisymmetric", a, b));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (p.le(a, b) && p.le(b, c) && !p.le(a, c))
          throw InputError(pair_witness("order not transitive", a, c));
  return p;
}

FinitePoset FinitePoset::chain(int n) {
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) m[a][b] = 1;
  return from_matrix(m);
}

FinitePoset FinitePoset::antichain(int n) {
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (int a = 0; a < n; ++a) m[a][a] = 1;
  return from_matrix(m);
}

std::optional<int> FinitePoset::meet_in(std::vector<int> const& subset, int a, int b) const {
  std::vector<int> lower;
  for (int c : subset)
    if (le(c, a) && le(c, b)) lower.push_back(c);
  for (int candidate : lower) {
    bool greatest = true;
    for (int c : lower)
      if (!le(c, candidate)) {
        greatest = false;
        break;
      }
    if (greatest) return candidate;
  }
  return std::nullopt;
}

namespace {

std::vector<int> group_inverses(FiniteSemigroup const& g) {
  int const e = *g.identity();
  std::vector<int> inv(static_cast<size_t>(g.order()), -1);
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      if (g.product(a, b) == e) inv[a] = b;
  return inv;
}

// group act on a poset by order automorphisms; shared by the full triple
// validation and the act-only entry point
void validate_act(FiniteSemigroup const& group, FinitePoset const& poset,
                  std::vector<std::vector<int>> const& action) {
  if (!is_group(group)) throw NotAGroup("acting semigroup is not a group");
  int const nx = poset.size();
  if (static_cast<int>(action.size()) != group.order())
    throw InputError("action needs one row per group element");
  for (auto const& row : action) {
    if (static_cast<int>(row.size()) != nx)
      throw InputError("action rows must cover the poset");
    for (int x : row)
      if (x < 0 || x >= nx) throw InputError("action value out of range");
  }
  for (int g = 0; g < group.order(); ++g) {
    std::vector<char> hit(static_cast<size_t>(nx), 0);
    for (int x : action[g]) hit[x] = 1;
    for (int x = 0; x < nx; ++x)
      if (!hit[x])
        throw InvalidTriple("action of g=" + std::to_string(g) + " is not a bijection");
    for (int a = 0; a < nx; ++a)
      for (int b = 0; b < nx; ++b)
        if (poset.le(a, b) != poset.le(action[g][a], action[g][b]))
          throw InvalidTriple("action of g=" + std::to_string(g) +
                              " breaks the order " + pair_witness("", a, b));
  }
  int const e = *group.identity();
  for (int x = 0; x < nx; ++x)
    if (action[e][x] != x)
      throw InvalidTriple("identity action moves x=" + std::to_string(x));
  for (int g = 0; g < group.order(); ++g)
    for (int h = 0; h < group.order(); ++h)
      for (int x = 0; x < nx; ++x)
        if (action[group.product(g, h)][x] != action[g][action[h][x]])
          throw InvalidTriple("action composition fails at g=" + std::to_string(g) +
                              ", h=" + std::to_string(h) + ", x=" + std::to_string(x));
}

}  // namespace

McAlisterTriple make_triple(FiniteSemigroup group, FinitePoset poset,
                            std::vector<int> ideal,
                            std::vector<std::vector<int>> action) {
  validate_act(group, poset, action);
  int const nx = poset.size();

  std::sort(ideal.begin(), ideal.end());
  ideal.erase(std::unique(ideal.begin(), ideal.end()), ideal.end());
  if (ideal.empty()) throw InvalidTriple("Y is empty");
  for (int a : ideal)
    if (a < 0 || a >= nx) throw InputError("Y entry out of range");
  std::vector<char> in_y(static_cast<size_t>(nx), 0);
  for (int a : ideal) in_y[a] = 1;

  for (int a : ideal)
    for (int b = 0; b < nx; ++b)
      if (poset.le(b, a) && !in_y[b])
        throw InvalidTriple("Y is not an order ideal: misses " + std::to_string(b) +
                            " below " + std::to_string(a));
  for (int a : ideal)
    for (int b : ideal)
      if (!poset.meet_in(ideal, a, b))
        throw InvalidTriple("Y has no meet " + pair_witness("", a, b));

  std::vector<char> covered(static_cast<size_t>(nx), 0);
  for (int g = 0; g < group.order(); ++g)
    for (int a : ideal) covered[action[g][a]] = 1;
  for (int x = 0; x < nx; ++x)
    if (!covered[x]) throw InvalidTriple("GY misses x=" + std::to_string(x));

  for (int g = 0; g < group.order(); ++g) {
    bool meets = false;
    for (int a : ideal)
      if (in_y[action[g][a]]) {
        meets = true;
        break;
      }
    if (!meets) throw InvalidTriple("gY avoids Y for g=" + std::to_string(g));
  }

  McAlisterTriple t;
  t.group = std::move(group);
  t.poset = std::move(poset);
  t.ideal = std::move(ideal);
  t.action = std::move(action);
  return t;
}

FiniteSemigroup null_semigroup(int m) {
  if (m < 1) throw InputError("need at least one non-zero element");
  int const k = m + 1;
  std::vector<std::vector<int>> t(k, std::vector<int>(k, 0));
  std::vector<std::string> names{"0"};
  for (int i = 1; i <= m; ++i) names.push_back("a" + std::to_string(i));
  return FiniteSemigroup::from_table(t, names);
}

FiniteSemigroup left_zero_band(int m) {
  if (m < 1) throw InputError("need at least one element");
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  std::vector<std::string> names;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) t[i][j] = i;
    names.push_back("l" + std::to_string(i + 1));
  }
  return FiniteSemigroup::from_table(t, names);
}

FiniteSemigroup chain_of_semigroups(std::vector<FiniteSemigroup> const& parts) {
  if (parts.empty()) throw InputError("chain needs at least one component");
  if (parts.size() == 1) return parts.front();
  std::vector<int> offset{0};
  for (auto const& p : parts) offset.push_back(offset.back() + p.order());
  int const k = offset.back();
  std::vector<std::vector<int>> t(k, std::vector<int>(k));
  for (size_t i = 0; i < parts.size(); ++i) {
    for (size_t j = 0; j < parts.size(); ++j) {
      for (int a = 0; a < parts[i].order(); ++a) {
        for (int b = 0; b < parts[j].order(); ++b) {
          int ga = offset[i] + a, gb = offset[j] + b;
          if (i == j)
            t[ga][gb] = offset[i] + parts[i].product(a, b);
          else
            t[ga][gb] = i < j ? ga : gb;  // the lower component's element wins
        }
      }
    }
  }
  std::vector<std::string> names;
  for (size_t i = 0; i < parts.size(); ++i)
    for (int a = 0; a < parts[i].order(); ++a)
      names.push_back(parts[i].name_of(a) + "_" + std::to_string(i + 1));
  return FiniteSemigroup::from_table(t, names);
}

namespace {

int brandt_index(int group_order, int m, int i, int g, int j) {
  return 1 + ((i - 1) * group_order + g) * m + (j - 1);
}

}  // namespace

FiniteSemigroup brandt(FiniteSemigroup const& group, int m) {
  if (!is_group(group)) throw NotAGroup("Brandt construction needs a group");
  if (m < 1) throw InputError("index size must be at least 1");
  int const ng = group.order();
  int const k = m * m * ng + 1;
  std::vector<std::vector<int>> t(k, std::vector<int>(k, 0));
  for (int i = 1; i <= m; ++i)
    for (int g = 0; g < ng; ++g)
      for (int j = 1; j <= m; ++j)
        for (int l = 1; l <= m; ++l)
          for (int h = 0; h < ng; ++h)
            t[brandt_index(ng, m, i, g, j)][brandt_index(ng, m, j, h, l)] =
                brandt_index(ng, m, i, group.product(g, h), l);
  std::vector<std::string> names{"0"};
  for (int i = 1; i <= m; ++i)
    for (int g = 0; g < ng; ++g)
      for (int j = 1; j <= m; ++j)
        names.push_back("(" + std::to_string(i) + "," + group.name_of(g) + "," +
                        std::to_string(j) + ")");
  return FiniteSemigroup::from_table(t, names);
}

Perm brandt_automorphism(FiniteSemigroup const& group, int m, Perm const& theta,
                         Perm const& pi) {
  if (!is_group(group)) throw NotAGroup("Brandt construction needs a group");
  if (m < 1) throw InputError("index size must be at least 1");
  return brandt_scaled_automorphism(group, m, theta, pi,
                                    std::vector<int>(static_cast<size_t>(m), *group.identity()));
}

Perm brandt_scaled_automorphism(FiniteSemigroup const& group, int m, Perm const& theta,
                                Perm const& pi, std::vector<int> const& u) {
  if (!is_group(group)) throw NotAGroup("Brandt construction needs a group");
  if (m < 1) throw InputError("index size must be at least 1");
  int const ng = group.order();
  if (!is_permutation(theta.img, ng)) throw InputError("theta is not a permutation of the group");
  for (int a = 0; a < ng; ++a)
    for (int b = 0; b < ng; ++b)
      if (theta[group.product(a, b)] != group.product(theta[a], theta[b]))
        throw InputError("theta is not an automorphism of the group");
  if (!is_permutation(pi.img, m)) throw InputError("pi is not a permutation of the index set");
  if (static_cast<int>(u.size()) != m) throw InputError("need one scaling element per row");
  for (int x : u)
    if (x < 0 || x >= ng) throw InputError("scaling element out of range");

  int const e = *group.identity();
  std::vector<int> inv(ng);
  for (int a = 0; a < ng; ++a)
    for (int x = 0; x < ng; ++x)
      if (group.product(a, x) == e) inv[a] = x;

  std::vector<int> img(static_cast<size_t>(m) * m * ng + 1);
  img[0] = 0;
  for (int i = 1; i <= m; ++i)
    for (int g = 0; g < ng; ++g)
      for (int j = 1; j <= m; ++j)
        img[brandt_index(ng, m, i, g, j)] =
            brandt_index(ng, m, pi[i - 1] + 1,
                         group.product(group.product(u[i - 1], theta[g]), inv[u[j - 1]]),
                         pi[j - 1] + 1);

  Perm result(std::move(img));
  auto s = brandt(group, m);
  for (int a = 0; a < s.order(); ++a)
    for (int b = 0; b < s.order(); ++b)
      if (result[s.product(a, b)] != s.product(result[a], result[b]))
        throw CheckError("constructed map is not an automorphism");
  return result;
}

FiniteSemigroup direct_product(std::vector<FiniteSemigroup> const& parts) {
  if (parts.empty()) throw InputError("product needs at least one factor");
  if (parts.size() == 1) return parts.front();
  int k = 1;
  for (auto const& p : parts) k *= p.order();
  // tuples in lexicographic order, first coordinate most significant
  auto encode = [&parts](std::vector<int> const& tuple) {
    int code = 0;
    for (size_t i = 0; i < parts.size(); ++i) code = code * parts[i].order() + tuple[i];
    return code;
  };
  std::vector<std::vector<int>> tuples;
  std::vector<int> cur(parts.size(), 0);
  bool rolling = true;
  while (rolling) {
    tuples.push_back(cur);
    rolling = false;
    for (size_t pos = parts.size(); pos > 0; --pos) {
      if (++cur[pos - 1] < parts[pos - 1].order()) {
        rolling = true;
        break;
      }
      cur[pos - 1] = 0;
    }
  }
  std::vector<std::vector<int>> t(k, std::vector<int>(k));
  for (auto const& a : tuples) {
    for (auto const& b : tuples) {
      std::vector<int> c(parts.size());
      for (size_t i = 0; i < parts.size(); ++i) c[i] = parts[i].product(a[i], b[i]);
      t[encode(a)][encode(b)] = encode(c);
    }
  }
  std::vector<std::string> names;
  for (auto const& a : tuples) {
    std::string name = "(";
    for (size_t i = 0; i < parts.size(); ++i) {
      if (i) name += ",";
      name += parts[i].name_of(a[i]);
    }
    names.push_back(name + ")");
  }
  return FiniteSemigroup::from_table(t, names);
}

FiniteSemigroup direct_sum_of_monoids(std::vector<FiniteSemigroup> const& parts) {
  for (auto const& p : parts)
    if (!is_monoid(p)) throw NotAMonoid("direct sum needs monoid summands");
  // at finitely many indices the sum and the product coincide
  return direct_product(parts);
}

FiniteSemigroup zero_direct_union(std::vector<FiniteSemigroup> const& parts) {
  if (parts.empty()) throw InputError("union needs at least one summand");
  for (auto const& p : parts) {
    if (!p.zero()) throw NoZero("every summand needs a zero");
    if (p.order() < 2) throw TrivialSummand("summand is just its zero");
  }
  if (parts.size() == 1) return parts.front();
  std::vector<std::vector<int>> to_global;  // per summand, local -> global
  int k = 1;
  for (auto const& p : parts) {
    std::vector<int> map(static_cast<size_t>(p.order()), 0);
    for (int a = 0; a < p.order(); ++a)
      if (a != *p.zero()) map[a] = k++;
    to_global.push_back(std::move(map));
  }
  std::vector<std::vector<int>> t(k, std::vector<int>(k, 0));
  for (size_t i = 0; i < parts.size(); ++i)
    for (int a = 0; a < parts[i].order(); ++a)
      for (int b = 0; b < parts[i].order(); ++b)
        t[to_global[i][a]][to_global[i][b]] = to_global[i][parts[i].product(a, b)];
  std::vector<std::string> names(static_cast<size_t>(k));
  names[0] = "0";
  for (size_t i = 0; i < parts.size(); ++i)
    for (int a = 0; a < parts[i].order(); ++a)
      if (a != *parts[i].zero())
        names[to_global[i][a]] = parts[i].name_of(a) + "_" + std::to_string(i + 1);
  return FiniteSemigroup::from_table(t, names);
}

namespace {

void validate_semidirect(SemidirectData const& d) {
  int const ns = d.s.order(), nt = d.t.order();
  if (static_cast<int>(d.action.size()) != nt)
    throw InputError("action needs one row per element of the acting semigroup");
  for (auto const& row : d.action) {
    if (static_cast<int>(row.size()) != ns)
      throw InputError("action rows must cover the acted-on semigroup");
    for (int v : row)
      if (v < 0 || v >= ns) throw InputError("action value out of range");
  }
  for (int t1 = 0; t1 < nt; ++t1)
    for (int t2 = 0; t2 < nt; ++t2)
      for (int s = 0; s < ns; ++s)
        if (d.action[d.t.product(t1, t2)][s] != d.action[t1][d.action[t2][s]])
          throw NotAnAction("composition law fails at t=" + std::to_string(t1) +
                            ", t'=" + std::to_string(t2) + ", s=" + std::to_string(s));
  for (int t1 = 0; t1 < nt; ++t1)
    for (int s1 = 0; s1 < ns; ++s1)
      for (int s2 = 0; s2 < ns; ++s2)
        if (d.action[t1][d.s.product(s1, s2)] !=
            d.s.product(d.action[t1][s1], d.action[t1][s2]))
          throw NotAnAction("distribution law fails at t=" + std::to_string(t1) +
                            ", s=" + std::to_string(s1) + ", s'=" + std::to_string(s2));
}

}  // namespace

FiniteSemigroup semidirect_product(SemidirectData const& d) {
  validate_semidirect(d);
  int const ns = d.s.order(), nt = d.t.order();
  int const k = ns * nt;
  auto encode = [nt](int s, int t) { return s * nt + t; };
  std::vector<std::vector<int>> table(k, std::vector<int>(k));
  for (int s1 = 0; s1 < ns; ++s1)
    for (int t1 = 0; t1 < nt; ++t1)
      for (int s2 = 0; s2 < ns; ++s2)
        for (int t2 = 0; t2 < nt; ++t2)
          table[encode(s1, t1)][encode(s2, t2)] =
              encode(d.s.product(s1, d.action[t1][s2]), d.t.product(t1, t2));
  std::vector<std::string> names;
  for (int s = 0; s < ns; ++s)
    for (int t = 0; t < nt; ++t)
      names.push_back("(" + d.s.name_of(s) + "," + d.t.name_of(t) + ")");
  return FiniteSemigroup::from_table(table, names);
}

Partition kappa_partition(SemidirectData const& d) {
  validate_semidirect(d);
  int const ns = d.s.order(), nt = d.t.order();
  // classify t by its trace inside all products s(t.s')
  std::map<std::vector<int>, int> classes;
  std::vector<int> ids(static_cast<size_t>(nt));
  for (int t = 0; t < nt; ++t) {
    std::vector<int> trace;
    trace.reserve(static_cast<size_t>(ns) * ns);
    for (int s1 = 0; s1 < ns; ++s1)
      for (int s2 = 0; s2 < ns; ++s2) trace.push_back(d.s.product(s1, d.action[t][s2]));
    auto it = classes.find(trace);
    if (it == classes.end()) it = classes.emplace(trace, static_cast<int>(classes.size())).first;
    ids[t] = it->second;
  }
  return Partition::from_assignment(ids);
}

FiniteSemigroup boolean_zs(int m) {
  if (m < 1) throw InputError("need at least one atom");
  int const top = (1 << m) - 1;
  int const k = top;  // non-empty subsets
  std::vector<std::vector<int>> t(k, std::vector<int>(k));
  for (int a = 1; a <= top; ++a)
    for (int b = 1; b <= top; ++b)
      t[a - 1][b - 1] = ((a & b) == 0 ? (a | b) : top) - 1;
  std::vector<std::string> names;
  for (int a = 1; a <= top; ++a) {
    std::string name = "{";
    bool first = true;
    for (int bit = 0; bit < m; ++bit)
      if (a & (1 << bit)) {
        if (!first) name += ",";
        name += std::to_string(bit + 1);
        first = false;
      }
    names.push_back(name + "}");
  }
  return FiniteSemigroup::from_table(t, names);
}

FiniteSemigroup example_c(int m) {
  if (m < 2) throw InputError("need at least two generators");
  int const k = m + 2;  // zero, u, then the generators
  std::vector<std::vector<int>> t(k, std::vector<int>(k, 0));
  for (int i = 2; i < k; ++i)
    for (int j = 2; j < k; ++j)
      if (i != j) t[i][j] = 1;
  std::vector<std::string> names{"0", "u"};
  for (int i = 1; i <= m; ++i) names.push_back("a" + std::to_string(i));
  return FiniteSemigroup::from_table(t, names);
}

std::vector<std::pair<int, int>> p_elements(McAlisterTriple const& t) {
  auto inv = group_inverses(t.group);
  std::vector<char> in_y(static_cast<size_t>(t.poset.size()), 0);
  for (int a : t.ideal) in_y[a] = 1;
  std::vector<std::pair<int, int>> out;
  for (int a : t.ideal)
    for (int g = 0; g < t.group.order(); ++g)
      if (in_y[t.action[inv[g]][a]]) out.emplace_back(a, g);
  return out;
}

FiniteSemigroup p_semigroup(McAlisterTriple const& t) {
  auto elements = p_elements(t);
  auto inv = group_inverses(t.group);
  std::map<std::pair<int, int>, int> index;
  for (size_t i = 0; i < elements.size(); ++i) index[elements[i]] = static_cast<int>(i);

  int const k = static_cast<int>(elements.size());
  std::vector<std::vector<int>> table(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i) {
    auto [a, g] = elements[i];
    for (int j = 0; j < k; ++j) {
      auto [b, h] = elements[j];
      // A ^ gB computed as g(g^{-1}A ^ B); both arguments lie in Y
      auto low = t.poset.meet_in(t.ideal, t.action[inv[g]][a], b);
      if (!low) throw CheckError("meet vanished during multiplication");
      std::pair<int, int> result{t.action[g][*low], t.group.product(g, h)};
      auto it = index.find(result);
      if (it == index.end()) throw CheckError("product escaped the pair set");
      table[i][j] = it->second;
    }
  }
  std::vector<std::string> names;
  for (auto const& [a, g] : elements)
    names.push_back("(" + std::to_string(a) + "," + t.group.name_of(g) + ")");
  auto p = FiniteSemigroup::from_table(table, names);

  if (!is_inverse(p)) throw CheckError("generated semigroup is not inverse");
  if (!is_e_unitary(p)) throw CheckError("generated semigroup is not E-unitary");
  int const e = *t.group.identity();
  std::set<int> want;
  for (int a : t.ideal) want.insert(index.at({a, e}));
  std::set<int> got;
  for (int i : idempotents(p)) got.insert(i);
  if (want != got) throw CheckError("idempotents are not the identity-paired ideal");
  return p;
}

TripleApparatus triple_apparatus(McAlisterTriple const& t) {
  auto inv = group_inverses(t.group);
  int const ng = t.group.order();
  int const nx = t.poset.size();
  std::vector<char> in_y(static_cast<size_t>(nx), 0);
  for (int a : t.ideal) in_y[a] = 1;

  TripleApparatus out;
  std::vector<char> seen(static_cast<size_t>(ng), 0);
  for (int a : t.ideal) {
    std::vector<int> t_a;
    for (int g = 0; g < ng; ++g)
      if (in_y[t.action[inv[g]][a]]) {
        t_a.push_back(g);
        seen[g] = 1;
      }
    // relate members acting equally below a
    std::vector<int> ids(t_a.size(), 0);
    std::map<std::vector<int>, int> classes;
    for (size_t i = 0; i < t_a.size(); ++i) {
      std::vector<int> trace;
      for (int u = 0; u < nx; ++u)
        if (t.poset.le(u, a)) trace.push_back(t.action[inv[t_a[i]]][u]);
      auto it = classes.find(trace);
      if (it == classes.end())
        it = classes.emplace(trace, static_cast<int>(classes.size())).first;
      ids[i] = it->second;
    }
    out.t_sets.push_back(t_a);
    out.sim.push_back(Partition::from_assignment(ids));
  }
  for (int g = 0; g < ng; ++g)
    if (!seen[g]) throw CheckError("group member misses every T_A");

  for (size_t yi = 0; yi < t.ideal.size(); ++yi) {
    for (auto const& block : out.sim[yi].blocks()) {
      std::vector<int> members;
      for (int pos : block) members.push_back(out.t_sets[yi][pos]);
      std::sort(members.begin(), members.end());
      out.classes.emplace_back(t.ideal[yi], std::move(members));
    }
  }

  std::vector<int> nu_ids(static_cast<size_t>(ng));
  std::map<std::vector<int>, int> nu_classes;
  for (int g = 0; g < ng; ++g) {
    auto it = nu_classes.find(t.action[g]);
    if (it == nu_classes.end())
      it = nu_classes.emplace(t.action[g], static_cast<int>(nu_classes.size())).first;
    nu_ids[g] = it->second;
  }
  out.nu = Partition::from_assignment(nu_ids);

  // equal global action forces equal action below every a
  for (size_t yi = 0; yi < t.ideal.size(); ++yi) {
    auto const& t_a = out.t_sets[yi];
    for (size_t i = 0; i < t_a.size(); ++i)
      for (size_t j = 0; j < t_a.size(); ++j)
        if (out.nu.same(t_a[i], t_a[j]) &&
            !out.sim[yi].same(static_cast<int>(i), static_cast<int>(j)))
          throw CheckError("nu fails to refine a T_A partition");
  }
  return out;
}

std::vector<Perm> augmented_act_automorphisms(FiniteSemigroup const& group,
                                              FinitePoset const& poset,
                                              std::vector<int> const& ideal,
                                              std::vector<std::vector<int>> const& action) {
  validate_act(group, poset, action);
  int const nx = poset.size();
  std::vector<char> in_y(static_cast<size_t>(nx), 0);
  for (int a : ideal) {
    if (a < 0 || a >= nx) throw InputError("Y entry out of range");
    in_y[a] = 1;
  }
  std::vector<int> img(static_cast<size_t>(nx));
  for (int i = 0; i < nx; ++i) img[i] = i;
  std::vector<Perm> out;
  do {
    bool ok = true;
    for (int a = 0; a < nx && ok; ++a) {
      if (in_y[a] != in_y[img[a]]) ok = false;
      for (int b = 0; b < nx && ok; ++b)
        if (poset.le(a, b) != poset.le(img[a], img[b])) ok = false;
    }
    for (int g = 0; g < group.order() && ok; ++g)
      for (int a = 0; a < nx && ok; ++a)
        if (img[action[g][a]] != action[g][img[a]]) ok = false;
    if (ok) out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Perm> augmented_act_automorphisms(McAlisterTriple const& t) {
  return augmented_act_automorphisms(t.group, t.poset, t.ideal, t.action);
}

std::vector<TripleAutomorphism> p_triple_automorphisms(McAlisterTriple const& t) {
  auto const elements = p_elements(t);
  auto const p = p_semigroup(t);
  int const np = static_cast<int>(elements.size());
  std::map<std::pair<int, int>, int> index;
  for (int i = 0; i < np; ++i) index.emplace(elements[i], i);

  int const ng = t.group.order();
  int const nx = t.poset.size();
  std::vector<char> in_y(static_cast<size_t>(nx), 0);
  for (int a : t.ideal) in_y[a] = 1;

  std::vector<Perm> thetas;
  {
    std::vector<int> timg(static_cast<size_t>(ng));
    for (int g = 0; g < ng; ++g) timg[g] = g;
    do {
      bool hom = true;
      for (int a = 0; a < ng && hom; ++a)
        for (int b = 0; b < ng && hom; ++b)
          if (timg[t.group.product(a, b)] != t.group.product(timg[a], timg[b])) hom = false;
      if (hom) thetas.emplace_back(timg);
    } while (std::next_permutation(timg.begin(), timg.end()));
  }

  std::vector<TripleAutomorphism> out;
  for (auto const& theta : thetas) {
    std::vector<int> img(static_cast<size_t>(nx));
    for (int a = 0; a < nx; ++a) img[a] = a;
    do {
      bool ok = true;
      for (int a = 0; a < nx && ok; ++a) {
        if (in_y[a] != in_y[img[a]]) ok = false;
        for (int b = 0; b < nx && ok; ++b)
          if (t.poset.le(a, b) != t.poset.le(img[a], img[b])) ok = false;
      }
      for (int g = 0; g < ng && ok; ++g)
        for (int a = 0; a < nx && ok; ++a)
          if (img[t.action[g][a]] != t.action[theta[g]][img[a]]) ok = false;
      if (!ok) continue;

      std::vector<int> ind(static_cast<size_t>(np));
      for (int i = 0; i < np; ++i) {
        auto it = index.find({img[elements[i].first], theta[elements[i].second]});
        if (it == index.end()) throw CheckError("image pair escapes the P-semigroup");
        ind[i] = it->second;
      }
      Perm induced(std::move(ind));
      for (int a = 0; a < np; ++a)
        for (int b = 0; b < np; ++b)
          if (induced[p.product(a, b)] != p.product(induced[a], induced[b]))
            throw CheckError("induced map is not an automorphism");
      out.push_back({Perm(img), theta, std::move(induced)});
    } while (std::next_permutation(img.begin(), img.end()));
  }
  return out;
}

}  // namespace semicat
