#include "semicat/green.hpp"

#include <algorithm>
#include <set>

namespace semicat {

namespace {

// Strongly connected components of a graph on [0,n), edges given as a
// sorted adjacency list.  Iterative Tarjan; component ids are renumbered
// by Partition::from_assignment afterwards, so their order is irrelevant.
Partition scc_partition(int n, std::vector<std::vector<int>> const& adj) {
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  int next_index = 0, next_comp = 0;

  struct Frame {
    int v;
    size_t edge;
  };
  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) {
      continue;
    }
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& f = call.back();
      if (f.edge < adj[f.v].size()) {
        int w = adj[f.v][f.edge++];
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        if (low[f.v] == index[f.v]) {
          while (true) {
            int w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp[w] = next_comp;
            if (w == f.v) {
              break;
            }
          }
          ++next_comp;
        }
        int v = f.v;
        call.pop_back();
        if (!call.empty()) {
          low[call.back().v] = std::min(low[call.back().v], low[v]);
        }
      }
    }
  }
  return Partition::from_assignment(comp);
}

std::vector<std::vector<int>> dedup(std::vector<std::set<int>> raw) {
  std::vector<std::vector<int>> adj(raw.size());
  for (size_t i = 0; i < raw.size(); ++i) {
    adj[i].assign(raw[i].begin(), raw[i].end());
  }
  return adj;
}

}  // namespace

GreenStructure green_relations(FiniteSemigroup const& s) {
  int n = s.order();
  std::vector<std::set<int>> right(n), left(n), both(n);
  for (int a = 0; a < n; ++a) {
    for (int x = 0; x < n; ++x) {
      int ra = s.product(a, x);
      int la = s.product(x, a);
      right[a].insert(ra);
      left[a].insert(la);
      both[a].insert(ra);
      both[a].insert(la);
    }
  }
  GreenStructure g;
  g.R = scc_partition(n, dedup(std::move(right)));
  g.L = scc_partition(n, dedup(std::move(left)));
  g.J = scc_partition(n, dedup(std::move(both)));
  g.H = g.R.meet(g.L);
  g.D = g.R.join(g.L);
  if (g.D != g.J) {
    throw CheckError("green_relations: D != J on a finite semigroup");
  }

  g.j_info.resize(g.J.n_blocks());
  std::vector<bool> idem(n, false);
  for (int e : idempotents(s)) {
    idem[e] = true;
  }
  auto j_blocks = g.J.blocks();
  int kernels_seen = 0;
  for (int b = 0; b < g.J.n_blocks(); ++b) {
    bool has_idem = false;
    for (int x : j_blocks[b]) {
      has_idem = has_idem || idem[x];
    }
    // the kernel is the J-class that equals its own principal ideal
    bool kernel = principal_ideal(s, j_blocks[b][0]).size() == j_blocks[b].size();
    g.j_info[b] = JClassInfo{has_idem, kernel};
    kernels_seen += kernel ? 1 : 0;
  }
  if (kernels_seen != 1) {
    throw CheckError("green_relations: expected exactly one kernel class, found " +
                     std::to_string(kernels_seen));
  }
  return g;
}

std::vector<MaximalSubgroup> maximal_subgroups(FiniteSemigroup const& s) {
  auto g = green_relations(s);
  auto h_blocks = g.H.blocks();
  std::vector<MaximalSubgroup> out;
  for (int e : idempotents(s)) {
    auto h_class = h_blocks[g.H.block_of(e)];
    FiniteSemigroup sub = [&] {
      try {
        return subsemigroup(s, h_class);
      } catch (InputError const& err) {
        throw CheckError(std::string("maximal_subgroups: H-class of an idempotent "
                                     "is not closed: ") +
                         err.what());
      }
    }();
    if (!is_group(sub)) {
      throw CheckError("maximal_subgroups: H-class of idempotent " + std::to_string(e) +
                       " is not a group");
    }
    out.push_back(MaximalSubgroup{e, std::move(h_class), std::move(sub)});
  }
  return out;
}

std::vector<int> principal_ideal(FiniteSemigroup const& s, int a) {
  if (a < 0 || a >= s.order()) {
    throw InputError("principal_ideal: element out of range");
  }
  int n = s.order();
  std::vector<bool> in(n, false);
  std::vector<int> work{a};
  in[a] = true;
  while (!work.empty()) {
    int t = work.back();
    work.pop_back();
    for (int x = 0; x < n; ++x) {
      for (int p : {s.product(x, t), s.product(t, x)}) {
        if (!in[p]) {
          in[p] = true;
          work.push_back(p);
        }
      }
    }
  }
  std::vector<int> out;
  for (int x = 0; x < n; ++x) {
    if (in[x]) {
      out.push_back(x);
    }
  }
  return out;
}

char const* to_string(FactorClass c) {
  switch (c) {
    case FactorClass::completely_simple:
      return "completely_simple";
    case FactorClass::completely_0_simple:
      return "completely_0_simple";
    case FactorClass::null_class:
      return "null";
  }
  return "?";
}

PrincipalFactor principal_factor(FiniteSemigroup const& s, int a) {
  auto g = green_relations(s);
  auto j_class = g.J.blocks()[g.J.block_of(a)];  // ascending
  auto ideal = principal_ideal(s, a);

  PrincipalFactor out;
  out.j_class = j_class;
  out.is_kernel = ideal.size() == j_class.size();

  if (out.is_kernel) {
    // the kernel is simple and closed; no quotient needed
    out.factor = subsemigroup(s, j_class);
    out.classification = FactorClass::completely_simple;
    return out;
  }

  int m = static_cast<int>(j_class.size());
  std::vector<int> local(s.order(), -1);
  for (int i = 0; i < m; ++i) {
    local[j_class[i]] = i;
  }
  int zero_ix = m;  // fresh zero placed last
  int k = m + 1;
  std::vector<int> table(static_cast<size_t>(k) * k, zero_ix);
  bool product_survives = false;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      int p = s.product(j_class[i], j_class[j]);
      if (local[p] != -1) {
        table[static_cast<size_t>(i) * k + j] = local[p];
        product_survives = true;
      }
    }
  }
  std::vector<std::string> names;
  if (!s.names().empty()) {
    for (int x : j_class) {
      names.push_back(s.names()[x]);
    }
    names.push_back("0");
  }
  out.factor = FiniteSemigroup::from_flat(k, std::move(table), std::move(names));
  out.classification =
      product_survives ? FactorClass::completely_0_simple : FactorClass::null_class;
  return out;
}

std::pair<int, int> idempotent_frame(FiniteSemigroup const& s, int a) {
  bool regular = false;
  for (int x = 0; x < s.order() && !regular; ++x) {
    regular = s.product(s.product(a, x), a) == a;
  }
  if (!regular) {
    throw NotRegular("idempotent_frame: element " + std::to_string(a) + " is not regular");
  }
  auto g = green_relations(s);
  int e = -1, f = -1;
  for (int x : idempotents(s)) {
    if (e == -1 && g.R.same(x, a)) {
      e = x;
    }
    if (f == -1 && g.L.same(a, x)) {
      f = x;
    }
  }
  if (e == -1 || f == -1) {
    throw CheckError("idempotent_frame: regular element without idempotent in its "
                     "R- or L-class");
  }
  return {e, f};
}

}  // namespace semicat
