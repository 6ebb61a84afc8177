#include "semicat/semigroup.hpp"

#include <algorithm>
#include <set>

namespace semicat {

namespace {

std::string fresh_name(std::vector<std::string> const& taken, std::string base) {
  while (std::find(taken.begin(), taken.end(), base) != taken.end()) {
    base += "'";
  }
  return base;
}

}  // namespace

FiniteSemigroup FiniteSemigroup::from_flat(int order, std::vector<int> table,
                                           std::vector<std::string> names) {
  if (order <= 0) {
    throw InputError("semigroup order must be positive, got " + std::to_string(order));
  }
  if (table.size() != static_cast<size_t>(order) * order) {
    throw InputError("table has " + std::to_string(table.size()) + " entries, expected " +
                     std::to_string(order * order));
  }
  if (!names.empty() && names.size() != static_cast<size_t>(order)) {
    throw InputError("got " + std::to_string(names.size()) + " names for order " +
                     std::to_string(order));
  }
  for (int i = 0; i < order; ++i) {
    for (int j = 0; j < order; ++j) {
      int v = table[static_cast<size_t>(i) * order + j];
      if (v < 0 || v >= order) {
        throw NotClosed("table entry (" + std::to_string(i) + "," + std::to_string(j) +
                        ") = " + std::to_string(v) + " is not an element index");
      }
    }
  }
  auto at = [&](int a, int b) { return table[static_cast<size_t>(a) * order + b]; };
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      int ab = at(a, b);
      for (int c = 0; c < order; ++c) {
        if (at(ab, c) != at(a, at(b, c))) {
          throw NotAssociative("(a*b)*c != a*(b*c) at a=" + std::to_string(a) +
                               " b=" + std::to_string(b) + " c=" + std::to_string(c));
        }
      }
    }
  }
  FiniteSemigroup s;
  s._order = order;
  s._table = std::move(table);
  s._names = std::move(names);
  for (int z = 0; z < order; ++z) {
    bool ok = true;
    for (int x = 0; x < order && ok; ++x) {
      ok = s.product(z, x) == z && s.product(x, z) == z;
    }
    if (ok) {
      s._zero = z;
      break;  // a zero is unique
    }
  }
  for (int e = 0; e < order; ++e) {
    bool ok = true;
    for (int x = 0; x < order && ok; ++x) {
      ok = s.product(e, x) == x && s.product(x, e) == x;
    }
    if (ok) {
      s._identity = e;
      break;
    }
  }
  return s;
}

FiniteSemigroup FiniteSemigroup::from_table(std::vector<std::vector<int>> const& rows,
                                            std::vector<std::string> names) {
  int order = static_cast<int>(rows.size());
  std::vector<int> flat;
  flat.reserve(static_cast<size_t>(order) * order);
  for (auto const& row : rows) {
    if (static_cast<int>(row.size()) != order) {
      throw InputError("table is not square: row of length " + std::to_string(row.size()) +
                       " in a table of order " + std::to_string(order));
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return from_flat(order, std::move(flat), std::move(names));
}

int FiniteSemigroup::product_word(std::vector<int> const& w) const {
  if (w.empty()) {
    throw InputError("empty word has no product");
  }
  int acc = w[0];
  for (size_t i = 1; i < w.size(); ++i) {
    acc = product(acc, w[i]);
  }
  return acc;
}

std::string FiniteSemigroup::name_of(int a) const {
  if (!_names.empty()) {
    return _names[a];
  }
  return std::to_string(a);
}

std::vector<int> idempotents(FiniteSemigroup const& s) {
  std::vector<int> out;
  for (int a = 0; a < s.order(); ++a) {
    if (s.product(a, a) == a) {
      out.push_back(a);
    }
  }
  return out;
}

std::vector<int> regular_elements(FiniteSemigroup const& s) {
  std::vector<int> out;
  for (int a = 0; a < s.order(); ++a) {
    for (int x = 0; x < s.order(); ++x) {
      if (s.product(s.product(a, x), a) == a) {
        out.push_back(a);
        break;
      }
    }
  }
  return out;
}

std::vector<int> inverses_of(FiniteSemigroup const& s, int a) {
  std::vector<int> out;
  for (int b = 0; b < s.order(); ++b) {
    if (s.product(s.product(a, b), a) == a && s.product(s.product(b, a), b) == b) {
      out.push_back(b);
    }
  }
  return out;
}

bool is_commutative(FiniteSemigroup const& s) {
  for (int a = 0; a < s.order(); ++a) {
    for (int b = a + 1; b < s.order(); ++b) {
      if (s.product(a, b) != s.product(b, a)) {
        return false;
      }
    }
  }
  return true;
}

bool is_band(FiniteSemigroup const& s) {
  return static_cast<int>(idempotents(s).size()) == s.order();
}

bool is_semilattice(FiniteSemigroup const& s) {
  return is_band(s) && is_commutative(s);
}

bool is_regular_semigroup(FiniteSemigroup const& s) {
  return static_cast<int>(regular_elements(s).size()) == s.order();
}

bool is_group(FiniteSemigroup const& s) {
  // finite + associative + both cancellation laws, i.e. a Latin square
  int n = s.order();
  for (int a = 0; a < n; ++a) {
    std::vector<bool> row(n, false), col(n, false);
    for (int b = 0; b < n; ++b) {
      row[s.product(a, b)] = true;
      col[s.product(b, a)] = true;
    }
    for (int v = 0; v < n; ++v) {
      if (!row[v] || !col[v]) {
        return false;
      }
    }
  }
  return true;
}

bool is_inverse(FiniteSemigroup const& s) {
  if (!is_regular_semigroup(s)) {
    return false;
  }
  auto es = idempotents(s);
  for (size_t i = 0; i < es.size(); ++i) {
    for (size_t j = i + 1; j < es.size(); ++j) {
      if (s.product(es[i], es[j]) != s.product(es[j], es[i])) {
        return false;
      }
    }
  }
  return true;
}

bool is_monoid(FiniteSemigroup const& s) { return s.identity().has_value(); }

bool is_e_unitary(FiniteSemigroup const& s) {
  if (!is_inverse(s)) {
    throw NotInverse("is_e_unitary requires an inverse semigroup");
  }
  std::vector<bool> idem(s.order(), false);
  for (int e : idempotents(s)) {
    idem[e] = true;
  }
  for (int e = 0; e < s.order(); ++e) {
    if (!idem[e]) {
      continue;
    }
    for (int x = 0; x < s.order(); ++x) {
      if (idem[s.product(e, x)] && !idem[x]) {
        return false;
      }
    }
  }
  return true;
}

IndexPeriod index_period(FiniteSemigroup const& s, int a) {
  if (a < 0 || a >= s.order()) {
    throw InputError("index_period: element " + std::to_string(a) + " out of range");
  }
  std::vector<int> first_seen(s.order(), 0);
  int p = a;
  int t = 1;
  while (first_seen[p] == 0) {
    first_seen[p] = t;
    p = s.product(p, a);
    ++t;
  }
  return IndexPeriod{first_seen[p], t - first_seen[p]};
}

FiniteSemigroup adjoin_zero(FiniteSemigroup const& s) {
  int n = s.order();
  int k = n + 1;
  std::vector<int> table(static_cast<size_t>(k) * k, n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      table[static_cast<size_t>(a) * k + b] = s.product(a, b);
    }
  }
  std::vector<std::string> names;
  if (!s.names().empty()) {
    names = s.names();
    names.push_back(fresh_name(names, "0"));
  }
  return FiniteSemigroup::from_flat(k, std::move(table), std::move(names));
}

FiniteSemigroup adjoin_identity(FiniteSemigroup const& s) {
  int n = s.order();
  int k = n + 1;
  std::vector<int> table(static_cast<size_t>(k) * k);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      table[static_cast<size_t>(a) * k + b] = s.product(a, b);
    }
  }
  for (int a = 0; a < k; ++a) {
    table[static_cast<size_t>(a) * k + n] = a;
    table[static_cast<size_t>(n) * k + a] = a;
  }
  std::vector<std::string> names;
  if (!s.names().empty()) {
    names = s.names();
    names.push_back(fresh_name(names, "1"));
  }
  return FiniteSemigroup::from_flat(k, std::move(table), std::move(names));
}

namespace {

std::vector<bool> power_set_mask(FiniteSemigroup const& s, int m) {
  std::vector<bool> cur(s.order(), true);
  for (int step = 1; step < m; ++step) {
    std::vector<bool> next(s.order(), false);
    for (int a = 0; a < s.order(); ++a) {
      if (!cur[a]) {
        continue;
      }
      for (int b = 0; b < s.order(); ++b) {
        next[s.product(a, b)] = true;
      }
    }
    cur = std::move(next);
  }
  return cur;
}

std::vector<int> mask_to_list(std::vector<bool> const& mask) {
  std::vector<int> out;
  for (size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) {
      out.push_back(static_cast<int>(i));
    }
  }
  return out;
}

}  // namespace

std::vector<int> power_ideal(FiniteSemigroup const& s, int m) {
  if (m < 1) {
    throw InputError("power_ideal: exponent must be >= 1");
  }
  return mask_to_list(power_set_mask(s, m));
}

int stabilization_index(FiniteSemigroup const& s) {
  auto cur = power_set_mask(s, 1);
  for (int n = 1;; ++n) {
    std::vector<bool> next(s.order(), false);
    for (int a = 0; a < s.order(); ++a) {
      if (!cur[a]) {
        continue;
      }
      for (int b = 0; b < s.order(); ++b) {
        next[s.product(a, b)] = true;
      }
    }
    if (next == cur) {
      return n;
    }
    cur = std::move(next);
  }
}

std::optional<int> nil_degree(FiniteSemigroup const& s) {
  if (!s.zero()) {
    throw NoZero("nil_degree requires a zero element");
  }
  int z = *s.zero();
  int worst = 1;
  for (int a = 0; a < s.order(); ++a) {
    int p = a;
    int d = 1;
    std::vector<bool> seen(s.order(), false);
    while (p != z && !seen[p]) {
      seen[p] = true;
      p = s.product(p, a);
      ++d;
    }
    if (p != z) {
      return std::nullopt;  // a's powers cycle without reaching zero
    }
    worst = std::max(worst, d);
  }
  return worst;
}

bool is_nil_of_degree(FiniteSemigroup const& s, int n) {
  if (!s.zero()) {
    throw NoZero("is_nil_of_degree requires a zero element");
  }
  if (n < 1) {
    throw InputError("is_nil_of_degree: degree must be >= 1");
  }
  int z = *s.zero();
  for (int a = 0; a < s.order(); ++a) {
    int p = a;
    for (int i = 1; i < n; ++i) {
      p = s.product(p, a);
    }
    if (p != z) {
      return false;
    }
  }
  return true;
}

std::optional<int> nilpotency_degree(FiniteSemigroup const& s) {
  if (!s.zero()) {
    throw NoZero("nilpotency_degree requires a zero element");
  }
  int z = *s.zero();
  auto cur = power_set_mask(s, 1);
  for (int n = 1;; ++n) {
    bool only_zero = true;
    for (int a = 0; a < s.order(); ++a) {
      if (cur[a] && a != z) {
        only_zero = false;
        break;
      }
    }
    if (only_zero) {
      return n;
    }
    std::vector<bool> next(s.order(), false);
    for (int a = 0; a < s.order(); ++a) {
      if (!cur[a]) {
        continue;
      }
      for (int b = 0; b < s.order(); ++b) {
        next[s.product(a, b)] = true;
      }
    }
    if (next == cur) {
      return std::nullopt;  // stabilized above {0}
    }
    cur = std::move(next);
  }
}

FiniteSemigroup subsemigroup(FiniteSemigroup const& s, std::vector<int> const& subset) {
  if (subset.empty()) {
    throw InputError("subsemigroup: empty subset");
  }
  std::vector<int> local(s.order(), -1);
  for (size_t i = 0; i < subset.size(); ++i) {
    int x = subset[i];
    if (x < 0 || x >= s.order()) {
      throw InputError("subsemigroup: element " + std::to_string(x) + " out of range");
    }
    if (local[x] != -1) {
      throw InputError("subsemigroup: duplicate element " + std::to_string(x));
    }
    local[x] = static_cast<int>(i);
  }
  int k = static_cast<int>(subset.size());
  std::vector<int> table(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      int p = s.product(subset[i], subset[j]);
      if (local[p] == -1) {
        throw InputError("subsemigroup: subset not closed, " + std::to_string(subset[i]) +
                         "*" + std::to_string(subset[j]) + " = " + std::to_string(p) +
                         " escapes");
      }
      table[static_cast<size_t>(i) * k + j] = local[p];
    }
  }
  std::vector<std::string> names;
  if (!s.names().empty()) {
    for (int x : subset) {
      names.push_back(s.names()[x]);
    }
  }
  return FiniteSemigroup::from_flat(k, std::move(table), std::move(names));
}

}  // namespace semicat
