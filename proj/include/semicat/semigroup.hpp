#pragma once

// Finite semigroups as validated multiplication tables.  Elements are the
// dense indices 0..order-1; the table stores products row-major, so
// product(a, b) == table[a * order + b].  Construction checks closure and
// associativity eagerly and records a zero and an identity when they exist;
// after that instances are immutable.

#include <optional>
#include <string>
#include <vector>

#include "semicat/errors.hpp"

namespace semicat {

class FiniteSemigroup {
 public:
  // An empty placeholder; every usable instance comes from a factory below.
  FiniteSemigroup() = default;

  // Validates and classifies.  Throws NotClosed or NotAssociative with the
  // offending entry in the message.
  static FiniteSemigroup from_table(std::vector<std::vector<int>> const& rows,
                                    std::vector<std::string> names = {});
  static FiniteSemigroup from_flat(int order, std::vector<int> table,
                                   std::vector<std::string> names = {});

  int order() const { return _order; }

  int product(int a, int b) const { return _table[static_cast<size_t>(a) * _order + b]; }

  // product of a non-empty word
  int product_word(std::vector<int> const& w) const;

  std::optional<int> zero() const { return _zero; }
  std::optional<int> identity() const { return _identity; }

  std::vector<int> const& flat_table() const { return _table; }
  std::vector<std::string> const& names() const { return _names; }
  std::string name_of(int a) const;

 private:
  int _order = 0;
  std::vector<int> _table;
  std::vector<std::string> _names;
  std::optional<int> _zero;
  std::optional<int> _identity;
};

// -------- elementary structure --------

std::vector<int> idempotents(FiniteSemigroup const& s);
std::vector<int> regular_elements(FiniteSemigroup const& s);
std::vector<int> inverses_of(FiniteSemigroup const& s, int a);

bool is_commutative(FiniteSemigroup const& s);
bool is_band(FiniteSemigroup const& s);
bool is_semilattice(FiniteSemigroup const& s);
bool is_regular_semigroup(FiniteSemigroup const& s);
bool is_group(FiniteSemigroup const& s);
bool is_inverse(FiniteSemigroup const& s);
bool is_monoid(FiniteSemigroup const& s);

// Whenever e and es are both idempotent, s is idempotent.  Only sensible
// for inverse semigroups; throws NotInverse otherwise.
bool is_e_unitary(FiniteSemigroup const& s);

struct IndexPeriod {
  int index;
  int period;

  bool operator==(IndexPeriod const&) const = default;
};

// least m, r with a^(m+r) = a^m
IndexPeriod index_period(FiniteSemigroup const& s, int a);

// New element is appended at the end; original indices are unchanged.
FiniteSemigroup adjoin_zero(FiniteSemigroup const& s);
FiniteSemigroup adjoin_identity(FiniteSemigroup const& s);

// S^m = all products of m elements, as a sorted list.  m >= 1.
std::vector<int> power_ideal(FiniteSemigroup const& s, int m);

// least n with S^n = S^(n+1)
int stabilization_index(FiniteSemigroup const& s);

// least n with a^n = 0 for every a, if such n exists.  Throws NoZero.
std::optional<int> nil_degree(FiniteSemigroup const& s);
// a^n = 0 for every a, for this specific n
bool is_nil_of_degree(FiniteSemigroup const& s, int n);
// least n with S^n = {0}, if it exists.  Throws NoZero.
std::optional<int> nilpotency_degree(FiniteSemigroup const& s);

// Restriction to a subset that is closed under the product.  Local element
// i is subset[i]; names carry over.  Throws InputError on a non-closed or
// invalid subset.
FiniteSemigroup subsemigroup(FiniteSemigroup const& s, std::vector<int> const& subset);

}  // namespace semicat
