#include "doctest.h"
#include "oracles.hpp"
#include "semicat/green.hpp"
#include "semicat/semigroup.hpp"

using namespace semicat;

namespace {

FiniteSemigroup cyclic(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      t[i][j] = (i + j) % n;
    }
  }
  return FiniteSemigroup::from_table(t);
}

FiniteSemigroup null3() {
  return FiniteSemigroup::from_table({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}, {"0", "a", "b"});
}

FiniteSemigroup left_zero(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      t[i][j] = i;
    }
  }
  return FiniteSemigroup::from_table(t);
}

FiniteSemigroup chain3() {
  // meet semilattice 0 < 1 < 2
  return FiniteSemigroup::from_table({{0, 0, 0}, {0, 1, 1}, {0, 1, 2}});
}

}  // namespace

TEST_CASE("green relations match the ideal-comparison oracle") {
  for (auto const& s : {null3(), cyclic(4), left_zero(3), chain3(),
                        adjoin_zero(cyclic(3)), adjoin_identity(null3())}) {
    auto g = green_relations(s);
    auto want = oracle::green_by_ideals(s);
    CHECK(g.R == want.R);
    CHECK(g.L == want.L);
    CHECK(g.J == want.J);
    CHECK(g.H == g.R.meet(g.L));
    CHECK(g.D == g.R.join(g.L));
    CHECK(g.D == g.J);
  }
}

TEST_CASE("green relations on a null semigroup are trivial") {
  auto g = green_relations(null3());
  CHECK(g.R == Partition::singletons(3));
  CHECK(g.L == Partition::singletons(3));
  CHECK(g.H == Partition::singletons(3));
  CHECK(g.J == Partition::singletons(3));
  // kernel is {0}
  CHECK(g.j_info[g.J.block_of(0)].is_kernel);
  CHECK(!g.j_info[g.J.block_of(1)].is_kernel);
}

TEST_CASE("green relations on a group are universal") {
  auto g = green_relations(cyclic(5));
  CHECK(g.J == Partition::universal(5));
  CHECK(g.H == Partition::universal(5));
  CHECK(g.j_info[0].is_kernel);
  CHECK(g.j_info[0].contains_idempotent);
}

TEST_CASE("left zero band: L universal, R trivial") {
  // x*y = x, so aS^1 = {a} while S^1 a = S
  auto g = green_relations(left_zero(3));
  CHECK(g.R == Partition::singletons(3));
  CHECK(g.L == Partition::universal(3));
  CHECK(g.H == Partition::singletons(3));
  CHECK(g.J == Partition::universal(3));
}

TEST_CASE("maximal subgroups") {
  // semilattice: every maximal subgroup trivial
  for (auto const& ms : maximal_subgroups(chain3())) {
    CHECK(ms.group.order() == 1);
  }
  // Z3 with adjoined zero: Z3 at the identity, trivial at the zero
  auto s = adjoin_zero(cyclic(3));
  auto ms = maximal_subgroups(s);
  REQUIRE(ms.size() == 2);
  bool saw_z3 = false, saw_trivial = false;
  for (auto const& m : ms) {
    if (m.group.order() == 3) {
      CHECK(is_group(m.group));
      CHECK(m.idempotent == 0);
      saw_z3 = true;
    }
    if (m.group.order() == 1) {
      CHECK(m.idempotent == 3);
      saw_trivial = true;
    }
  }
  CHECK(saw_z3);
  CHECK(saw_trivial);
}

TEST_CASE("principal ideals") {
  auto n = null3();
  CHECK(principal_ideal(n, 1) == std::vector<int>{0, 1});
  CHECK(principal_ideal(n, 0) == std::vector<int>{0});
  auto c = chain3();
  CHECK(principal_ideal(c, 2) == std::vector<int>{0, 1, 2});
  CHECK(principal_ideal(c, 1) == std::vector<int>{0, 1});
}

TEST_CASE("principal factor of a null semigroup element") {
  auto pf = principal_factor(null3(), 1);
  CHECK(pf.classification == FactorClass::null_class);
  CHECK(!pf.is_kernel);
  CHECK(pf.factor.order() == 2);
  CHECK(*pf.factor.zero() == 1);  // fresh zero last
  // every product is zero
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      CHECK(pf.factor.product(a, b) == 1);
    }
  }
}

TEST_CASE("principal factor of a group element is the group") {
  auto pf = principal_factor(cyclic(4), 2);
  CHECK(pf.is_kernel);
  CHECK(pf.classification == FactorClass::completely_simple);
  CHECK(pf.factor.order() == 4);
  CHECK(is_group(pf.factor));
}

TEST_CASE("principal factor of a semilattice top is two-element") {
  auto pf = principal_factor(chain3(), 2);
  CHECK(!pf.is_kernel);
  CHECK(pf.classification == FactorClass::completely_0_simple);
  CHECK(pf.factor.order() == 2);
}

TEST_CASE("idempotent frame") {
  auto c = chain3();
  CHECK(idempotent_frame(c, 1) == std::pair<int, int>{1, 1});
  CHECK_THROWS_AS(idempotent_frame(null3(), 1), NotRegular);
  // left zero band: everything idempotent, L universal so f = 0 always
  auto lz = left_zero(3);
  CHECK(idempotent_frame(lz, 2) == std::pair<int, int>{2, 0});
}
