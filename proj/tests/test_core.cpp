// Core carrier types: table validation, homomorphisms, products, quotients,
// closures, cyclic profiles, and isomorphism search.

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <array>
#include <numeric>
#include <vector>

#include "mlab/core.hpp"
#include "mlab/families.hpp"

#include "helpers.hpp"

using namespace mlab;

namespace {

// Independent associativity oracle: lex-least violating triple, or empty.
std::vector<int> first_violation(int n, const std::vector<int>& t) {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const int ij = t[static_cast<std::size_t>(i) * n + j];
        const int jk = t[static_cast<std::size_t>(j) * n + k];
        if (t[static_cast<std::size_t>(ij) * n + k] !=
            t[static_cast<std::size_t>(i) * n + jk])
          return {i, j, k};
      }
  return {};
}

}  // namespace

TEST_CASE("validate_monoid accepts the trivial monoid and Z/2") {
  const FiniteMonoid one = validate_monoid(1, std::vector<int>{0}, 0);
  CHECK(one.order == 1);
  CHECK(one.identity == 0);

  const FiniteMonoid z2 = validate_monoid(2, std::vector<int>{0, 1, 1, 0}, 0);
  CHECK(z2.at(1, 1) == 0);
  const FiniteGroup z2g = validate_group(z2);
  CHECK(z2g.inv(1) == 1);
}

TEST_CASE("validate_monoid rejects malformed input") {
  CHECK_THROWS_MATCHES(validate_monoid(2, std::vector<int>{0, 1, 1}, 0),
                       MlabError, ErrorMatcher(ErrorKind::malformed_table));
  CHECK_THROWS_MATCHES(validate_monoid(2, std::vector<int>{0, 1, 1, 7}, 0),
                       MlabError, ErrorMatcher(ErrorKind::malformed_table));
  CHECK_THROWS_MATCHES(validate_monoid(2, std::vector<int>{0, 1, 1, 0}, 5),
                       MlabError, ErrorMatcher(ErrorKind::bad_identity));
  // Identity index pointing at a non-identity element.
  CHECK_THROWS_MATCHES(validate_monoid(2, std::vector<int>{0, 1, 1, 0}, 1),
                       MlabError, ErrorMatcher(ErrorKind::bad_identity));
}

TEST_CASE("corrupted table is rejected with the exact lex-least triple") {
  // left_zero(2) with its adjoined identity as a 3-element monoid.
  FamilyValue lz = family("left_zero", {2});
  std::vector<int> table = lz.semigroup.monoid.table;
  const int n = lz.semigroup.monoid.order;
  REQUIRE(n == 3);
  // Corrupt one interior cell: a*b := identity breaks associativity.
  table[0 * static_cast<std::size_t>(n) + 1] = 2;
  const std::vector<int> oracle = first_violation(n, table);
  REQUIRE_FALSE(oracle.empty());
  try {
    validate_monoid(n, table, lz.semigroup.monoid.identity);
    FAIL("expected NonAssociative");
  } catch (const MlabError& e) {
    CHECK(e.kind() == ErrorKind::non_associative);
    CHECK(e.witness(0) == oracle[0]);
    CHECK(e.witness(1) == oracle[1]);
    CHECK(e.witness(2) == oracle[2]);
  }
}

TEST_CASE("semigroup_from_table adjoins an identity exactly when needed") {
  // left_zero(2): no identity among originals.
  const FiniteSemigroup lz =
      semigroup_from_table(2, std::vector<int>{0, 0, 1, 1});
  CHECK(lz.identity_adjoined);
  CHECK(lz.monoid.order == 3);
  CHECK(lz.original_count() == 2);
  CHECK(lz.monoid.identity == 2);

  // A two-chain semilattice has its top as identity: nothing adjoined.
  const FiniteSemigroup chain =
      semigroup_from_table(2, std::vector<int>{0, 0, 0, 1});
  CHECK_FALSE(chain.identity_adjoined);
  CHECK(chain.monoid.identity == 1);
}

TEST_CASE("make_homomorphism checks multiplicativity and the unit") {
  const FiniteGroup z4 = cyclic_group(4);
  const FiniteGroup z2 = cyclic_group(2);
  std::vector<int> mod2 = {0, 1, 0, 1};
  const Homomorphism h = make_homomorphism(z4.monoid, z2.monoid, mod2);
  CHECK(h.surjective);
  CHECK_FALSE(h.injective);
  CHECK(h.unit_preserving);
  CHECK(h(3) == 1);

  std::vector<int> bad = {0, 1, 1, 1};
  CHECK_THROWS_MATCHES(make_homomorphism(z4.monoid, z2.monoid, bad), MlabError,
                       ErrorMatcher(ErrorKind::not_multiplicative));
  // Constant-to-nonidentity map is multiplicative but misses the unit.
  const FiniteMonoid lz3 = family("left_zero", {2}).semigroup.monoid;
  std::vector<int> constant = {0, 0, 0};
  CHECK_THROWS_MATCHES(make_homomorphism(lz3, lz3, constant), MlabError,
                       ErrorMatcher(ErrorKind::identity_not_preserved));
  CHECK_NOTHROW(make_mult_homomorphism(lz3, lz3, constant));
}

TEST_CASE("semigroup homomorphisms relax the unit rule correctly") {
  // Genuine-monoid source: the identity may land on any idempotent.
  const FiniteSemigroup one = as_semigroup(trivial_monoid());
  const FiniteSemigroup null2 =
      semigroup_from_table(2, std::vector<int>{0, 0, 0, 0});
  REQUIRE(null2.identity_adjoined);
  // 0 is the absorbing idempotent of null2; the trivial monoid maps onto it.
  const Homomorphism h =
      make_semigroup_homomorphism(one, null2, std::vector<int>{0});
  CHECK_FALSE(h.unit_preserving);

  // Adjoined-identity source must keep its bookkeeping slot on the unit.
  std::vector<int> skew = {0, 0, 0};
  CHECK_THROWS_MATCHES(make_semigroup_homomorphism(null2, null2, skew),
                       MlabError,
                       ErrorMatcher(ErrorKind::identity_not_preserved));
  // Originals may not land on a synthetic adjoined identity.
  std::vector<int> into_unit = {2, 2, 2};
  CHECK_THROWS_MATCHES(make_semigroup_homomorphism(null2, null2, into_unit),
                       MlabError, ErrorMatcher(ErrorKind::codomain_mismatch));
}

TEST_CASE("compose applies left then right") {
  const FiniteGroup z8 = cyclic_group(8);
  const FiniteGroup z4 = cyclic_group(4);
  const FiniteGroup z2 = cyclic_group(2);
  std::vector<int> m4(8), m2(4);
  for (int i = 0; i < 8; ++i) m4[static_cast<std::size_t>(i)] = i % 4;
  for (int i = 0; i < 4; ++i) m2[static_cast<std::size_t>(i)] = i % 2;
  const Homomorphism a = make_homomorphism(z8.monoid, z4.monoid, m4);
  const Homomorphism b = make_homomorphism(z4.monoid, z2.monoid, m2);
  const Homomorphism c = compose(a, b);
  CHECK(c.source == z8.monoid);
  CHECK(c.target == z2.monoid);
  for (int i = 0; i < 8; ++i) CHECK(c(i) == i % 2);
  CHECK_THROWS_MATCHES(compose(b, a), MlabError,
                       ErrorMatcher(ErrorKind::domain_mismatch));
}

TEST_CASE("direct product of Z/2 and Z/3 is Z/6") {
  const FiniteGroup z2 = cyclic_group(2);
  const FiniteGroup z3 = cyclic_group(3);
  const ProductDecomposition p = direct_product(z2.monoid, z3.monoid);
  CHECK(p.product.order == 6);
  CHECK(p.proj1.surjective);
  CHECK(p.proj2.surjective);
  CHECK(is_isomorphic(p.product, cyclic_group(6).monoid).has_value());
}

TEST_CASE("submonoid closure is deterministic and minimal") {
  const FiniteGroup z6 = cyclic_group(6);
  const Submonoid whole = submonoid_closure(z6.monoid, {1});
  CHECK(whole.elements.size() == 6);
  const Submonoid even = submonoid_closure(z6.monoid, {2});
  CHECK(even.elements == std::vector<int>{0, 2, 4});
  const Submonoid unit = submonoid_closure(z6.monoid, {});
  CHECK(unit.elements == std::vector<int>{0});
  CHECK(even.inclusion.injective);
}

TEST_CASE("quotient by congruence reproduces Z/4 -> Z/2") {
  const FiniteGroup z4 = cyclic_group(4);
  std::vector<int> classes = {0, 1, 0, 1};
  const Congruence c = make_congruence(z4.monoid, classes);
  const QuotientDecomposition q = quotient_by_congruence(z4.monoid, c);
  CHECK(q.quotient.order == 2);
  CHECK(q.projection.surjective);
  CHECK(is_isomorphic(q.quotient, cyclic_group(2).monoid).has_value());

  // Not a congruence: classes {0,1},{2,3} in Z/4 (1+1=2 crosses classes).
  std::vector<int> bad = {0, 0, 1, 1};
  CHECK_THROWS_MATCHES(make_congruence(z4.monoid, bad), MlabError,
                       ErrorMatcher(ErrorKind::incompatible_partition));
}

TEST_CASE("actions validate and produce kernel congruences") {
  const FiniteGroup z2 = cyclic_group(2);
  // Z/2 acting on two points by swap.
  std::vector<int> act = {0, 1, 1, 0};  // act[q*order + m]
  const MonoidAction a = make_action(z2.monoid, 2, act);
  CHECK(a.at(0, 1) == 1);
  const Congruence k = kernel_congruence_of_action(z2.monoid, a);
  CHECK(k.num_classes == 2);  // the action is faithful

  std::vector<int> broken = {1, 1, 0, 0};  // identity must act trivially
  CHECK_THROWS_MATCHES(make_action(z2.monoid, 2, broken), MlabError,
                       ErrorMatcher(ErrorKind::validation_error));
}

TEST_CASE("cyclic profiles match the monogenic presentations") {
  const FiniteGroup z4 = cyclic_group(4);
  const CyclicProfile gp = cyclic_profile(z4.monoid, 1);
  CHECK(gp.index == 1);
  CHECK(gp.period == 4);

  FamilyValue mon32 = family("monogenic", {3, 2});
  const CyclicProfile mp = cyclic_profile(mon32.semigroup.monoid, 0);
  CHECK(mp.index == 3);
  CHECK(mp.period == 2);

  CHECK(monoid_power(z4.monoid, 1, 0) == 0);
  CHECK(monoid_power(z4.monoid, 1, 7) == 3);
  CHECK(idempotents_of(z4.monoid) == std::vector<int>{0});
}

TEST_CASE("isomorphism search agrees with brute force on small cases") {
  CHECK_FALSE(is_isomorphic(cyclic_group(4).monoid,
                            elementary_abelian_group(2, 2).monoid)
                  .has_value());
  const auto witness = is_isomorphic(
      cyclic_group(6).monoid,
      direct_product(cyclic_group(2).monoid, cyclic_group(3).monoid).product);
  REQUIRE(witness.has_value());
  // The witness is a genuine isomorphism.
  const FiniteMonoid& a = cyclic_group(6).monoid;
  const FiniteMonoid b =
      direct_product(cyclic_group(2).monoid, cyclic_group(3).monoid).product;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      CHECK((*witness)(a.at(i, j)) == b.at((*witness)(i), (*witness)(j)));

  Limits tight = default_limits();
  tight.iso_order_bound = 4;
  CHECK_THROWS_MATCHES(
      is_isomorphic(cyclic_group(6).monoid, cyclic_group(6).monoid, tight),
      MlabError, ErrorMatcher(ErrorKind::budget_exceeded));
}

TEST_CASE("families produce their standard presentations") {
  CHECK(trivial_monoid().order == 1);
  CHECK(left_zero(3).original_count() == 3);
  CHECK(right_zero(3).original_count() == 3);
  const FiniteSemigroup lz = left_zero(2);
  CHECK(lz.monoid.at(0, 1) == 0);
  const FiniteSemigroup rz = right_zero(2);
  CHECK(rz.monoid.at(0, 1) == 1);

  const FiniteMonoid chain = chain_semilattice(3).monoid;
  CHECK(chain.identity == 2);  // the top of the chain
  CHECK(chain.at(0, 2) == 0);

  FamilyValue mon = family("monogenic", {2, 3});
  CHECK(mon.semigroup.original_count() == 4);  // s..s^4 with s^5 = s^2
  CHECK(mon.semigroup.identity_adjoined);

  const FiniteMonoid z2z = zero_adjoined(cyclic_group(2).monoid);
  CHECK(z2z.order == 3);
  CHECK(z2z.at(2, 1) == 2);  // zero absorbs
  CHECK(z2z.identity == 0);

  const FiniteMonoid t2 = full_transformation(2);
  CHECK(t2.order == 4);
  CHECK(idempotents_of(t2).size() == 3);

  CHECK_THROWS_MATCHES(family("no_such_family", {1}), MlabError,
                       ErrorMatcher(ErrorKind::unknown_family));
}

TEST_CASE("groups of small order have correct inverse tables") {
  const FiniteGroup q8 = quaternion_group();
  CHECK(q8.order() == 8);
  for (int i = 0; i < 8; ++i) {
    CHECK(q8.at(i, q8.inv(i)) == q8.identity());
    CHECK(q8.at(q8.inv(i), i) == q8.identity());
  }
  const FiniteGroup d4 = dihedral_group(4);
  CHECK(d4.order() == 8);
  CHECK_FALSE(is_isomorphic(q8.monoid, d4.monoid).has_value());
  const FiniteGroup a4 = alternating4();
  CHECK(a4.order() == 12);
  CHECK(idempotents_of(a4.monoid).size() == 1);

  // Non-group monoid is rejected.
  CHECK_THROWS_MATCHES(validate_group(chain_semilattice(2).monoid), MlabError,
                       ErrorMatcher(ErrorKind::not_a_group));
}
