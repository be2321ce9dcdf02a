// Subgroup machinery: closures, witnesses, full lattice enumeration against a
// subset oracle, kernels, quotients by normal subgroups, Frattini subgroups,
// saturated lifts, elementary-abelian detection, and the group catalog.

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <optional>
#include <vector>

#include "mlab/core.hpp"
#include "mlab/families.hpp"
#include "mlab/groups.hpp"

#include "helpers.hpp"

using namespace mlab;
using namespace mlab::embedding;

namespace {

// Oracle: all subgroups by scanning every subset (groups of order <= ~12).
std::vector<std::vector<int>> oracle_subgroups(const FiniteGroup& g) {
  const int n = g.order();
  REQUIRE(n <= 12);
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    if (!(mask & (1u << g.identity()))) continue;
    bool closed = true;
    for (int i = 0; i < n && closed; ++i) {
      if (!(mask & (1u << i))) continue;
      for (int j = 0; j < n; ++j) {
        if (!(mask & (1u << j))) continue;
        if (!(mask & (1u << g.at(i, j)))) {
          closed = false;
          break;
        }
      }
    }
    if (!closed) continue;
    std::vector<int> elems;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) elems.push_back(i);
    out.push_back(std::move(elems));
  }
  std::sort(out.begin(), out.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return out;
}

int prime_to_power_order(const FiniteGroup& g, int p) {
  int n = g.order();
  while (n % p == 0) n /= p;
  return n;  // 1 iff |G| is a power of p
}

}  // namespace

TEST_CASE("subgroup closure generates the expected subsets") {
  const FiniteGroup z12 = cyclic_group(12);
  CHECK(subgroup_closure(z12, {4}) == std::vector<int>{0, 4, 8});
  CHECK(subgroup_closure(z12, {}) == std::vector<int>{0});
  CHECK(subgroup_closure(z12, {3, 4}).size() == 12);

  const FiniteGroup q8 = quaternion_group();
  CHECK(subgroup_closure(q8, {1}).size() == 4);  // <i> is cyclic of order 4
}

TEST_CASE("subgroup witnesses re-index and embed") {
  const FiniteGroup z4 = cyclic_group(4);
  const SubgroupWitness w = subgroup_from_elements(z4, {0, 2});
  CHECK(w.group.order() == 2);
  CHECK(w.elements == std::vector<int>{0, 2});
  CHECK(w.index_of[2] == 1);
  CHECK(w.inclusion.injective);
  CHECK(w.inclusion.unit_preserving);

  CHECK_THROWS_MATCHES(subgroup_from_elements(z4, {0, 1}), MlabError,
                       ErrorMatcher(ErrorKind::not_a_subgroup));
  CHECK_THROWS_MATCHES(subgroup_from_elements(z4, {}), MlabError,
                       ErrorMatcher(ErrorKind::not_a_subgroup));
  CHECK_THROWS_MATCHES(subgroup_from_elements(z4, {0, 9}), MlabError,
                       ErrorMatcher(ErrorKind::not_a_subgroup));
}

TEST_CASE("subgroup lattices match the subset oracle") {
  for (const FiniteGroup& g :
       {cyclic_group(6), elementary_abelian_group(2, 2), dihedral_group(3),
        quaternion_group(), dihedral_group(4), cyclic_group(12)}) {
    CAPTURE(g.order());
    CHECK(all_subgroups(g) == oracle_subgroups(g));
  }
  CHECK(all_subgroups(cyclic_group(12)).size() == 6);
  CHECK(all_subgroups(elementary_abelian_group(2, 2)).size() == 5);
  CHECK(all_subgroups(quaternion_group()).size() == 6);
  CHECK(all_subgroups(dihedral_group(4)).size() == 10);

  Limits tight = default_limits();
  tight.subgroup_order_cap = 4;
  CHECK_THROWS_MATCHES(all_subgroups(cyclic_group(6), tight), MlabError,
                       ErrorMatcher(ErrorKind::budget_exceeded));
}

TEST_CASE("kernels and quotients by normal subgroups") {
  const FiniteGroup z4 = cyclic_group(4);
  const FiniteGroup z2 = cyclic_group(2);
  std::vector<int> mod2 = {0, 1, 0, 1};
  const Homomorphism proj = make_homomorphism(z4.monoid, z2.monoid, mod2);
  CHECK(kernel_elements(proj) == std::vector<int>{0, 2});

  const FiniteGroup z6 = cyclic_group(6);
  const QuotientDecomposition q3 = quotient_by_normal_subgroup(z6, {0, 3});
  CHECK(q3.quotient.order == 3);
  CHECK(is_isomorphic(q3.quotient, cyclic_group(3).monoid).has_value());
  const QuotientDecomposition q2 = quotient_by_normal_subgroup(z6, {0, 2, 4});
  CHECK(q2.quotient.order == 2);

  // S3 modulo its rotation subgroup is Z/2; a reflection pair is not normal.
  const FiniteGroup s3 = dihedral_group(3);
  std::vector<int> rotations;
  for (const auto& sub : all_subgroups(s3))
    if (sub.size() == 3) rotations = sub;
  REQUIRE(rotations.size() == 3);
  CHECK(quotient_by_normal_subgroup(s3, rotations).quotient.order == 2);

  int reflection = -1;
  for (int x = 0; x < 6; ++x)
    if (x != s3.identity() && s3.at(x, x) == s3.identity()) reflection = x;
  REQUIRE(reflection >= 0);
  CHECK_THROWS_MATCHES(
      quotient_by_normal_subgroup(s3, {s3.identity(), reflection}), MlabError,
      ErrorMatcher(ErrorKind::incompatible_partition));
}

TEST_CASE("Frattini subgroups of standard groups") {
  const FrattiniResult t = frattini(cyclic_group(1));
  CHECK(t.subgroup == std::vector<int>{0});
  CHECK(t.quotient.order() == 1);

  const FrattiniResult z4 = frattini(cyclic_group(4));
  CHECK(z4.subgroup == std::vector<int>{0, 2});
  CHECK(is_isomorphic(z4.quotient.monoid, cyclic_group(2).monoid).has_value());

  const FrattiniResult v4 = frattini(elementary_abelian_group(2, 2));
  CHECK(v4.subgroup == std::vector<int>{0});
  CHECK(v4.maximal_subgroups.size() == 3);
  CHECK(is_isomorphic(v4.quotient.monoid, elementary_abelian_group(2, 2).monoid)
            .has_value());

  const FrattiniResult z8 = frattini(cyclic_group(8));
  CHECK(z8.subgroup.size() == 4);
  CHECK(z8.quotient.order() == 2);

  const FrattiniResult q8 = frattini(quaternion_group());
  CHECK(q8.subgroup.size() == 2);
  CHECK(is_isomorphic(q8.quotient.monoid, elementary_abelian_group(2, 2).monoid)
            .has_value());

  const FrattiniResult z12 = frattini(cyclic_group(12));
  CHECK(z12.subgroup.size() == 2);
  CHECK(z12.quotient.order() == 6);
}

TEST_CASE("Frattini divisibility holds across the catalog") {
  for (const CatalogGroup& cg : group_catalog(12)) {
    CAPTURE(cg.name);
    const FrattiniResult f = frattini(cg.group);
    const int phi_order = static_cast<int>(f.subgroup.size());
    for (int p = 2; p <= phi_order; ++p) {
      if (phi_order % p != 0) continue;
      bool prime = true;
      for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) prime = false;
      if (!prime) continue;
      CHECK(f.quotient.order() % p == 0);
    }
  }
}

TEST_CASE("saturated lifts find minimal surjecting subgroups") {
  auto all_groups = [](const FiniteGroup&) { return true; };

  // Identity epimorphism: only the whole group surjects.
  const FiniteGroup z6 = cyclic_group(6);
  std::vector<int> idmap = {0, 1, 2, 3, 4, 5};
  const Homomorphism id = make_homomorphism(z6.monoid, z6.monoid, idmap);
  const auto whole = saturated_lift(z6, id, all_groups);
  REQUIRE(whole.has_value());
  CHECK(whole->group.order() == 6);

  // V4 onto Z/2 by a projection: an order-2 subgroup suffices, and the
  // lexicographically least surjecting one is returned.
  const FiniteGroup v4 = elementary_abelian_group(2, 2);
  const FiniteGroup z2 = cyclic_group(2);
  std::vector<int> projmap(4);
  for (int x = 0; x < 4; ++x) projmap[static_cast<std::size_t>(x)] = x / 2;
  const Homomorphism proj = make_homomorphism(v4.monoid, z2.monoid, projmap);
  const auto lift = saturated_lift(v4, proj, all_groups);
  REQUIRE(lift.has_value());
  CHECK(lift->group.order() == 2);
  CHECK(proj.map[static_cast<std::size_t>(lift->elements[1])] == 1);
  std::vector<int> expected;
  for (const auto& sub : all_subgroups(v4)) {
    if (sub.size() != 2) continue;
    if (proj.map[static_cast<std::size_t>(sub[1])] == 1) {
      expected = sub;
      break;
    }
  }
  CHECK(lift->elements == expected);

  // Z/4 onto Z/2 with member = 2-groups: the only proper subgroup is the
  // kernel, so the lift is the whole group.
  const FiniteGroup z4 = cyclic_group(4);
  std::vector<int> mod2 = {0, 1, 0, 1};
  const Homomorphism m2 = make_homomorphism(z4.monoid, z2.monoid, mod2);
  auto two_group = [](const FiniteGroup& g) {
    return prime_to_power_order(g, 2) == 1;
  };
  const auto full = saturated_lift(z4, m2, two_group);
  REQUIRE(full.has_value());
  CHECK(full->group.order() == 4);

  // A predicate nothing satisfies yields no lift.
  auto nothing = [](const FiniteGroup&) { return false; };
  CHECK_FALSE(saturated_lift(z4, m2, nothing).has_value());

  // Non-epimorphisms are rejected.
  std::vector<int> constant = {0, 0, 0, 0};
  const Homomorphism non_epi =
      make_homomorphism(z4.monoid, z2.monoid, constant);
  CHECK_THROWS_MATCHES(saturated_lift(z4, non_epi, all_groups), MlabError,
                       ErrorMatcher(ErrorKind::validation_error));
}

TEST_CASE("minimality of saturated lifts, exhaustively at small order") {
  // For every epimorphism formed from a catalog group quotient, no strictly
  // smaller subgroup than the returned one surjects.
  auto all_groups = [](const FiniteGroup&) { return true; };
  for (const CatalogGroup& cg : group_catalog(8)) {
    const FiniteGroup& g = cg.group;
    const FrattiniResult f = frattini(g);
    const auto lift = saturated_lift(g, f.projection, all_groups);
    REQUIRE(lift.has_value());
    for (const auto& sub : all_subgroups(g)) {
      if (sub.size() >= lift->elements.size()) continue;
      std::vector<char> hit(static_cast<std::size_t>(f.quotient.order()), 0);
      for (int x : sub) hit[static_cast<std::size_t>(f.projection(x))] = 1;
      bool onto = std::find(hit.begin(), hit.end(), 0) == hit.end();
      CAPTURE(cg.name, sub);
      CHECK_FALSE(onto);
    }
  }
}

TEST_CASE("elementary abelian detection returns the prime or a marker") {
  CHECK(is_elementary_abelian(cyclic_group(1)) == std::optional<int>(0));
  CHECK(is_elementary_abelian(cyclic_group(2)) == std::optional<int>(2));
  CHECK(is_elementary_abelian(cyclic_group(3)) == std::optional<int>(3));
  CHECK(is_elementary_abelian(elementary_abelian_group(2, 2)) ==
        std::optional<int>(2));
  CHECK(is_elementary_abelian(elementary_abelian_group(3, 2)) ==
        std::optional<int>(3));
  CHECK_FALSE(is_elementary_abelian(cyclic_group(4)).has_value());
  CHECK_FALSE(is_elementary_abelian(cyclic_group(6)).has_value());
  CHECK_FALSE(is_elementary_abelian(dihedral_group(3)).has_value());
}

TEST_CASE("the group catalog stays within its order bound") {
  const auto catalog = group_catalog(16);
  CHECK(catalog.size() >= 20);
  bool has_q8 = false, has_a4 = false, has_z16 = false;
  for (const CatalogGroup& cg : catalog) {
    CAPTURE(cg.name);
    CHECK(cg.group.order() <= 16);
    CHECK(cg.group.order() >= 1);
    if (cg.name == "dic2") has_q8 = true;
    if (cg.name == "a4") has_a4 = true;
    if (cg.name == "z16") has_z16 = true;
  }
  CHECK(has_q8);
  CHECK(has_a4);
  CHECK(has_z16);

  CHECK(group_catalog(1).size() == 1);
}
