// Wreath products against a direct product-law oracle, the coset embedding of
// a group through its subgroup, and the Schützenberger structure/monomial
// embedding pipeline.

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <vector>

#include "mlab/catalog.hpp"
#include "mlab/core.hpp"
#include "mlab/families.hpp"
#include "mlab/greens.hpp"
#include "mlab/groups.hpp"
#include "mlab/wreath.hpp"

#include "helpers.hpp"

using namespace mlab;
using namespace mlab::wreath;

namespace {

MonoidAction regular_action(const FiniteMonoid& m) {
  std::vector<int> act(static_cast<std::size_t>(m.order) * m.order);
  for (int q = 0; q < m.order; ++q)
    for (int x = 0; x < m.order; ++x)
      act[static_cast<std::size_t>(q) * m.order + x] = m.at(q, x);
  return make_action(m, m.order, act);
}

MonoidAction swap_action_z2() {
  const FiniteMonoid z2 = cyclic_group(2).monoid;
  std::vector<int> act = {0, 1, 1, 0};
  return make_action(z2, 2, act);
}

// Oracle: multiply two wreath elements straight from the definition.
int oracle_product(const WreathProduct& w, int i, int j) {
  const auto [fi, ni] = w.decode(i);
  const auto [fj, nj] = w.decode(j);
  std::vector<int> f(fi.size());
  for (std::size_t q = 0; q < f.size(); ++q)
    f[q] = w.top.at(fi[q], fj[static_cast<std::size_t>(
                        w.bottom.at(static_cast<int>(q), ni))]);
  return w.encode(f, w.bottom.monoid.at(ni, nj));
}

int element_period(const FiniteMonoid& m, int x) {
  return cyclic_profile(m, x).period;
}

}  // namespace

TEST_CASE("wreath products follow the product law") {
  const WreathProduct w =
      wreath_product(cyclic_group(2).monoid, swap_action_z2());
  REQUIRE(w.product.order == 8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) CHECK(w.product.at(i, j) == oracle_product(w, i, j));

  // Order formula |T|^|Q| * |N| on a second instance.
  const WreathProduct w2 = wreath_product(
      chain_semilattice(2).monoid, regular_action(cyclic_group(3).monoid));
  CHECK(w2.product.order == 2 * 2 * 2 * 3);
  for (int i = 0; i < w2.product.order; ++i)
    for (int j = 0; j < w2.product.order; ++j)
      CHECK(w2.product.at(i, j) == oracle_product(w2, i, j));
}

TEST_CASE("wreath products with degenerate factors") {
  // Trivial top: the product collapses onto the bottom monoid.
  const WreathProduct flat =
      wreath_product(trivial_monoid(), regular_action(cyclic_group(3).monoid));
  CHECK(flat.product.order == 3);
  CHECK(is_isomorphic(flat.product, cyclic_group(3).monoid).has_value());

  // One point and a trivial bottom: the product is the top monoid.
  const FiniteMonoid two = zero_adjoined(trivial_monoid());
  std::vector<int> act = {0};
  const WreathProduct tall =
      wreath_product(two, make_action(trivial_monoid(), 1, act));
  CHECK(tall.product.order == 2);
  CHECK(is_isomorphic(tall.product, two).has_value());
}

TEST_CASE("Z/2 wreath Z/2 has order 8 with an order-4 element") {
  const WreathProduct w =
      wreath_product(cyclic_group(2).monoid, swap_action_z2());
  const int x = w.encode({0, 1}, 1);
  CHECK(element_period(w.product, x) == 4);
  const int sq = w.product.at(x, x);
  CHECK(w.decode(sq).first == std::vector<int>{1, 1});
  CHECK(w.decode(sq).second == 0);
}

TEST_CASE("wreath products respect the size cap") {
  Limits tight = default_limits();
  tight.max_order = 100;
  CHECK_THROWS_MATCHES(
      wreath_product(cyclic_group(4).monoid,
                     regular_action(cyclic_group(4).monoid), tight),
      MlabError, ErrorMatcher(ErrorKind::size_limit_exceeded));
}

TEST_CASE("coset embedding with the whole group as subgroup") {
  const FiniteGroup z3 = cyclic_group(3);
  const KrasnerKaloujnine kk = krasner_kaloujnine(z3, {0, 1, 2});
  CHECK(kk.num_cosets == 1);
  CHECK(kk.H.order() == 1);
  CHECK(kk.wreath.product.order == 3);
  CHECK(kk.embed.injective);
  CHECK(kk.embed.surjective);  // one coset: the embedding is onto
}

TEST_CASE("coset embedding of Z/4 through its order-2 subgroup") {
  const FiniteGroup z4 = cyclic_group(4);
  const KrasnerKaloujnine kk = krasner_kaloujnine(z4, {0, 2});
  CHECK(kk.num_cosets == 2);
  CHECK(kk.H.order() == 2);
  CHECK(kk.wreath.product.order == 8);
  CHECK(kk.embed.injective);
  // The image generates a subgroup of order 4 containing an order-4 element.
  std::vector<int> image;
  for (int x = 0; x < 4; ++x) image.push_back(kk.embed(x));
  const Submonoid closed = submonoid_closure(kk.wreath.product, image);
  CHECK(closed.elements.size() == 4);
  bool has_order4 = false;
  for (int y : image)
    if (element_period(kk.wreath.product, y) == 4) has_order4 = true;
  CHECK(has_order4);
}

TEST_CASE("coset embedding of the Klein group through a factor") {
  const FiniteGroup v4 = elementary_abelian_group(2, 2);
  const KrasnerKaloujnine kk = krasner_kaloujnine(v4, {0, 1});
  CHECK(kk.num_cosets == 2);
  CHECK(kk.H.order() == 2);
  CHECK(kk.wreath.product.order == 8);
  CHECK(kk.embed.injective);
}

TEST_CASE("coset embedding across many subgroup pairs") {
  std::vector<FiniteGroup> groups = {
      cyclic_group(12), dihedral_group(4), quaternion_group(),
      elementary_abelian_group(2, 3),
      group_direct_product(cyclic_group(2), cyclic_group(4))};
  for (const FiniteGroup& g : groups) {
    for (const auto& sub : embedding::all_subgroups(g)) {
      CAPTURE(g.order(), sub);
      const KrasnerKaloujnine kk = krasner_kaloujnine(g, sub);
      CHECK(kk.embed.injective);
      CHECK(kk.num_cosets * static_cast<int>(sub.size()) == g.order());
      // Coset representatives: identity for B, and rep(B b) lands in its coset.
      CHECK(kk.coset_rep[0] == g.identity());
      for (int c = 0; c < kk.num_cosets; ++c)
        CHECK(kk.coset_of[static_cast<std::size_t>(
                  kk.coset_rep[static_cast<std::size_t>(c)])] == c);
      // tau recovers each subgroup element from its embedded image.
      for (int b : sub)
        CHECK(kk.top_at_base(kk.embed(b)) == kk.B.index_of[static_cast<std::size_t>(b)]);
    }
  }
}

TEST_CASE("subgroup argument must actually be a subgroup") {
  CHECK_THROWS_MATCHES(krasner_kaloujnine(cyclic_group(4), {0, 1}), MlabError,
                       ErrorMatcher(ErrorKind::not_a_subgroup));
}

TEST_CASE("Schützenberger structure of a group is the group itself") {
  const FiniteGroup z3 = cyclic_group(3);
  const SchutzStructure s = schutz_structure(z3.monoid, 0);
  CHECK(s.R == std::vector<int>{0, 1, 2});
  CHECK(s.H.group.order() == 3);
  CHECK(s.num_orbits == 1);
  CHECK(s.star == 1);
  CHECK(s.N.order == 1);  // every element acts trivially on the single orbit
}

TEST_CASE("Schützenberger structure of the zero-adjoined two-group") {
  const FiniteMonoid m = zero_adjoined(cyclic_group(2).monoid);
  const SchutzStructure s = schutz_structure(m, m.identity);
  CHECK(s.R == std::vector<int>{0, 1});
  CHECK(s.H.group.order() == 2);
  CHECK(s.num_orbits == 1);
  CHECK(s.N.order == 2);
  CHECK(s.reps[0] == m.identity);
  // The zero sends the orbit to the sink; the units fix it.
  CHECK(s.m_qstar.at(0, 2) == s.star);
  CHECK(s.m_qstar.at(0, 1) == 0);
}

TEST_CASE("Schützenberger structure of the full transformation monoid") {
  const FiniteMonoid t2 = full_transformation(2);
  const SchutzStructure s = schutz_structure(t2, t2.identity);
  CHECK(s.R.size() == 2);
  CHECK(s.H.group.order() == 2);
  CHECK(s.num_orbits == 1);
  // Constants knock the orbit into the sink.
  for (int x = 0; x < t2.order; ++x) {
    bool in_r = std::find(s.R.begin(), s.R.end(), x) != s.R.end();
    CHECK((s.m_qstar.at(0, x) == s.star) == !in_r);
  }
}

TEST_CASE("monomial embedding digits for the zero-adjoined two-group") {
  const FiniteMonoid m = zero_adjoined(cyclic_group(2).monoid);
  const SchutzStructure s = schutz_structure(m, m.identity);
  const SchutzEmbedding emb = schutz_embedding(s);
  CHECK(emb.embed.injective);
  CHECK(emb.zero_top == 2);

  // identity -> (q -> 1, * -> 0; [1])
  auto [f1, n1] = emb.wreath.decode(emb.embed(0));
  CHECK(f1 == std::vector<int>{0, emb.zero_top});
  CHECK(n1 == s.to_N(0));
  // g -> (q -> g, * -> 0; [g]) with [g] = [1] in N
  auto [fg, ng] = emb.wreath.decode(emb.embed(1));
  CHECK(fg == std::vector<int>{1, emb.zero_top});
  CHECK(ng == s.to_N(1));
  CHECK(ng == n1);
  // zero -> (q -> 0, * -> 0; [0])
  auto [fz, nz] = emb.wreath.decode(emb.embed(2));
  CHECK(fz == std::vector<int>{emb.zero_top, emb.zero_top});
  CHECK(nz == s.to_N(2));
  CHECK(nz != n1);
}

TEST_CASE("embedding requires faithfulness; the quotient restores it") {
  const FiniteMonoid t2 = full_transformation(2);
  const SchutzStructure raw = schutz_structure(t2, t2.identity);
  // Both constants act as the constant-sink map on R.
  CHECK_THROWS_MATCHES(schutz_embedding(raw), MlabError,
                       ErrorMatcher(ErrorKind::not_faithful_on_r));

  const QuotientDecomposition fq = faithful_r_quotient(t2, t2.identity);
  CHECK(fq.quotient.order == 3);  // the two constants collapse
  const int e_img = fq.projection(t2.identity);
  const SchutzStructure s = schutz_structure(fq.quotient, e_img);
  const SchutzEmbedding emb = schutz_embedding(s);
  CHECK(emb.embed.injective);
  // The maximal subgroup survives the quotient injectively.
  const greens::MaximalSubgroup h = greens::maximal_subgroup(t2, t2.identity);
  std::vector<int> seen;
  for (int x : h.elements) seen.push_back(fq.projection(x));
  std::sort(seen.begin(), seen.end());
  CHECK(std::unique(seen.begin(), seen.end()) == seen.end());
}

TEST_CASE("faithful quotient is bijective precisely when faithful") {
  // Groups act faithfully on themselves.
  const FiniteGroup q8 = quaternion_group();
  const QuotientDecomposition fq = faithful_r_quotient(q8.monoid, 0);
  CHECK(fq.quotient.order == 8);
  CHECK(fq.projection.injective);

  // A dead second coordinate collapses.
  const FiniteMonoid z2z = zero_adjoined(cyclic_group(2).monoid);
  const FiniteMonoid flat = zero_adjoined(trivial_monoid());
  const FiniteMonoid prod = direct_product(z2z, flat).product;
  const QuotientDecomposition col = faithful_r_quotient(prod, prod.identity);
  CHECK(col.quotient.order == 3);
  CHECK_FALSE(col.projection.injective);
}

TEST_CASE("idempotent preconditions are enforced") {
  const FiniteMonoid z4 = cyclic_group(4).monoid;
  CHECK_THROWS_MATCHES(schutz_structure(z4, 1), MlabError,
                       ErrorMatcher(ErrorKind::not_idempotent));
  CHECK_THROWS_MATCHES(faithful_r_quotient(z4, 2), MlabError,
                       ErrorMatcher(ErrorKind::not_idempotent));
}

TEST_CASE("structure invariants hold across the order-4 monoid catalog") {
  for (const FiniteMonoid& m : cat::enumerate_monoids(4)) {
    for (int e : idempotents_of(m)) {
      CAPTURE(m.table, e);
      const SchutzStructure s = schutz_structure(m, e);
      CHECK(s.reps[0] == e);
      CHECK(s.star == s.num_orbits);
      const int rsize = static_cast<int>(s.R.size());
      // Freeness and orbit-preservation of the left H-action on R.
      for (int h : s.H.elements)
        for (int i = 0; i < rsize; ++i) {
          const int r = s.R[static_cast<std::size_t>(i)];
          const int hr = m.at(h, r);
          const int pos = s.r_index_of[static_cast<std::size_t>(hr)];
          REQUIRE(pos >= 0);
          CHECK(s.orbit_of[static_cast<std::size_t>(pos)] ==
                s.orbit_of[static_cast<std::size_t>(i)]);
          if (hr == r) CHECK(h == e);
        }
      // The H-action commutes with the right action up to definedness.
      for (int h : s.H.elements)
        for (int i = 0; i < rsize; ++i)
          for (int x = 0; x < m.order; ++x) {
            const int r = s.R[static_cast<std::size_t>(i)];
            const bool rx_in =
                s.r_index_of[static_cast<std::size_t>(m.at(r, x))] >= 0;
            const bool hrx_in =
                s.r_index_of[static_cast<std::size_t>(
                    m.at(m.at(h, r), x))] >= 0;
            CHECK(rx_in == hrx_in);
          }
      // After the faithfulness quotient the monomial embedding exists and
      // recovers H along the base orbit.
      const QuotientDecomposition fq = faithful_r_quotient(m, e);
      const int eq = fq.projection(e);
      const SchutzStructure sq = schutz_structure(fq.quotient, eq);
      const SchutzEmbedding emb = schutz_embedding(sq);
      CHECK(emb.embed.injective);
      for (int h : sq.H.elements)
        CHECK(emb.top_at_base(emb.embed(h)) ==
              sq.H.index_of[static_cast<std::size_t>(h)]);
    }
  }
}
