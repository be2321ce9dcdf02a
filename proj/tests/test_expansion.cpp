// The two-sided expansion: word signatures as the independent oracle, the
// closure-built expansion monoid, aperiodicity of eta's fibers, and the
// stability factorization witness scan.

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "mlab/catalog.hpp"
#include "mlab/core.hpp"
#include "mlab/expansion.hpp"
#include "mlab/families.hpp"
#include "mlab/greens.hpp"

#include "helpers.hpp"

using namespace mlab;
using namespace mlab::expansion;

namespace {

using Gens = std::vector<std::pair<char, int>>;

Gens full_generators(const FiniteMonoid& m) {
  Gens gens;
  for (int x = 0; x < m.order; ++x)
    if (x != m.identity)
      gens.emplace_back(static_cast<char>('a' + gens.size()), x);
  if (gens.empty()) gens.emplace_back('a', m.identity);
  return gens;
}

// Every distinct signature reachable by words of length <= cap.
std::set<ExpansionElement> signature_universe(const FiniteMonoid& m,
                                              const Gens& gens, int cap) {
  std::set<ExpansionElement> seen;
  std::vector<std::string> layer = {""};
  seen.insert(word_signature(m, gens, ""));
  for (int len = 1; len <= cap; ++len) {
    std::vector<std::string> next;
    for (const std::string& w : layer)
      for (const auto& [letter, elem] : gens) {
        (void)elem;
        next.push_back(w + letter);
        seen.insert(word_signature(m, gens, next.back()));
      }
    layer = std::move(next);
  }
  return seen;
}

std::string random_word(const Gens& gens, int max_len) {
  const int len = pick(0, max_len);
  std::string w;
  for (int i = 0; i < len; ++i)
    w += gens[static_cast<std::size_t>(pick(
                  0, static_cast<int>(gens.size()) - 1))]
             .first;
  return w;
}

}  // namespace

TEST_CASE("word signatures enumerate factorizations") {
  const FiniteMonoid z2 = cyclic_group(2).monoid;
  const Gens gens = {{'a', 1}};

  const ExpansionElement empty = word_signature(z2, gens, "");
  CHECK(empty.m == 0);
  CHECK(empty.F == std::vector<std::pair<int, int>>{{0, 0}});

  const ExpansionElement a = word_signature(z2, gens, "a");
  CHECK(a.m == 1);
  CHECK(a.F == std::vector<std::pair<int, int>>{{0, 1}, {1, 0}});

  // a^3 collapses onto a; a^2 stays distinct from the empty word.
  CHECK(word_signature(z2, gens, "aaa") == a);
  const ExpansionElement aa = word_signature(z2, gens, "aa");
  CHECK(aa.m == 0);
  CHECK(aa.F == std::vector<std::pair<int, int>>{{0, 0}, {1, 1}});
  CHECK_FALSE(aa == empty);

  CHECK_THROWS_MATCHES(word_signature(z2, gens, "ab"), MlabError,
                       ErrorMatcher(ErrorKind::unknown_letter));
}

TEST_CASE("generator lists are validated") {
  const FiniteMonoid z2 = cyclic_group(2).monoid;
  const Gens dup = {{'a', 1}, {'a', 0}};
  CHECK_THROWS_MATCHES(word_signature(z2, dup, "a"), MlabError,
                       ErrorMatcher(ErrorKind::bad_argument));
  const Gens range = {{'a', 7}};
  CHECK_THROWS_MATCHES(henckell_expansion(z2, range), MlabError,
                       ErrorMatcher(ErrorKind::bad_argument));
}

TEST_CASE("the trivial monoid expands to itself") {
  const FiniteMonoid one = trivial_monoid();
  const Expansion e = henckell_expansion(one, {{'a', 0}});
  CHECK(e.exp.order == 1);
  CHECK(e.eta.surjective);
}

TEST_CASE("the two-element group expands to order three") {
  const FiniteMonoid z2 = cyclic_group(2).monoid;
  const Gens gens = {{'a', 1}};
  const Expansion e = henckell_expansion(z2, gens);
  REQUIRE(e.exp.order == 3);
  CHECK(e.eta.surjective);

  // The elements are exactly the signatures of words up to length 8.
  const auto universe = signature_universe(z2, gens, 8);
  const std::set<ExpansionElement> built(e.elements.begin(), e.elements.end());
  CHECK(built == universe);

  // a^2 maps back onto the identity of the base; a^3 equals a upstairs.
  const ExpansionElement sig_a = word_signature(z2, gens, "a");
  const ExpansionElement sig_aa = word_signature(z2, gens, "aa");
  int idx_a = -1, idx_aa = -1;
  for (int i = 0; i < 3; ++i) {
    if (e.elements[static_cast<std::size_t>(i)] == sig_a) idx_a = i;
    if (e.elements[static_cast<std::size_t>(i)] == sig_aa) idx_aa = i;
  }
  REQUIRE(idx_a >= 0);
  REQUIRE(idx_aa >= 0);
  CHECK(e.eta(idx_aa) == 0);
  CHECK(e.eta(idx_a) == 1);
  CHECK(e.exp.at(idx_aa, idx_a) == idx_a);  // a^3 ≡ a
  CHECK(e.gen_lift == std::vector<int>{idx_a});
}

TEST_CASE("the adjoined left-zero pair expands faithfully") {
  const FiniteSemigroup lz = left_zero(2);
  const FiniteMonoid m = lz.monoid;  // identity adjoined at index 2
  const Gens gens = {{'a', 0}, {'b', 1}};
  const Expansion e = henckell_expansion(m, gens);
  CHECK(e.eta.surjective);

  const auto universe = signature_universe(m, gens, 6);
  const std::set<ExpansionElement> built(e.elements.begin(), e.elements.end());
  CHECK(built == universe);

  // Products in the table agree with concatenation of witness words.
  const std::vector<std::string> words = {"",  "a",  "b",  "ab",
                                          "ba", "aab", "bba"};
  for (const std::string& u : words)
    for (const std::string& v : words) {
      const ExpansionElement su = word_signature(m, gens, u);
      const ExpansionElement sv = word_signature(m, gens, v);
      const ExpansionElement suv = word_signature(m, gens, u + v);
      int iu = -1, iv = -1, iuv = -1;
      for (int i = 0; i < e.exp.order; ++i) {
        if (e.elements[static_cast<std::size_t>(i)] == su) iu = i;
        if (e.elements[static_cast<std::size_t>(i)] == sv) iv = i;
        if (e.elements[static_cast<std::size_t>(i)] == suv) iuv = i;
      }
      REQUIRE(iu >= 0);
      REQUIRE(iv >= 0);
      REQUIRE(iuv >= 0);
      CHECK(e.exp.at(iu, iv) == iuv);
    }
}

TEST_CASE("expansion construction guards its inputs") {
  const FiniteMonoid z4 = cyclic_group(4).monoid;
  CHECK_THROWS_MATCHES(henckell_expansion(z4, {{'a', 2}}), MlabError,
                       ErrorMatcher(ErrorKind::generators_dont_generate));

  Limits tight = default_limits();
  tight.max_order = 2;
  const FiniteMonoid m = left_zero(2).monoid;
  CHECK_THROWS_MATCHES(
      henckell_expansion(m, {{'a', 0}, {'b', 1}}, tight), MlabError,
      ErrorMatcher(ErrorKind::size_limit_exceeded));
}

TEST_CASE("signature products agree with concatenation on random words") {
  std::vector<FiniteMonoid> bases;
  for (int n = 1; n <= 4; ++n)
    for (const FiniteMonoid& m : cat::enumerate_monoids(n)) bases.push_back(m);
  int trials = 0;
  while (trials < 200) {
    const FiniteMonoid& m = bases[static_cast<std::size_t>(
        pick(0, static_cast<int>(bases.size()) - 1))];
    const Gens gens = full_generators(m);
    const std::string w1 = random_word(gens, 6);
    const std::string w2 = random_word(gens, 6);
    const ExpansionElement lhs = word_signature(m, gens, w1 + w2);
    const ExpansionElement rhs = signature_product(
        m, word_signature(m, gens, w1), word_signature(m, gens, w2));
    CHECK(lhs == rhs);
    ++trials;
  }
}

TEST_CASE("expansion invariants hold across the order-3 catalog") {
  for (const FiniteMonoid& m : cat::enumerate_monoids(3)) {
    CAPTURE(m.table);
    const Gens gens = full_generators(m);
    const Expansion e = henckell_expansion(m, gens);
    CHECK(e.eta.surjective);
    const AperiodicMorphismReport rep = is_aperiodic_morphism(e.eta);
    CHECK(rep.all_aperiodic);
    for (int i = 0; i < e.exp.order; ++i) {
      const ExpansionElement& el = e.elements[static_cast<std::size_t>(i)];
      CHECK(e.eta(i) == el.m);
      bool left = false, right = false;
      for (const auto& [u, v] : el.F) {
        CHECK(m.at(u, v) == el.m);
        if (u == m.identity && v == el.m) left = true;
        if (u == el.m && v == m.identity) right = true;
      }
      CHECK(left);
      CHECK(right);
    }
  }
}

TEST_CASE("aperiodic-morphism fibers are classified correctly") {
  // Identity on a band: every fiber is a singleton.
  const FiniteMonoid chain = chain_semilattice(3).monoid;
  std::vector<int> idmap = {0, 1, 2};
  const AperiodicMorphismReport idrep =
      is_aperiodic_morphism(make_homomorphism(chain, chain, idmap));
  CHECK(idrep.all_aperiodic);
  CHECK(idrep.fibers.size() == 3);

  // eta of the two-element group's expansion is aperiodic.
  const Expansion e =
      henckell_expansion(cyclic_group(2).monoid, {{'a', 1}});
  const AperiodicMorphismReport erep = is_aperiodic_morphism(e.eta);
  CHECK(erep.all_aperiodic);
  REQUIRE(erep.fibers.size() == 1);
  CHECK(erep.fibers[0].fiber.size() == 2);  // the empty class and a^2's class

  // The mod-2 map on Z/4 has a group fiber: not an aperiodic morphism.
  std::vector<int> mod2 = {0, 1, 0, 1};
  const Homomorphism proj = make_homomorphism(
      cyclic_group(4).monoid, cyclic_group(2).monoid, mod2);
  const AperiodicMorphismReport prep = is_aperiodic_morphism(proj);
  CHECK_FALSE(prep.all_aperiodic);
  REQUIRE(prep.fibers.size() == 1);
  CHECK(prep.fibers[0].fiber == std::vector<int>{0, 2});
  CHECK_FALSE(prep.fibers[0].aperiodic);
}

TEST_CASE("factorization witnesses for the two-element group") {
  const FiniteMonoid z2 = cyclic_group(2).monoid;
  const Gens gens = {{'a', 1}};
  const FactorizationResult r = factorization_witness(z2, gens, "a", 4);

  CHECK(r.chosen.k1 == 0);
  CHECK(r.chosen.x == "a");
  CHECK(r.chosen.y.empty());
  CHECK(r.chosen.k2 == 3);

  REQUIRE(r.all.size() == 4);
  bool has_2_1 = false;
  for (const FactorizationWitness& w : r.all) {
    CHECK(w.k1 + w.k2 + 1 == 4);
    CHECK(w.x + w.y == "a");
    if (w.k1 == 2 && w.x == "a" && w.y.empty() && w.k2 == 1) has_2_1 = true;
  }
  CHECK(has_2_1);

  // The base element 1 is a group element of Z/2, as the k1 >= 2 witness
  // predicts.
  const greens::Classification cls =
      greens::classify(as_semigroup(z2));
  CHECK(std::find(cls.group_elements.begin(), cls.group_elements.end(), 1) !=
        cls.group_elements.end());
}

TEST_CASE("factorization over the trivial monoid picks the first cut") {
  const FiniteMonoid one = trivial_monoid();
  const Gens gens = {{'a', 0}, {'b', 0}};
  const FactorizationResult r = factorization_witness(one, gens, "ab", 4);
  CHECK(r.chosen.k1 == 0);
  CHECK(r.chosen.x == "ab");
  CHECK(r.chosen.y.empty());
  CHECK(r.chosen.k2 == 3);
}

TEST_CASE("factorization hypothesis checks signatures, not just images") {
  const FiniteMonoid z3 = cyclic_group(3).monoid;
  const Gens gens = {{'a', 1}};
  // [a^2] and [a^6] differ in Z/3 already, so k = 6 fails the hypothesis.
  CHECK_THROWS_MATCHES(factorization_witness(z3, gens, "a", 6), MlabError,
                       ErrorMatcher(ErrorKind::hypothesis_fails));

  // k = 8 keeps w^2 and w^k congruent; witnesses follow the mod-3 pattern.
  const FactorizationResult r = factorization_witness(z3, gens, "a", 8);
  CHECK(r.chosen.k1 == 0);
  CHECK(r.chosen.x == "a");
  CHECK(r.chosen.k2 == 7);
  CHECK(r.all.size() == 6);
  for (const FactorizationWitness& w : r.all) {
    CHECK(w.k1 + w.k2 + 1 == 8);
    if (w.x == "a") {
      CHECK(w.k1 % 3 == 0);
      CHECK(w.k2 % 3 == 1);
    } else {
      CHECK(w.k1 % 3 == 1);
      CHECK(w.k2 % 3 == 0);
    }
  }

  // An aperiodic target never satisfies the stability hypothesis.
  const FiniteMonoid mon = monogenic(2, 1).monoid;
  CHECK_THROWS_MATCHES(factorization_witness(mon, {{'a', 0}}, "a", 4),
                       MlabError, ErrorMatcher(ErrorKind::hypothesis_fails));

  // k below 4 is rejected outright.
  CHECK_THROWS_MATCHES(factorization_witness(z3, gens, "a", 3), MlabError,
                       ErrorMatcher(ErrorKind::bad_argument));
}
