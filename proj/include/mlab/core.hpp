#pragma once

// Validated finite monoids, semigroups, groups, homomorphisms, congruences,
// monoid actions, and the basic constructions: direct products, submonoid
// closures, quotients, kernel congruences, and brute-force isomorphism.
//
// Conventions used throughout the library:
//   * Elements are dense 0-based indices into a row-major Cayley table.
//   * All constructions re-index canonically by first-seen order under a
//     lexicographic generator BFS, so outputs are deterministic.
//   * Composition is apply-left-then-right: compose(f,g) applies f first.
//   * Exhaustive searches return the lexicographically least witness.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mlab/error.hpp"

namespace mlab {

// Configurable caps.  Caps are configuration, not constants: every operation
// that can blow up takes a Limits argument (defaulted).
struct Limits {
  // Largest order of any constructed monoid table.
  int max_order = 4096;
  // is_isomorphic refuses orders above this bound.
  int iso_order_bound = 16;
  // Fiber-product budget for lift/splitting searches.
  long long search_budget = 2'000'000;
  // Subgroup enumeration refuses groups above this order.
  int subgroup_order_cap = 64;
  // Full O(n^3) associativity scan up to this order; above it, validation
  // uses a deterministic strided sample of triples plus full identity laws.
  int assoc_full_scan_cap = 1024;
};

inline const Limits& default_limits() {
  static const Limits limits{};
  return limits;
}

// ---------------------------------------------------------------------------
// Carrier types
// ---------------------------------------------------------------------------

struct FiniteMonoid {
  int order = 1;
  int identity = 0;
  std::vector<int> table = {0};  // row-major: table[i*order + j] = i*j

  int at(int i, int j) const {
    return table[static_cast<std::size_t>(i) * order + j];
  }
  bool operator==(const FiniteMonoid&) const = default;
};

// A finite semigroup is carried as a monoid with an adjoined-identity flag.
// When identity_adjoined is true the identity is a synthetic element (always
// the last index) and the "original" elements are 0..order-2.
struct FiniteSemigroup {
  FiniteMonoid monoid;
  bool identity_adjoined = false;

  int original_count() const {
    return identity_adjoined ? monoid.order - 1 : monoid.order;
  }
  bool is_original(int i) const { return i < original_count(); }
  bool operator==(const FiniteSemigroup&) const = default;
};

struct FiniteGroup {
  FiniteMonoid monoid;
  std::vector<int> inverse;  // inverse[i]*i = i*inverse[i] = identity

  int order() const { return monoid.order; }
  int identity() const { return monoid.identity; }
  int at(int i, int j) const { return monoid.at(i, j); }
  int inv(int i) const { return inverse[static_cast<std::size_t>(i)]; }
  bool operator==(const FiniteGroup&) const = default;
};

struct Homomorphism {
  FiniteMonoid source;
  FiniteMonoid target;
  std::vector<int> map;  // one target index per source element
  bool unit_preserving = true;
  bool surjective = false;
  bool injective = false;

  int operator()(int s) const { return map[static_cast<std::size_t>(s)]; }
};

struct Congruence {
  FiniteMonoid monoid;
  std::vector<int> class_of;  // normalized: classes numbered by first element
  int num_classes = 0;
};

// A right action of a finite monoid on a finite set by total maps.
struct MonoidAction {
  FiniteMonoid monoid;
  int set_size = 1;
  std::vector<int> act;  // act[q*order + m] = q . m

  int at(int q, int m) const {
    return act[static_cast<std::size_t>(q) * monoid.order + m];
  }
};

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

namespace detail {

// Associativity scan.  Full O(n^3) scan up to `full_cap`; above it, a
// deterministic strided sample (~full_cap^3 triples) plus all triples that
// involve the identity.  The lexicographically first violating triple found
// is reported.
inline void check_associativity(const FiniteMonoid& m, int full_cap) {
  const int n = m.order;
  if (n <= full_cap) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const int ij = m.at(i, j);
        for (int k = 0; k < n; ++k)
          if (m.at(ij, k) != m.at(i, m.at(j, k)))
            fail(ErrorKind::non_associative, "(i*j)*k != i*(j*k)", i, j, k);
      }
    return;
  }
  const long long stride =
      std::max<long long>(1, (static_cast<long long>(n) * n * n) /
                                 (static_cast<long long>(full_cap) * full_cap *
                                  full_cap));
  for (long long t = 0; t < static_cast<long long>(n) * n * n; t += stride) {
    const int i = static_cast<int>(t / (static_cast<long long>(n) * n));
    const int j = static_cast<int>((t / n) % n);
    const int k = static_cast<int>(t % n);
    if (m.at(m.at(i, j), k) != m.at(i, m.at(j, k)))
      fail(ErrorKind::non_associative, "(i*j)*k != i*(j*k) (sampled scan)", i,
           j, k);
  }
}

inline void check_table_shape(int order, const std::vector<int>& table) {
  if (order < 1) fail(ErrorKind::malformed_table, "order must be positive");
  if (table.size() != static_cast<std::size_t>(order) * order)
    fail(ErrorKind::malformed_table, "table is not order x order",
         static_cast<long long>(table.size()));
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) {
      const int v = table[static_cast<std::size_t>(i) * order + j];
      if (v < 0 || v >= order)
        fail(ErrorKind::malformed_table, "entry out of range", i, j, v);
    }
}

}  // namespace detail

inline FiniteMonoid validate_monoid(int order, std::vector<int> table,
                                    int identity,
                                    const Limits& limits = default_limits()) {
  detail::check_table_shape(order, table);
  if (order > limits.max_order)
    fail(ErrorKind::size_limit_exceeded, "monoid order exceeds cap", order,
         limits.max_order);
  if (identity < 0 || identity >= order)
    fail(ErrorKind::bad_identity, "identity index out of range", identity);
  FiniteMonoid m{order, identity, std::move(table)};
  for (int i = 0; i < order; ++i)
    if (m.at(identity, i) != i || m.at(i, identity) != i)
      fail(ErrorKind::bad_identity, "identity laws fail at element", i);
  detail::check_associativity(m, limits.assoc_full_scan_cap);
  return m;
}

inline FiniteMonoid validate_monoid(const std::vector<std::vector<int>>& rows,
                                    int identity,
                                    const Limits& limits = default_limits()) {
  const int order = static_cast<int>(rows.size());
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(order) * order);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != order)
      fail(ErrorKind::malformed_table, "table is not square",
           static_cast<long long>(row.size()), order);
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return validate_monoid(order, std::move(flat), identity, limits);
}

inline FiniteGroup validate_group(const FiniteMonoid& m) {
  std::vector<int> inverse(static_cast<std::size_t>(m.order), -1);
  for (int i = 0; i < m.order; ++i) {
    for (int j = 0; j < m.order; ++j)
      if (m.at(i, j) == m.identity && m.at(j, i) == m.identity) {
        inverse[static_cast<std::size_t>(i)] = j;
        break;
      }
    if (inverse[static_cast<std::size_t>(i)] < 0)
      fail(ErrorKind::not_a_group, "element has no two-sided inverse", i);
  }
  return FiniteGroup{m, std::move(inverse)};
}

// Wraps an associative table (no identity required) as a FiniteSemigroup:
// if some element already acts as a two-sided identity it is used, otherwise
// a synthetic identity is adjoined at the last index.
inline FiniteSemigroup semigroup_from_table(
    int n, const std::vector<int>& table,
    const Limits& limits = default_limits()) {
  detail::check_table_shape(n, table);
  FiniteMonoid probe{n, 0, table};
  detail::check_associativity(probe, limits.assoc_full_scan_cap);
  for (int e = 0; e < n; ++e) {
    bool is_id = true;
    for (int i = 0; i < n && is_id; ++i)
      is_id = probe.at(e, i) == i && probe.at(i, e) == i;
    if (is_id)
      return FiniteSemigroup{validate_monoid(n, table, e, limits), false};
  }
  const int order = n + 1;
  if (order > limits.max_order)
    fail(ErrorKind::size_limit_exceeded, "semigroup carrier exceeds cap",
         order, limits.max_order);
  std::vector<int> carrier(static_cast<std::size_t>(order) * order);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j)
      carrier[static_cast<std::size_t>(i) * order + j] =
          (i == n) ? j : (j == n) ? i : table[static_cast<std::size_t>(i) * n + j];
  return FiniteSemigroup{validate_monoid(order, std::move(carrier), n, limits),
                         true};
}

inline FiniteSemigroup semigroup_from_table(
    const std::vector<std::vector<int>>& rows,
    const Limits& limits = default_limits()) {
  const int n = static_cast<int>(rows.size());
  std::vector<int> flat;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n)
      fail(ErrorKind::malformed_table, "table is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return semigroup_from_table(n, flat, limits);
}

inline FiniteSemigroup as_semigroup(const FiniteMonoid& m) {
  return FiniteSemigroup{m, false};
}

// ---------------------------------------------------------------------------
// Homomorphisms
// ---------------------------------------------------------------------------

namespace detail {

inline void check_map_shape(const FiniteMonoid& src, const FiniteMonoid& tgt,
                            const std::vector<int>& map) {
  if (map.size() != static_cast<std::size_t>(src.order))
    fail(ErrorKind::bad_argument, "map length differs from source order",
         static_cast<long long>(map.size()), src.order);
  for (int s = 0; s < src.order; ++s)
    if (map[static_cast<std::size_t>(s)] < 0 ||
        map[static_cast<std::size_t>(s)] >= tgt.order)
      fail(ErrorKind::bad_argument, "map value out of target range", s,
           map[static_cast<std::size_t>(s)]);
}

inline void fill_flags(Homomorphism& h) {
  std::vector<char> hit(static_cast<std::size_t>(h.target.order), 0);
  for (int v : h.map) hit[static_cast<std::size_t>(v)] = 1;
  const int image =
      static_cast<int>(std::count(hit.begin(), hit.end(), char(1)));
  h.surjective = image == h.target.order;
  h.injective = image == h.source.order;
  h.unit_preserving = h.map[static_cast<std::size_t>(h.source.identity)] ==
                      h.target.identity;
}

}  // namespace detail

// A full monoid homomorphism: multiplicative on all pairs, identity mapped to
// identity.
inline Homomorphism make_homomorphism(const FiniteMonoid& src,
                                      const FiniteMonoid& tgt,
                                      std::vector<int> map) {
  detail::check_map_shape(src, tgt, map);
  for (int s = 0; s < src.order; ++s)
    for (int t = 0; t < src.order; ++t)
      if (map[static_cast<std::size_t>(src.at(s, t))] !=
          tgt.at(map[static_cast<std::size_t>(s)],
                 map[static_cast<std::size_t>(t)]))
        fail(ErrorKind::not_multiplicative, "map(s*t) != map(s)*map(t)", s, t);
  if (map[static_cast<std::size_t>(src.identity)] != tgt.identity)
    fail(ErrorKind::identity_not_preserved, "identity image is not identity",
         map[static_cast<std::size_t>(src.identity)]);
  Homomorphism h{src, tgt, std::move(map)};
  detail::fill_flags(h);
  return h;
}

// Multiplicative on all pairs but the identity image is unconstrained (a
// homomorphism of the underlying semigroups between monoid carriers).
inline Homomorphism make_mult_homomorphism(const FiniteMonoid& src,
                                           const FiniteMonoid& tgt,
                                           std::vector<int> map) {
  detail::check_map_shape(src, tgt, map);
  for (int s = 0; s < src.order; ++s)
    for (int t = 0; t < src.order; ++t)
      if (map[static_cast<std::size_t>(src.at(s, t))] !=
          tgt.at(map[static_cast<std::size_t>(s)],
                 map[static_cast<std::size_t>(t)]))
        fail(ErrorKind::not_multiplicative, "map(s*t) != map(s)*map(t)", s, t);
  Homomorphism h{src, tgt, std::move(map)};
  detail::fill_flags(h);
  return h;
}

// A semigroup homomorphism between flagged carriers: multiplicative on
// original elements, originals may not land on a synthetic adjoined identity,
// and a synthetic source identity maps to the target identity (bookkeeping).
// A genuine source identity is an original like any other — its image only
// has to be idempotent, which multiplicativity already forces.
inline Homomorphism make_semigroup_homomorphism(const FiniteSemigroup& src,
                                                const FiniteSemigroup& tgt,
                                                std::vector<int> map) {
  detail::check_map_shape(src.monoid, tgt.monoid, map);
  if (src.identity_adjoined &&
      map[static_cast<std::size_t>(src.monoid.identity)] !=
          tgt.monoid.identity)
    fail(ErrorKind::identity_not_preserved,
         "adjoined identity must map to the target identity");
  for (int s = 0; s < src.original_count(); ++s)
    if (tgt.identity_adjoined && !tgt.is_original(map[static_cast<std::size_t>(s)]))
      fail(ErrorKind::codomain_mismatch,
           "original element maps to the adjoined identity", s);
  for (int s = 0; s < src.original_count(); ++s)
    for (int t = 0; t < src.original_count(); ++t)
      if (map[static_cast<std::size_t>(src.monoid.at(s, t))] !=
          tgt.monoid.at(map[static_cast<std::size_t>(s)],
                        map[static_cast<std::size_t>(t)]))
        fail(ErrorKind::not_multiplicative, "map(s*t) != map(s)*map(t)", s, t);
  Homomorphism h{src.monoid, tgt.monoid, std::move(map)};
  detail::fill_flags(h);
  if (src.identity_adjoined || tgt.identity_adjoined) {
    // The flags describe the carrier map; adjoined-identity slots are
    // bookkeeping and must not count toward the image.
    std::vector<char> hit(static_cast<std::size_t>(tgt.monoid.order), 0);
    int image = 0;
    bool collision = false;
    for (int s = 0; s < src.original_count(); ++s) {
      char& c = hit[static_cast<std::size_t>(h.map[static_cast<std::size_t>(s)])];
      if (c)
        collision = true;
      else {
        c = 1;
        ++image;
      }
    }
    h.surjective = image == tgt.original_count();
    h.injective = !collision;
  }
  return h;
}

// Apply-left-then-right composition: compose(f,g).map[s] = g.map[f.map[s]].
inline Homomorphism compose(const Homomorphism& f, const Homomorphism& g) {
  if (!(f.target == g.source))
    fail(ErrorKind::domain_mismatch,
         "compose: target of first differs from source of second");
  std::vector<int> map(static_cast<std::size_t>(f.source.order));
  for (int s = 0; s < f.source.order; ++s)
    map[static_cast<std::size_t>(s)] = g.map[static_cast<std::size_t>(
        f.map[static_cast<std::size_t>(s)])];
  Homomorphism h{f.source, g.target, std::move(map)};
  detail::fill_flags(h);
  return h;
}

inline Homomorphism identity_homomorphism(const FiniteMonoid& m) {
  std::vector<int> map(static_cast<std::size_t>(m.order));
  std::iota(map.begin(), map.end(), 0);
  return make_homomorphism(m, m, std::move(map));
}

// ---------------------------------------------------------------------------
// Constructions
// ---------------------------------------------------------------------------

struct ProductDecomposition {
  FiniteMonoid product;  // pair (a,b) encoded as a*b_order + b
  Homomorphism proj1;
  Homomorphism proj2;
};

inline ProductDecomposition direct_product(
    const FiniteMonoid& a, const FiniteMonoid& b,
    const Limits& limits = default_limits()) {
  const long long order = static_cast<long long>(a.order) * b.order;
  if (order > limits.max_order)
    fail(ErrorKind::size_limit_exceeded, "direct product exceeds order cap",
         order, limits.max_order);
  const int n = static_cast<int>(order);
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int ai = i / b.order, bi = i % b.order;
      const int aj = j / b.order, bj = j % b.order;
      table[static_cast<std::size_t>(i) * n + j] =
          a.at(ai, aj) * b.order + b.at(bi, bj);
    }
  FiniteMonoid product = validate_monoid(
      n, std::move(table), a.identity * b.order + b.identity, limits);
  std::vector<int> p1(static_cast<std::size_t>(n)), p2(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    p1[static_cast<std::size_t>(i)] = i / b.order;
    p2[static_cast<std::size_t>(i)] = i % b.order;
  }
  Homomorphism proj1 = make_homomorphism(product, a, std::move(p1));
  Homomorphism proj2 = make_homomorphism(product, b, std::move(p2));
  return ProductDecomposition{std::move(product), std::move(proj1),
                              std::move(proj2)};
}

struct Submonoid {
  FiniteMonoid monoid;        // re-indexed in first-seen BFS order
  std::vector<int> elements;  // sub index -> parent index (elements[0] = 1)
  std::vector<int> index_of;  // parent index -> sub index, or -1
  Homomorphism inclusion;     // sub -> parent, injective
};

// Smallest submonoid containing the identity and the generators, re-indexed
// by first-seen order under right-multiplication BFS: identity first, then
// the generators in the given order, then their products.
inline Submonoid submonoid_closure(const FiniteMonoid& m,
                                   const std::vector<int>& gens) {
  std::vector<int> elements{m.identity};
  std::vector<int> index_of(static_cast<std::size_t>(m.order), -1);
  index_of[static_cast<std::size_t>(m.identity)] = 0;
  std::vector<int> gen_list;
  for (int g : gens) {
    if (g < 0 || g >= m.order)
      fail(ErrorKind::bad_argument, "generator index out of range", g);
    if (index_of[static_cast<std::size_t>(g)] < 0) {
      index_of[static_cast<std::size_t>(g)] =
          static_cast<int>(elements.size());
      elements.push_back(g);
    }
    gen_list.push_back(g);
  }
  for (std::size_t pos = 0; pos < elements.size(); ++pos)
    for (int g : gen_list) {
      const int next = m.at(elements[pos], g);
      if (index_of[static_cast<std::size_t>(next)] < 0) {
        index_of[static_cast<std::size_t>(next)] =
            static_cast<int>(elements.size());
        elements.push_back(next);
      }
    }
  const int n = static_cast<int>(elements.size());
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int prod = m.at(elements[i], elements[j]);
      const int idx = index_of[static_cast<std::size_t>(prod)];
      if (idx < 0)
        fail(ErrorKind::internal_error, "closure is not closed", i, j);
      table[static_cast<std::size_t>(i) * n + j] = idx;
    }
  FiniteMonoid sub = validate_monoid(n, std::move(table), 0);
  Homomorphism inclusion = make_homomorphism(sub, m, elements);
  return Submonoid{std::move(sub), elements, std::move(index_of),
                   std::move(inclusion)};
}

// ---------------------------------------------------------------------------
// Congruences, quotients, actions
// ---------------------------------------------------------------------------

namespace detail {

// Renumbers class labels by first occurrence so equal partitions get equal
// encodings.
inline std::pair<std::vector<int>, int> normalize_classes(
    const std::vector<int>& raw) {
  std::map<int, int> renumber;
  std::vector<int> out(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    auto [it, inserted] =
        renumber.emplace(raw[i], static_cast<int>(renumber.size()));
    out[i] = it->second;
  }
  return {std::move(out), static_cast<int>(renumber.size())};
}

}  // namespace detail

inline Congruence make_congruence(const FiniteMonoid& m,
                                  const std::vector<int>& class_of_raw) {
  if (class_of_raw.size() != static_cast<std::size_t>(m.order))
    fail(ErrorKind::bad_argument, "class assignment length mismatch");
  auto [class_of, num_classes] = detail::normalize_classes(class_of_raw);
  // Compatibility: b ~ b' implies a*b ~ a*b' and b*a ~ b'*a for all a.
  for (int b = 0; b < m.order; ++b)
    for (int b2 = b + 1; b2 < m.order; ++b2) {
      if (class_of[static_cast<std::size_t>(b)] !=
          class_of[static_cast<std::size_t>(b2)])
        continue;
      for (int a = 0; a < m.order; ++a) {
        if (class_of[static_cast<std::size_t>(m.at(a, b))] !=
            class_of[static_cast<std::size_t>(m.at(a, b2))])
          fail(ErrorKind::incompatible_partition,
               "left products split a class", a, b, b2);
        if (class_of[static_cast<std::size_t>(m.at(b, a))] !=
            class_of[static_cast<std::size_t>(m.at(b2, a))])
          fail(ErrorKind::incompatible_partition,
               "right products split a class", b, b2, a);
      }
    }
  return Congruence{m, std::move(class_of), num_classes};
}

struct QuotientDecomposition {
  FiniteMonoid quotient;
  Homomorphism projection;
};

inline QuotientDecomposition quotient_by_congruence(const FiniteMonoid& m,
                                                    const Congruence& c) {
  if (!(c.monoid == m))
    fail(ErrorKind::domain_mismatch, "congruence is over a different monoid");
  const int n = c.num_classes;
  std::vector<int> rep(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < m.order; ++i)
    if (rep[static_cast<std::size_t>(c.class_of[static_cast<std::size_t>(i)])] < 0)
      rep[static_cast<std::size_t>(c.class_of[static_cast<std::size_t>(i)])] = i;
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      table[static_cast<std::size_t>(i) * n + j] =
          c.class_of[static_cast<std::size_t>(m.at(
              rep[static_cast<std::size_t>(i)], rep[static_cast<std::size_t>(j)]))];
  FiniteMonoid quotient = validate_monoid(
      n, std::move(table),
      c.class_of[static_cast<std::size_t>(m.identity)]);
  Homomorphism projection = make_homomorphism(m, quotient, c.class_of);
  return QuotientDecomposition{std::move(quotient), std::move(projection)};
}

inline MonoidAction make_action(const FiniteMonoid& m, int set_size,
                                std::vector<int> act) {
  if (set_size < 1)
    fail(ErrorKind::bad_argument, "action set must be nonempty");
  if (act.size() != static_cast<std::size_t>(set_size) * m.order)
    fail(ErrorKind::bad_argument, "action table has wrong shape");
  MonoidAction a{m, set_size, std::move(act)};
  for (int q = 0; q < set_size; ++q) {
    const int v = a.at(q, m.identity);
    if (v < 0 || v >= set_size || v != q)
      fail(ErrorKind::validation_error, "identity must act trivially", q, v);
  }
  for (int q = 0; q < set_size; ++q)
    for (int x = 0; x < m.order; ++x) {
      if (a.at(q, x) < 0 || a.at(q, x) >= set_size)
        fail(ErrorKind::validation_error, "action value out of range", q, x);
      for (int y = 0; y < m.order; ++y)
        if (a.at(a.at(q, x), y) != a.at(q, m.at(x, y)))
          fail(ErrorKind::validation_error, "(q.x).y != q.(x*y)", q, x, y);
    }
  return a;
}

// Two elements are identified iff they act identically on the action's set.
inline Congruence kernel_congruence_of_action(const FiniteMonoid& m,
                                              const MonoidAction& act) {
  if (!(act.monoid == m))
    fail(ErrorKind::domain_mismatch, "action is over a different monoid");
  std::map<std::vector<int>, int> profile_class;
  std::vector<int> raw(static_cast<std::size_t>(m.order));
  for (int x = 0; x < m.order; ++x) {
    std::vector<int> profile(static_cast<std::size_t>(act.set_size));
    for (int q = 0; q < act.set_size; ++q)
      profile[static_cast<std::size_t>(q)] = act.at(q, x);
    auto [it, inserted] = profile_class.emplace(
        std::move(profile), static_cast<int>(profile_class.size()));
    raw[static_cast<std::size_t>(x)] = it->second;
  }
  return make_congruence(m, raw);
}

// ---------------------------------------------------------------------------
// Element profiles and isomorphism search
// ---------------------------------------------------------------------------

struct CyclicProfile {
  int index = 1;   // least i >= 1 with x^i = x^(i+period)
  int period = 1;  // least such period
  bool operator==(const CyclicProfile&) const = default;
};

inline CyclicProfile cyclic_profile(const FiniteMonoid& m, int x) {
  std::map<int, int> seen_at;  // power value -> exponent
  int value = x;
  int exponent = 1;
  while (true) {
    auto [it, inserted] = seen_at.emplace(value, exponent);
    if (!inserted) return CyclicProfile{it->second, exponent - it->second};
    value = m.at(value, x);
    ++exponent;
  }
}

inline int monoid_power(const FiniteMonoid& m, int x, long long k) {
  if (k < 0) fail(ErrorKind::bad_argument, "negative power", k);
  int acc = m.identity;
  int base = x;
  while (k > 0) {
    if (k & 1) acc = m.at(acc, base);
    base = m.at(base, base);
    k >>= 1;
  }
  return acc;
}

inline std::vector<int> idempotents_of(const FiniteMonoid& m) {
  std::vector<int> out;
  for (int i = 0; i < m.order; ++i)
    if (m.at(i, i) == i) out.push_back(i);
  return out;
}

namespace detail {

// Per-element invariants used to prune the isomorphism search: idempotency,
// cyclic index/period, and the sizes of the three principal ideals.
inline std::vector<std::array<int, 6>> element_profiles(const FiniteMonoid& m) {
  std::vector<std::array<int, 6>> out(static_cast<std::size_t>(m.order));
  for (int x = 0; x < m.order; ++x) {
    const CyclicProfile cp = cyclic_profile(m, x);
    std::vector<char> right(static_cast<std::size_t>(m.order), 0),
        left(static_cast<std::size_t>(m.order), 0),
        two(static_cast<std::size_t>(m.order), 0);
    for (int a = 0; a < m.order; ++a) {
      right[static_cast<std::size_t>(m.at(x, a))] = 1;
      left[static_cast<std::size_t>(m.at(a, x))] = 1;
      for (int b = 0; b < m.order; ++b)
        two[static_cast<std::size_t>(m.at(m.at(a, x), b))] = 1;
    }
    out[static_cast<std::size_t>(x)] = {
        m.at(x, x) == x ? 1 : 0,
        cp.index,
        cp.period,
        static_cast<int>(std::count(right.begin(), right.end(), char(1))),
        static_cast<int>(std::count(left.begin(), left.end(), char(1))),
        static_cast<int>(std::count(two.begin(), two.end(), char(1)))};
  }
  return out;
}

inline bool iso_extend(const FiniteMonoid& a, const FiniteMonoid& b,
                       const std::vector<std::array<int, 6>>& pa,
                       const std::vector<std::array<int, 6>>& pb,
                       std::vector<int>& map, std::vector<char>& used,
                       int pos) {
  const int n = a.order;
  if (pos == n) return true;
  if (pos == a.identity) {
    map[static_cast<std::size_t>(pos)] = b.identity;
    // The identity must be free and match; otherwise no isomorphism exists.
    if (used[static_cast<std::size_t>(b.identity)]) return false;
    used[static_cast<std::size_t>(b.identity)] = 1;
    if (iso_extend(a, b, pa, pb, map, used, pos + 1)) return true;
    used[static_cast<std::size_t>(b.identity)] = 0;
    map[static_cast<std::size_t>(pos)] = -1;
    return false;
  }
  for (int img = 0; img < n; ++img) {
    if (used[static_cast<std::size_t>(img)]) continue;
    if (pa[static_cast<std::size_t>(pos)] != pb[static_cast<std::size_t>(img)])
      continue;
    map[static_cast<std::size_t>(pos)] = img;
    used[static_cast<std::size_t>(img)] = 1;
    bool consistent = true;
    for (int j = 0; j <= pos && consistent; ++j) {
      if (map[static_cast<std::size_t>(j)] < 0) continue;
      const int pj = a.at(pos, j), jp = a.at(j, pos);
      if (pj <= pos && map[static_cast<std::size_t>(pj)] >= 0 &&
          map[static_cast<std::size_t>(pj)] !=
              b.at(img, map[static_cast<std::size_t>(j)]))
        consistent = false;
      if (consistent && jp <= pos && map[static_cast<std::size_t>(jp)] >= 0 &&
          map[static_cast<std::size_t>(jp)] !=
              b.at(map[static_cast<std::size_t>(j)], img))
        consistent = false;
    }
    if (consistent && iso_extend(a, b, pa, pb, map, used, pos + 1))
      return true;
    used[static_cast<std::size_t>(img)] = 0;
    map[static_cast<std::size_t>(pos)] = -1;
  }
  return false;
}

}  // namespace detail

// Brute-force isomorphism with element-profile pruning.  Returns the
// lexicographically least witness bijection (as a map array), or nullopt.
// Unequal orders yield nullopt; orders above the configured bound error out.
inline std::optional<Homomorphism> is_isomorphic(
    const FiniteMonoid& a, const FiniteMonoid& b,
    const Limits& limits = default_limits()) {
  if (a.order != b.order) return std::nullopt;
  if (a.order > limits.iso_order_bound)
    fail(ErrorKind::budget_exceeded, "isomorphism search above order bound",
         a.order, limits.iso_order_bound);
  const auto pa = detail::element_profiles(a);
  const auto pb = detail::element_profiles(b);
  {
    auto sa = pa;
    auto sb = pb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  std::vector<int> map(static_cast<std::size_t>(a.order), -1);
  std::vector<char> used(static_cast<std::size_t>(a.order), 0);
  if (!detail::iso_extend(a, b, pa, pb, map, used, 0)) return std::nullopt;
  return make_homomorphism(a, b, std::move(map));
}

inline std::optional<Homomorphism> is_isomorphic(
    const FiniteGroup& a, const FiniteGroup& b,
    const Limits& limits = default_limits()) {
  return is_isomorphic(a.monoid, b.monoid, limits);
}

}  // namespace mlab
