#pragma once

// Green's relations (R, L, J, H), idempotents, maximal subgroups, local
// monoids, and the classification predicates (band, completely regular,
// aperiodic, group elements).

#include <map>
#include <vector>

#include "mlab/core.hpp"

namespace mlab {
namespace greens {

struct GreensStructure {
  FiniteMonoid monoid;
  std::vector<int> r_class_of;
  std::vector<int> l_class_of;
  std::vector<int> j_class_of;
  std::vector<int> h_class_of;
  std::vector<int> idempotents;
  int r_count = 0, l_count = 0, j_count = 0, h_count = 0;
};

namespace detail {

// Principal right ideal aM as a 0/1 membership vector.
inline std::vector<char> right_ideal(const FiniteMonoid& m, int a) {
  std::vector<char> in(static_cast<std::size_t>(m.order), 0);
  for (int x = 0; x < m.order; ++x) in[static_cast<std::size_t>(m.at(a, x))] = 1;
  return in;
}

inline std::vector<char> left_ideal(const FiniteMonoid& m, int a) {
  std::vector<char> in(static_cast<std::size_t>(m.order), 0);
  for (int x = 0; x < m.order; ++x) in[static_cast<std::size_t>(m.at(x, a))] = 1;
  return in;
}

inline std::vector<char> two_sided_ideal(const FiniteMonoid& m, int a) {
  std::vector<char> in(static_cast<std::size_t>(m.order), 0);
  for (int x = 0; x < m.order; ++x) {
    const int xa = m.at(x, a);
    for (int y = 0; y < m.order; ++y) in[static_cast<std::size_t>(m.at(xa, y))] = 1;
  }
  return in;
}

inline std::vector<int> classes_by_key(
    const std::vector<std::vector<char>>& keys, int* count) {
  std::map<std::vector<char>, int> ids;
  std::vector<int> out(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    auto [it, inserted] = ids.emplace(keys[i], static_cast<int>(ids.size()));
    out[i] = it->second;
  }
  auto normalized = mlab::detail::normalize_classes(out);
  *count = normalized.second;
  return normalized.first;
}

}  // namespace detail

inline GreensStructure greens(const FiniteMonoid& m) {
  GreensStructure g;
  g.monoid = m;
  std::vector<std::vector<char>> rkeys, lkeys, jkeys;
  rkeys.reserve(static_cast<std::size_t>(m.order));
  lkeys.reserve(static_cast<std::size_t>(m.order));
  jkeys.reserve(static_cast<std::size_t>(m.order));
  for (int a = 0; a < m.order; ++a) {
    rkeys.push_back(detail::right_ideal(m, a));
    lkeys.push_back(detail::left_ideal(m, a));
    jkeys.push_back(detail::two_sided_ideal(m, a));
  }
  g.r_class_of = detail::classes_by_key(rkeys, &g.r_count);
  g.l_class_of = detail::classes_by_key(lkeys, &g.l_count);
  g.j_class_of = detail::classes_by_key(jkeys, &g.j_count);
  // H = R meet L.
  std::vector<int> hraw(static_cast<std::size_t>(m.order));
  for (int a = 0; a < m.order; ++a)
    hraw[static_cast<std::size_t>(a)] =
        g.r_class_of[static_cast<std::size_t>(a)] * m.order +
        g.l_class_of[static_cast<std::size_t>(a)];
  auto normalized = mlab::detail::normalize_classes(hraw);
  g.h_class_of = normalized.first;
  g.h_count = normalized.second;
  g.idempotents = idempotents_of(m);
  return g;
}

inline bool j_related(const FiniteMonoid& m, int a, int b) {
  return detail::two_sided_ideal(m, a) == detail::two_sided_ideal(m, b);
}

inline bool r_related(const FiniteMonoid& m, int a, int b) {
  return detail::right_ideal(m, a) == detail::right_ideal(m, b);
}

inline bool l_related(const FiniteMonoid& m, int a, int b) {
  return detail::left_ideal(m, a) == detail::left_ideal(m, b);
}

inline std::vector<int> r_class_of_element(const FiniteMonoid& m, int a) {
  const auto key = detail::right_ideal(m, a);
  std::vector<int> out;
  for (int x = 0; x < m.order; ++x)
    if (detail::right_ideal(m, x) == key) out.push_back(x);
  return out;
}

struct MaximalSubgroup {
  FiniteGroup group;          // the H-class of e, re-indexed ascending
  std::vector<int> elements;  // group index -> ambient index
  std::vector<int> index_of;  // ambient index -> group index, or -1
  Homomorphism inclusion;     // multiplicative injection into the ambient
};

// The H-class of an idempotent e as a group with identity e; this equals the
// group of units of the local monoid eMe.
inline MaximalSubgroup maximal_subgroup(const FiniteMonoid& m, int e) {
  if (m.at(e, e) != e)
    fail(ErrorKind::not_idempotent, "maximal subgroup needs an idempotent", e);
  const auto rkey = detail::right_ideal(m, e);
  const auto lkey = detail::left_ideal(m, e);
  std::vector<int> elements;
  for (int x = 0; x < m.order; ++x)
    if (detail::right_ideal(m, x) == rkey && detail::left_ideal(m, x) == lkey)
      elements.push_back(x);
  const int n = static_cast<int>(elements.size());
  std::vector<int> index_of(static_cast<std::size_t>(m.order), -1);
  for (int i = 0; i < n; ++i) index_of[static_cast<std::size_t>(elements[i])] = i;
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int prod = m.at(elements[i], elements[j]);
      const int idx = index_of[static_cast<std::size_t>(prod)];
      if (idx < 0)
        fail(ErrorKind::internal_error,
             "H-class of an idempotent must be closed", elements[i],
             elements[j]);
      table[static_cast<std::size_t>(i) * n + j] = idx;
    }
  FiniteGroup group = validate_group(validate_monoid(
      n, std::move(table), index_of[static_cast<std::size_t>(e)]));
  Homomorphism inclusion = make_mult_homomorphism(group.monoid, m, elements);
  return MaximalSubgroup{std::move(group), elements, std::move(index_of),
                         std::move(inclusion)};
}

struct LocalMonoid {
  FiniteMonoid monoid;        // eMe re-indexed ascending, identity e
  std::vector<int> elements;  // local index -> ambient index
};

inline LocalMonoid local_monoid(const FiniteMonoid& m, int e) {
  if (m.at(e, e) != e)
    fail(ErrorKind::not_idempotent, "local monoid needs an idempotent", e);
  std::vector<char> in(static_cast<std::size_t>(m.order), 0);
  for (int x = 0; x < m.order; ++x)
    in[static_cast<std::size_t>(m.at(m.at(e, x), e))] = 1;
  std::vector<int> elements;
  std::vector<int> index_of(static_cast<std::size_t>(m.order), -1);
  for (int x = 0; x < m.order; ++x)
    if (in[static_cast<std::size_t>(x)]) {
      index_of[static_cast<std::size_t>(x)] =
          static_cast<int>(elements.size());
      elements.push_back(x);
    }
  const int n = static_cast<int>(elements.size());
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      table[static_cast<std::size_t>(i) * n + j] =
          index_of[static_cast<std::size_t>(m.at(elements[i], elements[j]))];
  FiniteMonoid local = validate_monoid(
      n, std::move(table), index_of[static_cast<std::size_t>(e)]);
  return LocalMonoid{std::move(local), std::move(elements)};
}

struct Classification {
  bool is_band = false;
  bool is_completely_regular = false;
  bool is_aperiodic = false;
  std::vector<int> group_elements;  // ambient indices of original elements
};

// Classification over the original elements of a semigroup: an element s is a
// group element iff s^(m+1) = s for some m >= 1 (equivalently, its cyclic
// index is 1); aperiodic means every element satisfies s^n = s^(n+1)
// eventually (cyclic period 1).
inline Classification classify(const FiniteSemigroup& s) {
  Classification c;
  c.is_band = true;
  c.is_completely_regular = true;
  c.is_aperiodic = true;
  const FiniteMonoid& m = s.monoid;
  for (int x = 0; x < s.original_count(); ++x) {
    const CyclicProfile cp = cyclic_profile(m, x);
    const bool idem = m.at(x, x) == x;
    const bool group_elt = cp.index == 1;
    if (!idem) c.is_band = false;
    if (!group_elt) c.is_completely_regular = false;
    if (cp.period != 1) c.is_aperiodic = false;
    if (group_elt) c.group_elements.push_back(x);
  }
  return c;
}

}  // namespace greens
}  // namespace mlab
