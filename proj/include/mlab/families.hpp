#pragma once

// Named families of monoids, semigroups, and groups: cyclic and elementary
// abelian groups, dihedral/dicyclic groups, left/right zero semigroups,
// chain semilattices, monogenic semigroups, zero adjunction, and full
// transformation monoids.

#include <string>
#include <vector>

#include "mlab/core.hpp"

namespace mlab {

inline FiniteMonoid trivial_monoid() { return FiniteMonoid{}; }

inline FiniteGroup cyclic_group(int n,
                                const Limits& limits = default_limits()) {
  if (n < 1) fail(ErrorKind::bad_argument, "cyclic order must be positive", n);
  if (n > limits.max_order)
    fail(ErrorKind::size_limit_exceeded, "cyclic order exceeds cap", n);
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      table[static_cast<std::size_t>(i) * n + j] = (i + j) % n;
  return validate_group(validate_monoid(n, std::move(table), 0, limits));
}

namespace detail {

inline bool is_small_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace detail

// (Z/p)^k with elements encoded as base-p digit vectors, most significant
// digit first: index = d0*p^(k-1) + ... + d(k-1).
inline FiniteGroup elementary_abelian_group(
    int p, int k, const Limits& limits = default_limits()) {
  if (!detail::is_small_prime(p))
    fail(ErrorKind::bad_argument, "p must be prime", p);
  if (k < 1) fail(ErrorKind::bad_argument, "exponent must be positive", k);
  long long order = 1;
  for (int i = 0; i < k; ++i) {
    order *= p;
    if (order > limits.max_order)
      fail(ErrorKind::size_limit_exceeded, "elementary abelian order cap",
           order);
  }
  const int n = static_cast<int>(order);
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int a = i, b = j, scale = 1, sum = 0;
      for (int d = 0; d < k; ++d) {
        sum += ((a % p) + (b % p)) % p * scale;
        a /= p;
        b /= p;
        scale *= p;
      }
      table[static_cast<std::size_t>(i) * n + j] = sum;
    }
  return validate_group(validate_monoid(n, std::move(table), 0, limits));
}

// Dihedral group of order 2n: elements r^i (indices 0..n-1) and r^i s
// (indices n..2n-1), with s r = r^-1 s.
inline FiniteGroup dihedral_group(int n,
                                  const Limits& limits = default_limits()) {
  if (n < 1) fail(ErrorKind::bad_argument, "dihedral parameter", n);
  const int order = 2 * n;
  if (order > limits.max_order)
    fail(ErrorKind::size_limit_exceeded, "dihedral order cap", order);
  auto idx = [n](int rot, int flip) { return flip * n + ((rot % n) + n) % n; };
  std::vector<int> table(static_cast<std::size_t>(order) * order);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) {
      const int ri = i % n, fi = i / n, rj = j % n, fj = j / n;
      // (r^ri s^fi)(r^rj s^fj) = r^(ri + rj or ri - rj) s^(fi+fj)
      const int rot = fi == 0 ? ri + rj : ri - rj;
      table[static_cast<std::size_t>(i) * order + j] = idx(rot, fi ^ fj);
    }
  return validate_group(validate_monoid(order, std::move(table), 0, limits));
}

// Dicyclic group of order 4n: <a, b | a^(2n) = 1, b^2 = a^n, b a b^-1 = a^-1>.
// Elements a^i (indices 0..2n-1) and a^i b (indices 2n..4n-1).
inline FiniteGroup dicyclic_group(int n,
                                  const Limits& limits = default_limits()) {
  if (n < 1) fail(ErrorKind::bad_argument, "dicyclic parameter", n);
  const int m = 2 * n, order = 4 * n;
  if (order > limits.max_order)
    fail(ErrorKind::size_limit_exceeded, "dicyclic order cap", order);
  auto idx = [m](int rot, int flip) { return flip * m + ((rot % m) + m) % m; };
  std::vector<int> table(static_cast<std::size_t>(order) * order);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) {
      const int ri = i % m, fi = i / m, rj = j % m, fj = j / m;
      int rot, flip;
      if (fi == 0 && fj == 0) {
        rot = ri + rj;
        flip = 0;
      } else if (fi == 0 && fj == 1) {
        rot = ri + rj;
        flip = 1;
      } else if (fi == 1 && fj == 0) {
        rot = ri - rj;  // (a^ri b) a^rj = a^(ri - rj) b
        flip = 1;
      } else {
        rot = ri - rj + n;  // (a^ri b)(a^rj b) = a^(ri - rj + n)
        flip = 0;
      }
      table[static_cast<std::size_t>(i) * order + j] = idx(rot, flip);
    }
  return validate_group(validate_monoid(order, std::move(table), 0, limits));
}

inline FiniteGroup quaternion_group() { return dicyclic_group(2); }

// Left zero semigroup (x*y = x) with an adjoined identity for n >= 2.
inline FiniteSemigroup left_zero(int n,
                                 const Limits& limits = default_limits()) {
  if (n < 1) fail(ErrorKind::bad_argument, "left_zero size", n);
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      table[static_cast<std::size_t>(i) * n + j] = i;
  return semigroup_from_table(n, table, limits);
}

inline FiniteSemigroup right_zero(int n,
                                  const Limits& limits = default_limits()) {
  if (n < 1) fail(ErrorKind::bad_argument, "right_zero size", n);
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      table[static_cast<std::size_t>(i) * n + j] = j;
  return semigroup_from_table(n, table, limits);
}

// Chain of idempotents e_0 < e_1 < ... < e_(n-1) under x*y = min(x,y); the
// top element is a genuine identity, so nothing is adjoined.
inline FiniteSemigroup chain_semilattice(
    int n, const Limits& limits = default_limits()) {
  if (n < 1) fail(ErrorKind::bad_argument, "chain size", n);
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      table[static_cast<std::size_t>(i) * n + j] = std::min(i, j);
  return semigroup_from_table(n, table, limits);
}

// Monogenic semigroup <s : s^(index+period) = s^index> on index+period-1
// elements s^1..s^(index+period-1); element s^a sits at table index a-1.
// For index 1 this is the cyclic group Z/period (identity s^period); for
// index >= 2 there is no identity and one is adjoined.
inline FiniteSemigroup monogenic(int index, int period,
                                 const Limits& limits = default_limits()) {
  if (index < 1 || period < 1)
    fail(ErrorKind::bad_argument, "monogenic parameters", index, period);
  const int n = index + period - 1;
  if (n > limits.max_order)
    fail(ErrorKind::size_limit_exceeded, "monogenic order cap", n);
  auto reduce = [index, period](int e) {
    return e <= index + period - 1 ? e : index + (e - index) % period;
  };
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      table[static_cast<std::size_t>(i) * n + j] = reduce(i + j + 2) - 1;
  return semigroup_from_table(n, table, limits);
}

// Appends an absorbing zero at the last index; the identity is unchanged.
inline FiniteMonoid zero_adjoined(const FiniteMonoid& m,
                                  const Limits& limits = default_limits()) {
  const int n = m.order + 1;
  if (n > limits.max_order)
    fail(ErrorKind::size_limit_exceeded, "zero adjunction exceeds cap", n);
  const int zero = n - 1;
  std::vector<int> table(static_cast<std::size_t>(n) * n, zero);
  for (int i = 0; i < m.order; ++i)
    for (int j = 0; j < m.order; ++j)
      table[static_cast<std::size_t>(i) * n + j] = m.at(i, j);
  return validate_monoid(n, std::move(table), m.identity, limits);
}

// Full transformation monoid on n points: all maps [n] -> [n], composed as a
// right action ((f*g)(x) = g(f(x))), indexed lexicographically by the digit
// vector (f(0), ..., f(n-1)) in base n.
inline FiniteMonoid full_transformation(int n,
                                        const Limits& limits = default_limits()) {
  if (n < 1) fail(ErrorKind::bad_argument, "full_transformation size", n);
  long long count = 1;
  for (int i = 0; i < n; ++i) {
    count *= n;
    if (count > limits.max_order)
      fail(ErrorKind::size_limit_exceeded, "full transformation order cap",
           count);
  }
  const int order = static_cast<int>(count);
  auto digit = [n](int f, int x) {
    int v = f;
    for (int i = n - 1; i > x; --i) v /= n;
    return v % n;
  };
  std::vector<int> table(static_cast<std::size_t>(order) * order);
  for (int f = 0; f < order; ++f)
    for (int g = 0; g < order; ++g) {
      int idx = 0;
      for (int x = 0; x < n; ++x) idx = idx * n + digit(g, digit(f, x));
      table[static_cast<std::size_t>(f) * order + g] = idx;
    }
  int identity = 0;
  for (int x = 0; x < n; ++x) identity = identity * n + x;
  return validate_monoid(order, std::move(table), identity, limits);
}

// The alternating group A4, realized as the submonoid of T4 generated by the
// 3-cycles (0 1 2) and (1 2 3).
inline FiniteGroup alternating4(const Limits& limits = default_limits()) {
  const FiniteMonoid t4 = full_transformation(4, limits);
  auto perm_index = [](std::vector<int> images) {
    int idx = 0;
    for (int v : images) idx = idx * 4 + v;
    return idx;
  };
  const int c012 = perm_index({1, 2, 0, 3});
  const int c123 = perm_index({0, 2, 3, 1});
  Submonoid sub = submonoid_closure(t4, {c012, c123});
  return validate_group(sub.monoid);
}

inline FiniteGroup group_direct_product(const FiniteGroup& a,
                                        const FiniteGroup& b,
                                        const Limits& limits = default_limits()) {
  return validate_group(direct_product(a.monoid, b.monoid, limits).product);
}

// --------------------------------------------------------------------------
// Family dispatcher used by the command-line surface.
// --------------------------------------------------------------------------

// A constructed family member; groups and monoids are carried with
// identity_adjoined = false.
struct FamilyValue {
  FiniteSemigroup semigroup;
  std::string description;
};

inline FamilyValue family(const std::string& name,
                          const std::vector<int>& args,
                          const Limits& limits = default_limits()) {
  auto need = [&](std::size_t k) {
    if (args.size() != k)
      fail(ErrorKind::bad_argument,
           "family '" + name + "' needs " + std::to_string(k) + " argument(s)",
           static_cast<long long>(args.size()));
  };
  if (name == "trivial") {
    need(0);
    return {as_semigroup(trivial_monoid()), "trivial monoid"};
  }
  if (name == "cyclic") {
    need(1);
    return {as_semigroup(cyclic_group(args[0], limits).monoid),
            "cyclic group of order " + std::to_string(args[0])};
  }
  if (name == "elementary_abelian") {
    need(2);
    return {as_semigroup(elementary_abelian_group(args[0], args[1], limits).monoid),
            "elementary abelian group"};
  }
  if (name == "left_zero") {
    need(1);
    return {left_zero(args[0], limits), "left zero semigroup"};
  }
  if (name == "right_zero") {
    need(1);
    return {right_zero(args[0], limits), "right zero semigroup"};
  }
  if (name == "chain_semilattice") {
    need(1);
    return {chain_semilattice(args[0], limits), "chain of idempotents"};
  }
  if (name == "monogenic") {
    need(2);
    return {monogenic(args[0], args[1], limits), "monogenic semigroup"};
  }
  if (name == "full_transformation") {
    need(1);
    return {as_semigroup(full_transformation(args[0], limits)),
            "full transformation monoid"};
  }
  if (name == "dihedral") {
    need(1);
    return {as_semigroup(dihedral_group(args[0], limits).monoid),
            "dihedral group"};
  }
  if (name == "dicyclic") {
    need(1);
    return {as_semigroup(dicyclic_group(args[0], limits).monoid),
            "dicyclic group"};
  }
  if (name == "alternating4") {
    need(0);
    return {as_semigroup(alternating4(limits).monoid), "alternating group A4"};
  }
  fail(ErrorKind::unknown_family, "no family named '" + name + "'");
}

}  // namespace mlab
