#pragma once

// Exhaustive enumeration of small semigroups and monoids up to isomorphism.
//
// Tables are generated by a cell-by-cell backtracking search that checks
// associativity on every fully determined triple after each assignment, and a
// completed table is kept only when it is the lexicographically least among
// all of its relabelings (canonical-form rejection).  Monoid enumeration pins
// the identity at index 0 and canonicalizes over the permutations fixing 0;
// since any isomorphism maps identity to identity, this hits each isomorphism
// class exactly once.
//
// Orders are hard-capped (4 for semigroups, 5 for monoids): class counts grow
// explosively beyond that and nothing downstream needs more.

#include <algorithm>
#include <vector>

#include "mlab/core.hpp"

namespace mlab {
namespace cat {

inline constexpr int kSemigroupEnumerationCap = 4;
inline constexpr int kMonoidEnumerationCap = 5;

namespace detail {

// True when `table` is lexicographically minimal among all relabelings by
// permutations of [0,n) (fixing index 0 when fix_zero is set).
inline bool is_canonical_table(int n, const std::vector<int>& table,
                               bool fix_zero) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::vector<int> relabeled(table.size());
  const int first_moving = fix_zero ? 1 : 0;
  while (true) {
    if (!std::next_permutation(perm.begin() + first_moving, perm.end()))
      break;
    // relabeled[perm[i]][perm[j]] = perm[table[i][j]]
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        relabeled[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)]) *
                      n +
                  perm[static_cast<std::size_t>(j)]] =
            perm[static_cast<std::size_t>(
                table[static_cast<std::size_t>(i) * n + j])];
    if (relabeled < table) return false;
  }
  return true;
}

// All fully determined associativity triples must hold; cells with -1 are
// still unassigned and make a triple indeterminate.
inline bool partial_associative(int n, const std::vector<int>& t) {
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int ab = t[static_cast<std::size_t>(a) * n + b];
      if (ab < 0) continue;
      for (int c = 0; c < n; ++c) {
        const int bc = t[static_cast<std::size_t>(b) * n + c];
        if (bc < 0) continue;
        const int left = t[static_cast<std::size_t>(ab) * n + c];
        const int right = t[static_cast<std::size_t>(a) * n + bc];
        if (left >= 0 && right >= 0 && left != right) return false;
      }
    }
  return true;
}

inline void enumerate_tables(int n, bool with_identity_at_zero,
                             std::vector<std::vector<int>>* out) {
  std::vector<int> table(static_cast<std::size_t>(n) * n, -1);
  std::vector<int> free_cells;
  if (with_identity_at_zero) {
    for (int i = 0; i < n; ++i) {
      table[static_cast<std::size_t>(i)] = i;           // row of the identity
      table[static_cast<std::size_t>(i) * n] = i;       // column of the identity
    }
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j)
        free_cells.push_back(i * n + j);
  } else {
    for (int c = 0; c < n * n; ++c) free_cells.push_back(c);
  }

  // Depth-first fill in row-major order; candidate values ascending, so
  // completed tables appear in lexicographic order.
  std::size_t depth = 0;
  if (free_cells.empty()) {
    out->push_back(table);
    return;
  }
  std::vector<int> next_value(free_cells.size(), 0);
  while (true) {
    const std::size_t cell = static_cast<std::size_t>(free_cells[depth]);
    int v = next_value[depth];
    bool advanced = false;
    for (; v < n; ++v) {
      table[cell] = v;
      if (partial_associative(n, table)) {
        next_value[depth] = v + 1;
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      table[cell] = -1;
      next_value[depth] = 0;
      if (depth == 0) break;
      --depth;
      continue;
    }
    if (depth + 1 == free_cells.size()) {
      if (is_canonical_table(n, table, with_identity_at_zero))
        out->push_back(table);
      table[cell] = -1;  // keep scanning values for this last cell
      continue;
    }
    ++depth;
  }
}

}  // namespace detail

// All semigroups of the given order up to isomorphism, as canonical tables in
// lexicographic order, wrapped with identity detection/adjunction.
inline std::vector<FiniteSemigroup> enumerate_semigroups(
    int order, const Limits& limits = default_limits()) {
  if (order < 1)
    fail(ErrorKind::bad_argument, "enumeration needs order >= 1", order);
  if (order > kSemigroupEnumerationCap)
    fail(ErrorKind::size_limit_exceeded,
         "semigroup enumeration is capped at order 4", order);
  std::vector<std::vector<int>> tables;
  detail::enumerate_tables(order, false, &tables);
  std::vector<FiniteSemigroup> out;
  out.reserve(tables.size());
  for (auto& t : tables)
    out.push_back(semigroup_from_table(order, std::move(t), limits));
  return out;
}

// All monoids of the given order up to isomorphism (identity at index 0),
// as canonical tables in lexicographic order.
inline std::vector<FiniteMonoid> enumerate_monoids(
    int order, const Limits& limits = default_limits()) {
  if (order < 1)
    fail(ErrorKind::bad_argument, "enumeration needs order >= 1", order);
  if (order > kMonoidEnumerationCap)
    fail(ErrorKind::size_limit_exceeded,
         "monoid enumeration is capped at order 5", order);
  std::vector<std::vector<int>> tables;
  detail::enumerate_tables(order, true, &tables);
  std::vector<FiniteMonoid> out;
  out.reserve(tables.size());
  for (auto& t : tables)
    out.push_back(validate_monoid(order, std::move(t), 0, limits));
  return out;
}

}  // namespace cat
}  // namespace mlab
