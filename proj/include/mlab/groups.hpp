#pragma once

// Subgroup-level machinery for finite groups: subgroup enumeration by closure,
// kernels, quotients by normal subgroups, the Frattini subgroup and its
// quotient, minimal lifted subgroups along an epimorphism, and the
// elementary-abelian test.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "mlab/core.hpp"
#include "mlab/families.hpp"

namespace mlab {
namespace embedding {

// The subset of G generated by `gens` (always contains the identity).  In a
// finite group every submonoid is a subgroup, so plain closure suffices.
inline std::vector<int> subgroup_closure(const FiniteGroup& g,
                                         const std::vector<int>& gens) {
  Submonoid sub = submonoid_closure(g.monoid, gens);
  std::vector<int> elements = sub.elements;
  std::sort(elements.begin(), elements.end());
  return elements;
}

// Check that `elements` is a subgroup of g; returns the re-indexed group and
// its inclusion homomorphism.  Errors with NotASubgroup otherwise.
struct SubgroupWitness {
  FiniteGroup group;          // re-indexed, elements ascending
  std::vector<int> elements;  // subgroup index -> ambient index (ascending)
  std::vector<int> index_of;  // ambient index -> subgroup index, or -1
  Homomorphism inclusion;     // injective, unit-preserving
};

inline SubgroupWitness subgroup_from_elements(const FiniteGroup& g,
                                              std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()),
                 elements.end());
  const int n = static_cast<int>(elements.size());
  if (n == 0)
    fail(ErrorKind::not_a_subgroup, "a subgroup cannot be empty");
  std::vector<int> index_of(static_cast<std::size_t>(g.order()), -1);
  for (int i = 0; i < n; ++i) {
    if (elements[static_cast<std::size_t>(i)] < 0 ||
        elements[static_cast<std::size_t>(i)] >= g.order())
      fail(ErrorKind::not_a_subgroup, "subgroup element out of range",
           elements[static_cast<std::size_t>(i)]);
    index_of[static_cast<std::size_t>(elements[static_cast<std::size_t>(i)])] =
        i;
  }
  if (index_of[static_cast<std::size_t>(g.identity())] < 0)
    fail(ErrorKind::not_a_subgroup, "subgroup must contain the identity");
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int prod = g.at(elements[static_cast<std::size_t>(i)],
                            elements[static_cast<std::size_t>(j)]);
      const int idx = index_of[static_cast<std::size_t>(prod)];
      if (idx < 0)
        fail(ErrorKind::not_a_subgroup, "subset is not closed under product",
             elements[static_cast<std::size_t>(i)],
             elements[static_cast<std::size_t>(j)]);
      table[static_cast<std::size_t>(i) * n + j] = idx;
    }
  FiniteGroup group = validate_group(validate_monoid(
      n, std::move(table), index_of[static_cast<std::size_t>(g.identity())]));
  Homomorphism inclusion =
      make_homomorphism(group.monoid, g.monoid, elements);
  return SubgroupWitness{std::move(group), std::move(elements),
                         std::move(index_of), std::move(inclusion)};
}

// Every subgroup of g, as ascending element-index sets, ordered by
// (order, lexicographic elements).  Complete lattice enumeration by closing
// each known subgroup with each outside element until a fixpoint.
inline std::vector<std::vector<int>> all_subgroups(
    const FiniteGroup& g, const Limits& limits = default_limits()) {
  if (g.order() > limits.subgroup_order_cap)
    fail(ErrorKind::budget_exceeded,
         "subgroup enumeration is capped by subgroup_order_cap", g.order(),
         limits.subgroup_order_cap);
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> worklist;
  std::vector<int> trivial = {g.identity()};
  seen.insert(trivial);
  worklist.push_back(trivial);
  while (!worklist.empty()) {
    std::vector<int> base = std::move(worklist.back());
    worklist.pop_back();
    for (int x = 0; x < g.order(); ++x) {
      if (std::binary_search(base.begin(), base.end(), x)) continue;
      std::vector<int> gens = base;
      gens.push_back(x);
      std::vector<int> closed = subgroup_closure(g, gens);
      if (seen.insert(closed).second) worklist.push_back(closed);
    }
  }
  std::vector<std::vector<int>> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return out;
}

// Ambient indices of ker(h) = {x : h(x) = identity of target}.
inline std::vector<int> kernel_elements(const Homomorphism& h) {
  std::vector<int> out;
  for (int x = 0; x < h.source.order; ++x)
    if (h.map[static_cast<std::size_t>(x)] == h.target.identity)
      out.push_back(x);
  return out;
}

// Quotient of g by a normal subgroup given by its element set; the coset
// partition is validated as a congruence (which is exactly normality).
inline QuotientDecomposition quotient_by_normal_subgroup(
    const FiniteGroup& g, const std::vector<int>& normal_elements) {
  std::map<std::vector<int>, int> coset_ids;
  std::vector<int> class_of(static_cast<std::size_t>(g.order()), -1);
  for (int x = 0; x < g.order(); ++x) {
    std::vector<int> coset;
    coset.reserve(normal_elements.size());
    for (int n : normal_elements) coset.push_back(g.at(n, x));
    std::sort(coset.begin(), coset.end());
    auto [it, inserted] =
        coset_ids.emplace(std::move(coset), static_cast<int>(coset_ids.size()));
    class_of[static_cast<std::size_t>(x)] = it->second;
  }
  Congruence c = make_congruence(g.monoid, class_of);
  return quotient_by_congruence(g.monoid, c);
}

struct FrattiniResult {
  std::vector<int> subgroup;  // element indices of Φ(G), ascending
  FiniteGroup quotient;       // G / Φ(G)
  Homomorphism projection;    // G -> quotient
  std::vector<std::vector<int>> maximal_subgroups;
};

// Φ(G) = intersection of all maximal proper subgroups (Φ(G) = G for the
// trivial group, by the empty-intersection convention).  Φ(G) is normal, so
// the quotient always exists; the classical divisibility fact — every prime
// dividing |Φ(G)| divides |G/Φ(G)| — is re-checked after construction.
inline FrattiniResult frattini(const FiniteGroup& g,
                               const Limits& limits = default_limits()) {
  std::vector<std::vector<int>> subs = all_subgroups(g, limits);
  std::vector<std::vector<int>> maximal;
  for (const auto& s : subs) {
    if (static_cast<int>(s.size()) == g.order()) continue;  // not proper
    bool is_maximal = true;
    for (const auto& t : subs) {
      if (static_cast<int>(t.size()) == g.order() || t.size() <= s.size())
        continue;
      if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
        is_maximal = false;
        break;
      }
    }
    if (is_maximal) maximal.push_back(s);
  }
  std::vector<int> phi;
  if (maximal.empty()) {
    for (int x = 0; x < g.order(); ++x) phi.push_back(x);
  } else {
    phi = maximal.front();
    for (std::size_t i = 1; i < maximal.size(); ++i) {
      std::vector<int> next;
      std::set_intersection(phi.begin(), phi.end(), maximal[i].begin(),
                            maximal[i].end(), std::back_inserter(next));
      phi = std::move(next);
    }
  }
  QuotientDecomposition q = quotient_by_normal_subgroup(g, phi);
  FiniteGroup quotient = validate_group(q.quotient);
  // Divisibility check: p | |Φ| implies p | |G/Φ|.
  const int phi_order = static_cast<int>(phi.size());
  const int quo_order = quotient.order();
  for (int p = 2; p <= phi_order; ++p) {
    bool prime = p >= 2;
    for (int d = 2; d * d <= p; ++d)
      if (p % d == 0) {
        prime = false;
        break;
      }
    if (!prime || phi_order % p != 0) continue;
    if (quo_order % p != 0)
      fail(ErrorKind::internal_error,
           "Frattini divisibility violated (indicates a construction bug)", p,
           phi_order, quo_order);
  }
  return FrattiniResult{std::move(phi), std::move(quotient),
                        std::move(q.projection), std::move(maximal)};
}

// Least-order subgroup M of G with member(M) true and phi(M) = all of the
// target; ties broken by lexicographic element set.  Returns nullopt when no
// subgroup in the class surjects.
inline std::optional<SubgroupWitness> saturated_lift(
    const FiniteGroup& g, const Homomorphism& phi,
    const std::function<bool(const FiniteGroup&)>& member,
    const Limits& limits = default_limits()) {
  if (phi.source != g.monoid)
    fail(ErrorKind::domain_mismatch,
         "saturated_lift needs phi defined on the given group");
  if (!phi.surjective)
    fail(ErrorKind::validation_error, "saturated_lift needs an epimorphism");
  for (const auto& elements : all_subgroups(g, limits)) {
    std::vector<char> hit(static_cast<std::size_t>(phi.target.order), 0);
    int covered = 0;
    for (int x : elements) {
      char& h = hit[static_cast<std::size_t>(phi.map[static_cast<std::size_t>(x)])];
      if (!h) {
        h = 1;
        ++covered;
      }
    }
    if (covered != phi.target.order) continue;
    SubgroupWitness w = subgroup_from_elements(g, elements);
    if (member(w.group)) return w;
  }
  return std::nullopt;
}

// Returns p when G is abelian with every non-identity element of order p,
// 0 (the "any prime" marker) for the trivial group, nullopt otherwise.
inline std::optional<int> is_elementary_abelian(const FiniteGroup& g) {
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j)
      if (g.at(i, j) != g.at(j, i)) return std::nullopt;
  if (g.order() == 1) return 0;
  int p = 0;
  for (int x = 0; x < g.order(); ++x) {
    if (x == g.identity()) continue;
    int ord = 1;
    int acc = x;
    while (acc != g.identity()) {
      acc = g.at(acc, x);
      ++ord;
    }
    if (p == 0) {
      p = ord;
    } else if (ord != p) {
      return std::nullopt;
    }
  }
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return std::nullopt;
  if (p < 2) return std::nullopt;
  return p;
}

struct CatalogGroup {
  std::string name;
  FiniteGroup group;
};

// A named catalog of familiar groups up to the requested order: cyclic,
// elementary abelian, dihedral, dicyclic, alternating, and direct products of
// smaller catalog members.  Duplicated isomorphism types are harmless for the
// property checks this feeds.
inline std::vector<CatalogGroup> group_catalog(int max_order) {
  std::vector<CatalogGroup> out;
  auto add = [&](std::string name, FiniteGroup g) {
    if (g.order() <= max_order)
      out.push_back(CatalogGroup{std::move(name), std::move(g)});
  };
  for (int n = 1; n <= max_order; ++n)
    add("z" + std::to_string(n), cyclic_group(n));
  for (int p : {2, 3, 5, 7, 11, 13})
    for (int k = 2; k <= 4; ++k) {
      long long order = 1;
      for (int i = 0; i < k; ++i) order *= p;
      if (order > max_order) break;
      add("ea" + std::to_string(p) + "_" + std::to_string(k),
          elementary_abelian_group(p, k));
    }
  for (int n = 3; 2 * n <= max_order; ++n)
    add("d" + std::to_string(n), dihedral_group(n));
  for (int n = 2; 4 * n <= max_order; ++n)
    add("dic" + std::to_string(n), dicyclic_group(n));
  if (max_order >= 12) add("a4", alternating4());
  // Direct products of cyclics and of small nonabelian members.
  struct ProductSpec {
    const char* name;
    std::vector<int> cyclic_factors;
  };
  const ProductSpec cyclic_products[] = {
      {"z2xz4", {2, 4}},   {"z2xz6", {2, 6}},      {"z2xz8", {2, 8}},
      {"z4xz4", {4, 4}},   {"z2xz2xz4", {2, 2, 4}},
  };
  for (const auto& spec : cyclic_products) {
    long long order = 1;
    for (int f : spec.cyclic_factors) order *= f;
    if (order > max_order) continue;
    FiniteGroup g = cyclic_group(spec.cyclic_factors[0]);
    for (std::size_t i = 1; i < spec.cyclic_factors.size(); ++i)
      g = group_direct_product(
          g, cyclic_group(spec.cyclic_factors[i]));
    add(spec.name, std::move(g));
  }
  if (max_order >= 16) {
    add("d4xz2", group_direct_product(dihedral_group(4),
                                                cyclic_group(2)));
    add("q8xz2", group_direct_product(quaternion_group(),
                                                cyclic_group(2)));
  }
  if (max_order >= 12)
    add("d3xz2", group_direct_product(dihedral_group(3),
                                                cyclic_group(2)));
  return out;
}

}  // namespace embedding
}  // namespace mlab
