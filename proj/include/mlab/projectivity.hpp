#pragma once

// Bounded projectivity testing: exhaustive splitting search for onto
// homomorphisms, cover enumeration from the small-order catalog plus targeted
// constructions, and the desk-scale scan that every projective-looking
// subject is a band.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mlab/catalog.hpp"
#include "mlab/core.hpp"
#include "mlab/families.hpp"
#include "mlab/greens.hpp"

namespace mlab {
namespace projectivity {

using cat::enumerate_semigroups;

namespace detail {

// Candidate images for original element t under any homomorphism: the image's
// eventual cycle divides t's, and its tail is no longer.
inline bool profile_compatible(const CyclicProfile& t, const CyclicProfile& s) {
  return s.index <= t.index && t.period % s.period == 0;
}

// Incremental multiplicativity check: verify every original pair (i,j) whose
// members and product are all assigned (≤ k) and which involves k.
inline bool consistent_at(const FiniteMonoid& src, const FiniteMonoid& tgt,
                          const std::vector<int>& map, int k) {
  for (int i = 0; i <= k; ++i)
    for (int j = 0; j <= k; ++j) {
      const int p = src.at(i, j);
      if (p > k) continue;
      if (i != k && j != k && p != k) continue;
      if (map[static_cast<std::size_t>(p)] !=
          tgt.at(map[static_cast<std::size_t>(i)],
                 map[static_cast<std::size_t>(j)]))
        return false;
    }
  return true;
}

}  // namespace detail

// Lexicographically least splitting ψ: S → T with ψ then phi = identity, or
// nullopt when the exhaustive fiber search finds none.
inline std::optional<Homomorphism> split_search(
    const FiniteSemigroup& T, const FiniteSemigroup& S,
    const Homomorphism& phi, const Limits& limits = default_limits()) {
  if (phi.source != T.monoid || phi.target != S.monoid)
    fail(ErrorKind::domain_mismatch, "phi must map the cover onto the subject");
  if (!phi.surjective)
    fail(ErrorKind::validation_error, "phi must be surjective");

  const int sn = S.original_count();
  std::vector<std::vector<int>> fibers(static_cast<std::size_t>(sn));
  long long space = 1;
  for (int s = 0; s < sn; ++s) {
    for (int t = 0; t < T.monoid.order; ++t) {
      if (T.identity_adjoined && !T.is_original(t)) continue;
      if (phi(t) == s) fibers[static_cast<std::size_t>(s)].push_back(t);
    }
    if (fibers[static_cast<std::size_t>(s)].empty()) return std::nullopt;
    space *= static_cast<long long>(fibers[static_cast<std::size_t>(s)].size());
    if (space > limits.search_budget)
      fail(ErrorKind::budget_exceeded,
           "splitting search space exceeds the budget", space,
           limits.search_budget);
  }

  std::vector<int> map(static_cast<std::size_t>(S.monoid.order), -1);
  if (S.identity_adjoined)
    map[static_cast<std::size_t>(S.monoid.identity)] = T.monoid.identity;
  std::vector<std::size_t> choice(static_cast<std::size_t>(sn), 0);
  int depth = 0;
  while (true) {
    if (depth < 0) return std::nullopt;
    if (choice[static_cast<std::size_t>(depth)] >=
        fibers[static_cast<std::size_t>(depth)].size()) {
      choice[static_cast<std::size_t>(depth)] = 0;
      --depth;
      if (depth >= 0) ++choice[static_cast<std::size_t>(depth)];
      continue;
    }
    map[static_cast<std::size_t>(depth)] =
        fibers[static_cast<std::size_t>(depth)]
              [choice[static_cast<std::size_t>(depth)]];
    if (!detail::consistent_at(S.monoid, T.monoid, map, depth)) {
      ++choice[static_cast<std::size_t>(depth)];
      continue;
    }
    if (depth + 1 == sn) {
      Homomorphism psi = make_semigroup_homomorphism(S, T, map);
      if (compose(psi, phi).map != identity_homomorphism(S.monoid).map)
        fail(ErrorKind::internal_error,
             "splitting candidate does not section phi (construction bug)");
      return psi;
    }
    ++depth;
  }
}

// All onto semigroup homomorphisms T ↠ S in lexicographic map order.
inline std::vector<Homomorphism> all_onto_semigroup_homs(
    const FiniteSemigroup& T, const FiniteSemigroup& S,
    const Limits& limits = default_limits()) {
  std::vector<Homomorphism> out;
  if (T.original_count() < S.original_count()) return out;

  const int tn = T.original_count();
  std::vector<CyclicProfile> tprof(static_cast<std::size_t>(tn));
  for (int t = 0; t < tn; ++t) tprof[static_cast<std::size_t>(t)] = cyclic_profile(T.monoid, t);
  std::vector<std::vector<int>> candidates(static_cast<std::size_t>(tn));
  long long space = 1;
  for (int t = 0; t < tn; ++t) {
    for (int s = 0; s < S.monoid.order; ++s) {
      if (S.identity_adjoined && !S.is_original(s)) continue;
      if (detail::profile_compatible(tprof[static_cast<std::size_t>(t)],
                                     cyclic_profile(S.monoid, s)))
        candidates[static_cast<std::size_t>(t)].push_back(s);
    }
    if (candidates[static_cast<std::size_t>(t)].empty()) return out;
    space *= static_cast<long long>(candidates[static_cast<std::size_t>(t)].size());
    if (space > limits.search_budget)
      fail(ErrorKind::budget_exceeded,
           "onto-homomorphism enumeration exceeds the budget", space,
           limits.search_budget);
  }

  std::vector<int> map(static_cast<std::size_t>(T.monoid.order), -1);
  if (T.identity_adjoined)
    map[static_cast<std::size_t>(T.monoid.identity)] = S.monoid.identity;
  std::vector<std::size_t> choice(static_cast<std::size_t>(tn), 0);
  int depth = 0;
  while (depth >= 0) {
    if (choice[static_cast<std::size_t>(depth)] >=
        candidates[static_cast<std::size_t>(depth)].size()) {
      choice[static_cast<std::size_t>(depth)] = 0;
      --depth;
      if (depth >= 0) ++choice[static_cast<std::size_t>(depth)];
      continue;
    }
    map[static_cast<std::size_t>(depth)] =
        candidates[static_cast<std::size_t>(depth)]
                  [choice[static_cast<std::size_t>(depth)]];
    if (!detail::consistent_at(T.monoid, S.monoid, map, depth)) {
      ++choice[static_cast<std::size_t>(depth)];
      continue;
    }
    if (depth + 1 == tn) {
      // Onto means onto the carrier: every original of S must be hit by an
      // original of T; the adjoined-identity slot is bookkeeping.
      std::vector<char> hit(static_cast<std::size_t>(S.monoid.order), 0);
      int count = 0;
      for (int t = 0; t < tn; ++t) {
        char& c = hit[static_cast<std::size_t>(map[static_cast<std::size_t>(t)])];
        if (!c) {
          c = 1;
          ++count;
        }
      }
      if (count == S.original_count())
        out.push_back(make_semigroup_homomorphism(T, S, map));
      ++choice[static_cast<std::size_t>(depth)];
      continue;
    }
    ++depth;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Targeted covers: the constructions that catalog scanning up to a small
// bound misses (stretched monogenics and cyclic extensions of the subject's
// cyclic part).

struct TargetedCover {
  FiniteSemigroup T;
  Homomorphism phi;
  std::string description;
};

namespace detail {

struct MonogenicShape {
  int generator = -1;  // least original generating all originals
  int index = 0;
  int period = 0;
};

inline std::optional<MonogenicShape> monogenic_shape(const FiniteSemigroup& s) {
  const int n = s.original_count();
  for (int g = 0; g < n; ++g) {
    std::vector<char> seen(static_cast<std::size_t>(s.monoid.order), 0);
    int count = 0;
    int x = g;
    while (!seen[static_cast<std::size_t>(x)]) {
      seen[static_cast<std::size_t>(x)] = 1;
      ++count;
      x = s.monoid.at(x, g);
    }
    if (count == n) {
      const CyclicProfile p = cyclic_profile(s.monoid, g);
      return MonogenicShape{g, p.index, p.period};
    }
  }
  return std::nullopt;
}

// The set of originals (given ascending) forms a cyclic group: returns its
// least generator, or nullopt.
inline std::optional<int> cyclic_group_generator(const FiniteSemigroup& s,
                                                 const std::vector<int>& set) {
  std::vector<char> member(static_cast<std::size_t>(s.monoid.order), 0);
  for (int x : set) member[static_cast<std::size_t>(x)] = 1;
  for (int a : set)
    for (int b : set)
      if (!member[static_cast<std::size_t>(s.monoid.at(a, b))])
        return std::nullopt;
  for (int g : set) {
    if (cyclic_profile(s.monoid, g).index != 1) continue;
    std::vector<char> seen(static_cast<std::size_t>(s.monoid.order), 0);
    int count = 0;
    int x = g;
    while (!seen[static_cast<std::size_t>(x)]) {
      seen[static_cast<std::size_t>(x)] = 1;
      ++count;
      x = s.monoid.at(x, g);
    }
    if (count == static_cast<int>(set.size())) return g;
  }
  return std::nullopt;
}

inline std::vector<int> prime_factors(int n) {
  std::vector<int> out;
  for (int q = 2; q * q <= n; ++q)
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  if (n > 1) out.push_back(n);
  return out;
}

// Powers g, g², ..., gᵏ of an original element (1-based exponent table).
inline std::vector<int> power_row(const FiniteMonoid& m, int g, int k) {
  std::vector<int> pow(static_cast<std::size_t>(k) + 1, 0);
  pow[1] = g;
  for (int i = 2; i <= k; ++i)
    pow[static_cast<std::size_t>(i)] = m.at(pow[static_cast<std::size_t>(i) - 1], g);
  return pow;
}

// A fresh two-sided identity appended to a group carrier (the result is a
// genuine monoid whose non-identity part is the group).
inline FiniteMonoid with_fresh_identity(const FiniteMonoid& g,
                                        const Limits& limits) {
  const int n = g.order + 1;
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < g.order; ++i)
    for (int j = 0; j < g.order; ++j)
      table[static_cast<std::size_t>(i) * n + j] = g.at(i, j);
  for (int i = 0; i < n; ++i) {
    table[static_cast<std::size_t>(i) * n + (n - 1)] = i;
    table[static_cast<std::size_t>(n - 1) * n + i] = i;
  }
  return validate_monoid(n, std::move(table), n - 1, limits);
}

}  // namespace detail

// Covers beyond the catalog: a stretched monogenic over a monogenic subject,
// and cyclic prime extensions when the subject is a cyclic group, a cyclic
// group with zero, or a cyclic group with a fresh identity.
inline std::vector<TargetedCover> targeted_covers(
    const FiniteSemigroup& subject, const Limits& limits = default_limits()) {
  std::vector<TargetedCover> out;
  const int n = subject.original_count();

  // Monogenic stretching: ⟨t : t^(i+1+p) = t^(i+1)⟩ over ⟨s : s^(i+p) = s^i⟩.
  if (auto shape = detail::monogenic_shape(subject)) {
    const int i = shape->index, p = shape->period;
    FamilyValue stretched = family("monogenic", {i + 1, p}, limits);
    const FiniteSemigroup& T = stretched.semigroup;
    const std::vector<int> spow =
        detail::power_row(subject.monoid, shape->generator, i + p);
    std::vector<int> map(static_cast<std::size_t>(T.monoid.order));
    for (int k = 0; k < T.original_count(); ++k) {
      int e = k + 1;                      // T original k is t^(k+1)
      if (e > i + p - 1) e -= p;          // reduce into the subject's range
      map[static_cast<std::size_t>(k)] = spow[static_cast<std::size_t>(e)];
    }
    if (T.identity_adjoined)
      map[static_cast<std::size_t>(T.monoid.identity)] =
          subject.monoid.identity;
    out.push_back(TargetedCover{
        T, make_semigroup_homomorphism(T, subject, map),
        "monogenic(" + std::to_string(i + 1) + "," + std::to_string(p) +
            ") stretching"});
  }

  if (!subject.identity_adjoined) {
    // Shape (a): the subject is a cyclic group of order n ≥ 2.
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) all[static_cast<std::size_t>(x)] = x;
    if (n >= 2) {
      if (auto gen = detail::cyclic_group_generator(subject, all)) {
        const std::vector<int> gpow = detail::power_row(subject.monoid, *gen, n);
        for (int q : detail::prime_factors(n)) {
          FiniteGroup cover = cyclic_group(n * q, limits);
          std::vector<int> map(static_cast<std::size_t>(n * q));
          for (int k = 0; k < n * q; ++k)
            map[static_cast<std::size_t>(k)] =
                (k % n == 0) ? subject.monoid.identity
                             : gpow[static_cast<std::size_t>(k % n)];
          out.push_back(TargetedCover{
              as_semigroup(cover.monoid),
              make_semigroup_homomorphism(as_semigroup(cover.monoid), subject,
                                          map),
              "cyclic extension Z/" + std::to_string(n * q)});
        }
      }
    }

    // Shape (b): cyclic group of order ≥ 2 with an absorbing zero.
    int zero = -1;
    for (int z = 0; z < n && zero < 0; ++z) {
      bool absorbing = true;
      for (int x = 0; x < n; ++x)
        if (subject.monoid.at(z, x) != z || subject.monoid.at(x, z) != z)
          absorbing = false;
      if (absorbing) zero = z;
    }
    if (zero >= 0 && n >= 3) {
      std::vector<int> rest;
      for (int x = 0; x < n; ++x)
        if (x != zero) rest.push_back(x);
      if (auto gen = detail::cyclic_group_generator(subject, rest)) {
        const int m = n - 1;  // group part order
        const std::vector<int> gpow = detail::power_row(subject.monoid, *gen, m);
        const int sub_identity = gpow[static_cast<std::size_t>(m)];
        for (int q : detail::prime_factors(m)) {
          FiniteMonoid cover = zero_adjoined(cyclic_group(m * q, limits).monoid);
          std::vector<int> map(static_cast<std::size_t>(cover.order));
          for (int k = 0; k < m * q; ++k)
            map[static_cast<std::size_t>(k)] =
                (k % m == 0) ? sub_identity : gpow[static_cast<std::size_t>(k % m)];
          map[static_cast<std::size_t>(m * q)] = zero;
          out.push_back(TargetedCover{
              as_semigroup(cover),
              make_semigroup_homomorphism(as_semigroup(cover), subject, map),
              "zero-adjoined cyclic extension Z/" + std::to_string(m * q)});
        }
      }
    }

    // Shape (c): cyclic group of order ≥ 2 under a fresh identity.
    const int e = subject.monoid.identity;
    std::vector<int> rest;
    for (int x = 0; x < n; ++x)
      if (x != e) rest.push_back(x);
    if (n >= 3) {
      bool group_has_own_identity = true;
      if (auto gen = detail::cyclic_group_generator(subject, rest)) {
        const int m = n - 1;
        const std::vector<int> gpow = detail::power_row(subject.monoid, *gen, m);
        const int sub_identity = gpow[static_cast<std::size_t>(m)];
        if (sub_identity == e) group_has_own_identity = false;
        if (group_has_own_identity) {
          for (int q : detail::prime_factors(m)) {
            FiniteMonoid cover =
                detail::with_fresh_identity(cyclic_group(m * q, limits).monoid,
                                            limits);
            std::vector<int> map(static_cast<std::size_t>(cover.order));
            for (int k = 0; k < m * q; ++k)
              map[static_cast<std::size_t>(k)] =
                  (k % m == 0) ? sub_identity
                               : gpow[static_cast<std::size_t>(k % m)];
            map[static_cast<std::size_t>(m * q)] = e;
            out.push_back(TargetedCover{
                as_semigroup(cover),
                make_semigroup_homomorphism(as_semigroup(cover), subject, map),
                "identity-adjoined cyclic extension Z/" + std::to_string(m * q)});
          }
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Verdicts.

enum class SplitOutcome { no_witness_up_to_bound, witness };

struct ProjectivityVerdict {
  FiniteSemigroup subject;
  int bound = 0;
  SplitOutcome outcome = SplitOutcome::no_witness_up_to_bound;
  std::optional<FiniteSemigroup> T;   // witness cover
  std::optional<Homomorphism> phi;    // witness onto map with no splitting
  std::string description;            // where the witness cover came from
};

inline ProjectivityVerdict projective_up_to_bound(
    const FiniteSemigroup& subject, int bound,
    const Limits& limits = default_limits()) {
  ProjectivityVerdict verdict;
  verdict.subject = subject;
  verdict.bound = bound;

  for (const TargetedCover& cover : targeted_covers(subject, limits)) {
    if (!split_search(cover.T, subject, cover.phi, limits)) {
      verdict.outcome = SplitOutcome::witness;
      verdict.T = cover.T;
      verdict.phi = cover.phi;
      verdict.description = cover.description;
      return verdict;
    }
  }
  for (int order = 1; order <= bound; ++order) {
    const std::vector<FiniteSemigroup> catalog =
        enumerate_semigroups(order, limits);
    for (std::size_t c = 0; c < catalog.size(); ++c) {
      const FiniteSemigroup& T = catalog[c];
      for (const Homomorphism& phi :
           all_onto_semigroup_homs(T, subject, limits)) {
        if (!split_search(T, subject, phi, limits)) {
          verdict.outcome = SplitOutcome::witness;
          verdict.T = T;
          verdict.phi = phi;
          verdict.description = "catalog order " + std::to_string(order) +
                                " entry " + std::to_string(c);
          return verdict;
        }
      }
    }
  }
  return verdict;
}

// ---------------------------------------------------------------------------
// Desk-scale shadow of the projective ⇒ band theorem.

struct BandScanEntry {
  int order = 0;
  int catalog_index = 0;
  bool is_band = false;
  ProjectivityVerdict verdict;
  bool inconclusive = false;  // non-band with no witness found (bound too small)
};

struct BandScanReport {
  int max_order = 0;
  int bound = 0;
  std::vector<BandScanEntry> entries;
  int bands = 0;
  int witnessed = 0;
  int inconclusive = 0;
  bool consistent = true;  // every no-witness subject is a band
};

inline BandScanReport band_theorem_scan(int max_order, int bound,
                                        const Limits& limits = default_limits()) {
  BandScanReport report;
  report.max_order = max_order;
  report.bound = bound;
  for (int order = 1; order <= max_order; ++order) {
    const std::vector<FiniteSemigroup> catalog =
        enumerate_semigroups(order, limits);
    for (std::size_t c = 0; c < catalog.size(); ++c) {
      BandScanEntry entry;
      entry.order = order;
      entry.catalog_index = static_cast<int>(c);
      entry.is_band = greens::classify(catalog[c]).is_band;
      entry.verdict = projective_up_to_bound(catalog[c], bound, limits);
      entry.inconclusive =
          !entry.is_band &&
          entry.verdict.outcome == SplitOutcome::no_witness_up_to_bound;
      if (entry.is_band) ++report.bands;
      if (entry.verdict.outcome == SplitOutcome::witness) ++report.witnessed;
      if (entry.inconclusive) ++report.inconclusive;
      if (entry.verdict.outcome == SplitOutcome::no_witness_up_to_bound &&
          !entry.is_band)
        report.consistent = false;
      report.entries.push_back(std::move(entry));
    }
  }
  return report;
}

}  // namespace projectivity
}  // namespace mlab
