#pragma once

// Wreath products T ≀ (Q, N), the coset embedding of a group into
// B ≀ (B̃/B, H), and the Schützenberger structure of a monoid at an
// idempotent together with its monomial embedding M ↪ H⁰ ≀ (Q*, N).

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "mlab/core.hpp"
#include "mlab/families.hpp"
#include "mlab/greens.hpp"
#include "mlab/groups.hpp"

namespace mlab {
namespace wreath {

// Elements of T ≀ (Q, N) are pairs (f: Q → T, n ∈ N) with
// (f,n)(f′,n′) = (f · ⁿf′, n·n′) where (q)(ⁿf′) = (q·n)f′.
// Encoding: mixed radix, f's digits big-endian over the point set, the bottom
// element least significant: index = (((f[0]·t + f[1])·t + …)·t + f[q−1])·n + b.
struct WreathProduct {
  FiniteMonoid top;
  MonoidAction bottom;  // bottom.monoid acting on bottom.set_size points
  FiniteMonoid product;

  int encode(const std::vector<int>& f, int n) const {
    long long idx = 0;
    for (int q = 0; q < bottom.set_size; ++q)
      idx = idx * top.order + f[static_cast<std::size_t>(q)];
    return static_cast<int>(idx * bottom.monoid.order + n);
  }
  std::pair<std::vector<int>, int> decode(int index) const {
    const int n = index % bottom.monoid.order;
    int rest = index / bottom.monoid.order;
    std::vector<int> f(static_cast<std::size_t>(bottom.set_size));
    for (int q = bottom.set_size - 1; q >= 0; --q) {
      f[static_cast<std::size_t>(q)] = rest % top.order;
      rest /= top.order;
    }
    return {std::move(f), n};
  }
};

inline WreathProduct wreath_product(const FiniteMonoid& top,
                                    const MonoidAction& bottom,
                                    const Limits& limits = default_limits()) {
  long long order = bottom.monoid.order;
  for (int q = 0; q < bottom.set_size; ++q) {
    order *= top.order;
    if (order > limits.max_order)
      fail(ErrorKind::size_limit_exceeded,
           "wreath product exceeds the order cap", order, limits.max_order);
  }
  WreathProduct w;
  w.top = top;
  w.bottom = bottom;
  const int total = static_cast<int>(order);
  const int q = bottom.set_size;
  std::vector<int> table(static_cast<std::size_t>(total) *
                         static_cast<std::size_t>(total));
  std::vector<int> fi, fj, fr(static_cast<std::size_t>(q));
  for (int i = 0; i < total; ++i) {
    auto di = w.decode(i);
    fi = di.first;
    const int ni = di.second;
    for (int j = 0; j < total; ++j) {
      auto dj = w.decode(j);
      fj = dj.first;
      const int nj = dj.second;
      for (int x = 0; x < q; ++x)
        fr[static_cast<std::size_t>(x)] =
            top.at(fi[static_cast<std::size_t>(x)],
                   fj[static_cast<std::size_t>(bottom.at(x, ni))]);
      table[static_cast<std::size_t>(i) * total + j] =
          w.encode(fr, bottom.monoid.at(ni, nj));
    }
  }
  std::vector<int> unit(static_cast<std::size_t>(q), top.identity);
  const int identity = w.encode(unit, bottom.monoid.identity);
  w.product = validate_monoid(total, std::move(table), identity, limits);
  return w;
}

// ---------------------------------------------------------------------------
// Coset embedding of a finite group into B ≀ (B̃/B, H).

struct KrasnerKaloujnine {
  FiniteGroup Btilde;
  embedding::SubgroupWitness B;  // the distinguished subgroup, re-indexed
  int num_cosets = 1;
  std::vector<int> coset_of;     // ambient index -> coset id (B's coset = 0)
  std::vector<int> coset_rep;    // coset id -> ambient rep; rep of B = identity
  FiniteGroup H;                 // B̃ / kernel of the right-coset action
  Homomorphism to_H;             // B̃ -> H, surjective
  MonoidAction coset_action;     // H acting on the cosets
  WreathProduct wreath;          // B ≀ (B̃/B, H)
  Homomorphism embed;            // B̃ -> wreath.product, injective
  Submonoid embedded_B;          // image of B inside the wreath product
  Homomorphism tau;              // embedded_B -> B.group, an isomorphism

  // Top coordinate over B's own coset — the τ direction.
  int top_at_base(int wreath_index) const {
    return wreath.decode(wreath_index).first[0];
  }
};

// g ∈ B̃ maps to (f_g, [g]) with f_g(Bb) = rep(Bb)·g·rep(Bbg)⁻¹.  Coset
// representatives: the identity for B itself, least element index otherwise.
inline KrasnerKaloujnine krasner_kaloujnine(
    const FiniteGroup& Btilde, const std::vector<int>& B_elements,
    const Limits& limits = default_limits()) {
  KrasnerKaloujnine kk;
  kk.Btilde = Btilde;
  kk.B = embedding::subgroup_from_elements(Btilde, B_elements);

  // Right cosets Bg, the coset of the identity (= B) first, the rest in order
  // of least member.
  const int n = Btilde.order();
  std::map<std::vector<int>, int> coset_ids;
  std::vector<std::vector<int>> keys(static_cast<std::size_t>(n));
  for (int g = 0; g < n; ++g) {
    std::vector<int> coset;
    coset.reserve(kk.B.elements.size());
    for (int b : kk.B.elements) coset.push_back(Btilde.at(b, g));
    std::sort(coset.begin(), coset.end());
    keys[static_cast<std::size_t>(g)] = std::move(coset);
  }
  kk.coset_of.assign(static_cast<std::size_t>(n), -1);
  coset_ids.emplace(keys[static_cast<std::size_t>(Btilde.identity())], 0);
  for (int g = 0; g < n; ++g) {
    auto [it, inserted] = coset_ids.emplace(keys[static_cast<std::size_t>(g)],
                                            static_cast<int>(coset_ids.size()));
    kk.coset_of[static_cast<std::size_t>(g)] = it->second;
  }
  kk.num_cosets = static_cast<int>(coset_ids.size());
  kk.coset_rep.assign(static_cast<std::size_t>(kk.num_cosets), -1);
  kk.coset_rep[0] = Btilde.identity();
  for (int g = 0; g < n; ++g) {
    int& rep = kk.coset_rep[static_cast<std::size_t>(
        kk.coset_of[static_cast<std::size_t>(g)])];
    if (rep < 0) rep = g;
  }

  // H = B̃ / kernel of the right-multiplication action on the cosets.
  std::vector<int> act(static_cast<std::size_t>(kk.num_cosets) * n);
  for (int c = 0; c < kk.num_cosets; ++c)
    for (int g = 0; g < n; ++g)
      act[static_cast<std::size_t>(c) * n + g] =
          kk.coset_of[static_cast<std::size_t>(
              Btilde.at(kk.coset_rep[static_cast<std::size_t>(c)], g))];
  MonoidAction coset_action_full =
      make_action(Btilde.monoid, kk.num_cosets, act);
  Congruence ker = kernel_congruence_of_action(Btilde.monoid, coset_action_full);
  QuotientDecomposition q = quotient_by_congruence(Btilde.monoid, ker);
  kk.H = validate_group(q.quotient);
  kk.to_H = std::move(q.projection);

  // The induced faithful action of H on the cosets.
  std::vector<int> preimage(static_cast<std::size_t>(kk.H.order()), -1);
  for (int g = 0; g < n; ++g) {
    int& p = preimage[static_cast<std::size_t>(kk.to_H(g))];
    if (p < 0) p = g;
  }
  std::vector<int> act_h(static_cast<std::size_t>(kk.num_cosets) *
                         kk.H.order());
  for (int c = 0; c < kk.num_cosets; ++c)
    for (int h = 0; h < kk.H.order(); ++h)
      act_h[static_cast<std::size_t>(c) * kk.H.order() + h] =
          coset_action_full.at(c, preimage[static_cast<std::size_t>(h)]);
  kk.coset_action = make_action(kk.H.monoid, kk.num_cosets, act_h);

  kk.wreath = wreath_product(kk.B.group.monoid, kk.coset_action, limits);

  // The embedding g ↦ (f_g, [g]).
  std::vector<int> map(static_cast<std::size_t>(n));
  std::vector<int> digits(static_cast<std::size_t>(kk.num_cosets));
  for (int g = 0; g < n; ++g) {
    for (int c = 0; c < kk.num_cosets; ++c) {
      const int r1 = kk.coset_rep[static_cast<std::size_t>(c)];
      const int rg = Btilde.at(r1, g);
      const int r2 =
          kk.coset_rep[static_cast<std::size_t>(kk.coset_of[static_cast<std::size_t>(rg)])];
      const int val = Btilde.at(rg, Btilde.inv(r2));
      const int b_idx = kk.B.index_of[static_cast<std::size_t>(val)];
      if (b_idx < 0)
        fail(ErrorKind::internal_error,
             "coset cocycle left the subgroup (construction bug)", g, c, val);
      digits[static_cast<std::size_t>(c)] = b_idx;
    }
    map[static_cast<std::size_t>(g)] = kk.wreath.encode(digits, kk.to_H(g));
  }
  kk.embed = make_homomorphism(Btilde.monoid, kk.wreath.product, map);
  if (!kk.embed.injective)
    fail(ErrorKind::internal_error,
         "coset embedding failed to be injective (construction bug)");

  // τ: the embedded copy of B maps isomorphically back onto B via the top
  // coordinate over B's own coset.
  std::vector<int> b_image;
  b_image.reserve(kk.B.elements.size());
  for (int b : kk.B.elements)
    b_image.push_back(kk.embed(b));
  kk.embedded_B = submonoid_closure(kk.wreath.product, b_image);
  if (kk.embedded_B.monoid.order != static_cast<int>(kk.B.elements.size()))
    fail(ErrorKind::internal_error,
         "embedded copy of the subgroup is not closed (construction bug)",
         kk.embedded_B.monoid.order,
         static_cast<long long>(kk.B.elements.size()));
  std::vector<int> tau_map(static_cast<std::size_t>(kk.embedded_B.monoid.order));
  for (int i = 0; i < kk.embedded_B.monoid.order; ++i)
    tau_map[static_cast<std::size_t>(i)] =
        kk.top_at_base(kk.embedded_B.elements[static_cast<std::size_t>(i)]);
  kk.tau = make_homomorphism(kk.embedded_B.monoid, kk.B.group.monoid, tau_map);
  if (!kk.tau.injective || !kk.tau.surjective)
    fail(ErrorKind::internal_error,
         "tau failed to be an isomorphism (construction bug)");
  return kk;
}

// ---------------------------------------------------------------------------
// Schützenberger structure at an idempotent.

struct SchutzStructure {
  FiniteMonoid m;
  int e = 0;
  std::vector<int> R;           // the R-class of e, element indices ascending
  std::vector<int> r_index_of;  // ambient index -> position in R, or -1
  greens::MaximalSubgroup H;    // maximal subgroup at e
  std::vector<int> orbit_of;    // per R position: orbit id (e's orbit = 0)
  std::vector<int> reps;        // orbit id -> ambient rep; reps[0] = e
  int num_orbits = 0;
  int star = 0;                 // index of ★ in Q* (always num_orbits)
  MonoidAction m_qstar;         // M acting on Q* = orbits ∪ {★}
  FiniteMonoid N;               // M / kernel of the Q*-action
  Homomorphism to_N;            // M -> N, surjective
  MonoidAction qstar_action;    // N acting on Q*
};

inline SchutzStructure schutz_structure(const FiniteMonoid& m, int e,
                                        const Limits& limits = default_limits()) {
  (void)limits;  // sizes here are bounded by |M| itself
  if (m.at(e, e) != e)
    fail(ErrorKind::not_idempotent,
         "Schützenberger structure needs an idempotent", e);
  SchutzStructure s;
  s.m = m;
  s.e = e;
  s.R = greens::r_class_of_element(m, e);
  s.r_index_of.assign(static_cast<std::size_t>(m.order), -1);
  const int rsize = static_cast<int>(s.R.size());
  for (int i = 0; i < rsize; ++i)
    s.r_index_of[static_cast<std::size_t>(s.R[static_cast<std::size_t>(i)])] = i;
  s.H = greens::maximal_subgroup(m, e);
  for (int h : s.H.elements)
    if (s.r_index_of[static_cast<std::size_t>(h)] < 0)
      fail(ErrorKind::internal_error,
           "maximal subgroup escaped the R-class (construction bug)", h);

  // The left H-action on R: verify closure and freeness.
  for (int h : s.H.elements)
    for (int r : s.R) {
      const int hr = m.at(h, r);
      if (s.r_index_of[static_cast<std::size_t>(hr)] < 0)
        fail(ErrorKind::internal_error,
             "left H-action left the R-class (construction bug)", h, r);
      if (hr == r && h != e)
        fail(ErrorKind::freeness_violation,
             "maximal subgroup fails to act freely on the R-class", h, r);
    }

  // Orbits of the left H-action; e's orbit gets id 0, the rest appear by
  // least member, with that member as representative.
  std::vector<int> orbit_of_pos(static_cast<std::size_t>(rsize), -1);
  auto mark_orbit = [&](int r, int id) {
    for (int h : s.H.elements) {
      const int pos =
          s.r_index_of[static_cast<std::size_t>(m.at(h, r))];
      orbit_of_pos[static_cast<std::size_t>(pos)] = id;
    }
  };
  mark_orbit(e, 0);
  s.reps.push_back(e);
  for (int i = 0; i < rsize; ++i) {
    if (orbit_of_pos[static_cast<std::size_t>(i)] >= 0) continue;
    const int id = static_cast<int>(s.reps.size());
    s.reps.push_back(s.R[static_cast<std::size_t>(i)]);
    mark_orbit(s.R[static_cast<std::size_t>(i)], id);
  }
  s.orbit_of = std::move(orbit_of_pos);
  s.num_orbits = static_cast<int>(s.reps.size());
  s.star = s.num_orbits;

  // The right M-action is an automorphism of the left H-action: r·x defined
  // iff (h·r)·x defined, and h·(r·x) = (h·r)·x.
  for (int h : s.H.elements)
    for (int r : s.R)
      for (int x = 0; x < m.order; ++x) {
        const int rx = m.at(r, x);
        const int hrx = m.at(m.at(h, r), x);
        const bool def1 = s.r_index_of[static_cast<std::size_t>(rx)] >= 0;
        const bool def2 = s.r_index_of[static_cast<std::size_t>(hrx)] >= 0;
        if (def1 != def2)
          fail(ErrorKind::internal_error,
               "partial action not H-equivariant (construction bug)", h, r, x);
        if (def1 && m.at(h, rx) != hrx)
          fail(ErrorKind::internal_error,
               "partial action not H-equivariant (construction bug)", h, r, x);
      }

  // Q* action of M: q·x = orbit(r·x) for any r in the orbit, ★ when r·x
  // leaves R; ★ is absorbing.  Well-definedness across the orbit is checked.
  const int qsize = s.num_orbits + 1;
  std::vector<int> act(static_cast<std::size_t>(qsize) * m.order, -1);
  for (int i = 0; i < rsize; ++i) {
    const int r = s.R[static_cast<std::size_t>(i)];
    const int q = s.orbit_of[static_cast<std::size_t>(i)];
    for (int x = 0; x < m.order; ++x) {
      const int pos = s.r_index_of[static_cast<std::size_t>(m.at(r, x))];
      const int target =
          pos < 0 ? s.star : s.orbit_of[static_cast<std::size_t>(pos)];
      int& cell = act[static_cast<std::size_t>(q) * m.order + x];
      if (cell < 0)
        cell = target;
      else if (cell != target)
        fail(ErrorKind::internal_error,
             "orbit action ill-defined (construction bug)", q, x);
    }
  }
  for (int x = 0; x < m.order; ++x)
    act[static_cast<std::size_t>(s.star) * m.order + x] = s.star;
  s.m_qstar = make_action(m, qsize, act);

  Congruence ker = kernel_congruence_of_action(m, s.m_qstar);
  QuotientDecomposition q = quotient_by_congruence(m, ker);
  s.N = std::move(q.quotient);
  s.to_N = std::move(q.projection);

  std::vector<int> preimage(static_cast<std::size_t>(s.N.order), -1);
  for (int x = 0; x < m.order; ++x) {
    int& p = preimage[static_cast<std::size_t>(s.to_N(x))];
    if (p < 0) p = x;
  }
  std::vector<int> act_n(static_cast<std::size_t>(qsize) * s.N.order);
  for (int c = 0; c < qsize; ++c)
    for (int v = 0; v < s.N.order; ++v)
      act_n[static_cast<std::size_t>(c) * s.N.order + v] =
          s.m_qstar.at(c, preimage[static_cast<std::size_t>(v)]);
  s.qstar_action = make_action(s.N, qsize, act_n);
  return s;
}

// ---------------------------------------------------------------------------
// The monomial embedding M ↪ H⁰ ≀ (Q*, N).

struct SchutzEmbedding {
  WreathProduct wreath;  // H⁰ ≀ (Q*, N)
  Homomorphism embed;    // m -> wreath.product; multiplicative and injective
  int zero_top = 0;      // index of the adjoined zero in H⁰

  // Top coordinate over e's orbit — evaluating τ on the embedded copy of H.
  int top_at_base(int wreath_index) const {
    return wreath.decode(wreath_index).first[0];
  }
};

// Requires M to act faithfully on R (run faithful_r_quotient first if not):
// x is sent to (f_x, [x]) with f_x(★) = 0, f_x(q) = 0 when q·x = ★, and
// otherwise the unique h ∈ H with rep(q)·x = h·rep(q·x).
inline SchutzEmbedding schutz_embedding(const SchutzStructure& s,
                                        const Limits& limits = default_limits()) {
  const FiniteMonoid& m = s.m;
  const int rsize = static_cast<int>(s.R.size());
  // Faithfulness on R: distinct elements must act differently.
  {
    std::map<std::vector<int>, int> rows;
    for (int x = 0; x < m.order; ++x) {
      std::vector<int> row(static_cast<std::size_t>(rsize));
      for (int i = 0; i < rsize; ++i) {
        const int rx = m.at(s.R[static_cast<std::size_t>(i)], x);
        row[static_cast<std::size_t>(i)] =
            s.r_index_of[static_cast<std::size_t>(rx)];
      }
      auto [it, inserted] = rows.emplace(std::move(row), x);
      if (!inserted)
        fail(ErrorKind::not_faithful_on_r,
             "two elements act identically on the R-class", it->second, x);
    }
  }

  SchutzEmbedding out;
  out.zero_top = s.H.group.order();
  FiniteMonoid h0 = zero_adjoined(s.H.group.monoid, limits);
  out.wreath = wreath_product(h0, s.qstar_action, limits);

  const int hsize = s.H.group.order();
  std::vector<int> map(static_cast<std::size_t>(m.order));
  std::vector<int> digits(static_cast<std::size_t>(s.num_orbits + 1));
  for (int x = 0; x < m.order; ++x) {
    for (int q = 0; q < s.num_orbits; ++q) {
      const int qx = s.m_qstar.at(q, x);
      if (qx == s.star) {
        digits[static_cast<std::size_t>(q)] = out.zero_top;
        continue;
      }
      const int lhs = m.at(s.reps[static_cast<std::size_t>(q)], x);
      int found = -1;
      for (int h = 0; h < hsize; ++h) {
        if (m.at(s.H.elements[static_cast<std::size_t>(h)],
                 s.reps[static_cast<std::size_t>(qx)]) == lhs) {
          if (found >= 0)
            fail(ErrorKind::internal_error,
                 "monomial coefficient not unique (freeness bug)", x, q);
          found = h;
        }
      }
      if (found < 0)
        fail(ErrorKind::internal_error,
             "monomial coefficient missing (transitivity bug)", x, q);
      digits[static_cast<std::size_t>(q)] = found;
    }
    digits[static_cast<std::size_t>(s.star)] = out.zero_top;
    map[static_cast<std::size_t>(x)] = out.wreath.encode(digits, s.to_N(x));
  }
  out.embed = make_mult_homomorphism(m, out.wreath.product, map);
  if (!out.embed.injective)
    fail(ErrorKind::internal_error,
         "monomial embedding failed to be injective (construction bug)");
  return out;
}

// Quotient of M by the kernel of its partial right action on the R-class of
// e (totalized with an undefined-marker).  The quotient acts faithfully on
// the R-class of the image idempotent.
inline QuotientDecomposition faithful_r_quotient(
    const FiniteMonoid& m, int e, const Limits& limits = default_limits()) {
  (void)limits;
  if (m.at(e, e) != e)
    fail(ErrorKind::not_idempotent,
         "faithful quotient needs an idempotent", e);
  std::vector<int> R = greens::r_class_of_element(m, e);
  std::vector<int> r_index_of(static_cast<std::size_t>(m.order), -1);
  const int rsize = static_cast<int>(R.size());
  for (int i = 0; i < rsize; ++i)
    r_index_of[static_cast<std::size_t>(R[static_cast<std::size_t>(i)])] = i;
  const int undef = rsize;
  std::vector<int> act(static_cast<std::size_t>(rsize + 1) * m.order);
  for (int i = 0; i < rsize; ++i)
    for (int x = 0; x < m.order; ++x) {
      const int pos =
          r_index_of[static_cast<std::size_t>(m.at(R[static_cast<std::size_t>(i)], x))];
      act[static_cast<std::size_t>(i) * m.order + x] = pos < 0 ? undef : pos;
    }
  for (int x = 0; x < m.order; ++x)
    act[static_cast<std::size_t>(undef) * m.order + x] = undef;
  MonoidAction action = make_action(m, rsize + 1, act);
  Congruence ker = kernel_congruence_of_action(m, action);
  return quotient_by_congruence(m, ker);
}

}  // namespace wreath
}  // namespace mlab
