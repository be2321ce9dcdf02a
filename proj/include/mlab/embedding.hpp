#pragma once

// Embedding problems (pairs of epimorphisms φ: G↠B, α: A↠B), weak-solution
// search, pullbacks of epimorphisms, the coset-wreath obstruction transfer,
// its monoid analogue through the Schützenberger embedding, and the
// per-idempotent subgroup extension check.

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "mlab/core.hpp"
#include "mlab/greens.hpp"
#include "mlab/groups.hpp"
#include "mlab/wreath.hpp"

namespace mlab {
namespace embedding {

struct EmbeddingProblem {
  FiniteGroup G, B, A;
  Homomorphism phi;    // G ↠ B
  Homomorphism alpha;  // A ↠ B
  SubgroupWitness K;   // ker α ≤ A
};

inline EmbeddingProblem make_embedding_problem(FiniteGroup G, FiniteGroup B,
                                               FiniteGroup A, Homomorphism phi,
                                               Homomorphism alpha) {
  if (phi.source != G.monoid || phi.target != B.monoid)
    fail(ErrorKind::domain_mismatch, "phi must map G onto B");
  if (alpha.source != A.monoid || alpha.target != B.monoid)
    fail(ErrorKind::domain_mismatch, "alpha must map A onto B");
  if (!phi.surjective)
    fail(ErrorKind::validation_error, "phi must be surjective");
  if (!alpha.surjective)
    fail(ErrorKind::validation_error, "alpha must be surjective");
  SubgroupWitness K = subgroup_from_elements(A, kernel_elements(alpha));
  return EmbeddingProblem{std::move(G), std::move(B), std::move(A),
                          std::move(phi), std::move(alpha), std::move(K)};
}

struct WeakSolution {
  Homomorphism lift;  // G -> A with lift then alpha = phi
};

namespace detail {

// Greedy generating sequence: repeatedly adjoin the least element outside the
// closure so far.  The DFS over ascending fiber choices then visits complete
// lifts in lexicographic map order.
inline std::vector<int> greedy_generators(const FiniteMonoid& g) {
  std::vector<int> gens;
  std::vector<char> in_closure(static_cast<std::size_t>(g.order), 0);
  in_closure[static_cast<std::size_t>(g.identity)] = 1;
  int covered = 1;
  while (covered < g.order) {
    int next = -1;
    for (int x = 0; x < g.order; ++x)
      if (!in_closure[static_cast<std::size_t>(x)]) {
        next = x;
        break;
      }
    gens.push_back(next);
    Submonoid sub = submonoid_closure(g, gens);
    for (int x : sub.elements) {
      char& c = in_closure[static_cast<std::size_t>(x)];
      if (!c) {
        c = 1;
        ++covered;
      }
    }
    covered = 0;
    for (char c : in_closure) covered += c;
  }
  return gens;
}

// Extend generator images to the submonoid they generate by right
// multiplication; returns false on a conflict.  `map` uses -1 for unset.
inline bool extend_by_closure(const FiniteMonoid& g, const FiniteMonoid& a,
                              const std::vector<int>& gens,
                              std::size_t gens_assigned,
                              std::vector<int>* map) {
  std::vector<int> frontier;
  frontier.push_back(g.identity);
  std::vector<char> queued(static_cast<std::size_t>(g.order), 0);
  queued[static_cast<std::size_t>(g.identity)] = 1;
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    const int x = frontier[i];
    for (std::size_t k = 0; k < gens_assigned; ++k) {
      const int gen = gens[k];
      const int xg = g.at(x, gen);
      const int img = a.at((*map)[static_cast<std::size_t>(x)],
                           (*map)[static_cast<std::size_t>(gen)]);
      int& cell = (*map)[static_cast<std::size_t>(xg)];
      if (cell < 0)
        cell = img;
      else if (cell != img)
        return false;
      if (!queued[static_cast<std::size_t>(xg)]) {
        queued[static_cast<std::size_t>(xg)] = 1;
        frontier.push_back(xg);
      }
    }
  }
  return true;
}

inline bool is_full_homomorphism(const FiniteMonoid& g, const FiniteMonoid& a,
                                 const std::vector<int>& map) {
  if (map[static_cast<std::size_t>(g.identity)] != a.identity) return false;
  for (int x = 0; x < g.order; ++x)
    for (int y = 0; y < g.order; ++y)
      if (map[static_cast<std::size_t>(g.at(x, y))] !=
          a.at(map[static_cast<std::size_t>(x)],
               map[static_cast<std::size_t>(y)]))
        return false;
  return true;
}

}  // namespace detail

// Lexicographically least lift of phi through alpha (lift then alpha = phi),
// or nullopt when none exists.  phi need not be surjective; alpha should be
// (an element of phi's image outside alpha's image makes the answer nullopt).
inline std::optional<Homomorphism> solve_weak(
    const Homomorphism& phi, const Homomorphism& alpha,
    long long budget = default_limits().search_budget) {
  if (phi.target != alpha.target)
    fail(ErrorKind::codomain_mismatch,
         "phi and alpha must share their codomain");
  const FiniteMonoid& g = phi.source;
  const FiniteMonoid& a = alpha.source;

  const std::vector<int> gens = detail::greedy_generators(g);
  std::vector<std::vector<int>> fibers(gens.size());
  long long space = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const int want = phi(gens[i]);
    for (int x = 0; x < a.order; ++x)
      if (alpha(x) == want) fibers[i].push_back(x);
    if (fibers[i].empty()) return std::nullopt;
    space *= static_cast<long long>(fibers[i].size());
    if (space > budget)
      fail(ErrorKind::budget_exceeded,
           "weak-solution search space exceeds the budget", space, budget);
  }

  std::vector<int> map(static_cast<std::size_t>(g.order), -1);
  std::vector<std::size_t> choice(gens.size(), 0);
  std::size_t depth = 0;
  if (gens.empty()) {
    std::vector<int> trivial(static_cast<std::size_t>(g.order), a.identity);
    Homomorphism lift = make_homomorphism(g, a, trivial);
    if (compose(lift, alpha).map == phi.map) return lift;
    return std::nullopt;
  }
  while (true) {
    if (choice[depth] >= fibers[depth].size()) {
      choice[depth] = 0;
      if (depth == 0) return std::nullopt;
      --depth;
      ++choice[depth];
      continue;
    }
    // Rebuild the partial map for this prefix of generator choices.
    std::fill(map.begin(), map.end(), -1);
    map[static_cast<std::size_t>(g.identity)] = a.identity;
    bool ok = true;
    for (std::size_t i = 0; i <= depth; ++i) {
      int& cell = map[static_cast<std::size_t>(gens[i])];
      const int img = fibers[i][choice[i]];
      if (cell >= 0 && cell != img) {
        ok = false;
        break;
      }
      cell = img;
    }
    if (ok) ok = detail::extend_by_closure(g, a, gens, depth + 1, &map);
    if (ok && depth + 1 == gens.size()) {
      bool full = true;
      for (int x = 0; x < g.order; ++x)
        if (map[static_cast<std::size_t>(x)] < 0) full = false;
      if (full && detail::is_full_homomorphism(g, a, map)) {
        bool lifts = true;
        for (int x = 0; x < g.order; ++x)
          if (alpha(map[static_cast<std::size_t>(x)]) != phi(x)) lifts = false;
        if (lifts) return make_homomorphism(g, a, map);
      }
      ++choice[depth];
      continue;
    }
    if (!ok) {
      ++choice[depth];
      continue;
    }
    ++depth;
  }
}

inline std::optional<WeakSolution> solve_weak(
    const EmbeddingProblem& p,
    long long budget = default_limits().search_budget) {
  auto lift = solve_weak(p.phi, p.alpha, budget);
  if (!lift) return std::nullopt;
  return WeakSolution{std::move(*lift)};
}

// ---------------------------------------------------------------------------
// Pullback (fiber product) of α: A↠B along ψ: Gi↠B.

struct Pullback {
  FiniteGroup P;                            // {(a,g) : α(a) = ψ(g)}, (a,g) lex
  std::vector<std::pair<int, int>> elements;
  Homomorphism alpha_prime;                 // P ↠ Gi
  Homomorphism psi_star;                    // P ↠ A
  SubgroupWitness kerA;                     // ker α ≤ A
  SubgroupWitness kerP;                     // ker α′ ≤ P
  Homomorphism kernel_iso;                  // kerA.group → kerP.group, a ↦ (a,1)
};

inline Pullback pullback(const FiniteGroup& A, const FiniteGroup& Gi,
                         const Homomorphism& alpha, const Homomorphism& psi,
                         const Limits& limits = default_limits()) {
  if (alpha.source != A.monoid)
    fail(ErrorKind::domain_mismatch, "alpha must be defined on A");
  if (psi.source != Gi.monoid)
    fail(ErrorKind::domain_mismatch, "psi must be defined on Gi");
  if (alpha.target != psi.target)
    fail(ErrorKind::codomain_mismatch,
         "pullback needs a shared codomain");
  if (!alpha.surjective || !psi.surjective)
    fail(ErrorKind::validation_error,
         "pullback expects surjective structure maps");

  Pullback out;
  std::map<std::pair<int, int>, int> index_of;
  for (int x = 0; x < A.order(); ++x)
    for (int y = 0; y < Gi.order(); ++y)
      if (alpha(x) == psi(y)) {
        index_of.emplace(std::make_pair(x, y),
                         static_cast<int>(out.elements.size()));
        out.elements.emplace_back(x, y);
      }
  const int n = static_cast<int>(out.elements.size());
  if (n > limits.max_order)
    fail(ErrorKind::size_limit_exceeded, "pullback exceeds the order cap", n,
         limits.max_order);
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const std::pair<int, int> prod(
          A.at(out.elements[static_cast<std::size_t>(i)].first,
               out.elements[static_cast<std::size_t>(j)].first),
          Gi.at(out.elements[static_cast<std::size_t>(i)].second,
                out.elements[static_cast<std::size_t>(j)].second));
      auto it = index_of.find(prod);
      if (it == index_of.end())
        fail(ErrorKind::internal_error,
             "pullback is not closed (construction bug)", i, j);
      table[static_cast<std::size_t>(i) * n + j] = it->second;
    }
  const int identity =
      index_of.at(std::make_pair(A.identity(), Gi.identity()));
  out.P = validate_group(validate_monoid(n, std::move(table), identity, limits));

  std::vector<int> amap(static_cast<std::size_t>(n)), pmap(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    amap[static_cast<std::size_t>(i)] = out.elements[static_cast<std::size_t>(i)].second;
    pmap[static_cast<std::size_t>(i)] = out.elements[static_cast<std::size_t>(i)].first;
  }
  out.alpha_prime = make_homomorphism(out.P.monoid, Gi.monoid, amap);
  out.psi_star = make_homomorphism(out.P.monoid, A.monoid, pmap);
  if (!out.alpha_prime.surjective || !out.psi_star.surjective)
    fail(ErrorKind::internal_error,
         "pullback projections failed surjectivity (construction bug)");
  // Commuting square: alpha_prime;psi = psi_star;alpha.
  if (compose(out.alpha_prime, psi).map != compose(out.psi_star, alpha).map)
    fail(ErrorKind::internal_error,
         "pullback square does not commute (construction bug)");

  out.kerA = subgroup_from_elements(A, kernel_elements(alpha));
  out.kerP = subgroup_from_elements(out.P, kernel_elements(out.alpha_prime));
  std::vector<int> iso(out.kerA.elements.size());
  for (std::size_t i = 0; i < out.kerA.elements.size(); ++i) {
    auto it = index_of.find(std::make_pair(out.kerA.elements[i], Gi.identity()));
    if (it == index_of.end() ||
        out.kerP.index_of[static_cast<std::size_t>(it->second)] < 0)
      fail(ErrorKind::internal_error,
           "kernel witness left the pullback kernel (construction bug)",
           out.kerA.elements[i]);
    iso[i] = out.kerP.index_of[static_cast<std::size_t>(it->second)];
  }
  out.kernel_iso =
      make_homomorphism(out.kerA.group.monoid, out.kerP.group.monoid, iso);
  if (!out.kernel_iso.injective || !out.kernel_iso.surjective)
    fail(ErrorKind::internal_error,
         "kernel comparison map is not an isomorphism (construction bug)");
  return out;
}

// ---------------------------------------------------------------------------
// Obstruction transfer along B ≤ B̃ through the coset wreath product.

struct TransferResult {
  wreath::KrasnerKaloujnine kk;   // built over B̃ with the image of B
  wreath::WreathProduct WA;       // A ≀ (B̃/B, H)
  FiniteGroup WA_group;
  SubgroupWitness Atilde;         // Ã = ψ⁻¹(embedded B̃) ≤ WA
  Homomorphism phi_tilde_target;  // G → B̃ (φ then the inclusion; not onto)
  Homomorphism alpha_tilde;       // Ã ↠ B̃
  SubgroupWitness ker_alpha_tilde;  // ker α̃ ≤ Ã
  long long kernel_power_order = 1;  // |K|^(number of cosets)
  SubgroupWitness Aprime;         // A′ = α̃⁻¹(B) ≤ Ã
  Homomorphism rho;               // A′ ↠ A, (f,[g]) ↦ f(B)
  bool diagram_commutes = false;
};

inline TransferResult transfer_obstruction(
    const EmbeddingProblem& p, const FiniteGroup& Btilde,
    const Homomorphism& B_embed, const Limits& limits = default_limits()) {
  if (B_embed.source != p.B.monoid || B_embed.target != Btilde.monoid)
    fail(ErrorKind::domain_mismatch,
         "B_embed must include the problem's B into Btilde");
  if (!B_embed.injective)
    fail(ErrorKind::validation_error, "B_embed must be injective");

  TransferResult t;
  std::vector<int> b_image = B_embed.map;
  t.kk = wreath::krasner_kaloujnine(Btilde, b_image, limits);

  // ψ's top recoding A → B ⊂ B̃, expressed in the wreath's own B indexing.
  std::vector<int> topmap(static_cast<std::size_t>(p.A.order()));
  for (int x = 0; x < p.A.order(); ++x)
    topmap[static_cast<std::size_t>(x)] = t.kk.B.index_of[static_cast<std::size_t>(
        B_embed(p.alpha(x)))];

  t.WA = wreath::wreath_product(p.A.monoid, t.kk.coset_action, limits);
  t.WA_group = validate_group(t.WA.product);

  // Membership of ψ(w) in the embedded copy of B̃.
  std::map<int, int> embed_of;  // wreath index (in kk.wreath) -> g in B̃
  for (int gidx = 0; gidx < Btilde.order(); ++gidx)
    embed_of.emplace(t.kk.embed(gidx), gidx);
  auto psi_of = [&](int wa_index) {
    auto [f, nidx] = t.WA.decode(wa_index);
    std::vector<int> digits(f.size());
    for (std::size_t q = 0; q < f.size(); ++q)
      digits[q] = topmap[static_cast<std::size_t>(f[q])];
    return t.kk.wreath.encode(digits, nidx);
  };
  std::vector<int> atilde_elements;
  for (int w = 0; w < t.WA.product.order; ++w)
    if (embed_of.count(psi_of(w))) atilde_elements.push_back(w);
  t.Atilde = subgroup_from_elements(t.WA_group, atilde_elements);

  std::vector<int> alpha_tilde_map(t.Atilde.elements.size());
  for (std::size_t i = 0; i < t.Atilde.elements.size(); ++i)
    alpha_tilde_map[i] = embed_of.at(psi_of(t.Atilde.elements[i]));
  t.alpha_tilde =
      make_homomorphism(t.Atilde.group.monoid, Btilde.monoid, alpha_tilde_map);
  if (!t.alpha_tilde.surjective)
    fail(ErrorKind::internal_error,
         "transferred alpha failed surjectivity (construction bug)");

  t.phi_tilde_target = compose(p.phi, B_embed);

  t.ker_alpha_tilde =
      subgroup_from_elements(t.Atilde.group, kernel_elements(t.alpha_tilde));
  t.kernel_power_order = 1;
  for (int c = 0; c < t.kk.num_cosets; ++c)
    t.kernel_power_order *= static_cast<long long>(p.K.elements.size());
  // Structural check: every kernel element is a K-valued tuple over the
  // cosets with trivial bottom, so |ker α̃| divides |K|^cosets.
  for (int kidx : t.ker_alpha_tilde.elements) {
    const int wa_index = t.Atilde.elements[static_cast<std::size_t>(kidx)];
    auto [f, nidx] = t.WA.decode(wa_index);
    if (nidx != t.kk.H.identity())
      fail(ErrorKind::internal_error,
           "kernel element has nontrivial bottom (construction bug)", wa_index);
    for (int a : f)
      if (p.K.index_of[static_cast<std::size_t>(a)] < 0)
        fail(ErrorKind::internal_error,
             "kernel coordinate outside ker alpha (construction bug)", a);
  }
  if (t.kernel_power_order %
          static_cast<long long>(t.ker_alpha_tilde.elements.size()) !=
      0)
    fail(ErrorKind::internal_error,
         "kernel order fails Lagrange against K^cosets (construction bug)",
         t.kernel_power_order,
         static_cast<long long>(t.ker_alpha_tilde.elements.size()));

  // A′ = α̃⁻¹(B) and ρ = evaluation of the top coordinate at B's coset.
  std::vector<char> in_b_image(static_cast<std::size_t>(Btilde.order()), 0);
  for (int b : b_image) in_b_image[static_cast<std::size_t>(b)] = 1;
  std::vector<int> aprime_elements;
  for (std::size_t i = 0; i < t.Atilde.elements.size(); ++i)
    if (in_b_image[static_cast<std::size_t>(alpha_tilde_map[i])])
      aprime_elements.push_back(static_cast<int>(i));
  t.Aprime = subgroup_from_elements(t.Atilde.group, aprime_elements);

  std::vector<int> rho_map(t.Aprime.elements.size());
  for (std::size_t i = 0; i < t.Aprime.elements.size(); ++i) {
    const int wa_index = t.Atilde.elements[static_cast<std::size_t>(
        t.Aprime.elements[i])];
    rho_map[i] = t.WA.decode(wa_index).first[0];
  }
  t.rho = make_homomorphism(t.Aprime.group.monoid, p.A.monoid, rho_map);
  if (!t.rho.surjective)
    fail(ErrorKind::internal_error,
         "rho failed surjectivity (construction bug)");

  // Diagram (4): on A′, α then the inclusion agrees with ρ then α̃.
  t.diagram_commutes = true;
  for (std::size_t i = 0; i < t.Aprime.elements.size(); ++i) {
    const int via_rho = B_embed(p.alpha(rho_map[i]));
    const int via_alpha_tilde =
        alpha_tilde_map[static_cast<std::size_t>(t.Aprime.elements[i])];
    if (via_rho != via_alpha_tilde)
      fail(ErrorKind::internal_error,
           "transfer diagram does not commute (construction bug)",
           static_cast<long long>(i), via_rho, via_alpha_tilde);
  }
  return t;
}

// A lift of the transferred problem restricts to A′ and pushes down along ρ
// to a weak solution of the original problem.
inline Homomorphism transport_solution(const EmbeddingProblem& p,
                                       const TransferResult& t,
                                       const Homomorphism& lift) {
  if (lift.source != p.G.monoid || lift.target != t.Atilde.group.monoid)
    fail(ErrorKind::domain_mismatch,
         "lift must map G into the transferred cover");
  std::vector<int> map(static_cast<std::size_t>(p.G.order()));
  for (int g = 0; g < p.G.order(); ++g) {
    const int ap = t.Aprime.index_of[static_cast<std::size_t>(lift(g))];
    if (ap < 0)
      fail(ErrorKind::internal_error,
           "transferred lift left A' (construction bug)", g);
    map[static_cast<std::size_t>(g)] = t.rho(ap);
  }
  Homomorphism out = make_homomorphism(p.G.monoid, p.A.monoid, map);
  if (compose(out, p.alpha).map != p.phi.map)
    fail(ErrorKind::internal_error,
         "transported solution does not solve the problem (construction bug)");
  return out;
}

// ---------------------------------------------------------------------------
// Monoid transfer through the Schützenberger embedding: M′ = ψ⁻¹(M) inside
// Ã⁰ ≀ (Q*, N), with λ onto M, A′ = λ⁻¹(H), and ρ: A′ → Ã.

struct MonoidTransferResult {
  wreath::SchutzEmbedding emb;     // M ↪ H⁰ ≀ (Q*, N)
  FiniteMonoid Mprime;
  std::vector<long long> codes;    // per M′ element: mixed-radix coordinates
  Homomorphism lambda;             // M′ ↠ M
  FiniteSemigroup Aprime;          // λ⁻¹(H), usually identity-free
  std::vector<int> Aprime_elements;  // original A′ elements as M′ indices
  Homomorphism rho;                // A′ → Ã (semigroup homomorphism, onto)
  bool diagram_commutes = false;
  int atilde_order = 0;
  int qstar_size = 0;
};

namespace detail {

inline long long encode_virtual(const std::vector<int>& digits, int bottom,
                                int top_order, int bottom_order) {
  long long code = 0;
  for (int d : digits) code = code * top_order + d;
  return code * bottom_order + bottom;
}

inline void decode_virtual(long long code, int qsize, int top_order,
                           int bottom_order, std::vector<int>* digits,
                           int* bottom) {
  *bottom = static_cast<int>(code % bottom_order);
  long long rest = code / bottom_order;
  digits->assign(static_cast<std::size_t>(qsize), 0);
  for (int q = qsize - 1; q >= 0; --q) {
    (*digits)[static_cast<std::size_t>(q)] = static_cast<int>(rest % top_order);
    rest /= top_order;
  }
}

}  // namespace detail

inline MonoidTransferResult monoid_transfer(
    const wreath::SchutzStructure& s, const Homomorphism& alpha_tilde,
    const Limits& limits = default_limits()) {
  if (alpha_tilde.target != s.H.group.monoid)
    fail(ErrorKind::codomain_mismatch,
         "alpha_tilde must map onto the maximal subgroup at e");
  if (!alpha_tilde.surjective)
    fail(ErrorKind::validation_error, "alpha_tilde must be surjective");

  MonoidTransferResult out;
  out.emb = wreath::schutz_embedding(s, limits);
  const FiniteMonoid& m = s.m;
  const FiniteMonoid& atilde = alpha_tilde.source;
  out.atilde_order = atilde.order;
  out.qstar_size = s.num_orbits + 1;
  const int top_order = atilde.order + 1;  // Ã⁰
  const int zero_a = atilde.order;
  const int zero_h = out.emb.zero_top;
  const int bottom_order = s.N.order;

  // Fibers of α̃⁰ over H⁰: zero lifts only to zero.
  std::vector<std::vector<int>> fiber(static_cast<std::size_t>(zero_h) + 1);
  for (int a = 0; a < atilde.order; ++a)
    fiber[static_cast<std::size_t>(alpha_tilde(a))].push_back(a);
  fiber[static_cast<std::size_t>(zero_h)] = {zero_a};

  // Enumerate M′ = ψ⁻¹(embedded M) fiber product by fiber product.
  std::vector<std::pair<long long, int>> coded;  // (code, λ-value)
  long long predicted = 0;
  for (int x = 0; x < m.order; ++x) {
    auto [hdigits, nidx] = out.emb.wreath.decode(out.emb.embed(x));
    long long count = 1;
    for (int hd : hdigits)
      count *= static_cast<long long>(
          fiber[static_cast<std::size_t>(hd)].size());
    predicted += count;
    if (predicted > limits.max_order)
      fail(ErrorKind::size_limit_exceeded,
           "transferred monoid exceeds the order cap", predicted,
           limits.max_order);
    // Odometer over the per-position fibers, last position fastest.
    std::vector<std::size_t> pick(hdigits.size(), 0);
    std::vector<int> digits(hdigits.size());
    bool done = false;
    while (!done) {
      for (std::size_t q = 0; q < hdigits.size(); ++q)
        digits[q] =
            fiber[static_cast<std::size_t>(hdigits[q])][pick[q]];
      coded.emplace_back(
          detail::encode_virtual(digits, nidx, top_order, bottom_order), x);
      int q = static_cast<int>(hdigits.size()) - 1;
      while (q >= 0) {
        if (++pick[static_cast<std::size_t>(q)] <
            fiber[static_cast<std::size_t>(
                      hdigits[static_cast<std::size_t>(q)])].size())
          break;
        pick[static_cast<std::size_t>(q)] = 0;
        --q;
      }
      done = q < 0;
    }
  }
  std::sort(coded.begin(), coded.end());
  const int n = static_cast<int>(coded.size());
  std::map<long long, int> index_of;
  out.codes.reserve(static_cast<std::size_t>(n));
  std::vector<int> lambda_map(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    index_of.emplace(coded[static_cast<std::size_t>(i)].first, i);
    out.codes.push_back(coded[static_cast<std::size_t>(i)].first);
    lambda_map[static_cast<std::size_t>(i)] =
        coded[static_cast<std::size_t>(i)].second;
  }
  if (static_cast<int>(index_of.size()) != n)
    fail(ErrorKind::internal_error,
         "transferred monoid has duplicate coordinates (construction bug)");

  // Cayley table of M′ via the wreath product law in virtual coordinates.
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  std::vector<int> di, dj, dr(static_cast<std::size_t>(out.qstar_size));
  int bi = 0, bj = 0;
  for (int i = 0; i < n; ++i) {
    detail::decode_virtual(out.codes[static_cast<std::size_t>(i)],
                           out.qstar_size, top_order, bottom_order, &di, &bi);
    for (int j = 0; j < n; ++j) {
      detail::decode_virtual(out.codes[static_cast<std::size_t>(j)],
                             out.qstar_size, top_order, bottom_order, &dj, &bj);
      for (int q = 0; q < out.qstar_size; ++q) {
        const int moved = s.qstar_action.at(q, bi);
        const int lhs = di[static_cast<std::size_t>(q)];
        const int rhs = dj[static_cast<std::size_t>(moved)];
        // Multiplication in Ã⁰.
        dr[static_cast<std::size_t>(q)] =
            (lhs == zero_a || rhs == zero_a) ? zero_a : atilde.at(lhs, rhs);
      }
      const long long code =
          detail::encode_virtual(dr, s.N.at(bi, bj), top_order, bottom_order);
      auto it = index_of.find(code);
      if (it == index_of.end())
        fail(ErrorKind::internal_error,
             "transferred monoid is not closed (construction bug)", i, j);
      table[static_cast<std::size_t>(i) * n + j] = it->second;
    }
  }
  // Identity: the all-units tuple over the orbits, zero at ★, trivial bottom.
  std::vector<int> unit_digits(static_cast<std::size_t>(out.qstar_size),
                               atilde.identity);
  unit_digits[static_cast<std::size_t>(s.star)] = zero_a;
  const long long unit_code = detail::encode_virtual(
      unit_digits, s.N.identity, top_order, bottom_order);
  auto unit_it = index_of.find(unit_code);
  if (unit_it == index_of.end())
    fail(ErrorKind::internal_error,
         "transferred monoid is missing its identity (construction bug)");
  out.Mprime =
      validate_monoid(n, std::move(table), unit_it->second, limits);
  out.lambda = make_homomorphism(out.Mprime, m, lambda_map);
  if (!out.lambda.surjective)
    fail(ErrorKind::internal_error,
         "lambda failed surjectivity (construction bug)");

  // A′ = λ⁻¹(H) as a subsemigroup of M′.
  for (int i = 0; i < n; ++i)
    if (s.H.index_of[static_cast<std::size_t>(
            lambda_map[static_cast<std::size_t>(i)])] >= 0)
      out.Aprime_elements.push_back(i);
  const int an = static_cast<int>(out.Aprime_elements.size());
  std::vector<int> aindex_of(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < an; ++i)
    aindex_of[static_cast<std::size_t>(out.Aprime_elements[static_cast<std::size_t>(i)])] = i;
  std::vector<int> atable(static_cast<std::size_t>(an) * an);
  for (int i = 0; i < an; ++i)
    for (int j = 0; j < an; ++j) {
      const int prod = out.Mprime.at(
          out.Aprime_elements[static_cast<std::size_t>(i)],
          out.Aprime_elements[static_cast<std::size_t>(j)]);
      const int idx = aindex_of[static_cast<std::size_t>(prod)];
      if (idx < 0)
        fail(ErrorKind::internal_error,
             "A' is not closed (construction bug)", i, j);
      atable[static_cast<std::size_t>(i) * an + j] = idx;
    }
  out.Aprime = semigroup_from_table(an, std::move(atable), limits);

  // ρ: top coordinate over e's orbit, landing in Ã.
  const int a_carrier = out.Aprime.monoid.order;
  std::vector<int> rho_map(static_cast<std::size_t>(a_carrier), 0);
  std::vector<int> digits;
  int bottom = 0;
  for (int i = 0; i < an; ++i) {
    detail::decode_virtual(
        out.codes[static_cast<std::size_t>(
            out.Aprime_elements[static_cast<std::size_t>(i)])],
        out.qstar_size, top_order, bottom_order, &digits, &bottom);
    const int value = digits[0];
    if (value == zero_a)
      fail(ErrorKind::internal_error,
           "rho hit the zero coordinate (construction bug)", i);
    rho_map[static_cast<std::size_t>(i)] = value;
  }
  if (out.Aprime.identity_adjoined)
    rho_map[static_cast<std::size_t>(out.Aprime.monoid.identity)] =
        atilde.identity;
  out.rho = make_semigroup_homomorphism(out.Aprime, as_semigroup(atilde),
                                        rho_map);
  if (!out.rho.surjective)
    fail(ErrorKind::internal_error, "rho failed surjectivity (construction bug)");

  // Diagram (6): λ then the H-relabeling equals ρ then α̃ on A′.
  out.diagram_commutes = true;
  for (int i = 0; i < an; ++i) {
    const int h_via_lambda = s.H.index_of[static_cast<std::size_t>(
        lambda_map[static_cast<std::size_t>(
            out.Aprime_elements[static_cast<std::size_t>(i)])])];
    const int h_via_rho = alpha_tilde(rho_map[static_cast<std::size_t>(i)]);
    if (h_via_lambda != h_via_rho)
      fail(ErrorKind::internal_error,
           "monoid transfer diagram does not commute (construction bug)", i,
           h_via_lambda, h_via_rho);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Per-idempotent extension structure of a covering monoid.

struct IdempotentExtensionReport {
  int idempotent = 0;        // index in the covering monoid
  int subgroup_order = 1;    // |G′| at that idempotent
  int kernel_order = 1;      // |{g ∈ G′ : λ(g) = λ(e′)}|
  std::optional<int> kernel_prime;  // from is_elementary_abelian
  bool kernel_elementary_abelian = false;
  bool quotient_embeds = false;  // G′/kernel injects into the base subgroup
  bool pass = false;
};

struct SubgroupExtensionReport {
  int p = 0;
  std::vector<IdempotentExtensionReport> per_idempotent;
  bool all_pass = true;
};

// For each idempotent e′ of the cover: the λ-kernel of the maximal subgroup
// at e′ must be elementary abelian of exponent p (or trivial), and the
// quotient by it must embed into the maximal subgroup of the base at λ(e′).
inline SubgroupExtensionReport subgroup_extension_check(
    const FiniteMonoid& mprime, const Homomorphism& lambda, int p) {
  if (lambda.source != mprime)
    fail(ErrorKind::domain_mismatch,
         "lambda must be defined on the covering monoid");
  SubgroupExtensionReport report;
  report.p = p;
  for (int e : idempotents_of(mprime)) {
    IdempotentExtensionReport entry;
    entry.idempotent = e;
    greens::MaximalSubgroup gp = greens::maximal_subgroup(mprime, e);
    entry.subgroup_order = gp.group.order();
    const int base_of_e = lambda(e);
    std::vector<int> kernel;
    for (int i = 0; i < gp.group.order(); ++i)
      if (lambda(gp.elements[static_cast<std::size_t>(i)]) == base_of_e)
        kernel.push_back(i);
    entry.kernel_order = static_cast<int>(kernel.size());
    SubgroupWitness ker = subgroup_from_elements(gp.group, kernel);
    entry.kernel_prime = is_elementary_abelian(ker.group);
    entry.kernel_elementary_abelian =
        entry.kernel_prime.has_value() &&
        (*entry.kernel_prime == 0 || *entry.kernel_prime == p);

    greens::MaximalSubgroup base =
        greens::maximal_subgroup(lambda.target, base_of_e);
    bool image_inside = true;
    std::vector<char> seen(static_cast<std::size_t>(lambda.target.order), 0);
    int image_size = 0;
    for (int i = 0; i < gp.group.order(); ++i) {
      const int img = lambda(gp.elements[static_cast<std::size_t>(i)]);
      if (base.index_of[static_cast<std::size_t>(img)] < 0) image_inside = false;
      if (!seen[static_cast<std::size_t>(img)]) {
        seen[static_cast<std::size_t>(img)] = 1;
        ++image_size;
      }
    }
    entry.quotient_embeds =
        image_inside &&
        image_size * entry.kernel_order == entry.subgroup_order;
    entry.pass = entry.kernel_elementary_abelian && entry.quotient_embeds;
    report.all_pass = report.all_pass && entry.pass;
    report.per_idempotent.push_back(std::move(entry));
  }
  return report;
}

}  // namespace embedding
}  // namespace mlab
