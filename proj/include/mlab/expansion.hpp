#pragma once

// The two-sided factorization expansion of a generated finite monoid: each
// element is the set of all (prefix image, suffix image) pairs of the words
// representing it, together with the aperiodic-morphism verification and the
// stability factorization witness search.

#include <algorithm>
#include <map>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "mlab/core.hpp"

namespace mlab {
namespace expansion {

// Signature of a word w over the generators: F lists every ([u]_M, [v]_M)
// with w = uv, and m = [w]_M (recoverable as u·v from any pair).
struct ExpansionElement {
  std::vector<std::pair<int, int>> F;  // sorted, duplicate-free
  int m = 0;

  friend bool operator==(const ExpansionElement& a, const ExpansionElement& b) {
    return a.m == b.m && a.F == b.F;
  }
  friend bool operator<(const ExpansionElement& a, const ExpansionElement& b) {
    if (a.F != b.F) return a.F < b.F;
    return a.m < b.m;
  }
};

struct Expansion {
  FiniteMonoid base;
  std::vector<std::pair<char, int>> gens;  // (letter, base element)
  FiniteMonoid exp;
  Homomorphism eta;                        // exp ↠ base, (F,m) ↦ m
  std::vector<ExpansionElement> elements;  // per exp index, breadth-first
  std::vector<int> gen_lift;               // per generator: its exp index
};

namespace detail {

inline void canonicalize(ExpansionElement* e) {
  std::sort(e->F.begin(), e->F.end());
  e->F.erase(std::unique(e->F.begin(), e->F.end()), e->F.end());
}

inline std::vector<int> letters_to_elements(
    const std::vector<std::pair<char, int>>& gens, const std::string& word) {
  std::vector<int> out;
  out.reserve(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) {
    int found = -1;
    for (const auto& [label, elem] : gens)
      if (label == word[i]) {
        found = elem;
        break;
      }
    if (found < 0)
      fail(ErrorKind::unknown_letter, "word uses a letter with no generator",
           static_cast<long long>(i), static_cast<long long>(word[i]));
    out.push_back(found);
  }
  return out;
}

inline void check_generators(const FiniteMonoid& m,
                             const std::vector<std::pair<char, int>>& gens) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].second < 0 || gens[i].second >= m.order)
      fail(ErrorKind::bad_argument, "generator element out of range",
           gens[i].second, m.order);
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i].first == gens[j].first)
        fail(ErrorKind::bad_argument, "duplicate generator letter",
             static_cast<long long>(gens[i].first));
  }
}

}  // namespace detail

// The signature product mirrors word concatenation:
// (F,m)(F',m') = ({(u, v·m')} ∪ {(m·u', v')}, m·m').
inline ExpansionElement signature_product(const FiniteMonoid& m,
                                          const ExpansionElement& a,
                                          const ExpansionElement& b) {
  ExpansionElement out;
  out.m = m.at(a.m, b.m);
  out.F.reserve(a.F.size() + b.F.size());
  for (const auto& [u, v] : a.F) out.F.emplace_back(u, m.at(v, b.m));
  for (const auto& [u, v] : b.F) out.F.emplace_back(m.at(a.m, u), v);
  detail::canonicalize(&out);
  return out;
}

// Signature computed directly from all |w|+1 factorizations; the independent
// oracle for the product formula.
inline ExpansionElement word_signature(const FiniteMonoid& m,
                                       const std::vector<std::pair<char, int>>& gens,
                                       const std::string& word) {
  detail::check_generators(m, gens);
  const std::vector<int> elems = detail::letters_to_elements(gens, word);
  const std::size_t n = elems.size();
  std::vector<int> prefix(n + 1), suffix(n + 1);
  prefix[0] = m.identity;
  for (std::size_t i = 0; i < n; ++i)
    prefix[i + 1] = m.at(prefix[i], elems[i]);
  suffix[n] = m.identity;
  for (std::size_t i = n; i > 0; --i)
    suffix[i - 1] = m.at(elems[i - 1], suffix[i]);
  ExpansionElement out;
  out.m = prefix[n];
  for (std::size_t i = 0; i <= n; ++i) out.F.emplace_back(prefix[i], suffix[i]);
  detail::canonicalize(&out);
  return out;
}

// Build the expansion by breadth-first closure from the generator signatures.
inline Expansion henckell_expansion(const FiniteMonoid& m,
                                    const std::vector<std::pair<char, int>>& gens,
                                    const Limits& limits = default_limits()) {
  detail::check_generators(m, gens);
  std::vector<int> gen_elems;
  gen_elems.reserve(gens.size());
  for (const auto& [label, elem] : gens) gen_elems.push_back(elem);
  if (static_cast<int>(submonoid_closure(m, gen_elems).elements.size()) !=
      m.order)
    fail(ErrorKind::generators_dont_generate,
         "the given elements do not generate the monoid");

  Expansion out;
  out.base = m;
  out.gens = gens;

  std::map<ExpansionElement, int> index_of;
  auto intern = [&](const ExpansionElement& e) {
    auto it = index_of.find(e);
    if (it != index_of.end()) return std::make_pair(it->second, false);
    const int idx = static_cast<int>(out.elements.size());
    if (idx >= limits.max_order)
      fail(ErrorKind::size_limit_exceeded, "expansion exceeds the order cap",
           idx + 1, limits.max_order);
    index_of.emplace(e, idx);
    out.elements.push_back(e);
    return std::make_pair(idx, true);
  };

  ExpansionElement unit;
  unit.F = {{m.identity, m.identity}};
  unit.m = m.identity;
  intern(unit);

  std::vector<ExpansionElement> gen_sigs;
  gen_sigs.reserve(gens.size());
  for (const auto& [label, elem] : gens) {
    ExpansionElement sig;
    sig.F = {{m.identity, elem}, {elem, m.identity}};
    sig.m = elem;
    detail::canonicalize(&sig);
    gen_sigs.push_back(sig);
    out.gen_lift.push_back(intern(sig).first);
  }

  std::queue<int> work;
  for (int i = 0; i < static_cast<int>(out.elements.size()); ++i) work.push(i);
  while (!work.empty()) {
    const int i = work.front();
    work.pop();
    for (const ExpansionElement& g : gen_sigs) {
      auto [idx, fresh] = intern(signature_product(m, out.elements[static_cast<std::size_t>(i)], g));
      if (fresh) work.push(idx);
    }
  }

  const int n = static_cast<int>(out.elements.size());
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const ExpansionElement prod = signature_product(
          m, out.elements[static_cast<std::size_t>(i)],
          out.elements[static_cast<std::size_t>(j)]);
      auto it = index_of.find(prod);
      if (it == index_of.end())
        fail(ErrorKind::internal_error,
             "expansion closure missed a product (construction bug)", i, j);
      table[static_cast<std::size_t>(i) * n + j] = it->second;
    }
  out.exp = validate_monoid(n, std::move(table), 0, limits);
  std::vector<int> eta_map(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    eta_map[static_cast<std::size_t>(i)] =
        out.elements[static_cast<std::size_t>(i)].m;
  out.eta = make_homomorphism(out.exp, m, eta_map);
  if (!out.eta.surjective)
    fail(ErrorKind::internal_error,
         "eta failed surjectivity despite generating set (construction bug)");
  return out;
}

// ---------------------------------------------------------------------------
// Aperiodic-morphism verification: every idempotent fiber must be aperiodic.

struct FiberReport {
  int idempotent = 0;        // idempotent of the target
  std::vector<int> fiber;    // its preimage in the source
  bool aperiodic = false;
};

struct AperiodicMorphismReport {
  std::vector<FiberReport> fibers;
  bool all_aperiodic = true;
};

inline AperiodicMorphismReport is_aperiodic_morphism(const Homomorphism& h) {
  AperiodicMorphismReport report;
  for (int e : idempotents_of(h.target)) {
    FiberReport entry;
    entry.idempotent = e;
    entry.aperiodic = true;
    for (int x = 0; x < h.source.order; ++x)
      if (h(x) == e) {
        entry.fiber.push_back(x);
        if (cyclic_profile(h.source, x).period != 1) entry.aperiodic = false;
      }
    report.all_aperiodic = report.all_aperiodic && entry.aperiodic;
    report.fibers.push_back(std::move(entry));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Stability factorization: given word_signature(w²) = word_signature(w^k),
// find w^k = w^k1·x·y·w^k2 with w = xy, [w^k1·x] = [w], and [y·w^k2] = [w].

struct FactorizationWitness {
  int k1 = 0;
  std::string x;
  std::string y;
  int k2 = 0;
};

struct FactorizationResult {
  FactorizationWitness chosen;           // first under the scan order
  std::vector<FactorizationWitness> all;  // every admissible cut
};

inline FactorizationResult factorization_witness(
    const FiniteMonoid& m, const std::vector<std::pair<char, int>>& gens,
    const std::string& word, int k) {
  if (k < 4)
    fail(ErrorKind::bad_argument,
         "the cut-point pigeonhole needs k >= 4", k);
  detail::check_generators(m, gens);
  const ExpansionElement sig2 = word_signature(m, gens, word + word);
  std::string wk;
  for (int i = 0; i < k; ++i) wk += word;
  if (!(sig2 == word_signature(m, gens, wk)))
    fail(ErrorKind::hypothesis_fails,
         "signature of w^2 differs from signature of w^k", k);

  const std::vector<int> elems = detail::letters_to_elements(gens, word);
  const int len = static_cast<int>(elems.size());
  std::vector<int> prefix(static_cast<std::size_t>(len) + 1),
      suffix(static_cast<std::size_t>(len) + 1);
  prefix[0] = m.identity;
  for (int i = 0; i < len; ++i)
    prefix[static_cast<std::size_t>(i) + 1] =
        m.at(prefix[static_cast<std::size_t>(i)], elems[static_cast<std::size_t>(i)]);
  suffix[static_cast<std::size_t>(len)] = m.identity;
  for (int i = len; i > 0; --i)
    suffix[static_cast<std::size_t>(i) - 1] =
        m.at(elems[static_cast<std::size_t>(i) - 1], suffix[static_cast<std::size_t>(i)]);
  const int w_img = prefix[static_cast<std::size_t>(len)];
  // Powers of [w] up to k.
  std::vector<int> wpow(static_cast<std::size_t>(k) + 1);
  wpow[0] = m.identity;
  for (int i = 1; i <= k; ++i)
    wpow[static_cast<std::size_t>(i)] = m.at(wpow[static_cast<std::size_t>(i) - 1], w_img);

  FactorizationResult result;
  // Scan k1 ascending, |x| descending: at each cut, [w^k1·x] and [y·w^k2]
  // must both equal [w].
  for (int k1 = 0; k1 < k; ++k1) {
    const int k2 = k - 1 - k1;
    for (int j = len; j >= 0; --j) {
      const int left = m.at(wpow[static_cast<std::size_t>(k1)],
                            prefix[static_cast<std::size_t>(j)]);
      const int right = m.at(suffix[static_cast<std::size_t>(j)],
                             wpow[static_cast<std::size_t>(k2)]);
      if (left == w_img && right == w_img) {
        FactorizationWitness w;
        w.k1 = k1;
        w.x = word.substr(0, static_cast<std::size_t>(j));
        w.y = word.substr(static_cast<std::size_t>(j));
        w.k2 = k2;
        if (result.all.empty()) result.chosen = w;
        result.all.push_back(std::move(w));
      }
    }
  }
  if (result.all.empty())
    fail(ErrorKind::no_witness,
         "no admissible cut: this contradicts the stability hypothesis", k);
  return result;
}

}  // namespace expansion
}  // namespace mlab
