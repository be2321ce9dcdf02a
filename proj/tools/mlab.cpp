// mlab — command-line front end for the finite-algebra library.
//
// Exit codes: 0 success, 1 domain error (structured report on stderr),
// 2 usage error.  --format {text|json-lines} selects the report encoding;
// --budget and --max-order set the numeric limits, overridable through the
// MLAB_* environment variables.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mlab/mlab.hpp"

namespace gr = mlab::greens;
namespace pr = mlab::projectivity;
using mlab::FiniteGroup;
using mlab::FiniteMonoid;
using mlab::FiniteSemigroup;
using mlab::Homomorphism;
using mlab::Limits;
using mlab::MlabError;
using json = nlohmann::ordered_json;

namespace {

struct Ctx {
  std::string format = "text";
  Limits limits = mlab::default_limits();
};

struct Report {
  explicit Report(const Ctx& c) : ctx(c) {}
  const Ctx& ctx;
  std::ostringstream text;
  std::ostringstream jsonl;

  void record(const json& j) { jsonl << j.dump() << '\n'; }
  void flush() {
    const std::string out =
        ctx.format == "json-lines" ? jsonl.str() : text.str();
    std::fputs(out.c_str(), stdout);
  }
};

json table_json(const FiniteSemigroup& s) {
  return json{{"order", s.monoid.order},
              {"identity", s.monoid.identity},
              {"semigroup_adjoined", s.identity_adjoined},
              {"table", s.monoid.table}};
}

// ---------------------------------------------------------------------------
// Carrier aliases: zN, eaP_K, v4, q8, dN, dicN, a4, tN, lzN, rzN, chainN,
// monI_P, trivial, zero(<spec>), @path, and 'x'-separated direct products.

int parse_number(const std::string& s, const std::string& what) {
  if (s.empty()) mlab::fail(mlab::ErrorKind::unknown_family, "missing " + what);
  for (char c : s)
    if (c < '0' || c > '9')
      mlab::fail(mlab::ErrorKind::unknown_family,
                 "bad " + what + " in alias: " + s);
  if (s.size() > 7)
    mlab::fail(mlab::ErrorKind::unknown_family, "alias number too large: " + s);
  return std::stoi(s);
}

FiniteSemigroup parse_carrier(const std::string& spec, const Limits& limits);

FiniteSemigroup parse_atom(const std::string& atom, const Limits& limits) {
  auto num = [&](std::size_t prefix) {
    return parse_number(atom.substr(prefix), "size");
  };
  auto pair_num = [&](std::size_t prefix, int* a, int* b) {
    const std::string rest = atom.substr(prefix);
    const std::size_t us = rest.find('_');
    if (us == std::string::npos)
      mlab::fail(mlab::ErrorKind::unknown_family,
                 "alias needs two numbers: " + atom);
    *a = parse_number(rest.substr(0, us), "first parameter");
    *b = parse_number(rest.substr(us + 1), "second parameter");
  };
  auto mono = [](FiniteMonoid m) { return FiniteSemigroup{std::move(m), false}; };

  if (atom.empty())
    mlab::fail(mlab::ErrorKind::unknown_family, "empty carrier alias");
  if (atom[0] == '@') return mlab::io::load_monoid(atom.substr(1), limits);
  if (atom == "trivial") return mono(mlab::trivial_monoid());
  if (atom == "v4") return mono(mlab::elementary_abelian_group(2, 2).monoid);
  if (atom == "q8") return mono(mlab::quaternion_group().monoid);
  if (atom == "a4") return mono(mlab::alternating4(limits).monoid);
  if (atom.rfind("zero(", 0) == 0 && atom.back() == ')') {
    const FiniteSemigroup inner =
        parse_carrier(atom.substr(5, atom.size() - 6), limits);
    if (inner.identity_adjoined)
      mlab::fail(mlab::ErrorKind::bad_argument,
                 "zero(...) needs a genuine monoid operand");
    return mono(mlab::zero_adjoined(inner.monoid, limits));
  }
  if (atom.rfind("ea", 0) == 0) {
    int p = 0, k = 0;
    pair_num(2, &p, &k);
    return mono(mlab::elementary_abelian_group(p, k, limits).monoid);
  }
  if (atom.rfind("mon", 0) == 0) {
    int index = 0, period = 0;
    pair_num(3, &index, &period);
    return mlab::monogenic(index, period, limits);
  }
  if (atom.rfind("chain", 0) == 0) return mlab::chain_semilattice(num(5), limits);
  if (atom.rfind("dic", 0) == 0)
    return mono(mlab::dicyclic_group(num(3), limits).monoid);
  if (atom.rfind("lz", 0) == 0) return mlab::left_zero(num(2), limits);
  if (atom.rfind("rz", 0) == 0) return mlab::right_zero(num(2), limits);
  if (atom[0] == 'z') return mono(mlab::cyclic_group(num(1), limits).monoid);
  if (atom[0] == 'd') return mono(mlab::dihedral_group(num(1), limits).monoid);
  if (atom[0] == 't')
    return mono(mlab::full_transformation(num(1), limits));
  mlab::fail(mlab::ErrorKind::unknown_family, "unknown carrier alias: " + atom);
}

FiniteSemigroup parse_carrier(const std::string& spec, const Limits& limits) {
  // Split on 'x' outside parentheses: direct products of genuine monoids.
  std::vector<std::string> parts;
  std::string current;
  int depth = 0;
  for (char c : spec) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == 'x' && depth == 0) {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  parts.push_back(current);

  FiniteSemigroup result = parse_atom(parts[0], limits);
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const FiniteSemigroup next = parse_atom(parts[i], limits);
    if (result.identity_adjoined || next.identity_adjoined)
      mlab::fail(mlab::ErrorKind::bad_argument,
                 "direct products need genuine monoid operands");
    result = FiniteSemigroup{
        mlab::direct_product(result.monoid, next.monoid, limits).product,
        false};
  }
  return result;
}

FiniteGroup parse_group(const std::string& spec, const Limits& limits) {
  const FiniteSemigroup s = parse_carrier(spec, limits);
  if (s.identity_adjoined)
    mlab::fail(mlab::ErrorKind::not_a_group,
               "a group alias must name a genuine monoid: " + spec);
  return mlab::validate_group(s.monoid);
}

std::vector<int> parse_int_list(const std::string& spec) {
  std::vector<int> out;
  std::string tok;
  for (char c : spec) {
    if (c == ',') {
      out.push_back(parse_number(tok, "list entry"));
      tok.clear();
    } else {
      tok.push_back(c);
    }
  }
  out.push_back(parse_number(tok, "list entry"));
  return out;
}

// Homomorphism aliases between known carriers: id, mod, proj1, proj2, an
// explicit comma list, or @path.
Homomorphism parse_hom(const std::string& spec, const FiniteMonoid& src,
                       const FiniteMonoid& tgt) {
  std::vector<int> map(static_cast<std::size_t>(src.order));
  if (spec == "id") {
    for (int i = 0; i < src.order; ++i) map[static_cast<std::size_t>(i)] = i;
  } else if (spec == "mod" || spec == "proj2") {
    for (int i = 0; i < src.order; ++i)
      map[static_cast<std::size_t>(i)] = i % tgt.order;
  } else if (spec == "proj1") {
    if (tgt.order == 0 || src.order % tgt.order != 0)
      mlab::fail(mlab::ErrorKind::domain_mismatch,
                 "proj1 needs the target order to divide the source order",
                 src.order, tgt.order);
    const int block = src.order / tgt.order;
    for (int i = 0; i < src.order; ++i)
      map[static_cast<std::size_t>(i)] = i / block;
  } else if (!spec.empty() && spec[0] == '@') {
    const mlab::io::HomFile hf = mlab::io::load_hom(spec.substr(1));
    if (hf.src_order != src.order || hf.tgt_order != tgt.order)
      mlab::fail(mlab::ErrorKind::domain_mismatch,
                 "homomorphism file orders do not match the carriers",
                 hf.src_order, hf.tgt_order);
    map = hf.map;
  } else if (spec.find(',') != std::string::npos ||
             (!spec.empty() && spec[0] >= '0' && spec[0] <= '9')) {
    map = parse_int_list(spec);
    if (static_cast<int>(map.size()) != src.order)
      mlab::fail(mlab::ErrorKind::domain_mismatch,
                 "explicit map length does not match the source order",
                 static_cast<long long>(map.size()), src.order);
  } else {
    mlab::fail(mlab::ErrorKind::bad_argument,
               "unknown homomorphism alias: " + spec);
  }
  return mlab::make_homomorphism(src, tgt, std::move(map));
}

// First homomorphism src -> tgt in ascending generator-image order that has
// the requested flags, or nullopt.  Used for the 'auto' homomorphism alias.
std::optional<Homomorphism> least_hom(const FiniteMonoid& src,
                                      const FiniteMonoid& tgt,
                                      bool need_injective, bool need_surjective,
                                      const Limits& limits) {
  const std::vector<int> gens = mlab::embedding::detail::greedy_generators(src);
  long long space = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    space *= tgt.order;
    if (space > limits.search_budget)
      mlab::fail(mlab::ErrorKind::budget_exceeded,
                 "automatic homomorphism search exceeds the budget", space,
                 limits.search_budget);
  }
  std::vector<int> choice(gens.size(), 0);
  std::vector<int> map(static_cast<std::size_t>(src.order), -1);
  std::size_t depth = 0;
  if (gens.empty()) {
    std::vector<int> unit(static_cast<std::size_t>(src.order), tgt.identity);
    Homomorphism h = mlab::make_homomorphism(src, tgt, std::move(unit));
    if ((!need_injective || h.injective) && (!need_surjective || h.surjective))
      return h;
    return std::nullopt;
  }
  while (true) {
    if (choice[depth] >= tgt.order) {
      choice[depth] = 0;
      if (depth == 0) return std::nullopt;
      --depth;
      ++choice[depth];
      continue;
    }
    std::fill(map.begin(), map.end(), -1);
    map[static_cast<std::size_t>(src.identity)] = tgt.identity;
    bool ok = true;
    for (std::size_t i = 0; i <= depth; ++i) {
      int& cell = map[static_cast<std::size_t>(gens[i])];
      if (cell >= 0 && cell != choice[i]) {
        ok = false;
        break;
      }
      cell = choice[i];
    }
    if (ok)
      ok = mlab::embedding::detail::extend_by_closure(src, tgt, gens,
                                                      depth + 1, &map);
    if (ok && depth + 1 == gens.size()) {
      bool full = true;
      for (int v : map)
        if (v < 0) full = false;
      if (full && mlab::embedding::detail::is_full_homomorphism(src, tgt, map)) {
        Homomorphism h = mlab::make_homomorphism(src, tgt, map);
        if ((!need_injective || h.injective) &&
            (!need_surjective || h.surjective))
          return h;
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

Homomorphism hom_or_auto(const std::string& spec, const FiniteMonoid& src,
                         const FiniteMonoid& tgt, bool need_injective,
                         bool need_surjective, const Limits& limits,
                         const std::string& what) {
  if (spec != "auto") return parse_hom(spec, src, tgt);
  auto h = least_hom(src, tgt, need_injective, need_surjective, limits);
  if (!h)
    mlab::fail(mlab::ErrorKind::no_witness,
               "no homomorphism with the required properties for " + what);
  return *h;
}

const char* yn(bool b) { return b ? "true" : "false"; }

std::string join_ints(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[static_cast<std::size_t>(i)];
  }
  return os.str();
}

int least_idempotent(const FiniteMonoid& m) {
  for (int e = 0; e < m.order; ++e)
    if (m.at(e, e) == e) return e;
  mlab::fail(mlab::ErrorKind::internal_error, "monoid without idempotents");
}

// ---------------------------------------------------------------------------
// Command handlers.  Each fills both encodings and leaves flushing to main.

void cmd_validate(Report& rep, const std::string& in) {
  const FiniteSemigroup s = parse_carrier(in, rep.ctx.limits);
  const gr::Classification c = gr::classify(s);
  const std::vector<int> idems = mlab::idempotents_of(s.monoid);
  rep.text << "order=" << s.monoid.order << '\n'
           << "identity=" << s.monoid.identity << '\n'
           << "semigroup_adjoined=" << yn(s.identity_adjoined) << '\n'
           << "idempotents=" << idems.size() << '\n'
           << "band=" << yn(c.is_band) << '\n'
           << "completely_regular=" << yn(c.is_completely_regular) << '\n'
           << "aperiodic=" << yn(c.is_aperiodic) << '\n';
  json j = table_json(s);
  j["record"] = "validate";
  j["idempotents"] = idems;
  j["band"] = c.is_band;
  j["completely_regular"] = c.is_completely_regular;
  j["aperiodic"] = c.is_aperiodic;
  rep.record(j);
}

FiniteSemigroup family_from_flags(const std::string& name, int n, int p, int k,
                                  int index, int period, const std::string& of,
                                  const Limits& limits) {
  if (name == "zero_adjoined") {
    if (of.empty())
      mlab::fail(mlab::ErrorKind::bad_argument, "zero_adjoined needs --of");
    const FiniteSemigroup inner = parse_carrier(of, limits);
    if (inner.identity_adjoined)
      mlab::fail(mlab::ErrorKind::bad_argument,
                 "zero_adjoined needs a genuine monoid operand");
    return FiniteSemigroup{mlab::zero_adjoined(inner.monoid, limits), false};
  }
  std::vector<int> args;
  if (name == "elementary_abelian")
    args = {p, k};
  else if (name == "monogenic")
    args = {index, period};
  else if (name == "trivial" || name == "alternating4")
    args = {};
  else
    args = {n};
  return mlab::family(name, args, limits).semigroup;
}

void cmd_family(Report& rep, const std::string& name, int n, int p, int k,
                int index, int period, const std::string& of) {
  const FiniteSemigroup s =
      family_from_flags(name, n, p, k, index, period, of, rep.ctx.limits);
  rep.text << mlab::io::render_monoid(s);
  json j = table_json(s);
  j["record"] = "monoid";
  rep.record(j);
}

void cmd_greens(Report& rep, const std::string& mspec) {
  const FiniteSemigroup s = parse_carrier(mspec, rep.ctx.limits);
  const FiniteMonoid& m = s.monoid;
  const gr::GreensStructure g = gr::greens(m);
  rep.text << "r_classes=" << g.r_count << '\n'
           << "l_classes=" << g.l_count << '\n'
           << "j_classes=" << g.j_count << '\n'
           << "h_classes=" << g.h_count << '\n'
           << "idempotents=" << g.idempotents.size() << '\n';

  std::vector<char> is_idem(static_cast<std::size_t>(m.order), 0);
  for (int e : g.idempotents) is_idem[static_cast<std::size_t>(e)] = 1;

  // One grid per J-class: rows are R-classes, columns are L-classes.
  for (int j = 0; j < g.j_count; ++j) {
    std::vector<int> rs, ls;
    for (int x = 0; x < m.order; ++x) {
      if (g.j_class_of[static_cast<std::size_t>(x)] != j) continue;
      const int r = g.r_class_of[static_cast<std::size_t>(x)];
      const int l = g.l_class_of[static_cast<std::size_t>(x)];
      if (std::find(rs.begin(), rs.end(), r) == rs.end()) rs.push_back(r);
      if (std::find(ls.begin(), ls.end(), l) == ls.end()) ls.push_back(l);
    }
    std::vector<std::vector<std::string>> cells(
        rs.size(), std::vector<std::string>(ls.size()));
    std::size_t width = 1;
    for (std::size_t ri = 0; ri < rs.size(); ++ri)
      for (std::size_t li = 0; li < ls.size(); ++li) {
        std::ostringstream cell;
        bool first = true;
        for (int x = 0; x < m.order; ++x)
          if (g.j_class_of[static_cast<std::size_t>(x)] == j &&
              g.r_class_of[static_cast<std::size_t>(x)] == rs[ri] &&
              g.l_class_of[static_cast<std::size_t>(x)] == ls[li]) {
            if (!first) cell << ' ';
            cell << x;
            if (is_idem[static_cast<std::size_t>(x)]) cell << '*';
            first = false;
          }
        cells[ri][li] = cell.str();
        width = std::max(width, cells[ri][li].size());
      }
    rep.text << "j_class " << j << ":\n";
    for (std::size_t ri = 0; ri < rs.size(); ++ri) {
      rep.text << '|';
      for (std::size_t li = 0; li < ls.size(); ++li) {
        std::string c = cells[ri][li];
        c.resize(width, ' ');
        rep.text << ' ' << c << " |";
      }
      rep.text << '\n';
    }
  }

  rep.record(json{{"record", "greens"},
                  {"r_classes", g.r_count},
                  {"l_classes", g.l_count},
                  {"j_classes", g.j_count},
                  {"h_classes", g.h_count},
                  {"idempotents", g.idempotents},
                  {"r_class_of", g.r_class_of},
                  {"l_class_of", g.l_class_of},
                  {"j_class_of", g.j_class_of},
                  {"h_class_of", g.h_class_of}});
}

void cmd_classify(Report& rep, const FiniteSemigroup& s) {
  const gr::Classification c = gr::classify(s);
  rep.text << "band=" << yn(c.is_band) << '\n'
           << "completely_regular=" << yn(c.is_completely_regular) << '\n'
           << "aperiodic=" << yn(c.is_aperiodic) << '\n'
           << "group_elements=" << join_ints(c.group_elements) << '\n';
  rep.record(json{{"record", "classify"},
                  {"band", c.is_band},
                  {"completely_regular", c.is_completely_regular},
                  {"aperiodic", c.is_aperiodic},
                  {"group_elements", c.group_elements}});
}

void cmd_schutz(Report& rep, const std::string& mspec, const std::string& espec,
                bool faithful_quotient) {
  const Limits& limits = rep.ctx.limits;
  FiniteMonoid m = parse_carrier(mspec, limits).monoid;
  int e = espec == "auto" ? least_idempotent(m)
                          : parse_number(espec, "idempotent index");
  bool quotiented = false;
  if (faithful_quotient) {
    const mlab::QuotientDecomposition q = mlab::wreath::faithful_r_quotient(m, e, limits);
    e = q.projection(e);
    m = q.quotient;
    quotiented = true;
  }
  const mlab::wreath::SchutzStructure st = mlab::wreath::schutz_structure(m, e, limits);
  const mlab::wreath::SchutzEmbedding emb = mlab::wreath::schutz_embedding(st, limits);
  rep.text << "idempotent=" << e << '\n'
           << "faithful_quotient_applied=" << yn(quotiented) << '\n'
           << "monoid_order=" << m.order << '\n'
           << "r_class_size=" << st.R.size() << '\n'
           << "h_order=" << st.H.group.order() << '\n'
           << "orbits=" << st.num_orbits << '\n'
           << "star=" << st.star << '\n'
           << "n_order=" << st.N.order << '\n'
           << "wreath_order=" << emb.wreath.product.order << '\n'
           << "embedding_injective=" << yn(emb.embed.injective) << '\n';
  rep.record(json{{"record", "schutz"},
                  {"idempotent", e},
                  {"faithful_quotient_applied", quotiented},
                  {"monoid_order", m.order},
                  {"r_class", st.R},
                  {"h_order", st.H.group.order()},
                  {"orbits", st.num_orbits},
                  {"star", st.star},
                  {"n_order", st.N.order},
                  {"wreath_order", emb.wreath.product.order},
                  {"embedding_injective", emb.embed.injective},
                  {"embedding_map", emb.embed.map}});
}

void cmd_kk_embed(Report& rep, const std::string& btilde_spec,
                  const std::string& b_elements) {
  const Limits& limits = rep.ctx.limits;
  const FiniteGroup btilde = parse_group(btilde_spec, limits);
  const std::vector<int> elements = parse_int_list(b_elements);
  const mlab::wreath::KrasnerKaloujnine kk =
      mlab::wreath::krasner_kaloujnine(btilde, elements, limits);
  const bool tau_iso = kk.tau.injective && kk.tau.surjective;
  rep.text << "btilde_order=" << btilde.order() << '\n'
           << "b_order=" << kk.B.group.order() << '\n'
           << "cosets=" << kk.num_cosets << '\n'
           << "h_order=" << kk.H.order() << '\n'
           << "wreath_order=" << kk.wreath.product.order << '\n'
           << "embedding_injective=" << yn(kk.embed.injective) << '\n'
           << "tau_isomorphism=" << yn(tau_iso) << '\n';
  rep.record(json{{"record", "kk_embed"},
                  {"btilde_order", btilde.order()},
                  {"b_order", kk.B.group.order()},
                  {"cosets", kk.num_cosets},
                  {"h_order", kk.H.order()},
                  {"wreath_order", kk.wreath.product.order},
                  {"embedding_injective", kk.embed.injective},
                  {"tau_isomorphism", tau_iso},
                  {"embedding_map", kk.embed.map}});
}

void cmd_wreath(Report& rep, const std::string& top_spec,
                const std::string& bottom_spec, bool print_table) {
  const Limits& limits = rep.ctx.limits;
  const FiniteSemigroup top = parse_carrier(top_spec, limits);
  const FiniteSemigroup bottom = parse_carrier(bottom_spec, limits);
  const FiniteMonoid& b = bottom.monoid;
  // Regular right action of the bottom monoid on its own carrier.
  std::vector<int> act(static_cast<std::size_t>(b.order) * b.order);
  for (int q = 0; q < b.order; ++q)
    for (int x = 0; x < b.order; ++x)
      act[static_cast<std::size_t>(q) * b.order + x] = b.at(q, x);
  const mlab::MonoidAction action = mlab::make_action(b, b.order, act);
  const mlab::wreath::WreathProduct w =
      mlab::wreath::wreath_product(top.monoid, action, limits);
  rep.text << "top_order=" << top.monoid.order << '\n'
           << "bottom_order=" << b.order << '\n'
           << "points=" << action.set_size << '\n'
           << "order=" << w.product.order << '\n';
  if (print_table) rep.text << mlab::io::render_monoid(w.product);
  json j{{"record", "wreath"},
         {"top_order", top.monoid.order},
         {"bottom_order", b.order},
         {"points", action.set_size},
         {"order", w.product.order}};
  if (print_table) j["table"] = w.product.table;
  rep.record(j);
}

std::vector<std::pair<char, int>> parse_generators(const std::string& spec,
                                                   const FiniteMonoid& m) {
  std::vector<std::pair<char, int>> gens;
  if (spec == "auto") {
    char letter = 'a';
    for (int x = 0; x < m.order; ++x) {
      if (x == m.identity) continue;
      gens.emplace_back(letter++, x);
    }
    if (gens.empty()) gens.emplace_back('a', m.identity);
    return gens;
  }
  // Comma-separated tokens: either bare letters (assigned to the non-identity
  // elements in index order) or explicit letter=element pairs.
  int next_element = 0;
  auto advance = [&]() {
    while (next_element == m.identity) ++next_element;
    return next_element++;
  };
  std::string tok;
  auto take = [&](const std::string& t) {
    if (t.size() == 1) {
      gens.emplace_back(t[0], advance());
      return;
    }
    if (t.size() >= 3 && t[1] == '=') {
      gens.emplace_back(t[0], parse_number(t.substr(2), "generator element"));
      return;
    }
    mlab::fail(mlab::ErrorKind::bad_argument, "bad generator token: " + t);
  };
  for (char c : spec) {
    if (c == ',') {
      take(tok);
      tok.clear();
    } else {
      tok.push_back(c);
    }
  }
  take(tok);
  return gens;
}

void cmd_expand(Report& rep, const FiniteSemigroup& s,
                const std::string& gens_spec, bool print_table) {
  const Limits& limits = rep.ctx.limits;
  const std::vector<std::pair<char, int>> gens =
      parse_generators(gens_spec, s.monoid);
  const mlab::expansion::Expansion ex =
      mlab::expansion::henckell_expansion(s.monoid, gens, limits);
  const mlab::expansion::AperiodicMorphismReport ap =
      mlab::expansion::is_aperiodic_morphism(ex.eta);
  std::ostringstream gtxt;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) gtxt << ',';
    gtxt << gens[i].first << '=' << gens[i].second;
  }
  rep.text << "base_order=" << s.monoid.order << '\n'
           << "generators=" << gtxt.str() << '\n'
           << "order=" << ex.exp.order << '\n'
           << "eta_surjective=" << yn(ex.eta.surjective) << '\n'
           << "eta_aperiodic_morphism=" << yn(ap.all_aperiodic) << '\n';
  if (print_table) rep.text << mlab::io::render_monoid(ex.exp);
  json j{{"record", "expand"},
         {"base_order", s.monoid.order},
         {"generators", gtxt.str()},
         {"order", ex.exp.order},
         {"eta_surjective", ex.eta.surjective},
         {"eta_aperiodic_morphism", ap.all_aperiodic},
         {"eta_map", ex.eta.map}};
  if (print_table) j["table"] = ex.exp.table;
  rep.record(j);
}

void cmd_solve(Report& rep, const std::string& g_spec, const std::string& b_spec,
               const std::string& a_spec, const std::string& alpha_spec,
               const std::string& phi_spec) {
  const Limits& limits = rep.ctx.limits;
  const FiniteGroup G = parse_group(g_spec, limits);
  const FiniteGroup B = parse_group(b_spec, limits);
  const FiniteGroup A = parse_group(a_spec, limits);
  const Homomorphism alpha = hom_or_auto(alpha_spec, A.monoid, B.monoid,
                                         false, true, limits, "alpha");
  const Homomorphism phi = hom_or_auto(phi_spec, G.monoid, B.monoid, false,
                                       true, limits, "phi");
  const mlab::embedding::EmbeddingProblem p =
      mlab::embedding::make_embedding_problem(G, B, A, phi, alpha);
  const auto sol = mlab::embedding::solve_weak(p, limits.search_budget);
  if (sol) {
    rep.text << "weak solution found\nlift=" << join_ints(sol->lift.map)
             << '\n';
    rep.record(json{{"record", "solve"},
                    {"found", true},
                    {"lift", sol->lift.map}});
  } else {
    rep.text << "no weak solution\n";
    rep.record(json{{"record", "solve"}, {"found", false}});
  }
}

void cmd_pullback(Report& rep, const std::string& a_spec,
                  const std::string& gi_spec, const std::string& b_spec,
                  const std::string& alpha_spec, const std::string& psi_spec) {
  const Limits& limits = rep.ctx.limits;
  const FiniteGroup A = parse_group(a_spec, limits);
  const FiniteGroup Gi = parse_group(gi_spec, limits);
  const FiniteGroup B = parse_group(b_spec, limits);
  const Homomorphism alpha = hom_or_auto(alpha_spec, A.monoid, B.monoid,
                                         false, true, limits, "alpha");
  const Homomorphism psi = hom_or_auto(psi_spec, Gi.monoid, B.monoid, false,
                                       true, limits, "psi");
  const mlab::embedding::Pullback pb =
      mlab::embedding::pullback(A, Gi, alpha, psi, limits);
  const bool kernel_iso = pb.kernel_iso.injective && pb.kernel_iso.surjective;
  rep.text << "pullback_order=" << pb.P.order() << '\n'
           << "ker_alpha_order=" << pb.kerA.elements.size() << '\n'
           << "ker_alpha_prime_order=" << pb.kerP.elements.size() << '\n'
           << "kernel_isomorphism=" << yn(kernel_iso) << '\n'
           << "square_commutes=true\n";
  rep.record(json{{"record", "pullback"},
                  {"pullback_order", pb.P.order()},
                  {"ker_alpha_order", pb.kerA.elements.size()},
                  {"ker_alpha_prime_order", pb.kerP.elements.size()},
                  {"kernel_isomorphism", kernel_iso},
                  {"square_commutes", true}});
}

void cmd_transfer(Report& rep, const std::string& g_spec,
                  const std::string& b_spec, const std::string& a_spec,
                  const std::string& alpha_spec, const std::string& phi_spec,
                  const std::string& btilde_spec,
                  const std::string& b_embed_spec, bool try_solve) {
  const Limits& limits = rep.ctx.limits;
  const FiniteGroup G = parse_group(g_spec, limits);
  const FiniteGroup B = parse_group(b_spec, limits);
  const FiniteGroup A = parse_group(a_spec, limits);
  const FiniteGroup Btilde = parse_group(btilde_spec, limits);
  const Homomorphism alpha = hom_or_auto(alpha_spec, A.monoid, B.monoid,
                                         false, true, limits, "alpha");
  const Homomorphism phi = hom_or_auto(phi_spec, G.monoid, B.monoid, false,
                                       true, limits, "phi");
  const Homomorphism b_embed =
      hom_or_auto(b_embed_spec, B.monoid, Btilde.monoid, true, false, limits,
                  "B-embed");
  const mlab::embedding::EmbeddingProblem p =
      mlab::embedding::make_embedding_problem(G, B, A, phi, alpha);
  const mlab::embedding::TransferResult t =
      mlab::embedding::transfer_obstruction(p, Btilde, b_embed, limits);
  const auto kernel_ea =
      mlab::embedding::is_elementary_abelian(t.ker_alpha_tilde.group);
  rep.text << "cosets=" << t.kk.num_cosets << '\n'
           << "atilde_order=" << t.Atilde.elements.size() << '\n'
           << "ker_alpha_tilde_order=" << t.ker_alpha_tilde.elements.size()
           << '\n'
           << "kernel_power_order=" << t.kernel_power_order << '\n'
           << "kernel_elementary_abelian_p="
           << (kernel_ea ? std::to_string(*kernel_ea) : std::string("none"))
           << '\n'
           << "diagram_commutes=" << yn(t.diagram_commutes) << '\n';
  json j{{"record", "transfer"},
         {"cosets", t.kk.num_cosets},
         {"atilde_order", t.Atilde.elements.size()},
         {"ker_alpha_tilde_order", t.ker_alpha_tilde.elements.size()},
         {"kernel_power_order", t.kernel_power_order},
         {"diagram_commutes", t.diagram_commutes}};
  if (kernel_ea)
    j["kernel_elementary_abelian_p"] = *kernel_ea;
  else
    j["kernel_elementary_abelian_p"] = nullptr;
  if (try_solve) {
    const auto lifted = mlab::embedding::solve_weak(
        t.phi_tilde_target, t.alpha_tilde, limits.search_budget);
    rep.text << "transferred_solvable=" << yn(lifted.has_value()) << '\n';
    j["transferred_solvable"] = lifted.has_value();
    if (lifted) j["transferred_lift"] = lifted->map;
  }
  rep.record(j);
}

void cmd_monoid_transfer(Report& rep, const std::string& mspec,
                         const std::string& espec,
                         const std::string& atilde_spec,
                         const std::string& alpha_tilde_spec,
                         bool faithful_quotient, int p_flag) {
  const Limits& limits = rep.ctx.limits;
  FiniteMonoid m = parse_carrier(mspec, limits).monoid;
  int e = espec == "auto" ? least_idempotent(m)
                          : parse_number(espec, "idempotent index");
  if (faithful_quotient) {
    const mlab::QuotientDecomposition q = mlab::wreath::faithful_r_quotient(m, e, limits);
    e = q.projection(e);
    m = q.quotient;
  }
  const mlab::wreath::SchutzStructure st = mlab::wreath::schutz_structure(m, e, limits);
  const FiniteGroup Atilde = parse_group(atilde_spec, limits);
  const Homomorphism alpha_tilde =
      hom_or_auto(alpha_tilde_spec, Atilde.monoid, st.H.group.monoid, false,
                  true, limits, "alpha-tilde");
  const mlab::embedding::MonoidTransferResult mt =
      mlab::embedding::monoid_transfer(st, alpha_tilde, limits);
  int p = p_flag;
  if (p == 0) {
    const mlab::embedding::SubgroupWitness ker =
        mlab::embedding::subgroup_from_elements(
            Atilde, mlab::embedding::kernel_elements(alpha_tilde));
    const auto kp = mlab::embedding::is_elementary_abelian(ker.group);
    p = kp && *kp != 0 ? *kp : 2;
  }
  const mlab::embedding::SubgroupExtensionReport ext =
      mlab::embedding::subgroup_extension_check(mt.Mprime, mt.lambda, p);
  rep.text << "mprime_order=" << mt.Mprime.order << '\n'
           << "lambda_surjective=" << yn(mt.lambda.surjective) << '\n'
           << "aprime_order=" << mt.Aprime_elements.size() << '\n'
           << "rho_surjective=" << yn(mt.rho.surjective) << '\n'
           << "diagram_commutes=" << yn(mt.diagram_commutes) << '\n'
           << "extension_p=" << p << '\n'
           << "extension_all_pass=" << yn(ext.all_pass) << '\n';
  rep.record(json{{"record", "monoid_transfer"},
                  {"mprime_order", mt.Mprime.order},
                  {"lambda_surjective", mt.lambda.surjective},
                  {"aprime_order", mt.Aprime_elements.size()},
                  {"rho_surjective", mt.rho.surjective},
                  {"diagram_commutes", mt.diagram_commutes},
                  {"extension_p", p},
                  {"extension_all_pass", ext.all_pass}});
}

void cmd_frattini(Report& rep, const std::string& g_spec) {
  const Limits& limits = rep.ctx.limits;
  const FiniteGroup g = parse_group(g_spec, limits);
  const mlab::embedding::FrattiniResult f = mlab::embedding::frattini(g, limits);
  rep.text << "group_order=" << g.order() << '\n'
           << "frattini_order=" << f.subgroup.size() << '\n'
           << "frattini_elements=" << join_ints(f.subgroup) << '\n'
           << "quotient_order=" << f.quotient.order() << '\n'
           << "maximal_subgroups=" << f.maximal_subgroups.size() << '\n';
  rep.record(json{{"record", "frattini"},
                  {"group_order", g.order()},
                  {"frattini_order", f.subgroup.size()},
                  {"frattini_elements", f.subgroup},
                  {"quotient_order", f.quotient.order()},
                  {"maximal_subgroups", f.maximal_subgroups.size()}});
}

void cmd_satlift(Report& rep, const std::string& g_spec,
                 const std::string& to_spec, const std::string& phi_spec,
                 const std::string& member) {
  const Limits& limits = rep.ctx.limits;
  const FiniteGroup g = parse_group(g_spec, limits);
  const FiniteGroup target = parse_group(to_spec, limits);
  const Homomorphism phi = hom_or_auto(phi_spec, g.monoid, target.monoid,
                                       false, true, limits, "phi");
  std::function<bool(const FiniteGroup&)> pred;
  if (member == "all") {
    pred = [](const FiniteGroup&) { return true; };
  } else if (member == "abelian") {
    pred = [](const FiniteGroup& h) {
      for (int a = 0; a < h.order(); ++a)
        for (int b = a + 1; b < h.order(); ++b)
          if (h.at(a, b) != h.at(b, a)) return false;
      return true;
    };
  } else if (member == "cyclic") {
    pred = [](const FiniteGroup& h) {
      for (int x = 0; x < h.order(); ++x)
        if (mlab::cyclic_profile(h.monoid, x).period == h.order()) return true;
      return h.order() == 1;
    };
  } else if (member == "elementary-abelian") {
    pred = [](const FiniteGroup& h) {
      return mlab::embedding::is_elementary_abelian(h).has_value();
    };
  } else if (member == "2-group" || member == "3-group") {
    const int p = member[0] - '0';
    pred = [p](const FiniteGroup& h) {
      int n = h.order();
      while (n % p == 0) n /= p;
      return n == 1;
    };
  } else {
    mlab::fail(mlab::ErrorKind::bad_argument,
               "unknown membership class: " + member);
  }
  const auto lift = mlab::embedding::saturated_lift(g, phi, pred, limits);
  if (lift) {
    rep.text << "found=true\n"
             << "subgroup_order=" << lift->elements.size() << '\n'
             << "subgroup_elements=" << join_ints(lift->elements) << '\n';
    rep.record(json{{"record", "satlift"},
                    {"found", true},
                    {"subgroup_order", lift->elements.size()},
                    {"subgroup_elements", lift->elements}});
  } else {
    rep.text << "found=false\n";
    rep.record(json{{"record", "satlift"}, {"found", false}});
  }
}

void cmd_projcheck(Report& rep, const std::string& s_spec, int bound) {
  const Limits& limits = rep.ctx.limits;
  const FiniteSemigroup s = parse_carrier(s_spec, limits);
  const pr::ProjectivityVerdict v = pr::projective_up_to_bound(s, bound, limits);
  if (v.outcome == pr::SplitOutcome::no_witness_up_to_bound) {
    rep.text << "outcome=no-witness-up-to-bound\n"
             << "bound=" << bound << '\n'
             << "note=projectivity confirmed only up to the search bound\n";
    rep.record(json{{"record", "projcheck"},
                    {"outcome", "no-witness-up-to-bound"},
                    {"bound", bound}});
    return;
  }
  rep.text << "outcome=witness\n"
           << "bound=" << bound << '\n'
           << "cover=" << v.description << '\n'
           << "cover_order=" << v.T->monoid.order << '\n'
           << "phi=" << join_ints(v.phi->map) << '\n';
  rep.text << mlab::io::render_monoid(*v.T);
  // Failed-fiber explanation: the section would have to pick one preimage
  // per subject element from these fibers, and no multiplicative choice
  // exists.
  json fibers = json::array();
  for (int x = 0; x < s.original_count(); ++x) {
    std::vector<int> fiber;
    for (int t = 0; t < v.T->original_count(); ++t)
      if ((*v.phi)(t) == x) fiber.push_back(t);
    rep.text << "fiber_of_" << x << "=" << join_ints(fiber) << '\n';
    fibers.push_back(json{{"subject", x}, {"preimages", fiber}});
  }
  rep.text << "explanation=no multiplicative section through these fibers\n";
  json j = json{{"record", "projcheck"},
                {"outcome", "witness"},
                {"bound", bound},
                {"cover", v.description},
                {"cover_order", v.T->monoid.order},
                {"cover_adjoined", v.T->identity_adjoined},
                {"cover_table", v.T->monoid.table},
                {"phi", v.phi->map},
                {"fibers", fibers},
                {"explanation",
                 "no multiplicative section through these fibers"}};
  rep.record(j);
}

void cmd_bandscan(Report& rep, int max_order, int bound) {
  const pr::BandScanReport r =
      pr::band_theorem_scan(max_order, bound, rep.ctx.limits);
  rep.text << "entries=" << r.entries.size() << '\n'
           << "bands=" << r.bands << '\n'
           << "witnessed=" << r.witnessed << '\n'
           << "inconclusive=" << r.inconclusive << '\n'
           << "consistent=" << yn(r.consistent) << '\n';
  for (const pr::BandScanEntry& e : r.entries) {
    const bool witnessed = e.verdict.outcome == pr::SplitOutcome::witness;
    rep.text << "order=" << e.order << " index=" << e.catalog_index
             << " band=" << yn(e.is_band) << " witness="
             << (witnessed ? e.verdict.description : std::string("none"))
             << '\n';
    rep.record(json{{"record", "bandscan_entry"},
                    {"order", e.order},
                    {"index", e.catalog_index},
                    {"band", e.is_band},
                    {"witnessed", witnessed},
                    {"witness", witnessed ? e.verdict.description : ""},
                    {"inconclusive", e.inconclusive}});
  }
  rep.record(json{{"record", "bandscan"},
                  {"entries", r.entries.size()},
                  {"bands", r.bands},
                  {"witnessed", r.witnessed},
                  {"inconclusive", r.inconclusive},
                  {"consistent", r.consistent}});
}

void cmd_enumerate(Report& rep, const std::string& kind, int n, bool print) {
  const Limits& limits = rep.ctx.limits;
  if (kind == "semigroups") {
    const std::vector<FiniteSemigroup> all = mlab::cat::enumerate_semigroups(n, limits);
    rep.text << "count=" << all.size() << '\n';
    rep.record(json{{"record", "enumerate"},
                    {"kind", kind},
                    {"n", n},
                    {"count", all.size()}});
    if (print)
      for (const FiniteSemigroup& s : all) {
        rep.text << mlab::io::render_monoid(s);
        json j = table_json(s);
        j["record"] = "monoid";
        rep.record(j);
      }
  } else if (kind == "monoids") {
    const std::vector<FiniteMonoid> all = mlab::cat::enumerate_monoids(n, limits);
    rep.text << "count=" << all.size() << '\n';
    rep.record(json{{"record", "enumerate"},
                    {"kind", kind},
                    {"n", n},
                    {"count", all.size()}});
    if (print)
      for (const FiniteMonoid& m : all) {
        rep.text << mlab::io::render_monoid(m);
        json j = table_json(FiniteSemigroup{m, false});
        j["record"] = "monoid";
        rep.record(j);
      }
  } else {
    mlab::fail(mlab::ErrorKind::bad_argument,
               "kind must be semigroups or monoids: " + kind);
  }
}

}  // namespace

int main(int argc, char** argv) {
  Ctx ctx;
  long long budget_flag = 0;
  long long max_order_flag = 0;

  CLI::App app{"finite-algebra toolkit"};
  app.require_subcommand(1);
  app.add_option("--format", ctx.format, "report encoding")
      ->check(CLI::IsMember({"text", "json-lines"}))
      ->envname("MLAB_FORMAT");
  app.add_option("--budget", budget_flag, "search budget cap")
      ->envname("MLAB_BUDGET");
  app.add_option("--max-order", max_order_flag, "carrier order cap")
      ->envname("MLAB_MAX_ORDER");
  // Runs after option parsing but before any subcommand callback.
  app.parse_complete_callback([&] {
    if (budget_flag > 0) ctx.limits.search_budget = budget_flag;
    if (max_order_flag > 0) ctx.limits.max_order = static_cast<int>(max_order_flag);
  });

  Report rep(ctx);
  auto sub = [&](const std::string& name, const std::string& desc) {
    CLI::App* s = app.add_subcommand(name, desc);
    s->fallthrough();
    return s;
  };

  // validate
  static std::string v_in;
  CLI::App* c_validate = sub("validate", "validate a carrier and report flags");
  c_validate->add_option("--in", v_in, "carrier alias or @file")->required();
  c_validate->callback([&] { cmd_validate(rep, v_in); });

  // family
  static std::string f_name, f_of;
  static int f_n = 0, f_p = 0, f_k = 0, f_index = 0, f_period = 0;
  CLI::App* c_family = sub("family", "construct a named family member");
  c_family->add_option("--name", f_name, "family name")->required();
  c_family->add_option("--n", f_n, "size parameter");
  c_family->add_option("--p", f_p, "prime parameter");
  c_family->add_option("--k", f_k, "rank parameter");
  c_family->add_option("--index", f_index, "monogenic index");
  c_family->add_option("--period", f_period, "monogenic period");
  c_family->add_option("--of", f_of, "inner carrier for zero_adjoined");
  c_family->callback(
      [&] { cmd_family(rep, f_name, f_n, f_p, f_k, f_index, f_period, f_of); });

  // greens
  static std::string gr_m;
  CLI::App* c_greens = sub("greens", "Green's relations and eggbox grids");
  c_greens->add_option("--M", gr_m, "carrier alias or @file")->required();
  c_greens->callback([&] { cmd_greens(rep, gr_m); });

  // classify
  static std::string cl_m, cl_family;
  static int cl_n = 0;
  CLI::App* c_classify = sub("classify", "band/regularity/aperiodicity flags");
  c_classify->add_option("--M", cl_m, "carrier alias or @file");
  c_classify->add_option("--family", cl_family, "family name");
  c_classify->add_option("--n", cl_n, "family size parameter");
  c_classify->callback([&] {
    if (cl_m.empty() && cl_family.empty())
      mlab::fail(mlab::ErrorKind::bad_argument,
                 "classify needs --M or --family");
    const FiniteSemigroup s =
        !cl_m.empty() ? parse_carrier(cl_m, ctx.limits)
                      : family_from_flags(cl_family, cl_n, 0, 0, 0, 0, "",
                                          ctx.limits);
    cmd_classify(rep, s);
  });

  // schutz
  static std::string sc_m, sc_e = "auto";
  static bool sc_fq = false;
  CLI::App* c_schutz = sub("schutz", "Schützenberger structure at an idempotent");
  c_schutz->add_option("--M", sc_m, "carrier alias or @file")->required();
  c_schutz->add_option("--e", sc_e, "idempotent index or 'auto'");
  c_schutz->add_flag("--faithful-quotient", sc_fq,
                     "quotient out the kernel of the R-class action first");
  c_schutz->callback([&] { cmd_schutz(rep, sc_m, sc_e, sc_fq); });

  // kk-embed
  static std::string kk_btilde, kk_b;
  CLI::App* c_kk = sub("kk-embed", "coset wreath embedding of a group");
  c_kk->add_option("--Btilde", kk_btilde, "ambient group alias")->required();
  c_kk->add_option("--B", kk_b, "subgroup elements, comma-separated")
      ->required();
  c_kk->callback([&] { cmd_kk_embed(rep, kk_btilde, kk_b); });

  // wreath
  static std::string w_top, w_bottom;
  static bool w_print = false;
  CLI::App* c_wreath = sub("wreath", "wreath product over the regular action");
  c_wreath->add_option("--top", w_top, "top carrier alias")->required();
  c_wreath->add_option("--bottom", w_bottom, "bottom carrier alias")->required();
  c_wreath->add_flag("--print", w_print, "print the product table");
  c_wreath->callback([&] { cmd_wreath(rep, w_top, w_bottom, w_print); });

  // expand
  static std::string e_m, e_family, e_gens = "auto";
  static int e_n = 0;
  static bool e_print = false;
  CLI::App* c_expand = sub("expand", "factorization-signature expansion");
  c_expand->add_option("--M", e_m, "carrier alias or @file");
  c_expand->add_option("--family", e_family, "family name");
  c_expand->add_option("--n", e_n, "family size parameter");
  c_expand->add_option("--gens", e_gens,
                       "letters, letter=element pairs, or 'auto'");
  c_expand->add_flag("--print", e_print, "print the expansion table");
  c_expand->callback([&] {
    if (e_m.empty() && e_family.empty())
      mlab::fail(mlab::ErrorKind::bad_argument, "expand needs --M or --family");
    const FiniteSemigroup s =
        !e_m.empty() ? parse_carrier(e_m, ctx.limits)
                     : family_from_flags(e_family, e_n, 0, 0, 0, 0, "",
                                         ctx.limits);
    cmd_expand(rep, s, e_gens, e_print);
  });

  // solve
  static std::string so_g, so_b, so_a, so_alpha, so_phi = "id";
  CLI::App* c_solve = sub("solve", "weak solution of an embedding problem");
  c_solve->add_option("--G", so_g, "group alias")->required();
  c_solve->add_option("--B", so_b, "group alias")->required();
  c_solve->add_option("--A", so_a, "group alias")->required();
  c_solve->add_option("--alpha", so_alpha, "hom alias A->B")->required();
  c_solve->add_option("--phi", so_phi, "hom alias G->B (default id)");
  c_solve->callback([&] { cmd_solve(rep, so_g, so_b, so_a, so_alpha, so_phi); });

  // pullback
  static std::string pb_a, pb_gi, pb_b, pb_alpha, pb_psi;
  CLI::App* c_pullback = sub("pullback", "fiber product of two epimorphisms");
  c_pullback->add_option("--A", pb_a, "group alias")->required();
  c_pullback->add_option("--Gi", pb_gi, "group alias")->required();
  c_pullback->add_option("--B", pb_b, "group alias")->required();
  c_pullback->add_option("--alpha", pb_alpha, "hom alias A->B")->required();
  c_pullback->add_option("--psi", pb_psi, "hom alias Gi->B")->required();
  c_pullback->callback(
      [&] { cmd_pullback(rep, pb_a, pb_gi, pb_b, pb_alpha, pb_psi); });

  // transfer
  static std::string tr_g, tr_b, tr_a, tr_alpha, tr_phi = "id";
  static std::string tr_btilde, tr_embed = "auto";
  static bool tr_solve = true;
  CLI::App* c_transfer = sub("transfer", "transfer an embedding problem along B ≤ B̃");
  c_transfer->add_option("--G", tr_g, "group alias")->required();
  c_transfer->add_option("--B", tr_b, "group alias")->required();
  c_transfer->add_option("--A", tr_a, "group alias")->required();
  c_transfer->add_option("--alpha", tr_alpha, "hom alias A->B")->required();
  c_transfer->add_option("--phi", tr_phi, "hom alias G->B (default id)");
  c_transfer->add_option("--Btilde", tr_btilde, "ambient group alias")
      ->required();
  c_transfer->add_option("--B-embed", tr_embed,
                         "hom alias B->Btilde or 'auto'");
  c_transfer->add_flag("--solve,!--no-solve", tr_solve,
                       "attempt the transferred problem");
  c_transfer->callback([&] {
    cmd_transfer(rep, tr_g, tr_b, tr_a, tr_alpha, tr_phi, tr_btilde, tr_embed,
                 tr_solve);
  });

  // monoid-transfer
  static std::string mt_m, mt_e = "auto", mt_atilde, mt_alpha = "auto";
  static bool mt_fq = false;
  static int mt_p = 0;
  CLI::App* c_mt = sub("monoid-transfer",
                       "transfer a monoid along a group cover of its maximal subgroup");
  c_mt->add_option("--M", mt_m, "carrier alias or @file")->required();
  c_mt->add_option("--e", mt_e, "idempotent index or 'auto'");
  c_mt->add_option("--Atilde", mt_atilde, "covering group alias")->required();
  c_mt->add_option("--alpha-tilde", mt_alpha, "hom alias Atilde->H or 'auto'");
  c_mt->add_flag("--faithful-quotient", mt_fq,
                 "quotient out the kernel of the R-class action first");
  c_mt->add_option("--p", mt_p, "extension-check prime (0 = derive)");
  c_mt->callback(
      [&] { cmd_monoid_transfer(rep, mt_m, mt_e, mt_atilde, mt_alpha, mt_fq, mt_p); });

  // frattini
  static std::string fr_g;
  CLI::App* c_frattini = sub("frattini", "Frattini subgroup and quotient");
  c_frattini->add_option("--G", fr_g, "group alias")->required();
  c_frattini->callback([&] { cmd_frattini(rep, fr_g); });

  // satlift
  static std::string sl_g, sl_to, sl_phi, sl_member = "all";
  CLI::App* c_satlift = sub("satlift", "least saturated subgroup lift");
  c_satlift->add_option("--G", sl_g, "group alias")->required();
  c_satlift->add_option("--to", sl_to, "target group alias")->required();
  c_satlift->add_option("--phi", sl_phi, "hom alias G->target")->required();
  c_satlift
      ->add_option("--member", sl_member,
                   "membership class for the lifted subgroup")
      ->check(CLI::IsMember({"all", "abelian", "cyclic", "elementary-abelian",
                             "2-group", "3-group"}));
  c_satlift->callback([&] { cmd_satlift(rep, sl_g, sl_to, sl_phi, sl_member); });

  // projcheck
  static std::string pc_s;
  static int pc_bound = 4;
  CLI::App* c_projcheck = sub("projcheck", "bounded projectivity verdict");
  c_projcheck->add_option("--S", pc_s, "carrier alias or @file")->required();
  c_projcheck->add_option("--bound", pc_bound, "cover order bound");
  c_projcheck->callback([&] { cmd_projcheck(rep, pc_s, pc_bound); });

  // bandscan
  static int bs_max_order = 3, bs_bound = 4;
  CLI::App* c_bandscan = sub("bandscan", "band-theorem scan over the catalog");
  c_bandscan->add_option("--max-subject-order", bs_max_order,
                         "largest subject order to scan");
  c_bandscan->add_option("--bound", bs_bound, "cover order bound");
  c_bandscan->callback([&] { cmd_bandscan(rep, bs_max_order, bs_bound); });

  // enumerate
  static std::string en_kind = "semigroups";
  static int en_n = 0;
  static bool en_print = false;
  CLI::App* c_enumerate = sub("enumerate", "catalog up to isomorphism");
  c_enumerate
      ->add_option("--kind", en_kind, "semigroups or monoids")
      ->check(CLI::IsMember({"semigroups", "monoids"}));
  c_enumerate->add_option("--n", en_n, "carrier order")
      ->required()
      ->check(CLI::Range(1, 1000000));
  c_enumerate->add_flag("--print", en_print, "print every table");
  c_enumerate->callback([&] { cmd_enumerate(rep, en_kind, en_n, en_print); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const MlabError& e) {
    if (ctx.format == "json-lines") {
      json j{{"record", "error"},
             {"kind", mlab::to_string(e.kind())},
             {"message", e.what()},
             {"witnesses",
              {e.witness(0), e.witness(1), e.witness(2)}}};
      std::fputs((j.dump() + "\n").c_str(), stderr);
    } else {
      std::fprintf(stderr, "error: %s (witnesses: %lld %lld %lld)\n", e.what(),
                   e.witness(0), e.witness(1), e.witness(2));
    }
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: internal: %s\n", e.what());
    return 1;
  }

  rep.flush();
  return 0;
}
