#pragma once

// Flat-file formats:
//   monoid <order> <identity-index>
//   <order> rows of <order> space-separated 0-based indices
//   [semigroup-adjoined]            (optional trailing flag line)
// and
//   hom <src-order> <tgt-order>
//   <src-order> space-separated target indices
// Rendering is canonical (single spaces, one trailing newline per line);
// parsing tolerates extra blanks, so render∘parse canonicalizes.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "mlab/core.hpp"

namespace mlab {
namespace io {

namespace detail {

struct Cursor {
  const std::vector<std::string>& lines;
  int line = 0;  // 0-based into lines
  int col = 0;   // 0-based into lines[line]

  bool at_end() const { return line >= static_cast<int>(lines.size()); }
  [[noreturn]] void expected(const std::string& what) const {
    fail(ErrorKind::parse_error, "expected " + what, line + 1, col + 1);
  }
  void skip_blanks() {
    while (!at_end() && col < static_cast<int>(lines[static_cast<std::size_t>(line)].size()) &&
           (lines[static_cast<std::size_t>(line)][static_cast<std::size_t>(col)] == ' ' ||
            lines[static_cast<std::size_t>(line)][static_cast<std::size_t>(col)] == '\t'))
      ++col;
  }
  bool line_exhausted() {
    skip_blanks();
    return at_end() ||
           col >= static_cast<int>(lines[static_cast<std::size_t>(line)].size());
  }
  void next_line(const std::string& what) {
    if (!line_exhausted()) expected(what);
    ++line;
    col = 0;
  }
  std::string word(const std::string& what) {
    skip_blanks();
    if (at_end() || col >= static_cast<int>(lines[static_cast<std::size_t>(line)].size()))
      expected(what);
    const std::string& s = lines[static_cast<std::size_t>(line)];
    int start = col;
    while (col < static_cast<int>(s.size()) && s[static_cast<std::size_t>(col)] != ' ' &&
           s[static_cast<std::size_t>(col)] != '\t')
      ++col;
    return s.substr(static_cast<std::size_t>(start),
                    static_cast<std::size_t>(col - start));
  }
  // Reports mismatches at the start of the offending token, not after it.
  void expect_keyword(const std::string& kw, const std::string& what) {
    skip_blanks();
    const int at_line = line + 1, at_col = col + 1;
    if (word(what) != kw)
      fail(ErrorKind::parse_error, "expected " + what, at_line, at_col);
  }
  int integer(const std::string& what) {
    skip_blanks();
    const int at_line = line + 1, at_col = col + 1;
    const std::string w = word(what);
    for (char c : w)
      if (c < '0' || c > '9')
        fail(ErrorKind::parse_error, "expected " + what, at_line, at_col);
    if (w.size() > 7)
      fail(ErrorKind::parse_error, "integer too large; expected " + what,
           at_line, at_col);
    return std::stoi(w);
  }
};

inline std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string current;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) lines.push_back(current);
  // Drop trailing fully blank lines so an optional final newline is neutral.
  while (!lines.empty()) {
    bool blank = true;
    for (char c : lines.back())
      if (c != ' ' && c != '\t') blank = false;
    if (!blank) break;
    lines.pop_back();
  }
  return lines;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::bad_argument, "cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::bad_argument, "cannot open file for write: " + path);
  out << text;
  if (!out) fail(ErrorKind::bad_argument, "write failed: " + path);
}

}  // namespace detail

inline FiniteSemigroup parse_monoid(const std::string& text,
                                    const Limits& limits = default_limits()) {
  const std::vector<std::string> lines = detail::split_lines(text);
  detail::Cursor cur{lines};
  cur.expect_keyword("monoid", "'monoid' header");
  const int order = cur.integer("order");
  const int identity = cur.integer("identity index");
  if (order > limits.max_order)
    fail(ErrorKind::size_limit_exceeded, "declared order exceeds cap", order,
         limits.max_order);
  cur.next_line("end of header line");
  std::vector<int> table;
  table.reserve(static_cast<std::size_t>(order) * static_cast<std::size_t>(order));
  for (int r = 0; r < order; ++r) {
    for (int c = 0; c < order; ++c) table.push_back(cur.integer("table entry"));
    cur.next_line("end of table row");
  }
  bool adjoined = false;
  if (!cur.at_end()) {
    cur.expect_keyword("semigroup-adjoined",
                       "'semigroup-adjoined' or end of file");
    cur.next_line("end of flag line");
    adjoined = true;
  }
  if (!cur.at_end()) cur.expected("end of file");

  FiniteMonoid monoid;
  try {
    monoid = validate_monoid(order, std::move(table), identity, limits);
  } catch (const MlabError& e) {
    fail(ErrorKind::validation_error, std::string("invalid table: ") + e.what(),
         e.witness(0), e.witness(1), e.witness(2));
  }
  if (adjoined) {
    if (identity != order - 1)
      fail(ErrorKind::validation_error,
           "adjoined identity must be the last element", identity, order - 1);
    FiniteSemigroup s{monoid, true};
    for (int e = 0; e < s.original_count(); ++e) {
      bool is_id = true;
      for (int i = 0; i < s.original_count() && is_id; ++i)
        is_id = monoid.at(e, i) == i && monoid.at(i, e) == i;
      if (is_id)
        fail(ErrorKind::validation_error,
             "flagged adjoined but an original element is an identity", e);
    }
    return s;
  }
  return FiniteSemigroup{monoid, false};
}

inline std::string render_monoid(const FiniteSemigroup& s) {
  std::ostringstream out;
  out << "monoid " << s.monoid.order << ' ' << s.monoid.identity << '\n';
  for (int r = 0; r < s.monoid.order; ++r) {
    for (int c = 0; c < s.monoid.order; ++c) {
      if (c) out << ' ';
      out << s.monoid.at(r, c);
    }
    out << '\n';
  }
  if (s.identity_adjoined) out << "semigroup-adjoined\n";
  return out.str();
}

inline std::string render_monoid(const FiniteMonoid& m) {
  return render_monoid(FiniteSemigroup{m, false});
}

inline FiniteSemigroup load_monoid(const std::string& path,
                                   const Limits& limits = default_limits()) {
  return parse_monoid(detail::read_file(path), limits);
}

inline void save_monoid(const std::string& path, const FiniteSemigroup& s) {
  detail::write_file(path, render_monoid(s));
}

// Raw homomorphism file contents; wiring to actual monoids happens at the
// call site, where both carriers are known.
struct HomFile {
  int src_order = 0;
  int tgt_order = 0;
  std::vector<int> map;
};

inline HomFile parse_hom(const std::string& text) {
  const std::vector<std::string> lines = detail::split_lines(text);
  detail::Cursor cur{lines};
  cur.expect_keyword("hom", "'hom' header");
  HomFile out;
  out.src_order = cur.integer("source order");
  out.tgt_order = cur.integer("target order");
  cur.next_line("end of header line");
  for (int i = 0; i < out.src_order; ++i)
    out.map.push_back(cur.integer("map entry"));
  cur.next_line("end of map line");
  if (!cur.at_end()) cur.expected("end of file");
  for (std::size_t i = 0; i < out.map.size(); ++i)
    if (out.map[i] >= out.tgt_order)
      fail(ErrorKind::validation_error, "map entry out of target range",
           static_cast<long long>(i), out.map[i]);
  return out;
}

inline std::string render_hom(const Homomorphism& h) {
  std::ostringstream out;
  out << "hom " << h.source.order << ' ' << h.target.order << '\n';
  for (int i = 0; i < h.source.order; ++i) {
    if (i) out << ' ';
    out << h.map[static_cast<std::size_t>(i)];
  }
  out << '\n';
  return out.str();
}

inline HomFile load_hom(const std::string& path) {
  return parse_hom(detail::read_file(path));
}

inline void save_hom(const std::string& path, const Homomorphism& h) {
  detail::write_file(path, render_hom(h));
}

}  // namespace io
}  // namespace mlab
