#pragma once

// Text formats.
//
// .scx (simplicial complex), line oriented, '#' starts a comment:
//   ground: a b c d        required first, at most 64 names
//   void | empty           or one or more
//   facet: a b c           lines
//
// .pos (finite poset):
//   el: a b c              optional; elements also collected from rels
//   rel: a < b             strict relations; transitive closure is applied
//
// Names match [A-Za-z0-9_]+. Writers emit a canonical form that re-parses
// to an equal value and round-trips byte-identically.

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "alexdual/complex.hpp"
#include "alexdual/errors.hpp"
#include "alexdual/poset.hpp"

namespace alexdual {

namespace detail {

inline std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline std::vector<std::pair<int, std::string>> content_lines(const std::string& text) {
  std::vector<std::pair<int, std::string>> out;
  std::istringstream in(text);
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (tokenize(line).empty()) continue;
    out.emplace_back(no, line);
  }
  return out;
}

inline void check_name(const std::string& name, int line_no) {
  if (!is_valid_vertex_name(name))
    throw ParseError("line " + std::to_string(line_no) + ": bad name '" + name + "'");
}

}  // namespace detail

inline SimplicialComplex parse_complex(const std::string& text) {
  const auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError("empty .scx input");

  auto first = detail::tokenize(lines[0].second);
  if (first[0] != "ground:")
    throw ParseError("line " + std::to_string(lines[0].first) +
                     ": expected 'ground:' first");
  std::vector<std::string> names(first.begin() + 1, first.end());
  for (const auto& n : names) detail::check_name(n, lines[0].first);
  if (names.size() > 64)
    throw ParseError("ground set has " + std::to_string(names.size()) +
                     " names; at most 64 are supported");
  GroundPtr g;
  try {
    g = make_ground(names);
  } catch (const DomainError& e) {
    throw ParseError(std::string("line ") + std::to_string(lines[0].first) + ": " + e.what());
  }

  bool saw_void = false, saw_empty = false;
  std::vector<Simplex> facets;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto [no, line] = lines[k];
    auto toks = detail::tokenize(line);
    if (toks[0] == "void" && toks.size() == 1) {
      saw_void = true;
    } else if (toks[0] == "empty" && toks.size() == 1) {
      saw_empty = true;
    } else if (toks[0] == "facet:") {
      if (toks.size() == 1)
        throw ParseError("line " + std::to_string(no) + ": facet needs at least one vertex");
      std::vector<std::string> verts(toks.begin() + 1, toks.end());
      for (const auto& v : verts) detail::check_name(v, no);
      try {
        facets.push_back(g->simplex_of(verts));
      } catch (const DomainError& e) {
        throw ParseError(std::string("line ") + std::to_string(no) + ": " + e.what());
      }
    } else {
      throw ParseError("line " + std::to_string(no) + ": expected 'facet:', 'void' or 'empty'");
    }
  }
  const int bodies = (saw_void ? 1 : 0) + (saw_empty ? 1 : 0) + (facets.empty() ? 0 : 1);
  if (bodies != 1)
    throw ParseError("need exactly one of: 'void', 'empty', or facet lines");
  if (saw_void) return SimplicialComplex::void_complex(std::move(g));
  if (saw_empty) return SimplicialComplex::empty_complex(std::move(g));
  return SimplicialComplex::from_facets(std::move(g), std::move(facets));
}

inline std::string write_complex(const SimplicialComplex& K) {
  std::string out = "ground:";
  for (const auto& n : K.ground().names()) out += " " + n;
  out += "\n";
  if (K.is_void()) return out + "void\n";
  if (K.is_empty()) return out + "empty\n";
  for (Simplex f : K.facets()) {
    out += "facet:";
    for (int v : f.vertices()) out += " " + K.ground().name(v);
    out += "\n";
  }
  return out;
}

inline Poset parse_poset(const std::string& text) {
  std::vector<std::string> labels;
  auto add_label = [&](const std::string& l, bool declared, int no) {
    detail::check_name(l, no);
    const bool known = std::find(labels.begin(), labels.end(), l) != labels.end();
    if (known) {
      if (declared)
        throw ParseError("line " + std::to_string(no) + ": duplicate element '" + l + "'");
      return;
    }
    labels.push_back(l);
  };

  std::vector<std::pair<std::string, std::string>> rels;
  for (const auto& [no, line] : detail::content_lines(text)) {
    auto toks = detail::tokenize(line);
    if (toks[0] == "el:") {
      for (std::size_t i = 1; i < toks.size(); ++i) add_label(toks[i], true, no);
    } else if (toks[0] == "rel:") {
      if (toks.size() != 4 || toks[2] != "<")
        throw ParseError("line " + std::to_string(no) + ": expected 'rel: a < b'");
      add_label(toks[1], false, no);
      add_label(toks[3], false, no);
      rels.emplace_back(toks[1], toks[3]);
    } else {
      throw ParseError("line " + std::to_string(no) + ": expected 'el:' or 'rel:'");
    }
  }
  try {
    return Poset::from_relations(std::move(labels), rels);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

/// Canonical form: one 'el:' line with all labels, then the covering
/// relations (whose closure is the full order).
inline std::string write_poset(const Poset& X) {
  std::string out = "el:";
  for (const auto& l : X.labels()) out += " " + l;
  out += "\n";
  for (int x = 0; x < X.size(); ++x)
    for (int y = 0; y < X.size(); ++y)
      if (X.covers(x, y)) out += "rel: " + X.label(x) + " < " + X.label(y) + "\n";
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write file '" + path + "'");
  out << content;
}

inline SimplicialComplex load_complex(const std::string& path) {
  return parse_complex(read_file(path));
}

inline Poset load_poset(const std::string& path) {
  return parse_poset(read_file(path));
}

}  // namespace alexdual
