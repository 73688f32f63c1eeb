#pragma once

// Line-oriented group files. Layout (see docs/formats.md):
//
//   # comment
//   group <name> <n>
//   [meta <key> <value...>]...
//   [labels <l0> ... <l(n-1)>]
//   table                        perms <d>
//   <n rows of n indices>   or   <one permutation of 0..d-1 per line>

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ccig/catalog.hpp"
#include "ccig/error.hpp"
#include "ccig/group.hpp"

namespace ccig {

struct GroupSpecFile {
  std::string name;
  std::size_t order = 0;
  std::vector<std::vector<Element>> cayley_table;
  std::vector<std::vector<Element>> permutation_generators;
  std::size_t permutation_degree = 0;
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> labels;
  bool uses_permutations() const { return permutation_degree > 0; }
};

namespace detail {

struct LineReader {
  std::istream& is;
  std::size_t line_no = 0;
  /// Next non-empty, non-comment line split into tokens; false at EOF.
  bool next(std::vector<std::string>& toks) {
    std::string line;
    while (std::getline(is, line)) {
      ++line_no;
      if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      std::istringstream ls(line);
      toks.clear();
      for (std::string t; ls >> t;) toks.push_back(t);
      if (!toks.empty()) return true;
    }
    return false;
  }
};

inline std::size_t parse_index(const std::string& tok, std::size_t line, const std::string& field) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(tok, &used);
    if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw ParseError(field + ": expected a nonnegative integer, got '" + tok + "'", line);
  }
}

}  // namespace detail

inline GroupSpecFile parse_group_spec(std::istream& is) {
  detail::LineReader rd{is};
  std::vector<std::string> toks;
  GroupSpecFile spec;
  if (!rd.next(toks)) throw ParseError("missing 'group' header", rd.line_no);
  if (toks.size() != 3 || toks[0] != "group") throw ParseError("header must be 'group <name> <n>'", rd.line_no);
  spec.name = toks[1];
  spec.order = detail::parse_index(toks[2], rd.line_no, "order");
  if (spec.order == 0) throw ParseError("order must be positive", rd.line_no);

  bool have_body = false;
  while (rd.next(toks)) {
    if (toks[0] == "meta") {
      if (toks.size() < 2) throw ParseError("meta needs a key", rd.line_no);
      std::string value;
      for (std::size_t i = 2; i < toks.size(); ++i) value += (i > 2 ? " " : "") + toks[i];
      spec.metadata.emplace_back(toks[1], value);
    } else if (toks[0] == "labels") {
      if (toks.size() != spec.order + 1) throw ParseError("labels: expected " + std::to_string(spec.order) + " entries", rd.line_no);
      spec.labels.assign(toks.begin() + 1, toks.end());
    } else if (toks[0] == "table") {
      if (toks.size() != 1) throw ParseError("'table' takes no arguments", rd.line_no);
      for (std::size_t r = 0; r < spec.order; ++r) {
        if (!rd.next(toks)) throw ParseError("table: expected " + std::to_string(spec.order) + " rows, found " + std::to_string(r), rd.line_no);
        if (toks.size() != spec.order)
          throw ParseError("table row " + std::to_string(r) + ": expected " + std::to_string(spec.order) +
                               " entries, found " + std::to_string(toks.size()),
                           rd.line_no);
        std::vector<Element> row;
        for (const auto& t : toks) {
          const std::size_t v = detail::parse_index(t, rd.line_no, "table row " + std::to_string(r));
          if (v >= spec.order) throw ParseError("table row " + std::to_string(r) + ": entry " + t + " out of range", rd.line_no);
          row.push_back(static_cast<Element>(v));
        }
        spec.cayley_table.push_back(std::move(row));
      }
      have_body = true;
      break;
    } else if (toks[0] == "perms") {
      if (toks.size() != 2) throw ParseError("expected 'perms <d>'", rd.line_no);
      spec.permutation_degree = detail::parse_index(toks[1], rd.line_no, "perms degree");
      if (spec.permutation_degree == 0) throw ParseError("permutation degree must be positive", rd.line_no);
      while (rd.next(toks)) {
        if (toks.size() != spec.permutation_degree)
          throw ParseError("permutation: expected " + std::to_string(spec.permutation_degree) + " entries", rd.line_no);
        std::vector<Element> p;
        std::vector<bool> hit(spec.permutation_degree, false);
        for (const auto& t : toks) {
          const std::size_t v = detail::parse_index(t, rd.line_no, "permutation");
          if (v >= spec.permutation_degree || hit[v]) throw ParseError("permutation is not a bijection", rd.line_no);
          hit[v] = true;
          p.push_back(static_cast<Element>(v));
        }
        spec.permutation_generators.push_back(std::move(p));
      }
      have_body = true;
      break;
    } else {
      throw ParseError("unexpected '" + toks[0] + "'", rd.line_no);
    }
  }
  if (!have_body) throw ParseError("missing 'table' or 'perms' section", rd.line_no);
  if (!spec.cayley_table.empty() && rd.next(toks)) throw ParseError("trailing content after table", rd.line_no);
  return spec;
}

/// NotAGroup from build_group passes through unchanged.
inline FiniteGroup group_from_spec(const GroupSpecFile& spec, const CatalogOptions& opts = {}) {
  if (spec.uses_permutations()) {
    FiniteGroup g = from_permutations(spec.permutation_generators, spec.permutation_degree, spec.name, opts);
    if (g.order() != spec.order)
      throw ParseError("header declares order " + std::to_string(spec.order) + " but generators give " +
                           std::to_string(g.order()),
                       1);
    return g;
  }
  return build_group(spec.cayley_table, spec.name, spec.labels);
}

inline FiniteGroup load_group(std::istream& is, const CatalogOptions& opts = {}) {
  return group_from_spec(parse_group_spec(is), opts);
}

inline FiniteGroup load_group_file(const std::string& path, const CatalogOptions& opts = {}) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open '" + path + "'", 0);
  return load_group(f, opts);
}

inline std::string file_safe_name(std::string s) {
  for (auto& c : s)
    if (c == ' ' || c == '\t') c = '_';
  return s.empty() ? "G" : s;
}

inline void save_group(const FiniteGroup& G, std::ostream& os) {
  os << "group " << file_safe_name(G.name()) << " " << G.order() << "\n";
  if (!G.labels().empty()) {
    os << "labels";
    for (const auto& l : G.labels()) os << " " << file_safe_name(l);
    os << "\n";
  }
  os << "table\n";
  for (Element a = 0; a < G.order(); ++a) {
    const auto row = G.row(a);
    for (std::size_t b = 0; b < row.size(); ++b) os << (b ? " " : "") << row[b];
    os << "\n";
  }
}

inline void save_group_file(const FiniteGroup& G, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw Error("cannot write '" + path + "'");
  save_group(G, f);
}

}  // namespace ccig
