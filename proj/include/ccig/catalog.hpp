#pragma once

// Named groups: cyclic, elementary products, dihedral, dicyclic, quaternion,
// symmetric, alternating, and direct products of these.

#include <algorithm>
#include <cstddef>
#include <map>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "ccig/error.hpp"
#include "ccig/group.hpp"

namespace ccig {

struct CatalogOptions {
  std::size_t element_cap = 5040;
};

namespace detail {

inline void require_cap(const std::string& what, std::size_t order, const CatalogOptions& opts) {
  if (order > opts.element_cap)
    throw ParamOutOfRange(what + " has order " + std::to_string(order) + ", above the element cap " +
                          std::to_string(opts.element_cap));
}

inline std::string power_label(const std::string& base, std::size_t k) {
  if (k == 0) return "";
  if (k == 1) return base;
  return base + "^" + std::to_string(k);
}

/// Labels "1", "a", "a^2", ..., "b", "ab", "a^2b", ... for a^i b^s at i + s*m.
inline std::vector<std::string> ab_labels(std::size_t m, std::size_t sheets) {
  std::vector<std::string> labels;
  for (std::size_t s = 0; s < sheets; ++s)
    for (std::size_t i = 0; i < m; ++i) {
      std::string l = power_label("a", i) + power_label("b", s);
      labels.push_back(l.empty() ? "1" : l);
    }
  return labels;
}

inline std::string cycle_notation(const std::vector<Element>& p) {
  std::vector<bool> seen(p.size(), false);
  std::string out;
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s] || p[s] == s) continue;
    out += "(";
    std::size_t x = s;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      out += (first ? "" : " ") + std::to_string(x);
      first = false;
      x = p[x];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

inline long long require_param(const std::string& name, const std::vector<long long>& params, std::size_t i,
                               long long min) {
  if (params.size() <= i)
    throw ParamOutOfRange(name + " expects at least " + std::to_string(i + 1) + " parameter(s)");
  if (params[i] < min)
    throw ParamOutOfRange(name + " parameter " + std::to_string(i + 1) + " must be >= " + std::to_string(min));
  return params[i];
}

}  // namespace detail

/// Closure of permutations of 0..d-1 under composition, with elements sorted
/// lexicographically (identity first). Product convention: (p*q)(x) = p(q(x)).
inline FiniteGroup from_permutations(const std::vector<std::vector<Element>>& gens, std::size_t degree,
                                     std::string name = {}, const CatalogOptions& opts = {}) {
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    const auto& g = gens[gi];
    if (g.size() != degree) throw ParamOutOfRange("generator " + std::to_string(gi) + " has wrong degree");
    std::vector<bool> hit(degree, false);
    for (Element x : g) {
      if (x >= degree || hit[x]) throw ParamOutOfRange("generator " + std::to_string(gi) + " is not a bijection");
      hit[x] = true;
    }
  }
  std::vector<Element> id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<Element>(i);
  std::map<std::vector<Element>, std::size_t> seen{{id, 0}};
  std::vector<std::vector<Element>> elems{id};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      std::vector<Element> y(degree);
      for (std::size_t x = 0; x < degree; ++x) y[x] = elems[i][g[x]];
      if (seen.emplace(y, elems.size()).second) {
        elems.push_back(std::move(y));
        detail::require_cap(name.empty() ? "permutation group" : name, elems.size(), opts);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  std::map<std::vector<Element>, Element> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<Element>(i);
  const std::size_t n = elems.size();
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  std::vector<std::string> labels;
  std::vector<Element> prod(degree);
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(detail::cycle_notation(elems[a]));
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t x = 0; x < degree; ++x) prod[x] = elems[a][elems[b][x]];
      t[a][b] = index.at(prod);
    }
  }
  return build_group(t, std::move(name), std::move(labels));
}

inline FiniteGroup cyclic_group(std::size_t m, const CatalogOptions& opts = {}) {
  if (m < 1) throw ParamOutOfRange("cyclic group order must be >= 1");
  detail::require_cap("Z" + std::to_string(m), m, opts);
  std::vector<std::vector<Element>> t(m, std::vector<Element>(m));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) {
    labels.push_back(i == 0 ? "1" : detail::power_label("g", i));
    for (std::size_t j = 0; j < m; ++j) t[i][j] = static_cast<Element>((i + j) % m);
  }
  return build_group(t, "Z" + std::to_string(m), std::move(labels));
}

/// D_m = <a, b | a^m = b^2 = 1, ab = ba^-1>, order 2m; a^i b^s at i + s*m.
inline FiniteGroup dihedral_group(std::size_t m, const CatalogOptions& opts = {}) {
  if (m < 1) throw ParamOutOfRange("dihedral parameter must be >= 1");
  detail::require_cap("D" + std::to_string(m), 2 * m, opts);
  const std::size_t n = 2 * m;
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t i = x % m, s = x / m, j = y % m, u = y / m;
      // b a^j = a^-j b
      const std::size_t k = (s == 0 ? i + j : i + m - j) % m;
      t[x][y] = static_cast<Element>(k + ((s + u) % 2) * m);
    }
  return build_group(t, "D" + std::to_string(m), detail::ab_labels(m, 2));
}

/// Dic_{4n} = <a, b | a^{2n} = 1, b^2 = a^n, b a b^-1 = a^-1>, order 4n;
/// a^i b^s at i + s*2n.
inline FiniteGroup dicyclic_group(std::size_t n, const CatalogOptions& opts = {}) {
  if (n < 1) throw ParamOutOfRange("dicyclic parameter must be >= 1");
  const std::size_t m = 2 * n, order = 4 * n;
  detail::require_cap("Dic" + std::to_string(order), order, opts);
  std::vector<std::vector<Element>> t(order, std::vector<Element>(order));
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t i = x % m, s = x / m, j = y % m, u = y / m;
      std::size_t k = (s == 0 ? i + j : i + m - j) % m;
      std::size_t sheet = s + u;
      if (sheet == 2) {
        k = (k + n) % m;  // b^2 = a^n
        sheet = 0;
      }
      t[x][y] = static_cast<Element>(k + sheet * m);
    }
  return build_group(t, "Dic" + std::to_string(order), detail::ab_labels(m, 2));
}

/// Q8 with elements ordered 1, -1, i, -i, j, -j, k, -k.
inline FiniteGroup quaternion_group() {
  // unit index u in {1, i, j, k}; unit products as (sign, unit)
  static constexpr int kUnitSign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  static constexpr int kUnitProd[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  std::vector<std::vector<Element>> t(8, std::vector<Element>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      const int ux = x / 2, uy = y / 2;
      const int sign = (x % 2 ? -1 : 1) * (y % 2 ? -1 : 1) * kUnitSign[ux][uy];
      t[x][y] = static_cast<Element>(2 * kUnitProd[ux][uy] + (sign < 0 ? 1 : 0));
    }
  return build_group(t, "Q8", {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

inline FiniteGroup symmetric_group(std::size_t m, const CatalogOptions& opts = {}) {
  if (m < 1) throw ParamOutOfRange("symmetric degree must be >= 1");
  std::size_t fact = 1;
  for (std::size_t i = 2; i <= m; ++i) {
    fact *= i;
    detail::require_cap("S" + std::to_string(m), fact, opts);
  }
  std::vector<std::vector<Element>> gens;
  if (m >= 2) {
    std::vector<Element> tr(m), cyc(m);
    for (std::size_t i = 0; i < m; ++i) {
      tr[i] = static_cast<Element>(i);
      cyc[i] = static_cast<Element>((i + 1) % m);
    }
    std::swap(tr[0], tr[1]);
    gens = {tr, cyc};
  }
  return from_permutations(gens, m, "S" + std::to_string(m), opts);
}

inline FiniteGroup alternating_group(std::size_t m, const CatalogOptions& opts = {}) {
  if (m < 1) throw ParamOutOfRange("alternating degree must be >= 1");
  std::size_t fact = 1;
  for (std::size_t i = 3; i <= m; ++i) {
    fact *= i;
    detail::require_cap("A" + std::to_string(m), fact, opts);
  }
  std::vector<std::vector<Element>> gens;
  for (std::size_t k = 2; k < m; ++k) {
    std::vector<Element> c(m);
    for (std::size_t i = 0; i < m; ++i) c[i] = static_cast<Element>(i);
    c[0] = 1;
    c[1] = static_cast<Element>(k);
    c[k] = 0;
    gens.push_back(c);
  }
  return from_permutations(gens, m, "A" + std::to_string(m), opts);
}

/// Z2^n x Z_q^m for q in {3, 4}.
inline FiniteGroup elementary_product(std::size_t n, std::size_t m, std::size_t q, const CatalogOptions& opts = {}) {
  std::size_t order = 1;
  for (std::size_t i = 0; i < n; ++i) order *= 2, detail::require_cap("elementary product", order, opts);
  for (std::size_t i = 0; i < m; ++i) order *= q, detail::require_cap("elementary product", order, opts);
  FiniteGroup g = cyclic_group(1);
  bool started = false;
  auto mult = [&](const FiniteGroup& f) {
    g = started ? direct_product(g, f) : f;
    started = true;
  };
  for (std::size_t i = 0; i < n; ++i) mult(cyclic_group(2));
  for (std::size_t i = 0; i < m; ++i) mult(cyclic_group(q));
  std::string name;
  auto part = [](std::size_t base, std::size_t k) {
    return "Z" + std::to_string(base) + (k > 1 ? "^" + std::to_string(k) : "");
  };
  if (n) name = part(2, n);
  if (m) name += (name.empty() ? "" : " x ") + part(q, m);
  if (name.empty()) name = "Z1";
  return build_group(g.table_rows(), name, g.labels());
}

/// A single catalog factor by name. Aliases: zM (cyclic), dM (dihedral),
/// sM (symmetric), aM (alternating), q8, dic12.
inline FiniteGroup catalog(const std::string& raw_name, const std::vector<long long>& params = {},
                           const CatalogOptions& opts = {}) {
  std::string name = raw_name;
  std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::tolower(c); });
  static const std::regex alias(R"(^(z|d|s|a)(\d+)$)");
  std::smatch m;
  if (std::regex_match(name, m, alias) && params.empty()) {
    const long long k = std::stoll(m[2]);
    const std::string kind = m[1];
    if (kind == "z") return catalog("cyclic", {k}, opts);
    if (kind == "d") return catalog("dihedral", {k}, opts);
    if (kind == "s") return catalog("symmetric", {k}, opts);
    return catalog("alternating", {k}, opts);
  }
  if (name == "cyclic") return cyclic_group(detail::require_param(name, params, 0, 1), opts);
  if (name == "dihedral") return dihedral_group(detail::require_param(name, params, 0, 1), opts);
  if (name == "symmetric") return symmetric_group(detail::require_param(name, params, 0, 1), opts);
  if (name == "alternating") return alternating_group(detail::require_param(name, params, 0, 1), opts);
  if (name == "dicyclic12" || name == "dic12") return dicyclic_group(3, opts);
  if (name == "dicyclic") return dicyclic_group(detail::require_param(name, params, 0, 1), opts);
  if (name == "quaternion" || name == "q8") return quaternion_group();
  if (name == "trivial") return cyclic_group(1);
  if (name == "z2z3" || name == "z2z4") {
    const auto n = detail::require_param(name, params, 0, 0);
    const auto k = detail::require_param(name, params, 1, 0);
    return elementary_product(n, k, name == "z2z3" ? 3 : 4, opts);
  }
  throw UnknownName("unknown catalog group '" + raw_name + "'");
}

/// Parse "q8 x cyclic 3" / "z2z4 1 1" / "s3": factors separated by a lone
/// "x" token, each factor a name followed by integer parameters.
inline FiniteGroup catalog_expression(const std::string& expr, const CatalogOptions& opts = {}) {
  std::istringstream is(expr);
  std::vector<std::vector<std::string>> factors(1);
  for (std::string tok; is >> tok;) {
    if (tok == "x" || tok == "*") {
      factors.emplace_back();
    } else {
      factors.back().push_back(tok);
    }
  }
  std::vector<FiniteGroup> groups;
  std::size_t order = 1;
  for (const auto& f : factors) {
    if (f.empty()) throw UnknownName("empty factor in catalog expression '" + expr + "'");
    std::vector<long long> params;
    for (std::size_t i = 1; i < f.size(); ++i) {
      try {
        std::size_t used = 0;
        params.push_back(std::stoll(f[i], &used));
        if (used != f[i].size()) throw std::invalid_argument(f[i]);
      } catch (const std::exception&) {
        throw ParamOutOfRange("parameter '" + f[i] + "' is not an integer");
      }
    }
    groups.push_back(catalog(f[0], params, opts));
    order *= groups.back().order();
    detail::require_cap(expr, order, opts);
  }
  FiniteGroup g = groups.front();
  for (std::size_t i = 1; i < groups.size(); ++i) g = direct_product(g, groups[i]);
  return g;
}

}  // namespace ccig
