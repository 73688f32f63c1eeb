#pragma once

// Finite groups as dense multiplication tables.
//
// Elements are indices 0..n-1 and the identity always sits at index 0.
// Every layer above this one (characters, spectra, classification) works on
// indices only; labels exist for display.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ccig/error.hpp"

namespace ccig {

using Element = std::uint32_t;

/// How associativity was established when the table was ingested.
enum class AssociativityCheck { kFull, kSampled };

struct BuildOptions {
  std::size_t full_check_limit = 256;  // exhaustive O(n^3) check up to here
  std::size_t sampled_triples = 100000;
  std::uint64_t seed = 0;
};

class FiniteGroup;
FiniteGroup build_group(const std::vector<std::vector<Element>>& table, std::string name,
                        std::vector<std::string> labels, const BuildOptions& opts);

/// Immutable validated group. Construct through build_group().
class FiniteGroup {
 public:
  FiniteGroup() = default;

  std::size_t order() const { return n_; }
  const std::string& name() const { return name_; }

  Element mul(Element a, Element b) const { return table_[std::size_t(a) * n_ + b]; }
  Element inv(Element a) const { return inv_[a]; }
  std::uint32_t elem_order(Element a) const { return ord_[a]; }
  std::span<const Element> row(Element a) const {
    return {table_.data() + std::size_t(a) * n_, n_};
  }

  const std::vector<Element>& inverses() const { return inv_; }
  const std::vector<std::uint32_t>& orders() const { return ord_; }

  /// lcm of element orders.
  std::uint64_t exponent() const { return exponent_; }
  bool is_abelian() const { return abelian_; }
  AssociativityCheck associativity_check() const { return assoc_; }

  std::string label(Element a) const {
    return labels_.empty() ? std::to_string(a) : labels_[a];
  }
  const std::vector<std::string>& labels() const { return labels_; }

  /// g^k for any integer k (negative powers go through the inverse).
  Element pow(Element g, long long k) const {
    const long long o = ord_[g];
    long long r = ((k % o) + o) % o;
    Element acc = 0;
    Element base = g;
    while (r > 0) {
      if (r & 1) acc = mul(acc, base);
      base = mul(base, base);
      r >>= 1;
    }
    return acc;
  }

  Element conjugate(Element x, Element g) const { return mul(mul(x, g), inv_[x]); }

  /// Full table as nested rows (for serialization).
  std::vector<std::vector<Element>> table_rows() const {
    std::vector<std::vector<Element>> rows(n_);
    for (Element a = 0; a < n_; ++a) rows[a].assign(row(a).begin(), row(a).end());
    return rows;
  }

  bool operator==(const FiniteGroup& o) const { return n_ == o.n_ && table_ == o.table_; }

 private:
  friend FiniteGroup build_group(const std::vector<std::vector<Element>>&, std::string,
                                 std::vector<std::string>, const BuildOptions&);

  std::size_t n_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inv_;
  std::vector<std::uint32_t> ord_;
  std::uint64_t exponent_ = 1;
  bool abelian_ = true;
  AssociativityCheck assoc_ = AssociativityCheck::kFull;
  std::string name_;
  std::vector<std::string> labels_;
};

/// Validate a multiplication table and wrap it as a group. The identity is
/// moved to index 0 (swapping it with whatever was there, labels included).
inline FiniteGroup build_group(const std::vector<std::vector<Element>>& table, std::string name = {},
                               std::vector<std::string> labels = {},
                               const BuildOptions& opts = {}) {
  const std::size_t n = table.size();
  if (n == 0) throw NotAGroup("empty multiplication table", {0, 0, 0});
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n)
      throw NotAGroup("row " + std::to_string(a) + " has length " +
                          std::to_string(table[a].size()) + ", expected " + std::to_string(n),
                      {a, 0, 0});
    for (std::size_t b = 0; b < n; ++b)
      if (table[a][b] >= n)
        throw NotAGroup("entry out of range at (" + std::to_string(a) + "," + std::to_string(b) + ")",
                        {a, b, 0});
  }
  if (!labels.empty() && labels.size() != n)
    throw NotAGroup("label count does not match table size", {0, 0, 0});

  std::size_t e = n;
  for (std::size_t c = 0; c < n && e == n; ++c) {
    bool ok = true;
    for (std::size_t g = 0; g < n && ok; ++g) ok = table[c][g] == g && table[g][c] == g;
    if (ok) e = c;
  }
  if (e == n) throw NotAGroup("no two-sided identity", {0, 0, 0});

  // swap e <-> 0
  auto relabel = [e](std::size_t x) -> std::size_t { return x == e ? 0 : (x == 0 ? e : x); };

  FiniteGroup g;
  g.n_ = n;
  g.name_ = std::move(name);
  g.table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      g.table_[relabel(a) * n + relabel(b)] = static_cast<Element>(relabel(table[a][b]));
  if (!labels.empty()) {
    std::swap(labels[0], labels[e]);
    g.labels_ = std::move(labels);
  }

  g.inv_.assign(n, 0);
  for (Element a = 0; a < n; ++a) {
    bool found = false;
    for (Element b = 0; b < n && !found; ++b) {
      if (g.mul(a, b) == 0 && g.mul(b, a) == 0) {
        g.inv_[a] = b;
        found = true;
      }
    }
    if (!found) throw NotAGroup("element " + std::to_string(a) + " has no inverse", {a, 0, 0});
  }

  auto check_triple = [&g](Element a, Element b, Element c) {
    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
      throw NotAGroup("associativity fails for (" + std::to_string(a) + "," + std::to_string(b) +
                          "," + std::to_string(c) + ")",
                      {a, b, c});
  };
  if (n <= opts.full_check_limit) {
    g.assoc_ = AssociativityCheck::kFull;
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c) check_triple(a, b, c);
  } else {
    g.assoc_ = AssociativityCheck::kSampled;
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
    for (std::size_t t = 0; t < opts.sampled_triples; ++t) check_triple(pick(rng), pick(rng), pick(rng));
  }

  g.ord_.assign(n, 0);
  for (Element a = 0; a < n; ++a) {
    std::uint32_t k = 1;
    Element x = a;
    while (x != 0) {
      x = g.mul(x, a);
      ++k;
      if (k > n) throw NotAGroup("element " + std::to_string(a) + " has no finite order", {a, 0, 0});
    }
    g.ord_[a] = k;
    g.exponent_ = std::lcm(g.exponent_, std::uint64_t{k});
  }
  for (Element a = 0; a < n && g.abelian_; ++a)
    for (Element b = a + 1; b < n && g.abelian_; ++b) g.abelian_ = g.mul(a, b) == g.mul(b, a);
  return g;
}

// ---------------------------------------------------------------------------
// Conjugacy

struct ConjugacyPartition {
  std::vector<std::size_t> class_of;             // element -> class
  std::vector<std::vector<Element>> classes;     // sorted; ordered by least member
  std::vector<std::size_t> inverse_class;        // class of g^-1
  std::vector<std::vector<std::size_t>> real_classes;  // orbits of classes under inversion
  std::vector<std::size_t> real_class_of;        // class -> real class

  std::size_t count() const { return classes.size(); }
  Element representative(std::size_t c) const { return classes[c].front(); }
  std::size_t size(std::size_t c) const { return classes[c].size(); }
  /// Elements of C_g union C_{g^-1} for real class r, sorted.
  std::vector<Element> real_class_elements(std::size_t r) const {
    std::vector<Element> out;
    for (std::size_t c : real_classes[r]) out.insert(out.end(), classes[c].begin(), classes[c].end());
    std::sort(out.begin(), out.end());
    return out;
  }
};

inline ConjugacyPartition conjugacy_classes(const FiniteGroup& G) {
  const std::size_t n = G.order();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  ConjugacyPartition P;
  P.class_of.assign(n, kUnset);
  for (Element g = 0; g < n; ++g) {
    if (P.class_of[g] != kUnset) continue;
    const std::size_t c = P.classes.size();
    std::vector<Element> members;
    for (Element x = 0; x < n; ++x) {
      const Element y = G.conjugate(x, g);
      if (P.class_of[y] == kUnset) {
        P.class_of[y] = c;
        members.push_back(y);
      }
    }
    std::sort(members.begin(), members.end());
    P.classes.push_back(std::move(members));
  }
  P.inverse_class.resize(P.count());
  for (std::size_t c = 0; c < P.count(); ++c) P.inverse_class[c] = P.class_of[G.inv(P.representative(c))];
  P.real_class_of.assign(P.count(), kUnset);
  for (std::size_t c = 0; c < P.count(); ++c) {
    if (P.real_class_of[c] != kUnset) continue;
    const std::size_t r = P.real_classes.size();
    P.real_class_of[c] = r;
    std::vector<std::size_t> orbit{c};
    const std::size_t ic = P.inverse_class[c];
    if (ic != c) {
      P.real_class_of[ic] = r;
      orbit.push_back(ic);
    }
    P.real_classes.push_back(std::move(orbit));
  }
  return P;
}

// ---------------------------------------------------------------------------
// Atoms and power maps

struct Atom {
  Element generator = 0;
  std::vector<Element> members;  // sorted
};

/// Generators of the cyclic subgroup <g>: { g^k : gcd(k, o(g)) = 1 }.
inline Atom atom(const FiniteGroup& G, Element g) {
  Atom a{g, {}};
  const std::uint32_t o = G.elem_order(g);
  for (std::uint32_t k = 1; k <= o; ++k)
    if (std::gcd(k, o) == 1) a.members.push_back(G.pow(g, k));
  std::sort(a.members.begin(), a.members.end());
  a.members.erase(std::unique(a.members.begin(), a.members.end()), a.members.end());
  return a;
}

struct PowerMap {
  long long exponent = 1;
  std::vector<Element> image;
  bool is_permutation = false;
};

inline PowerMap power_map(const FiniteGroup& G, long long h) {
  PowerMap pm;
  pm.exponent = h;
  pm.image.resize(G.order());
  std::vector<bool> hit(G.order(), false);
  std::size_t distinct = 0;
  for (Element g = 0; g < G.order(); ++g) {
    pm.image[g] = G.pow(g, h);
    if (!hit[pm.image[g]]) {
      hit[pm.image[g]] = true;
      ++distinct;
    }
  }
  pm.is_permutation = distinct == G.order();
  return pm;
}

/// Units modulo m in ascending order, 1 first.
inline std::vector<long long> units_mod(long long m) {
  if (m <= 1) return {1};
  std::vector<long long> u;
  for (long long h = 1; h < m; ++h)
    if (std::gcd(h, m) == 1) u.push_back(h);
  return u;
}

// ---------------------------------------------------------------------------
// Subgroups, center, quotients, products

struct Subgroup {
  FiniteGroup group;
  std::vector<Element> embedding;  // subgroup index -> element of the parent, ascending
};

inline bool is_closed_subset(const FiniteGroup& G, const std::vector<Element>& S) {
  std::vector<bool> in(G.order(), false);
  for (Element s : S) in[s] = true;
  if (S.empty() || !in[0]) return false;
  for (Element a : S)
    for (Element b : S)
      if (!in[G.mul(a, b)]) return false;
  return true;
}

/// Wrap a closed subset as a standalone group with an embedding.
inline Subgroup subgroup_from_elements(const FiniteGroup& G, std::vector<Element> elems,
                                       std::string name = {}) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (!is_closed_subset(G, elems)) throw NotAGroup("subset is not closed under multiplication", {0, 0, 0});
  std::vector<std::int64_t> local(G.order(), -1);
  for (std::size_t i = 0; i < elems.size(); ++i) local[elems[i]] = static_cast<std::int64_t>(i);
  std::vector<std::vector<Element>> t(elems.size(), std::vector<Element>(elems.size()));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    labels.push_back(G.label(elems[i]));
    for (std::size_t j = 0; j < elems.size(); ++j)
      t[i][j] = static_cast<Element>(local[G.mul(elems[i], elems[j])]);
  }
  Subgroup s{build_group(t, std::move(name), std::move(labels)), std::move(elems)};
  return s;
}

/// Closure of S under multiplication.
inline Subgroup generated_subgroup(const FiniteGroup& G, const std::vector<Element>& S) {
  std::vector<bool> in(G.order(), false);
  std::vector<Element> elems{0};
  in[0] = true;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (Element s : S) {
      const Element y = G.mul(elems[i], s);
      if (!in[y]) {
        in[y] = true;
        elems.push_back(y);
      }
    }
  }
  std::string name = "<";
  for (std::size_t i = 0; i < S.size(); ++i) name += (i ? "," : "") + G.label(S[i]);
  name += ">";
  return subgroup_from_elements(G, std::move(elems), std::move(name));
}

inline std::vector<Element> center(const FiniteGroup& G) {
  std::vector<Element> z;
  for (Element a = 0; a < G.order(); ++a) {
    bool central = true;
    for (Element b = 0; b < G.order() && central; ++b) central = G.mul(a, b) == G.mul(b, a);
    if (central) z.push_back(a);
  }
  return z;
}

/// Conjugation-invariance of N. On failure `witness` receives (g, x) with
/// g x g^-1 outside N.
inline bool is_normal_subset(const FiniteGroup& G, const std::vector<Element>& N,
                             std::array<std::size_t, 2>* witness = nullptr) {
  std::vector<bool> in(G.order(), false);
  for (Element x : N) in[x] = true;
  for (Element g = 0; g < G.order(); ++g)
    for (Element x : N)
      if (!in[G.conjugate(g, x)]) {
        if (witness) *witness = {g, x};
        return false;
      }
  return true;
}

inline bool is_normal_subgroup(const FiniteGroup& G, const std::vector<Element>& N) {
  return is_closed_subset(G, N) && is_normal_subset(G, N);
}

/// Subgroup generated by all conjugates of S.
inline std::vector<Element> normal_closure(const FiniteGroup& G, const std::vector<Element>& S) {
  std::vector<Element> conj;
  for (Element s : S)
    for (Element x = 0; x < G.order(); ++x) conj.push_back(G.conjugate(x, s));
  std::sort(conj.begin(), conj.end());
  conj.erase(std::unique(conj.begin(), conj.end()), conj.end());
  return generated_subgroup(G, conj).embedding;
}

inline std::vector<Element> derived_subgroup(const FiniteGroup& G) {
  std::vector<Element> comms;
  for (Element a = 0; a < G.order(); ++a)
    for (Element b = 0; b < G.order(); ++b)
      comms.push_back(G.mul(G.mul(G.inv(a), G.inv(b)), G.mul(a, b)));
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  return generated_subgroup(G, comms).embedding;
}

struct QuotientGroup {
  FiniteGroup group;
  std::vector<Element> representatives;  // least element of each coset
  std::vector<std::size_t> coset_of;     // element -> coset index
};

/// G/N on cosets gN, each represented by its least element index.
inline QuotientGroup quotient(const FiniteGroup& G, std::vector<Element> N) {
  std::sort(N.begin(), N.end());
  N.erase(std::unique(N.begin(), N.end()), N.end());
  std::vector<bool> in(G.order(), false);
  for (Element x : N) in[x] = true;
  if (N.empty() || !in[0]) throw NotNormal("subset does not contain the identity", {0, 0});
  for (Element a : N)
    for (Element b : N)
      if (!in[G.mul(a, b)]) throw NotNormal("subset is not closed under multiplication", {a, b});
  std::array<std::size_t, 2> w{};
  if (!is_normal_subset(G, N, &w))
    throw NotNormal("element " + std::to_string(w[0]) + " conjugates " + std::to_string(w[1]) +
                        " out of the subgroup",
                    w);

  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  QuotientGroup q;
  q.coset_of.assign(G.order(), kUnset);
  for (Element g = 0; g < G.order(); ++g) {
    if (q.coset_of[g] != kUnset) continue;
    const std::size_t c = q.representatives.size();
    q.representatives.push_back(g);
    for (Element x : N) q.coset_of[G.mul(g, x)] = c;
  }
  const std::size_t m = q.representatives.size();
  std::vector<std::vector<Element>> t(m, std::vector<Element>(m));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) {
    labels.push_back(G.label(q.representatives[i]) + "N");
    for (std::size_t j = 0; j < m; ++j)
      t[i][j] = static_cast<Element>(q.coset_of[G.mul(q.representatives[i], q.representatives[j])]);
  }
  q.group = build_group(t, G.name() + "/N" + std::to_string(N.size()), std::move(labels));
  return q;
}

/// G x H with (g, h) stored at index g*|H| + h.
inline FiniteGroup direct_product(const FiniteGroup& G, const FiniteGroup& H,
                                  const BuildOptions& opts = {}) {
  const std::size_t n = G.order(), m = H.order();
  std::vector<std::vector<Element>> t(n * m, std::vector<Element>(n * m));
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < m; ++b)
      for (Element c = 0; c < n; ++c)
        for (Element d = 0; d < m; ++d)
          t[a * m + b][c * m + d] = static_cast<Element>(G.mul(a, c) * m + H.mul(b, d));
  std::vector<std::string> labels;
  const bool named = !G.labels().empty() || !H.labels().empty();
  if (named)
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < m; ++b) labels.push_back("(" + G.label(a) + "," + H.label(b) + ")");
  return build_group(t, G.name() + " x " + H.name(), std::move(labels), opts);
}

/// Upper central series reaches G.
inline bool is_nilpotent(const FiniteGroup& G) {
  // Z_{i+1} = { g : [g, x] in Z_i for all x }
  std::vector<bool> in(G.order(), false);
  in[0] = true;
  std::size_t size = 1;
  while (true) {
    std::vector<bool> next(G.order(), false);
    std::size_t next_size = 0;
    for (Element g = 0; g < G.order(); ++g) {
      bool ok = true;
      for (Element x = 0; x < G.order() && ok; ++x)
        ok = in[G.mul(G.mul(G.inv(g), G.inv(x)), G.mul(g, x))];
      if (ok) {
        next[g] = true;
        ++next_size;
      }
    }
    if (next_size == G.order()) return true;
    if (next_size == size) return false;
    in = std::move(next);
    size = next_size;
  }
}

/// Every cyclic subgroup <g> is normal.
inline bool all_cyclic_subgroups_normal(const FiniteGroup& G) {
  for (Element g = 0; g < G.order(); ++g) {
    std::vector<bool> in(G.order(), false);
    for (std::uint32_t k = 0; k < G.elem_order(g); ++k) in[G.pow(g, k)] = true;
    for (Element x = 0; x < G.order(); ++x)
      if (!in[G.conjugate(x, g)]) return false;
  }
  return true;
}

/// Distinct prime divisors of n, ascending.
inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> ps;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

}  // namespace ccig
