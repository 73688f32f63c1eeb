#pragma once

// Independent oracles for the test suites. Nothing here calls into the
// library's own algorithms for the quantity being checked.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ccig/ccig.hpp"

namespace oracle {

using ccig::BigInt;
using ccig::Element;
using ccig::Rational;

/// Faddeev-LeVerrier over Q: c_n = 1, c_{n-k} = -tr(M A_k) / k. Low degree first.
inline std::vector<BigInt> charpoly_faddeev(const std::vector<std::vector<long long>>& M) {
  const std::size_t n = M.size();
  using RM = std::vector<std::vector<Rational>>;
  RM A(n, std::vector<Rational>(n, 0)), MA(n, std::vector<Rational>(n, 0));
  std::vector<Rational> c(n + 1, 0);
  c[n] = 1;
  for (std::size_t i = 0; i < n; ++i) A[i][i] = 1;  // A_1 = I
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rational s = 0;
        for (std::size_t t = 0; t < n; ++t)
          if (M[i][t] != 0) s += Rational(M[i][t]) * A[t][j];
        MA[i][j] = s;
      }
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += MA[i][i];
    c[n - k] = -tr / Rational(static_cast<long long>(k));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) A[i][j] = MA[i][j] + (i == j ? c[n - k] : Rational(0));
  }
  std::vector<BigInt> out;
  for (const auto& r : c) out.push_back(boost::multiprecision::numerator(r));
  return out;
}

/// Fraction-free Bareiss determinant.
inline BigInt det_bareiss(std::vector<std::vector<BigInt>> A) {
  const std::size_t n = A.size();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (A[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && A[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(A[k], A[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) / prev;
    prev = A[k][k];
  }
  return sign * A[n - 1][n - 1];
}

/// Adjacency M[g][h] = f(g h^-1), built directly from the table.
inline std::vector<std::vector<long long>> adjacency(const ccig::FiniteGroup& G, const std::vector<long long>& f) {
  const std::size_t n = G.order();
  std::vector<std::vector<long long>> M(n, std::vector<long long>(n));
  for (Element g = 0; g < n; ++g)
    for (Element h = 0; h < n; ++h) {
      Element hinv = 0;
      while (G.mul(h, hinv) != 0) ++hinv;
      M[g][h] = f[G.mul(g, hinv)];
    }
  return M;
}

/// Conjugacy classes by brute force over all pairs, as sorted sets.
inline std::set<std::set<Element>> classes(const ccig::FiniteGroup& G) {
  const std::size_t n = G.order();
  std::set<std::set<Element>> out;
  for (Element x = 0; x < n; ++x) {
    std::set<Element> c;
    for (Element g = 0; g < n; ++g) {
      Element ginv = 0;
      while (G.mul(g, ginv) != 0) ++ginv;
      c.insert(G.mul(G.mul(g, x), ginv));
    }
    out.insert(c);
  }
  return out;
}

/// Order by repeated multiplication.
inline std::uint32_t order(const ccig::FiniteGroup& G, Element g) {
  std::uint32_t k = 1;
  for (Element x = g; x != 0; x = G.mul(x, g)) ++k;
  return k;
}

/// Integer roots by direct evaluation over [-bound, bound]; multiplicity by
/// repeated synthetic division.
inline std::vector<std::pair<long long, std::size_t>> integer_roots(std::vector<BigInt> p, long long bound) {
  std::vector<std::pair<long long, std::size_t>> out;
  for (long long r = bound; r >= -bound; --r) {
    std::size_t m = 0;
    for (;;) {
      BigInt acc = 0;
      for (std::size_t i = p.size(); i-- > 0;) acc = acc * r + p[i];
      if (acc != 0 || p.size() <= 1) break;
      std::vector<BigInt> q(p.size() - 1);
      BigInt carry = 0;
      for (std::size_t i = p.size(); i-- > 1;) {
        carry = p[i] + carry * r;
        q[i - 1] = carry;
      }
      p = std::move(q);
      ++m;
    }
    if (m) out.emplace_back(r, m);
  }
  return out;
}

/// Random class function in F: integer values in [lo, hi] constant on real classes, f(1) = 0.
inline std::vector<long long> random_f(const ccig::FiniteGroup& G, const ccig::ConjugacyPartition& P,
                                       std::mt19937_64& rng, long long lo, long long hi) {
  std::uniform_int_distribution<long long> d(lo, hi);
  std::vector<long long> per(P.real_classes.size());
  for (std::size_t r = 1; r < per.size(); ++r) per[r] = d(rng);
  std::vector<long long> f(G.order());
  for (Element g = 0; g < G.order(); ++g) f[g] = per[P.real_class_of[P.class_of[g]]];
  return f;
}

/// Random symmetric function (not necessarily a class function).
inline std::vector<long long> random_symmetric(const ccig::FiniteGroup& G, std::mt19937_64& rng, long long lo,
                                               long long hi) {
  std::uniform_int_distribution<long long> d(lo, hi);
  std::vector<long long> f(G.order(), 0);
  for (Element g = 1; g < G.order(); ++g) {
    const Element gi = G.inv(g);
    if (gi < g) continue;
    f[g] = f[gi] = d(rng);
  }
  return f;
}

inline std::vector<BigInt> big(const std::vector<long long>& v) { return {v.begin(), v.end()}; }

/// Catalog groups of order at most 24 used across suites.
inline std::vector<std::string> small_catalog() {
  return {"cyclic 2", "cyclic 3", "cyclic 4", "cyclic 5", "cyclic 6", "z2z4 2 0", "s3", "z2z4 1 1",
          "dihedral 4", "q8", "cyclic 12", "dicyclic12", "a4", "dihedral 6", "z2z4 0 2", "q8 x cyclic 2",
          "q8 x cyclic 3", "s4", "z2z3 1 1", "dihedral 5"};
}

}  // namespace oracle
