#pragma once

// Word-size prime-field arithmetic shared by the multimodular charpoly and
// the Dixon character-table builder.

#include <cstddef>
#include <cstdint>
#include <mutex>
#include <utility>
#include <vector>

#include "ccig/error.hpp"

namespace ccig::modp {

using u64 = std::uint64_t;

inline u64 mul(u64 a, u64 b, u64 p) { return static_cast<u64>((unsigned __int128)a * b % p); }
inline u64 add(u64 a, u64 b, u64 p) {
  const u64 s = a + b;
  return (s >= p || s < a) ? s - p : s;
}
inline u64 sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + (p - b); }

inline u64 pow(u64 b, u64 e, u64 p) {
  u64 r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = mul(r, b, p);
    b = mul(b, b, p);
    e >>= 1;
  }
  return r;
}

/// Inverse modulo a prime.
inline u64 inv(u64 a, u64 p) { return pow(a, p - 2, p); }

/// Reduce a signed value into [0, p).
inline u64 reduce(long long v, u64 p) {
  const long long m = static_cast<long long>(v % static_cast<long long>(p));
  return static_cast<u64>(m < 0 ? m + static_cast<long long>(p) : m);
}

/// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s && composite; ++r) {
      x = mul(x, x, n);
      composite = x != n - 1;
    }
    if (composite) return false;
  }
  return true;
}

inline std::vector<u64> factor_distinct(u64 n) {
  std::vector<u64> fs;
  for (u64 q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      fs.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

/// Smallest generator of the multiplicative group of F_p.
inline u64 primitive_root(u64 p) {
  if (p == 2) return 1;
  const auto fs = factor_distinct(p - 1);
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (u64 q : fs) ok = ok && pow(g, (p - 1) / q, p) != 1;
    if (ok) return g;
  }
  throw VerificationFailed("no primitive root found");
}

/// The i-th largest prime below 2^62 (cached, thread-safe).
inline u64 large_prime(std::size_t i) {
  static std::mutex mu;
  static std::vector<u64> primes;
  std::lock_guard<std::mutex> lock(mu);
  u64 cand = primes.empty() ? (u64{1} << 62) - 1 : primes.back() - 2;
  while (primes.size() <= i) {
    while (!is_prime(cand)) cand -= 2;
    primes.push_back(cand);
    cand -= 2;
  }
  return primes[i];
}

/// Dense row-major matrix over F_p.
struct Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<u64> a;
  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
  u64& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  u64 operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

/// Characteristic polynomial det(xI - H) over F_p, low-to-high coefficients.
/// Reduces to upper Hessenberg form by similarity, then runs the standard
/// three-term recurrence. O(n^3).
inline std::vector<u64> charpoly(Matrix H, u64 p) {
  const std::size_t n = H.rows;
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t piv = m;
    while (piv < n && H(piv, m - 1) == 0) ++piv;
    if (piv == n) continue;
    if (piv != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(H(piv, j), H(m, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(H(i, piv), H(i, m));
    }
    const u64 pinv = inv(H(m, m - 1), p);
    for (std::size_t j = m + 1; j < n; ++j) {
      const u64 u = mul(H(j, m - 1), pinv, p);
      if (u == 0) continue;
      for (std::size_t c = 0; c < n; ++c) H(j, c) = sub(H(j, c), mul(u, H(m, c), p), p);
      for (std::size_t r = 0; r < n; ++r) H(r, m) = add(H(r, m), mul(u, H(r, j), p), p);
    }
  }
  // P_k has degree k; P_k = (x - h_kk) P_{k-1} - sum_i h_{i,k} (prod_{j=i+1}^{k} h_{j,j-1}) P_{i-1}
  std::vector<std::vector<u64>> P(n + 1);
  P[0] = {1 % p};
  auto h = [&H](std::size_t i, std::size_t j) { return H(i - 1, j - 1); };
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<u64> cur(k + 1, 0);
    for (std::size_t d = 0; d < k; ++d) {
      cur[d + 1] = add(cur[d + 1], P[k - 1][d], p);
      cur[d] = sub(cur[d], mul(h(k, k), P[k - 1][d], p), p);
    }
    u64 t = 1;
    for (std::size_t i = k - 1; i >= 1; --i) {
      t = mul(t, h(i + 1, i), p);
      if (t == 0) break;
      const u64 coef = mul(h(i, k), t, p);
      if (coef != 0)
        for (std::size_t d = 0; d < P[i - 1].size(); ++d)
          cur[d] = sub(cur[d], mul(coef, P[i - 1][d], p), p);
    }
    P[k] = std::move(cur);
  }
  return P[n];
}

/// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(Matrix& A, u64 p) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < A.cols && r < A.rows; ++c) {
    std::size_t piv = r;
    while (piv < A.rows && A(piv, c) == 0) ++piv;
    if (piv == A.rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < A.cols; ++j) std::swap(A(piv, j), A(r, j));
    const u64 s = inv(A(r, c), p);
    for (std::size_t j = 0; j < A.cols; ++j) A(r, j) = mul(A(r, j), s, p);
    for (std::size_t i = 0; i < A.rows; ++i) {
      if (i == r || A(i, c) == 0) continue;
      const u64 f = A(i, c);
      for (std::size_t j = 0; j < A.cols; ++j) A(i, j) = sub(A(i, j), mul(f, A(r, j), p), p);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Basis of the right nullspace of A, one vector per column of the result.
inline Matrix nullspace(Matrix A, u64 p) {
  const auto pivots = rref(A, p);
  std::vector<bool> is_pivot(A.cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < A.cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix N(A.cols, free_cols.size());
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    N(free_cols[f], f) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      N(pivots[r], f) = sub(0, A(r, free_cols[f]), p);
  }
  return N;
}

}  // namespace ccig::modp
