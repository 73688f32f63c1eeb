#pragma once

// Exact integer matrices and polynomials: characteristic polynomials,
// integer-root splitting, square-free structure.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ccig/error.hpp"
#include "ccig/modular.hpp"

namespace ccig {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct IntMatrix {
  std::size_t n = 0;
  std::vector<BigInt> entries;  // row-major

  IntMatrix() = default;
  explicit IntMatrix(std::size_t dim) : n(dim), entries(dim * dim) {}

  BigInt& operator()(std::size_t i, std::size_t j) { return entries[i * n + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return entries[i * n + j]; }

  BigInt trace() const {
    BigInt t = 0;
    for (std::size_t i = 0; i < n; ++i) t += (*this)(i, i);
    return t;
  }
  /// max_i sum_j |a_ij|; bounds every eigenvalue in absolute value.
  BigInt max_abs_row_sum() const {
    BigInt best = 0;
    for (std::size_t i = 0; i < n; ++i) {
      BigInt s = 0;
      for (std::size_t j = 0; j < n; ++j) s += abs((*this)(i, j));
      best = std::max(best, s);
    }
    return best;
  }
  bool is_symmetric() const {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }
};

/// Dense polynomial over Z, coefficients stored low degree first.
class IntPolynomial {
 public:
  IntPolynomial() : c_{0} {}
  explicit IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

  static IntPolynomial monomial(std::size_t deg) {
    std::vector<BigInt> c(deg + 1, 0);
    c[deg] = 1;
    return IntPolynomial(std::move(c));
  }
  /// x - r
  static IntPolynomial linear(const BigInt& r) { return IntPolynomial({-r, 1}); }

  std::size_t degree() const { return c_.size() - 1; }
  const BigInt& coeff(std::size_t i) const { return c_[i]; }
  const std::vector<BigInt>& coeffs() const { return c_; }
  const BigInt& leading() const { return c_.back(); }
  bool is_zero() const { return c_.size() == 1 && c_[0] == 0; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

  BigInt evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  /// Synthetic division by (x - r); returns the quotient, remainder in `rem`.
  IntPolynomial divide_linear(const BigInt& r, BigInt& rem) const {
    if (degree() == 0) {
      rem = c_[0];
      return IntPolynomial();
    }
    std::vector<BigInt> q(degree());
    BigInt carry = 0;
    for (std::size_t i = c_.size(); i-- > 1;) {
      carry = carry * r + c_[i];
      q[i - 1] = carry;
    }
    rem = carry * r + c_[0];
    return IntPolynomial(std::move(q));
  }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPolynomial(std::move(r));
  }
  IntPolynomial pow(std::size_t e) const {
    IntPolynomial r({1});
    for (std::size_t i = 0; i < e; ++i) r = r * *this;
    return r;
  }
  bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }

  std::string to_string(const std::string& var = "x") const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
      const BigInt& a = c_[i];
      if (a == 0 && !(i == 0 && first)) continue;
      const BigInt mag = abs(a);
      if (first) {
        if (a < 0) os << "-";
      } else {
        os << (a < 0 ? " - " : " + ");
      }
      if (i == 0 || mag != 1) os << mag;
      if (i >= 1) os << var;
      if (i >= 2) os << "^" << i;
      first = false;
    }
    return os.str();
  }

 private:
  void trim() {
    while (c_.size() > 1 && c_.back() == 0) c_.pop_back();
    if (c_.empty()) c_.push_back(0);
  }
  std::vector<BigInt> c_;
};

// ---------------------------------------------------------------------------
// Characteristic polynomial

/// Bareiss fraction-free determinant.
inline BigInt determinant(IntMatrix M) {
  const std::size_t n = M.n;
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && M(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(M(k, j), M(piv, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) M(i, j) = (M(i, j) * M(k, k) - M(i, k) * M(k, j)) / prev;
      M(i, k) = 0;
    }
    prev = M(k, k);
  }
  return sign * M(n - 1, n - 1);
}

/// Exact det(xI - M). Computed modulo enough 62-bit primes to exceed twice the
/// a-priori coefficient bound (rho + 1)^n, where rho is the largest absolute
/// row sum, then reconstructed by CRT in the symmetric residue range.
inline IntPolynomial charpoly(const IntMatrix& M) {
  const std::size_t n = M.n;
  if (n == 0) return IntPolynomial({1});
  BigInt bound = 1;
  const BigInt base = M.max_abs_row_sum() + 1;
  for (std::size_t i = 0; i < n; ++i) bound *= base;
  const BigInt needed = 2 * bound + 1;

  std::vector<BigInt> value(n + 1, 0);
  BigInt modulus = 1;
  for (std::size_t pi = 0; modulus < needed; ++pi) {
    const modp::u64 p = modp::large_prime(pi);
    modp::Matrix A(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        BigInt r = M(i, j) % p;
        if (r < 0) r += p;
        A(i, j) = static_cast<modp::u64>(r);
      }
    const auto cp = modp::charpoly(std::move(A), p);
    const BigInt minv = BigInt(modp::inv(static_cast<modp::u64>(modulus % p), p));
    for (std::size_t d = 0; d <= n; ++d) {
      // Garner step: value += modulus * ((cp - value) * modulus^-1 mod p)
      BigInt diff = (BigInt(cp[d]) - value[d]) % p;
      if (diff < 0) diff += p;
      value[d] += modulus * ((diff * minv) % p);
    }
    modulus *= p;
  }
  const BigInt half = modulus / 2;
  for (auto& v : value)
    if (v > half) v -= modulus;
  return IntPolynomial(std::move(value));
}

// ---------------------------------------------------------------------------
// Integer roots

struct SpectrumReport {
  IntPolynomial charpoly;
  std::vector<std::pair<BigInt, std::size_t>> integer_eigenvalues;  // descending value
  IntPolynomial residual;  // no integer roots; 1 when fully integral
  bool is_integral = false;

  std::size_t integer_count() const {
    std::size_t s = 0;
    for (const auto& [v, m] : integer_eigenvalues) s += m;
    return s;
  }
};

namespace detail {

inline BigInt ceil_root(const BigInt& a, std::size_t k) {
  if (a <= 1) return a;
  const double est = std::exp2((double(boost::multiprecision::msb(a)) + 1.0) / double(k));
  BigInt r = BigInt(static_cast<long long>(std::ceil(est)) + 1);
  while (r > 0 && boost::multiprecision::pow(BigInt(r - 1), static_cast<unsigned>(k)) >= a) --r;
  while (boost::multiprecision::pow(r, static_cast<unsigned>(k)) < a) ++r;
  return r;
}

/// Fujiwara bound on |root| for a monic polynomial.
inline BigInt root_bound(const IntPolynomial& p) {
  const std::size_t n = p.degree();
  BigInt best = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    BigInt a = abs(p.coeff(n - k));
    if (k == n) a = (a + 1) / 2;
    best = std::max(best, ceil_root(a, k));
  }
  return 2 * best;
}

}  // namespace detail

/// Upper limit on the candidate scan in integer_spectrum().
inline constexpr long long kRootScanLimit = 100000000;

/// Split off every integer root of a monic polynomial. Candidates are the
/// divisors of the trailing nonzero coefficient within `bound` (the Gershgorin
/// row-sum bound when the polynomial came from a matrix, Fujiwara otherwise).
inline SpectrumReport integer_spectrum(const IntPolynomial& p, std::optional<BigInt> bound = {}) {
  if (p.leading() != 1) throw Error("integer_spectrum expects a monic polynomial");
  SpectrumReport rep;
  rep.charpoly = p;
  IntPolynomial cur = p;
  std::size_t zero_mult = 0;
  while (cur.degree() > 0 && cur.coeff(0) == 0) {
    std::vector<BigInt> c(cur.coeffs().begin() + 1, cur.coeffs().end());
    cur = IntPolynomial(std::move(c));
    ++zero_mult;
  }
  std::vector<std::pair<BigInt, std::size_t>> roots;
  if (zero_mult) roots.emplace_back(0, zero_mult);

  if (cur.degree() > 0) {
    const BigInt B = bound ? *bound : detail::root_bound(cur);
    if (B > kRootScanLimit) throw CapExceeded("integer root scan bound too large: " + B.str());
    const long long lim = B.convert_to<long long>();
    for (long long r = 1; r <= lim && cur.degree() > 0; ++r) {
      for (long long s : {r, -r}) {
        std::size_t mult = 0;
        while (cur.degree() > 0 && cur.coeff(0) % s == 0) {
          BigInt rem;
          IntPolynomial q = cur.divide_linear(s, rem);
          if (rem != 0) break;
          cur = std::move(q);
          ++mult;
        }
        if (mult) roots.emplace_back(s, mult);
      }
    }
  }
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  rep.integer_eigenvalues = std::move(roots);
  rep.residual = cur;
  rep.is_integral = cur.degree() == 0;
  return rep;
}

/// Product of (x - lambda)^mult over the integer eigenvalues, times the residual.
inline IntPolynomial reconstruct(const SpectrumReport& rep) {
  IntPolynomial acc = rep.residual;
  for (const auto& [v, m] : rep.integer_eigenvalues) acc = acc * IntPolynomial::linear(v).pow(m);
  return acc;
}

// ---------------------------------------------------------------------------
// Square-free decomposition (Yun), for reporting residual structure.

namespace detail {

using RatPoly = std::vector<Rational>;  // low degree first, trimmed

inline void trim(RatPoly& a) {
  while (a.size() > 1 && a.back() == 0) a.pop_back();
  if (a.empty()) a.push_back(0);
}
inline bool is_zero(const RatPoly& a) { return a.size() == 1 && a[0] == 0; }

inline RatPoly derivative(const RatPoly& a) {
  if (a.size() <= 1) return {0};
  RatPoly d(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = a[i] * Rational(static_cast<long long>(i));
  trim(d);
  return d;
}

inline RatPoly sub(RatPoly a, const RatPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

inline void divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r) {
  r = a;
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 1, 0);
  while (!is_zero(r) && r.size() >= b.size()) {
    const std::size_t shift = r.size() - b.size();
    const Rational f = r.back() / b.back();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] -= f * b[i];
    r.pop_back();
    trim(r);
  }
  trim(q);
}

inline RatPoly monic(RatPoly a) {
  const Rational l = a.back();
  for (auto& x : a) x /= l;
  return a;
}

using ZPoly = std::vector<BigInt>;  // low degree first, trimmed

inline void trim(ZPoly& a) {
  while (a.size() > 1 && a.back() == 0) a.pop_back();
  if (a.empty()) a.push_back(0);
}

inline ZPoly primitive_part(ZPoly a) {
  BigInt g = 0;
  for (const auto& x : a) g = boost::multiprecision::gcd(g, x);
  if (g > 1)
    for (auto& x : a) x /= g;
  return a;
}

inline ZPoly to_primitive_int(const RatPoly& a) {
  BigInt l = 1;
  for (const auto& x : a) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(x));
  ZPoly c;
  for (const auto& x : a) c.push_back(boost::multiprecision::numerator(x) * (l / boost::multiprecision::denominator(x)));
  trim(c);
  return primitive_part(std::move(c));
}

/// Pseudo-remainder of a by b over Z.
inline ZPoly prem(ZPoly a, const ZPoly& b) {
  const BigInt& lb = b.back();
  while (a.size() >= b.size() && !(a.size() == 1 && a[0] == 0)) {
    const std::size_t shift = a.size() - b.size();
    const BigInt la = a.back();
    for (auto& x : a) x *= lb;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= la * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

/// Monic gcd over Q, computed by the primitive remainder sequence over Z.
inline RatPoly gcd(const RatPoly& x, const RatPoly& y) {
  ZPoly a = to_primitive_int(x), b = to_primitive_int(y);
  if (a.size() < b.size()) std::swap(a, b);
  while (!(b.size() == 1 && b[0] == 0)) {
    ZPoly r = primitive_part(prem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  RatPoly g;
  for (const auto& c : a) g.emplace_back(c);
  return monic(g);
}

inline RatPoly div_exact(const RatPoly& a, const RatPoly& b) {
  RatPoly q, r;
  divmod(a, b, q, r);
  return q;
}

inline IntPolynomial primitive(const RatPoly& a) {
  BigInt l = 1;
  for (const auto& x : a) l = boost::multiprecision::lcm(l, denominator(x));
  std::vector<BigInt> c;
  BigInt g = 0;
  for (const auto& x : a) {
    c.push_back(numerator(x) * (l / denominator(x)));
    g = boost::multiprecision::gcd(g, c.back());
  }
  if (g != 0)
    for (auto& x : c) x /= g;
  if (c.back() < 0)
    for (auto& x : c) x = -x;
  return IntPolynomial(std::move(c));
}

}  // namespace detail

/// Square-free factors f_i with p = lead * prod f_i^i, each primitive with
/// positive leading coefficient. Constant input gives an empty list.
inline std::vector<std::pair<IntPolynomial, std::size_t>> squarefree_decomposition(const IntPolynomial& p) {
  using namespace detail;
  std::vector<std::pair<IntPolynomial, std::size_t>> out;
  if (p.degree() == 0) return out;
  RatPoly a;
  for (const auto& c : p.coeffs()) a.emplace_back(c);
  RatPoly b = derivative(a);
  RatPoly c = gcd(a, b);
  RatPoly w = div_exact(a, c);
  RatPoly y = div_exact(b, c);
  RatPoly z = sub(y, derivative(w));
  std::size_t i = 1;
  while (w.size() > 1) {
    RatPoly g = gcd(w, z);
    if (g.size() > 1) out.emplace_back(primitive(g), i);
    w = div_exact(w, g);
    y = div_exact(z, g);
    z = sub(y, derivative(w));
    ++i;
  }
  return out;
}

/// "(x^2 + 2x - 12)^2" style rendering of a polynomial's square-free structure.
inline std::string factored_string(const IntPolynomial& p) {
  if (p.degree() == 0) return p.to_string();
  std::string s;
  for (const auto& [f, m] : squarefree_decomposition(p)) {
    if (!s.empty()) s += " ";
    s += "(" + f.to_string() + ")";
    if (m > 1) s += "^" + std::to_string(m);
  }
  return s;
}

}  // namespace ccig
