#pragma once

// Exact arithmetic in Q(zeta_e).
//
// An element is stored as num[0..phi(e)) / den over the power basis
// 1, z, ..., z^(phi-1), where z = exp(2 pi i / e) and the vector is the
// remainder modulo the e-th cyclotomic polynomial. den > 0 and
// gcd(num..., den) = 1, so equal values have equal representations.

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ccig/error.hpp"
#include "ccig/polynomial.hpp"

namespace ccig {

/// Per-conductor reduction data: the reduced image of z^k for 0 <= k < e.
struct CycloField {
  unsigned conductor = 1;
  unsigned phi = 1;
  std::vector<long long> cyclotomic_poly;          // Phi_e, low degree first, monic
  std::vector<std::vector<long long>> zeta_power;  // [k][i]
};

namespace detail {

inline std::vector<long long> poly_divide_exact(std::vector<long long> a, const std::vector<long long>& b) {
  // b monic
  std::vector<long long> q(a.size() - b.size() + 1, 0);
  for (std::size_t s = q.size(); s-- > 0;) {
    const long long f = a[s + b.size() - 1];
    q[s] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[s + i] -= f * b[i];
  }
  return q;
}

inline std::vector<long long> cyclotomic_poly_uncached(unsigned e,
                                                      const std::vector<std::vector<long long>>& lower) {
  // x^e - 1 divided by Phi_d for every proper divisor d
  std::vector<long long> p(e + 1, 0);
  p[0] = -1;
  p[e] = 1;
  for (unsigned d = 1; d < e; ++d)
    if (e % d == 0) p = poly_divide_exact(std::move(p), lower[d]);
  return p;
}

}  // namespace detail

/// Cached field data; safe to call concurrently (fill happens under a lock
/// and entries are never replaced).
inline const CycloField& cyclo_field(unsigned e) {
  static std::mutex mu;
  static std::map<unsigned, std::unique_ptr<CycloField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(e); it != cache.end()) return *it->second;

  std::vector<std::vector<long long>> polys(e + 1);
  for (unsigned d = 1; d <= e; ++d) {
    if (e % d != 0) continue;
    if (auto it = cache.find(d); it != cache.end()) {
      polys[d] = it->second->cyclotomic_poly;
    } else {
      polys[d] = detail::cyclotomic_poly_uncached(d, polys);
    }
  }
  auto f = std::make_unique<CycloField>();
  f->conductor = e;
  f->cyclotomic_poly = polys[e];
  f->phi = static_cast<unsigned>(f->cyclotomic_poly.size() - 1);
  f->zeta_power.assign(e, std::vector<long long>(f->phi, 0));
  std::vector<long long> cur(f->phi, 0);
  cur[0] = 1;
  for (unsigned k = 0; k < e; ++k) {
    f->zeta_power[k] = cur;
    // multiply by z and reduce with z^phi = -sum Phi_i z^i
    const long long top = f->phi ? cur[f->phi - 1] : 0;
    for (unsigned i = f->phi; i-- > 1;) cur[i] = cur[i - 1];
    if (f->phi) cur[0] = 0;
    for (unsigned i = 0; i < f->phi; ++i) cur[i] -= top * f->cyclotomic_poly[i];
  }
  const CycloField& ref = *f;
  cache.emplace(e, std::move(f));
  return ref;
}

class Cyclotomic {
 public:
  Cyclotomic() : e_(1), num_{0}, den_(1) {}

  static Cyclotomic zero(unsigned e) { return Cyclotomic(e, std::vector<BigInt>(cyclo_field(e).phi, 0), 1); }
  static Cyclotomic from_rational(unsigned e, const Rational& q) {
    auto c = zero(e);
    c.num_[0] = boost::multiprecision::numerator(q);
    c.den_ = boost::multiprecision::denominator(q);
    return c;
  }
  static Cyclotomic from_int(unsigned e, const BigInt& v) { return from_rational(e, Rational(v)); }
  /// z_e^k
  static Cyclotomic zeta(unsigned e, long long k) {
    const auto& f = cyclo_field(e);
    const long long m = ((k % e) + e) % e;
    std::vector<BigInt> num(f.phi);
    for (unsigned i = 0; i < f.phi; ++i) num[i] = f.zeta_power[m][i];
    return Cyclotomic(e, std::move(num), 1);
  }
  /// sum_k coeffs[k] z_e^k for k in [0, e) (arbitrary exponent vector).
  static Cyclotomic from_exponents(unsigned e, const std::vector<BigInt>& coeffs, const BigInt& den = 1) {
    const auto& f = cyclo_field(e);
    std::vector<BigInt> num(f.phi, 0);
    for (unsigned k = 0; k < coeffs.size(); ++k) {
      if (coeffs[k] == 0) continue;
      for (unsigned i = 0; i < f.phi; ++i)
        if (f.zeta_power[k % e][i] != 0) num[i] += coeffs[k] * f.zeta_power[k % e][i];
    }
    return Cyclotomic(e, std::move(num), den);
  }

  unsigned conductor() const { return e_; }
  const std::vector<BigInt>& numerators() const { return num_; }
  const BigInt& denominator() const { return den_; }
  Rational coefficient(std::size_t i) const { return Rational(num_[i], den_); }

  bool is_zero() const {
    for (const auto& x : num_)
      if (x != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (std::size_t i = 1; i < num_.size(); ++i)
      if (num_[i] != 0) return false;
    return true;
  }
  std::optional<Rational> rational_value() const {
    if (!is_rational()) return std::nullopt;
    return Rational(num_[0], den_);
  }
  Rational to_rational() const {
    if (!is_rational()) throw NotRational(to_string());
    return Rational(num_[0], den_);
  }
  bool is_integer() const { return is_rational() && den_ == 1; }

  /// Same value viewed in Q(zeta_L); L must be a multiple of the conductor.
  Cyclotomic embed(unsigned L) const {
    if (L == e_) return *this;
    if (L % e_ != 0) throw Error("embed: conductor " + std::to_string(L) + " is not a multiple of " + std::to_string(e_));
    std::vector<BigInt> ex(L, 0);
    const unsigned step = L / e_;
    for (std::size_t i = 0; i < num_.size(); ++i) ex[i * step] = num_[i];
    return from_exponents(L, ex, den_);
  }

  /// Image under z -> z^h.
  Cyclotomic galois(long long h) const {
    const long long hm = ((h % e_) + e_) % e_;
    if (std::gcd(hm, static_cast<long long>(e_)) != 1)
      throw NotAUnit(std::to_string(h) + " is not a unit modulo " + std::to_string(e_));
    std::vector<BigInt> ex(e_, 0);
    for (std::size_t i = 0; i < num_.size(); ++i) ex[(i * hm) % e_] += num_[i];
    return from_exponents(e_, ex, den_);
  }
  Cyclotomic conj() const { return galois(static_cast<long long>(e_) - 1); }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.e_ != b.e_) {
      const unsigned L = std::lcm(a.e_, b.e_);
      return a.embed(L) + b.embed(L);
    }
    std::vector<BigInt> num(a.num_.size());
    if (a.den_ == b.den_) {
      for (std::size_t i = 0; i < num.size(); ++i) num[i] = a.num_[i] + b.num_[i];
      return Cyclotomic(a.e_, std::move(num), a.den_);
    }
    for (std::size_t i = 0; i < num.size(); ++i) num[i] = a.num_[i] * b.den_ + b.num_[i] * a.den_;
    return Cyclotomic(a.e_, std::move(num), a.den_ * b.den_);
  }
  Cyclotomic operator-() const {
    Cyclotomic r = *this;
    for (auto& x : r.num_) x = -x;
    return r;
  }
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.e_ != b.e_) {
      const unsigned L = std::lcm(a.e_, b.e_);
      return a.embed(L) * b.embed(L);
    }
    const unsigned e = a.e_;
    std::vector<BigInt> ex(e, 0);
    for (std::size_t i = 0; i < a.num_.size(); ++i) {
      if (a.num_[i] == 0) continue;
      for (std::size_t j = 0; j < b.num_.size(); ++j)
        if (b.num_[j] != 0) ex[(i + j) % e] += a.num_[i] * b.num_[j];
    }
    return from_exponents(e, ex, a.den_ * b.den_);
  }
  friend Cyclotomic operator*(const Cyclotomic& a, const Rational& q) {
    std::vector<BigInt> num(a.num_);
    for (auto& x : num) x *= boost::multiprecision::numerator(q);
    return Cyclotomic(a.e_, std::move(num), a.den_ * boost::multiprecision::denominator(q));
  }
  friend Cyclotomic operator*(const Rational& q, const Cyclotomic& a) { return a * q; }
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.e_ != b.e_) {
      const unsigned L = std::lcm(a.e_, b.e_);
      return a.embed(L) == b.embed(L);
    }
    return a.den_ == b.den_ && a.num_ == b.num_;
  }

  /// Lexicographic order on the rational coefficient vectors (same conductor).
  friend int compare(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.e_ != b.e_) throw Error("compare: conductor mismatch");
    for (std::size_t i = 0; i < a.num_.size(); ++i) {
      const BigInt l = a.num_[i] * b.den_, r = b.num_[i] * a.den_;
      if (l != r) return l < r ? -1 : 1;
    }
    return 0;
  }

  /// e.g. "-1 - z3", "1/2 + 3/2*z12^2"
  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    const std::string z = "z" + std::to_string(e_);
    for (std::size_t i = 0; i < num_.size(); ++i) {
      if (num_[i] == 0) continue;
      const Rational c(num_[i], den_);
      const Rational mag = abs(c);
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      if (i == 0) {
        os << mag;
      } else {
        if (mag != 1) os << mag << "*";
        os << z;
        if (i > 1) os << "^" << i;
      }
      first = false;
    }
    return first ? "0" : os.str();
  }

 private:
  Cyclotomic(unsigned e, std::vector<BigInt> num, BigInt den) : e_(e), num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }
  void normalize() {
    if (den_ < 0) {
      den_ = -den_;
      for (auto& x : num_) x = -x;
    }
    if (den_ == 1) return;
    BigInt g = den_;
    for (const auto& x : num_) {
      if (g == 1) break;
      if (x != 0) g = boost::multiprecision::gcd(g, x);
    }
    if (g != 1) {
      den_ /= g;
      for (auto& x : num_) x /= g;
    }
    if (is_zero()) den_ = 1;
  }

  unsigned e_;
  std::vector<BigInt> num_;
  BigInt den_;
};

}  // namespace ccig
