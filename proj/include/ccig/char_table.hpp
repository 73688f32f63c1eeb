#pragma once

// Irreducible character tables by the Dixon-Burnside method.
//
// The class sums K_1..K_k span the centre of the group algebra, with
//   K_i K_j = sum_t c_ijt K_t,   c_ijt = #{(x, y) in C_i x C_j : x y = g_t}.
// For each irreducible chi the vector w_t = |C_t| chi(g_t) / chi(1) satisfies
// M_i w = w_i w with (M_i)[j][t] = c_ijt, so the common eigenvectors of the
// class matrices are the central characters. We find them over F_p with
// p = 1 (mod exponent) and p > 2 sqrt|G|, recover chi(1) from the first
// orthogonality relation, and lift each value to Q(zeta_e) by discrete Fourier
// inversion on <g>: the eigenvalue multiplicities of chi restricted to <g> are
// small nonnegative integers, hence exactly recoverable mod p.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "ccig/cyclotomic.hpp"
#include "ccig/error.hpp"
#include "ccig/group.hpp"
#include "ccig/modular.hpp"

namespace ccig {

struct CharTableOptions {
  std::size_t order_cap = 2000;
  std::uint64_t prime_search_limit = std::uint64_t{1} << 40;
};

struct CharacterTable {
  std::string group_name;
  std::size_t group_order = 0;
  unsigned conductor = 1;        // group exponent
  std::uint64_t prime = 0;       // modulus used for the splitting
  std::vector<std::size_t> class_sizes;
  std::vector<Element> representatives;
  std::vector<std::size_t> inverse_class;
  std::vector<std::uint32_t> class_element_orders;
  /// power_classes[j][h] = class of rep_j^h for 0 <= h < conductor.
  std::vector<std::vector<std::size_t>> power_classes;
  std::vector<std::size_t> degrees;
  std::vector<std::vector<Cyclotomic>> values;  // [character][class]

  std::size_t class_count() const { return class_sizes.size(); }
  const Cyclotomic& operator()(std::size_t chi, std::size_t cls) const { return values[chi][cls]; }
};

/// One class matrix, (M_i)[j][t] = #{(x, y) in C_i x C_j : x y = rep(C_t)}.
inline std::vector<std::vector<long long>> class_matrix(const FiniteGroup& G, const ConjugacyPartition& P,
                                                        std::size_t i) {
  const std::size_t k = P.count();
  std::vector<std::vector<long long>> M(k, std::vector<long long>(k, 0));
  for (std::size_t t = 0; t < k; ++t) {
    const Element g = P.representative(t);
    for (Element x : P.classes[i]) ++M[P.class_of[G.mul(G.inv(x), g)]][t];
  }
  return M;
}

inline std::vector<std::vector<std::vector<long long>>> class_matrices(const FiniteGroup& G,
                                                                      const ConjugacyPartition& P) {
  std::vector<std::vector<std::vector<long long>>> out;
  for (std::size_t i = 0; i < P.count(); ++i) out.push_back(class_matrix(G, P, i));
  return out;
}

/// Smallest prime p = 1 (mod e) with p > 2 sqrt(n).
inline std::uint64_t dixon_prime(std::uint64_t n, std::uint64_t e, std::uint64_t limit) {
  const double lower = 2.0 * std::sqrt(static_cast<double>(n));
  for (std::uint64_t p = e + 1; p <= limit; p += e) {
    if (static_cast<double>(p) > lower && (p * p > 4 * n) && modp::is_prime(p)) return p;
  }
  throw PrimeSearchFailed("no prime = 1 mod " + std::to_string(e) + " below " + std::to_string(limit));
}

namespace detail {

struct Eigenspace {
  modp::Matrix basis;               // k x d, identity on pivot rows
  std::vector<std::size_t> pivots;  // size d
  std::size_t dim() const { return pivots.size(); }
};

/// Column space of B (k x d) rewritten so that B restricted to its pivot rows
/// is the identity.
inline Eigenspace make_eigenspace(const modp::Matrix& B, modp::u64 p) {
  modp::Matrix T(B.cols, B.rows);
  for (std::size_t i = 0; i < B.rows; ++i)
    for (std::size_t j = 0; j < B.cols; ++j) T(j, i) = B(i, j);
  const auto piv = modp::rref(T, p);
  Eigenspace s;
  s.basis = modp::Matrix(B.rows, piv.size());
  for (std::size_t r = 0; r < piv.size(); ++r)
    for (std::size_t i = 0; i < B.rows; ++i) s.basis(i, r) = T(r, i);
  s.pivots = piv;
  return s;
}

inline std::vector<modp::u64> roots_mod_p(const std::vector<modp::u64>& poly, modp::u64 p) {
  std::vector<modp::u64> roots;
  for (modp::u64 x = 0; x < p; ++x) {
    modp::u64 acc = 0;
    for (std::size_t i = poly.size(); i-- > 0;) acc = modp::add(modp::mul(acc, x, p), poly[i], p);
    if (acc == 0) roots.push_back(x);
  }
  return roots;
}

/// Split `s` into simultaneous eigenspaces of M (k x k, already mod p).
inline std::vector<Eigenspace> split(const Eigenspace& s, const modp::Matrix& M, modp::u64 p) {
  const std::size_t k = M.rows, d = s.dim();
  modp::Matrix A(d, d);
  for (std::size_t r = 0; r < d; ++r) {
    const std::size_t row = s.pivots[r];
    for (std::size_t c = 0; c < d; ++c) {
      modp::u64 acc = 0;
      for (std::size_t t = 0; t < k; ++t)
        if (M(row, t) && s.basis(t, c)) acc = modp::add(acc, modp::mul(M(row, t), s.basis(t, c), p), p);
      A(r, c) = acc;
    }
  }
  const auto roots = roots_mod_p(modp::charpoly(A, p), p);
  if (roots.empty()) throw VerificationFailed("class matrix has no eigenvalue in F_p");
  if (roots.size() == 1) return {s};
  std::vector<Eigenspace> out;
  std::size_t total = 0;
  for (modp::u64 lam : roots) {
    modp::Matrix shifted = A;
    for (std::size_t i = 0; i < d; ++i) shifted(i, i) = modp::sub(shifted(i, i), lam, p);
    const modp::Matrix N = modp::nullspace(shifted, p);
    modp::Matrix B(k, N.cols);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < N.cols; ++j) {
        modp::u64 acc = 0;
        for (std::size_t t = 0; t < d; ++t)
          if (s.basis(i, t) && N(t, j)) acc = modp::add(acc, modp::mul(s.basis(i, t), N(t, j), p), p);
        B(i, j) = acc;
      }
    total += N.cols;
    out.push_back(make_eigenspace(B, p));
  }
  if (total != d) throw VerificationFailed("class matrix restriction is not diagonalizable mod p");
  return out;
}

/// Sparse exponent form of an algebraic integer in Z[zeta_e]: (exponent, coeff).
using SparseCyclo = std::vector<std::pair<unsigned, long long>>;

inline SparseCyclo to_sparse(const Cyclotomic& c) {
  if (c.denominator() != 1) throw VerificationFailed("character value is not an algebraic integer: " + c.to_string());
  SparseCyclo s;
  for (std::size_t i = 0; i < c.numerators().size(); ++i) {
    const BigInt& v = c.numerators()[i];
    if (v != 0) s.emplace_back(static_cast<unsigned>(i), v.convert_to<long long>());
  }
  return s;
}

inline SparseCyclo conj_sparse(const SparseCyclo& s, unsigned e) {
  SparseCyclo r;
  for (const auto& [x, c] : s) r.emplace_back((e - x) % e, c);
  return r;
}

}  // namespace detail

/// Exact orthogonality, degree-equation and inverse-conjugation checks.
/// Throws VerificationFailed with the first violated relation.
inline void verify_character_table(const CharacterTable& T) {
  const std::size_t k = T.class_count();
  const unsigned e = T.conductor;
  if (T.values.size() != k || T.degrees.size() != k) throw VerificationFailed("table is not square");
  std::size_t sum_sq = 0;
  for (std::size_t r = 0; r < k; ++r) {
    sum_sq += T.degrees[r] * T.degrees[r];
    if (T.group_order % T.degrees[r] != 0)
      throw VerificationFailed("degree " + std::to_string(T.degrees[r]) + " does not divide |G|");
    if (!(T.values[r][0] == Cyclotomic::from_int(e, T.degrees[r])))
      throw VerificationFailed("identity column differs from degrees");
  }
  if (sum_sq != T.group_order) throw VerificationFailed("sum of squared degrees != |G|");

  std::vector<std::vector<detail::SparseCyclo>> v(k), vc(k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t j = 0; j < k; ++j) {
      v[r].push_back(detail::to_sparse(T.values[r][j]));
      vc[r].push_back(detail::conj_sparse(v[r].back(), e));
    }
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t j = 0; j < k; ++j)
      if (!(T.values[r][T.inverse_class[j]] == T.values[r][j].conj()))
        throw VerificationFailed("chi(g^-1) != conj(chi(g)) at (" + std::to_string(r) + "," + std::to_string(j) + ")");

  std::vector<BigInt> acc(e);
  auto reduce_equals = [&](const BigInt& expect) {
    const Cyclotomic s = Cyclotomic::from_exponents(e, acc);
    return s == Cyclotomic::from_int(e, expect);
  };
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t s = r; s < k; ++s) {
      std::vector<long long> a(e, 0);
      for (std::size_t j = 0; j < k; ++j) {
        const long long w = static_cast<long long>(T.class_sizes[j]);
        for (const auto& [x, c] : v[r][j])
          for (const auto& [y, d] : vc[s][j]) a[(x + y) % e] += w * c * d;
      }
      for (unsigned i = 0; i < e; ++i) acc[i] = a[i];
      if (!reduce_equals(r == s ? BigInt(T.group_order) : BigInt(0)))
        throw VerificationFailed("row orthogonality fails for (" + std::to_string(r) + "," + std::to_string(s) + ")");
    }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      std::vector<long long> a(e, 0);
      for (std::size_t r = 0; r < k; ++r)
        for (const auto& [x, c] : v[r][i])
          for (const auto& [y, d] : vc[r][j]) a[(x + y) % e] += c * d;
      for (unsigned t = 0; t < e; ++t) acc[t] = a[t];
      if (!reduce_equals(i == j ? BigInt(T.group_order / T.class_sizes[i]) : BigInt(0)))
        throw VerificationFailed("column orthogonality fails for (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
}

inline CharacterTable character_table(const FiniteGroup& G, const ConjugacyPartition& P,
                                      const CharTableOptions& opts = {}) {
  const std::size_t n = G.order();
  if (n > opts.order_cap)
    throw CapExceeded("character table: |G| = " + std::to_string(n) + " exceeds cap " + std::to_string(opts.order_cap));
  const std::size_t k = P.count();
  const unsigned e = static_cast<unsigned>(G.exponent());
  const modp::u64 p = dixon_prime(n, e, opts.prime_search_limit);

  CharacterTable T;
  T.group_name = G.name();
  T.group_order = n;
  T.conductor = e;
  T.prime = p;
  T.inverse_class = P.inverse_class;
  for (std::size_t j = 0; j < k; ++j) {
    T.class_sizes.push_back(P.size(j));
    T.representatives.push_back(P.representative(j));
    T.class_element_orders.push_back(G.elem_order(P.representative(j)));
    std::vector<std::size_t> pc(e);
    for (unsigned h = 0; h < e; ++h) pc[h] = P.class_of[G.pow(P.representative(j), h)];
    T.power_classes.push_back(std::move(pc));
  }

  // simultaneous eigenspaces, splitting by class matrices in ascending order
  std::vector<detail::Eigenspace> spaces;
  {
    modp::Matrix I(k, k);
    for (std::size_t i = 0; i < k; ++i) I(i, i) = 1;
    spaces.push_back(detail::make_eigenspace(I, p));
  }
  for (std::size_t i = 1; i < k; ++i) {
    if (std::all_of(spaces.begin(), spaces.end(), [](const auto& s) { return s.dim() == 1; })) break;
    const auto Mi = class_matrix(G, P, i);
    modp::Matrix M(k, k);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) M(a, b) = modp::reduce(Mi[a][b], p);
    std::vector<detail::Eigenspace> next;
    for (const auto& s : spaces) {
      if (s.dim() == 1) {
        next.push_back(s);
        continue;
      }
      for (auto& piece : detail::split(s, M, p)) next.push_back(std::move(piece));
    }
    spaces = std::move(next);
  }
  if (spaces.size() != k) throw VerificationFailed("eigenspace splitting did not produce k characters");

  const modp::u64 z = modp::pow(modp::primitive_root(p), (p - 1) / e, p);
  std::vector<modp::u64> zpow(e);
  for (unsigned i = 0; i < e; ++i) zpow[i] = modp::pow(z, i, p);

  struct Row {
    std::size_t degree;
    std::vector<Cyclotomic> values;
  };
  std::vector<Row> rows;
  for (const auto& s : spaces) {
    std::vector<modp::u64> w(k);
    const modp::u64 scale = modp::inv(s.basis(0, 0), p);
    if (s.basis(0, 0) == 0) throw VerificationFailed("central character vanishes on the identity class");
    for (std::size_t t = 0; t < k; ++t) w[t] = modp::mul(s.basis(t, 0), scale, p);

    modp::u64 ssum = 0;
    for (std::size_t t = 0; t < k; ++t)
      ssum = modp::add(ssum, modp::mul(modp::mul(w[t], w[P.inverse_class[t]], p), modp::inv(P.size(t) % p, p), p), p);
    const modp::u64 d2 = modp::mul(n % p, modp::inv(ssum, p), p);
    std::size_t degree = 0;
    for (std::size_t d = 1; d * d <= n; ++d)
      if ((d * d) % p == d2) {
        degree = d;
        break;
      }
    if (degree == 0) throw VerificationFailed("no admissible character degree");

    std::vector<modp::u64> chi(k);
    for (std::size_t t = 0; t < k; ++t)
      chi[t] = modp::mul(modp::mul(w[t], degree % p, p), modp::inv(P.size(t) % p, p), p);

    Row row{degree, {}};
    for (std::size_t t = 0; t < k; ++t) {
      const unsigned o = T.class_element_orders[t];
      const unsigned step = e / o;
      const modp::u64 oinv = modp::inv(o % p, p);
      std::vector<BigInt> ex(e, 0);
      for (unsigned l = 0; l < o; ++l) {
        modp::u64 acc = 0;
        for (unsigned j = 0; j < o; ++j) {
          const unsigned idx = (e - (step * l * j) % e) % e;
          acc = modp::add(acc, modp::mul(chi[T.power_classes[t][j]], zpow[idx], p), p);
        }
        const modp::u64 m = modp::mul(acc, oinv, p);
        if (m > degree) throw VerificationFailed("eigenvalue multiplicity out of range; prime too small?");
        ex[step * l] = m;
      }
      row.values.push_back(Cyclotomic::from_exponents(e, ex));
    }
    rows.push_back(std::move(row));
  }

  auto is_trivial = [](const Row& r) {
    return r.degree == 1 && std::all_of(r.values.begin(), r.values.end(),
                                        [](const Cyclotomic& c) { return c.is_integer() && c.numerators()[0] == 1; });
  };
  std::sort(rows.begin(), rows.end(), [&](const Row& a, const Row& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    const bool ta = is_trivial(a), tb = is_trivial(b);
    if (ta != tb) return ta;
    for (std::size_t j = 0; j < a.values.size(); ++j) {
      const int c = compare(a.values[j], b.values[j]);
      if (c != 0) return c > 0;
    }
    return false;
  });
  for (auto& r : rows) {
    T.degrees.push_back(r.degree);
    T.values.push_back(std::move(r.values));
  }
  verify_character_table(T);
  return T;
}

inline CharacterTable character_table(const FiniteGroup& G, const CharTableOptions& opts = {}) {
  return character_table(G, conjugacy_classes(G), opts);
}

// ---------------------------------------------------------------------------
// Galois action and rationality

struct GaloisAction {
  long long unit = 1;
  std::vector<std::size_t> class_permutation;      // j -> class of rep_j^h
  std::vector<std::size_t> character_permutation;  // r -> row equal to sigma_h(chi_r)
};

/// Checks sigma_h(chi(g)) = chi(g^h) entrywise and reports the induced
/// permutations of classes and of characters.
inline GaloisAction galois_on_characters(const CharacterTable& T, long long h) {
  const long long e = T.conductor;
  const long long hm = ((h % e) + e) % e;
  if (std::gcd(hm, e) != 1) throw NotAUnit(std::to_string(h) + " is not a unit modulo " + std::to_string(e));
  const std::size_t k = T.class_count();
  GaloisAction act;
  act.unit = h;
  for (std::size_t j = 0; j < k; ++j) act.class_permutation.push_back(T.power_classes[j][static_cast<std::size_t>(hm)]);
  std::vector<std::vector<Cyclotomic>> image(k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t j = 0; j < k; ++j) {
      image[r].push_back(T.values[r][j].galois(hm));
      if (!(image[r][j] == T.values[r][act.class_permutation[j]]))
        throw Mismatch("galois action disagrees with power map at character " + std::to_string(r) + ", class " +
                       std::to_string(j));
    }
  for (std::size_t r = 0; r < k; ++r) {
    std::size_t found = k;
    for (std::size_t s = 0; s < k && found == k; ++s)
      if (image[r] == T.values[s]) found = s;
    if (found == k) throw Mismatch("galois image of character " + std::to_string(r) + " is not a row");
    act.character_permutation.push_back(found);
  }
  return act;
}

inline bool is_rational_element(const CharacterTable& T, std::size_t cls) {
  for (std::size_t r = 0; r < T.class_count(); ++r)
    if (!T.values[r][cls].is_rational()) return false;
  return true;
}

/// [character][class]: chi(g) + conj(chi(g)) is a rational integer.
inline std::vector<std::vector<bool>> chi_plus_conj_integral(const CharacterTable& T) {
  const std::size_t k = T.class_count();
  std::vector<std::vector<bool>> out(k, std::vector<bool>(k));
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t j = 0; j < k; ++j) {
      const Cyclotomic s = T.values[r][j] + T.values[r][j].conj();
      out[r][j] = s.is_integer();
    }
  return out;
}

// ---------------------------------------------------------------------------
// Text dump / load

inline void save_character_table(const CharacterTable& T, std::ostream& os) {
  const std::size_t k = T.class_count();
  std::string name = T.group_name.empty() ? "G" : T.group_name;
  for (auto& c : name)
    if (c == ' ') c = '_';
  os << "chartable " << name << " " << T.group_order << " " << k << " " << T.conductor << " " << T.prime << "\n";
  auto line = [&os](const char* tag, const auto& xs) {
    os << tag;
    for (const auto& x : xs) os << " " << x;
    os << "\n";
  };
  line("sizes", T.class_sizes);
  line("reps", T.representatives);
  line("inverse", T.inverse_class);
  line("orders", T.class_element_orders);
  line("degrees", T.degrees);
  for (std::size_t j = 0; j < k; ++j) {
    os << "powermap " << j;
    for (auto c : T.power_classes[j]) os << " " << c;
    os << "\n";
  }
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t j = 0; j < k; ++j) {
      const auto& v = T.values[r][j];
      os << "value " << r << " " << j << " " << v.denominator();
      for (const auto& c : v.numerators()) os << " " << c;
      os << "\n";
    }
}

/// Parses the dump format and re-verifies orthogonality before returning.
inline CharacterTable load_character_table(std::istream& is) {
  CharacterTable T;
  std::string line;
  std::size_t line_no = 0, k = 0;
  bool header = false;
  auto fail = [&line_no](const std::string& msg) { throw ParseError(msg, line_no); };
  auto read_list = [&](std::istringstream& ls, auto& out, std::size_t count) {
    using V = typename std::decay_t<decltype(out)>::value_type;
    out.clear();
    for (std::size_t i = 0; i < count; ++i) {
      long long x;
      if (!(ls >> x) || x < 0) fail("expected " + std::to_string(count) + " nonnegative integers");
      out.push_back(static_cast<V>(x));
    }
  };
  std::vector<std::vector<bool>> seen;
  while (std::getline(is, line)) {
    ++line_no;
    if (const auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "chartable") {
      if (!(ls >> T.group_name >> T.group_order >> k >> T.conductor >> T.prime)) fail("bad chartable header");
      if (k == 0 || T.conductor == 0) fail("bad chartable header");
      T.values.assign(k, std::vector<Cyclotomic>(k, Cyclotomic::zero(T.conductor)));
      T.power_classes.assign(k, {});
      seen.assign(k, std::vector<bool>(k, false));
      header = true;
      continue;
    }
    if (!header) fail("missing chartable header");
    if (tag == "sizes") read_list(ls, T.class_sizes, k);
    else if (tag == "reps") read_list(ls, T.representatives, k);
    else if (tag == "inverse") read_list(ls, T.inverse_class, k);
    else if (tag == "orders") read_list(ls, T.class_element_orders, k);
    else if (tag == "degrees") read_list(ls, T.degrees, k);
    else if (tag == "powermap") {
      std::size_t j;
      if (!(ls >> j) || j >= k) fail("bad powermap class");
      read_list(ls, T.power_classes[j], T.conductor);
    } else if (tag == "value") {
      std::size_t r, j;
      std::string den_s;
      if (!(ls >> r >> j >> den_s) || r >= k || j >= k) fail("bad value indices");
      const unsigned phi = cyclo_field(T.conductor).phi;
      std::vector<BigInt> ex(T.conductor, 0);
      for (unsigned i = 0; i < phi; ++i) {
        std::string c;
        if (!(ls >> c)) fail("value needs " + std::to_string(phi) + " coefficients");
        try {
          ex[i] = BigInt(c);
        } catch (const std::exception&) {
          fail("bad coefficient '" + c + "'");
        }
      }
      BigInt den;
      try {
        den = BigInt(den_s);
      } catch (const std::exception&) {
        fail("bad denominator");
      }
      if (den <= 0) fail("denominator must be positive");
      T.values[r][j] = Cyclotomic::from_exponents(T.conductor, ex, den);
      seen[r][j] = true;
    } else {
      fail("unexpected '" + tag + "'");
    }
  }
  if (!header) fail("missing chartable header");
  for (const auto& row : seen)
    for (bool b : row)
      if (!b) fail("table is missing values");
  if (T.class_sizes.size() != k || T.representatives.size() != k || T.inverse_class.size() != k ||
      T.class_element_orders.size() != k || T.degrees.size() != k)
    fail("table is missing class data");
  for (const auto& pc : T.power_classes)
    if (pc.size() != T.conductor) fail("table is missing power maps");
  verify_character_table(T);
  return T;
}

}  // namespace ccig
