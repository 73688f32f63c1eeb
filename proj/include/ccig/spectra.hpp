#pragma once

// Cayley colour graphs Cay(G, f) with adjacency [f(g h^-1)] and their spectra.
//
// Two routes: the integer characteristic polynomial of the adjacency matrix,
// and, for class functions, one eigenvalue per irreducible character
//   lambda_chi = (1/chi(1)) sum_t |C_t| f(g_t) chi(g_t),  multiplicity chi(1)^2.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ccig/char_table.hpp"
#include "ccig/cyclotomic.hpp"
#include "ccig/error.hpp"
#include "ccig/group.hpp"
#include "ccig/polynomial.hpp"

namespace ccig {

/// f : G -> Z indexed by element. Flags are always derived from `values`.
class ConnectionFunction {
 public:
  ConnectionFunction() = default;
  ConnectionFunction(const FiniteGroup& G, const ConjugacyPartition& P, std::vector<long long> values)
      : values_(std::move(values)) {
    if (values_.size() != G.order())
      throw Error("connection function has " + std::to_string(values_.size()) + " values for a group of order " +
                  std::to_string(G.order()));
    symmetric_ = true;
    class_function_ = true;
    for (Element g = 0; g < G.order(); ++g) {
      if (values_[g] != values_[G.inv(g)]) symmetric_ = false;
      if (values_[g] != values_[P.representative(P.class_of[g])]) class_function_ = false;
    }
    zero_at_identity_ = values_[0] == 0;
  }
  ConnectionFunction(const FiniteGroup& G, std::vector<long long> values)
      : ConnectionFunction(G, conjugacy_classes(G), std::move(values)) {}

  const std::vector<long long>& values() const { return values_; }
  long long operator()(Element g) const { return values_[g]; }
  std::size_t size() const { return values_.size(); }
  bool symmetric() const { return symmetric_; }
  bool class_function() const { return class_function_; }
  bool zero_at_identity() const { return zero_at_identity_; }
  /// Symmetric integer-valued class function.
  bool in_F() const { return symmetric_ && class_function_; }

 private:
  std::vector<long long> values_;
  bool symmetric_ = true;
  bool class_function_ = true;
  bool zero_at_identity_ = true;
};

struct ConnectionSet {
  std::vector<Element> elements;  // sorted
  bool normal = false;
  bool eulerian = false;
};

inline std::vector<Atom> atom_decomposition(const FiniteGroup& G, const std::vector<Element>& S,
                                            std::optional<Atom>* offending = nullptr);

/// Validates S = S^-1 and 1 notin S; throws InvalidConnectionSet otherwise.
inline ConnectionSet connection_set(const FiniteGroup& G, const ConjugacyPartition& P, std::vector<Element> S) {
  std::sort(S.begin(), S.end());
  S.erase(std::unique(S.begin(), S.end()), S.end());
  std::vector<bool> in(G.order(), false);
  for (Element s : S) {
    if (s >= G.order()) throw InvalidConnectionSet("element " + std::to_string(s) + " out of range");
    in[s] = true;
  }
  if (!S.empty() && S.front() == 0) throw InvalidConnectionSet("connection set contains the identity");
  for (Element s : S)
    if (!in[G.inv(s)])
      throw InvalidConnectionSet("connection set is not inverse-closed: " + std::to_string(s) + " present, inverse " +
                                 std::to_string(G.inv(s)) + " missing");
  ConnectionSet cs;
  cs.elements = S;
  cs.normal = true;
  for (Element s : S)
    for (Element x : P.classes[P.class_of[s]])
      if (!in[x]) cs.normal = false;
  std::optional<Atom> bad;
  atom_decomposition(G, S, &bad);
  cs.eulerian = !bad.has_value();
  return cs;
}

inline ConnectionSet connection_set(const FiniteGroup& G, std::vector<Element> S) {
  return connection_set(G, conjugacy_classes(G), std::move(S));
}

inline ConnectionFunction indicator(const FiniteGroup& G, const ConjugacyPartition& P, const std::vector<Element>& S) {
  std::vector<long long> v(G.order(), 0);
  for (Element s : S) v.at(s) = 1;
  return ConnectionFunction(G, P, std::move(v));
}

/// Class function from one value per conjugacy class.
inline ConnectionFunction class_function(const FiniteGroup& G, const ConjugacyPartition& P,
                                         const std::vector<long long>& per_class) {
  if (per_class.size() != P.count()) throw Error("class_function: expected one value per class");
  std::vector<long long> v(G.order());
  for (Element g = 0; g < G.order(); ++g) v[g] = per_class[P.class_of[g]];
  return ConnectionFunction(G, P, std::move(v));
}

// ---------------------------------------------------------------------------
// Matrix route

inline IntMatrix adjacency(const FiniteGroup& G, const ConnectionFunction& f) {
  const std::size_t n = G.order();
  IntMatrix A(n);
  for (Element g = 0; g < n; ++g)
    for (Element h = 0; h < n; ++h) A(g, h) = f(G.mul(g, G.inv(h)));
  return A;
}

inline SpectrumReport spectrum_matrix(const FiniteGroup& G, const ConnectionFunction& f) {
  if (!f.symmetric()) throw NotSymmetricFunction("f(g) != f(g^-1) for some g; adjacency is not symmetric");
  const IntMatrix A = adjacency(G, f);
  return integer_spectrum(charpoly(A), A.max_abs_row_sum());
}

// ---------------------------------------------------------------------------
// Character route

struct CharacterEigenvalue {
  std::size_t character = 0;
  Cyclotomic value;
  std::size_t multiplicity = 0;
};

inline std::vector<CharacterEigenvalue> spectrum_characters(const FiniteGroup& G, const ConjugacyPartition& P,
                                                            const ConnectionFunction& f, const CharacterTable& T) {
  if (!f.class_function()) throw NotAClassFunction("f is not constant on conjugacy classes");
  if (T.group_order != G.order() || T.class_count() != P.count())
    throw Error("character table does not belong to this group");
  std::vector<CharacterEigenvalue> out;
  for (std::size_t r = 0; r < T.class_count(); ++r) {
    Cyclotomic acc = Cyclotomic::zero(T.conductor);
    for (std::size_t t = 0; t < P.count(); ++t) {
      const long long w = static_cast<long long>(P.size(t)) * f(P.representative(t));
      if (w != 0) acc += T.values[r][t] * Rational(w);
    }
    const std::size_t d = T.degrees[r];
    out.push_back({r, acc * Rational(1, static_cast<long long>(d)), d * d});
  }
  return out;
}

/// prod (x - lambda)^mult in Q(zeta_e)[x], low degree first.
inline std::vector<Cyclotomic> expand_eigenvalues(const std::vector<CharacterEigenvalue>& eig, unsigned e) {
  std::vector<Cyclotomic> poly{Cyclotomic::from_int(e, 1)};
  for (const auto& ev : eig)
    for (std::size_t m = 0; m < ev.multiplicity; ++m) {
      std::vector<Cyclotomic> next(poly.size() + 1, Cyclotomic::zero(e));
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i + 1] += poly[i];
        next[i] -= poly[i] * ev.value;
      }
      poly = std::move(next);
    }
  return poly;
}

struct DualRouteCheck {
  bool agree = false;
  std::optional<std::size_t> first_mismatch;  // coefficient index
};

inline DualRouteCheck compare_routes(const IntPolynomial& charpoly, const std::vector<CharacterEigenvalue>& eig,
                                     unsigned e) {
  const auto expanded = expand_eigenvalues(eig, e);
  DualRouteCheck r;
  if (expanded.size() != charpoly.degree() + 1) {
    r.first_mismatch = std::min(expanded.size(), charpoly.degree() + 1);
    return r;
  }
  for (std::size_t i = 0; i < expanded.size(); ++i)
    if (!(expanded[i] == Cyclotomic::from_int(e, charpoly.coeff(i)))) {
      r.first_mismatch = i;
      return r;
    }
  r.agree = true;
  return r;
}

// ---------------------------------------------------------------------------
// Integrality criteria

struct CriterionResult {
  bool integral = true;
  std::optional<std::pair<Element, long long>> witness;  // f(g^h) != f(g)
};

/// f in F gives an integral graph iff f(g^h) = f(g) for every unit h.
/// Units modulo the exponent suffice: Z_n^* maps onto Z_e^*.
inline CriterionResult integrality_by_criterion(const FiniteGroup& G, const ConnectionFunction& f) {
  if (!f.class_function()) throw NotAClassFunction("criterion requires a class function");
  if (!f.symmetric()) throw NotSymmetricFunction("criterion requires f(g) = f(g^-1)");
  const auto units = units_mod(static_cast<long long>(G.exponent()));
  CriterionResult r;
  for (Element g = 0; g < G.order(); ++g)
    for (long long h : units)
      if (f(G.pow(g, h)) != f(g)) {
        r.integral = false;
        r.witness = std::make_pair(g, h);
        return r;
      }
  return r;
}

/// Distinct atoms covering S; if some atom escapes S it is stored in *offending
/// and the returned decomposition is partial.
inline std::vector<Atom> atom_decomposition(const FiniteGroup& G, const std::vector<Element>& S,
                                            std::optional<Atom>* offending) {
  std::vector<bool> in(G.order(), false), covered(G.order(), false);
  for (Element s : S) in[s] = true;
  std::vector<Atom> atoms;
  if (offending) offending->reset();
  for (Element s : S) {
    if (covered[s]) continue;
    Atom a = atom(G, s);
    for (Element m : a.members)
      if (!in[m]) {
        if (offending) *offending = a;
        return atoms;
      }
    for (Element m : a.members) covered[m] = true;
    atoms.push_back(std::move(a));
  }
  return atoms;
}

struct EulerianResult {
  bool eulerian = false;
  std::vector<Atom> decomposition;
  std::optional<Atom> offending;
};

inline EulerianResult eulerian_check(const FiniteGroup& G, const ConnectionSet& S) {
  EulerianResult r;
  r.decomposition = atom_decomposition(G, S.elements, &r.offending);
  r.eulerian = !r.offending.has_value();
  if (!r.eulerian) r.decomposition.clear();
  return r;
}

/// Normal inverse-closed identity-free sets, as unions of nonidentity real
/// classes, in binary-counter order over the real classes.
inline std::vector<std::vector<Element>> normal_connection_sets(const ConjugacyPartition& P,
                                                               std::size_t max_real_classes = 20) {
  const std::size_t r = P.real_classes.size() - 1;  // real class 0 holds the identity
  if (r > max_real_classes)
    throw CapExceeded("normal set enumeration: " + std::to_string(r) + " nonidentity real classes exceeds cap " +
                      std::to_string(max_real_classes));
  std::vector<std::vector<Element>> members(r);
  for (std::size_t i = 0; i < r; ++i) members[i] = P.real_class_elements(i + 1);
  std::vector<std::vector<Element>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask) {
    std::vector<Element> S;
    for (std::size_t i = 0; i < r; ++i)
      if (mask >> i & 1) S.insert(S.end(), members[i].begin(), members[i].end());
    std::sort(S.begin(), S.end());
    out.push_back(std::move(S));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Combined analysis

struct SpectrumAnalysis {
  SpectrumReport matrix;
  std::optional<std::vector<CharacterEigenvalue>> characters;
  std::optional<DualRouteCheck> routes;
  std::optional<CriterionResult> criterion;
  std::vector<std::string> routes_run;
};

/// Matrix route always; character route and criterion when f is a class
/// function and a table is supplied.
inline SpectrumAnalysis analyze_spectrum(const FiniteGroup& G, const ConjugacyPartition& P,
                                         const ConnectionFunction& f, const CharacterTable* T = nullptr) {
  SpectrumAnalysis a;
  a.matrix = spectrum_matrix(G, f);
  a.routes_run.push_back("matrix");
  if (f.class_function()) {
    a.criterion = integrality_by_criterion(G, f);
    a.routes_run.push_back("criterion");
    if (T) {
      a.characters = spectrum_characters(G, P, f, *T);
      a.routes = compare_routes(a.matrix.charpoly, *a.characters, T->conductor);
      a.routes_run.push_back("characters");
    }
  }
  return a;
}

// ---------------------------------------------------------------------------
// Text formats: "f <n>" + n integers; "set <k>" + k indices

inline ConnectionFunction load_function(const FiniteGroup& G, std::istream& is) {
  std::vector<long long> vals;
  std::string tok, line;
  std::size_t n = 0, line_no = 0;
  bool header = false;
  while (std::getline(is, line)) {
    ++line_no;
    if (const auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    while (ls >> tok) {
      if (!header) {
        if (tok != "f") throw ParseError("function file must start with 'f <n>'", line_no);
        if (!(ls >> n)) throw ParseError("function file must start with 'f <n>'", line_no);
        header = true;
        continue;
      }
      try {
        std::size_t used = 0;
        vals.push_back(std::stoll(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ParseError("expected an integer, got '" + tok + "'", line_no);
      }
    }
  }
  if (!header) throw ParseError("missing 'f <n>' header", line_no);
  if (vals.size() != n) throw ParseError("expected " + std::to_string(n) + " values, found " + std::to_string(vals.size()), line_no);
  if (n != G.order())
    throw ParseError("function has " + std::to_string(n) + " values but the group has order " + std::to_string(G.order()), 1);
  return ConnectionFunction(G, std::move(vals));
}

inline ConnectionFunction load_function_file(const FiniteGroup& G, const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open '" + path + "'", 0);
  return load_function(G, f);
}

inline void save_function(const ConnectionFunction& f, std::ostream& os) {
  os << "f " << f.size() << "\n";
  for (std::size_t i = 0; i < f.size(); ++i) os << (i ? " " : "") << f.values()[i];
  os << "\n";
}

inline std::vector<Element> load_set(std::istream& is) {
  std::vector<Element> S;
  std::string line, tok;
  std::size_t k = 0, line_no = 0;
  bool header = false;
  while (std::getline(is, line)) {
    ++line_no;
    if (const auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    while (ls >> tok) {
      if (!header) {
        if (tok != "set" || !(ls >> k)) throw ParseError("set file must start with 'set <k>'", line_no);
        header = true;
        continue;
      }
      try {
        std::size_t used = 0;
        const long long v = std::stoll(tok, &used);
        if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
        S.push_back(static_cast<Element>(v));
      } catch (const std::exception&) {
        throw ParseError("expected an element index, got '" + tok + "'", line_no);
      }
    }
  }
  if (!header) throw ParseError("missing 'set <k>' header", line_no);
  if (S.size() != k) throw ParseError("expected " + std::to_string(k) + " indices, found " + std::to_string(S.size()), line_no);
  std::sort(S.begin(), S.end());
  return S;
}

inline void save_set(const std::vector<Element>& S, std::ostream& os) {
  std::vector<Element> sorted = S;
  std::sort(sorted.begin(), sorted.end());
  os << "set " << sorted.size() << "\n";
  for (std::size_t i = 0; i < sorted.size(); ++i) os << (i ? " " : "") << sorted[i];
  os << "\n";
}

}  // namespace ccig
