#pragma once

// Group-level predicates for the integrality hierarchy
//   CCI => CI => F-CCI => NCI => semi-rational,
// each decided by several independent routes whose disagreements are
// reported rather than resolved.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ccig/char_table.hpp"
#include "ccig/error.hpp"
#include "ccig/fixtures.hpp"
#include "ccig/group.hpp"
#include "ccig/spectra.hpp"

namespace ccig {

struct ClassifyOptions {
  CharTableOptions chartable;
  std::size_t nci_spectral_cap = 24;        // |G| for exhaustive normal-set spectra
  std::size_t fcci_spectral_cap = 120;      // |G| for spectral F-CCI sampling
  std::size_t fcci_exhaustive_real_classes = 12;
  std::size_t fcci_random_functions = 200;
  std::size_t ci_exhaustive_cap = 12;
  std::size_t ci_sampled_cap = 24;
  std::size_t ci_samples = 1000;
  std::size_t cci_witness_budget = 500;
  std::size_t cci_witness_cap = 128;        // |G| for the colour-function witness search
  std::uint64_t seed = 0;
};

struct Route {
  std::string name;
  std::optional<bool> verdict;  // empty when the route did not run
  std::string detail;
  std::vector<std::pair<std::string, std::string>> evidence;
};

struct Verdict {
  std::string property;
  bool value = false;
  std::vector<Route> routes;

  const Route* route(const std::string& name) const {
    for (const auto& r : routes)
      if (r.name == name) return &r;
    return nullptr;
  }
  /// Every route that ran reached the same verdict.
  bool routes_agree() const {
    std::optional<bool> seen;
    for (const auto& r : routes) {
      if (!r.verdict) continue;
      if (seen && *seen != *r.verdict) return false;
      seen = r.verdict;
    }
    return true;
  }
};

struct Discrepancy {
  std::string group;
  std::string property;
  std::string detail;
};

struct GammaCheck {
  std::size_t character = 0;
  bool integral = false;
  std::string colour;  // per-class values of chi + conj(chi), or the rejected value
  std::string note;
};

struct ClassificationReport {
  std::string group;
  std::size_t order = 0;
  std::uint64_t exponent = 1;
  std::vector<std::uint32_t> element_orders;  // distinct, ascending
  std::size_t class_count = 0;
  std::size_t real_class_count = 0;
  bool abelian = false;
  bool nilpotent = false;
  std::uint64_t seed = 0;

  Verdict rational, semi_rational, inverse_semi_rational, nci, fcci, cci, ci;
  std::vector<long long> semi_rational_exponents;  // r_g per class; 0 where none exists
  std::vector<GammaCheck> gamma;
  std::vector<std::string> caps_hit;
  std::vector<Discrepancy> discrepancies;
};

inline std::string describe(const FiniteGroup& G, Element g) {
  const std::string l = G.label(g);
  return l == std::to_string(g) ? l : std::to_string(g) + " (" + l + ")";
}

inline std::string describe_set(const FiniteGroup& G, const std::vector<Element>& S) {
  std::string s = "{";
  for (std::size_t i = 0; i < S.size(); ++i) s += (i ? ", " : "") + describe(G, S[i]);
  return s + "}";
}

// ---------------------------------------------------------------------------
// Element-level rationality

struct ElementScan {
  bool holds = true;
  std::optional<Element> failing;  // g whose atom escapes the allowed classes
  std::optional<Atom> failing_atom;
  std::vector<long long> r_by_class;  // semi-rational exponents, 0 where none
};

namespace detail {

template <class Allowed>
ElementScan atom_scan(const FiniteGroup& G, const ConjugacyPartition& P, Allowed allowed) {
  ElementScan s;
  for (Element g = 0; g < G.order(); ++g) {
    const Atom a = atom(G, g);
    for (Element m : a.members)
      if (!allowed(g, P.class_of[m])) {
        s.holds = false;
        s.failing = g;
        s.failing_atom = a;
        return s;
      }
  }
  return s;
}

}  // namespace detail

/// Atom(g) subset of C_g for every g.
inline ElementScan is_rational(const FiniteGroup& G, const ConjugacyPartition& P) {
  return detail::atom_scan(G, P, [&](Element g, std::size_t c) { return c == P.class_of[g]; });
}

/// Atom(g) subset of C_g u C_{g^-1} for every g.
inline ElementScan is_inverse_semi_rational(const FiniteGroup& G, const ConjugacyPartition& P) {
  return detail::atom_scan(G, P, [&](Element g, std::size_t c) {
    return c == P.class_of[g] || c == P.inverse_class[P.class_of[g]];
  });
}

/// Atom(g) subset of C_g u C_{g^r} for some r; r is searched over the units
/// modulo o(g) in ascending order, r = 1 meaning Atom(g) subset of C_g.
inline ElementScan is_semi_rational(const FiniteGroup& G, const ConjugacyPartition& P) {
  ElementScan s;
  s.r_by_class.assign(P.count(), 0);
  for (Element g = 0; g < G.order(); ++g) {
    const Atom a = atom(G, g);
    const std::size_t cg = P.class_of[g];
    std::optional<long long> found;
    for (long long k : units_mod(G.elem_order(g))) {
      const std::size_t ck = P.class_of[G.pow(g, k)];
      const bool ok = std::all_of(a.members.begin(), a.members.end(), [&](Element m) {
        return P.class_of[m] == cg || P.class_of[m] == ck;
      });
      if (ok) {
        found = k;
        break;
      }
    }
    if (!found) {
      s.holds = false;
      s.failing = g;
      s.failing_atom = a;
      s.r_by_class.clear();
      return s;
    }
    if (s.r_by_class[cg] == 0) s.r_by_class[cg] = *found;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Shared helpers

struct Classifier {
  const FiniteGroup& G;
  const ConjugacyPartition& P;
  const CharacterTable* T;  // null when beyond the table cap
  const ClassifyOptions& opts;
};

/// {g, g^-1} orbits of the nonidentity elements, ordered by least member.
inline std::vector<std::vector<Element>> inverse_pairs(const FiniteGroup& G) {
  std::vector<std::vector<Element>> pairs;
  for (Element g = 1; g < G.order(); ++g) {
    const Element gi = G.inv(g);
    if (g < gi) pairs.push_back({g, gi});
    else if (g == gi) pairs.push_back({g});
  }
  return pairs;
}

inline bool is_power_of(std::uint64_t n, std::uint64_t p) {
  while (n > 1 && n % p == 0) n /= p;
  return n == 1;
}

inline bool every_class_within_inverse_pair(const FiniteGroup& G, const ConjugacyPartition& P) {
  for (const auto& c : P.classes) {
    const Element g = c.front();
    for (Element x : c)
      if (x != g && x != G.inv(g)) return false;
  }
  return true;
}

inline std::string residual_text(const SpectrumReport& r) { return factored_string(r.residual); }

inline std::string values_text(const std::vector<long long>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

inline std::string indices_text(const std::vector<Element>& v) {
  return values_text(std::vector<long long>(v.begin(), v.end()));
}

// ---------------------------------------------------------------------------
// Rationality verdicts

inline Verdict rational_verdict(const Classifier& c) {
  Verdict v{"rational", false, {}};
  const auto scan = is_rational(c.G, c.P);
  Route atoms{"atoms", scan.holds, scan.holds ? "every atom lies in its conjugacy class" : "", {}};
  if (!scan.holds) {
    atoms.detail = "atom of " + describe(c.G, *scan.failing) + " meets another class";
    atoms.evidence.emplace_back("element", std::to_string(*scan.failing));
    atoms.evidence.emplace_back("atom", describe_set(c.G, scan.failing_atom->members));
  }
  v.routes.push_back(std::move(atoms));
  Route table{"character_table", std::nullopt, "", {}};
  if (c.T) {
    table.verdict = true;
    for (std::size_t j = 0; j < c.T->class_count() && *table.verdict; ++j)
      if (!is_rational_element(*c.T, j)) {
        table.verdict = false;
        table.detail = "irrational entry in the column of class " + std::to_string(j);
        table.evidence.emplace_back("class", std::to_string(j));
      }
    if (*table.verdict) table.detail = "every table entry is rational";
  } else {
    table.detail = "skipped: character table beyond cap";
  }
  v.routes.push_back(std::move(table));
  v.value = scan.holds;
  return v;
}

inline Verdict semi_rational_verdict(const Classifier& c, std::vector<long long>& r_by_class) {
  Verdict v{"semi_rational", false, {}};
  const auto scan = is_semi_rational(c.G, c.P);
  Route atoms{"atoms", scan.holds, "", {}};
  if (scan.holds) {
    atoms.detail = "every atom lies in C_g u C_{g^r}";
    atoms.evidence.emplace_back("r_by_class", values_text(scan.r_by_class));
  } else {
    atoms.detail = "atom of " + describe(c.G, *scan.failing) + " meets three or more classes";
    atoms.evidence.emplace_back("element", std::to_string(*scan.failing));
    atoms.evidence.emplace_back("atom", describe_set(c.G, scan.failing_atom->members));
  }
  r_by_class = scan.r_by_class;
  v.routes.push_back(std::move(atoms));
  v.value = scan.holds;
  return v;
}

inline Route inverse_semi_rational_route(const Classifier& c) {
  const auto scan = is_inverse_semi_rational(c.G, c.P);
  Route r{"inverse_semi_rational", scan.holds, "", {}};
  if (scan.holds) {
    r.detail = "every atom lies in C_g u C_{g^-1}";
  } else {
    r.detail = "atom of " + describe(c.G, *scan.failing) + " leaves C_g u C_{g^-1}";
    r.evidence.emplace_back("element", std::to_string(*scan.failing));
    r.evidence.emplace_back("atom", describe_set(c.G, scan.failing_atom->members));
  }
  return r;
}

inline Verdict inverse_semi_rational_verdict(const Classifier& c) {
  Verdict v{"inverse_semi_rational", false, {}};
  v.routes.push_back(inverse_semi_rational_route(c));
  v.routes.back().name = "atoms";
  v.value = *v.routes.back().verdict;
  return v;
}

// ---------------------------------------------------------------------------
// NCI

/// chi + conj(chi) as an integer colour function. Rational values are scaled
/// by the least common denominator; an irrational value is rejected with
/// NonIntegralColourFunction.
inline ConnectionFunction chi_plus_conj_colour(const FiniteGroup& G, const ConjugacyPartition& P,
                                               const CharacterTable& T, std::size_t r) {
  std::vector<Rational> vals;
  BigInt lcm = 1;
  for (std::size_t t = 0; t < T.class_count(); ++t) {
    const Cyclotomic s = T.values[r][t] + T.values[r][t].conj();
    if (!s.is_rational())
      throw NonIntegralColourFunction("chi_" + std::to_string(r) + " + conj at class " + std::to_string(t) + " is " +
                                      s.to_string());
    vals.push_back(s.to_rational());
    lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(vals.back()));
  }
  std::vector<long long> per_class;
  for (const auto& q : vals) per_class.push_back(Rational(q * lcm).convert_to<long long>());
  return class_function(G, P, per_class);
}

inline std::vector<GammaCheck> gamma_chi_plus_conj_check(const Classifier& c, std::vector<Discrepancy>* disc = nullptr) {
  std::vector<GammaCheck> out;
  if (!c.T) return out;
  for (std::size_t r = 0; r < c.T->class_count(); ++r) {
    GammaCheck g;
    g.character = r;
    try {
      const ConnectionFunction f = chi_plus_conj_colour(c.G, c.P, *c.T, r);
      std::vector<long long> per_class;
      for (std::size_t t = 0; t < c.P.count(); ++t) per_class.push_back(f(c.P.representative(t)));
      g.colour = values_text(per_class);
      const auto crit = integrality_by_criterion(c.G, f);
      g.integral = crit.integral;
      g.note = "criterion";
      if (!crit.integral)
        g.note += "; moved by h = " + std::to_string(crit.witness->second) + " at " + describe(c.G, crit.witness->first);
      if (c.G.order() <= c.opts.nci_spectral_cap) {
        const bool spectral = spectrum_matrix(c.G, f).is_integral;
        g.note += "; matrix route agrees";
        if (spectral != crit.integral) {
          g.note = "criterion and matrix route disagree";
          if (disc)
            disc->push_back({c.G.name(), "gamma_chi_plus_conj",
                             "character " + std::to_string(r) + ": criterion " + (crit.integral ? "true" : "false") +
                                 ", matrix " + (spectral ? "true" : "false")});
        }
      }
    } catch (const NonIntegralColourFunction& e) {
      g.integral = false;
      g.colour = e.what();
      g.note = "rejected: irrational colour value";
    }
    out.push_back(std::move(g));
  }
  return out;
}

inline Verdict nci_verdict(const Classifier& c, std::vector<std::string>& caps) {
  Verdict v{"nci", false, {}};
  v.routes.push_back(inverse_semi_rational_route(c));

  Route table{"chi_plus_conj_integral", std::nullopt, "", {}};
  if (c.T) {
    const auto m = chi_plus_conj_integral(*c.T);
    table.verdict = true;
    for (std::size_t r = 0; r < m.size() && *table.verdict; ++r)
      for (std::size_t j = 0; j < m[r].size(); ++j)
        if (!m[r][j]) {
          table.verdict = false;
          const Cyclotomic s = c.T->values[r][j] + c.T->values[r][j].conj();
          table.detail = "chi_" + std::to_string(r) + "(g) + chi_" + std::to_string(r) + "(g^-1) = " + s.to_string() +
                         " at class " + std::to_string(j);
          table.evidence.emplace_back("character", std::to_string(r));
          table.evidence.emplace_back("class", std::to_string(j));
          break;
        }
    if (*table.verdict) table.detail = "chi(g) + chi(g^-1) is an integer for every character and class";
  } else {
    table.detail = "skipped: character table beyond cap";
  }
  v.routes.push_back(std::move(table));

  Route spectra{"normal_set_spectra", std::nullopt, "", {}};
  if (c.G.order() <= c.opts.nci_spectral_cap) {
    const auto sets = normal_connection_sets(c.P);
    spectra.verdict = true;
    for (const auto& S : sets) {
      const auto rep = spectrum_matrix(c.G, indicator(c.G, c.P, S));
      if (!rep.is_integral) {
        spectra.verdict = false;
        spectra.detail = "Cay(G, S) is not integral";
        spectra.evidence.emplace_back("set", describe_set(c.G, S));
        spectra.evidence.emplace_back("elements", indices_text(S));
        spectra.evidence.emplace_back("residual", residual_text(rep));
        break;
      }
    }
    if (*spectra.verdict) spectra.detail = "all " + std::to_string(sets.size()) + " normal Cayley graphs are integral";
  } else {
    spectra.detail = "skipped: |G| exceeds cap " + std::to_string(c.opts.nci_spectral_cap);
    caps.push_back("nci.normal_set_spectra");
  }
  v.routes.push_back(std::move(spectra));
  v.value = *v.routes.front().verdict;
  return v;
}

// ---------------------------------------------------------------------------
// F-CCI

inline Route fcci_order_profile(const Classifier& c) {
  Route r{"order_profile", true, "every element order lies in {1,2,3,4,6}", {}};
  for (Element g = 0; g < c.G.order(); ++g) {
    const auto o = c.G.elem_order(g);
    if (o != 1 && o != 2 && o != 3 && o != 4 && o != 6) {
      r.verdict = false;
      r.detail = "element " + describe(c.G, g) + " has order " + std::to_string(o);
      r.evidence.emplace_back("element", std::to_string(g));
      r.evidence.emplace_back("order", std::to_string(o));
      break;
    }
  }
  return r;
}

/// g^h in C_g u C_{g^-1} for every g and unit h modulo the exponent; this is
/// f^h = f for every symmetric integer class function f.
inline Route fcci_criterion(const Classifier& c, std::optional<std::pair<Element, long long>>* witness = nullptr) {
  Route r{"criterion", true, "g^h lies in C_g u C_{g^-1} for all g and units h", {}};
  const auto units = units_mod(static_cast<long long>(c.G.exponent()));
  for (Element g = 0; g < c.G.order(); ++g) {
    const std::size_t rc = c.P.real_class_of[c.P.class_of[g]];
    for (long long h : units)
      if (c.P.real_class_of[c.P.class_of[c.G.pow(g, h)]] != rc) {
        r.verdict = false;
        r.detail = describe(c.G, g) + "^" + std::to_string(h) + " leaves C_g u C_{g^-1}";
        r.evidence.emplace_back("element", std::to_string(g));
        r.evidence.emplace_back("unit", std::to_string(h));
        if (witness) *witness = std::make_pair(g, h);
        return r;
      }
  }
  return r;
}

inline ConnectionFunction real_class_function(const Classifier& c, const std::vector<long long>& per_real) {
  std::vector<long long> per_class(c.P.count());
  for (std::size_t k = 0; k < c.P.count(); ++k) per_class[k] = per_real[c.P.real_class_of[k]];
  return class_function(c.G, c.P, per_class);
}

inline Route fcci_spectral(const Classifier& c, std::vector<std::string>& caps) {
  Route r{"spectral", std::nullopt, "", {}};
  if (c.G.order() > c.opts.fcci_spectral_cap) {
    r.detail = "skipped: |G| exceeds cap " + std::to_string(c.opts.fcci_spectral_cap);
    caps.push_back("fcci.spectral");
    return r;
  }
  const std::size_t m = c.P.real_classes.size();
  auto test = [&](const std::vector<long long>& vals) {
    const auto rep = spectrum_matrix(c.G, real_class_function(c, vals));
    if (!rep.is_integral) {
      r.verdict = false;
      r.evidence.emplace_back("values_by_real_class", values_text(vals));
      r.evidence.emplace_back("residual", residual_text(rep));
    }
    return rep.is_integral;
  };
  r.verdict = true;
  if (m <= c.opts.fcci_exhaustive_real_classes) {
    std::size_t tested = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      std::vector<long long> vals(m);
      for (std::size_t i = 0; i < m; ++i) vals[i] = static_cast<long long>(mask >> i & 1);
      ++tested;
      if (!test(vals)) {
        r.detail = "0/1 function on real classes with non-integral spectrum (after " + std::to_string(tested) + ")";
        return r;
      }
    }
    r.detail = "all " + std::to_string(tested) + " 0/1 functions on real classes give integral spectra";
  } else {
    std::mt19937_64 rng(c.opts.seed ^ 0x46434349ULL);
    std::uniform_int_distribution<long long> dist(-9, 9);
    for (std::size_t s = 0; s < c.opts.fcci_random_functions; ++s) {
      std::vector<long long> vals(m);
      for (auto& x : vals) x = dist(rng);
      if (!test(vals)) {
        r.detail = "random function " + std::to_string(s) + " has a non-integral spectrum";
        return r;
      }
    }
    r.detail = std::to_string(c.opts.fcci_random_functions) + " random functions in [-9,9] give integral spectra";
  }
  return r;
}

inline Verdict fcci_verdict(const Classifier& c, std::vector<std::string>& caps,
                            std::optional<std::pair<Element, long long>>* witness = nullptr) {
  Verdict v{"fcci", false, {}};
  v.routes.push_back(fcci_order_profile(c));
  v.routes.push_back(fcci_criterion(c, witness));
  v.routes.push_back(fcci_spectral(c, caps));
  v.value = *v.routes[1].verdict;
  return v;
}

// ---------------------------------------------------------------------------
// CCI and CI

/// Abelian of exponent dividing 4 or 6, or a Hamiltonian 2-group of exponent 4.
inline std::optional<std::string> cci_structure(const FiniteGroup& G) {
  const auto e = G.exponent();
  if (G.is_abelian()) {
    if (4 % e == 0) return "abelian of exponent dividing 4";
    if (6 % e == 0) return "abelian of exponent dividing 6";
    return std::nullopt;
  }
  if (is_power_of(G.order(), 2) && e == 4 && all_cyclic_subgroups_normal(G)) return "Hamiltonian 2-group (Q8 x Z2^n)";
  return std::nullopt;
}

inline bool has_element_of_order(const FiniteGroup& G, std::uint32_t o) {
  return std::find(G.orders().begin(), G.orders().end(), o) != G.orders().end();
}

inline std::optional<std::string> ci_structure(const FiniteGroup& G) {
  if (auto s = cci_structure(G)) return s;
  if (G.order() == 6 && !G.is_abelian()) return "S3";
  if (G.order() == 12 && !G.is_abelian() && has_element_of_order(G, 4)) return "Dic12";
  return std::nullopt;
}

inline Route cci_witness_search(const Classifier& c, const std::optional<std::pair<Element, long long>>& fcci_witness,
                                std::vector<std::string>& caps) {
  Route r{"witness_search", std::nullopt, "", {}};
  r.evidence.emplace_back("seed", std::to_string(c.opts.seed));
  if (c.G.order() > c.opts.cci_witness_cap) {
    r.detail = "skipped: |G| exceeds cap " + std::to_string(c.opts.cci_witness_cap);
    caps.push_back("cci.witness_search");
    return r;
  }
  auto record = [&](const ConnectionFunction& f, const SpectrumReport& rep, const std::string& source) {
    r.verdict = false;
    r.detail = "non-integral colour function found (" + source + ")";
    r.evidence.emplace_back("source", source);
    r.evidence.emplace_back("function", values_text(f.values()));
    r.evidence.emplace_back("residual", residual_text(rep));
  };

  if (every_class_within_inverse_pair(c.G, c.P)) {
    // every symmetric function is a class function here
    if (!fcci_witness) {
      r.verdict = true;
      r.detail = "every class lies in {g, g^-1}; the class-function criterion holds";
      return r;
    }
    const auto [g, h] = *fcci_witness;
    std::vector<long long> per_real(c.P.real_classes.size(), 0);
    per_real[c.P.real_class_of[c.P.class_of[g]]] = 1;
    const auto f = real_class_function(c, per_real);
    const auto rep = spectrum_matrix(c.G, f);
    if (!rep.is_integral) {
      record(f, rep, "indicator of the real class of " + describe(c.G, g) + ", moved by h = " + std::to_string(h));
    } else {
      r.detail = "criterion witness did not give a non-integral spectrum";
    }
    return r;
  }

  for (const char* name : {"alpha", "beta"}) {
    try {
      const Fixture fx = named_fixture(name, c.G);
      const auto rep = spectrum_matrix(c.G, fx.function);
      if (!rep.is_integral) {
        record(fx.function, rep, std::string("fixture ") + name);
        return r;
      }
    } catch (const Mismatch&) {
    }
  }

  const auto pairs = inverse_pairs(c.G);
  const std::vector<long long> schedule{1, 3, 7, 4, 5, 8, 2, 6, 9};
  std::mt19937_64 rng(c.opts.seed ^ 0x43434957ULL);
  std::uniform_int_distribution<long long> dist(0, 9);
  std::size_t tried = 0;
  for (std::size_t cand = 0; cand < c.opts.cci_witness_budget; ++cand) {
    std::vector<long long> v(c.G.order(), 0);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const long long x = cand < schedule.size() ? schedule[(i + cand) % schedule.size()] : dist(rng);
      for (Element g : pairs[i]) v[g] = x;
    }
    const ConnectionFunction f(c.G, c.P, std::move(v));
    if (f.class_function()) continue;
    ++tried;
    const auto rep = spectrum_matrix(c.G, f);
    if (!rep.is_integral) {
      record(f, rep, cand < schedule.size() ? "schedule rotation " + std::to_string(cand)
                                            : "random candidate " + std::to_string(cand));
      return r;
    }
  }
  r.detail = "no witness among " + std::to_string(tried) + " candidates";
  return r;
}

inline Verdict cci_verdict(const Classifier& c, const std::optional<std::pair<Element, long long>>& fcci_witness,
                           std::vector<std::string>& caps) {
  Verdict v{"cci", false, {}};
  const auto s = cci_structure(c.G);
  v.routes.push_back({"structural", s.has_value(), s ? *s : "not in the recognized list", {}});
  // an exhausted search leaves the route without a verdict
  v.routes.push_back(cci_witness_search(c, fcci_witness, caps));
  v.value = s.has_value();
  return v;
}

inline Route ci_brute_force(const Classifier& c, std::vector<std::string>& caps) {
  Route r{"brute_force", std::nullopt, "", {}};
  const auto pairs = inverse_pairs(c.G);
  auto test = [&](const std::vector<Element>& S) {
    const auto rep = spectrum_matrix(c.G, indicator(c.G, c.P, S));
    if (!rep.is_integral) {
      r.verdict = false;
      r.evidence.emplace_back("set", describe_set(c.G, S));
      r.evidence.emplace_back("elements", indices_text(S));
      r.evidence.emplace_back("residual", residual_text(rep));
    }
    return rep.is_integral;
  };
  auto build = [&](auto pick) {
    std::vector<Element> S;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (pick(i)) S.insert(S.end(), pairs[i].begin(), pairs[i].end());
    std::sort(S.begin(), S.end());
    return S;
  };
  if (c.G.order() <= c.opts.ci_exhaustive_cap && pairs.size() <= 16) {
    r.verdict = true;
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < total; ++mask)
      if (!test(build([mask](std::size_t i) { return (mask >> i & 1) != 0; }))) {
        r.detail = "exhaustive: non-integral Cayley graph found";
        return r;
      }
    r.detail = "exhaustive: all " + std::to_string(total) + " inverse-closed sets give integral graphs";
    return r;
  }
  if (c.G.order() <= c.opts.ci_sampled_cap) {
    r.verdict = true;
    r.evidence.emplace_back("seed", std::to_string(c.opts.seed));
    std::size_t tried = 0;
    for (std::size_t i = 0; i < pairs.size() && tried < c.opts.ci_samples; ++i, ++tried)
      if (!test(pairs[i])) {
        r.detail = "sampled: single inverse pair gives a non-integral graph";
        return r;
      }
    std::mt19937_64 rng(c.opts.seed ^ 0x43492d53ULL);
    while (tried < c.opts.ci_samples) {
      ++tried;
      std::vector<bool> pick(pairs.size());
      for (std::size_t i = 0; i < pairs.size(); ++i) pick[i] = (rng() & 1) != 0;
      if (!test(build([&pick](std::size_t i) { return pick[i]; }))) {
        r.detail = "sampled: random set " + std::to_string(tried) + " gives a non-integral graph";
        return r;
      }
    }
    r.detail = "sampled: " + std::to_string(tried) + " inverse-closed sets give integral graphs";
    return r;
  }
  r.detail = "skipped: |G| exceeds cap " + std::to_string(c.opts.ci_sampled_cap);
  caps.push_back("ci.brute_force");
  return r;
}

inline Verdict ci_verdict(const Classifier& c, std::vector<std::string>& caps) {
  Verdict v{"ci", false, {}};
  const auto s = ci_structure(c.G);
  v.routes.push_back({"structural", s.has_value(), s ? *s : "not in the recognized list", {}});
  v.routes.push_back(ci_brute_force(c, caps));
  v.value = s.has_value();
  return v;
}

// ---------------------------------------------------------------------------
// Report

inline void collect_disagreement(ClassificationReport& rep, const Verdict& v) {
  if (v.routes_agree()) return;
  std::string d;
  for (const auto& r : v.routes)
    if (r.verdict) d += (d.empty() ? "" : ", ") + r.name + "=" + (*r.verdict ? "true" : "false");
  rep.discrepancies.push_back({rep.group, v.property, "routes disagree: " + d});
}

inline ClassificationReport classify(const FiniteGroup& G, const ClassifyOptions& opts = {}) {
  const ConjugacyPartition P = conjugacy_classes(G);
  std::optional<CharacterTable> T;
  ClassificationReport rep;
  rep.group = G.name();
  rep.order = G.order();
  rep.exponent = G.exponent();
  rep.seed = opts.seed;
  {
    std::set<std::uint32_t> os(G.orders().begin(), G.orders().end());
    rep.element_orders.assign(os.begin(), os.end());
  }
  rep.class_count = P.count();
  rep.real_class_count = P.real_classes.size();
  rep.abelian = G.is_abelian();
  rep.nilpotent = is_nilpotent(G);
  try {
    T = character_table(G, P, opts.chartable);
  } catch (const CapExceeded&) {
    rep.caps_hit.push_back("character_table");
  }
  const Classifier c{G, P, T ? &*T : nullptr, opts};

  rep.rational = rational_verdict(c);
  rep.semi_rational = semi_rational_verdict(c, rep.semi_rational_exponents);
  rep.inverse_semi_rational = inverse_semi_rational_verdict(c);
  rep.nci = nci_verdict(c, rep.caps_hit);
  std::optional<std::pair<Element, long long>> fw;
  rep.fcci = fcci_verdict(c, rep.caps_hit, &fw);
  rep.cci = cci_verdict(c, fw, rep.caps_hit);
  rep.ci = ci_verdict(c, rep.caps_hit);
  rep.gamma = gamma_chi_plus_conj_check(c, &rep.discrepancies);

  for (const Verdict* v : {&rep.rational, &rep.semi_rational, &rep.inverse_semi_rational, &rep.nci, &rep.fcci,
                           &rep.cci, &rep.ci})
    collect_disagreement(rep, *v);
  if (!rep.gamma.empty()) {
    const bool all = std::all_of(rep.gamma.begin(), rep.gamma.end(), [](const GammaCheck& g) { return g.integral; });
    if (all != rep.nci.value)
      rep.discrepancies.push_back({rep.group, "gamma_chi_plus_conj",
                                   std::string("every Cay(G, chi + conj chi) integral is ") + (all ? "true" : "false") +
                                       " but nci is " + (rep.nci.value ? "true" : "false")});
  }
  return rep;
}

}  // namespace ccig
