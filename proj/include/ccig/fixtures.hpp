#pragma once

// The two non-class colour functions on S3 and Dic12 whose Cayley colour
// graphs are not integral. Each is defined through a presentation, so it is
// resolved on any table of the right isomorphism type: we take the least
// element index a of the required order, then the least b satisfying the
// relations. Any other choice differs by an automorphism, which preserves
// the spectrum.

#include <optional>
#include <string>
#include <vector>

#include "ccig/error.hpp"
#include "ccig/group.hpp"
#include "ccig/spectra.hpp"

namespace ccig {

struct Fixture {
  std::string name;
  Element a = 0, b = 0;
  ConnectionFunction function;
  /// Element expressions a^i b^s in presentation form, by element index.
  std::vector<std::string> words;
  /// Reference spectrum for this function: (value text, multiplicity).
  std::vector<std::pair<std::string, std::size_t>> reference_spectrum;
};

namespace detail {

inline std::string word(std::size_t i, bool with_b) {
  std::string s;
  if (i == 1) s = "a";
  else if (i > 1) s = "a^" + std::to_string(i);
  if (with_b) s += "b";
  return s.empty() ? "1" : s;
}

}  // namespace detail

/// S3 = <a, b | a^3 = b^2 = 1, ab = ba^-1>;
/// alpha(1)=0, alpha(a)=alpha(a^2)=1, alpha(b)=3, alpha(ba)=7, alpha(ba^2)=4.
inline Fixture alpha_fixture(const FiniteGroup& G) {
  if (G.order() != 6 || G.is_abelian()) throw Mismatch("alpha needs S3; got order " + std::to_string(G.order()));
  Fixture fx;
  fx.name = "alpha";
  std::optional<Element> a, b;
  for (Element g = 0; g < G.order(); ++g) {
    if (!a && G.elem_order(g) == 3) a = g;
    if (!b && G.elem_order(g) == 2) b = g;
  }
  if (!a || !b) throw Mismatch("alpha: no generators of orders 3 and 2");
  fx.a = *a;
  fx.b = *b;
  std::vector<long long> v(6, -1);
  fx.words.assign(6, "");
  auto set = [&](Element g, long long value, const std::string& w) {
    v[g] = value;
    fx.words[g] = w;
  };
  set(0, 0, "1");
  set(*a, 1, "a");
  set(G.mul(*a, *a), 1, "a^2");
  set(*b, 3, "b");
  set(G.mul(*b, *a), 7, "ba");
  set(G.mul(*b, G.mul(*a, *a)), 4, "ba^2");
  for (long long x : v)
    if (x < 0) throw Mismatch("alpha: presentation does not cover the group");
  fx.function = ConnectionFunction(G, std::move(v));
  fx.reference_spectrum = {{"16", 1}, {"12", 1}, {"-1+sqrt(13)", 2}, {"-1-sqrt(13)", 2}};
  return fx;
}

/// Dic12 = <a, b | a^6 = 1, a^3 = b^2, bab^-1 = a^-1>;
/// beta(a^i) = 0,1,7,8,7,1 and beta(a^i b) = 3,4,5,3,4,5 for i = 0..5.
/// The listed words reduce as b^3 = a^3 b, ab^3 = a^4 b, a^5 b^3 = a^2 b.
inline Fixture beta_fixture(const FiniteGroup& G) {
  if (G.order() != 12 || G.is_abelian()) throw Mismatch("beta needs Dic12; got order " + std::to_string(G.order()));
  Fixture fx;
  fx.name = "beta";
  std::optional<Element> a;
  for (Element g = 0; g < G.order() && !a; ++g)
    if (G.elem_order(g) == 6) a = g;
  if (!a) throw Mismatch("beta: no element of order 6");
  const Element a3 = G.pow(*a, 3), ainv = G.inv(*a);
  std::optional<Element> b;
  for (Element g = 0; g < G.order() && !b; ++g)
    if (G.mul(g, g) == a3 && G.mul(G.mul(g, *a), G.inv(g)) == ainv) b = g;
  if (!b) throw Mismatch("beta: no b with b^2 = a^3 and bab^-1 = a^-1");
  fx.a = *a;
  fx.b = *b;
  const long long cyc[6] = {0, 1, 7, 8, 7, 1};
  const long long coset[6] = {3, 4, 5, 3, 4, 5};
  std::vector<long long> v(12, -1);
  fx.words.assign(12, "");
  for (std::size_t i = 0; i < 6; ++i) {
    const Element ai = G.pow(*a, static_cast<long long>(i));
    const Element aib = G.mul(ai, *b);
    v[ai] = cyc[i];
    v[aib] = coset[i];
    fx.words[ai] = detail::word(i, false);
    fx.words[aib] = detail::word(i, true);
  }
  for (long long x : v)
    if (x < 0) throw Mismatch("beta: presentation does not cover the group");
  fx.function = ConnectionFunction(G, std::move(v));
  fx.reference_spectrum = {{"48", 1}, {"4", 2}, {"0", 1}, {"-14", 4}, {"2*sqrt(3)", 2}, {"-2*sqrt(3)", 2}};
  return fx;
}

inline Fixture named_fixture(const std::string& name, const FiniteGroup& G) {
  if (name == "alpha") return alpha_fixture(G);
  if (name == "beta") return beta_fixture(G);
  throw UnknownName("unknown fixture '" + name + "' (expected alpha or beta)");
}

}  // namespace ccig
