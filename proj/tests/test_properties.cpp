// Randomized invariants. Every generator is seeded so failures reproduce.

#include <gtest/gtest.h>

#include "support.hpp"

using namespace ccig;

namespace {

constexpr int kTrials = 30;

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  long long integer(long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(rng); }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(integer(0, static_cast<long long>(n) - 1)); }

  const FiniteGroup& group() {
    static const std::vector<FiniteGroup> pool = [] {
      std::vector<FiniteGroup> v;
      for (const auto& e : oracle::small_catalog()) v.push_back(catalog_expression(e));
      v.push_back(catalog("dihedral", {8}));
      v.push_back(catalog("a5"));
      return v;
    }();
    return pool[index(pool.size())];
  }

  Element element(const FiniteGroup& G) { return static_cast<Element>(index(G.order())); }

  long long unit(long long m) {
    const auto u = units_mod(m);
    return u[index(u.size())];
  }

  Cyclotomic cyclo(unsigned e) {
    std::vector<BigInt> c(e);
    for (auto& x : c) x = integer(-4, 4);
    return Cyclotomic::from_exponents(e, c, integer(1, 3));
  }
};

}  // namespace

TEST(GroupProperties, AtomsFixedByUnitPowerMaps) {
  Gen gen(101);
  for (int t = 0; t < kTrials; ++t) {
    const auto& G = gen.group();
    const Element g = gen.element(G);
    const auto a = atom(G, g);
    const long long h = gen.unit(static_cast<long long>(G.order()));
    const auto pm = power_map(G, h);
    std::vector<Element> img;
    for (Element x : a.members) img.push_back(pm.image[x]);
    std::sort(img.begin(), img.end());
    EXPECT_EQ(img, a.members) << G.name() << " g=" << g << " h=" << h;
    for (Element x : a.members) EXPECT_EQ(G.elem_order(x), G.elem_order(g));
  }
}

TEST(GroupProperties, OrderConstantOnClassesAndRealClassesAreUnions) {
  Gen gen(102);
  for (int t = 0; t < kTrials; ++t) {
    const auto& G = gen.group();
    const auto P = conjugacy_classes(G);
    const Element g = gen.element(G);
    for (Element x : P.classes[P.class_of[g]]) EXPECT_EQ(G.elem_order(x), G.elem_order(g));
    std::set<Element> expected(P.classes[P.class_of[g]].begin(), P.classes[P.class_of[g]].end());
    for (Element x : P.classes[P.class_of[G.inv(g)]]) expected.insert(x);
    const auto real = P.real_class_elements(P.real_class_of[P.class_of[g]]);
    EXPECT_EQ(std::set<Element>(real.begin(), real.end()), expected) << G.name();
  }
}

TEST(GroupProperties, QuotientOrderAndCenter) {
  Gen gen(103);
  for (int t = 0; t < kTrials; ++t) {
    const auto& G = gen.group();
    const auto N = normal_closure(G, {gen.element(G)});
    const auto Q = quotient(G, N);
    EXPECT_EQ(Q.group.order() * N.size(), G.order()) << G.name();
    const auto Z = center(G);
    EXPECT_TRUE(is_normal_subgroup(G, Z));
    for (Element a : Z)
      for (Element b : Z) EXPECT_EQ(G.mul(a, b), G.mul(b, a));
  }
}

TEST(CyclotomicProperties, RingAxioms) {
  Gen gen(104);
  for (int t = 0; t < kTrials; ++t) {
    const unsigned e = static_cast<unsigned>(gen.integer(1, 24));
    const auto a = gen.cyclo(e), b = gen.cyclo(e), c = gen.cyclo(e);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a + b) - b, a);
    EXPECT_EQ(a * Cyclotomic::from_int(e, 1), a);
  }
}

TEST(CyclotomicProperties, ConjugationAndGalois) {
  Gen gen(105);
  for (int t = 0; t < kTrials; ++t) {
    const unsigned e = static_cast<unsigned>(gen.integer(2, 30));
    const auto a = gen.cyclo(e), b = gen.cyclo(e);
    EXPECT_EQ(a.conj().conj(), a);
    EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
    EXPECT_TRUE((a + a.conj()).conj() == a + a.conj());
    const long long h1 = gen.unit(e), h2 = gen.unit(e);
    EXPECT_EQ(a.galois(h1).galois(h2), a.galois(h1 * h2 % e));
    Cyclotomic orbit = Cyclotomic::zero(e);
    for (long long h : units_mod(e)) orbit += a.galois(h);
    EXPECT_TRUE(orbit.is_rational()) << a.to_string();
  }
}

TEST(SpectrumProperties, TraceConsistency) {
  Gen gen(106);
  for (int t = 0; t < kTrials; ++t) {
    const auto& G = gen.group();
    if (G.order() > 24) continue;
    auto f = oracle::random_symmetric(G, gen.rng, -6, 6);
    f[0] = gen.integer(-3, 3);
    const auto r = spectrum_matrix(G, ConnectionFunction(G, f));
    const std::size_t n = G.order();
    EXPECT_EQ(r.charpoly.coeff(n - 1), -BigInt(static_cast<long long>(n) * f[0]));
    EXPECT_EQ(reconstruct(r), r.charpoly);
  }
}

TEST(SpectrumProperties, DiagonalShift) {
  Gen gen(107);
  for (int t = 0; t < kTrials; ++t) {
    const auto& G = gen.group();
    if (G.order() > 24) continue;
    auto f = oracle::random_symmetric(G, gen.rng, 0, 5);
    f[0] = 0;
    const long long c = gen.integer(-5, 5);
    auto g = f;
    g[0] = c;
    const auto rf = spectrum_matrix(G, ConnectionFunction(G, f));
    const auto rg = spectrum_matrix(G, ConnectionFunction(G, g));
    EXPECT_EQ(rf.is_integral, rg.is_integral);
    ASSERT_EQ(rf.integer_eigenvalues.size(), rg.integer_eigenvalues.size());
    for (std::size_t i = 0; i < rf.integer_eigenvalues.size(); ++i) {
      EXPECT_EQ(rf.integer_eigenvalues[i].first + c, rg.integer_eigenvalues[i].first);
      EXPECT_EQ(rf.integer_eigenvalues[i].second, rg.integer_eigenvalues[i].second);
    }
    // residual of the shifted graph is the original residual at x - c
    ASSERT_EQ(rf.residual.degree(), rg.residual.degree());
    for (long long x = 0; x <= static_cast<long long>(rf.residual.degree()); ++x)
      EXPECT_EQ(rg.residual.evaluate(x), rf.residual.evaluate(x - c));
  }
}

TEST(SpectrumProperties, DualRouteOnRandomClassFunctions) {
  Gen gen(108);
  for (int t = 0; t < kTrials; ++t) {
    const auto& G = gen.group();
    if (G.order() > 24) continue;
    const auto P = conjugacy_classes(G);
    const auto T = character_table(G, P);
    auto vals = oracle::random_f(G, P, gen.rng, -9, 9);
    vals[0] = gen.integer(-2, 2);
    const ConnectionFunction f(G, P, vals);
    const auto eig = spectrum_characters(G, P, f, T);
    EXPECT_TRUE(compare_routes(spectrum_matrix(G, f).charpoly, eig, T.conductor).agree) << G.name();
  }
}

TEST(SpectrumProperties, CriterionMatchesMatrix) {
  Gen gen(109);
  for (int t = 0; t < kTrials; ++t) {
    const auto& G = gen.group();
    if (G.order() > 24) continue;
    const auto P = conjugacy_classes(G);
    const ConnectionFunction f(G, P, oracle::random_f(G, P, gen.rng, 0, 2));
    EXPECT_EQ(integrality_by_criterion(G, f).integral, spectrum_matrix(G, f).is_integral) << G.name();
  }
}

TEST(SpectrumProperties, EulerianMatchesMatrixOnRandomNormalSets) {
  Gen gen(110);
  for (int t = 0; t < kTrials; ++t) {
    const auto& G = gen.group();
    if (G.order() > 24) continue;
    const auto P = conjugacy_classes(G);
    std::vector<Element> S;
    for (std::size_t r = 1; r < P.real_classes.size(); ++r)
      if (gen.integer(0, 1)) {
        const auto m = P.real_class_elements(r);
        S.insert(S.end(), m.begin(), m.end());
      }
    const auto cs = connection_set(G, P, S);
    EXPECT_TRUE(cs.normal);
    EXPECT_EQ(eulerian_check(G, cs).eulerian, spectrum_matrix(G, indicator(G, P, cs.elements)).is_integral)
        << G.name();
  }
}

TEST(TableProperties, RandomGroupsVerifyAndGaloisActs) {
  Gen gen(111);
  for (int t = 0; t < 10; ++t) {
    const auto& G = gen.group();
    const auto T = character_table(G);
    EXPECT_NO_THROW(verify_character_table(T));
    const long long h = gen.unit(T.conductor);
    const auto act = galois_on_characters(T, h);
    std::vector<std::size_t> sorted = act.character_permutation;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) EXPECT_EQ(sorted[i], i);
  }
}
