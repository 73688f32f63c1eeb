#include <gtest/gtest.h>

#include <sstream>

#include "support.hpp"

using namespace ccig;

namespace {

using Roots = std::vector<std::pair<BigInt, std::size_t>>;

IntPolynomial poly(std::initializer_list<long long> low_first) {
  return IntPolynomial(std::vector<BigInt>(low_first.begin(), low_first.end()));
}

}  // namespace

TEST(ConnectionFunction, FlagsAreDerived) {
  const auto G = catalog("s3");
  const auto P = conjugacy_classes(G);
  const ConnectionFunction f(G, P, {0, 3, 4, 1, 1, 7});
  EXPECT_TRUE(f.symmetric());
  EXPECT_FALSE(f.class_function());
  EXPECT_TRUE(f.zero_at_identity());
  EXPECT_FALSE(f.in_F());
  const ConnectionFunction g(G, P, {5, 2, 2, 2, 1, 1});
  EXPECT_FALSE(g.symmetric() && g.class_function() && g.zero_at_identity());
  EXPECT_THROW(ConnectionFunction(G, P, {0, 1}), Error);
}

TEST(ConnectionSet, Validation) {
  const auto G = catalog("cyclic", {6});
  EXPECT_THROW(connection_set(G, {0, 1, 5}), InvalidConnectionSet);  // identity
  EXPECT_THROW(connection_set(G, {1}), InvalidConnectionSet);        // not inverse-closed
  EXPECT_THROW(connection_set(G, {1, 5, 9}), InvalidConnectionSet);  // out of range
  const auto S = connection_set(G, {5, 1});
  EXPECT_EQ(S.elements, (std::vector<Element>{1, 5}));
  EXPECT_TRUE(S.normal);
  const auto S3 = catalog("s3");
  EXPECT_FALSE(connection_set(S3, {1}).normal);  // one transposition
}

TEST(Adjacency, SixCycle) {
  const auto G = catalog("cyclic", {6});
  const auto P = conjugacy_classes(G);
  const auto A = adjacency(G, indicator(G, P, {1, 5}));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      const bool edge = (i + 1) % 6 == j || (j + 1) % 6 == i;
      EXPECT_EQ(A(i, j), edge ? 1 : 0);
    }
}

TEST(Adjacency, MatchesOracleConvention) {
  const auto G = catalog("dicyclic12");
  std::mt19937_64 rng(5);
  const auto f = oracle::random_symmetric(G, rng, -5, 9);
  const auto A = adjacency(G, ConnectionFunction(G, f));
  const auto M = oracle::adjacency(G, f);
  for (std::size_t i = 0; i < G.order(); ++i)
    for (std::size_t j = 0; j < G.order(); ++j) EXPECT_EQ(A(i, j), M[i][j]);
}

TEST(Adjacency, AlphaRowSums) {
  const auto G = catalog("s3");
  const auto fx = named_fixture("alpha", G);
  const auto A = adjacency(G, fx.function);
  for (std::size_t i = 0; i < 6; ++i) {
    BigInt s = 0;
    for (std::size_t j = 0; j < 6; ++j) s += A(i, j);
    EXPECT_EQ(s, 16);
  }
  EXPECT_EQ(A.trace(), 0);
}

TEST(Spectrum, Q8CentralMatching) {
  const auto G = catalog("q8");
  const auto P = conjugacy_classes(G);
  const auto r = spectrum_matrix(G, indicator(G, P, {1}));
  EXPECT_EQ(r.integer_eigenvalues, (Roots{{1, 4}, {-1, 4}}));
  EXPECT_TRUE(r.is_integral);
}

TEST(Spectrum, AlphaOnS3) {
  const auto G = catalog("s3");
  const auto r = spectrum_matrix(G, named_fixture("alpha", G).function);
  EXPECT_FALSE(r.is_integral);
  EXPECT_EQ(r.residual, poly({-12, 2, 1}).pow(2));
  EXPECT_EQ(r.integer_eigenvalues, (Roots{{16, 1}, {-12, 1}}));
}

TEST(Spectrum, BetaOnDic12) {
  const auto G = catalog("dicyclic12");
  const auto r = spectrum_matrix(G, named_fixture("beta", G).function);
  EXPECT_FALSE(r.is_integral);
  EXPECT_EQ(r.integer_eigenvalues, (Roots{{48, 1}, {4, 2}, {0, 1}, {-14, 4}}));
  EXPECT_EQ(r.residual, poly({-12, 0, 1}).pow(2));
}

TEST(Spectrum, ZeroFunction) {
  const auto G = catalog("a4");
  const auto r = spectrum_matrix(G, ConnectionFunction(G, std::vector<long long>(12, 0)));
  EXPECT_EQ(r.integer_eigenvalues, (Roots{{0, 12}}));
  EXPECT_TRUE(r.is_integral);
}

TEST(Spectrum, NonSymmetricRejected) {
  const auto G = catalog("cyclic", {3});
  EXPECT_THROW(spectrum_matrix(G, ConnectionFunction(G, {0, 1, 0})), NotSymmetricFunction);
}

TEST(Spectrum, MatchesOracleCharpoly) {
  const auto G = catalog("dihedral", {5});
  std::mt19937_64 rng(17);
  for (int t = 0; t < 3; ++t) {
    const auto f = oracle::random_symmetric(G, rng, -3, 6);
    EXPECT_EQ(spectrum_matrix(G, ConnectionFunction(G, f)).charpoly.coeffs(),
              oracle::charpoly_faddeev(oracle::adjacency(G, f)));
  }
}

TEST(CharacterRoute, TriangleAndTrivialCharacter) {
  const auto G = catalog("cyclic", {3});
  const auto P = conjugacy_classes(G);
  const auto T = character_table(G, P);
  const auto eig = spectrum_characters(G, P, indicator(G, P, {1, 2}), T);
  std::multiset<long long> vals;
  for (const auto& e : eig) vals.insert(e.value.to_rational().convert_to<long long>());
  EXPECT_EQ(vals, (std::multiset<long long>{2, -1, -1}));
  EXPECT_EQ(eig.front().value, Cyclotomic::from_int(T.conductor, 2));  // |S| on the trivial character
}

TEST(CharacterRoute, Q8PairSet) {
  const auto G = catalog("q8");
  const auto P = conjugacy_classes(G);
  const auto T = character_table(G, P);
  const auto f = indicator(G, P, {2, 3});  // {i, -i}
  const auto eig = spectrum_characters(G, P, f, T);
  std::vector<long long> vals;
  for (const auto& e : eig) vals.push_back(e.value.to_rational().convert_to<long long>());
  EXPECT_EQ(vals, (std::vector<long long>{2, 2, -2, -2, 0}));
  EXPECT_TRUE(compare_routes(spectrum_matrix(G, f).charpoly, eig, T.conductor).agree);
}

TEST(CharacterRoute, RequiresClassFunction) {
  const auto G = catalog("s3");
  const auto P = conjugacy_classes(G);
  const auto T = character_table(G, P);
  EXPECT_THROW(spectrum_characters(G, P, named_fixture("alpha", G).function, T), NotAClassFunction);
}

TEST(Criterion, Examples) {
  const auto Q8 = catalog("q8");
  std::mt19937_64 rng(1);
  const auto PQ = conjugacy_classes(Q8);
  EXPECT_TRUE(integrality_by_criterion(Q8, ConnectionFunction(Q8, oracle::random_f(Q8, PQ, rng, -9, 9))).integral);

  const auto Z12 = catalog("cyclic", {12});
  const auto P12 = conjugacy_classes(Z12);
  const auto r = integrality_by_criterion(Z12, indicator(Z12, P12, {1, 11}));
  EXPECT_FALSE(r.integral);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->first, 1u);
  EXPECT_EQ(r.witness->second, 5);

  std::vector<long long> constant(12, 4);
  constant[0] = 0;
  EXPECT_TRUE(integrality_by_criterion(Z12, ConnectionFunction(Z12, constant)).integral);
}

TEST(Eulerian, Examples) {
  const auto Z12 = catalog("cyclic", {12});
  for (Element g = 1; g < 12; ++g)  // atoms are inverse-closed since -1 is a unit
    EXPECT_TRUE(eulerian_check(Z12, connection_set(Z12, atom(Z12, g).members)).eulerian) << g;
  const auto Z6 = catalog("cyclic", {6});
  const auto r6 = eulerian_check(Z6, connection_set(Z6, {1, 5}));
  EXPECT_TRUE(r6.eulerian);
  EXPECT_EQ(r6.decomposition.size(), 1u);
  const auto r12 = eulerian_check(Z12, connection_set(Z12, {1, 11}));
  EXPECT_FALSE(r12.eulerian);
  ASSERT_TRUE(r12.offending);
  EXPECT_EQ(r12.offending->members, (std::vector<Element>{1, 5, 7, 11}));
}

TEST(NormalSets, EnumeratesUnionsOfRealClasses) {
  const auto G = catalog("q8");
  const auto P = conjugacy_classes(G);
  const auto sets = normal_connection_sets(P);
  EXPECT_EQ(sets.size(), 16u);  // 4 nonidentity real classes
  for (const auto& S : sets) EXPECT_TRUE(S.empty() || connection_set(G, P, S).normal);
  EXPECT_THROW(normal_connection_sets(P, 3), CapExceeded);
}

TEST(Analysis, RoutesRecorded) {
  const auto G = catalog("s3");
  const auto P = conjugacy_classes(G);
  const auto T = character_table(G, P);
  EXPECT_EQ(analyze_spectrum(G, P, named_fixture("alpha", G).function, &T).routes_run,
            (std::vector<std::string>{"matrix"}));
  const auto a = analyze_spectrum(G, P, indicator(G, P, {1, 2, 5}), &T);
  EXPECT_EQ(a.routes_run, (std::vector<std::string>{"matrix", "criterion", "characters"}));
  EXPECT_TRUE(a.routes->agree);
}

TEST(FunctionIO, RoundTripAndErrors) {
  const auto G = catalog("s3");
  const auto f = named_fixture("alpha", G).function;
  std::stringstream ss;
  save_function(f, ss);
  EXPECT_EQ(load_function(G, ss).values(), f.values());
  std::istringstream short_in("f 6\n0 1 2\n");
  EXPECT_THROW(load_function(G, short_in), ParseError);
  std::istringstream wrong_n("f 5\n0 1 2 3 4\n");
  EXPECT_ANY_THROW(load_function(G, wrong_n));
  std::stringstream sets;
  save_set({1, 5}, sets);
  EXPECT_EQ(load_set(sets), (std::vector<Element>{1, 5}));
}

TEST(Fixtures, ShippedFilesMatchBuiltins) {
  const auto S3 = load_group_file(CCIG_DATA_DIR "/groups/s3.group");
  EXPECT_EQ(load_function_file(S3, CCIG_DATA_DIR "/fixtures/alpha.fn").values(),
            named_fixture("alpha", S3).function.values());
  const auto D = load_group_file(CCIG_DATA_DIR "/groups/dic12.group");
  EXPECT_EQ(load_function_file(D, CCIG_DATA_DIR "/fixtures/beta.fn").values(),
            named_fixture("beta", D).function.values());
}

TEST(Fixtures, WordsResolveByRelations) {
  const auto D = catalog("dicyclic12");
  const auto fx = named_fixture("beta", D);
  const Element a = fx.a, b = fx.b;
  EXPECT_EQ(D.elem_order(a), 6u);
  EXPECT_EQ(D.mul(b, b), D.pow(a, 3));
  EXPECT_EQ(D.conjugate(b, a), D.inv(a));
  // printed words with b^3 land where b^2 = a^3 puts them
  const Element b3 = D.pow(b, 3);
  EXPECT_EQ(fx.function(b3), 3);
  EXPECT_EQ(fx.function(D.mul(a, b3)), 4);
  EXPECT_EQ(fx.function(D.mul(D.pow(a, 5), b3)), 5);
  EXPECT_EQ(fx.function(D.mul(b, b)), 8);
  EXPECT_THROW(named_fixture("beta", catalog("s3")), Mismatch);
  EXPECT_THROW(named_fixture("gamma", D), UnknownName);
}
