#include <gtest/gtest.h>

#include <sstream>

#include "support.hpp"

using namespace ccig;

namespace {

std::set<std::set<Element>> as_sets(const ConjugacyPartition& P) {
  std::set<std::set<Element>> out;
  for (const auto& c : P.classes) out.emplace(c.begin(), c.end());
  return out;
}

std::vector<std::vector<Element>> z_table(std::size_t n) {
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = static_cast<Element>((i + j) % n);
  return t;
}

}  // namespace

TEST(BuildGroup, Z2Table) {
  const auto G = build_group({{0, 1}, {1, 0}});
  EXPECT_EQ(G.order(), 2u);
  EXPECT_EQ(G.orders(), (std::vector<std::uint32_t>{1, 2}));
}

TEST(BuildGroup, Z3OrdersAndInverses) {
  const auto G = build_group(z_table(3));
  EXPECT_EQ(G.orders(), (std::vector<std::uint32_t>{1, 3, 3}));
  EXPECT_EQ(G.inverses(), (std::vector<Element>{0, 2, 1}));
}

TEST(BuildGroup, RejectsNonAssociativeTable) {
  // identity 0, but (1*1)*2 = 2 while 1*(1*2) = 0
  const std::vector<std::vector<Element>> t{{0, 1, 2}, {1, 0, 1}, {2, 2, 0}};
  EXPECT_THROW(build_group(t), NotAGroup);
  const std::vector<std::vector<Element>> loop{{0, 1, 2, 3, 4},
                                               {1, 0, 3, 4, 2},
                                               {2, 4, 0, 1, 3},
                                               {3, 2, 4, 0, 1},
                                               {4, 3, 1, 2, 0}};
  EXPECT_THROW(build_group(loop), NotAGroup);
}

TEST(BuildGroup, RejectsBadShape) {
  EXPECT_THROW(build_group({{0, 1}, {1}}), NotAGroup);
  EXPECT_THROW(build_group({{0, 2}, {1, 0}}), NotAGroup);
  EXPECT_THROW(build_group({}), NotAGroup);
}

TEST(BuildGroup, IdentityMovedToIndexZero) {
  // Z2 with the identity stored at index 1.
  const auto G = build_group({{1, 0}, {0, 1}}, "Z2", {"g", "e"});
  EXPECT_EQ(G.mul(0, 0), 0u);
  EXPECT_EQ(G.label(0), "e");
  EXPECT_EQ(G.elem_order(1), 2u);
}

TEST(Conjugacy, Q8Classes) {
  const auto G = catalog("q8");
  const auto P = conjugacy_classes(G);
  // 1, -1, i, -i, j, -j, k, -k
  const std::set<std::set<Element>> expected{{0}, {1}, {2, 3}, {4, 5}, {6, 7}};
  EXPECT_EQ(as_sets(P), expected);
}

TEST(Conjugacy, AbelianSingletons) {
  for (const char* e : {"cyclic 7", "z2z4 1 2", "z2z3 2 1"}) {
    const auto G = catalog_expression(e);
    EXPECT_EQ(conjugacy_classes(G).count(), G.order()) << e;
  }
}

TEST(Conjugacy, S3SizesMatchBruteForce) {
  const auto G = catalog("s3");
  const auto P = conjugacy_classes(G);
  EXPECT_EQ(as_sets(P), oracle::classes(G));
  std::vector<std::size_t> sizes;
  for (std::size_t c = 0; c < P.count(); ++c) sizes.push_back(P.size(c));
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 2, 3}));
}

TEST(Conjugacy, ClassesOrderedByLeastMember) {
  const auto P = conjugacy_classes(catalog("s4"));
  for (std::size_t c = 1; c < P.count(); ++c) EXPECT_LT(P.classes[c - 1].front(), P.classes[c].front());
}

TEST(Atom, Examples) {
  const auto Z12 = catalog("cyclic", {12});
  EXPECT_EQ(atom(Z12, 0).members, (std::vector<Element>{0}));
  EXPECT_EQ(atom(Z12, 1).members, (std::vector<Element>{1, 5, 7, 11}));
  const auto Z5 = catalog("cyclic", {5});
  EXPECT_EQ(atom(Z5, 2).members, (std::vector<Element>{1, 2, 3, 4}));
}

TEST(PowerMap, Examples) {
  const auto Z12 = catalog("cyclic", {12});
  const auto id = power_map(Z12, 1);
  for (Element g = 0; g < 12; ++g) EXPECT_EQ(id.image[g], g);
  EXPECT_EQ(power_map(Z12, 5).image[1], 5u);
  EXPECT_TRUE(power_map(Z12, 5).is_permutation);
  EXPECT_FALSE(power_map(Z12, 2).is_permutation);
  const auto Z10 = catalog("cyclic", {10});
  const auto inv = power_map(Z10, 9);
  for (Element g = 0; g < 10; ++g) EXPECT_EQ(inv.image[g], Z10.inv(g));
}

TEST(Subgroups, Generated) {
  const auto Z12 = catalog("cyclic", {12});
  EXPECT_EQ(generated_subgroup(Z12, {1}).group.order(), 12u);
  EXPECT_TRUE(generated_subgroup(Z12, {1}).group.is_abelian());
  const auto Q8 = catalog("q8");
  EXPECT_EQ(generated_subgroup(Q8, {0}).group.order(), 1u);
  EXPECT_EQ(generated_subgroup(Q8, {2, 4}).group.order(), 8u);
  // <x> with o(x) = 12 in Q8 x Z3 is cyclic of order 12
  const auto G = catalog_expression("q8 x cyclic 3");
  Element x = 0;
  while (G.elem_order(x) != 12) ++x;
  const auto H = generated_subgroup(G, {x});
  EXPECT_EQ(H.group.order(), 12u);
  EXPECT_EQ(H.group.exponent(), 12u);
}

TEST(Subgroups, CenterQuotientProduct) {
  const auto Q8 = catalog("q8");
  EXPECT_EQ(center(Q8), (std::vector<Element>{0, 1}));
  const auto Z4 = catalog("cyclic", {4});
  const auto Q = quotient(Z4, {0, 2});
  EXPECT_EQ(Q.group.order(), 2u);
  EXPECT_EQ(Q.group.exponent(), 2u);
  EXPECT_EQ(Q.representatives, (std::vector<Element>{0, 1}));
  const auto P = direct_product(Q8, catalog("cyclic", {3}));
  EXPECT_EQ(P.order(), 24u);
  EXPECT_EQ(P.exponent(), 12u);
}

TEST(Subgroups, QuotientRejectsNonNormal) {
  const auto S3 = catalog("s3");
  EXPECT_THROW(quotient(S3, {0, 1}), NotNormal);  // a transposition subgroup
  EXPECT_THROW(quotient(S3, {0, 3}), NotNormal);  // not closed
}

TEST(Nilpotent, Examples) {
  EXPECT_TRUE(is_nilpotent(catalog_expression("q8 x cyclic 3")));
  EXPECT_FALSE(is_nilpotent(catalog("s3")));
  EXPECT_TRUE(is_nilpotent(catalog_expression("z2z4 2 1")));
  EXPECT_TRUE(is_nilpotent(catalog("dihedral", {8})));
  EXPECT_FALSE(is_nilpotent(catalog("a4")));
}

TEST(Catalog, NamedGroups) {
  const auto D = catalog("dicyclic12");
  EXPECT_EQ(D.order(), 12u);
  std::set<std::uint32_t> ords(D.orders().begin(), D.orders().end());
  EXPECT_EQ(ords, (std::set<std::uint32_t>{1, 2, 3, 4, 6}));
  const auto D4 = catalog("dihedral", {4});
  EXPECT_EQ(D4.order(), 8u);
  EXPECT_FALSE(D4.is_abelian());
  EXPECT_EQ(catalog("cyclic", {1}).order(), 1u);
  EXPECT_EQ(catalog("s5").order(), 120u);
  EXPECT_EQ(catalog("a5").order(), 60u);
  EXPECT_EQ(catalog_expression("q8 x cyclic 3").name(), "Q8 x Z3");
}

TEST(Catalog, OrderProfiles) {
  for (auto [n, m] : {std::pair{1, 1}, {2, 1}, {0, 2}, {3, 0}}) {
    const auto G = catalog("z2z4", {n, m});
    for (auto o : G.orders()) EXPECT_TRUE(o == 1 || o == 2 || o == 4);
  }
}

TEST(Catalog, Errors) {
  EXPECT_THROW(catalog("nonsense"), UnknownName);
  EXPECT_THROW(catalog("cyclic", {0}), ParamOutOfRange);
  EXPECT_THROW(catalog("cyclic"), ParamOutOfRange);
  CatalogOptions small;
  small.element_cap = 100;
  EXPECT_THROW(catalog("symmetric", {5}, small), ParamOutOfRange);
}

TEST(Catalog, EveryGroupPassesValidationAndMatchesBruteForce) {
  for (const auto& e : oracle::small_catalog()) {
    const auto G = catalog_expression(e);
    // rebuilding from the raw table re-runs full validation
    EXPECT_NO_THROW(build_group(G.table_rows())) << e;
    EXPECT_EQ(G.associativity_check(), AssociativityCheck::kFull) << e;
    EXPECT_EQ(as_sets(conjugacy_classes(G)), oracle::classes(G)) << e;
    for (Element g = 0; g < G.order(); ++g) EXPECT_EQ(G.elem_order(g), oracle::order(G, g)) << e;
  }
}

TEST(GroupIO, RoundTripZ6) {
  const auto G = catalog("cyclic", {6});
  std::stringstream ss;
  save_group(G, ss);
  const auto H = load_group(ss);
  EXPECT_EQ(G, H);
  EXPECT_EQ(H.name(), "Z6");
}

TEST(GroupIO, PermutationGenerators) {
  std::istringstream in("# S3 from a 3-cycle and a transposition\ngroup S3 6\nperms 3\n1 2 0\n1 0 2\n");
  const auto G = load_group(in);
  EXPECT_EQ(G.order(), 6u);
  EXPECT_FALSE(G.is_abelian());
}

TEST(GroupIO, MalformedInputs) {
  std::istringstream short_row("group Z2 2\ntable\n0 1\n1\n");
  EXPECT_THROW(load_group(short_row), ParseError);
  std::istringstream bad_header("grp Z2 2\ntable\n0 1\n1 0\n");
  EXPECT_THROW(load_group(bad_header), ParseError);
  std::istringstream not_group("group X 2\ntable\n0 1\n1 1\n");
  EXPECT_THROW(load_group(not_group), NotAGroup);
}

TEST(GroupIO, ShippedGroupFilesMatchCatalog) {
  EXPECT_EQ(load_group_file(CCIG_DATA_DIR "/groups/s3.group"), catalog("s3"));
  EXPECT_EQ(load_group_file(CCIG_DATA_DIR "/groups/dic12.group"), catalog("dicyclic12"));
}
