#include <gtest/gtest.h>

#include <sstream>

#include "support.hpp"

using namespace ccig;

namespace {

ClassifyOptions fast() {
  ClassifyOptions o;
  o.fcci_spectral_cap = 24;
  return o;
}

const ClassificationReport& report(const std::string& expr) {
  static std::map<std::string, ClassificationReport> cache;
  auto it = cache.find(expr);
  if (it == cache.end()) it = cache.emplace(expr, classify(catalog_expression(expr), fast())).first;
  return it->second;
}

std::optional<std::string> evidence(const Route& r, const std::string& key) {
  for (const auto& [k, v] : r.evidence)
    if (k == key) return v;
  return std::nullopt;
}

std::vector<long long> parse_list(std::string s) {
  for (char& ch : s)
    if (ch == '[' || ch == ']' || ch == ',') ch = ' ';
  std::istringstream is(s);
  std::vector<long long> v;
  for (long long x; is >> x;) v.push_back(x);
  return v;
}

bool route_says(const Verdict& v, const std::string& name, bool value) {
  const Route* r = v.route(name);
  return r && r->verdict && *r->verdict == value;
}

}  // namespace

TEST(Rationality, S5IsRational) {
  const auto& r = report("s5");
  EXPECT_TRUE(r.rational.value);
  EXPECT_TRUE(r.semi_rational.value);
  EXPECT_TRUE(r.inverse_semi_rational.value);
  EXPECT_TRUE(r.rational.routes_agree());
  EXPECT_TRUE(route_says(r.rational, "character_table", true));
}

TEST(Rationality, Z5IsNone) {
  const auto& r = report("cyclic 5");
  EXPECT_FALSE(r.rational.value);
  EXPECT_FALSE(r.semi_rational.value);
  EXPECT_FALSE(r.inverse_semi_rational.value);
  EXPECT_FALSE(r.nci.value);
  EXPECT_FALSE(r.fcci.value);
  EXPECT_FALSE(r.cci.value);
  EXPECT_FALSE(r.ci.value);
}

TEST(Rationality, D8SemiButNotInverseSemi) {
  const auto& r = report("dihedral 8");
  EXPECT_TRUE(r.semi_rational.value);
  EXPECT_FALSE(r.inverse_semi_rational.value);
  EXPECT_FALSE(r.rational.value);
}

TEST(Rationality, AgreesWithTableScan) {
  for (const auto& e : oracle::small_catalog()) {
    const auto& r = report(e);
    EXPECT_TRUE(r.rational.routes_agree()) << e;
  }
}

TEST(Nci, Examples) {
  const auto& q = report("q8 x cyclic 3");
  EXPECT_TRUE(q.nci.value);
  for (const auto& route : q.nci.routes) EXPECT_TRUE(route.verdict && *route.verdict) << route.name;
  const auto& z = report("cyclic 12");
  EXPECT_FALSE(z.nci.value);
  const Route* r1 = z.nci.route("inverse_semi_rational");
  ASSERT_TRUE(r1);
  EXPECT_TRUE(evidence(*r1, "atom").has_value());
  for (const char* e : {"z2z4 0 2", "z2z4 2 1", "cyclic 4"}) EXPECT_TRUE(report(e).nci.value) << e;
}

TEST(Fcci, Examples) {
  for (const char* e : {"z2z3 2 1", "z2z3 0 2", "z2z3 1 1"}) {
    const auto& r = report(e);
    EXPECT_TRUE(r.fcci.value) << e;
    EXPECT_TRUE(r.fcci.routes_agree()) << e;
  }
  const auto& a4 = report("a4");
  EXPECT_TRUE(a4.fcci.value);
  EXPECT_TRUE(a4.fcci.routes_agree());
  const auto& z = report("cyclic 12");
  for (const auto& route : z.fcci.routes) EXPECT_TRUE(route.verdict && !*route.verdict) << route.name;
}

TEST(Cci, Golden) {
  for (const char* e : {"q8", "z2z4 1 1", "z2z3 2 1", "z2z4 0 2", "q8 x cyclic 2"}) {
    const auto& r = report(e);
    EXPECT_TRUE(r.cci.value) << e;
    EXPECT_TRUE(route_says(r.cci, "structural", true)) << e;
  }
  for (const char* e : {"s3", "dicyclic12"}) {
    const auto& r = report(e);
    EXPECT_FALSE(r.cci.value) << e;
    EXPECT_TRUE(route_says(r.cci, "witness_search", false)) << e;
  }
}

TEST(Cci, S3AcceptsAlphaAsWitness) {
  const auto& r = report("s3");
  const Route* w = r.cci.route("witness_search");
  ASSERT_TRUE(w);
  EXPECT_EQ(evidence(*w, "source"), std::optional<std::string>("fixture alpha"));
  EXPECT_EQ(evidence(*w, "residual"), std::optional<std::string>("(x^2 + 2x - 12)^2"));
}

TEST(Ci, Golden) {
  for (const char* e : {"s3", "cyclic 6", "q8", "z2z4 1 1", "cyclic 4"}) {
    const auto& r = report(e);
    EXPECT_TRUE(r.ci.value) << e;
    EXPECT_TRUE(route_says(r.ci, "brute_force", true)) << e;
    EXPECT_NE(r.ci.route("brute_force")->detail.find("exhaustive"), std::string::npos) << e;
  }
  const auto& d4 = report("dihedral 4");
  EXPECT_FALSE(d4.ci.value);
  EXPECT_TRUE(route_says(d4.ci, "brute_force", false));
}

TEST(Ci, StructuralAgreesWithBruteForceUpToTwelve) {
  for (const auto& e : oracle::small_catalog()) {
    const auto& r = report(e);
    if (r.order > 12) continue;
    EXPECT_TRUE(r.ci.routes_agree()) << e;
  }
}

TEST(Evidence, NegativeVerdictsReverify) {
  for (const auto& e : oracle::small_catalog()) {
    const auto& r = report(e);
    const auto G = catalog_expression(e);
    const auto P = conjugacy_classes(G);
    if (const Route* w = r.cci.route("witness_search"); w && w->verdict && !*w->verdict) {
      const auto f = parse_list(*evidence(*w, "function"));
      EXPECT_FALSE(spectrum_matrix(G, ConnectionFunction(G, P, f)).is_integral) << e;
    }
    if (const Route* b = r.ci.route("brute_force"); b && b->verdict && !*b->verdict) {
      const auto S = parse_list(*evidence(*b, "elements"));
      const auto cs = connection_set(G, P, std::vector<Element>(S.begin(), S.end()));
      EXPECT_FALSE(spectrum_matrix(G, indicator(G, P, cs.elements)).is_integral) << e;
    }
    if (const Route* c = r.fcci.route("criterion"); c && c->verdict && !*c->verdict) {
      const Element g = std::stoul(*evidence(*c, "element"));
      const long long h = std::stoll(*evidence(*c, "unit"));
      const Element gh = G.pow(g, h);
      EXPECT_NE(P.class_of[gh], P.class_of[g]) << e;
      EXPECT_NE(P.class_of[gh], P.inverse_class[P.class_of[g]]) << e;
    }
    if (const Route* s = r.nci.route("normal_set_spectra"); s && s->verdict && !*s->verdict) {
      const auto S = parse_list(*evidence(*s, "elements"));
      EXPECT_FALSE(spectrum_matrix(G, indicator(G, P, std::vector<Element>(S.begin(), S.end()))).is_integral) << e;
    }
  }
}

TEST(Gamma, Examples) {
  for (const auto& g : report("s4").gamma) EXPECT_TRUE(g.integral) << g.character;
  const auto& z5 = report("cyclic 5").gamma;
  ASSERT_EQ(z5.size(), 5u);
  EXPECT_TRUE(z5[0].integral);
  for (std::size_t i = 1; i < 5; ++i) EXPECT_FALSE(z5[i].integral);
  const auto& q = report("q8 x cyclic 3").gamma;
  EXPECT_EQ(q.size(), 15u);
  for (const auto& g : q) EXPECT_TRUE(g.integral) << g.character;
}

TEST(Gamma, IrrationalColourRejected) {
  const auto G = catalog("cyclic", {5});
  const auto P = conjugacy_classes(G);
  const auto T = character_table(G, P);
  EXPECT_THROW(chi_plus_conj_colour(G, P, T, 1), NonIntegralColourFunction);
}

TEST(Classify, ChainHoldsOnSmallCatalog) {
  for (const auto& e : oracle::small_catalog()) {
    const auto& r = report(e);
    if (r.cci.value) EXPECT_TRUE(r.ci.value) << e;
    if (r.ci.value) EXPECT_TRUE(r.fcci.value) << e;
    if (r.fcci.value) EXPECT_TRUE(r.nci.value) << e;
    if (r.nci.value) EXPECT_TRUE(r.semi_rational.value) << e;
  }
}

TEST(Classify, DeterministicForFixedSeed) {
  const auto G = catalog("dicyclic12");
  auto o = fast();
  o.seed = 42;
  const auto a = classification_document(classify(G, o)).dump();
  const auto b = classification_document(classify(G, o)).dump();
  EXPECT_EQ(a, b);
}

TEST(Audit, EmptyCatalog) {
  const auto a = hierarchy_audit({});
  EXPECT_TRUE(a.groups.empty());
  EXPECT_TRUE(a.checks.empty());
  EXPECT_TRUE(a.discrepancies.empty());
}

TEST(Audit, SmallCatalogChecks) {
  AuditOptions o;
  o.classify = fast();
  std::vector<FiniteGroup> gs;
  for (const char* e : {"s3", "dicyclic12", "q8", "a4", "cyclic 12", "dihedral 4", "z2z4 1 1", "cyclic 5"})
    gs.push_back(catalog_expression(e));
  const auto a = hierarchy_audit(gs, o);
  EXPECT_EQ(a.groups.size(), gs.size());
  for (const char* check : {"implication_chain", "center_closure", "quotient_closure", "product_closure",
                            "nilpotent_primes"})
    EXPECT_EQ(a.violations(check), 0u) << check;
  EXPECT_EQ(a.violations("subgroup_closure_probe"), 0u);
  EXPECT_TRUE(a.discrepancies.empty());
  // S3 x Q8 and similar products were built and checked
  EXPECT_GT(std::count_if(a.checks.begin(), a.checks.end(),
                          [](const AuditCheck& c) { return c.check == "product_closure"; }),
            0);
}

TEST(Audit, SuiteNames) {
  EXPECT_EQ(suite_by_name("paper"), suite_by_name("standard"));
  for (const auto& e : suite_by_name("small")) EXPECT_LE(catalog_expression(e).order(), 24u);
  EXPECT_THROW(suite_by_name("huge"), UnknownName);
}
